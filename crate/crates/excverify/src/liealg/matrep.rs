use crate::cayley;
use crate::exactfield::{nullspace_rows, Accum, CycNum, ExactMatrix, SVec, SemilinearOp, SpanSolver};
use crate::jordan;

use super::algebra::{AlgebraId, LieError, StructureTable};

/// A Lie algebra of n×n matrices with a fixed basis.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub n: usize,
    pub basis: Vec<ExactMatrix>,
    solver: SpanSolver,
}

impl MatrixRep {
    pub fn new(n: usize, basis: Vec<ExactMatrix>) -> Result<Self, LieError> {
        let flat: Vec<SVec> = basis.iter().map(ExactMatrix::flatten).collect();
        let solver = SpanSolver::new(n * n, &flat)?;
        Ok(MatrixRep { n, basis, solver })
    }

    pub fn from_flat(n: usize, flat: &[SVec]) -> Result<Self, LieError> {
        Self::new(n, flat.iter().map(|v| ExactMatrix::unflatten(n, n, v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, m: &ExactMatrix) -> Option<SVec> {
        self.solver.express(&m.flatten())
    }

    pub fn matrix(&self, x: &SVec) -> ExactMatrix {
        let mut acc = Accum::new(self.n * self.n);
        for (k, c) in x.entries() {
            acc.add_scaled(c, &self.basis[*k].flatten());
        }
        ExactMatrix::unflatten(self.n, self.n, &acc.take())
    }

    pub fn table(&self) -> Result<StructureTable, LieError> {
        StructureTable::from_fn(self.dim(), |i, j| {
            let c = self.basis[i].commutator(&self.basis[j]);
            self.coords(&c).ok_or(LieError::NotClosed(i, j))
        })
    }

    /// φ ↦ g φ g⁻¹ on coordinates (conjugate-linear when g is).
    pub fn adjoint_action(&self, g: &SemilinearOp) -> Result<SemilinearOp, LieError> {
        let inv = g.inverse()?;
        let mut cols = Vec::with_capacity(self.dim());
        for (k, b) in self.basis.iter().enumerate() {
            let img = g.conjugate_linear(b, &inv);
            cols.push(self.coords(&img).ok_or(LieError::NotNormalizing(k))?);
        }
        Ok(SemilinearOp::new(ExactMatrix::from_cols(self.dim(), &cols), g.conjugates_scalars))
    }

    /// Coordinate map induced by a map on matrices.
    pub fn induced(&self, conjugates: bool, f: impl Fn(&ExactMatrix) -> ExactMatrix) -> Result<SemilinearOp, LieError> {
        let mut cols = Vec::with_capacity(self.dim());
        for (k, b) in self.basis.iter().enumerate() {
            cols.push(self.coords(&f(b)).ok_or(LieError::NotNormalizing(k))?);
        }
        Ok(SemilinearOp::new(ExactMatrix::from_cols(self.dim(), &cols), conjugates))
    }
}

fn check_dim(id: AlgebraId, found: usize) -> Result<(), LieError> {
    if found != id.dim() {
        return Err(LieError::DimensionMismatch { algebra: id, expected: id.dim(), found });
    }
    Ok(())
}

/// Derivations of the octonions: L(e_i e_j) = L(e_i) e_j + e_i L(e_j).
pub fn g2_rep() -> Result<MatrixRep, LieError> {
    let t = cayley::mul_table();
    let var = |r: usize, c: usize| r * 8 + c;
    let mut rows = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let mut comp: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); 8];
            let (s, k) = (t.sign[i][j] as i64, t.index[i][j]);
            for (a, row) in comp.iter_mut().enumerate() {
                row.push((var(a, k), CycNum::from_i64(s)));
            }
            for a in 0..8 {
                // L(e_i) e_j = Σ_a L[a][i] e_a e_j
                let (sa, ka) = (t.sign[a][j] as i64, t.index[a][j]);
                comp[ka].push((var(a, i), CycNum::from_i64(-sa)));
                // e_i L(e_j) = Σ_a L[a][j] e_i e_a
                let (sb, kb) = (t.sign[i][a] as i64, t.index[i][a]);
                comp[kb].push((var(a, j), CycNum::from_i64(-sb)));
            }
            rows.extend(comp.into_iter().map(SVec::from_pairs).filter(|r| !r.is_zero()));
        }
    }
    let ker = nullspace_rows(64, &rows)?;
    check_dim(AlgebraId::G2, ker.len())?;
    MatrixRep::from_flat(8, &ker)
}

/// Derivations of the Jordan product.
pub fn f4_rep() -> Result<MatrixRep, LieError> {
    let n = jordan::DIM;
    let t = jordan::tables();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut comp: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); n];
            for (k, m) in t.mul[i][j].entries() {
                for (a, row) in comp.iter_mut().enumerate() {
                    row.push((var(a, *k), m.clone()));
                }
            }
            for b in 0..n {
                for (a, m) in t.mul[b][j].entries() {
                    comp[*a].push((var(b, i), m.neg()));
                }
                for (a, m) in t.mul[i][b].entries() {
                    comp[*a].push((var(b, j), m.neg()));
                }
            }
            rows.extend(comp.into_iter().map(SVec::from_pairs).filter(|r| !r.is_zero()));
        }
    }
    let ker = nullspace_rows(n * n, &rows)?;
    check_dim(AlgebraId::F4, ker.len())?;
    MatrixRep::from_flat(n, &ker)
}

/// Complex-linear maps annihilating the trilinear form (X, Y × Z).
pub fn e6_rep() -> Result<MatrixRep, LieError> {
    let n = jordan::DIM;
    let t = jordan::tables();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let mut row = Vec::new();
                // (φe_i, e_j × e_k) = Σ_a φ[a][i] gram(a) (e_j × e_k)_a
                for (a, v) in t.cross[j][k].entries() {
                    row.push((var(*a, i), v.scale(jordan::gram(*a), 1)));
                }
                for (a, v) in t.cross[i][k].entries() {
                    row.push((var(*a, j), v.scale(jordan::gram(*a), 1)));
                }
                for (a, v) in t.cross[i][j].entries() {
                    row.push((var(*a, k), v.scale(jordan::gram(*a), 1)));
                }
                let r = SVec::from_pairs(row);
                if !r.is_zero() {
                    rows.push(r);
                }
            }
        }
    }
    let ker = nullspace_rows(n * n, &rows)?;
    check_dim(AlgebraId::E6, ker.len())?;
    MatrixRep::from_flat(n, &ker)
}
