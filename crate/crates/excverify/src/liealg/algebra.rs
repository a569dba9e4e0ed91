use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::exactfield::{Accum, CycNum, Echelon, ExactMatrix, FieldError, SVec, SemilinearOp, SpanSolver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraId {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [AlgebraId::G2, AlgebraId::F4, AlgebraId::E6, AlgebraId::E7, AlgebraId::E8];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::G2 => "g2",
            AlgebraId::F4 => "f4",
            AlgebraId::E6 => "e6",
            AlgebraId::E7 => "e7",
            AlgebraId::E8 => "e8",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        AlgebraId::ALL.into_iter().find(|a| a.name() == s.to_ascii_lowercase())
    }

    pub fn dim(self) -> usize {
        match self {
            AlgebraId::G2 => 14,
            AlgebraId::F4 => 52,
            AlgebraId::E6 => 78,
            AlgebraId::E7 => 133,
            AlgebraId::E8 => 248,
        }
    }
}

impl std::fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LieError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{algebra}: expected dimension {expected}, found {found}")]
    DimensionMismatch { algebra: AlgebraId, expected: usize, found: usize },
    #[error("bracket of basis vectors {0} and {1} leaves the algebra")]
    NotClosed(usize, usize),
    #[error("map does not normalize algebra (image of basis vector {0})")]
    NotNormalizing(usize),
    #[error("matrix in basis has a non-real entry at ({0}, {1})")]
    NotReal(usize, usize),
    #[error("map is not involutive on the algebra")]
    NotInvolutive,
    #[error("vector {0} is not fixed by the compact conjugation")]
    NotCompact(usize),
    #[error("unknown map {0:?} for {1}")]
    UnknownMap(String, AlgebraId),
    #[error("{0}")]
    Other(String),
}

/// Structure constants [b_i, b_j] in a coordinate basis, stored densely by pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTable {
    dim: usize,
    entries: Vec<SVec>,
}

impl StructureTable {
    /// Fill from f(i, j) for i < j; the rest follows from antisymmetry.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Result<SVec, LieError>) -> Result<Self, LieError> {
        let mut entries = vec![SVec::new(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j)?;
                entries[j * dim + i] = v.neg();
                entries[i * dim + j] = v;
            }
        }
        Ok(StructureTable { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &SVec {
        &self.entries[i * self.dim + j]
    }

    pub fn bracket(&self, u: &SVec, v: &SVec) -> SVec {
        let mut acc = Accum::new(self.dim);
        for (i, a) in u.entries() {
            for (j, b) in v.entries() {
                let t = self.get(*i, *j);
                if !t.is_zero() {
                    acc.add_scaled(&a.mul(b), t);
                }
            }
        }
        acc.take()
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(SVec::nnz).sum()
    }

    /// First basis triple violating the Jacobi identity, over all i < j < k.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobi_sum(i, j, k).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// [[b_i, b_j], b_k] + [[b_j, b_k], b_i] + [[b_k, b_i], b_j]
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> SVec {
        let (ei, ej, ek) = (SVec::unit(i), SVec::unit(j), SVec::unit(k));
        self.bracket(self.get(i, j), &ek)
            .add(&self.bracket(self.get(j, k), &ei))
            .add(&self.bracket(self.get(k, i), &ej))
    }
}

/// Compact real form selected from a conjugate-linear involution c: the
/// vectors u + c(u) and i(u − c(u)) over coordinate units u, kept while independent.
pub fn compact_basis(conj: &SemilinearOp, dim: usize) -> Result<Vec<SVec>, LieError> {
    let i = CycNum::i();
    let mut ech = Echelon::new(dim);
    let mut out = Vec::with_capacity(dim);
    for k in 0..dim {
        if out.len() == dim {
            break;
        }
        let u = SVec::unit(k);
        let cu = conj.apply(&u);
        for cand in [u.add(&cu), u.sub(&cu).scale(&i)] {
            if !cand.is_zero() && ech.insert(&cand) {
                out.push(cand);
            }
        }
    }
    out.truncate(dim);
    for (k, v) in out.iter().enumerate() {
        if conj.apply(v) != *v {
            return Err(LieError::NotCompact(k));
        }
    }
    Ok(out)
}

/// Matrix of a coordinate map in a basis spanning an invariant subspace.
/// Entries must be real.
pub fn matrix_in_basis(map: &SemilinearOp, basis: &[SVec], solver: &SpanSolver) -> Result<ExactMatrix, LieError> {
    let n = basis.len();
    let mut cols = Vec::with_capacity(n);
    for (j, v) in basis.iter().enumerate() {
        let img = map.apply(v);
        let c = solver.express(&img).ok_or(LieError::NotNormalizing(j))?;
        if let Some((r, _)) = c.entries().iter().find(|(_, x)| !x.is_real()) {
            return Err(LieError::NotReal(*r, j));
        }
        cols.push(c);
    }
    Ok(ExactMatrix::from_cols(n, &cols))
}

/// Combination Σ x_j v_j of basis vectors.
pub fn combine(x: &SVec, basis: &[SVec], dim: usize) -> SVec {
    let mut acc = Accum::new(dim);
    for (j, c) in x.entries() {
        acc.add_scaled(c, &basis[*j]);
    }
    acc.take()
}

/// Structural data of a subalgebra given by a real basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraReport {
    pub dim: usize,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub killing_negdef: Option<bool>,
    #[serde(skip)]
    pub basis: Vec<SVec>,
}

/// Largest subalgebra dimension for which the Killing form is computed.
pub const KILLING_MAX_DIM: usize = 80;

/// Center, derived algebra and Killing-form sign of span(basis) inside the algebra
/// with structure table `table`. Fails if the span is not closed.
pub fn subalgebra_invariants(table: &StructureTable, basis: &[SVec]) -> Result<SubalgebraReport, LieError> {
    let d = basis.len();
    let ambient = table.dim();
    if d == 0 {
        return Ok(SubalgebraReport { dim: 0, center_dim: 0, derived_dim: 0, killing_negdef: Some(true), basis: vec![] });
    }
    let solver = SpanSolver::new(ambient, basis)?;
    // c[i][j] = coordinates of [k_i, k_j] in the subalgebra basis
    let mut c = vec![vec![SVec::new(); d]; d];
    for i in 0..d {
        for j in i + 1..d {
            let br = table.bracket(&basis[i], &basis[j]);
            let x = solver.express(&br).ok_or(LieError::NotClosed(i, j))?;
            c[j][i] = x.neg();
            c[i][j] = x;
        }
    }
    // center: x with Σ_i x_i c[i][j] = 0 for every j
    let mut center = Echelon::new(d);
    for j in 0..d {
        let mut rows: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); d];
        for (i, ci) in c.iter().enumerate() {
            for (m, v) in ci[j].entries() {
                rows[*m].push((i, v.clone()));
            }
        }
        for r in rows {
            if !r.is_empty() {
                center.insert(&SVec::from_pairs(r));
            }
        }
    }
    let center_dim = d - center.rank();
    let mut derived = Echelon::new(d);
    for i in 0..d {
        for j in i + 1..d {
            if !c[i][j].is_zero() {
                derived.insert(&c[i][j]);
            }
        }
    }
    let derived_dim = derived.rank();
    let killing_negdef = if d <= KILLING_MAX_DIM {
        let k = killing_matrix(&c);
        let (negsemi, rank) = negative_semidefinite_rank(k)?;
        Some(negsemi && d - rank == center_dim)
    } else {
        None
    };
    Ok(SubalgebraReport { dim: d, center_dim, derived_dim, killing_negdef, basis: basis.to_vec() })
}

/// B(k_i, k_j) = tr(ad k_i ∘ ad k_j) from structure constants c[i][j].
fn killing_matrix(c: &[Vec<SVec>]) -> Vec<Vec<CycNum>> {
    let d = c.len();
    // ad_i[m][n] = coefficient of k_m in [k_i, k_n]; tr(ad_i ad_j) = Σ_{n,m} ad_i[m][n] ad_j[n][m]
    let mut out = vec![vec![CycNum::zero(); d]; d];
    for i in 0..d {
        for j in i..d {
            let mut acc = CycNum::zero();
            for n in 0..d {
                for (m, a) in c[i][n].entries() {
                    if let Some(b) = c[j][*m].get_ref(n) {
                        acc = acc.add(&a.mul(b));
                    }
                }
            }
            out[j][i] = acc.clone();
            out[i][j] = acc;
        }
    }
    out
}

/// Whether a real symmetric matrix is negative semidefinite, together with its rank.
pub fn negative_semidefinite_rank(mut s: Vec<Vec<CycNum>>) -> Result<(bool, usize), LieError> {
    let n = s.len();
    let mut alive: Vec<bool> = vec![true; n];
    let mut rank = 0;
    loop {
        let pivot = (0..n).filter(|&p| alive[p]).find(|&p| !s[p][p].is_zero());
        let Some(p) = pivot else {
            // all remaining diagonal entries vanish: semidefinite only if the block is zero
            let zero = (0..n).filter(|&a| alive[a]).all(|a| (0..n).filter(|&b| alive[b]).all(|b| s[a][b].is_zero()));
            return Ok((zero, rank));
        };
        if s[p][p].sign()? == Ordering::Greater {
            return Ok((false, rank));
        }
        rank += 1;
        alive[p] = false;
        let inv = s[p][p].inv()?;
        let rowp = s[p].clone();
        for a in 0..n {
            if !alive[a] || rowp[a].is_zero() {
                continue;
            }
            let f = rowp[a].mul(&inv);
            for b in 0..n {
                if alive[b] && !rowp[b].is_zero() {
                    s[a][b] = s[a][b].sub(&f.mul(&rowp[b]));
                }
            }
        }
    }
}
