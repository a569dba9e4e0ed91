//! Exact bases of g2, f4, e6, e7, e8 and their compact real forms, automorphisms
//! acting in those bases, fixed subalgebras and their invariants.

mod algebra;
mod e7coords;
mod matrep;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use algebra::{
    combine, compact_basis, matrix_in_basis, negative_semidefinite_rank, subalgebra_invariants, AlgebraId,
    LieError, StructureTable, SubalgebraReport, KILLING_MAX_DIM,
};
pub use e7coords::E7Coords;
pub use matrep::{e6_rep, f4_rep, g2_rep, MatrixRep};

use crate::e8::{BracketRows, E8Space};
use crate::exactfield::{nullspace, ExactMatrix, SVec, SemilinearOp, SpanSolver};
use crate::jordan;
use crate::words::{self, WordError};

/// The ambient realization a coordinate basis refers to.
#[derive(Clone, Debug)]
pub enum Representation {
    /// g2 on 𝕆, f4 and e6 on J
    Matrix(Arc<MatrixRep>),
    E7(Arc<E7Coords>),
    E8(Arc<E8Space>),
}

/// A complex simple Lie algebra in coordinates, with the compact real form
/// cut out by a conjugate-linear involution.
#[derive(Clone, Debug)]
pub struct LieBasis {
    pub id: AlgebraId,
    pub rep: Representation,
    /// structure constants of g^C in coordinates
    pub table: StructureTable,
    /// conjugation c with g = {x : c(x) = x}
    pub conj: SemilinearOp,
    /// basis of the compact form, in coordinates
    pub vectors: Vec<SVec>,
    solver: SpanSolver,
}

impl LieBasis {
    pub fn new(id: AlgebraId, rep: Representation, table: StructureTable, conj: SemilinearOp) -> Result<Self, LieError> {
        let n = table.dim();
        if n != id.dim() {
            return Err(LieError::DimensionMismatch { algebra: id, expected: id.dim(), found: n });
        }
        let vectors = compact_basis(&conj, n)?;
        Self::with_vectors(id, rep, table, conj, vectors)
    }

    pub fn with_vectors(
        id: AlgebraId,
        rep: Representation,
        table: StructureTable,
        conj: SemilinearOp,
        vectors: Vec<SVec>,
    ) -> Result<Self, LieError> {
        let n = table.dim();
        if vectors.len() != n {
            return Err(LieError::DimensionMismatch { algebra: id, expected: n, found: vectors.len() });
        }
        let solver = SpanSolver::new(n, &vectors)?;
        Ok(LieBasis { id, rep, table, conj, vectors, solver })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn bracket(&self, u: &SVec, v: &SVec) -> SVec {
        self.table.bracket(u, v)
    }

    /// Compact-basis vectors fixed by c, c² = 1, and c[x, y] = [cx, cy] on coordinate pairs.
    pub fn check_real_form(&self) -> Result<(), LieError> {
        let n = self.dim();
        if !self.conj.compose(&self.conj).is_identity() {
            return Err(LieError::Other(format!("{}: compact conjugation is not an involution", self.id)));
        }
        for (k, v) in self.vectors.iter().enumerate() {
            if self.conj.apply(v) != *v {
                return Err(LieError::NotCompact(k));
            }
        }
        let images: Vec<SVec> = (0..n).map(|k| self.conj.column(k)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.conj.apply(self.table.get(i, j));
                if lhs != self.table.bracket(&images[i], &images[j]) {
                    return Err(LieError::Other(format!("{}: conjugation fails on pair ({i}, {j})", self.id)));
                }
            }
        }
        Ok(())
    }

    /// Matrix of an automorphism in the compact basis.
    pub fn act_in_basis(&self, map: &SemilinearOp) -> Result<InvolutionAction, LieError> {
        let m = matrix_in_basis(map, &self.vectors, &self.solver)?;
        let involutive = m.mul(&m).is_identity();
        Ok(InvolutionAction { matrix: m, involutive })
    }

    /// Fixed subalgebra of one or more involutions, as complex coordinates of real vectors.
    pub fn fixed_vectors(&self, actions: &[&InvolutionAction]) -> Result<Vec<SVec>, LieError> {
        let n = self.dim();
        let id = ExactMatrix::identity(n);
        let blocks: Vec<ExactMatrix> = actions.iter().map(|a| a.matrix.sub(&id)).collect();
        let refs: Vec<&ExactMatrix> = blocks.iter().collect();
        let ker = nullspace(&ExactMatrix::vstack(&refs))?;
        Ok(ker.iter().map(|x| combine(x, &self.vectors, n)).collect())
    }

    pub fn fixed_subalgebra(&self, actions: &[&InvolutionAction], invariants: bool) -> Result<SubalgebraReport, LieError> {
        let vecs = self.fixed_vectors(actions)?;
        if invariants {
            subalgebra_invariants(&self.table, &vecs)
        } else {
            Ok(SubalgebraReport { dim: vecs.len(), center_dim: 0, derived_dim: 0, killing_negdef: None, basis: vecs })
        }
    }

    /// Coordinates of a matrix in a matrix representation.
    pub fn matrix_rep(&self) -> Option<&MatrixRep> {
        match &self.rep {
            Representation::Matrix(m) => Some(m),
            _ => None,
        }
    }

    /// Coordinate operator of a map word such as "lambda gamma" or "-sigma iota".
    pub fn map_word(&self, word: &str) -> Result<SemilinearOp, LieError> {
        let werr = |e: WordError| match e {
            WordError::Unknown(..) => LieError::UnknownMap(word.into(), self.id),
            e => LieError::Other(e.to_string()),
        };
        let no_t = |_: &SemilinearOp| Err(WordError::Other("transpose is not an automorphism word".into()));
        match &self.rep {
            Representation::Matrix(rep) => {
                let id = self.id;
                let g = words::compose(word, |n, p| matrix_token(id, n, p), no_t).map_err(werr)?;
                rep.adjoint_action(&g)
            }
            Representation::E7(c) => {
                let g = words::compose(word, words::f_token, no_t).map_err(werr)?;
                c.adjoint_action(&g)
            }
            Representation::E8(sp) => words::compose(word, |n, p| words::e8_token(sp, n, p), no_t).map_err(werr),
        }
    }

    pub fn act_word(&self, word: &str) -> Result<InvolutionAction, LieError> {
        self.act_in_basis(&self.map_word(word)?)
    }
}

/// An automorphism written in the compact basis.
#[derive(Clone, Debug)]
pub struct InvolutionAction {
    pub matrix: ExactMatrix,
    pub involutive: bool,
}

impl InvolutionAction {
    pub fn fixed_dim(&self) -> Result<usize, LieError> {
        let n = self.matrix.nrows();
        Ok(nullspace(&self.matrix.sub(&ExactMatrix::identity(n)))?.len())
    }
}

pub fn pair_commutes_ad(a: &InvolutionAction, b: &InvolutionAction) -> bool {
    a.matrix.mul(&b.matrix) == b.matrix.mul(&a.matrix)
}

fn matrix_token(id: AlgebraId, name: &str, param: Option<i64>) -> Result<SemilinearOp, WordError> {
    match id {
        AlgebraId::G2 => words::oct_token(name, param),
        // λ(α) = τατ on E6, so λ acts through complex conjugation of J^C
        AlgebraId::E6 if name == "lambda" && param.is_none() => Ok(SemilinearOp::conjugation(jordan::DIM)),
        AlgebraId::F4 if name == "tau" => Err(WordError::Unknown(name.into(), "f4")),
        _ => words::jordan_token(name, param),
    }
}

/// Build g2, f4 or e6.
pub fn build_matrix_algebra(id: AlgebraId) -> Result<LieBasis, LieError> {
    let rep = Arc::new(match id {
        AlgebraId::G2 => g2_rep()?,
        AlgebraId::F4 => f4_rep()?,
        AlgebraId::E6 => e6_rep()?,
        _ => return Err(LieError::Other(format!("{id} is not a matrix algebra here"))),
    });
    build_from_matrix_rep(id, rep)
}

pub fn build_from_matrix_rep(id: AlgebraId, rep: Arc<MatrixRep>) -> Result<LieBasis, LieError> {
    let table = rep.table()?;
    let conj = matrix_compact_conj(id, &rep)?;
    LieBasis::new(id, Representation::Matrix(rep), table, conj)
}

/// g2 and f4 have rational bases spanning the compact form; on e6 the conjugation
/// is φ ↦ −ᵗ(τφτ), whose fixed points are skew-Hermitian for ⟨X, Y⟩ = (τX, Y).
fn matrix_compact_conj(id: AlgebraId, rep: &MatrixRep) -> Result<SemilinearOp, LieError> {
    match id {
        AlgebraId::G2 | AlgebraId::F4 => Ok(SemilinearOp::conjugation(rep.dim())),
        _ => rep.induced(true, |m| jordan::transpose_matrix(&m.conj()).neg()),
    }
}

pub fn build_e7(coords: Arc<E7Coords>) -> Result<LieBasis, LieError> {
    let table = coords.table()?;
    build_e7_with_table(coords, table)
}

pub fn build_e7_with_table(coords: Arc<E7Coords>, table: StructureTable) -> Result<LieBasis, LieError> {
    let conj = coords.compact_conj()?;
    LieBasis::new(AlgebraId::E7, Representation::E7(coords), table, conj)
}

pub fn build_e8(space: Arc<E8Space>, rows: BracketRows) -> Result<LieBasis, LieError> {
    let table = space.table(rows)?;
    build_e8_with_table(space, table)
}

pub fn build_e8_with_table(space: Arc<E8Space>, table: StructureTable) -> Result<LieBasis, LieError> {
    let conj = space.compact_conj()?;
    LieBasis::new(AlgebraId::E8, Representation::E8(space), table, conj)
}

/// Dimension of {φ ∈ e6 : φE1 = 0, σ′φσ′ = φ}, with the linear condition on the
/// compact form split into real and imaginary parts.
pub fn e1_stabilizer_sigma_prime_dim(e6: &LieBasis) -> Result<usize, LieError> {
    let rep = e6.matrix_rep().ok_or_else(|| LieError::Other("e6 basis required".into()))?;
    let n = e6.dim();
    let sp = e6.act_word("sigma_prime")?;
    // column 0 of φ is φE1; entry (a, 0) as a function of the compact coordinates
    let cols: Vec<SVec> = e6.vectors.iter().map(|v| rep.matrix(v).col(0)).collect();
    let mut rows: Vec<SVec> = Vec::new();
    for a in 0..jordan::DIM {
        let (mut re, mut im) = (Vec::new(), Vec::new());
        for (j, c) in cols.iter().enumerate() {
            let x = c.get(a);
            if !x.is_zero() {
                let (r, i) = x.re_im();
                re.push((j, r));
                im.push((j, i));
            }
        }
        rows.push(SVec::from_pairs(re));
        rows.push(SVec::from_pairs(im));
    }
    let id = ExactMatrix::identity(n);
    let stacked = ExactMatrix::vstack(&[&ExactMatrix::from_rows(n, rows), &sp.matrix.sub(&id)]);
    Ok(nullspace(&stacked)?.len())
}

/// Serialized form of a basis: everything except the ambient representation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisData {
    pub id: AlgebraId,
    pub table: StructureTable,
    pub conj: SemilinearOp,
    pub vectors: Vec<SVec>,
    /// flattened matrices for g2, f4, e6
    pub matrices: Vec<SVec>,
}

impl LieBasis {
    pub fn to_data(&self) -> BasisData {
        let matrices = match &self.rep {
            Representation::Matrix(m) => m.basis.iter().map(ExactMatrix::flatten).collect(),
            _ => Vec::new(),
        };
        BasisData { id: self.id, table: self.table.clone(), conj: self.conj.clone(), vectors: self.vectors.clone(), matrices }
    }
}
