use serde::{Deserialize, Serialize};

use super::cyc::CycNum;
use super::elim::inverse;
use super::sparse::{ExactMatrix, SVec};
use super::FieldError;

/// Linear or conjugate-linear operator x ↦ M·x or x ↦ M·x̄ on coordinate space.
///
/// Composition: (A, f)·(B, g) = (A·B^{(f)}, f xor g), where B^{(f)} conjugates
/// the entries of B when f is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemilinearOp {
    pub matrix: ExactMatrix,
    pub conjugates_scalars: bool,
}

impl SemilinearOp {
    pub fn new(matrix: ExactMatrix, conjugates_scalars: bool) -> Self {
        assert_eq!(matrix.nrows(), matrix.ncols(), "operators are square");
        SemilinearOp { matrix, conjugates_scalars }
    }

    pub fn linear(matrix: ExactMatrix) -> Self {
        Self::new(matrix, false)
    }

    pub fn identity(n: usize) -> Self {
        Self::linear(ExactMatrix::identity(n))
    }

    pub fn scalar(n: usize, s: CycNum) -> Self {
        Self::linear(ExactMatrix::scalar(n, s))
    }

    /// Coordinatewise complex conjugation.
    pub fn conjugation(n: usize) -> Self {
        Self::new(ExactMatrix::identity(n), true)
    }

    /// Operator whose j-th column is `f(j)`.
    pub fn from_columns(n: usize, conjugates_scalars: bool, f: impl Fn(usize) -> SVec) -> Self {
        let cols: Vec<SVec> = (0..n).map(f).collect();
        Self::new(ExactMatrix::from_cols(n, &cols), conjugates_scalars)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_linear(&self) -> bool {
        !self.conjugates_scalars
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        if self.conjugates_scalars {
            self.matrix.mul_vec(&v.conj())
        } else {
            self.matrix.mul_vec(v)
        }
    }

    pub fn apply_dense(&self, v: &[CycNum]) -> Vec<CycNum> {
        self.apply(&SVec::from_dense(v)).to_dense(self.dim())
    }

    /// self ∘ other
    pub fn compose(&self, other: &Self) -> Self {
        let b = if self.conjugates_scalars { other.matrix.conj() } else { other.matrix.clone() };
        SemilinearOp {
            matrix: self.matrix.mul(&b),
            conjugates_scalars: self.conjugates_scalars ^ other.conjugates_scalars,
        }
    }

    pub fn compose_all(ops: &[&Self]) -> Self {
        let mut it = ops.iter();
        let first = (*it.next().expect("at least one operator")).clone();
        it.fold(first, |acc, op| acc.compose(op))
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        let inv = inverse(&self.matrix)?;
        Ok(if self.conjugates_scalars {
            SemilinearOp { matrix: inv.conj(), conjugates_scalars: true }
        } else {
            SemilinearOp { matrix: inv, conjugates_scalars: false }
        })
    }

    pub fn neg(&self) -> Self {
        SemilinearOp { matrix: self.matrix.neg(), conjugates_scalars: self.conjugates_scalars }
    }

    /// s·self (scalar applied after the operator).
    pub fn scale(&self, s: &CycNum) -> Self {
        SemilinearOp { matrix: self.matrix.scale(s), conjugates_scalars: self.conjugates_scalars }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        !self.conjugates_scalars && self.matrix.is_identity()
    }

    /// g·φ·g⁻¹ for a linear operator φ given as a matrix; `inv` must be g⁻¹.
    pub fn conjugate_linear(&self, phi: &ExactMatrix, inv: &Self) -> ExactMatrix {
        let phi = SemilinearOp::linear(phi.clone());
        self.compose(&phi).compose(inv).matrix
    }

    /// Column j, i.e. the image of the j-th basis vector.
    pub fn column(&self, j: usize) -> SVec {
        self.matrix.col(j)
    }
}
