//! Exact arithmetic in Q(ζ24) and exact sparse linear algebra over it.

mod cyc;
mod elim;
mod op;
mod sparse;

pub use cyc::{CycNum, DEGREE, GALOIS};
pub use elim::{express_in_span, inverse, nullspace, nullspace_rows, rank, rank_of_vectors, Echelon, SpanSolver};
pub use op::SemilinearOp;
pub use sparse::{Accum, ExactMatrix, MatrixWire, SVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not real")]
    NotReal,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("basis vector {0} depends on the preceding ones")]
    DependentBasis(usize),
    #[error("certification failed: {0}")]
    Certification(String),
}

/// Dispatch for the scalar operations exposed through the CLI and FFI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Conj,
    IsReal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Num(CycNum),
    Bool(bool),
}

pub fn field_arith(a: &CycNum, b: &CycNum, op: FieldOp) -> Result<FieldValue, FieldError> {
    Ok(match op {
        FieldOp::Add => FieldValue::Num(a.add(b)),
        FieldOp::Sub => FieldValue::Num(a.sub(b)),
        FieldOp::Mul => FieldValue::Num(a.mul(b)),
        FieldOp::Div => FieldValue::Num(a.div(b)?),
        FieldOp::Conj => FieldValue::Num(a.conj()),
        FieldOp::IsReal => FieldValue::Bool(a.is_real()),
    })
}
