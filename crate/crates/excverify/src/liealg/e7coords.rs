use std::sync::Arc;

use crate::exactfield::{Accum, CycNum, ExactMatrix, SVec, SemilinearOp};
use crate::freudenthal::{self, E7AlgElem, FOperator};
use crate::jordan::{self, JordanElem};

use super::algebra::{LieError, StructureTable};
use super::matrep::MatrixRep;

pub const E6_DIM: usize = 78;
pub const A0: usize = 78;
pub const B0: usize = 105;
pub const NU: usize = 132;
pub const DIM: usize = 133;

/// Coordinates on e7^C: an e6^C basis for φ, then A, B (27 each) and ν.
#[derive(Clone, Debug)]
pub struct E7Coords {
    pub e6: Arc<MatrixRep>,
    ops: Vec<ExactMatrix>,
}

impl E7Coords {
    pub fn new(e6: Arc<MatrixRep>) -> Self {
        let z = SVec::new();
        let zero_phi = ExactMatrix::zeros(jordan::DIM, jordan::DIM);
        let mut ops = Vec::with_capacity(DIM);
        for b in &e6.basis {
            ops.push(freudenthal::operator_matrix(b, &z, &z, &CycNum::zero()));
        }
        for k in 0..jordan::DIM {
            ops.push(freudenthal::operator_matrix(&zero_phi, &SVec::unit(k), &z, &CycNum::zero()));
        }
        for k in 0..jordan::DIM {
            ops.push(freudenthal::operator_matrix(&zero_phi, &z, &SVec::unit(k), &CycNum::zero()));
        }
        ops.push(freudenthal::operator_matrix(&zero_phi, &z, &z, &CycNum::one()));
        E7Coords { e6, ops }
    }

    /// The 56×56 operator of the k-th coordinate vector.
    pub fn op(&self, k: usize) -> &ExactMatrix {
        &self.ops[k]
    }

    pub fn param_to_coords(&self, e: &E7AlgElem) -> Result<SVec, LieError> {
        let phi = self
            .e6
            .coords(&e.phi.matrix)
            .ok_or_else(|| LieError::Other("φ-part lies outside e6".into()))?;
        let mut pairs = phi.into_entries();
        pairs.extend(e.a.to_svec().shifted(A0).into_entries());
        pairs.extend(e.b.to_svec().shifted(B0).into_entries());
        if !e.nu.is_zero() {
            pairs.push((NU, e.nu.clone()));
        }
        Ok(SVec::from_pairs(pairs))
    }

    pub fn coords_to_param(&self, x: &SVec) -> E7AlgElem {
        let phi = self.e6.matrix(&x.slice(0, E6_DIM));
        E7AlgElem::new(
            phi,
            JordanElem::from_svec(&x.slice(A0, B0)),
            JordanElem::from_svec(&x.slice(B0, NU)),
            x.get(NU),
        )
    }

    pub fn matrix_to_coords(&self, m: &ExactMatrix) -> Result<SVec, LieError> {
        self.param_to_coords(&E7AlgElem::from_matrix(m)?)
    }

    pub fn coords_to_matrix(&self, x: &SVec) -> ExactMatrix {
        let mut acc = Accum::new(freudenthal::DIM * freudenthal::DIM);
        for (k, c) in x.entries() {
            acc.add_scaled(c, &self.ops[*k].flatten());
        }
        ExactMatrix::unflatten(freudenthal::DIM, freudenthal::DIM, &acc.take())
    }

    /// Φ·P for coordinates of Φ.
    pub fn act(&self, x: &SVec, p: &SVec) -> SVec {
        let mut acc = Accum::new(freudenthal::DIM);
        for (k, c) in x.entries() {
            acc.add_scaled(c, &self.ops[*k].mul_vec(p));
        }
        acc.take()
    }

    pub fn table(&self) -> Result<StructureTable, LieError> {
        StructureTable::from_fn(DIM, |i, j| {
            let c = self.ops[i].commutator(&self.ops[j]);
            self.matrix_to_coords(&c).map_err(|_| LieError::NotClosed(i, j))
        })
    }

    /// Φ ↦ gΦg⁻¹ on coordinates.
    pub fn adjoint_action(&self, g: &FOperator) -> Result<SemilinearOp, LieError> {
        let inv = g.inverse()?;
        self.induced(g.conjugates_scalars, |m| g.conjugate_linear(m, &inv))
    }

    /// Conjugation defining the compact form: Φ ↦ −G⁻¹Φ†G.
    pub fn compact_conj(&self) -> Result<SemilinearOp, LieError> {
        self.induced(true, freudenthal::skew_adjoint)
    }

    /// Coordinate map induced by a map on operators, evaluated on the basis operators.
    pub fn induced(&self, conjugates: bool, f: impl Fn(&ExactMatrix) -> ExactMatrix) -> Result<SemilinearOp, LieError> {
        let mut cols = Vec::with_capacity(DIM);
        for (k, m) in self.ops.iter().enumerate() {
            cols.push(self.matrix_to_coords(&f(m)).map_err(|_| LieError::NotNormalizing(k))?);
        }
        Ok(SemilinearOp::new(ExactMatrix::from_cols(DIM, &cols), conjugates))
    }
}
