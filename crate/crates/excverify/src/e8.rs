//! e8^C = e7^C ⊕ P^C ⊕ P^C ⊕ C ⊕ C ⊕ C with its bracket and named automorphisms.
//!
//! Coordinates: [0, 133) e7^C (see `liealg::E7Coords`), [133, 189) P, [189, 245) Q,
//! then r, s, t.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::exactfield::{Accum, CycNum, ExactMatrix, FieldError, SVec, SemilinearOp};
use crate::freudenthal::{self, E7AlgElem, FMapName, FOperator, FVector};
use crate::jordan;
use crate::liealg::{E7Coords, LieError, StructureTable};

pub type E8Operator = SemilinearOp;

pub const PHI_DIM: usize = 133;
pub const P0: usize = 133;
pub const Q0: usize = 189;
pub const R: usize = 245;
pub const S: usize = 246;
pub const T: usize = 247;
pub const DIM: usize = 248;

const PDIM: usize = freudenthal::DIM;

/// Which output slot receives which of the two 56-dimensional rows of the bracket.
///
/// `Standard` puts the row built from P-inputs (Φ1P2 − Φ2P1 + r1P2 − …) into the
/// P-slot. `Literal` follows the printed labels, which name that row Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketRows {
    Standard,
    Literal,
}

impl BracketRows {
    pub fn name(self) -> &'static str {
        match self {
            BracketRows::Standard => "standard",
            BracketRows::Literal => "literal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E8Elem {
    pub phi: E7AlgElem,
    pub p: FVector,
    pub q: FVector,
    pub r: CycNum,
    pub s: CycNum,
    pub t: CycNum,
}

fn fneg(p: &FVector) -> FVector {
    p.scale(&CycNum::from_i64(-1))
}

fn fsub(p: &FVector, q: &FVector) -> FVector {
    p.add(&fneg(q))
}

impl E8Elem {
    pub fn zero() -> Self {
        E8Elem {
            phi: E7AlgElem::zero(),
            p: FVector::zero(),
            q: FVector::zero(),
            r: CycNum::zero(),
            s: CycNum::zero(),
            t: CycNum::zero(),
        }
    }

    pub fn new(phi: E7AlgElem, p: FVector, q: FVector, r: CycNum, s: CycNum, t: CycNum) -> Self {
        E8Elem { phi, p, q, r, s, t }
    }

    pub fn add(&self, o: &Self) -> Self {
        E8Elem {
            phi: self.phi.add(&o.phi),
            p: self.p.add(&o.p),
            q: self.q.add(&o.q),
            r: self.r.add(&o.r),
            s: self.s.add(&o.s),
            t: self.t.add(&o.t),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        E8Elem {
            phi: self.phi.scale(c),
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: self.r.mul(c),
            s: self.s.mul(c),
            t: self.t.mul(c),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycNum::from_i64(-1))
    }

    pub fn is_zero(&self) -> bool {
        *self == E8Elem::zero() || (self.phi.to_matrix().is_zero() && self.p.to_svec().is_zero() && self.q.to_svec().is_zero() && self.r.is_zero() && self.s.is_zero() && self.t.is_zero())
    }

    /// Complex conjugation of every component.
    pub fn tau(&self) -> Self {
        E8Elem {
            phi: E7AlgElem::new(self.phi.phi.matrix.conj(), self.phi.a.tau(), self.phi.b.tau(), self.phi.nu.conj()),
            p: self.p.tau(),
            q: self.q.tau(),
            r: self.r.conj(),
            s: self.s.conj(),
            t: self.t.conj(),
        }
    }
}

/// {P, Q} = (X, W) − (Y, Z) + ξω − ηζ.
pub fn sympl(p: &FVector, q: &FVector) -> CycNum {
    sympl_vec(&p.to_svec(), &q.to_svec())
}

pub fn sympl_vec(p: &SVec, q: &SVec) -> CycNum {
    let (x, y, xi, eta) = freudenthal::split(p);
    let (z, w, zeta, omega) = freudenthal::split(q);
    jordan::inner_vec(&x, &w)
        .sub(&jordan::inner_vec(&y, &z))
        .add(&xi.mul(&omega))
        .sub(&eta.mul(&zeta))
}

/// The bracket with the standard row assignment.
pub fn bracket(a: &E8Elem, b: &E8Elem) -> Result<E8Elem, FieldError> {
    bracket_with(a, b, BracketRows::Standard)
}

/// Operator-route bracket: [Φ1, Φ2] is the commutator on P^C re-expressed as Φ(φ, A, B, ν).
pub fn bracket_with(a: &E8Elem, b: &E8Elem, rows: BracketRows) -> Result<E8Elem, FieldError> {
    let comm = a.phi.to_matrix().commutator(&b.phi.to_matrix());
    let phi = E7AlgElem::from_matrix(&comm)?
        .add(&freudenthal::cross_pq(&a.p, &b.q))
        .add(&freudenthal::cross_pq(&b.p, &a.q).scale(&CycNum::from_i64(-1)));
    let act = freudenthal::phi_apply;
    let row_p = fsub(&act(&a.phi, &b.p), &act(&b.phi, &a.p))
        .add(&fsub(&b.p.scale(&a.r), &a.p.scale(&b.r)))
        .add(&fsub(&b.q.scale(&a.s), &a.q.scale(&b.s)));
    let row_q = fsub(&act(&a.phi, &b.q), &act(&b.phi, &a.q))
        .add(&fsub(&a.q.scale(&b.r), &b.q.scale(&a.r)))
        .add(&fsub(&b.p.scale(&a.t), &a.p.scale(&b.t)));
    let (p, q) = match rows {
        BracketRows::Standard => (row_p, row_q),
        BracketRows::Literal => (row_q, row_p),
    };
    let eighth = CycNum::from_ratio(1, 8);
    let quarter = CycNum::from_ratio(1, 4);
    let two = CycNum::from_i64(2);
    let r = sympl(&b.p, &a.q)
        .sub(&sympl(&a.p, &b.q))
        .mul(&eighth)
        .add(&a.s.mul(&b.t))
        .sub(&b.s.mul(&a.t));
    let s = sympl(&a.p, &b.p).mul(&quarter).add(&two.mul(&a.r.mul(&b.s).sub(&b.r.mul(&a.s))));
    let t = sympl(&a.q, &b.q).mul(&quarter).neg().sub(&two.mul(&a.r.mul(&b.t).sub(&b.r.mul(&a.t))));
    Ok(E8Elem { phi, p, q, r, s, t })
}

/// [[R1,R2],R3] + [[R2,R3],R1] + [[R3,R1],R2] = 0, on the operator route.
pub fn jacobi_check(a: &E8Elem, b: &E8Elem, c: &E8Elem) -> Result<bool, FieldError> {
    let x = bracket(&bracket(a, b)?, c)?;
    let y = bracket(&bracket(b, c)?, a)?;
    let z = bracket(&bracket(c, a)?, b)?;
    let sum = x.add(&y).add(&z);
    Ok(sum.is_zero())
}

/// Named automorphisms of e8^C, defined on components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum E8MapName {
    Tau,
    LambdaOmega,
    Upsilon,
    IotaOmega,
    UpsilonIotaOmega,
    DeltaUpsilon,
    /// (Φ, P, Q, r, s, t) ↦ (gΦg⁻¹, gP, gQ, r, s, t) for g ∈ E7.
    Lift(FMapName),
}

impl E8MapName {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "tau" => E8MapName::Tau,
            "lambda_omega" => E8MapName::LambdaOmega,
            "upsilon" => E8MapName::Upsilon,
            "iota_omega" => E8MapName::IotaOmega,
            "upsilon_iota_omega" => E8MapName::UpsilonIotaOmega,
            "delta_upsilon" => E8MapName::DeltaUpsilon,
            other => E8MapName::Lift(FMapName::parse(other)?),
        })
    }
}

/// Apply a named map to an element, following its displayed definition.
pub fn apply_named(name: &E8MapName, e: &E8Elem) -> Result<E8Elem, FieldError> {
    let i = CycNum::i();
    let conj = |g: &FOperator, x: &E7AlgElem| -> Result<E7AlgElem, FieldError> {
        freudenthal::conjugate_e7(g, &g.inverse()?, x)
    };
    let ap = freudenthal::apply;
    Ok(match name {
        E8MapName::Tau => e.tau(),
        E8MapName::LambdaOmega => {
            let l = freudenthal::named_f_map(&FMapName::Lambda)?;
            E8Elem::new(conj(&l, &e.phi)?, ap(&l, &e.q), fneg(&ap(&l, &e.p)), e.r.neg(), e.t.neg(), e.s.neg())
        }
        E8MapName::Upsilon => E8Elem::new(e.phi.clone(), fneg(&e.p), fneg(&e.q), e.r.clone(), e.s.clone(), e.t.clone()),
        E8MapName::DeltaUpsilon => {
            E8Elem::new(e.phi.clone(), e.p.scale(&i), e.q.scale(&i.neg()), e.r.clone(), e.s.neg(), e.t.neg())
        }
        E8MapName::IotaOmega => {
            let g = freudenthal::named_f_map(&FMapName::Iota)?;
            E8Elem::new(conj(&g, &e.phi)?, ap(&g, &e.q), fneg(&ap(&g, &e.p)), e.r.neg(), e.t.neg(), e.s.neg())
        }
        E8MapName::UpsilonIotaOmega => {
            let g = freudenthal::named_f_map(&FMapName::Iota)?;
            E8Elem::new(conj(&g, &e.phi)?, fneg(&ap(&g, &e.q)), ap(&g, &e.p), e.r.neg(), e.t.neg(), e.s.neg())
        }
        E8MapName::Lift(f) => {
            let g = freudenthal::named_f_map(f)?;
            E8Elem::new(conj(&g, &e.phi)?, ap(&g, &e.p), ap(&g, &e.q), e.r.clone(), e.s.clone(), e.t.clone())
        }
    })
}

/// e8^C in coordinates, with block tables for the table-route bracket.
#[derive(Clone, Debug)]
pub struct E8Space {
    pub e7: Arc<E7Coords>,
    e7_table: StructureTable,
    /// coordinates of P_i × Q_j in e7^C, indexed i·56 + j
    cross: Vec<SVec>,
}

impl E8Space {
    pub fn new(e7: Arc<E7Coords>, e7_table: StructureTable) -> Result<Self, LieError> {
        let mut cross = Vec::with_capacity(PDIM * PDIM);
        for i in 0..PDIM {
            for j in 0..PDIM {
                let (phi, a, b, nu) = freudenthal::cross_pq_vec(&SVec::unit(i), &SVec::unit(j));
                let e = E7AlgElem::new(phi, jordan::JordanElem::from_svec(&a), jordan::JordanElem::from_svec(&b), nu);
                cross.push(e7.param_to_coords(&e)?);
            }
        }
        Ok(E8Space { e7, e7_table, cross })
    }

    pub fn e7_table(&self) -> &StructureTable {
        &self.e7_table
    }

    pub fn to_coords(&self, e: &E8Elem) -> Result<SVec, LieError> {
        let mut pairs = self.e7.param_to_coords(&e.phi)?.into_entries();
        pairs.extend(e.p.to_svec().shifted(P0).into_entries());
        pairs.extend(e.q.to_svec().shifted(Q0).into_entries());
        for (k, v) in [(R, &e.r), (S, &e.s), (T, &e.t)] {
            if !v.is_zero() {
                pairs.push((k, v.clone()));
            }
        }
        Ok(SVec::from_pairs(pairs))
    }

    pub fn from_coords(&self, x: &SVec) -> E8Elem {
        E8Elem {
            phi: self.e7.coords_to_param(&x.slice(0, PHI_DIM)),
            p: FVector::from_svec(&x.slice(P0, Q0)),
            q: FVector::from_svec(&x.slice(Q0, R)),
            r: x.get(R),
            s: x.get(S),
            t: x.get(T),
        }
    }

    fn cross_coords(&self, p: &SVec, q: &SVec) -> SVec {
        let mut acc = Accum::new(PHI_DIM);
        for (i, a) in p.entries() {
            for (j, b) in q.entries() {
                acc.add_scaled(&a.mul(b), &self.cross[i * PDIM + j]);
            }
        }
        acc.take()
    }

    /// Table-route bracket on coordinates.
    pub fn bracket_coords(&self, u: &SVec, v: &SVec, rows: BracketRows) -> SVec {
        let (x1, p1, q1) = (u.slice(0, PHI_DIM), u.slice(P0, Q0), u.slice(Q0, R));
        let (x2, p2, q2) = (v.slice(0, PHI_DIM), v.slice(P0, Q0), v.slice(Q0, R));
        let (r1, s1, t1) = (u.get(R), u.get(S), u.get(T));
        let (r2, s2, t2) = (v.get(R), v.get(S), v.get(T));
        let e7 = &self.e7;
        let phi = self
            .e7_table
            .bracket(&x1, &x2)
            .add(&self.cross_coords(&p1, &q2))
            .sub(&self.cross_coords(&p2, &q1));
        let row_p = e7
            .act(&x1, &p2)
            .sub(&e7.act(&x2, &p1))
            .add(&p2.scale(&r1))
            .sub(&p1.scale(&r2))
            .add(&q2.scale(&s1))
            .sub(&q1.scale(&s2));
        let row_q = e7
            .act(&x1, &q2)
            .sub(&e7.act(&x2, &q1))
            .sub(&q2.scale(&r1))
            .add(&q1.scale(&r2))
            .add(&p2.scale(&t1))
            .sub(&p1.scale(&t2));
        let (p, q) = match rows {
            BracketRows::Standard => (row_p, row_q),
            BracketRows::Literal => (row_q, row_p),
        };
        let r = sympl_vec(&p2, &q1)
            .sub(&sympl_vec(&p1, &q2))
            .scale(1, 8)
            .add(&s1.mul(&t2))
            .sub(&s2.mul(&t1));
        let s = sympl_vec(&p1, &p2).scale(1, 4).add(&r1.mul(&s2).sub(&r2.mul(&s1)).scale(2, 1));
        let t = sympl_vec(&q1, &q2).scale(-1, 4).sub(&r1.mul(&t2).sub(&r2.mul(&t1)).scale(2, 1));
        let mut pairs = phi.into_entries();
        pairs.extend(p.shifted(P0).into_entries());
        pairs.extend(q.shifted(Q0).into_entries());
        for (k, v) in [(R, r), (S, s), (T, t)] {
            if !v.is_zero() {
                pairs.push((k, v));
            }
        }
        SVec::from_pairs(pairs)
    }

    pub fn table(&self, rows: BracketRows) -> Result<StructureTable, LieError> {
        StructureTable::from_fn(DIM, |i, j| Ok(self.bracket_coords(&SVec::unit(i), &SVec::unit(j), rows)))
    }

    /// Coordinate operator of an element-level map, evaluated on the basis.
    pub fn op_from_fn(
        &self,
        conjugates: bool,
        f: impl Fn(&E8Elem) -> Result<E8Elem, FieldError>,
    ) -> Result<E8Operator, LieError> {
        let mut cols = Vec::with_capacity(DIM);
        for k in 0..DIM {
            let img = f(&self.from_coords(&SVec::unit(k)))?;
            cols.push(self.to_coords(&img)?);
        }
        Ok(SemilinearOp::new(ExactMatrix::from_cols(DIM, &cols), conjugates))
    }

    pub fn named_e8_map(&self, name: &E8MapName) -> Result<E8Operator, LieError> {
        self.op_from_fn(*name == E8MapName::Tau, |e| apply_named(name, e))
    }

    /// Lift of an E7 group element acting on P^C.
    pub fn lift(&self, g: &FOperator) -> Result<E8Operator, LieError> {
        let inv = g.inverse()?;
        self.op_from_fn(g.conjugates_scalars, |e| {
            Ok(E8Elem::new(
                freudenthal::conjugate_e7(g, &inv, &e.phi)?,
                freudenthal::apply(g, &e.p),
                freudenthal::apply(g, &e.q),
                e.r.clone(),
                e.s.clone(),
                e.t.clone(),
            ))
        })
    }

    /// The conjugation τλ_ω whose fixed points form the compact real form.
    pub fn compact_conj(&self) -> Result<E8Operator, LieError> {
        let tau = self.named_e8_map(&E8MapName::Tau)?;
        let lw = self.named_e8_map(&E8MapName::LambdaOmega)?;
        Ok(tau.compose(&lw))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismMode {
    /// all pairs from the generating set plus n random pairs
    Structured(usize, u64),
    /// n random pairs of coordinate basis vectors and sparse combinations
    Sampled(usize, u64),
}

/// First pair (R1, R2) with L[R1,R2] ≠ [LR1, LR2], or None.
pub fn automorphism_violation(
    l: &E8Operator,
    bracket: impl Fn(&SVec, &SVec) -> SVec,
    mode: AutomorphismMode,
) -> Option<(SVec, SVec)> {
    let (n, seed, structured) = match mode {
        AutomorphismMode::Structured(n, s) => (n, s, true),
        AutomorphismMode::Sampled(n, s) => (n, s, false),
    };
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(SVec, SVec)> = Vec::new();
    if structured {
        let mut gens: Vec<SVec> = vec![SVec::unit(R), SVec::unit(S), SVec::unit(T)];
        for _ in 0..10 {
            gens.push(random_slot_vec(&mut rng, P0, T, 3));
        }
        for _ in 0..10 {
            gens.push(random_slot_vec(&mut rng, 0, PHI_DIM, 3));
        }
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                pairs.push((gens[a].clone(), gens[b].clone()));
            }
        }
    }
    for k in 0..n {
        if k % 2 == 0 {
            pairs.push((SVec::unit(rng.gen_range(0..DIM)), SVec::unit(rng.gen_range(0..DIM))));
        } else {
            pairs.push((random_slot_vec(&mut rng, 0, DIM, 3), random_slot_vec(&mut rng, 0, DIM, 3)));
        }
    }
    let apply = |v: &SVec| l.apply(v);
    pairs.into_iter().find(|(a, b)| apply(&bracket(a, b)) != bracket(&apply(a), &apply(b)))
}

/// Sparse vector with `k` random small integer entries in [lo, hi).
pub fn random_slot_vec(rng: &mut impl Rng, lo: usize, hi: usize, k: usize) -> SVec {
    let pairs = (0..k)
        .map(|_| {
            let mut c = rng.gen_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            (rng.gen_range(lo..hi), CycNum::from_i64(c))
        })
        .collect();
    SVec::from_pairs(pairs)
}
