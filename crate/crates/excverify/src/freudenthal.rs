//! The Freudenthal space P^C = J^C ⊕ J^C ⊕ C ⊕ C and the operators Φ(φ, A, B, ν).
//!
//! Coordinates: X in 0..27, Y in 27..54, ξ at 54, η at 55.

use crate::exactfield::{Accum, CycNum, ExactMatrix, FieldError, SVec, SemilinearOp};
use crate::jordan::{self, JordanElem, JordanMapName, JordanOp, DIM as JDIM};

pub type FOperator = SemilinearOp;

pub const DIM: usize = 56;
pub const Y0: usize = 27;
pub const XI: usize = 54;
pub const ETA: usize = 55;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FVector {
    pub x: JordanElem,
    pub y: JordanElem,
    pub xi: CycNum,
    pub eta: CycNum,
}

impl FVector {
    pub fn zero() -> Self {
        FVector::default()
    }

    pub fn new(x: JordanElem, y: JordanElem, xi: CycNum, eta: CycNum) -> Self {
        FVector { x, y, xi, eta }
    }

    pub fn basis(i: usize) -> Self {
        Self::from_svec(&SVec::unit(i))
    }

    pub fn to_svec(&self) -> SVec {
        let mut pairs = self.x.to_svec().into_entries();
        pairs.extend(self.y.to_svec().shifted(Y0).into_entries());
        if !self.xi.is_zero() {
            pairs.push((XI, self.xi.clone()));
        }
        if !self.eta.is_zero() {
            pairs.push((ETA, self.eta.clone()));
        }
        SVec::from_pairs(pairs)
    }

    pub fn from_svec(v: &SVec) -> Self {
        FVector {
            x: JordanElem::from_svec(&v.slice(0, Y0)),
            y: JordanElem::from_svec(&v.slice(Y0, XI)),
            xi: v.get(XI),
            eta: v.get(ETA),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        FVector { x: self.x.add(&o.x), y: self.y.add(&o.y), xi: self.xi.add(&o.xi), eta: self.eta.add(&o.eta) }
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        FVector { x: self.x.scale(s), y: self.y.scale(s), xi: self.xi.mul(s), eta: self.eta.mul(s) }
    }

    pub fn tau(&self) -> Self {
        FVector { x: self.x.tau(), y: self.y.tau(), xi: self.xi.conj(), eta: self.eta.conj() }
    }
}

/// Split a 56-vector into (X, Y, ξ, η) coordinate parts.
pub fn split(v: &SVec) -> (SVec, SVec, CycNum, CycNum) {
    (v.slice(0, Y0), v.slice(Y0, XI), v.get(XI), v.get(ETA))
}

pub fn join(x: &SVec, y: &SVec, xi: &CycNum, eta: &CycNum) -> SVec {
    let mut pairs = x.entries().to_vec();
    pairs.extend(y.shifted(Y0).into_entries());
    pairs.push((XI, xi.clone()));
    pairs.push((ETA, eta.clone()));
    SVec::from_pairs(pairs)
}

/// Element Φ(φ, A, B, ν) of e7^C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E7AlgElem {
    pub phi: JordanOp,
    pub a: JordanElem,
    pub b: JordanElem,
    pub nu: CycNum,
}

impl E7AlgElem {
    pub fn zero() -> Self {
        E7AlgElem { phi: SemilinearOp::linear(ExactMatrix::zeros(JDIM, JDIM)), a: JordanElem::zero(), b: JordanElem::zero(), nu: CycNum::zero() }
    }

    pub fn new(phi: ExactMatrix, a: JordanElem, b: JordanElem, nu: CycNum) -> Self {
        E7AlgElem { phi: SemilinearOp::linear(phi), a, b, nu }
    }

    pub fn add(&self, o: &Self) -> Self {
        E7AlgElem::new(self.phi.matrix.add(&o.phi.matrix), self.a.add(&o.a), self.b.add(&o.b), self.nu.add(&o.nu))
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        E7AlgElem::new(self.phi.matrix.scale(s), self.a.scale(s), self.b.scale(s), self.nu.mul(s))
    }

    /// The 56×56 matrix of the operator on P^C.
    pub fn to_matrix(&self) -> ExactMatrix {
        operator_matrix(&self.phi.matrix, &self.a.to_svec(), &self.b.to_svec(), &self.nu)
    }

    pub fn to_operator(&self) -> FOperator {
        SemilinearOp::linear(self.to_matrix())
    }

    /// Recover (φ, A, B, ν) from an operator, failing when it is not of this form.
    pub fn from_matrix(m: &ExactMatrix) -> Result<Self, FieldError> {
        let nu = m.get(XI, XI);
        let col_eta = m.col(ETA);
        let col_xi = m.col(XI);
        let a = col_eta.slice(0, Y0);
        let b = col_xi.slice(Y0, XI);
        let third = nu.mul(&CycNum::from_ratio(1, 3));
        let mut phi_entries = Vec::new();
        for r in 0..JDIM {
            for (c, v) in m.row(r).entries() {
                if *c < JDIM {
                    phi_entries.push((r, *c, v.clone()));
                }
            }
            phi_entries.push((r, r, third.clone()));
        }
        let phi = ExactMatrix::from_entries(JDIM, JDIM, phi_entries)?;
        let e = E7AlgElem::new(phi, JordanElem::from_svec(&a), JordanElem::from_svec(&b), nu);
        if e.to_matrix() != *m {
            return Err(FieldError::Certification("operator is not of the form Φ(φ, A, B, ν)".into()));
        }
        Ok(e)
    }
}

/// Matrix of Φ(φ, A, B, ν):
/// (φX − ⅓νX + 2B×Y + ηA, 2A×X − ᵗφY + ⅓νY + ξB, (A, Y) + νξ, (B, X) − νη).
pub fn operator_matrix(phi: &ExactMatrix, a: &SVec, b: &SVec, nu: &CycNum) -> ExactMatrix {
    let mut e: Vec<(usize, usize, CycNum)> = Vec::new();
    let third = nu.mul(&CycNum::from_ratio(1, 3));
    for (r, c, v) in phi.entries() {
        e.push((r, c, v));
    }
    for (r, c, v) in jordan::transpose_matrix(phi).entries() {
        e.push((Y0 + r, Y0 + c, v.neg()));
    }
    for k in 0..JDIM {
        e.push((k, k, third.neg()));
        e.push((Y0 + k, Y0 + k, third.clone()));
    }
    let two = CycNum::from_i64(2);
    for j in 0..JDIM {
        let uj = SVec::unit(j);
        if !b.is_zero() {
            for (r, v) in jordan::cross_vec(b, &uj).entries() {
                e.push((*r, Y0 + j, v.mul(&two)));
            }
            // η row: (B, X)
            let g = b.get(j).scale(jordan::gram(j), 1);
            e.push((ETA, j, g));
        }
        if !a.is_zero() {
            for (r, v) in jordan::cross_vec(a, &uj).entries() {
                e.push((Y0 + *r, j, v.mul(&two)));
            }
            // ξ row: (A, Y)
            let g = a.get(j).scale(jordan::gram(j), 1);
            e.push((XI, Y0 + j, g));
        }
    }
    for (r, v) in a.entries() {
        e.push((*r, ETA, v.clone()));
    }
    for (r, v) in b.entries() {
        e.push((Y0 + r, XI, v.clone()));
    }
    e.push((XI, XI, nu.clone()));
    e.push((ETA, ETA, nu.neg()));
    e.retain(|t| !t.2.is_zero());
    ExactMatrix::from_entries(DIM, DIM, e).expect("in range")
}

pub fn phi_apply(e: &E7AlgElem, p: &FVector) -> FVector {
    let (x, y, xi, eta) = (&p.x, &p.y, &p.xi, &p.eta);
    let third = e.nu.mul(&CycNum::from_ratio(1, 3));
    let two = CycNum::from_i64(2);
    let phix = jordan::apply(&e.phi, x);
    let tphi = jordan::transpose_op(&e.phi);
    let tphiy = jordan::apply(&tphi, y);
    FVector {
        x: phix
            .sub(&x.scale(&third))
            .add(&jordan::cross(&e.b, y).scale(&two))
            .add(&e.a.scale(eta)),
        y: jordan::cross(&e.a, x)
            .scale(&two)
            .sub(&tphiy)
            .add(&y.scale(&third))
            .add(&e.b.scale(xi)),
        xi: jordan::inner(&e.a, y).add(&e.nu.mul(xi)),
        eta: jordan::inner(&e.b, x).sub(&e.nu.mul(eta)),
    }
}

/// (X ∨ W)U = ½(W, U)X + ⅙(X, W)U − 2W × (X × U), as a 27×27 matrix.
pub fn vee_vec(x: &SVec, w: &SVec) -> ExactMatrix {
    let xw = jordan::inner_vec(x, w).mul(&CycNum::from_ratio(1, 6));
    let cols: Vec<SVec> = (0..JDIM)
        .map(|j| {
            let u = SVec::unit(j);
            let mut acc = Accum::new(JDIM);
            let wu = w.get(j).scale(jordan::gram(j), 2);
            acc.add_scaled(&wu, x);
            acc.add_entry(j, &xw);
            let xu = jordan::cross_vec(x, &u);
            acc.add_scaled(&CycNum::from_i64(-2), &jordan::cross_vec(w, &xu));
            acc.take()
        })
        .collect();
    ExactMatrix::from_cols(JDIM, &cols)
}

pub fn vee(x: &JordanElem, w: &JordanElem) -> JordanOp {
    SemilinearOp::linear(vee_vec(&x.to_svec(), &w.to_svec()))
}

/// P × Q as Φ-parameters, on coordinate vectors.
pub fn cross_pq_vec(p: &SVec, q: &SVec) -> (ExactMatrix, SVec, SVec, CycNum) {
    let (x, y, xi, eta) = split(p);
    let (z, w, zeta, omega) = split(q);
    let phi = vee_vec(&x, &w).add(&vee_vec(&z, &y)).scale(&CycNum::from_ratio(-1, 2));
    let mut a = Accum::new(JDIM);
    a.add_scaled(&CycNum::from_ratio(-1, 2), &jordan::cross_vec(&y, &w));
    a.add_scaled(&xi.scale(1, 4), &z);
    a.add_scaled(&zeta.scale(1, 4), &x);
    let mut b = Accum::new(JDIM);
    b.add_scaled(&CycNum::from_ratio(1, 2), &jordan::cross_vec(&x, &z));
    b.add_scaled(&eta.scale(-1, 4), &w);
    b.add_scaled(&omega.scale(-1, 4), &y);
    let nu = jordan::inner_vec(&x, &w)
        .add(&jordan::inner_vec(&z, &y))
        .sub(&xi.mul(&omega).add(&zeta.mul(&eta)).scale(3, 1))
        .scale(1, 8);
    (phi, a.take(), b.take(), nu)
}

pub fn cross_pq(p: &FVector, q: &FVector) -> E7AlgElem {
    let (phi, a, b, nu) = cross_pq_vec(&p.to_svec(), &q.to_svec());
    E7AlgElem::new(phi, JordanElem::from_svec(&a), JordanElem::from_svec(&b), nu)
}

/// ⟨P, Q⟩ = ⟨X, Z⟩ + ⟨Y, W⟩ + (τξ)ζ + (τη)ω.
pub fn hermitian_vec(p: &SVec, q: &SVec) -> CycNum {
    let mut acc = CycNum::zero();
    let (x, y) = (p.entries(), q.entries());
    let (mut a, mut b) = (0, 0);
    while a < x.len() && b < y.len() {
        match x[a].0.cmp(&y[b].0) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                let i = x[a].0;
                let g = if i < XI { jordan::gram(i % Y0) } else { 1 };
                acc = acc.add(&x[a].1.conj().mul(&y[b].1).scale(g, 1));
                a += 1;
                b += 1;
            }
        }
    }
    acc
}

/// Weights of ⟨,⟩ on the coordinate basis.
pub fn gram(i: usize) -> i64 {
    if i < XI {
        jordan::gram(i % Y0)
    } else {
        1
    }
}

/// Block-diagonal lift β ↦ (βX, ᵗβ⁻¹Y, ξ, η) of a linear Jordan operator.
pub fn lift_e6(l: &JordanOp) -> Result<FOperator, FieldError> {
    if !l.is_linear() {
        return Err(FieldError::Shape("lift requires a complex-linear operator".into()));
    }
    let inv_t = jordan::transpose_op(&l.inverse()?);
    let mut e = Vec::new();
    for (r, c, v) in l.matrix.entries() {
        e.push((r, c, v));
    }
    for (r, c, v) in inv_t.matrix.entries() {
        e.push((Y0 + r, Y0 + c, v));
    }
    e.push((XI, XI, CycNum::one()));
    e.push((ETA, ETA, CycNum::one()));
    Ok(SemilinearOp::linear(ExactMatrix::from_entries(DIM, DIM, e)?))
}

/// Linear operator from a map on FVectors, evaluated on the basis.
pub fn op_from_fn(f: impl Fn(&FVector) -> FVector) -> FOperator {
    SemilinearOp::from_columns(DIM, false, |j| f(&FVector::basis(j)).to_svec())
}

pub fn apply(op: &FOperator, p: &FVector) -> FVector {
    FVector::from_svec(&op.apply(&p.to_svec()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FMapName {
    Lambda,
    Iota,
    Gamma,
    Sigma,
    SigmaPrime,
    GammaH,
    GammaC,
    Phi(CycNum),
    DeltaLambda,
    DeltaIota,
    Delta10,
}

impl FMapName {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "lambda" => FMapName::Lambda,
            "iota" => FMapName::Iota,
            "gamma" => FMapName::Gamma,
            "sigma" => FMapName::Sigma,
            "sigma_prime" => FMapName::SigmaPrime,
            "gamma_H" => FMapName::GammaH,
            "gamma_C" => FMapName::GammaC,
            "delta_lambda" => FMapName::DeltaLambda,
            "delta_iota" => FMapName::DeltaIota,
            "delta10" => FMapName::Delta10,
            _ => return None,
        })
    }
}

pub fn named_f_map(name: &FMapName) -> Result<FOperator, FieldError> {
    let i = CycNum::i();
    Ok(match name {
        FMapName::Lambda => op_from_fn(|p| FVector::new(p.y.clone(), p.x.neg(), p.eta.clone(), p.xi.neg())),
        FMapName::Iota => op_from_fn(|p| {
            FVector::new(p.x.scale(&i.neg()), p.y.scale(&i), p.xi.mul(&i.neg()), p.eta.mul(&i))
        }),
        FMapName::Gamma => lift_e6(&jordan::named_jordan_map(&JordanMapName::Gamma)?)?,
        FMapName::Sigma => lift_e6(&jordan::named_jordan_map(&JordanMapName::Sigma)?)?,
        FMapName::SigmaPrime => lift_e6(&jordan::named_jordan_map(&JordanMapName::SigmaPrime)?)?,
        FMapName::GammaH => lift_e6(&jordan::named_jordan_map(&JordanMapName::GammaH)?)?,
        FMapName::GammaC => lift_e6(&jordan::named_jordan_map(&JordanMapName::GammaC)?)?,
        FMapName::Phi(t) => phi_theta(t)?,
        FMapName::DeltaIota => phi_theta(&CycNum::zeta_pow(3))?,
        FMapName::DeltaLambda => {
            let s = CycNum::inv_sqrt8();
            let e = JordanElem::unit();
            op_from_fn(|p| {
                let tx = p.x.tr();
                let ty = p.y.tr();
                let ax = e.scale(&tx).sub(&p.x.scale(&CycNum::from_i64(2)));
                let ay = e.scale(&ty).sub(&p.y.scale(&CycNum::from_i64(2)));
                let x = ax.neg().add(&ay.scale(&i)).sub(&e.scale(&p.xi)).add(&e.scale(&i.mul(&p.eta)));
                let y = ax.scale(&i).sub(&ay).add(&e.scale(&i.mul(&p.xi))).sub(&e.scale(&p.eta));
                let xi = tx.neg().add(&i.mul(&ty)).add(&p.xi).sub(&i.mul(&p.eta));
                let eta = i.mul(&tx).sub(&ty).sub(&i.mul(&p.xi)).add(&p.eta);
                FVector::new(x, y, xi, eta).scale(&s)
            })
        }
        FMapName::Delta10 => {
            // the ξE1 term in the Y row carries a minus sign; with + the map leaves E7
            let e1 = JordanElem::e(1);
            let p1 = |x: &JordanElem| {
                e1.scale(&jordan::inner(x, &e1))
                    .add(&jordan::cross(&e1, &jordan::cross(&e1, x)).scale(&CycNum::from_i64(4)))
            };
            let two = CycNum::from_i64(2);
            op_from_fn(|p| {
                let x = p.x.sub(&p1(&p.x)).sub(&jordan::cross(&e1, &p.y).scale(&two)).add(&e1.scale(&p.eta));
                let y = jordan::cross(&e1, &p.x).scale(&two).add(&p.y.sub(&p1(&p.y))).sub(&e1.scale(&p.xi));
                let xi = jordan::inner(&e1, &p.y);
                let eta = jordan::inner(&e1, &p.x).neg();
                FVector::new(x, y, xi, eta)
            })
        }
    })
}

/// φ(θ)(X, Y, ξ, η) = (θX, θ⁻¹Y, θ⁻³ξ, θ³η).
pub fn phi_theta(t: &CycNum) -> Result<FOperator, FieldError> {
    if t.root_of_unity_index().is_none() {
        return Err(FieldError::Parse(format!("{t} is not a 24th root of unity")));
    }
    let ti = t.inv()?;
    let (t3, tm3) = (t.pow(3), ti.pow(3));
    Ok(op_from_fn(|p| FVector::new(p.x.scale(t), p.y.scale(&ti), p.xi.mul(&tm3), p.eta.mul(&t3))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipMode {
    Full,
    Sampled(usize, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum E7Violation {
    Cross(usize, usize),
    Hermitian(usize, usize),
}

/// Operator identity L∘(P×Q) = (LP × LQ)∘L on basis pairs, plus ⟨,⟩ preservation.
pub fn e7_violation(l: &FOperator, mode: MembershipMode) -> Option<E7Violation> {
    let cols: Vec<SVec> = (0..DIM).map(|j| l.column(j)).collect();
    let pairs: Vec<(usize, usize)> = match mode {
        MembershipMode::Full => (0..DIM).flat_map(|p| (p..DIM).map(move |q| (p, q))).collect(),
        MembershipMode::Sampled(n, seed) => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..n).map(|_| (rng.gen_range(0..DIM), rng.gen_range(0..DIM))).collect()
        }
    };
    let cross_op = |p: &SVec, q: &SVec| {
        let (phi, a, b, nu) = cross_pq_vec(p, q);
        operator_matrix(&phi, &a, &b, &nu)
    };
    for (p, q) in pairs {
        let lhs = if l.conjugates_scalars {
            l.matrix.mul(&cross_op(&SVec::unit(p), &SVec::unit(q)).conj())
        } else {
            l.matrix.mul(&cross_op(&SVec::unit(p), &SVec::unit(q)))
        };
        let rhs = cross_op(&cols[p], &cols[q]).mul(&l.matrix);
        if lhs != rhs {
            return Some(E7Violation::Cross(p, q));
        }
    }
    for p in 0..DIM {
        for q in p..DIM {
            let v = if l.conjugates_scalars {
                hermitian_vec(&cols[p], &cols[q]).conj()
            } else {
                hermitian_vec(&cols[p], &cols[q])
            };
            let expect = if p == q { CycNum::from_i64(gram(p)) } else { CycNum::zero() };
            if v != expect {
                return Some(E7Violation::Hermitian(p, q));
            }
        }
    }
    None
}

pub fn is_e7_group_elem(l: &FOperator, mode: MembershipMode) -> Result<bool, FieldError> {
    l.inverse()?;
    Ok(e7_violation(l, mode).is_none())
}

/// Matrix of the map Φ ↦ gΦg⁻¹ restricted to a Φ-operator.
pub fn conjugate_e7(g: &FOperator, g_inv: &FOperator, e: &E7AlgElem) -> Result<E7AlgElem, FieldError> {
    E7AlgElem::from_matrix(&g.conjugate_linear(&e.to_matrix(), g_inv))
}

/// −G⁻¹ Φ† G, the conjugate-linear map whose fixed points are skew-Hermitian.
pub fn skew_adjoint(m: &ExactMatrix) -> ExactMatrix {
    let t = m.transpose().conj();
    let entries = t
        .entries()
        .into_iter()
        .map(|(r, c, v)| (r, c, v.scale(-gram(c), gram(r))))
        .collect();
    ExactMatrix::from_entries(m.nrows(), m.ncols(), entries).expect("in range")
}
