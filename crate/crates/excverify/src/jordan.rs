//! The exceptional Jordan algebra J(3,𝕆)^C.
//!
//! X = [[ξ1, x3, x̄2], [x̄3, ξ2, x1], [x2, x̄1, ξ3]], coordinates ordered as
//! E1, E2, E3, F1(e0..e7), F2(e0..e7), F3(e0..e7).

use std::sync::OnceLock;

use crate::cayley::{self, OctMapName, OctOperator, Octonion};
use crate::exactfield::{CycNum, ExactMatrix, FieldError, SVec, SemilinearOp};

pub type JordanOp = SemilinearOp;

pub const DIM: usize = 27;

/// Coordinate of ξ_k (k = 0, 1, 2).
pub fn xi_index(k: usize) -> usize {
    k
}

/// Coordinate of e_i in the off-diagonal x_{k+1} (k = 0, 1, 2).
pub fn x_index(k: usize, i: usize) -> usize {
    3 + 8 * k + i
}

/// Weights of the bilinear form (X, Y) in the coordinate basis.
pub fn gram(i: usize) -> i64 {
    if i < 3 {
        1
    } else {
        2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JordanElem {
    pub xi: [CycNum; 3],
    pub x: [Octonion; 3],
}

impl JordanElem {
    pub fn zero() -> Self {
        JordanElem::default()
    }

    /// The unit E.
    pub fn unit() -> Self {
        let mut j = Self::zero();
        j.xi = [CycNum::one(), CycNum::one(), CycNum::one()];
        j
    }

    /// E_k for k = 1, 2, 3.
    pub fn e(k: usize) -> Self {
        Self::basis(k - 1)
    }

    /// F_k(x) for k = 1, 2, 3.
    pub fn f(k: usize, x: &Octonion) -> Self {
        let mut j = Self::zero();
        j.x[k - 1] = x.clone();
        j
    }

    pub fn basis(i: usize) -> Self {
        Self::from_svec(&SVec::unit(i))
    }

    pub fn from_svec(v: &SVec) -> Self {
        let d = v.to_dense(DIM);
        JordanElem {
            xi: std::array::from_fn(|k| d[k].clone()),
            x: std::array::from_fn(|k| Octonion { c: std::array::from_fn(|i| d[x_index(k, i)].clone()) }),
        }
    }

    pub fn to_svec(&self) -> SVec {
        let mut pairs = Vec::new();
        for k in 0..3 {
            if !self.xi[k].is_zero() {
                pairs.push((k, self.xi[k].clone()));
            }
        }
        for k in 0..3 {
            for i in 0..8 {
                if !self.x[k].c[i].is_zero() {
                    pairs.push((x_index(k, i), self.x[k].c[i].clone()));
                }
            }
        }
        SVec::from_pairs(pairs)
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(|v| v.is_zero()) && self.x.iter().all(|o| o.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        JordanElem {
            xi: std::array::from_fn(|k| self.xi[k].add(&o.xi[k])),
            x: std::array::from_fn(|k| self.x[k].add(&o.x[k])),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        JordanElem { xi: std::array::from_fn(|k| self.xi[k].neg()), x: std::array::from_fn(|k| self.x[k].neg()) }
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        JordanElem {
            xi: std::array::from_fn(|k| self.xi[k].mul(s)),
            x: std::array::from_fn(|k| self.x[k].scale(s)),
        }
    }

    /// Complex conjugation τ of all coefficients.
    pub fn tau(&self) -> Self {
        JordanElem { xi: std::array::from_fn(|k| self.xi[k].conj()), x: std::array::from_fn(|k| self.x[k].tau()) }
    }

    pub fn tr(&self) -> CycNum {
        self.xi[0].add(&self.xi[1]).add(&self.xi[2])
    }

    pub fn is_real(&self) -> bool {
        self.xi.iter().all(|v| v.is_real()) && self.x.iter().all(|o| o.is_real())
    }
}

/// X ∘ Y = (XY + YX)/2, written out on the Hermitian layout.
pub fn jordan_mul(a: &JordanElem, b: &JordanElem) -> JordanElem {
    let half = CycNum::from_ratio(1, 2);
    let mut out = JordanElem::zero();
    for k in 0..3 {
        let k1 = (k + 1) % 3;
        let k2 = (k + 2) % 3;
        out.xi[k] = a.xi[k]
            .mul(&b.xi[k])
            .add(&a.x[k1].inner(&b.x[k1]))
            .add(&a.x[k2].inner(&b.x[k2]));
        let t = b.x[k]
            .scale(&a.xi[k1].add(&a.xi[k2]))
            .add(&a.x[k].scale(&b.xi[k1].add(&b.xi[k2])))
            .add(&a.x[k1].mul(&b.x[k2]).add(&b.x[k1].mul(&a.x[k2])).conj());
        out.x[k] = t.scale(&half);
    }
    out
}

/// (X, Y) = tr(X ∘ Y).
pub fn inner(a: &JordanElem, b: &JordanElem) -> CycNum {
    let mut acc = CycNum::zero();
    for k in 0..3 {
        acc = acc.add(&a.xi[k].mul(&b.xi[k]));
        acc = acc.add(&a.x[k].inner(&b.x[k]).scale(2, 1));
    }
    acc
}

/// ⟨X, Y⟩ = (τX, Y).
pub fn hermitian(a: &JordanElem, b: &JordanElem) -> CycNum {
    inner(&a.tau(), b)
}

/// X × Y = ½(2X∘Y − tr(X)Y − tr(Y)X + (tr X tr Y − (X, Y))E).
pub fn cross(a: &JordanElem, b: &JordanElem) -> JordanElem {
    let ta = a.tr();
    let tb = b.tr();
    let s = ta.mul(&tb).sub(&inner(a, b));
    jordan_mul(a, b)
        .scale(&CycNum::from_i64(2))
        .sub(&b.scale(&ta))
        .sub(&a.scale(&tb))
        .add(&JordanElem::unit().scale(&s))
        .scale(&CycNum::from_ratio(1, 2))
}

/// (X, Y, Z) = (X, Y × Z).
pub fn trilinear(a: &JordanElem, b: &JordanElem, c: &JordanElem) -> CycNum {
    inner(a, &cross(b, c))
}

/// det X = (X, X, X)/3.
pub fn det(a: &JordanElem) -> CycNum {
    trilinear(a, a, a).mul(&CycNum::from_ratio(1, 3))
}

/// Structure constants of ∘ and × on the coordinate basis.
pub struct Tables {
    pub mul: Vec<Vec<SVec>>,
    pub cross: Vec<Vec<SVec>>,
}

pub fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let basis: Vec<JordanElem> = (0..DIM).map(JordanElem::basis).collect();
        let mul = (0..DIM).map(|i| (0..DIM).map(|j| jordan_mul(&basis[i], &basis[j]).to_svec()).collect()).collect();
        let cross = (0..DIM).map(|i| (0..DIM).map(|j| cross(&basis[i], &basis[j]).to_svec()).collect()).collect();
        Tables { mul, cross }
    })
}

fn bilinear_from_table(t: &[Vec<SVec>], u: &SVec, v: &SVec) -> SVec {
    let mut acc = crate::exactfield::Accum::new(DIM);
    for (i, a) in u.entries() {
        for (j, b) in v.entries() {
            acc.add_scaled(&a.mul(b), &t[*i][*j]);
        }
    }
    acc.take()
}

/// X ∘ Y on coordinate vectors.
pub fn mul_vec(u: &SVec, v: &SVec) -> SVec {
    bilinear_from_table(&tables().mul, u, v)
}

/// X × Y on coordinate vectors.
pub fn cross_vec(u: &SVec, v: &SVec) -> SVec {
    bilinear_from_table(&tables().cross, u, v)
}

/// (X, Y) on coordinate vectors.
pub fn inner_vec(u: &SVec, v: &SVec) -> CycNum {
    let mut acc = CycNum::zero();
    let (x, y) = (u.entries(), v.entries());
    let (mut a, mut b) = (0, 0);
    while a < x.len() && b < y.len() {
        match x[a].0.cmp(&y[b].0) {
            std::cmp::Ordering::Less => a += 1,
            std::cmp::Ordering::Greater => b += 1,
            std::cmp::Ordering::Equal => {
                let p = x[a].1.mul(&y[b].1);
                acc = if gram(x[a].0) == 1 { acc.add(&p) } else { acc.add(&p.scale(2, 1)) };
                a += 1;
                b += 1;
            }
        }
    }
    acc
}

/// (X, Y, Z) on coordinate vectors.
pub fn trilinear_vec(u: &SVec, v: &SVec, w: &SVec) -> CycNum {
    inner_vec(u, &cross_vec(v, w))
}

pub fn apply(op: &JordanOp, x: &JordanElem) -> JordanElem {
    JordanElem::from_svec(&op.apply(&x.to_svec()))
}

/// Linear operator from a map on Jordan elements, evaluated on the basis.
pub fn op_from_fn(f: impl Fn(&JordanElem) -> JordanElem) -> JordanOp {
    SemilinearOp::from_columns(DIM, false, |j| f(&JordanElem::basis(j)).to_svec())
}

/// Componentwise action of an octonion operator on x1, x2, x3.
pub fn lift_oct(op: &OctOperator) -> JordanOp {
    let mut m = ExactMatrix::identity(DIM).entries();
    m.retain(|(r, _, _)| *r < 3);
    for k in 0..3 {
        for (r, c, v) in op.matrix.entries() {
            m.push((x_index(k, r), x_index(k, c), v));
        }
    }
    SemilinearOp::new(ExactMatrix::from_entries(DIM, DIM, m).expect("in range"), op.conjugates_scalars)
}

/// ᵗL with (ᵗL X, Y) = (X, L Y), i.e. G⁻¹ Lᵀ G.
pub fn transpose_op(l: &JordanOp) -> JordanOp {
    transpose_matrix(&l.matrix).into()
}

pub fn transpose_matrix(m: &ExactMatrix) -> ExactMatrix {
    let t = m.transpose();
    let entries = t
        .entries()
        .into_iter()
        .map(|(r, c, v)| (r, c, v.scale(gram(c), gram(r))))
        .collect();
    ExactMatrix::from_entries(DIM, DIM, entries).expect("in range")
}

impl From<ExactMatrix> for SemilinearOp {
    fn from(m: ExactMatrix) -> Self {
        SemilinearOp::linear(m)
    }
}

/// True when L preserves ∘ on all 378 unordered basis pairs.
pub fn is_f4_elem(l: &JordanOp) -> Result<bool, FieldError> {
    l.inverse()?;
    if !l.is_linear() || !l.matrix.is_real() {
        return Ok(false);
    }
    Ok(f4_violation(l).is_none())
}

pub fn f4_violation(l: &JordanOp) -> Option<(usize, usize)> {
    let t = tables();
    let cols: Vec<SVec> = (0..DIM).map(|j| l.column(j)).collect();
    for i in 0..DIM {
        for j in i..DIM {
            if l.apply(&t.mul[i][j]) != mul_vec(&cols[i], &cols[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

/// True when L preserves the trilinear form on all basis triples and the
/// Hermitian form on all basis pairs.
pub fn is_e6_elem(l: &JordanOp) -> Result<bool, FieldError> {
    l.inverse()?;
    if !l.is_linear() {
        return Ok(false);
    }
    Ok(e6_violation(l).is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum E6Violation {
    Trilinear(usize, usize, usize),
    Hermitian(usize, usize),
}

pub fn e6_violation(l: &JordanOp) -> Option<E6Violation> {
    let t = tables();
    let cols: Vec<SVec> = (0..DIM).map(|j| l.column(j)).collect();
    for j in 0..DIM {
        for k in j..DIM {
            let c = cross_vec(&cols[j], &cols[k]);
            for i in 0..=j {
                let lhs = inner_vec(&cols[i], &c);
                let rhs = t.cross[j][k].get(i).scale(gram(i), 1);
                if lhs != rhs {
                    return Some(E6Violation::Trilinear(i, j, k));
                }
            }
        }
    }
    for i in 0..DIM {
        let ci = cols[i].conj();
        for j in i..DIM {
            let lhs = inner_vec(&ci, &cols[j]);
            let rhs = if i == j { CycNum::from_i64(gram(i)) } else { CycNum::zero() };
            if lhs != rhs {
                return Some(E6Violation::Hermitian(i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JordanMapName {
    Sigma,
    SigmaPrime,
    Gamma,
    GammaH,
    GammaC,
    Delta(u8),
    Delta9,
    Rho2,
    Tau,
    Phi1(CycNum),
    Phi2(CycNum),
    Tilde(JordanElem),
}

fn scale_parts(x: &JordanElem, xi: [&CycNum; 3], off: [&CycNum; 3]) -> JordanElem {
    JordanElem {
        xi: std::array::from_fn(|k| x.xi[k].mul(xi[k])),
        x: std::array::from_fn(|k| x.x[k].scale(off[k])),
    }
}

fn check_root_of_unity(z: &CycNum) -> Result<(), FieldError> {
    if z.root_of_unity_index().is_none() {
        return Err(FieldError::Parse(format!("{z} is not a 24th root of unity")));
    }
    Ok(())
}

pub fn named_jordan_map(name: &JordanMapName) -> Result<JordanOp, FieldError> {
    let one = CycNum::one();
    let m1 = CycNum::from_i64(-1);
    Ok(match name {
        JordanMapName::Sigma => op_from_fn(|x| scale_parts(x, [&one, &one, &one], [&one, &m1, &m1])),
        JordanMapName::SigmaPrime => op_from_fn(|x| scale_parts(x, [&one, &one, &one], [&m1, &m1, &one])),
        JordanMapName::Gamma => lift_oct(&cayley::named_oct_map(OctMapName::Gamma)),
        JordanMapName::GammaH => lift_oct(&cayley::named_oct_map(OctMapName::GammaH)),
        JordanMapName::GammaC => lift_oct(&cayley::named_oct_map(OctMapName::GammaC)),
        JordanMapName::Delta(k @ 1..=4) => {
            let n = [OctMapName::Delta1, OctMapName::Delta2, OctMapName::Delta3, OctMapName::Delta4][*k as usize - 1];
            lift_oct(&cayley::named_oct_map(n))
        }
        JordanMapName::Delta(5) => op_from_fn(|x| {
            let e4 = Octonion::basis(4);
            JordanElem {
                xi: x.xi.clone(),
                x: [
                    e4.mul(&x.x[0]).mul(&e4).neg(),
                    e4.mul(&x.x[1]).neg(),
                    x.x[2].mul(&e4),
                ],
            }
        }),
        JordanMapName::Delta(6) => op_from_fn(|x| JordanElem {
            xi: [x.xi[2].clone(), x.xi[1].clone(), x.xi[0].clone()],
            x: [x.x[2].conj(), x.x[1].conj(), x.x[0].conj()],
        }),
        JordanMapName::Delta(7) => op_from_fn(|x| JordanElem {
            xi: [x.xi[1].clone(), x.xi[0].clone(), x.xi[2].clone()],
            x: [x.x[1].conj(), x.x[0].conj(), x.x[2].conj()],
        }),
        JordanMapName::Delta(k) => return Err(FieldError::Parse(format!("no Jordan map delta{k}"))),
        JordanMapName::Delta9 => {
            // D9 X D9 with D9 = diag(1, i, i)
            let i = CycNum::i();
            op_from_fn(|x| scale_parts(x, [&one, &m1, &m1], [&m1, &i, &i]))
        }
        JordanMapName::Rho2 => op_from_fn(rho2_apply),
        JordanMapName::Tau => SemilinearOp::conjugation(DIM),
        JordanMapName::Phi1(t) => {
            check_root_of_unity(t)?;
            let ti = t.inv()?;
            let (t4, tm2) = (t.pow(4), ti.pow(2));
            op_from_fn(|x| scale_parts(x, [&t4, &tm2, &tm2], [&tm2, t, t]))
        }
        JordanMapName::Phi2(v) => {
            check_root_of_unity(v)?;
            let vi = v.inv()?;
            let (v2, vm2) = (v.pow(2), vi.pow(2));
            op_from_fn(|x| scale_parts(x, [&one, &v2, &vm2], [&one, &vi, v]))
        }
        JordanMapName::Tilde(t) => tilde(t),
    })
}

/// ρ2 on the Hermitian layout: ξ ↦ (ξ1, −ξ2, −ξ3), x1 ↦ e1x1e1, x2 ↦ i·e1x2,
/// x3 ↦ −i·x3e1.
pub fn rho2_apply(x: &JordanElem) -> JordanElem {
    let e1 = Octonion::basis(1);
    let i = CycNum::i();
    JordanElem {
        xi: [x.xi[0].clone(), x.xi[1].neg(), x.xi[2].neg()],
        x: [
            e1.mul(&x.x[0]).mul(&e1),
            e1.mul(&x.x[1]).scale(&i),
            x.x[2].mul(&e1).scale(&i.neg()),
        ],
    }
}

/// T̃: X ↦ T ∘ X.
pub fn tilde(t: &JordanElem) -> JordanOp {
    let tv = t.to_svec();
    SemilinearOp::from_columns(DIM, false, |j| mul_vec(&tv, &SVec::unit(j)))
}

/// Derivation-type check: φ is in e6^C when the trilinear form is annihilated.
pub fn is_trilinear_derivation(phi: &ExactMatrix) -> bool {
    let t = tables();
    let cols: Vec<SVec> = (0..DIM).map(|j| phi.col(j)).collect();
    for i in 0..DIM {
        for j in i..DIM {
            for k in j..DIM {
                let a = inner_vec(&cols[i], &t.cross[j][k]);
                let b = inner_vec(&cols[j], &t.cross[i][k]);
                let c = inner_vec(&cols[k], &t.cross[i][j]);
                if !a.add(&b).add(&c).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
