//! The complexified Cayley algebra 𝕆^C and the named automorphisms acting on it.
//!
//! The table comes from Cayley–Dickson doubling ℝ → ℂ → ℍ → 𝕆 with
//! (a + b·e)(c + d·e) = (ac − d̄b) + (da + bc̄)·e at every stage, with the basis
//! e3 = e1e2, e5 = e1e4, e6 = e4e2, e7 = e3e4. The sign of e6 makes
//! e1e6 = e7, so that 𝕆 = ℂ ⊕ ℂe2 ⊕ ℂe4 ⊕ ℂe6 as a left ℂ-module.

use std::sync::OnceLock;

use crate::exactfield::{CycNum, ExactMatrix, FieldError, SVec, SemilinearOp};

pub type OctOperator = SemilinearOp;

/// e_i · e_j = SIGN[i][j] · e_{INDEX[i][j]}.
pub struct MulTable {
    pub sign: [[i8; 8]; 8],
    pub index: [[usize; 8]; 8],
}

/// Integer Cayley–Dickson product on 2^n coordinates.
fn cd_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let ac = cd_mul(a, c);
    let db = cd_mul(&cd_conj(d), b);
    let da = cd_mul(d, a);
    let bc = cd_mul(b, &cd_conj(c));
    let mut out: Vec<i64> = ac.iter().zip(&db).map(|(p, q)| p - q).collect();
    out.extend(da.iter().zip(&bc).map(|(p, q)| p + q));
    out
}

fn cd_conj(x: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = x.iter().map(|v| -v).collect();
    out[0] = x[0];
    out
}

/// e_k = BASIS_SIGN[k] · (k-th doubling coordinate).
const BASIS_SIGN: [i64; 8] = [1, 1, 1, 1, 1, 1, -1, 1];

pub fn mul_table() -> &'static MulTable {
    static T: OnceLock<MulTable> = OnceLock::new();
    T.get_or_init(|| {
        let mut sign = [[0i8; 8]; 8];
        let mut index = [[0usize; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let mut x = vec![0i64; 8];
                let mut y = vec![0i64; 8];
                x[i] = BASIS_SIGN[i];
                y[j] = BASIS_SIGN[j];
                let p = cd_mul(&x, &y);
                let k = p.iter().position(|&v| v != 0).expect("basis product is a signed unit");
                sign[i][j] = (p[k] * BASIS_SIGN[k]) as i8;
                index[i][j] = k;
            }
        }
        MulTable { sign, index }
    })
}

/// Stable fingerprint text for the multiplication table.
pub fn table_fingerprint_text() -> String {
    let t = mul_table();
    let mut s = String::new();
    for i in 0..8 {
        for j in 0..8 {
            s.push_str(&format!("{}{};", t.sign[i][j], t.index[i][j]));
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    pub c: [CycNum; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.c[i] = CycNum::one();
        o
    }

    pub fn scalar(s: CycNum) -> Self {
        let mut o = Self::zero();
        o.c[0] = s;
        o
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Octonion { c: v.map(CycNum::from_i64) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.c.iter().all(|x| x.is_real())
    }

    pub fn add(&self, o: &Self) -> Self {
        Octonion { c: std::array::from_fn(|k| self.c[k].add(&o.c[k])) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Octonion { c: std::array::from_fn(|k| self.c[k].sub(&o.c[k])) }
    }

    pub fn neg(&self) -> Self {
        Octonion { c: std::array::from_fn(|k| self.c[k].neg()) }
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        Octonion { c: std::array::from_fn(|k| self.c[k].mul(s)) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let t = mul_table();
        let mut out = Octonion::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if o.c[j].is_zero() {
                    continue;
                }
                let p = self.c[i].mul(&o.c[j]);
                let k = t.index[i][j];
                out.c[k] = if t.sign[i][j] > 0 { out.c[k].add(&p) } else { out.c[k].sub(&p) };
            }
        }
        out
    }

    /// Octonionic conjugation (negates the imaginary units, leaves scalars alone).
    pub fn conj(&self) -> Self {
        Octonion { c: std::array::from_fn(|k| if k == 0 { self.c[0].clone() } else { self.c[k].neg() }) }
    }

    /// Complex conjugation of the coefficients.
    pub fn tau(&self) -> Self {
        Octonion { c: std::array::from_fn(|k| self.c[k].conj()) }
    }

    /// Symmetric bilinear inner product, orthonormal on e0..e7.
    pub fn inner(&self, o: &Self) -> CycNum {
        let mut acc = CycNum::zero();
        for k in 0..8 {
            if !self.c[k].is_zero() && !o.c[k].is_zero() {
                acc = acc.add(&self.c[k].mul(&o.c[k]));
            }
        }
        acc
    }

    pub fn norm(&self) -> CycNum {
        self.inner(self)
    }

    pub fn to_svec(&self) -> SVec {
        SVec::from_dense(&self.c)
    }

    pub fn from_svec(v: &SVec) -> Self {
        let d = v.to_dense(8);
        Octonion { c: std::array::from_fn(|k| d[k].clone()) }
    }
}

pub fn oct_mul(x: &Octonion, y: &Octonion) -> Octonion {
    x.mul(y)
}

pub fn oct_inner(x: &Octonion, y: &Octonion) -> CycNum {
    x.inner(y)
}

pub fn oct_conj(x: &Octonion) -> Octonion {
    x.conj()
}

/// Apply an 8×8 operator to an octonion.
pub fn apply(op: &OctOperator, x: &Octonion) -> Octonion {
    Octonion::from_svec(&op.apply(&x.to_svec()))
}

/// Operator from the images of the basis vectors.
pub fn op_from_images(images: &[Octonion; 8]) -> OctOperator {
    SemilinearOp::from_columns(8, false, |j| images[j].to_svec())
}

/// Operator from a signed basis permutation: e_i ↦ sign_i · e_{perm_i}.
pub fn signed_permutation(perm: [usize; 8], sign: [i64; 8]) -> OctOperator {
    let images: [Octonion; 8] = std::array::from_fn(|i| Octonion::basis(perm[i]).scale(&CycNum::from_i64(sign[i])));
    op_from_images(&images)
}

/// True when L respects the product on all 64 basis pairs (and preserves
/// realness when it is complex-linear).
pub fn is_g2_automorphism(l: &OctOperator) -> Result<bool, FieldError> {
    l.inverse()?;
    if l.is_linear() && !l.matrix.is_real() {
        return Ok(false);
    }
    Ok(g2_violation(l).is_none())
}

/// First basis pair (i, j) with L(e_i e_j) ≠ L(e_i) L(e_j).
pub fn g2_violation(l: &OctOperator) -> Option<(usize, usize)> {
    let imgs: Vec<Octonion> = (0..8).map(|i| apply(l, &Octonion::basis(i))).collect();
    for i in 0..8 {
        for j in 0..8 {
            let lhs = apply(l, &Octonion::basis(i).mul(&Octonion::basis(j)));
            if lhs != imgs[i].mul(&imgs[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OctMapName {
    Gamma,
    GammaH,
    GammaC,
    Delta1,
    Delta2,
    Delta3,
    Delta4,
    W,
}

impl OctMapName {
    pub const ALL: [OctMapName; 8] = [
        OctMapName::Gamma,
        OctMapName::GammaH,
        OctMapName::GammaC,
        OctMapName::Delta1,
        OctMapName::Delta2,
        OctMapName::Delta3,
        OctMapName::Delta4,
        OctMapName::W,
    ];

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "gamma" => OctMapName::Gamma,
            "gamma_H" => OctMapName::GammaH,
            "gamma_C" => OctMapName::GammaC,
            "delta1" => OctMapName::Delta1,
            "delta2" => OctMapName::Delta2,
            "delta3" => OctMapName::Delta3,
            "delta4" => OctMapName::Delta4,
            "w" => OctMapName::W,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            OctMapName::Gamma => "gamma",
            OctMapName::GammaH => "gamma_H",
            OctMapName::GammaC => "gamma_C",
            OctMapName::Delta1 => "delta1",
            OctMapName::Delta2 => "delta2",
            OctMapName::Delta3 => "delta3",
            OctMapName::Delta4 => "delta4",
            OctMapName::W => "w",
        }
    }
}

/// The octonion ω1 = −1/2 + (√3/2)e1 acting on ℂ³ by left multiplication.
pub fn omega1() -> Octonion {
    let mut o = Octonion::zero();
    o.c[0] = CycNum::from_ratio(-1, 2);
    o.c[1] = CycNum::sqrt3().scale(1, 2);
    o
}

pub fn named_oct_map(name: OctMapName) -> OctOperator {
    let id = [0, 1, 2, 3, 4, 5, 6, 7];
    match name {
        // a + b e4 ↦ a − b e4
        OctMapName::Gamma => signed_permutation(id, [1, 1, 1, 1, -1, -1, -1, -1]),
        // ℍ = ℂ ⊕ ℂe2, extended to 𝕆 through x + y e4 ↦ γ_H x + (γ_H y) e4
        OctMapName::GammaH => signed_permutation(id, [1, 1, -1, -1, 1, 1, -1, -1]),
        // (a + b e2) ↦ ā + b̄ e2 on ℍ with ℂ = span{1, e1}, extended the same way
        OctMapName::GammaC => signed_permutation(id, [1, -1, 1, -1, 1, -1, 1, -1]),
        OctMapName::Delta1 => signed_permutation([0, 1, 4, 5, 2, 3, 6, 7], [1, 1, 1, 1, 1, 1, -1, -1]),
        OctMapName::Delta2 => signed_permutation([0, 1, 6, 7, 4, 5, 2, 3], [1, 1, -1, -1, -1, -1, -1, -1]),
        OctMapName::Delta3 => signed_permutation([0, 4, 2, 6, 1, 5, 3, 7], [1, 1, 1, 1, 1, -1, 1, -1]),
        OctMapName::Delta4 => signed_permutation([0, 5, 2, 7, 4, 1, 6, 3], [1, 1, 1, -1, -1, 1, -1, -1]),
        OctMapName::W => {
            // w(a + m) = a + ω1·m on ℂ ⊕ ℂ³, m on the pairs (e2,e3), (e4,e5), (e6,e7)
            let w1 = omega1();
            let images: [Octonion; 8] = std::array::from_fn(|i| {
                let e = Octonion::basis(i);
                if i < 2 {
                    e
                } else {
                    // ℂ acts on the pair (e_{2k}, e_{2k+1}) through left multiplication by e1
                    let (re, im) = (w1.c[0].clone(), w1.c[1].clone());
                    let e1e = Octonion::basis(1).mul(&e);
                    e.scale(&re).add(&e1e.scale(&im))
                }
            });
            op_from_images(&images)
        }
    }
}

/// 8×8 matrix of left multiplication by a.
pub fn left_mul_matrix(a: &Octonion) -> ExactMatrix {
    let cols: Vec<SVec> = (0..8).map(|j| a.mul(&Octonion::basis(j)).to_svec()).collect();
    ExactMatrix::from_cols(8, &cols)
}
