//! Elements of Q(ζ), ζ a primitive 24th root of unity.
//!
//! Power basis 1, ζ, …, ζ^7 modulo Φ24(x) = x^8 − x^4 + 1. Coefficients share one
//! positive denominator. Values that fit in machine words stay on an `i64` path;
//! anything larger is promoted to big integers and demoted again once it fits.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FieldError;

pub const DEGREE: usize = 8;

/// The Galois group of Q(ζ24)/Q, as exponents j with ζ ↦ ζ^j.
pub const GALOIS: [u32; 8] = [1, 5, 7, 11, 13, 17, 19, 23];

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: [i64; 8], den: i64 },
    Big(Box<BigRepr>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct BigRepr {
    num: [BigInt; 8],
    den: BigInt,
}

/// Exact element of Q(ζ24), always stored in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum(Repr);

const SMALL_MAX: i128 = i64::MAX as i128;

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn fits(v: i128) -> bool {
    (-SMALL_MAX..=SMALL_MAX).contains(&v)
}

fn normalize_i128(mut num: [i128; 8], mut den: i128) -> CycNum {
    debug_assert!(den != 0);
    if num.iter().all(|&v| v == 0) {
        return CycNum::zero();
    }
    if den < 0 {
        // den is a product of two i64 magnitudes, so negation cannot overflow
        den = -den;
        for v in num.iter_mut() {
            *v = -*v;
        }
    }
    let mut g = den as u128;
    for &v in &num {
        if g == 1 {
            break;
        }
        if v != 0 {
            g = gcd_u128(g, v.unsigned_abs());
        }
    }
    if g > 1 {
        let g = g as i128;
        den /= g;
        for v in num.iter_mut() {
            *v /= g;
        }
    }
    if fits(den) && num.iter().all(|&v| fits(v)) {
        let mut n = [0i64; 8];
        for k in 0..8 {
            n[k] = num[k] as i64;
        }
        CycNum(Repr::Small { num: n, den: den as i64 })
    } else {
        let n: [BigInt; 8] = std::array::from_fn(|k| BigInt::from(num[k]));
        CycNum(Repr::Big(Box::new(BigRepr { num: n, den: BigInt::from(den) })))
    }
}

fn normalize_big(mut num: [BigInt; 8], mut den: BigInt) -> CycNum {
    if num.iter().all(|v| v.is_zero()) {
        return CycNum::zero();
    }
    if den.is_negative() {
        den = -den;
        for v in num.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
    let mut g = den.clone();
    for v in &num {
        if g.is_one() {
            break;
        }
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    if !g.is_one() {
        den /= &g;
        for v in num.iter_mut() {
            *v /= &g;
        }
    }
    let small_den = den.to_i64().filter(|d| *d != i64::MIN);
    if let Some(d) = small_den {
        let mut n = [0i64; 8];
        let mut ok = true;
        for k in 0..8 {
            match num[k].to_i64() {
                Some(x) if x != i64::MIN => n[k] = x,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return CycNum(Repr::Small { num: n, den: d });
        }
    }
    CycNum(Repr::Big(Box::new(BigRepr { num, den })))
}

/// Reduce a product polynomial of degree ≤ 14 with x^8 = x^4 − 1.
fn reduce_poly_i128(c: &mut [i128; 15]) -> Option<()> {
    for k in (8..15).rev() {
        let v = c[k];
        if v != 0 {
            c[k - 4] = c[k - 4].checked_add(v)?;
            c[k - 8] = c[k - 8].checked_sub(v)?;
            c[k] = 0;
        }
    }
    Some(())
}

fn reduce_poly_big(c: &mut [BigInt]) {
    for k in (8..c.len()).rev() {
        if !c[k].is_zero() {
            let v = std::mem::take(&mut c[k]);
            c[k - 4] += &v;
            c[k - 8] -= &v;
        }
    }
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum(Repr::Small { num: [0; 8], den: 1 })
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut num = [0i128; 8];
        num[0] = n as i128;
        normalize_i128(num, d as i128)
    }

    /// Build from rational coefficients in the power basis.
    pub fn from_rationals(coeffs: &[BigRational; 8]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num: [BigInt; 8] =
            std::array::from_fn(|k| coeffs[k].numer() * (&den / coeffs[k].denom()));
        normalize_big(num, den)
    }

    /// Integer coefficients over a common denominator.
    pub fn from_coeffs(num: [i64; 8], den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        normalize_i128(num.map(|v| v as i128), den as i128)
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        zeta_table()[k.rem_euclid(24) as usize].clone()
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// i = ζ^6.
    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// ω = ζ^8, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::zeta_pow(8)
    }

    /// √2 = ζ^3 + ζ^21.
    pub fn sqrt2() -> Self {
        Self::zeta_pow(3).add(&Self::zeta_pow(21))
    }

    /// √3 = ζ^2 + ζ^22.
    pub fn sqrt3() -> Self {
        Self::zeta_pow(2).add(&Self::zeta_pow(22))
    }

    /// 1/√8 = √2/4.
    pub fn inv_sqrt8() -> Self {
        Self::sqrt2().mul(&Self::from_ratio(1, 4))
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => num.iter().all(|&v| v == 0),
            Repr::Big(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Small { num, den } if *den == 1 && num[0] == 1 && num[1..].iter().all(|&v| v == 0))
    }

    /// True when only the constant coefficient is nonzero.
    pub fn is_rational(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => num[1..].iter().all(|&v| v == 0),
            Repr::Big(b) => b.num[1..].iter().all(|v| v.is_zero()),
        }
    }

    /// Rational coefficient of ζ^k.
    pub fn coeff(&self, k: usize) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new(BigInt::from(num[k]), BigInt::from(*den)),
            Repr::Big(b) => BigRational::new(b.num[k].clone(), b.den.clone()),
        }
    }

    pub fn coeffs(&self) -> [BigRational; 8] {
        std::array::from_fn(|k| self.coeff(k))
    }

    fn to_big(&self) -> ([BigInt; 8], BigInt) {
        match &self.0 {
            Repr::Small { num, den } => (num.map(BigInt::from), BigInt::from(*den)),
            Repr::Big(b) => (b.num.clone(), b.den.clone()),
        }
    }

    /// Rough size measure used to prefer cheap pivots.
    pub fn weight(&self) -> u64 {
        match &self.0 {
            Repr::Small { num, den } => {
                let nz = num.iter().filter(|&&v| v != 0).count() as u64;
                let mag = num.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0).max(*den as u64);
                nz * 64 + (64 - mag.leading_zeros() as u64)
            }
            Repr::Big(b) => {
                let nz = b.num.iter().filter(|v| !v.is_zero()).count() as u64;
                let bits = b.num.iter().map(|v| v.bits()).max().unwrap_or(0).max(b.den.bits());
                nz * 64 + bits
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) => {
                let mut n = [0i128; 8];
                if da == db {
                    for k in 0..8 {
                        n[k] = a[k] as i128 + b[k] as i128;
                    }
                    normalize_i128(n, *da as i128)
                } else {
                    let (da, db) = (*da as i128, *db as i128);
                    for k in 0..8 {
                        n[k] = a[k] as i128 * db + b[k] as i128 * da;
                    }
                    normalize_i128(n, da * db)
                }
            }
            _ => {
                let (a, da) = self.to_big();
                let (b, db) = other.to_big();
                let n: [BigInt; 8] = std::array::from_fn(|k| &a[k] * &db + &b[k] * &da);
                normalize_big(n, da * db)
            }
        }
    }

    pub fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => CycNum(Repr::Small { num: num.map(|v| -v), den: *den }),
            Repr::Big(b) => CycNum(Repr::Big(Box::new(BigRepr {
                num: b.num.clone().map(|v| -v),
                den: b.den.clone(),
            }))),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) = (&self.0, &other.0) {
            if let Some(r) = mul_small(a, *da, b, *db) {
                return r;
            }
        }
        let (a, da) = self.to_big();
        let (b, db) = other.to_big();
        let mut c: Vec<BigInt> = vec![BigInt::zero(); 15];
        for i in 0..8 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if !b[j].is_zero() {
                    c[i + j] += &a[i] * &b[j];
                }
            }
        }
        reduce_poly_big(&mut c);
        c.truncate(8);
        let n: [BigInt; 8] = std::array::from_fn(|k| std::mem::take(&mut c[k]));
        normalize_big(n, da * db)
    }

    /// Multiply by a small rational.
    pub fn scale(&self, n: i64, d: i64) -> Self {
        self.mul(&Self::from_ratio(n, d))
    }

    /// Image under ζ ↦ ζ^j (j coprime to 24).
    pub fn galois(&self, j: u32) -> Self {
        if j % 24 == 1 || self.is_rational() {
            return self.clone();
        }
        let table = zeta_table();
        match &self.0 {
            Repr::Small { num, den } => {
                let mut acc = [0i128; 8];
                for k in 0..8 {
                    if num[k] == 0 {
                        continue;
                    }
                    let p = ((k as u32 * j) % 24) as usize;
                    let Repr::Small { num: zp, .. } = &table[p].0 else { unreachable!() };
                    for l in 0..8 {
                        acc[l] += num[k] as i128 * zp[l] as i128;
                    }
                }
                normalize_i128(acc, *den as i128)
            }
            Repr::Big(b) => {
                let mut acc: [BigInt; 8] = std::array::from_fn(|_| BigInt::zero());
                for k in 0..8 {
                    if b.num[k].is_zero() {
                        continue;
                    }
                    let p = ((k as u32 * j) % 24) as usize;
                    let Repr::Small { num: zp, .. } = &table[p].0 else { unreachable!() };
                    for l in 0..8 {
                        if zp[l] != 0 {
                            acc[l] += &b.num[k] * zp[l];
                        }
                    }
                }
                normalize_big(acc, b.den.clone())
            }
        }
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(23)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Field norm to Q, returned as an element with only a constant term.
    pub fn norm(&self) -> Self {
        let mut acc = self.clone();
        for &j in &GALOIS[1..] {
            acc = acc.mul(&self.galois(j));
        }
        acc
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.is_rational() {
            let (n, d) = self.to_big();
            let mut num: [BigInt; 8] = std::array::from_fn(|_| BigInt::zero());
            num[0] = d;
            return Ok(normalize_big(num, n[0].clone()));
        }
        // product of the seven nontrivial conjugates, divided by the norm
        let mut cof = Self::one();
        for &j in &GALOIS[1..] {
            cof = cof.mul(&self.galois(j));
        }
        let n = self.mul(&cof);
        debug_assert!(n.is_rational());
        Ok(cof.mul(&n.inv()?))
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exponent k with self = ζ^k, if self is a 24th root of unity.
    pub fn root_of_unity_index(&self) -> Option<u32> {
        let table = zeta_table();
        (0..24).find(|&k| table[k as usize] == *self)
    }

    /// Real and imaginary parts, both in the real subfield.
    pub fn re_im(&self) -> (Self, Self) {
        let c = self.conj();
        let re = self.add(&c).scale(1, 2);
        // (z − z̄)/(2i) = −i(z − z̄)/2
        let im = self.sub(&c).mul(&Self::i()).scale(-1, 2);
        (re, im)
    }

    /// Exact sign of a real element.
    pub fn sign(&self) -> Result<Ordering, FieldError> {
        if !self.is_real() {
            return Err(FieldError::NotReal);
        }
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        let [a, b, c, d] = real_coordinates(self);
        // self = (a + b√2) + √3(c + d√2)
        Ok(sign_q2_q3(&a, &b, &c, &d))
    }

    /// Floating-point approximation of real and imaginary parts.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for k in 0..8 {
            let c = self.coeff(k);
            let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let ang = std::f64::consts::PI * (k as f64) / 12.0;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Serialized form: eight "num/den" strings.
    pub fn to_strings(&self) -> Vec<String> {
        (0..8)
            .map(|k| {
                let c = self.coeff(k);
                format!("{}/{}", c.numer(), c.denom())
            })
            .collect()
    }

    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self, FieldError> {
        if parts.len() != 8 {
            return Err(FieldError::Parse(format!("expected 8 coefficients, got {}", parts.len())));
        }
        let mut coeffs: Vec<BigRational> = Vec::with_capacity(8);
        for p in parts {
            let s = p.as_ref().trim();
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (n, d),
                None => (s, "1"),
            };
            let n: BigInt = n.trim().parse().map_err(|_| FieldError::Parse(s.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|_| FieldError::Parse(s.to_string()))?;
            if d.is_zero() {
                return Err(FieldError::Parse(format!("zero denominator in {s}")));
            }
            coeffs.push(BigRational::new(n, d));
        }
        let arr: [BigRational; 8] = std::array::from_fn(|k| coeffs[k].clone());
        Ok(Self::from_rationals(&arr))
    }
}

fn mul_small(a: &[i64; 8], da: i64, b: &[i64; 8], db: i64) -> Option<CycNum> {
    let a_rat = a[1..].iter().all(|&v| v == 0);
    let b_rat = b[1..].iter().all(|&v| v == 0);
    let den = da as i128 * db as i128;
    if a_rat || b_rat {
        let (s, v) = if a_rat { (a[0] as i128, b) } else { (b[0] as i128, a) };
        let mut n = [0i128; 8];
        for k in 0..8 {
            n[k] = s * v[k] as i128;
        }
        return Some(normalize_i128(n, den));
    }
    let mut c = [0i128; 15];
    for i in 0..8 {
        if a[i] == 0 {
            continue;
        }
        for j in 0..8 {
            if b[j] != 0 {
                c[i + j] = c[i + j].checked_add(a[i] as i128 * b[j] as i128)?;
            }
        }
    }
    reduce_poly_i128(&mut c)?;
    let n: [i128; 8] = std::array::from_fn(|k| c[k]);
    Some(normalize_i128(n, den))
}

fn zeta_table() -> &'static [CycNum; 24] {
    static TABLE: OnceLock<[CycNum; 24]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out: Vec<CycNum> = Vec::with_capacity(24);
        let mut cur = [0i64; 8];
        cur[0] = 1;
        for _ in 0..24 {
            out.push(CycNum(Repr::Small { num: cur, den: 1 }));
            // multiply by x, then x^8 = x^4 − 1
            let top = cur[7];
            for k in (1..8).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = -top;
            cur[4] += top;
        }
        std::array::from_fn(|k| out[k].clone())
    })
}

/// Coordinates (a, b, c, d) of a real element in the basis 1, √2, √3, √6.
fn real_coordinates(z: &CycNum) -> [BigRational; 4] {
    static BASIS: OnceLock<[CycNum; 4]> = OnceLock::new();
    let basis = BASIS.get_or_init(|| {
        let s2 = CycNum::sqrt2();
        let s3 = CycNum::sqrt3();
        [CycNum::one(), s2.clone(), s3.clone(), s2.mul(&s3)]
    });
    // Solve the 8×4 rational system by elimination on an augmented copy.
    let mut rows: Vec<Vec<BigRational>> = (0..8)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b.coeff(r)).collect();
            row.push(z.coeff(r));
            row
        })
        .collect();
    let mut piv_row = 0;
    let mut pivots = Vec::new();
    for col in 0..4 {
        let Some(p) = (piv_row..8).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(piv_row, p);
        let inv = rows[piv_row][col].recip();
        for v in rows[piv_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..8 {
            if r != piv_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..5 {
                    let t = &rows[piv_row][c] * &f;
                    rows[r][c] = &rows[r][c] - t;
                }
            }
        }
        pivots.push(col);
        piv_row += 1;
    }
    debug_assert_eq!(pivots.len(), 4);
    std::array::from_fn(|k| rows[k][4].clone())
}

fn sign_of(q: &BigRational) -> Ordering {
    q.cmp(&BigRational::zero())
}

/// Sign of p + q√2.
fn sign_q2(p: &BigRational, q: &BigRational) -> Ordering {
    let sp = sign_of(p);
    let sq = sign_of(q);
    if sp == sq || sq == Ordering::Equal {
        return sp;
    }
    if sp == Ordering::Equal {
        return sq;
    }
    // opposite signs: compare p² with 2q²
    let two = BigRational::from_integer(BigInt::from(2));
    let diff = p * p - two * q * q;
    match sp {
        Ordering::Greater => sign_of(&diff),
        _ => sign_of(&diff).reverse(),
    }
}

/// Sign of (a + b√2) + √3(c + d√2).
fn sign_q2_q3(a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> Ordering {
    let su = sign_q2(a, b);
    let sv = sign_q2(c, d);
    if su == sv || sv == Ordering::Equal {
        return su;
    }
    if su == Ordering::Equal {
        return sv;
    }
    // u² − 3v² with u² = a² + 2b² + 2ab√2 and v² = c² + 2d² + 2cd√2
    let two = BigRational::from_integer(BigInt::from(2));
    let three = BigRational::from_integer(BigInt::from(3));
    let p = a * a + &two * b * b - &three * (c * c + &two * d * d);
    let q = &two * a * b - &three * &two * c * d;
    let s = sign_q2(&p, &q);
    match su {
        Ordering::Greater => s,
        _ => s.reverse(),
    }
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in 0..8 {
            let c = self.coeff(k);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                CycNum::$f(self, rhs)
            }
        }
        impl std::ops::$tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                CycNum::$f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

impl std::ops::Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(&self)
    }
}

impl From<i64> for CycNum {
    fn from(v: i64) -> Self {
        CycNum::from_i64(v)
    }
}

impl serde::Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        CycNum::from_strings(&v).map_err(serde::de::Error::custom)
    }
}
