use excverify::cayley::Octonion;
use excverify::exactfield::{CycNum, SVec};
use excverify::jordan::{self, JordanElem};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn cyc() -> impl Strategy<Value = CycNum> {
    (prop::array::uniform8(small()), 1i64..=3).prop_map(|(c, d)| CycNum::from_coeffs(c, d))
}

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(small()).prop_map(Octonion::from_ints)
}

fn jordan_elem() -> impl Strategy<Value = JordanElem> {
    prop::collection::vec((small(), small()), jordan::DIM).prop_map(|v| {
        let i = CycNum::i();
        let pairs = v
            .into_iter()
            .enumerate()
            .map(|(k, (a, b))| (k, CycNum::from_i64(a).add(&i.mul(&CycNum::from_i64(b)))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        JordanElem::from_svec(&SVec::from_pairs(pairs))
    })
}

/// Schoolbook product reduced by x^8 = x^4 - 1 (the 24th cyclotomic polynomial).
fn naive_mul(a: &[i64; 8], b: &[i64; 8]) -> [i64; 8] {
    let mut p = [0i64; 15];
    for i in 0..8 {
        for j in 0..8 {
            p[i + j] += a[i] * b[j];
        }
    }
    for k in (8..15).rev() {
        let c = p[k];
        p[k] = 0;
        p[k - 4] += c;
        p[k - 8] -= c;
    }
    std::array::from_fn(|k| p[k])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cyclotomic_product_matches_polynomial_oracle(a in prop::array::uniform8(small()), b in prop::array::uniform8(small())) {
        let got = CycNum::from_coeffs(a, 1).mul(&CycNum::from_coeffs(b, 1));
        let want = naive_mul(&a, &b);
        for k in 0..8 {
            prop_assert_eq!(got.coeff(k), BigRational::from_integer(BigInt::from(want[k])));
        }
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_agrees_with_complex_floats(a in cyc(), b in cyc()) {
        let (x, y) = (a.to_complex_f64(), b.to_complex_f64());
        let p = a.mul(&b).to_complex_f64();
        prop_assert!((p.0 - (x.0 * y.0 - x.1 * y.1)).abs() < 1e-9);
        prop_assert!((p.1 - (x.0 * y.1 + x.1 * y.0)).abs() < 1e-9);
    }

    #[test]
    fn octonions_are_alternative_and_moufang(x in octonion(), y in octonion(), z in octonion()) {
        prop_assert_eq!(x.mul(&x).mul(&y), x.mul(&x.mul(&y)));
        prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
        prop_assert_eq!(z.mul(&x.mul(&z.mul(&y))), z.mul(&x).mul(&z).mul(&y));
        prop_assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
    }

    #[test]
    fn octonion_conjugation_reverses_products(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
    }

    #[test]
    fn trilinear_form_is_symmetric(x in jordan_elem(), y in jordan_elem(), z in jordan_elem()) {
        let v = jordan::trilinear(&x, &y, &z);
        prop_assert_eq!(&v, &jordan::trilinear(&y, &x, &z));
        prop_assert_eq!(&v, &jordan::trilinear(&x, &z, &y));
        prop_assert_eq!(&v, &jordan::trilinear(&z, &y, &x));
    }

    #[test]
    fn cross_product_is_symmetric_and_det_cubic(x in jordan_elem(), y in jordan_elem()) {
        prop_assert_eq!(jordan::cross(&x, &y), jordan::cross(&y, &x));
        let three = CycNum::from_i64(3);
        prop_assert_eq!(jordan::det(&x.scale(&three)), jordan::det(&x).mul(&three.pow(3)));
    }
}
