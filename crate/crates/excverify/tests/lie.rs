use std::sync::OnceLock;

use excverify::e8::{self, BracketRows};
use excverify::exactfield::SVec;
use excverify::harness::{Context, RunConfig};
use excverify::liealg::{pair_commutes_ad, AlgebraId};
use excverify::words::{self, Level, WordError};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::new(RunConfig::default()))
}

fn e8_vec() -> impl Strategy<Value = SVec> {
    (any::<u64>(), 0usize..4).prop_map(|(seed, block)| {
        let (lo, hi) = [(0, e8::P0), (e8::P0, e8::Q0), (e8::Q0, e8::R), (0, e8::DIM)][block];
        e8::random_slot_vec(&mut ChaCha8Rng::seed_from_u64(seed), lo, hi, 3)
    })
}

#[test]
fn small_algebras_have_expected_fixed_dims() {
    let g2 = ctx().basis(AlgebraId::G2).unwrap();
    assert_eq!(g2.act_word("gamma").unwrap().fixed_dim().unwrap(), 6);
    let f4 = ctx().basis(AlgebraId::F4).unwrap();
    let s = f4.act_word("sigma").unwrap();
    let sp = f4.act_word("sigma_prime").unwrap();
    assert!(s.involutive && sp.involutive && pair_commutes_ad(&s, &sp));
    let k = f4.fixed_subalgebra(&[&s, &sp], true).unwrap();
    assert_eq!((k.dim, k.center_dim, k.derived_dim, k.killing_negdef), (28, 0, 28, Some(true)));
    let e6 = ctx().basis(AlgebraId::E6).unwrap();
    assert_eq!(e6.act_word("lambda").unwrap().fixed_dim().unwrap(), 52);
    assert_eq!(e6.act_word("-sigma").unwrap().fixed_dim().unwrap(), 46);
}

#[test]
fn unknown_maps_are_errors() {
    let f4 = ctx().basis(AlgebraId::F4).unwrap();
    assert!(f4.act_word("tau").is_err());
    assert!(f4.act_word("nonsense").is_err());
    assert!(ctx().basis(AlgebraId::G2).unwrap().act_word("sigma").is_err());
}

#[test]
fn word_grammar() {
    let j = |w| words::group_word(Level::Jordan, w, None);
    assert!(j("phi1(3)^-1 phi1(3)").unwrap().is_identity());
    assert!(j("sigma^2").unwrap().is_identity());
    assert_eq!(j("sigma*sigma_prime").unwrap(), j("sigma_prime.sigma").unwrap());
    assert_eq!(j("-1").unwrap(), j("1").unwrap().neg());
    assert_eq!(j("delta9^T").unwrap(), j("delta9").unwrap());
    assert!(matches!(j(""), Err(WordError::Empty)));
    assert!(matches!(j("phi1(3"), Err(WordError::Malformed(_))));
    assert!(matches!(j("bogus"), Err(WordError::Unknown(..))));
    assert!(words::group_word(Level::Oct, "gamma^T", None).is_err());
    assert!(words::group_word(Level::E8, "upsilon", None).is_err());
    let f = |w| words::group_word(Level::Freudenthal, w, None).unwrap();
    assert_eq!(f("lambda phi(1) lambda^-1"), f("phi(-1)"));
    assert_eq!(f("lambda^2"), f("-1"));
}

#[test]
fn literal_row_labels_break_jacobi() {
    let sp = ctx().e8_space().unwrap();
    let lit = sp.table(BracketRows::Literal).unwrap();
    let std = &ctx().basis(AlgebraId::E8).unwrap().table;
    assert_ne!(&lit, std);
    let bad = (e8::P0..e8::Q0).any(|i| (e8::Q0..e8::R).any(|j| !lit.jacobi_sum(i, j, e8::R).is_zero()));
    assert!(bad);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn e8_bracket_is_antisymmetric(u in e8_vec(), v in e8_vec()) {
        let sp = ctx().e8_space().unwrap();
        let (a, b) = (sp.from_coords(&u), sp.from_coords(&v));
        let ab = e8::bracket(&a, &b).unwrap();
        prop_assert!(ab.add(&e8::bracket(&b, &a).unwrap()).is_zero());
    }

    #[test]
    fn e8_routes_agree_and_jacobi_holds(u in e8_vec(), v in e8_vec(), w in e8_vec()) {
        let sp = ctx().e8_space().unwrap();
        let (a, b, c) = (sp.from_coords(&u), sp.from_coords(&v), sp.from_coords(&w));
        let op = sp.to_coords(&e8::bracket(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(op, sp.bracket_coords(&u, &v, BracketRows::Standard));
        prop_assert!(e8::jacobi_check(&a, &b, &c).unwrap());
    }
}
