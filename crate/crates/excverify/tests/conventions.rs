use excverify::cayley::{self, named_oct_map, OctMapName};
use excverify::exactfield::CycNum;
use excverify::freudenthal::{self, named_f_map, FMapName, MembershipMode};
use excverify::jordan::{self, named_jordan_map, JordanMapName as J};

#[test]
fn g2_gate() {
    for n in OctMapName::ALL {
        let op = named_oct_map(n);
        assert_eq!(cayley::g2_violation(&op), None, "{:?}", n);
    }
    let g = named_oct_map(OctMapName::Gamma);
    let gh = named_oct_map(OctMapName::GammaH);
    let gc = named_oct_map(OctMapName::GammaC);
    let d = |k| named_oct_map([OctMapName::Delta1, OctMapName::Delta2, OctMapName::Delta3, OctMapName::Delta4][k]);
    assert_eq!(d(0).compose(&g), gh.compose(&d(0)));
    assert_eq!(d(1).compose(&g), g.compose(&gh).compose(&d(1)));
    assert_eq!(d(2).compose(&g), gc.compose(&d(2)));
    assert_eq!(d(3).compose(&g), g.compose(&gc).compose(&d(3)));
    assert!(named_oct_map(OctMapName::W).pow(3).is_identity());
}

#[test]
fn jordan_gate() {
    for m in [J::Sigma, J::SigmaPrime, J::Gamma, J::GammaH, J::GammaC, J::Delta(5), J::Delta(6), J::Delta(7)] {
        let op = named_jordan_map(&m).unwrap();
        assert_eq!(jordan::f4_violation(&op), None, "{:?}", m);
    }
    for m in [J::Delta9, J::Rho2, J::Phi1(CycNum::zeta_pow(3)), J::Phi2(CycNum::zeta_pow(2))] {
        let op = named_jordan_map(&m).unwrap();
        assert_eq!(jordan::e6_violation(&op), None, "{:?}", m);
    }
    let s = named_jordan_map(&J::Sigma).unwrap();
    let sp = named_jordan_map(&J::SigmaPrime).unwrap();
    let g = named_jordan_map(&J::Gamma).unwrap();
    let d5 = named_jordan_map(&J::Delta(5)).unwrap();
    let d6 = named_jordan_map(&J::Delta(6)).unwrap();
    let d7 = named_jordan_map(&J::Delta(7)).unwrap();
    assert_eq!(d5.compose(&g), g.compose(&s).compose(&d5));
    assert_eq!(d6.compose(&s), sp.compose(&d6));
    assert_eq!(d7.compose(&s), s.compose(&sp).compose(&d7));
    let r = named_jordan_map(&J::Rho2).unwrap();
    assert!(r.compose(&r).is_identity());
}

#[test]
fn e7_gate() {
    for m in [FMapName::Lambda, FMapName::Iota, FMapName::Gamma, FMapName::Sigma, FMapName::DeltaLambda, FMapName::DeltaIota, FMapName::Delta10] {
        let op = named_f_map(&m).unwrap();
        assert_eq!(freudenthal::e7_violation(&op, MembershipMode::Sampled(60, 1)), None, "{:?}", m);
    }
    let l = named_f_map(&FMapName::Lambda).unwrap();
    let io = named_f_map(&FMapName::Iota).unwrap();
    let dl = named_f_map(&FMapName::DeltaLambda).unwrap();
    assert_eq!(dl.compose(&io), l.compose(&dl));
    let d10 = named_f_map(&FMapName::Delta10).unwrap();
    let s = named_f_map(&FMapName::Sigma).unwrap();
    assert_eq!(d10.compose(&io), io.compose(&s).neg().compose(&d10));
}
