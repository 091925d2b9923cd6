//! Worked values for the public maps, each derived by hand.

use evenfarey::cf::{
    farey_natext_step, farey_slowdown_check, farey_step, gauss_natext_step, gauss_step, rcf_eval,
    rcf_expand,
};
use evenfarey::cutting::{classify_point, recode_series_to_even, symbols_to_string, Symbol, ThetaOrbit};
use evenfarey::ecf::{
    ecf_eval, ecf_expand, even_farey_natext_step, even_farey_step, even_gauss_natext_step,
    even_gauss_step, even_slowdown_check, ext_ecf_eval, ext_ecf_expand, Sign,
};
use evenfarey::measure::{density_eval, pushforward_residual, DensityId, NatextMap};
use evenfarey::numeric::rat;
use evenfarey::section::{
    j_forward, k_e_forward, lehner_dual_step, lehner_natext_step, lehner_step, rho_step,
    sigma_e_step, sigma_l_step, sigma_step, tilde_f_e_step, tilde_t_e_step, Domain, EndpointPair,
    StatePoint,
};
use evenfarey::{BoundaryPoint, IntegerMoebius};

fn bp(s: &str) -> BoundaryPoint {
    s.parse().unwrap()
}

fn pair((x, y): (BoundaryPoint, BoundaryPoint)) -> String {
    format!("({x}, {y})")
}

fn ends(p: EndpointPair) -> String {
    format!("({}, {})", p.fwd, p.bwd)
}

#[test]
fn exact_arithmetic() {
    assert_eq!(bp("2/5").add(&bp("1/10")).unwrap(), bp("1/2"));
    assert_eq!(bp("7/3").mul(&bp("0")).unwrap(), bp("0"));
    assert!(bp("1/3").div(&bp("0")).is_err());
    assert_eq!(bp("sqrt(2)").floor().unwrap(), 1.into());
    assert_eq!(bp("(1+sqrt(2))/2").floor().unwrap(), 1.into());
    assert_eq!(bp("-sqrt(2)").floor().unwrap(), (-2).into());
    assert!(bp("2/3") > bp("3/5"));
    assert!(bp("sqrt(2)") < bp("3/2"));
}

#[test]
fn moebius_actions() {
    let t2 = IntegerMoebius::new(1, 2, 0, 1).unwrap();
    let s = IntegerMoebius::s();
    assert_eq!(t2.apply(&bp("1/3")), bp("7/3"));
    assert_eq!(s.apply(&BoundaryPoint::Infinity), bp("0"));
    assert_eq!(s.apply(&bp("sqrt(2)")), bp("-sqrt(2)/2"));
    assert!(t2.in_theta() && t2.in_gamma2());
    let t1 = IntegerMoebius::new(1, 1, 0, 1).unwrap();
    assert!(!t1.in_theta() && !t1.in_gamma2());
    assert_eq!(s.derivative_at(&rat(2, 1)).unwrap(), rat(1, 4));
    let m = IntegerMoebius::new(1, 0, 2, 1).unwrap();
    assert_eq!(m.derivative_at(&rat(1, 1)).unwrap(), rat(1, 9));
}

#[test]
fn regular_maps() {
    assert_eq!(gauss_step(&bp("0")).unwrap(), (None, bp("0")));
    assert_eq!(gauss_step(&bp("2/5")).unwrap(), (Some(2.into()), bp("1/2")));
    assert_eq!(gauss_step(&bp("sqrt(2)-1")).unwrap(), (Some(2.into()), bp("sqrt(2)-1")));
    assert_eq!(pair(gauss_natext_step(&bp("2/5"), &bp("1/2")).unwrap()), "(1/2, 2/5)");
    assert_eq!(pair(gauss_natext_step(&bp("1/2"), &bp("0")).unwrap()), "(0, 1/2)");
    assert_eq!(pair(gauss_natext_step(&bp("sqrt(2)-1"), &bp("0")).unwrap()), "(-1+sqrt(2), 1/2)");
    assert_eq!(farey_step(&bp("2/7")).unwrap(), bp("2/5"));
    assert_eq!(farey_step(&bp("2/3")).unwrap(), bp("1/2"));
    assert_eq!(farey_step(&bp("0")).unwrap(), bp("0"));
    assert_eq!(pair(farey_natext_step(&bp("1/3"), &bp("1/2")).unwrap()), "(1/2, 1/3)");
    assert_eq!(pair(farey_natext_step(&bp("1/2"), &bp("0")).unwrap()), "(1, 1)");
    assert_eq!(pair(farey_natext_step(&bp("0"), &bp("1/3")).unwrap()), "(0, 1/4)");
    for x in ["2/7", "2/5", "1/2"] {
        assert!(farey_slowdown_check(&bp(x)).unwrap(), "{x}");
    }
}

#[test]
fn regular_expansions() {
    assert_eq!(rcf_expand(&bp("7/3"), 100).unwrap().to_string(), "[2;3]");
    assert_eq!(rcf_expand(&bp("355/113"), 100).unwrap().to_string(), "[3;7,16]");
    assert_eq!(rcf_expand(&bp("sqrt(2)"), 100).unwrap().to_string(), "[1;(2)]");
    assert_eq!(rcf_expand(&bp("0"), 100).unwrap().to_string(), "[0]");
    assert_eq!(rcf_eval(&rcf_expand(&bp("2/5"), 100).unwrap()), bp("2/5"));
}

#[test]
fn even_maps() {
    let digit = |x: &str| {
        let (d, y) = even_gauss_step(&bp(x)).unwrap();
        format!("{} {y}", d.unwrap())
    };
    assert_eq!(digit("2/5"), "(2,+1) 1/2");
    assert_eq!(digit("4/7"), "(2,-1) 1/4");
    assert_eq!(digit("1"), "(2,-1) 1");
    assert_eq!(pair(even_gauss_natext_step(&bp("2/5"), &bp("1/3")).unwrap()), "(1/2, 3/7)");
    assert_eq!(pair(even_gauss_natext_step(&bp("4/7"), &bp("0")).unwrap()), "(1/4, -1/2)");
    assert_eq!(pair(even_gauss_natext_step(&bp("0"), &bp("-2/3")).unwrap()), "(0, -2/3)");
    assert_eq!(even_farey_step(&bp("1/4")).unwrap(), bp("1/2"));
    assert_eq!(even_farey_step(&bp("2/5")).unwrap(), bp("1/2"));
    assert_eq!(even_farey_step(&bp("1")).unwrap(), bp("1"));
    assert_eq!(pair(even_farey_natext_step(&bp("1/4"), &bp("1/2")).unwrap()), "(1/2, 1/4)");
    assert_eq!(pair(even_farey_natext_step(&bp("2/5"), &bp("1/3")).unwrap()), "(1/2, 3/7)");
    assert_eq!(pair(even_farey_natext_step(&bp("3/4"), &bp("0")).unwrap()), "(2/3, 1/2)");
    for (x, k) in [("2/5", 1), ("1/5", 2), ("1/7", 3)] {
        assert_eq!(even_slowdown_check(&bp(x)).unwrap(), (k.into(), true), "{x}");
    }
}

#[test]
fn even_expansions() {
    let e = ecf_expand(&bp("7/2"), 100).unwrap();
    assert_eq!(e.leading.as_ref().unwrap().to_string(), "(4,-1)");
    assert_eq!(ecf_eval(&e), bp("7/2"));
    let e = ecf_expand(&bp("5/2"), 100).unwrap();
    assert_eq!(e.leading.as_ref().unwrap().to_string(), "(2,+1)");
    let e = ecf_expand(&bp("1/5"), 100).unwrap();
    assert_eq!(e.to_string(), "[[(6,-1),((2,-1))]]");
    assert_eq!(ecf_eval(&e), bp("1/5"));
    assert_eq!(ecf_eval(&ecf_expand(&bp("2/5"), 100).unwrap()), bp("2/5"));
    for y in ["1/2", "-3/7", "1", "-1", "0", "5/8"] {
        let x = ext_ecf_expand(&bp(y), 100).unwrap();
        assert_eq!(ext_ecf_eval(&x), bp(y), "{y}: {x}");
    }
    assert_eq!(ext_ecf_expand(&bp("1/2"), 100).unwrap().digits[0].to_string(), "(+1/2)");
}

#[test]
fn section_maps() {
    let p = |f: &str, b: &str, d| EndpointPair::parse(f, b, d).unwrap();
    assert_eq!(ends(rho_step(&p("7/3", "-1/2", Domain::S)).unwrap()), "(-3, 2/5)");
    assert_eq!(ends(rho_step(&p("-7/2", "1/3", Domain::S)).unwrap()), "(2, -3/10)");
    assert_eq!(ends(sigma_step(&p("7/3", "-1/2", Domain::T)).unwrap()), "(4/3, -3/2)");
    assert_eq!(ends(sigma_step(&p("4/3", "-3/2", Domain::T)).unwrap()), "(-3, 2/5)");
    assert_eq!(ends(sigma_step(&p("5/2", "-1/4", Domain::T)).unwrap()), "(3/2, -5/4)");
    assert_eq!(ends(sigma_e_step(&p("5", "-3", Domain::Te)).unwrap()), "(3, -5)");
    assert_eq!(ends(sigma_e_step(&p("5/2", "1/3", Domain::Te)).unwrap()), "(-2, 3/5)");
    assert_eq!(ends(sigma_e_step(&p("3/2", "1/2", Domain::Te)).unwrap()), "(2, 2/3)");
    assert_eq!(ends(sigma_l_step(&p("4/3", "0", Domain::SL)).unwrap()), "(3/2, 1/2)");
    assert_eq!(ends(sigma_l_step(&p("7/4", "1/2", Domain::SL)).unwrap()), "(-4/3, 2)");
    assert_eq!(ends(sigma_l_step(&p("-4/3", "0", Domain::SL)).unwrap()), "(-3/2, -1/2)");
}

#[test]
fn lehner_maps() {
    assert_eq!(lehner_step(&bp("4/3")).unwrap(), bp("3/2"));
    assert_eq!(lehner_step(&bp("7/4")).unwrap(), bp("4/3"));
    assert_eq!(pair(lehner_natext_step(&bp("4/3"), &bp("0")).unwrap()), "(3/2, -1/2)");
    assert_eq!(lehner_dual_step(&bp("3/5")).unwrap(), bp("2/3"));
    assert_eq!(lehner_dual_step(&bp("3/4")).unwrap(), bp("2/3"));
    assert_eq!(lehner_dual_step(&bp("1")).unwrap(), bp("1"));
}

#[test]
fn signed_square_maps() {
    let s = |x: &str, y: &str, e| StatePoint::signed(bp(x), bp(y), e);
    assert_eq!(tilde_t_e_step(&s("2/5", "-1/3", Sign::Plus)).unwrap().to_string(), "(1/2, 3/5, -1)");
    assert_eq!(tilde_t_e_step(&s("4/7", "0", Sign::Plus)).unwrap().to_string(), "(1/4, -1/2, +1)");
    assert_eq!(tilde_f_e_step(&s("2/5", "3/5", Sign::Plus)).unwrap().to_string(), "(1/2, 5/13, -1)");
    assert_eq!(tilde_f_e_step(&s("1/4", "1/2", Sign::Plus)).unwrap().to_string(), "(1/2, 1/4, +1)");
    assert_eq!(tilde_f_e_step(&s("3/4", "0", Sign::Minus)).unwrap().to_string(), "(2/3, 1/2, -1)");
    let p = StatePoint::pair(bp("5/2"), bp("1/3"));
    assert_eq!(k_e_forward(&p).unwrap().to_string(), "(2/5, 3/5, +1)");
    assert_eq!(j_forward(&p).unwrap().to_string(), "(2/5, -1/3, +1)");
}

#[test]
fn orbits_and_recoding() {
    assert_eq!(classify_point(&BoundaryPoint::Infinity).unwrap(), ThetaOrbit::ThetaInfinity);
    assert_eq!(classify_point(&bp("1")).unwrap(), ThetaOrbit::ThetaOne);
    assert_eq!(classify_point(&bp("3/2")).unwrap(), ThetaOrbit::ThetaInfinity);
    let recode = |s: &str| symbols_to_string(&recode_series_to_even(&Symbol::parse_str(s).unwrap()).unwrap());
    assert_eq!(recode("LLR"), "LB");
    assert_eq!(recode("LR"), "C");
    assert_eq!(recode("RRL"), "RB");
}

#[test]
fn densities() {
    assert_eq!(density_eval(DensityId::GaussExt, &rat(0, 1), &rat(0, 1)).unwrap(), rat(1, 1));
    assert_eq!(density_eval(DensityId::EvenFareyExt, &rat(1, 2), &rat(1, 2)).unwrap(), rat(4, 1));
    assert_eq!(density_eval(DensityId::FareyExt, &rat(1, 2), &rat(1, 2)).unwrap(), rat(16, 9));
    assert_eq!(pushforward_residual(NatextMap::EvenFarey, &rat(1, 4), &rat(1, 2)).unwrap(), rat(0, 1));
}
