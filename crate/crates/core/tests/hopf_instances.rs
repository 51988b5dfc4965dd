use hopfcyc::check::all_passed;
use hopfcyc::field::Field;
use hopfcyc::hopf::checks::{
    check_modular_involution, verify_hopf_axioms, verify_s2_conjugation, verify_sigma_antipode,
};
use hopfcyc::hopf::coaction::{check_comodule_axioms, check_trace_properties, Coaction, Trace};
use hopfcyc::hopf::{
    antipode, iterated_coproduct, parse_word_expr, sigma_antipode, sigma_antipode_checked, tensor_of, twisted_antipode,
    word, Algebra, Element, ModularPair,
};
use hopfcyc::instances::{build_instance, builtin_coaction, GroupTable};
use hopfcyc::Error;

fn el(h: &dyn Algebra, s: &str) -> Element {
    parse_word_expr(h, s).unwrap()
}

#[test]
fn hopf_axioms_hold_on_every_instance() {
    for (name, d) in [
        ("group:Z2", 0),
        ("group:Z3", 0),
        ("group:S3", 0),
        ("fungrp:Z3", 0),
        ("fungrp:S3", 0),
        ("tensor:2", 3),
        ("laurent", 3),
        ("uqsl2", 3),
        ("aslq2", 3),
    ] {
        let inst = build_instance(name, None).unwrap();
        let checks = verify_hopf_axioms(&*inst.hopf, d);
        assert!(all_passed(&checks), "{name}: {checks:?}");
    }
}

#[test]
fn iterated_coproduct_of_x() {
    let inst = build_instance("uqsl2", None).unwrap();
    let h = &*inst.hopf;
    let x = el(h, "x");
    let k = el(h, "K");
    let one = h.unit();
    let want2 = {
        let mut t = tensor_of(&[x.clone(), k.clone()]);
        t.add_assign(&tensor_of(&[one.clone(), x.clone()]));
        t
    };
    assert_eq!(iterated_coproduct(h, &word(&[2]), 2), want2);
    let mut want3 = tensor_of(&[x.clone(), k.clone(), k.clone()]);
    want3.add_assign(&tensor_of(&[one.clone(), x.clone(), k.clone()]));
    want3.add_assign(&tensor_of(&[one.clone(), one.clone(), x.clone()]));
    assert_eq!(iterated_coproduct(h, &word(&[2]), 3), want3);
}

#[test]
fn uqsl2_structure_maps() {
    let inst = build_instance("uqsl2", None).unwrap();
    let h = &*inst.hopf;
    let f = h.field();
    assert_eq!(antipode(h, &el(h, "x")), el(h, "x K^-1").neg());
    assert_eq!(antipode(h, &el(h, "y")), el(h, "K y").neg());
    assert_eq!(antipode(h, &el(h, "K")), el(h, "K^-1"));
    // S_{K^-1}(x) = -K^-1 x K^-1 = -q^-2 x K^-2
    let s = sigma_antipode(h, &el(h, "x"), &el(h, "K^-1"));
    let q_m2 = f.parse_scalar("q^-2").unwrap();
    assert_eq!(s, el(h, "x K^-2").scale(&q_m2.neg()));
    assert_eq!(s, el(h, "K^-1 x K^-1").neg());
    let conj = verify_s2_conjugation(h, "K", 3).unwrap();
    assert!(conj.passed, "{conj:?}");
    // S^2(x) = q^2 x, S^2(y) = q^-2 y
    let q2 = f.parse_scalar("q^2").unwrap();
    assert_eq!(antipode(h, &antipode(h, &el(h, "x"))), el(h, "x").scale(&q2));
    assert_eq!(antipode(h, &antipode(h, &el(h, "y"))), el(h, "y").scale(&q_m2));
    assert!(h.counit_word(&word(&[0])).is_one());
}

#[test]
fn uqsl2_pairs() {
    let inst = build_instance("uqsl2", None).unwrap();
    let h = &*inst.hopf;
    let good = ModularPair::parse(h, "epsilon,K^-1").unwrap();
    assert!(check_modular_involution(h, &good, 3).passed);
    let bad = ModularPair::parse(h, "epsilon,K").unwrap();
    let c = check_modular_involution(h, &bad, 3);
    assert!(!c.passed);
    assert!(all_passed(&verify_sigma_antipode(h, &el(h, "K^-1"), 2)));
}

#[test]
fn aslq2_twisted_antipode() {
    let inst = build_instance("aslq2", None).unwrap();
    let h = &*inst.hopf;
    let q = h.field().q().unwrap();
    let pair = ModularPair::parse(h, "delta,1").unwrap();
    pair.validate(h, 3).unwrap();
    let sx = twisted_antipode(h, &el(h, "x"), &pair);
    assert_eq!(sx, el(h, "y").scale(&q));
    assert_eq!(twisted_antipode(h, &sx, &pair), el(h, "x"));
    assert!(check_modular_involution(h, &pair, 3).passed);
    let eps = ModularPair::trivial(h);
    let c = check_modular_involution(h, &eps, 3);
    assert!(!c.passed);
    assert_eq!(c.witness.as_deref(), Some("u"));
    assert_eq!(sigma_antipode(h, &el(h, "u"), &h.unit()), el(h, "u").scale(&q.neg()));
}

#[test]
fn group_antipodes() {
    let inst = build_instance("group:S3", None).unwrap();
    let h = &*inst.hopf;
    let t = GroupTable::s3();
    for g in 0..6 {
        let w = t.word_of(g);
        let inv = t.word_of(t.inverse[g]);
        let e = Element::single(w, h.field().one());
        assert_eq!(sigma_antipode(h, &e, &h.unit()), Element::single(inv.clone(), h.field().one()));
        assert_eq!(twisted_antipode(h, &e, &ModularPair::trivial(h)), Element::single(inv, h.field().one()));
    }
    assert!(matches!(
        sigma_antipode_checked(h, &h.unit(), &h.unit().scale(&h.field().from_i64(2))),
        Err(Error::NotGrouplike(_))
    ));
}

#[test]
fn flags_match_detection() {
    let z2 = build_instance("group:Z2", None).unwrap();
    assert!(z2.hopf.declared_flags().cocommutative);
    let f = build_instance("fungrp:S3", None).unwrap();
    assert!(f.hopf.declared_flags().commutative && !f.hopf.declared_flags().cocommutative);
}

#[test]
fn coactions() {
    let z4 = build_instance("group:Z4", None).unwrap();
    let reg = Coaction::regular(z4.hopf.clone());
    assert!(all_passed(&check_comodule_axioms(&reg, 0)));
    let triv = Coaction::trivial(z4.hopf.clone(), z4.hopf.clone());
    assert!(all_passed(&check_comodule_axioms(&triv, 0)));
    let lau = builtin_coaction("laurent_on_aslq2").unwrap();
    let checks = check_comodule_axioms(&lau, 3);
    assert!(all_passed(&checks), "{checks:?}");
    let a = &*lau.algebra;
    let h = &*lau.hopf;
    let xu = el(a, "x u");
    assert_eq!(lau.coact(&xu), tensor_of(&[xu.clone(), h.unit()]));
    assert_eq!(lau.coact(&a.unit()), tensor_of(&[a.unit(), h.unit()]));
    assert_eq!(lau.coact(&el(a, "x")), tensor_of(&[el(a, "x"), el(h, "z")]));
}

#[test]
fn traces_on_group_algebras() {
    let z4 = build_instance("group:Z4", Some(Field::Rational)).unwrap();
    let h = &*z4.hopf;
    let reg = Coaction::regular(z4.hopf.clone());
    let sigma_w = parse_word_expr(h, "z^2").unwrap().keys().next().unwrap().clone();
    let pair = ModularPair::parse(h, "epsilon,z^2").unwrap();
    let tr = Trace::indicator(h, sigma_w);
    let r = check_trace_properties(&tr, &reg, &pair, 0);
    assert!(r.is_delta_trace && r.is_sigma_invariant);

    let trivial_pair = ModularPair::trivial(h);
    let r = check_trace_properties(&Trace::counit(z4.hopf.clone()), &reg, &trivial_pair, 0);
    assert!(!r.is_sigma_invariant);

    let triv = Coaction::trivial(z4.hopf.clone(), z4.hopf.clone());
    let r = check_trace_properties(&Trace::zero(Field::Rational), &triv, &trivial_pair, 0);
    assert!(r.is_delta_trace && r.is_sigma_invariant);
}
