use hopfcyc::check::{all_passed, first_failure, Check};
use hopfcyc::cyclic::modules::verify_contraction;
use hopfcyc::cyclic::{
    build_hopf_cyclic, verify_cocyclic_axioms, verify_cocyclic_map, verify_cyclic_axioms, verify_cyclic_map,
    verify_inverse_pair, AlgebraCyclic, CmCocyclic, CocyclicModule, Coefficients, CommutativeCocyclic, CyclicModule,
    Gamma, HochschildModule, HopfCyclic, LevelMap, MacLaneInverse, MacLaneTheta, PathSpace, Pi, Psi, Theta,
};
use hopfcyc::field::Field;
use hopfcyc::hopf::coaction::{Coaction, Trace};
use hopfcyc::hopf::{parse_word_expr, Algebra, Character, HopfRef, ModularPair, Tensor, TensorWord, Word};
use hopfcyc::instances::{build_instance, GroupTable};
use hopfcyc::Error;

fn hopf(name: &str) -> HopfRef {
    build_instance(name, None).unwrap().hopf
}

fn w(h: &dyn Algebra, s: &str) -> Word {
    let e = parse_word_expr(h, s).unwrap();
    assert_eq!(e.len(), 1, "{s} is not a basis word");
    let k = e.keys().next().unwrap().clone();
    k
}

fn tw(h: &dyn Algebra, parts: &[&str]) -> TensorWord {
    parts.iter().map(|s| w(h, s)).collect()
}

fn one(h: &dyn Algebra, t: TensorWord) -> Tensor {
    Tensor::single(t, h.field().one())
}

fn assert_pass(checks: &[Check], what: &str) {
    assert!(all_passed(checks), "{what}: {:?}", first_failure(checks));
}

fn hopf_cyclic(name: &str, pair: &str) -> HopfCyclic {
    let h = hopf(name);
    let p = ModularPair::parse(&*h, pair).unwrap();
    build_hopf_cyclic(h, p, Some(3)).unwrap()
}

#[test]
fn group_algebras_are_cyclic() {
    for (name, n_max) in [("group:Z2", 4), ("group:Z3", 4), ("group:Z4", 4), ("group:S3", 3)] {
        let m = hopf_cyclic(name, "epsilon,1");
        assert_pass(&verify_cyclic_axioms(&m, n_max, 0), name);
    }
}

#[test]
fn group_tau_on_two_letters() {
    let m = hopf_cyclic("group:S3", "epsilon,1");
    let h = &*m.h;
    let t = m.cyclic(2, &tw(h, &["r", "s"])).unwrap();
    // ((r s)^-1, r)
    assert_eq!(t, one(h, tw(h, &["sr", "r"])));
}

#[test]
fn grouplike_level_one_tau_is_inverse() {
    let m = hopf_cyclic("uqsl2", "epsilon,K^-1");
    let h = &*m.h;
    let pm = ModularPair::trivial(h);
    let triv = build_hopf_cyclic(m.h.clone(), pm, None).unwrap();
    assert_eq!(triv.cyclic(1, &tw(h, &["K"])).unwrap(), one(h, tw(h, &["K^-1"])));
}

#[test]
fn tensor_algebra_is_cyclic() {
    let m = hopf_cyclic("tensor:2", "epsilon,1");
    assert_pass(&verify_cyclic_axioms(&m, 3, 3), "tensor:2");
}

#[test]
fn uqsl2_with_involutive_pair_is_cyclic() {
    let m = hopf_cyclic("uqsl2", "epsilon,K^-1");
    assert_pass(&verify_cyclic_axioms(&m, 3, 3), "uqsl2");
}

#[test]
fn aslq2_with_delta_pair_is_cyclic() {
    let m = hopf_cyclic("aslq2", "delta,1");
    assert_pass(&verify_cyclic_axioms(&m, 3, 3), "aslq2");
    let h = &*m.h;
    let q = h.field().q().unwrap();
    assert_eq!(m.face(1, 1, &tw(h, &["x"])), Tensor::single(TensorWord::new(), q));
}

#[test]
fn aslq2_trivial_pair_fails_first_relation() {
    let h = hopf("aslq2");
    let pair = ModularPair::trivial(&*h);
    assert!(matches!(build_hopf_cyclic(h.clone(), pair.clone(), Some(3)), Err(Error::InvalidPair(_))));
    let m = build_hopf_cyclic(h, pair, None).unwrap();
    let checks = verify_cyclic_axioms(&m, 1, 1);
    let bad = first_failure(&checks).unwrap();
    assert!(bad.name.starts_with("(2.2)") && bad.name.ends_with("[n=1]"), "{bad:?}");
    assert_eq!(bad.witness.as_deref(), Some("u"));
}

#[test]
fn non_grouplike_or_non_involutive_sigma_breaks_tau_squared() {
    let h = hopf("group:Z2");
    let mut sigma = h.unit();
    sigma.add_assign(&parse_word_expr(&*h, "z").unwrap());
    let pair = ModularPair::new(Character::counit(&*h), sigma, "epsilon,1+z");
    let m = build_hopf_cyclic(h, pair, None).unwrap();
    let c = verify_cyclic_axioms(&m, 1, 0);
    assert!(c.iter().any(|c| c.name == "(2.2) tau^(n+1) = id [n=1]" && !c.passed));

    let h = hopf("group:S3");
    let pair = ModularPair::parse(&*h, "epsilon,s").unwrap();
    assert!(build_hopf_cyclic(h.clone(), pair.clone(), Some(0)).is_err());
    let m = build_hopf_cyclic(h, pair, None).unwrap();
    let c = verify_cyclic_axioms(&m, 1, 0);
    assert!(c.iter().any(|c| c.name == "(2.2) tau^(n+1) = id [n=1]" && !c.passed));
}

#[test]
fn algebra_cyclic_module() {
    let h = hopf("group:Z3");
    let c = AlgebraCyclic { a: h.clone() };
    assert_pass(&verify_cyclic_axioms(&c, 3, 0), "C(kZ3)");
    let a = &*h;
    assert_eq!(c.cyclic(1, &tw(a, &["z", "z^2"])).unwrap(), one(a, tw(a, &["z^2", "z"])));
    // δ_2(a0 ⊗ a1 ⊗ a2) = a2 a0 ⊗ a1
    assert_eq!(c.face(2, 2, &tw(a, &["z", "1", "z"])), one(a, tw(a, &["z^2", "1"])));
}

#[test]
fn path_space() {
    let h = hopf("group:S3");
    let e = PathSpace::cyclic(h.clone()).unwrap();
    let a = &*h;
    // t(g0 ⊗ g1) = g0 g1 ⊗ g1^-1
    let g = GroupTable::s3();
    for g0 in 0..6 {
        for g1 in 0..6 {
            let t: TensorWord = [g.word_of(g0), g.word_of(g1)].into_iter().collect();
            let want: TensorWord = [g.word_of(g.mul[g0][g1]), g.word_of(g.inverse[g1])].into_iter().collect();
            assert_eq!(e.cyclic(1, &t).unwrap(), one(a, want));
            let back = e.cyclic(1, &e.cyclic(1, &t).unwrap().keys().next().unwrap().clone()).unwrap();
            assert_eq!(back, one(a, t));
        }
    }
    assert_pass(&verify_cyclic_axioms(&e, 3, 0), "E(kS3)");
    assert_pass(&verify_contraction(&e, 3, 0), "contraction");
    assert!(matches!(PathSpace::cyclic(hopf("uqsl2")), Err(Error::NotCocommutative)));

    let t = PathSpace::cyclic(hopf("tensor:2")).unwrap();
    assert_pass(&verify_cyclic_axioms(&t, 3, 3), "E(T(V))");

    let u = PathSpace::simplicial(hopf("uqsl2"));
    assert_pass(&verify_cyclic_axioms(&u, 2, 2), "E(uqsl2) simplicial");
    assert_pass(&verify_contraction(&u, 2, 2), "contraction uqsl2");
}

#[test]
fn projection_to_bh() {
    let h = hopf("group:S3");
    let e = PathSpace::cyclic(h.clone()).unwrap();
    let b = build_hopf_cyclic(h.clone(), ModularPair::trivial(&*h), Some(0)).unwrap();
    let pi = Pi { h: h.clone() };
    assert_pass(&verify_cyclic_map(&e, &b, &pi, 3, 0), "pi");
    let a = &*h;
    assert_eq!(pi.apply_word(2, &tw(a, &["1", "r", "s"])), one(a, tw(a, &["r", "s"])));

    let s = hopf("aslq2");
    let pi = Pi { h: s.clone() };
    assert_eq!(pi.apply_word(1, &tw(&*s, &["x", "y"])), one(&*s, tw(&*s, &["y"])));
    let e = PathSpace::simplicial(s.clone());
    let b = build_hopf_cyclic(s.clone(), ModularPair::trivial(&*s), None).unwrap();
    let checks = verify_cyclic_map(&e, &b, &pi, 2, 2);
    assert_pass(&checks, "pi simplicial on aslq2");
}

fn z4_gamma_theta() -> (HopfRef, Gamma, Theta, ModularPair) {
    let h = build_instance("group:Z4", Some(Field::Rational)).unwrap().hopf;
    let pair = ModularPair::parse(&*h, "epsilon,z^2").unwrap();
    let sigma = w(&*h, "z^2");
    let gamma = Gamma::new(Coaction::regular(h.clone()), Trace::indicator(&*h, sigma), &pair, 0).unwrap();
    let theta = Theta::new(h.clone(), pair.sigma.clone(), 0).unwrap();
    (h, gamma, theta, pair)
}

#[test]
fn gamma_and_theta_are_cyclic_maps() {
    let (h, gamma, theta, pair) = z4_gamma_theta();
    let ca = AlgebraCyclic { a: h.clone() };
    let th = build_hopf_cyclic(h.clone(), pair, Some(0)).unwrap();
    assert_pass(&verify_cyclic_map(&ca, &th, &gamma, 3, 0), "gamma");
    assert_pass(&verify_cyclic_map(&th, &ca, &theta, 3, 0), "theta");
    let a = &*h;
    // γ(g0 ⊗ g1) = [g0 g1 = σ] g1
    assert_eq!(gamma.apply_word(1, &tw(a, &["z", "z"])), one(a, tw(a, &["z"])));
    assert!(gamma.apply_word(1, &tw(a, &["z", "1"])).is_zero());
    assert_eq!(gamma.apply_word(0, &tw(a, &["z^2"])), Tensor::single(TensorWord::new(), a.field().one()));
    // θ(1) = σ
    assert_eq!(theta.apply_word(0, &TensorWord::new()), one(a, tw(a, &["z^2"])));
    assert_eq!(theta.apply_word(2, &tw(a, &["z", "z^2"])), one(a, tw(a, &["z^3", "z", "z^2"])));
}

#[test]
fn gamma_theta_is_trace_of_sigma() {
    let (h, gamma, theta, pair) = z4_gamma_theta();
    let th = build_hopf_cyclic(h.clone(), pair, Some(0)).unwrap();
    let tr_sigma = h.field().one();
    for n in 0..=3 {
        let algs: Vec<&dyn Algebra> = (0..n).map(|j| th.factor(n, j)).collect();
        for t in hopfcyc::cyclic::spanning_words(&algs, 0) {
            let x = one(&*h, t);
            assert_eq!(gamma.apply(n, &theta.apply(n, &x)), x.scale(&tr_sigma));
        }
    }
    let s = hopf("group:S3");
    let p = parse_word_expr(&*s, "s").unwrap();
    assert!(matches!(Theta::new(s, p, 0), Err(Error::InvolutionFails(_))));
}

#[test]
fn gamma_rejects_bad_trace() {
    let h = build_instance("group:Z4", Some(Field::Rational)).unwrap().hopf;
    let pair = ModularPair::parse(&*h, "epsilon,z^2").unwrap();
    let r = Gamma::new(Coaction::regular(h.clone()), Trace::counit(h.clone()), &pair, 0);
    assert!(matches!(r, Err(Error::TraceAxiomsFail(_))));
}

#[test]
fn mac_lane_isomorphism() {
    for name in ["group:S3", "uqsl2"] {
        let h = hopf(name);
        let (n_max, d) = if name == "uqsl2" { (2, 2) } else { (3, 0) };
        let src = HochschildModule::new(h.clone(), Coefficients::Regular, false);
        let tgt = HochschildModule::new(h.clone(), Coefficients::Regular, true);
        let th = MacLaneTheta { source: &src };
        let inv = MacLaneInverse { source: &src };
        assert_pass(&verify_cyclic_axioms(&src, n_max, d), "C(H,H)");
        assert_pass(&verify_cyclic_axioms(&tgt, n_max, d), "C(H,H~)");
        assert_pass(&verify_inverse_pair(&src, &tgt, &th, &inv, n_max, d), "inverse");
        assert_pass(&verify_cyclic_map(&src, &tgt, &th, n_max, d), "theta");
        assert_pass(&verify_cyclic_map(&tgt, &src, &inv, n_max, d), "theta inverse");
    }
    let h = hopf("group:S3");
    let src = HochschildModule::new(h.clone(), Coefficients::Regular, false);
    let a = &*h;
    let th = MacLaneTheta { source: &src };
    assert_eq!(th.apply_word(2, &tw(a, &["s", "r", "s"])), one(a, tw(a, &["r", "s", "r^2"])));

    let eps = Character::counit(a);
    let k = HochschildModule::new(h.clone(), Coefficients::Scalars { left: eps.clone(), right: eps }, false);
    let th = MacLaneTheta { source: &k };
    let t: TensorWord = [Word::new(), w(a, "r"), w(a, "s")].into_iter().collect();
    let want: TensorWord = [w(a, "r"), w(a, "s"), Word::new()].into_iter().collect();
    assert_eq!(th.apply_word(2, &t), one(a, want));
}

#[test]
fn commutative_cocyclic_modules() {
    for name in ["fungrp:Z2", "fungrp:Z3", "fungrp:S3"] {
        let h = hopf(name);
        let e = CommutativeCocyclic::new(h.clone()).unwrap();
        let n_max = match name {
            "fungrp:Z2" => 3,
            "fungrp:Z3" => 2,
            _ => 1,
        };
        assert_pass(&verify_cocyclic_axioms(&e, n_max, 0), name);
        let cm = CmCocyclic { h: h.clone(), pair: ModularPair::trivial(&*h) };
        assert_pass(&verify_cocyclic_axioms(&cm, n_max, 0), name);
        let psi = Psi { field: h.field() };
        assert_pass(&verify_cocyclic_map(&cm, &e, &psi, n_max, 0), "psi");
    }
    let h = hopf("laurent");
    let e = CommutativeCocyclic::new(h.clone()).unwrap();
    assert_pass(&verify_cocyclic_axioms(&e, 3, 3), "laurent");
    let a = &*h;
    assert_eq!(e.cocyclic(1, &tw(a, &["z^2", "z^-1"])), one(a, tw(a, &["z^2", "z^3"])));
    assert_eq!(e.coface(1, 2, &tw(a, &["z", "z"])), one(a, tw(a, &["z", "z", "1"])));
    let psi = Psi { field: a.field() };
    assert_eq!(psi.apply_word(1, &tw(a, &["z"])), one(a, tw(a, &["1", "z"])));
    assert!(matches!(CommutativeCocyclic::new(hopf("group:S3")), Err(Error::NotCommutative)));
}
