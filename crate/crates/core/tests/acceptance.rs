//! Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hopfcyc::check::{all_passed, first_failure, Check};
use hopfcyc::cyclic::{
    apply_linear, build_hopf_cyclic, verify_cyclic_axioms, verify_cyclic_map, verify_gamma_theta, verify_inverse_pair,
    AlgebraCyclic, Coefficients, CyclicModule, Gamma, HochschildModule, HopfCyclic, MacLaneInverse, MacLaneTheta,
    Theta,
};
use hopfcyc::field::Field;
use hopfcyc::homology::cocyclic::commutative_hp_compare;
use hopfcyc::homology::homotopy::{verify_homotopy_uqsl2, Formulas};
use hopfcyc::homology::resolution::{
    base_change_characters, base_change_homology, builtin_source, classes_form_basis, generator_vector,
    load_resolution, parse_resolution, verify_resolution,
};
use hopfcyc::homology::{
    connes_b_normalized, cyclic_homology, hochschild_b, karoubi_compare, level_piece, normalize, weight_stable,
};
use hopfcyc::hopf::coaction::{Coaction, Trace};
use hopfcyc::hopf::{parse_word_expr, Character, HopfRef, ModularPair, Tensor};
use hopfcyc::instances::build_instance;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn hopf(name: &str, field: Option<Field>) -> HopfRef {
    build_instance(name, field).expect("instance").hopf
}

fn module(name: &str, pair: &str, field: Option<Field>) -> Result<HopfCyclic, String> {
    let h = hopf(name, field);
    let p = ModularPair::parse(&*h, pair).map_err(|e| e.to_string())?;
    build_hopf_cyclic(h, p, Some(3)).map_err(|e| e.to_string())
}

fn require(checks: &[Check], what: &str) -> Result<usize, String> {
    match first_failure(checks) {
        None => Ok(checks.len()),
        Some(c) => Err(format!("{what}: {} fails at {:?} ({:?})", c.name, c.witness, c.detail)),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn axiom_suite() -> Outcome {
    let mut total = 0;
    for name in ["group:Z2", "group:Z3", "group:Z4", "group:S3"] {
        total += require(&verify_cyclic_axioms(&module(name, "epsilon,1", None)?, 3, 0), name)?;
    }
    for (name, pair) in [("tensor:2", "epsilon,1"), ("uqsl2", "epsilon,K^-1"), ("aslq2", "delta,1")] {
        total += require(&verify_cyclic_axioms(&module(name, pair, None)?, 3, 3), name)?;
    }
    let h = hopf("aslq2", None);
    let m = build_hopf_cyclic(h.clone(), ModularPair::trivial(&*h), None).map_err(|e| e.to_string())?;
    let checks = verify_cyclic_axioms(&m, 3, 3);
    let bad = first_failure(&checks).ok_or("aslq2 with (epsilon,1) passes")?;
    if bad.witness.is_none() {
        return Err("no witness for aslq2 with (epsilon,1)".into());
    }
    Ok(format!(
        "{total} checks pass, n <= 3, D = 3; aslq2 (epsilon,1) fails {} with witness {}",
        bad.name,
        bad.witness.as_deref().unwrap_or("")
    ))
}

fn tau_squared_fails(m: &HopfCyclic) -> bool {
    verify_cyclic_axioms(m, 1, 0).iter().any(|c| c.name == "(2.2) tau^(n+1) = id [n=1]" && !c.passed)
}

fn converse() -> Outcome {
    let h = hopf("group:Z2", None);
    let mut sigma = h.unit();
    sigma.add_assign(&parse_word_expr(&*h, "z").map_err(|e| e.to_string())?);
    let pair = ModularPair::new(Character::counit(&*h), sigma, "(epsilon,1+z)");
    let m = build_hopf_cyclic(h, pair, None).map_err(|e| e.to_string())?;
    if !tau_squared_fails(&m) {
        return Err("non-grouplike sigma = 1 + z on kZ2 keeps tau^2 = id".into());
    }
    let h = hopf("group:S3", None);
    let pair = ModularPair::parse(&*h, "epsilon,s").map_err(|e| e.to_string())?;
    let m = build_hopf_cyclic(h, pair, None).map_err(|e| e.to_string())?;
    if !tau_squared_fails(&m) {
        return Err("non-involutive pair (epsilon,s) on kS3 keeps tau^2 = id".into());
    }
    Ok("tau_1^2 != id witnessed for kZ2 with sigma = 1 + z and kS3 with (epsilon,s)".into())
}

fn group_algebras() -> Outcome {
    let z3 = module("group:Z3", "epsilon,1", Some(Field::Rational))?;
    expect_eq("HC(kZ3/Q)", cyclic_homology(&z3, 4, 0).map_err(|e| e.to_string())?.hc.dims, vec![1, 0, 1, 0, 1])?;
    let f2 = Field::prime(2).map_err(|e| e.to_string())?;
    let z2 = module("group:Z2", "epsilon,1", Some(f2))?;
    let want: Vec<usize> = (0..=6).map(|n| n / 2 + 1).collect();
    expect_eq("HC(kZ2/F2)", cyclic_homology(&z2, 6, 0).map_err(|e| e.to_string())?.hc.dims, want)?;
    for (name, field, n) in [("group:Z3", Field::Rational, 4), ("group:Z2", f2, 6)] {
        let r = karoubi_compare(hopf(name, Some(field)), n, 0).map_err(|e| e.to_string())?;
        if !r.equal {
            return Err(format!("{name} over {field}: {:?} vs {:?}", r.cyclic, r.predicted));
        }
    }
    Ok("kZ3/Q: (1,0,1,0,1); kZ2/F2: floor(n/2)+1 for n <= 6; both pipelines agree".into())
}

fn tensor_algebra() -> Outcome {
    let m = module("tensor:2", "epsilon,1", None)?;
    let r = cyclic_homology(&m, 5, 3).map_err(|e| e.to_string())?;
    expect_eq("HC(T(V))", r.hc.dims.clone(), vec![1, 2, 1, 2, 1, 2])?;
    let next = cyclic_homology(&m, 5, 4).map_err(|e| e.to_string())?;
    if !weight_stable(&r.hc, &next.hc) {
        return Err(format!("weight cap 4 changes HC: {:?}", next.hc.dims));
    }
    Ok("HC_n = 1 (even), 2 (odd), n <= 5, weight cap 3, unchanged at cap 4".into())
}

fn uqsl2_base_change() -> Outcome {
    let r = load_resolution("uqsl2", 6).map_err(|e| e.to_string())?;
    let (left, right) = base_change_characters(&r, false).map_err(|e| e.to_string())?;
    expect_eq("characters", [left.name.as_str(), right.name.as_str()], ["epsilon", "epsilon"])?;
    let (rep, c) = base_change_homology(&r, &left, &right, 5).map_err(|e| e.to_string())?;
    expect_eq("H_n", rep.dims.clone(), vec![1, 0, 0, 1, 0, 0])?;
    let top = generator_vector(&r, 3, "e_x^e_y^e_sigma").map_err(|e| e.to_string())?;
    if !classes_form_basis(&c, 3, &[top]).map_err(|e| e.to_string())? {
        return Err("e_x^e_y^e_sigma does not span H_3".into());
    }
    Ok("(1,0,0,1,0,0), H_3 spanned by e_x^e_y^e_sigma".into())
}

fn aslq2_base_change() -> Outcome {
    let r = load_resolution("aslq2", 6).map_err(|e| e.to_string())?;
    let (left, right) = base_change_characters(&r, false).map_err(|e| e.to_string())?;
    let (rep, c) = base_change_homology(&r, &left, &right, 5).map_err(|e| e.to_string())?;
    expect_eq("H_n", rep.dims.clone(), vec![0, 2, 2, 0, 0, 0])?;
    let h1: Result<Vec<_>, _> = ["e_v", "e_u"].iter().map(|g| generator_vector(&r, 1, g)).collect();
    if !classes_form_basis(&c, 1, &h1.map_err(|e| e.to_string())?).map_err(|e| e.to_string())? {
        return Err("e_v, e_u do not form a basis of H_1".into());
    }
    Ok(format!("(0,2,2,0,0,0) with characters ({}, {}), H_1 basis e_v, e_u", left.name, right.name))
}

fn resolution_integrity() -> Outcome {
    let u = load_resolution("uqsl2", 5).map_err(|e| e.to_string())?;
    require(&verify_resolution(&u).checks, "uqsl2 d^2")?;
    expect_eq("uqsl2 errata", u.errata.len(), 0)?;
    expect_eq("uqsl2 length", u.rank(4), 0)?;
    let a = load_resolution("aslq2", 8).map_err(|e| e.to_string())?;
    require(&verify_resolution(&a).checks, "aslq2 d^2")?;
    if a.errata.iter().any(|e| e.note.is_empty() || e.printed.is_none() || e.corrected.is_none()) {
        return Err("an aslq2 erratum is not a documented single-term correction".into());
    }
    let printed =
        parse_resolution(builtin_source("aslq2").map_err(|e| e.to_string())?, 8, false).map_err(|e| e.to_string())?;
    if all_passed(&verify_resolution(&printed).checks) {
        return Err("aslq2 errata are not needed".into());
    }
    let hom = verify_homotopy_uqsl2(&u, Formulas::Corrected, 2, 2).map_err(|e| e.to_string())?;
    require(&hom.checks, "S d + d S")?;
    let words = hom.checks.last().map_or(0, |c| c.checked);
    Ok(format!(
        "d^2 = 0 for uqsl2 (no errata) and aslq2 through degree 8 ({} single-term errata); S d + d S = id on {} \
         generators x {words} coefficients, |l| <= 2, m,n <= 2, corrected homotopy",
        a.errata.len(),
        hom.checks.len() - 1
    ))
}

fn gamma_theta() -> Outcome {
    let h = hopf("group:Z4", Some(Field::Rational));
    let pair = ModularPair::parse(&*h, "epsilon,z^2").map_err(|e| e.to_string())?;
    let sigma = pair.sigma_word().cloned().ok_or("sigma is not a word")?;
    let gamma =
        Gamma::new(Coaction::regular(h.clone()), Trace::indicator(&*h, sigma), &pair, 0).map_err(|e| e.to_string())?;
    let theta = Theta::new(h.clone(), pair.sigma.clone(), 0).map_err(|e| e.to_string())?;
    let target = build_hopf_cyclic(h.clone(), pair.clone(), Some(0)).map_err(|e| e.to_string())?;
    let n = require(&verify_gamma_theta(&target, &gamma, &theta, 3, 0), "gamma theta")?;
    let source = AlgebraCyclic { a: h.clone() };
    require(&verify_cyclic_map(&source, &target, &gamma, 3, 0), "gamma")?;
    require(&verify_cyclic_map(&target, &source, &theta, 3, 0), "theta")?;
    let tr = gamma.trace.eval(&pair.sigma).to_report_string();
    Ok(format!("gamma theta = Tr(sigma) id with Tr(sigma) = {tr} on {n} levels, n <= 3"))
}

fn mac_lane() -> Outcome {
    let h = hopf("group:S3", None);
    let src = HochschildModule::new(h.clone(), Coefficients::Regular, false);
    let tgt = HochschildModule::new(h.clone(), Coefficients::Regular, true);
    let th = MacLaneTheta { source: &src };
    let inv = MacLaneInverse { source: &src };
    let mut n = require(&verify_inverse_pair(&src, &tgt, &th, &inv, 3, 0), "inverse")?;
    n += require(&verify_cyclic_map(&src, &tgt, &th, 3, 0), "theta")?;
    n += require(&verify_cyclic_map(&tgt, &src, &inv, 3, 0), "theta inverse")?;
    Ok(format!("{n} checks pass for M = kS3, n <= 3"))
}

fn commutative_hp() -> Outcome {
    let mut parts = Vec::new();
    for name in ["fungrp:Z2", "fungrp:Z3"] {
        let h = hopf(name, Some(Field::Rational));
        let r = commutative_hp_compare(h, 4).map_err(|e| e.to_string())?;
        expect_eq(name, (r.hp_cyclic, r.hp_coalgebra), ([Some(1), Some(0)], [1, 0]))?;
        parts.push(format!("{name}: HP^0 = 1, HP^1 = 0"));
    }
    Ok(format!("{} from both pipelines", parts.join("; ")))
}

fn random_chain(m: &dyn CyclicModule, n: usize, w: u32, rng: &mut ChaCha8Rng) -> Tensor {
    let words = level_piece(m, n, w, true).words;
    let f = m.field();
    let mut x = Tensor::zero();
    if words.is_empty() {
        return x;
    }
    for _ in 0..rng.gen_range(1..5) {
        let t = words[rng.gen_range(0..words.len())].clone();
        x.add_term(t, f.from_i64(rng.gen_range(-5..=5)));
    }
    x
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tested = 0;
    let mut nonzero = 0;
    for (name, weights) in [("group:Z3", 0..=0), ("group:Z4", 0..=0), ("group:S3", 0..=0), ("tensor:2", 1..=3)] {
        let m = module(name, "epsilon,1", None)?;
        for _ in 0..50 {
            for w in weights.clone() {
                let n = rng.gen_range(1..3);
                let x = random_chain(&m, n, w, &mut rng);
                let bx = connes_b_normalized(&m, n, &x).map_err(|e| e.to_string())?;
                if !connes_b_normalized(&m, n + 1, &bx).map_err(|e| e.to_string())?.is_zero() {
                    return Err(format!("{name}: B^2 != 0 at level {n}"));
                }
                let b = |k: usize, y: &Tensor| normalize(&m, k - 1, &apply_linear(y, |t| hochschild_b(&m, k, t)));
                let mut sum = b(n + 1, &bx);
                sum.add_assign(&connes_b_normalized(&m, n - 1, &b(n, &x)).map_err(|e| e.to_string())?);
                if !sum.is_zero() {
                    return Err(format!("{name}: bB + Bb != 0 at level {n}"));
                }
                tested += 1;
                nonzero += usize::from(!bx.is_zero());
            }
        }
    }
    let mut words = 0;
    for name in ["uqsl2", "aslq2", "tensor:2"] {
        let p = build_instance(name, None).map_err(|e| e.to_string())?.presented.ok_or("not presented")?;
        let c = p.verify_confluence(1000, 10, 7);
        require(std::slice::from_ref(&c), name)?;
        words += c.checked;
    }
    Ok(format!(
        "B^2 = 0 and bB + Bb = 0 on {tested} random normalized chains ({nonzero} with B != 0) over kZ3, kZ4, kS3, T(V); \
         {words} random words reduce confluently over uqsl2, aslq2, T(V)"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("cyclic axiom suite", axiom_suite),
        ("tau^2 != id without an involutive grouplike pair", converse),
        ("HC of group algebras and the two pipelines", group_algebras),
        ("HC of the tensor algebra T(V), dim V = 2", tensor_algebra),
        ("U_q(sl2) base change homology", uqsl2_base_change),
        ("A(SL_q(2)) Hochschild layer", aslq2_base_change),
        ("resolution integrity and contracting homotopy", resolution_integrity),
        ("gamma theta = Tr(sigma) id on kZ4", gamma_theta),
        ("Mac Lane isomorphism on kS3", mac_lane),
        ("HP of commutative function algebras", commutative_hp),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [tolerance: exact, {secs:.1}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [tolerance: exact, {secs:.1}s]: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
