use hopfcyc::cyclic::build_hopf_cyclic;
use hopfcyc::homology::hochschild_homology;
use hopfcyc::homology::homotopy::{verify_homotopy_uqsl2, Formulas};
use hopfcyc::homology::resolution::{
    bar_base_change, base_change, base_change_characters, base_change_homology, builtin_source, classes_form_basis,
    comparison_lift, generator_vector, load_resolution, parse_resolution, verify_comparison, verify_resolution,
    ResolutionData,
};
use hopfcyc::hopf::{find_character, parse_word_expr, tensor_of, Algebra, HopfAlgebra, ModularPair};
use hopfcyc::instances::build_instance;
use hopfcyc::Error;

fn all_pass(r: &ResolutionData) -> bool {
    verify_resolution(r).checks.iter().all(|c| c.passed)
}

#[test]
fn ranks() {
    let u = load_resolution("uqsl2", 4).unwrap();
    assert_eq!(u.ranks(), vec![1, 3, 3, 1, 0]);
    let a = load_resolution("aslq2", 6).unwrap();
    assert_eq!(a.ranks(), vec![1, 4, 7, 8, 8, 8, 8]);
}

#[test]
fn first_differential() {
    let r = load_resolution("aslq2", 2).unwrap();
    let h: &dyn Algebra = &*r.h;
    let g = r.generator_index(1, "e_v").unwrap();
    let v = parse_word_expr(h, "v").unwrap();
    let one = h.unit();
    let expect = tensor_of(&[v.clone(), one.clone()]).sub(&tensor_of(&[one, v]));
    assert_eq!(r.image(1, g)[0], expect);
}

#[test]
fn uqsl2_is_a_complex_as_printed() {
    let r = load_resolution("uqsl2", 4).unwrap();
    assert!(r.errata.is_empty());
    assert!(all_pass(&r));
}

#[test]
fn aslq2_is_a_complex_through_degree_eight() {
    let r = load_resolution("aslq2", 8).unwrap();
    assert!(r.errata_applied);
    assert_eq!(r.errata.len(), 4);
    let rep = verify_resolution(&r);
    assert!(rep.checks.iter().all(|c| c.passed), "{:?}", rep.checks.iter().find(|c| !c.passed));
}

#[test]
fn printed_aslq2_fails_without_errata() {
    let src = builtin_source("aslq2").unwrap();
    let printed = parse_resolution(src, 6, false).unwrap();
    assert!(!all_pass(&printed));
}

#[test]
fn each_erratum_is_needed() {
    let src = builtin_source("aslq2").unwrap();
    let doc: toml::Table = src.parse().unwrap();
    let count = doc["erratum"].as_array().unwrap().len();
    for i in 0..count {
        let mut edited = doc.clone();
        edited["erratum"].as_array_mut().unwrap().remove(i);
        let r = parse_resolution(&toml::to_string(&edited).unwrap(), 6, true).unwrap();
        assert!(!all_pass(&r), "erratum {i} is not needed");
    }
}

#[test]
fn uqsl2_base_change() {
    let r = load_resolution("uqsl2", 6).unwrap();
    let (left, right) = base_change_characters(&r, false).unwrap();
    let (rep, c) = base_change_homology(&r, &left, &right, 5).unwrap();
    assert_eq!(rep.dims, vec![1, 0, 0, 1, 0, 0]);
    let top = generator_vector(&r, 3, "e_x^e_y^e_sigma").unwrap();
    assert!(classes_form_basis(&c, 3, &[top]).unwrap());
}

#[test]
fn aslq2_base_change() {
    let r = load_resolution("aslq2", 8).unwrap();
    let (left, right) = base_change_characters(&r, false).unwrap();
    assert_eq!((left.name.as_str(), right.name.as_str()), ("epsilon", "delta"));
    let (rep, c) = base_change_homology(&r, &left, &right, 7).unwrap();
    assert_eq!(rep.dims, vec![0, 2, 2, 0, 0, 0, 0, 0]);
    let h1: Vec<_> = ["e_v", "e_u"].iter().map(|g| generator_vector(&r, 1, g).unwrap()).collect();
    assert!(classes_form_basis(&c, 1, &h1).unwrap());
    let h2: Vec<_> = ["e_v^e_x", "e_u^e_x"].iter().map(|g| generator_vector(&r, 2, g).unwrap()).collect();
    assert!(classes_form_basis(&c, 2, &h2).unwrap());
    // e_x alone is not a cycle
    let ex = generator_vector(&r, 1, "e_x").unwrap();
    assert!(!classes_form_basis(&c, 1, &[ex, h1[0].clone()]).unwrap());
}

#[test]
fn aslq2_degree_zero_row() {
    let r = load_resolution("aslq2", 2).unwrap();
    let (left, right) = base_change_characters(&r, false).unwrap();
    let c = base_change(&r, &left, &right).unwrap();
    let f = r.h.field();
    let d1 = c.differential(1);
    let row: Vec<_> = (0..4).map(|j| d1.get(0, j)).collect();
    let expect: Vec<_> = ["0", "0", "1-q", "1-q^-1"].iter().map(|s| f.parse_scalar(s).unwrap()).collect();
    assert_eq!(row, expect);
    let (rank, null) = d1.rank_nullspace();
    assert_eq!((rank, null.len()), (1, 3));
}

#[test]
fn swapped_assignment_is_available() {
    let r = load_resolution("aslq2", 4).unwrap();
    let (left, right) = base_change_characters(&r, true).unwrap();
    assert_eq!((left.name.as_str(), right.name.as_str()), ("delta", "epsilon"));
    let (rep, _) = base_change_homology(&r, &left, &right, 3).unwrap();
    assert_eq!(rep.dims[0], 0);
}

#[test]
fn base_change_needs_room() {
    let r = load_resolution("uqsl2", 4).unwrap();
    let (left, right) = base_change_characters(&r, false).unwrap();
    assert!(matches!(base_change_homology(&r, &left, &right, 4), Err(Error::CapExceeded(_))));
}

#[test]
fn comparison_lift_into_bar() {
    let r = load_resolution("uqsl2", 4).unwrap();
    let h: &dyn Algebra = &*r.h;
    let lift = comparison_lift(&r, 3).unwrap();
    let one = h.unit();
    assert_eq!(lift.maps[0][0], tensor_of(&[one.clone(), one.clone()]));
    let x = parse_word_expr(h, "x").unwrap();
    let g = r.generator_index(1, "e_x").unwrap();
    let expect = tensor_of(&[one.clone(), x.clone(), one.clone()]).sub(&tensor_of(&[one.clone(), one, x]));
    assert_eq!(lift.maps[1][g], expect);
    let checks = verify_comparison(&r, &lift);
    assert_eq!(checks.len(), 3 + 3 + 1);
    assert!(checks.iter().all(|c| c.passed));
}

#[test]
fn bar_resolution_matches_hochschild_complex() {
    for name in ["group:Z2", "group:Z3", "group:S3"] {
        let inst = build_instance(name, None).unwrap();
        let h = inst.hopf.clone();
        let hd: &dyn HopfAlgebra = &*h;
        let eps = find_character(hd, "epsilon").unwrap();
        let c = bar_base_change(hd, &eps, &eps, 4).unwrap();
        let bar: Vec<usize> = (0..4).map(|n| c.homology(n).unwrap().dimension).collect();
        let m = build_hopf_cyclic(h.clone(), ModularPair::trivial(hd), None).unwrap();
        let hh = hochschild_homology(&m, 3, 0).unwrap();
        assert_eq!(bar, hh.dims, "{name}");
    }
}

#[test]
fn homotopy_as_printed_fails() {
    let r = load_resolution("uqsl2", 4).unwrap();
    let rep = verify_homotopy_uqsl2(&r, Formulas::Printed, 1, 1).unwrap();
    assert!(!rep.passed());
    let failing: Vec<&str> = rep.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    assert!(failing.contains(&"S d + d S = id [e_sigma]"));
    // degree 0 and S_1 = 0 on e_y are fine as printed
    for ok in ["S d + d S = id [1]", "S d + d S = id [e_y]"] {
        assert!(!failing.contains(&ok), "{ok}");
    }
}

#[test]
fn corrected_homotopy_contracts() {
    let r = load_resolution("uqsl2", 4).unwrap();
    let rep = verify_homotopy_uqsl2(&r, Formulas::Corrected, 2, 2).unwrap();
    assert!(rep.passed(), "{:?}", rep.checks.iter().find(|c| !c.passed));
    assert_eq!(rep.checks.len(), 1 + 1 + 3 + 3 + 1);
    assert!(rep.checks.iter().all(|c| c.checked == 5 * 3 * 3));
}

#[test]
fn homotopy_bounds_are_checked() {
    let r = load_resolution("uqsl2", 4).unwrap();
    assert!(verify_homotopy_uqsl2(&r, Formulas::Corrected, 0, 2).is_err());
    let short = load_resolution("uqsl2", 3).unwrap();
    assert!(matches!(verify_homotopy_uqsl2(&short, Formulas::Corrected, 1, 1), Err(Error::CapExceeded(_))));
}
