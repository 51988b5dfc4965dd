use hopfcyc::cyclic::{build_hopf_cyclic, AlgebraCyclic, CyclicModule, HopfCyclic};
use hopfcyc::field::Field;
use hopfcyc::homology::{
    connes_b, connes_b_normalized, cyclic_homology, cyclic_homology_cc, hochschild_homology, karoubi_compare,
    level_piece, normalize, weight_stable,
};
use hopfcyc::hopf::{HopfRef, ModularPair, Tensor};
use hopfcyc::instances::build_instance;
use hopfcyc::linalg::{homology_of_pair, SparseMatrix};
use hopfcyc::Error;

fn hopf_in(name: &str, field: Option<Field>) -> HopfRef {
    build_instance(name, field).unwrap().hopf
}

fn trivial(name: &str, field: Option<Field>) -> HopfCyclic {
    let h = hopf_in(name, field);
    let p = ModularPair::trivial(&*h);
    build_hopf_cyclic(h, p, Some(2)).unwrap()
}

/// `H_j(Z/n; k)` for `j <= top` from the periodic resolution
/// `… -> kG -N-> kG -(1-g)-> kG`: after base change the maps are `0` and
/// multiplication by `n`.
fn cyclic_group_homology(order: i64, field: Field, top: usize) -> Vec<usize> {
    let map = |j: usize| -> SparseMatrix {
        let c = if j % 2 == 1 { field.zero() } else { field.from_i64(order) };
        SparseMatrix::from_dense(field, &[vec![c]]).unwrap()
    };
    (0..=top)
        .map(|j| {
            let outgoing = if j == 0 { SparseMatrix::zero(0, 1, field) } else { map(j) };
            homology_of_pair(&map(j + 1), &outgoing).unwrap().dimension
        })
        .collect()
}

/// `Σ_{i>=0} dim H_{n-2i}` for a list of group homology dimensions.
fn karoubi_sum(hh: &[usize]) -> Vec<usize> {
    (0..hh.len()).map(|n| (0..=n).rev().step_by(2).map(|j| hh[j]).sum()).collect()
}

#[test]
fn cyclic_z3_over_q() {
    let m = trivial("group:Z3", None);
    let r = cyclic_homology(&m, 4, 0).unwrap();
    assert_eq!(r.hc.dims, vec![1, 0, 1, 0, 1]);
    assert_eq!(r.hc.dims, karoubi_sum(&cyclic_group_homology(3, Field::Rational, 4)));
    assert!(r.hc.euler_holds);
    assert_eq!(r.periodic.stabilized_even, Some(1));
    assert_eq!(r.periodic.stabilized_odd, Some(0));
}

#[test]
fn z2_over_f2_matches_group_homology() {
    let f2 = Field::prime(2).unwrap();
    let m = trivial("group:Z2", Some(f2));
    let hh = hochschild_homology(&m, 6, 0).unwrap();
    assert_eq!(hh.dims, vec![1; 7]);
    assert_eq!(hh.dims, cyclic_group_homology(2, f2, 6));
    let hc = cyclic_homology(&m, 6, 0).unwrap();
    let expect: Vec<usize> = (0..=6).map(|n| n / 2 + 1).collect();
    assert_eq!(hc.hc.dims, expect);
    assert_eq!(karoubi_sum(&hh.dims), expect);
}

#[test]
fn z2_over_q_hochschild() {
    let m = trivial("group:Z2", None);
    let dims = hochschild_homology(&m, 4, 0).unwrap().dims;
    assert_eq!(dims, vec![1, 0, 0, 0, 0]);
    assert_eq!(dims, cyclic_group_homology(2, Field::Rational, 4));
}

#[test]
fn tensor_algebra_weight_pieces() {
    let m = trivial("tensor:2", None);
    let r = cyclic_homology(&m, 4, 3).unwrap();
    assert_eq!(r.hc.dims, vec![1, 2, 1, 2, 1]);
    let hh = hochschild_homology(&m, 4, 3).unwrap();
    assert_eq!(hh.dims, vec![1, 2, 0, 0, 0]);
    let bigger = cyclic_homology(&m, 4, 4).unwrap();
    assert!(weight_stable(&r.hc, &bigger.hc));
    // weight 1 carries HC_1, so cap 0 is not stable
    let w0 = cyclic_homology(&m, 4, 0).unwrap();
    let w1 = cyclic_homology(&m, 4, 1).unwrap();
    assert!(!weight_stable(&w0.hc, &w1.hc));
}

#[test]
fn bicomplex_guard_agrees() {
    let f2 = Field::prime(2).unwrap();
    for (name, field, n, cap) in
        [("group:Z3", None, 4, 0), ("group:Z2", Some(f2), 4, 0), ("group:S3", None, 2, 0), ("tensor:2", None, 3, 2)]
    {
        let m = trivial(name, field);
        let a = cyclic_homology(&m, n, cap).unwrap();
        let b = cyclic_homology_cc(&m, n, cap).unwrap();
        assert_eq!(a.hc.dims, b.dims, "{name}");
    }
}

#[test]
fn algebra_cyclic_module_of_group_algebra() {
    let h = hopf_in("group:S3", None);
    let m = AlgebraCyclic { a: h };
    // HH of a semisimple algebra: its center, here the three conjugacy classes
    assert_eq!(hochschild_homology(&m, 3, 0).unwrap().dims, vec![3, 0, 0, 0]);
    assert_eq!(cyclic_homology(&m, 3, 0).unwrap().hc.dims, vec![3, 0, 3, 0]);
}

#[test]
fn karoubi_for_group_algebras() {
    let f3 = Field::prime(3).unwrap();
    for (name, field) in [("group:Z3", Some(f3)), ("group:S3", None), ("group:Z4", None)] {
        let r = karoubi_compare(hopf_in(name, field), 3, 0).unwrap();
        assert!(r.equal, "{name}: {r:?}");
    }
    let line = karoubi_compare(hopf_in("tensor:1", None), 4, 5).unwrap();
    assert!(line.equal);
    assert_eq!(line.cyclic, vec![1; 5]);
    let err = karoubi_compare(hopf_in("uqsl2", None), 2, 1).unwrap_err();
    assert_eq!(err, Error::NotCocommutative);
}

#[test]
fn infinite_ungraded_is_refused() {
    let m = trivial("laurent", None);
    assert!(matches!(hochschild_homology(&m, 2, 2), Err(Error::NotTruncatable(_))));
}

#[test]
fn b_squares_to_zero_on_normalized_chains() {
    let m = trivial("group:S3", None);
    for n in 0..3 {
        for t in level_piece(&m, n, 0, true).words {
            let x = Tensor::single(t, m.field().one());
            let once = normalize(&m, n + 1, &connes_b(&m, n, &x).unwrap());
            let twice = normalize(&m, n + 2, &connes_b(&m, n + 1, &once).unwrap());
            assert!(twice.is_zero());
        }
    }
}

#[test]
fn connes_b_of_the_unit_is_degenerate() {
    let m = trivial("group:Z3", None);
    let unit = Tensor::single(level_piece(&m, 0, 0, false).words[0].clone(), m.field().one());
    assert!(!connes_b(&m, 0, &unit).unwrap().is_zero());
    assert!(connes_b_normalized(&m, 0, &unit).unwrap().is_zero());
}

#[test]
fn commutative_hp_function_algebras() {
    use hopfcyc::homology::cocyclic::commutative_hp_compare;
    for (name, n) in [("fungrp:Z1", 4), ("fungrp:Z2", 4), ("fungrp:Z3", 3)] {
        let r = commutative_hp_compare(hopf_in(name, None), n).unwrap();
        assert!(r.equal, "{name}: {r:?}");
        assert_eq!(r.hp_coalgebra, [1, 0], "{name}");
    }
}
