//! Axiom checks for Hopf structures on words up to a degree bound.

use super::*;
use crate::check::Check;

fn el(h: &dyn Algebra, w: &Word) -> Element {
    element_of(h, w)
}

/// Coassociativity, counit, antipode and bialgebra compatibility on words of
/// degree `<= d`, plus detection of the declared flags.
pub fn verify_hopf_axioms(h: &dyn HopfAlgebra, d: u32) -> Vec<Check> {
    let basis = h.basis_up_to(d);
    let one = h.field().one();
    let fmt = |w: &Word| h.format_word(w);
    let mut out = Vec::new();

    out.push(Check::run("coassociativity", basis.iter(), |w| {
        let d1 = h.coproduct_word(w);
        let left = d1.map_linear(|tw| {
            h.coproduct_word(&tw[0])
                .map_linear(|p| Tensor::single(tensor_word(&[p[0].clone(), p[1].clone(), tw[1].clone()]), one.clone()))
        });
        let right = iterated_coproduct(h, w, 3);
        (left != right).then(|| (fmt(w), "(Delta x id)Delta != (id x Delta)Delta".into()))
    }));

    out.push(Check::run("counit", basis.iter(), |w| {
        let d1 = h.coproduct_word(w);
        let mut l = Element::zero();
        let mut r = Element::zero();
        for (tw, c) in d1.iter() {
            l.add_scaled(&(c * &h.counit_word(&tw[0])), &el(h, &tw[1]));
            r.add_scaled(&(c * &h.counit_word(&tw[1])), &el(h, &tw[0]));
        }
        let id = el(h, w);
        (l != id || r != id).then(|| (fmt(w), "(eps x id)Delta or (id x eps)Delta differs from id".into()))
    }));

    out.push(Check::run("antipode", basis.iter(), |w| {
        let d1 = h.coproduct_word(w);
        let mut l = Element::zero();
        let mut r = Element::zero();
        for (tw, c) in d1.iter() {
            l.add_scaled(c, &mul(h, &h.antipode_word(&tw[0]), &el(h, &tw[1])));
            r.add_scaled(c, &mul(h, &el(h, &tw[0]), &h.antipode_word(&tw[1])));
        }
        let target = h.unit().scale(&h.counit_word(w));
        (l != target || r != target).then(|| (fmt(w), format!("mu(S x id)Delta = {}", format_element(h, &l))))
    }));

    let pairs: Vec<(&Word, &Word)> = basis.iter().flat_map(|a| basis.iter().map(move |b| (a, b))).collect();
    out.push(Check::run("bialgebra", pairs.iter(), |(a, b)| {
        let ab = h.mul_words(a, b);
        let lhs = coproduct(h, &ab);
        let rhs = tensor_mul_same(h, &h.coproduct_word(a), &h.coproduct_word(b));
        if lhs != rhs {
            return Some((format!("{} * {}", fmt(a), fmt(b)), "Delta(ab) != Delta(a)Delta(b)".into()));
        }
        let e = counit(h, &ab);
        (e != &h.counit_word(a) * &h.counit_word(b))
            .then(|| (format!("{} * {}", fmt(a), fmt(b)), "eps(ab) != eps(a)eps(b)".into()))
    }));

    let flags = h.declared_flags();
    let comm = detect_commutative(h, d);
    out.push(flag_check("commutative flag", flags.commutative, comm));
    let cocomm = detect_cocommutative(h, d);
    out.push(flag_check("cocommutative flag", flags.cocommutative, cocomm));
    out
}

fn flag_check(name: &str, declared: bool, found: Option<String>) -> Check {
    match (declared, found) {
        (true, Some(w)) => Check::fail(name, 1, w, "declared but violated"),
        (false, None) => Check::fail(name, 1, "-", "not declared but holds on all tested words"),
        _ => Check::pass(name, 1),
    }
}

/// A witness pair `a b != b a`, or `None` if commutative up to degree `d`.
pub fn detect_commutative(h: &dyn Algebra, d: u32) -> Option<String> {
    let basis = h.basis_up_to(d);
    for a in &basis {
        for b in &basis {
            if h.mul_words(a, b) != h.mul_words(b, a) {
                return Some(format!("{} * {}", h.format_word(a), h.format_word(b)));
            }
        }
    }
    None
}

pub fn detect_cocommutative(h: &dyn HopfAlgebra, d: u32) -> Option<String> {
    h.basis_up_to(d).into_iter().find_map(|w| {
        let c = h.coproduct_word(&w);
        (c != flip(&c)).then(|| h.format_word(&w))
    })
}

/// The four listed properties of `S_sigma` for grouplike `sigma`.
pub fn verify_sigma_antipode(h: &dyn HopfAlgebra, sigma: &Element, d: u32) -> Vec<Check> {
    let basis = h.basis_up_to(d);
    let fmt = |w: &Word| h.format_word(w);
    let s = |e: &Element| sigma_antipode(h, e, sigma);
    let mut out = Vec::new();
    out.push(if s(&h.unit()) == *sigma {
        Check::pass("S_sigma(1) = sigma", 1)
    } else {
        Check::fail("S_sigma(1) = sigma", 1, "1", format_element(h, &s(&h.unit())))
    });
    let pairs: Vec<(&Word, &Word)> = basis.iter().flat_map(|a| basis.iter().map(move |b| (a, b))).collect();
    out.push(Check::run("S_sigma(ab) = S_sigma(b) S(a)", pairs.iter(), |(a, b)| {
        let lhs = s(&h.mul_words(a, b));
        let rhs = mul(h, &s(&el(h, b)), &h.antipode_word(a));
        (lhs != rhs).then(|| (format!("{} * {}", fmt(a), fmt(b)), String::new()))
    }));
    out.push(Check::run("Delta S_sigma = flip (S_sigma x S_sigma) Delta", basis.iter(), |w| {
        let lhs = coproduct(h, &s(&el(h, w)));
        let rhs = h.coproduct_word(w).map_linear(|tw| tensor_of(&[s(&el(h, &tw[1])), s(&el(h, &tw[0]))]));
        (lhs != rhs).then(|| (fmt(w), String::new()))
    }));
    out.push(Check::run("eps S_sigma = eps", basis.iter(), |w| {
        (counit(h, &s(&el(h, w))) != h.counit_word(w)).then(|| (fmt(w), String::new()))
    }));
    out
}

/// Checks `S~_sigma^2(w) = w` for every basis word of degree `<= d`.
pub fn check_modular_involution(h: &dyn HopfAlgebra, pair: &ModularPair, d: u32) -> Check {
    let name = format!("S~^2 = id for {}", pair.label);
    Check::run(name, h.basis_up_to(d), |w| {
        let e = el(h, w);
        let twice = twisted_antipode(h, &twisted_antipode(h, &e, pair), pair);
        (twice != e).then(|| (h.format_word(w), format!("S~^2 = {}", format_element(h, &twice))))
    })
}

/// `S^2(w) = sigma w sigma^-1` on words of degree `<= d`.
pub fn verify_s2_conjugation(h: &dyn HopfAlgebra, sigma: &str, d: u32) -> crate::Result<Check> {
    let s = parse_word_expr(h, sigma)?;
    let s_inv = antipode(h, &s);
    Ok(Check::run(format!("S^2(w) = {sigma} w {sigma}^-1"), h.basis_up_to(d), |w| {
        let e = el(h, w);
        let lhs = antipode(h, &antipode(h, &e));
        let rhs = mul_all(h, &[s.clone(), e, s_inv.clone()]);
        (lhs != rhs).then(|| (h.format_word(w), format_element(h, &lhs)))
    }))
}

/// Multiplicativity of every named character and well-definedness on the
/// relations, tested on pairs of words of degree `<= d`.
pub fn verify_characters(h: &dyn HopfAlgebra, d: u32) -> Vec<Check> {
    h.characters()
        .into_iter()
        .map(|c| {
            let name = format!("character {} multiplicative", c.name);
            match c.multiplicativity_witness(h, d) {
                None => Check::pass(name, 1),
                Some((a, b)) => Check::fail(name, 1, format!("{} * {}", h.format_word(&a), h.format_word(&b)), ""),
            }
        })
        .collect()
}
