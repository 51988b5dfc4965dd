//! Right comodule algebras `beta: A -> A (x) H` and trace functionals on them.

use std::sync::Arc;

use super::*;
use crate::check::Check;

#[derive(Clone)]
enum Kind {
    /// `beta(a) = a (x) 1`.
    Trivial,
    /// `beta = Delta`; requires `A = H`.
    Regular,
    /// Values on letters, extended multiplicatively.
    Letters(Vec<Tensor>),
}

#[derive(Clone)]
pub struct Coaction {
    pub algebra: AlgebraRef,
    pub hopf: HopfRef,
    pub name: String,
    kind: Kind,
}

impl Coaction {
    pub fn trivial(algebra: AlgebraRef, hopf: HopfRef) -> Self {
        Coaction {
            name: format!("trivial coaction of {} on {}", hopf.name(), algebra.name()),
            algebra,
            hopf,
            kind: Kind::Trivial,
        }
    }

    pub fn regular(hopf: HopfRef) -> Self {
        Coaction { name: format!("coproduct of {}", hopf.name()), algebra: hopf.clone(), hopf, kind: Kind::Regular }
    }

    /// `values[l]` is `beta` of letter `l` of `algebra`, a tensor of length 2.
    pub fn on_letters(name: impl Into<String>, algebra: AlgebraRef, hopf: HopfRef, values: Vec<Tensor>) -> Self {
        assert_eq!(values.len(), algebra.letters().len());
        Coaction { name: name.into(), algebra, hopf, kind: Kind::Letters(values) }
    }

    fn algs(&self) -> [&dyn Algebra; 2] {
        [&*self.algebra, &*self.hopf]
    }

    pub fn coact_word(&self, w: &Word) -> Tensor {
        let one = self.algebra.field().one();
        match &self.kind {
            Kind::Trivial => Tensor::single(tensor_word(&[w.clone(), Word::new()]), one),
            Kind::Regular => self.hopf.coproduct_word(w),
            Kind::Letters(vals) => {
                let mut acc = Tensor::single(tensor_word(&[Word::new(), Word::new()]), one);
                for &l in w {
                    acc = tensor_mul(&self.algs(), &acc, &vals[l as usize]);
                }
                acc
            }
        }
    }

    pub fn coact(&self, e: &Element) -> Tensor {
        e.map_linear(|w| self.coact_word(w))
    }
}

/// A linear functional on a basis of an algebra.
#[derive(Clone)]
pub struct Trace {
    pub name: String,
    f: Arc<dyn Fn(&Word) -> Scalar + Send + Sync>,
    field: Field,
}

impl Trace {
    pub fn new(name: impl Into<String>, field: Field, f: impl Fn(&Word) -> Scalar + Send + Sync + 'static) -> Self {
        Trace { name: name.into(), f: Arc::new(f), field }
    }

    pub fn zero(field: Field) -> Self {
        Trace::new("0", field, move |_| field.zero())
    }

    /// Indicator of a single basis word.
    pub fn indicator(alg: &dyn Algebra, w: Word) -> Self {
        let field = alg.field();
        Trace::new(
            format!("[= {}]", alg.format_word(&w)),
            field,
            move |x| {
                if *x == w {
                    field.one()
                } else {
                    field.zero()
                }
            },
        )
    }

    pub fn counit(h: HopfRef) -> Self {
        let field = h.field();
        Trace::new("epsilon", field, move |w| h.counit_word(w))
    }

    pub fn eval_word(&self, w: &Word) -> Scalar {
        (self.f)(w)
    }

    pub fn eval(&self, e: &Element) -> Scalar {
        let mut acc = self.field.zero();
        for (w, c) in e.iter() {
            acc = &acc + &(c * &self.eval_word(w));
        }
        acc
    }
}

/// Coassociativity, counit law and multiplicativity of `beta` on words of
/// degree `<= d`.
pub fn check_comodule_axioms(c: &Coaction, d: u32) -> Vec<Check> {
    let a = &*c.algebra;
    let h = &*c.hopf;
    let one = a.field().one();
    let basis = a.basis_up_to(d);
    let mut out = Vec::new();
    out.push(Check::run("coaction coassociative", basis.iter(), |w| {
        let b = c.coact_word(w);
        let lhs = b.map_linear(|tw| {
            h.coproduct_word(&tw[1])
                .map_linear(|p| Tensor::single(tensor_word(&[tw[0].clone(), p[0].clone(), p[1].clone()]), one.clone()))
        });
        let rhs = b.map_linear(|tw| {
            c.coact_word(&tw[0])
                .map_linear(|p| Tensor::single(tensor_word(&[p[0].clone(), p[1].clone(), tw[1].clone()]), one.clone()))
        });
        (lhs != rhs).then(|| (a.format_word(w), String::new()))
    }));
    out.push(Check::run("coaction counital", basis.iter(), |w| {
        let mut r = Element::zero();
        for (tw, s) in c.coact_word(w).iter() {
            r.add_scaled(&(s * &h.counit_word(&tw[1])), &element_of(a, &tw[0]));
        }
        (r != element_of(a, w)).then(|| (a.format_word(w), format_element(a, &r)))
    }));
    let pairs: Vec<(&Word, &Word)> = basis.iter().flat_map(|x| basis.iter().map(move |y| (x, y))).collect();
    out.push(Check::run("coaction multiplicative", pairs.iter(), |(x, y)| {
        let lhs = c.coact(&a.mul_words(x, y));
        let rhs = tensor_mul(&c.algs(), &c.coact_word(x), &c.coact_word(y));
        (lhs != rhs).then(|| (format!("{} * {}", a.format_word(x), a.format_word(y)), String::new()))
    }));
    out
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct TraceReport {
    pub is_delta_trace: bool,
    pub is_sigma_invariant: bool,
    pub checks: Vec<Check>,
}

/// `Tr(ab) = sum Tr(b a(0)) delta(a(1))` and `sum Tr(a(0)) a(1) = Tr(a) sigma`
/// on words of degree `<= d`.
pub fn check_trace_properties(tr: &Trace, c: &Coaction, pair: &ModularPair, d: u32) -> TraceReport {
    let a = &*c.algebra;
    let h = &*c.hopf;
    let f = a.field();
    let basis = a.basis_up_to(d);
    let pairs: Vec<(&Word, &Word)> = basis.iter().flat_map(|x| basis.iter().map(move |y| (x, y))).collect();
    let trace = Check::run("delta-trace", pairs.iter(), |(x, y)| {
        let lhs = tr.eval(&a.mul_words(x, y));
        let mut rhs = f.zero();
        for (tw, s) in c.coact_word(x).iter() {
            let dl = pair.delta.eval_word(f, &tw[1]);
            if dl.is_zero() {
                continue;
            }
            rhs = &rhs + &(&(s * &dl) * &tr.eval(&a.mul_words(y, &tw[0])));
        }
        (lhs != rhs).then(|| {
            (format!("{} , {}", a.format_word(x), a.format_word(y)), format!("Tr(ab) = {lhs}, twisted side = {rhs}"))
        })
    });
    let inv = Check::run("sigma-invariance", basis.iter(), |x| {
        let mut lhs = Element::zero();
        for (tw, s) in c.coact_word(x).iter() {
            lhs.add_scaled(&(s * &tr.eval_word(&tw[0])), &element_of(h, &tw[1]));
        }
        let rhs = pair.sigma.scale(&tr.eval_word(x));
        (lhs != rhs).then(|| (a.format_word(x), format_element(h, &lhs)))
    });
    TraceReport { is_delta_trace: trace.passed, is_sigma_invariant: inv.passed, checks: vec![trace, inv] }
}
