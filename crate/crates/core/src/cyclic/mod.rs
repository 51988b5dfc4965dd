//! Simplicial, cyclic and cocyclic modules built from Hopf algebras and
//! algebras, maps between them, and verifiers for their identities.
//!
//! Operators act lazily on basis tensor words; nothing is materialized here.

pub mod cocyclic;
pub mod maps;
pub mod modules;

use rayon::prelude::*;

use crate::check::Check;
use crate::field::{Field, Scalar};
use crate::hopf::{Algebra, Element, HopfAlgebra, LetterInfo, Tensor, TensorWord, Word};

pub use cocyclic::{CmCocyclic, CommutativeCocyclic};
pub use maps::{
    verify_cocyclic_map, verify_cyclic_map, verify_gamma_theta, verify_inverse_pair, Gamma, LevelMap, MacLaneInverse,
    MacLaneTheta, Pi, Psi, Theta,
};
pub use modules::{build_hopf_cyclic, AlgebraCyclic, Coefficients, HochschildModule, HopfCyclic, PathSpace};

/// A simplicial module, optionally cyclic. Level `n` is a tensor product of
/// `width(n)` algebras; elements are [`Tensor`]s keyed by tensor words.
pub trait CyclicModule: Send + Sync {
    fn label(&self) -> String;
    fn field(&self) -> Field;
    fn width(&self, n: usize) -> usize;
    /// Algebra holding factor `j` at level `n`.
    fn factor(&self, n: usize, j: usize) -> &dyn Algebra;
    /// `δ_i`, level `n` to `n - 1`, for `0 <= i <= n`.
    fn face(&self, n: usize, i: usize, t: &TensorWord) -> Tensor;
    /// `σ_i`, level `n` to `n + 1`, for `0 <= i <= n`.
    fn degeneracy(&self, n: usize, i: usize, t: &TensorWord) -> Tensor;
    /// `τ_n`, or `None` when the module is only simplicial.
    fn cyclic(&self, n: usize, t: &TensorWord) -> Option<Tensor>;

    /// Factor positions at level `n` where a unit makes a word degenerate,
    /// i.e. the image of the degeneracies is spanned by such words.
    fn normalized_slots(&self, n: usize) -> std::ops::Range<usize> {
        0..self.width(n)
    }

    fn is_cyclic(&self) -> bool {
        self.cyclic(0, &TensorWord::from_elem(Word::new(), self.width(0))).is_some()
    }
}

/// A cocyclic module. Cofaces `d_i` go from level `n` to `n + 1` for
/// `0 <= i <= n + 1`, codegeneracies `s_i` from level `n` to `n - 1` for
/// `0 <= i <= n - 1`.
pub trait CocyclicModule: Send + Sync {
    fn label(&self) -> String;
    fn field(&self) -> Field;
    fn width(&self, n: usize) -> usize;
    fn factor(&self, n: usize, j: usize) -> &dyn Algebra;
    fn coface(&self, n: usize, i: usize, t: &TensorWord) -> Tensor;
    fn codegeneracy(&self, n: usize, i: usize, t: &TensorWord) -> Tensor;
    fn cocyclic(&self, n: usize, t: &TensorWord) -> Tensor;
}

/// The ground field as a one-dimensional algebra; its only basis word is the
/// empty word.
pub struct Ground {
    field: Field,
}

impl Ground {
    pub fn new(field: Field) -> Self {
        Ground { field }
    }
}

impl Algebra for Ground {
    fn name(&self) -> &str {
        "k"
    }
    fn field(&self) -> Field {
        self.field
    }
    fn letters(&self) -> &[LetterInfo] {
        &[]
    }
    fn mul_words(&self, _a: &Word, _b: &Word) -> Element {
        Element::single(Word::new(), self.field.one())
    }
    fn degree(&self, _w: &Word) -> u32 {
        0
    }
    fn basis_up_to(&self, _d: u32) -> Vec<Word> {
        vec![Word::new()]
    }
    fn is_finite_dimensional(&self) -> bool {
        true
    }
}

pub(crate) fn single(t: TensorWord, c: Scalar) -> Tensor {
    if c.is_zero() {
        Tensor::zero()
    } else {
        Tensor::single(t, c)
    }
}

pub(crate) fn insert_unit(t: &TensorWord, pos: usize) -> TensorWord {
    let mut out = t.clone();
    out.insert(pos, Word::new());
    out
}

/// Replaces factors `j..j + len` of `t` by the element `e`.
pub(crate) fn splice(t: &TensorWord, j: usize, len: usize, e: &Element) -> Tensor {
    let mut out = Tensor::zero();
    for (w, c) in e.iter() {
        let mut k: TensorWord = t[..j].iter().cloned().collect();
        k.push(w.clone());
        k.extend(t[j + len..].iter().cloned());
        out.add_term(k, c.clone());
    }
    out
}

/// Multiplies factors `j` and `j + 1`.
pub(crate) fn mul_adjacent(alg: &dyn Algebra, t: &TensorWord, j: usize) -> Tensor {
    splice(t, j, 2, &alg.mul_words(&t[j], &t[j + 1]))
}

/// Every way of choosing one term of `Δ^(k)(w)` for each word `w`: the
/// chosen tuples and the product of their coefficients.
pub(crate) fn coproduct_terms(h: &dyn HopfAlgebra, words: &[Word], k: usize) -> Vec<(Vec<TensorWord>, Scalar)> {
    let mut acc: Vec<(Vec<TensorWord>, Scalar)> = vec![(Vec::new(), h.field().one())];
    for w in words {
        let d = crate::hopf::iterated_coproduct(h, w, k);
        let mut next = Vec::with_capacity(acc.len() * d.len());
        for (parts, c) in &acc {
            for (tw, e) in d.iter() {
                let mut p = parts.clone();
                p.push(tw.clone());
                next.push((p, c * e));
            }
        }
        acc = next;
    }
    acc
}

/// Product of words in order, as an element.
pub(crate) fn product<'a>(alg: &dyn Algebra, words: impl IntoIterator<Item = &'a Word>) -> Element {
    let mut acc = alg.unit();
    for w in words {
        acc = acc.map_linear(|a| alg.mul_words(a, w));
    }
    acc
}

pub fn apply_linear(x: &Tensor, f: impl Fn(&TensorWord) -> Tensor) -> Tensor {
    x.map_linear(|t| f(t))
}

/// Tensor words at one level whose factor degrees sum to at most `d`. Finite
/// dimensional factors contribute their whole basis at degree 0.
pub fn spanning_words(factors: &[&dyn Algebra], d: u32) -> Vec<TensorWord> {
    let bases: Vec<Vec<(Word, u32)>> =
        factors.iter().map(|a| a.basis_up_to(d).into_iter().map(|w| (w.clone(), a.degree(&w))).collect()).collect();
    let mut out = Vec::new();
    let mut cur = TensorWord::new();
    fn rec(bases: &[Vec<(Word, u32)>], budget: u32, cur: &mut TensorWord, out: &mut Vec<TensorWord>) {
        let Some((first, rest)) = bases.split_first() else {
            out.push(cur.clone());
            return;
        };
        for (w, deg) in first {
            if *deg <= budget {
                cur.push(w.clone());
                rec(rest, budget - deg, cur, out);
                cur.pop();
            }
        }
    }
    rec(&bases, d, &mut cur, &mut out);
    out
}

pub(crate) fn level_factors(m: &dyn CyclicModule, n: usize) -> Vec<&dyn Algebra> {
    (0..m.width(n)).map(|j| m.factor(n, j)).collect()
}

pub(crate) fn colevel_factors(m: &dyn CocyclicModule, n: usize) -> Vec<&dyn Algebra> {
    (0..m.width(n)).map(|j| m.factor(n, j)).collect()
}

/// `u`, `a | b`, or `1` for the empty tensor at level 0.
pub fn format_tensor_word(algs: &[&dyn Algebra], t: &TensorWord) -> String {
    if t.is_empty() {
        return "1".into();
    }
    t.iter()
        .enumerate()
        .map(|(i, w)| algs[i.min(algs.len().saturating_sub(1))].format_word(w))
        .collect::<Vec<_>>()
        .join(" | ")
}

pub fn format_level(algs: &[&dyn Algebra], x: &Tensor) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(t, c)| {
            let body = format_tensor_word(algs, t);
            if c.is_one() {
                body
            } else {
                format!("({c})*{body}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Runs `test` over `inputs` in parallel and keeps the first failure in input
/// order. `test` returns a description of the mismatch on failure.
pub(crate) fn run_words(
    name: String,
    inputs: &[TensorWord],
    algs: &[&dyn Algebra],
    test: impl Fn(&TensorWord) -> Option<String> + Sync,
) -> Check {
    let hit = inputs.par_iter().enumerate().find_map_first(|(k, t)| test(t).map(|d| (k, t, d)));
    match hit {
        None => Check::pass(name, inputs.len()),
        Some((k, t, detail)) => Check::fail(name, k + 1, format_tensor_word(algs, t), detail),
    }
}

fn mismatch(algs: &[&dyn Algebra], lhs: &Tensor, rhs: &Tensor) -> String {
    format!("lhs = {}, rhs = {}", format_level(algs, lhs), format_level(algs, rhs))
}

/// Checks the simplicial identities at levels `0..=n_max` and, for cyclic
/// modules, `τ_n^{n+1} = id` (2.2), `δ_i τ_n = τ_{n-1} δ_{i-1}` (2.3),
/// `δ_0 τ_n = δ_n` (2.4), `σ_i τ_n = τ_{n+1} σ_{i-1}` (2.5) and
/// `σ_0 τ_n = τ_{n+1}^2 σ_n` (2.6), on tensor words of total degree `<= d`.
pub fn verify_cyclic_axioms(m: &dyn CyclicModule, n_max: usize, d: u32) -> Vec<Check> {
    let cyclic = m.is_cyclic();
    let face = |n: usize, i: usize, x: &Tensor| x.map_linear(|t| m.face(n, i, t));
    let degen = |n: usize, i: usize, x: &Tensor| x.map_linear(|t| m.degeneracy(n, i, t));
    let tau = |n: usize, x: &Tensor| x.map_linear(|t| m.cyclic(n, t).expect("cyclic module"));
    let f = m.field();
    let mut out = Vec::new();
    for n in 0..=n_max {
        let algs = level_factors(m, n);
        let words = spanning_words(&algs, d);
        let lower = if n > 0 { level_factors(m, n - 1) } else { Vec::new() };
        let describe = |a: &Tensor, b: &Tensor, target: &[&dyn Algebra]| mismatch(target, a, b);
        let one = |t: &TensorWord| Tensor::single(t.clone(), f.one());

        if n >= 2 {
            out.push(run_words(format!("simplicial: faces [n={n}]"), &words, &algs, |t| {
                let x = one(t);
                let tgt = level_factors(m, n - 2);
                for j in 1..=n {
                    let dj = face(n, j, &x);
                    for i in 0..j {
                        let lhs = face(n - 1, i, &dj);
                        let rhs = face(n - 1, j - 1, &face(n, i, &x));
                        if lhs != rhs {
                            return Some(format!("i={i}, j={j}: {}", describe(&lhs, &rhs, &tgt)));
                        }
                    }
                }
                None
            }));
        }
        out.push(run_words(format!("simplicial: degeneracies [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let tgt = level_factors(m, n + 2);
            for j in 0..=n {
                let sj = degen(n, j, &x);
                for i in 0..=j {
                    let lhs = degen(n + 1, i, &sj);
                    let rhs = degen(n + 1, j + 1, &degen(n, i, &x));
                    if lhs != rhs {
                        return Some(format!("i={i}, j={j}: {}", describe(&lhs, &rhs, &tgt)));
                    }
                }
            }
            None
        }));
        out.push(run_words(format!("simplicial: faces of degeneracies [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            for j in 0..=n {
                let sj = degen(n, j, &x);
                for i in 0..=n + 1 {
                    let lhs = face(n + 1, i, &sj);
                    let rhs = if i == j || i == j + 1 {
                        x.clone()
                    } else if i < j {
                        degen(n - 1, j - 1, &face(n, i, &x))
                    } else {
                        degen(n - 1, j, &face(n, i - 1, &x))
                    };
                    if lhs != rhs {
                        return Some(format!("i={i}, j={j}: {}", describe(&lhs, &rhs, &algs)));
                    }
                }
            }
            None
        }));
        if !cyclic {
            continue;
        }
        out.push(run_words(format!("(2.2) tau^(n+1) = id [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let mut y = x.clone();
            for _ in 0..=n {
                y = tau(n, &y);
            }
            (y != x).then(|| describe(&y, &x, &algs))
        }));
        if n == 0 {
            out.push(run_words("(2.5)/(2.6) degeneracy and tau [n=0]".into(), &words, &algs, |t| {
                let x = one(t);
                let lhs = degen(0, 0, &tau(0, &x));
                let rhs = tau(1, &tau(1, &degen(0, 0, &x)));
                (lhs != rhs).then(|| describe(&lhs, &rhs, &level_factors(m, 1)))
            }));
            continue;
        }
        out.push(run_words(format!("(2.3) face_i tau = tau face_(i-1) [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let tx = tau(n, &x);
            for i in 1..=n {
                let lhs = face(n, i, &tx);
                let rhs = tau(n - 1, &face(n, i - 1, &x));
                if lhs != rhs {
                    return Some(format!("i={i}: {}", describe(&lhs, &rhs, &lower)));
                }
            }
            None
        }));
        out.push(run_words(format!("(2.4) face_0 tau = face_n [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let lhs = face(n, 0, &tau(n, &x));
            let rhs = face(n, n, &x);
            (lhs != rhs).then(|| describe(&lhs, &rhs, &lower))
        }));
        let upper = level_factors(m, n + 1);
        out.push(run_words(format!("(2.5) degeneracy_i tau = tau degeneracy_(i-1) [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let tx = tau(n, &x);
            for i in 1..=n {
                let lhs = degen(n, i, &tx);
                let rhs = tau(n + 1, &degen(n, i - 1, &x));
                if lhs != rhs {
                    return Some(format!("i={i}: {}", describe(&lhs, &rhs, &upper)));
                }
            }
            None
        }));
        out.push(run_words(format!("(2.6) degeneracy_0 tau = tau^2 degeneracy_n [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let lhs = degen(n, 0, &tau(n, &x));
            let rhs = tau(n + 1, &tau(n + 1, &degen(n, n, &x)));
            (lhs != rhs).then(|| describe(&lhs, &rhs, &upper))
        }));
    }
    out
}

/// Checks the cocyclic identities: coface and codegeneracy relations, and
/// `τ_n d_i = d_{i-1} τ_{n-1}`, `τ_n d_0 = d_n`, `τ_n s_i = s_{i-1} τ_{n+1}`,
/// `τ_n s_0 = s_n τ_{n+1}^2`, `τ_n^{n+1} = id`, with inputs at levels `<= n_max`.
pub fn verify_cocyclic_axioms(m: &dyn CocyclicModule, n_max: usize, d: u32) -> Vec<Check> {
    let cof = |n: usize, i: usize, x: &Tensor| x.map_linear(|t| m.coface(n, i, t));
    let cod = |n: usize, i: usize, x: &Tensor| x.map_linear(|t| m.codegeneracy(n, i, t));
    let tau = |n: usize, x: &Tensor| x.map_linear(|t| m.cocyclic(n, t));
    let f = m.field();
    let one = |t: &TensorWord| Tensor::single(t.clone(), f.one());
    let mut out = Vec::new();
    for n in 0..=n_max {
        let algs = colevel_factors(m, n);
        let words = spanning_words(&algs, d);
        let describe = |a: &Tensor, b: &Tensor, lvl: usize| mismatch(&colevel_factors(m, lvl), a, b);

        out.push(run_words(format!("cosimplicial: cofaces [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            for j in 1..=n + 2 {
                for i in 0..j {
                    let lhs = cof(n + 1, j, &cof(n, i, &x));
                    let rhs = cof(n + 1, i, &cof(n, j - 1, &x));
                    if lhs != rhs {
                        return Some(format!("i={i}, j={j}: {}", describe(&lhs, &rhs, n + 2)));
                    }
                }
            }
            None
        }));
        if n >= 2 {
            out.push(run_words(format!("cosimplicial: codegeneracies [n={n}]"), &words, &algs, |t| {
                let x = one(t);
                for j in 0..=n - 2 {
                    for i in 0..=j {
                        let lhs = cod(n - 1, j, &cod(n, i, &x));
                        let rhs = cod(n - 1, i, &cod(n, j + 1, &x));
                        if lhs != rhs {
                            return Some(format!("i={i}, j={j}: {}", describe(&lhs, &rhs, n - 2)));
                        }
                    }
                }
                None
            }));
        }
        out.push(run_words(format!("cosimplicial: codegeneracies of cofaces [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            for i in 0..=n + 1 {
                let di = cof(n, i, &x);
                for j in 0..=n {
                    let lhs = cod(n + 1, j, &di);
                    let rhs = if i == j || i == j + 1 {
                        x.clone()
                    } else if i < j {
                        cof(n - 1, i, &cod(n, j - 1, &x))
                    } else {
                        cof(n - 1, i - 1, &cod(n, j, &x))
                    };
                    if lhs != rhs {
                        return Some(format!("i={i}, j={j}: {}", describe(&lhs, &rhs, n)));
                    }
                }
            }
            None
        }));
        out.push(run_words(format!("cocyclic: tau^(n+1) = id [n={n}]"), &words, &algs, |t| {
            let x = one(t);
            let mut y = x.clone();
            for _ in 0..=n {
                y = tau(n, &y);
            }
            (y != x).then(|| describe(&y, &x, n))
        }));
        // inputs at level n, cofaces into level n + 1
        out.push(run_words(format!("cocyclic: tau coface [n={}]", n + 1), &words, &algs, |t| {
            let x = one(t);
            for i in 1..=n + 1 {
                let lhs = tau(n + 1, &cof(n, i, &x));
                let rhs = cof(n, i - 1, &tau(n, &x));
                if lhs != rhs {
                    return Some(format!("i={i}: {}", describe(&lhs, &rhs, n + 1)));
                }
            }
            let lhs = tau(n + 1, &cof(n, 0, &x));
            let rhs = cof(n, n + 1, &x);
            (lhs != rhs).then(|| format!("i=0: {}", describe(&lhs, &rhs, n + 1)))
        }));
        // inputs at level n, codegeneracies into level n - 1
        if n >= 1 {
            out.push(run_words(format!("cocyclic: tau codegeneracy [n={}]", n - 1), &words, &algs, |t| {
                let x = one(t);
                let tx = tau(n, &x);
                for i in 1..n {
                    let lhs = tau(n - 1, &cod(n, i, &x));
                    let rhs = cod(n, i - 1, &tx);
                    if lhs != rhs {
                        return Some(format!("i={i}: {}", describe(&lhs, &rhs, n - 1)));
                    }
                }
                let lhs = tau(n - 1, &cod(n, 0, &x));
                let rhs = cod(n, n - 1, &tau(n, &tx));
                (lhs != rhs).then(|| format!("i=0: {}", describe(&lhs, &rhs, n - 1)))
            }));
        }
    }
    out
}
