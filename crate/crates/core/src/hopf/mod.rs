//! Hopf algebras on a normal-form word basis, Sweedler calculus, characters
//! and modular pairs.

pub mod checks;
pub mod coaction;
mod lincomb;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
pub use lincomb::{scalar_tensor, tensor_word, word, Element, LinComb, Tensor, TensorWord, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterInfo {
    pub name: String,
    pub degree: u32,
    /// Letter id of the inverse, for invertible generators.
    pub inverse: Option<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Flags {
    pub commutative: bool,
    pub cocommutative: bool,
    pub finite_dimensional: bool,
}

/// An associative unital algebra with a fixed word basis.
pub trait Algebra: Send + Sync {
    fn name(&self) -> &str;
    fn field(&self) -> Field;
    fn letters(&self) -> &[LetterInfo];
    /// Product of two basis words, expanded in the basis.
    fn mul_words(&self, a: &Word, b: &Word) -> Element;
    fn degree(&self, w: &Word) -> u32;
    /// All basis words of degree at most `d`, in a deterministic order.
    fn basis_up_to(&self, d: u32) -> Vec<Word>;
    fn is_finite_dimensional(&self) -> bool;

    /// Whether products, and for Hopf algebras the structure maps, preserve
    /// degree, so that complexes split into finite weight pieces.
    fn is_graded(&self) -> bool {
        self.is_finite_dimensional()
    }

    fn format_word(&self, w: &Word) -> String {
        format_letters(self.letters(), w)
    }

    fn unit(&self) -> Element {
        Element::single(Word::new(), self.field().one())
    }
}

/// Hopf structure maps on basis words.
pub trait HopfAlgebra: Algebra {
    fn coproduct_word(&self, w: &Word) -> Tensor;
    fn counit_word(&self, w: &Word) -> Scalar;
    fn antipode_word(&self, w: &Word) -> Element;
    fn declared_flags(&self) -> Flags;

    /// Named characters known to the instance; `epsilon` is always present.
    fn characters(&self) -> Vec<Character> {
        vec![Character::counit(self)]
    }

    /// Modular pairs the instance advertises, by name.
    fn advertised_pairs(&self) -> Vec<(String, String, String)> {
        vec![("epsilon,1".into(), "epsilon".into(), "1".into())]
    }
}

/// Renders a word with runs of equal letters collapsed to powers.
pub fn format_letters(letters: &[LetterInfo], w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let name = &letters[w[i] as usize].name;
        if j - i == 1 {
            parts.push(name.clone());
        } else if let Some(base) = name.strip_suffix("^-1") {
            parts.push(format!("{base}^-{}", j - i));
        } else {
            parts.push(format!("{name}^{}", j - i));
        }
        i = j;
    }
    parts.join(" ")
}

pub fn format_element(alg: &dyn Algebra, e: &Element) -> String {
    format_comb(e, |w| alg.format_word(w))
}

pub fn format_tensor(algs: &[&dyn Algebra], t: &Tensor) -> String {
    format_comb(t, |tw| {
        if tw.is_empty() {
            return "[]".into();
        }
        let parts: Vec<String> =
            tw.iter().enumerate().map(|(i, w)| algs[i.min(algs.len() - 1)].format_word(w)).collect();
        format!("[{}]", parts.join(" | "))
    })
}

fn format_comb<K: Ord + Clone>(c: &LinComb<K>, f: impl Fn(&K) -> String) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = c.iter().map(|(k, v)| if v.is_one() { f(k) } else { format!("({v})*{}", f(k)) }).collect();
    parts.join(" + ")
}

pub fn letter_by_name(alg: &dyn Algebra, name: &str) -> Option<u16> {
    alg.letters().iter().position(|l| l.name == name).map(|i| i as u16)
}

/// Parses a product of generators such as `K^-1 x^2 y` (or `1`) and
/// normalizes it.
pub fn parse_word_expr(alg: &dyn Algebra, s: &str) -> Result<Element> {
    let mut out = alg.unit();
    for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        if tok == "1" {
            continue;
        }
        let (letter, exp) = match letter_by_name(alg, tok) {
            Some(l) => (l, 1i64),
            None => {
                let (base, e) = tok.rsplit_once('^').ok_or_else(|| Error::UnknownGenerator(tok.to_string()))?;
                let e: i64 = e
                    .trim_matches(|c| c == '(' || c == ')')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{tok}'")))?;
                let l = letter_by_name(alg, base).ok_or_else(|| Error::UnknownGenerator(base.to_string()))?;
                (l, e)
            }
        };
        let letter = if exp < 0 {
            alg.letters()[letter as usize]
                .inverse
                .ok_or_else(|| Error::NonInvertibleInverse(alg.letters()[letter as usize].name.clone()))?
        } else {
            letter
        };
        let lw = Element::single(word(&[letter]), alg.field().one());
        for _ in 0..exp.unsigned_abs() {
            out = mul(alg, &out, &lw);
        }
    }
    Ok(out)
}

/// Normalizes a formal product of `(letter, exponent)` pairs.
pub fn normalize_product(alg: &dyn Algebra, factors: &[(u16, i64)]) -> Result<Element> {
    let mut out = alg.unit();
    for &(l, e) in factors {
        let info = alg.letters().get(l as usize).ok_or_else(|| Error::UnknownGenerator(format!("#{l}")))?;
        let letter =
            if e < 0 { info.inverse.ok_or_else(|| Error::NonInvertibleInverse(info.name.clone()))? } else { l };
        let lw = Element::single(word(&[letter]), alg.field().one());
        for _ in 0..e.unsigned_abs() {
            out = mul(alg, &out, &lw);
        }
    }
    Ok(out)
}

pub fn mul(alg: &dyn Algebra, a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            out.add_scaled(&(ca * cb), &alg.mul_words(wa, wb));
        }
    }
    out
}

pub fn mul_all(alg: &dyn Algebra, factors: &[Element]) -> Element {
    factors.iter().fold(alg.unit(), |acc, f| mul(alg, &acc, f))
}

pub fn element_of(alg: &dyn Algebra, w: &Word) -> Element {
    Element::single(w.clone(), alg.field().one())
}

pub fn coproduct(h: &dyn HopfAlgebra, e: &Element) -> Tensor {
    e.map_linear(|w| h.coproduct_word(w))
}

pub fn counit(h: &dyn HopfAlgebra, e: &Element) -> Scalar {
    let mut acc = h.field().zero();
    for (w, c) in e.iter() {
        acc = &acc + &(c * &h.counit_word(w));
    }
    acc
}

pub fn antipode(h: &dyn HopfAlgebra, e: &Element) -> Element {
    e.map_linear(|w| h.antipode_word(w))
}

/// Tensor product of elements.
pub fn tensor_of(elems: &[Element]) -> Tensor {
    let mut acc = Tensor::single(TensorWord::new(), one_of_any(elems));
    for e in elems {
        let mut next = Tensor::zero();
        for (tw, c) in acc.iter() {
            for (w, d) in e.iter() {
                let mut k = tw.clone();
                k.push(w.clone());
                next.add_term(k, c * d);
            }
        }
        acc = next;
    }
    acc
}

fn one_of_any(elems: &[Element]) -> Scalar {
    elems.iter().find_map(|e| e.iter().next().map(|(_, c)| c.field().one())).unwrap_or_else(|| Field::Rational.one())
}

/// Factorwise product of two tensors of equal length; factor `i` multiplies
/// in `algs[i]`.
pub fn tensor_mul(algs: &[&dyn Algebra], a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (ta, ca) in a.iter() {
        for (tb, cb) in b.iter() {
            debug_assert_eq!(ta.len(), tb.len());
            let factors: Vec<Element> =
                ta.iter().zip(tb.iter()).enumerate().map(|(i, (x, y))| algs[i].mul_words(x, y)).collect();
            out.add_scaled(&(ca * cb), &tensor_of(&factors));
        }
    }
    out
}

pub fn tensor_mul_same(alg: &dyn Algebra, a: &Tensor, b: &Tensor) -> Tensor {
    let n = a.keys().next().or(b.keys().next()).map_or(0, |k| k.len());
    let algs: Vec<&dyn Algebra> = vec![alg; n.max(1)];
    tensor_mul(&algs, a, b)
}

/// Δ^(n): `n = 1` is the identity, `n = 2` the coproduct.
pub fn iterated_coproduct(h: &dyn HopfAlgebra, w: &Word, n: usize) -> Tensor {
    assert!(n >= 1);
    let mut acc = Tensor::single(tensor_word(std::slice::from_ref(w)), h.field().one());
    for _ in 1..n {
        acc = acc.map_linear(|tw| {
            let (last, init) = tw.split_last().unwrap();
            h.coproduct_word(last).map_linear(|pair| {
                let mut k: TensorWord = init.iter().cloned().collect();
                k.extend(pair.iter().cloned());
                Tensor::single(k, h.field().one())
            })
        });
    }
    acc
}

/// Applies a linear map on basis words to factor `i` of a tensor.
pub fn map_factor(t: &Tensor, i: usize, f: impl Fn(&Word) -> Element) -> Tensor {
    t.map_linear(|tw| {
        f(&tw[i]).map_linear(|w| {
            let mut k = tw.clone();
            k[i] = w.clone();
            Tensor::single(k, scalar_one_like(t))
        })
    })
}

fn scalar_one_like(t: &Tensor) -> Scalar {
    t.iter().next().map(|(_, c)| c.field().one()).unwrap_or_else(|| Field::Rational.one())
}

/// Swaps the two factors of a length-2 tensor.
pub fn flip(t: &Tensor) -> Tensor {
    t.iter().map(|(tw, c)| (tensor_word(&[tw[1].clone(), tw[0].clone()]), c.clone())).collect()
}

/// An algebra map `H -> k`, stored by its values on letters and extended
/// multiplicatively over words.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub name: String,
    values: Vec<Scalar>,
}

impl Character {
    pub fn new(name: impl Into<String>, values: Vec<Scalar>) -> Self {
        Character { name: name.into(), values }
    }

    pub fn counit<H: HopfAlgebra + ?Sized>(h: &H) -> Self {
        let values = (0..h.letters().len()).map(|l| h.counit_word(&word(&[l as u16]))).collect();
        Character::new("epsilon", values)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval_word(&self, field: Field, w: &Word) -> Scalar {
        let mut acc = field.one();
        for &l in w {
            acc = &acc * &self.values[l as usize];
        }
        acc
    }

    pub fn eval(&self, field: Field, e: &Element) -> Scalar {
        let mut acc = field.zero();
        for (w, c) in e.iter() {
            acc = &acc + &(c * &self.eval_word(field, w));
        }
        acc
    }

    /// First basis pair `(a, b)` of degree `<= d` violating multiplicativity.
    pub fn multiplicativity_witness(&self, alg: &dyn Algebra, d: u32) -> Option<(Word, Word)> {
        let f = alg.field();
        let basis = alg.basis_up_to(d);
        for a in &basis {
            for b in &basis {
                let lhs = self.eval(f, &alg.mul_words(a, b));
                let rhs = &self.eval_word(f, a) * &self.eval_word(f, b);
                if lhs != rhs {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }
}

pub fn find_character(h: &dyn HopfAlgebra, name: &str) -> Result<Character> {
    h.characters()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::InvalidPair(format!("unknown character '{name}' on {}", h.name())))
}

/// A character `delta` and an element `sigma`; validated pairs have `sigma`
/// grouplike and `delta(sigma) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModularPair {
    pub delta: Character,
    pub sigma: Element,
    pub label: String,
}

impl ModularPair {
    pub fn new(delta: Character, sigma: Element, label: impl Into<String>) -> Self {
        ModularPair { delta, sigma, label: label.into() }
    }

    /// Parses `"<character>,<sigma word>"`, e.g. `epsilon,K^-1`.
    pub fn parse(h: &dyn HopfAlgebra, spec: &str) -> Result<Self> {
        let (c, s) =
            spec.split_once(',').ok_or_else(|| Error::Config(format!("pair '{spec}' must be <character>,<sigma>")))?;
        let delta = find_character(h, c.trim())?;
        let sigma = parse_word_expr(h, s.trim())?;
        Ok(ModularPair::new(delta, sigma, format!("({},{})", c.trim(), s.trim())))
    }

    pub fn trivial(h: &dyn HopfAlgebra) -> Self {
        ModularPair::new(Character::counit(h), h.unit(), "(epsilon,1)")
    }

    /// The basis word of `sigma` if it is a single word with coefficient 1.
    pub fn sigma_word(&self) -> Option<&Word> {
        if self.sigma.len() != 1 {
            return None;
        }
        let (w, c) = self.sigma.iter().next().unwrap();
        c.is_one().then_some(w)
    }

    /// Checks grouplike sigma, `delta(sigma) = 1` and multiplicativity of
    /// delta on words of degree `<= d`.
    pub fn validate(&self, h: &dyn HopfAlgebra, d: u32) -> Result<()> {
        let f = h.field();
        let sw = self.sigma_word().ok_or_else(|| Error::NotGrouplike(format_element(h, &self.sigma)))?;
        if !is_grouplike(h, sw) {
            return Err(Error::NotGrouplike(h.format_word(sw)));
        }
        if !self.delta.eval_word(f, sw).is_one() {
            return Err(Error::InvalidPair(format!("delta(sigma) != 1 for {}", self.label)));
        }
        if let Some((a, b)) = self.delta.multiplicativity_witness(h, d) {
            return Err(Error::InvalidPair(format!(
                "{} is not multiplicative on ({}, {})",
                self.delta.name,
                h.format_word(&a),
                h.format_word(&b)
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ModularPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

pub fn is_grouplike(h: &dyn HopfAlgebra, w: &Word) -> bool {
    let one = h.field().one();
    h.coproduct_word(w) == Tensor::single(tensor_word(&[w.clone(), w.clone()]), one) && h.counit_word(w).is_one()
}

/// `S_sigma(h) = sigma S(h)`.
pub fn sigma_antipode(h: &dyn HopfAlgebra, e: &Element, sigma: &Element) -> Element {
    mul(h, sigma, &antipode(h, e))
}

/// As [`sigma_antipode`] but rejects a non-grouplike `sigma`.
pub fn sigma_antipode_checked(h: &dyn HopfAlgebra, e: &Element, sigma: &Element) -> Result<Element> {
    let ok = sigma.len() == 1 && sigma.iter().next().is_some_and(|(w, c)| c.is_one() && is_grouplike(h, w));
    if !ok {
        return Err(Error::NotGrouplike(format_element(h, sigma)));
    }
    Ok(sigma_antipode(h, e, sigma))
}

/// `S~_sigma(h) = sigma * sum delta(h(2)) S(h(1))`.
pub fn twisted_antipode(h: &dyn HopfAlgebra, e: &Element, pair: &ModularPair) -> Element {
    let f = h.field();
    let inner = e.map_linear(|w| {
        let mut acc = Element::zero();
        for (tw, c) in h.coproduct_word(w).iter() {
            let d = pair.delta.eval_word(f, &tw[1]);
            if d.is_zero() {
                continue;
            }
            acc.add_scaled(&(c * &d), &h.antipode_word(&tw[0]));
        }
        acc
    });
    mul(h, &pair.sigma, &inner)
}

pub type HopfRef = Arc<dyn HopfAlgebra>;
pub type AlgebraRef = Arc<dyn Algebra>;
