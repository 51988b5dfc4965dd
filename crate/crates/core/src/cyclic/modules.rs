//! `~H^{(δ,σ)}`, the cyclic module `C_*(A)` of an algebra, the path space
//! `EH`, and Hochschild complexes with bimodule coefficients.

use super::*;
use crate::check::Check;
use crate::error::{Error, Result};
use crate::hopf::checks::check_modular_involution;
use crate::hopf::{antipode, mul, AlgebraRef, Character, HopfRef, ModularPair};

/// `~H^{(δ,σ)}`: level `n` is `H^{⊗n}`, level 0 is `k`.
pub struct HopfCyclic {
    pub h: HopfRef,
    pub pair: ModularPair,
}

/// Builds `~H^{(δ,σ)}`. With `check = Some(d)` the pair must pass the
/// involution test on words of degree `<= d`; `None` builds it unchecked.
pub fn build_hopf_cyclic(h: HopfRef, pair: ModularPair, check: Option<u32>) -> Result<HopfCyclic> {
    if let Some(d) = check {
        pair.validate(&*h, d)?;
        let c = check_modular_involution(&*h, &pair, d);
        if !c.passed {
            return Err(Error::InvalidPair(format!(
                "{pair}: twisted antipode squares to a different element on {}",
                c.witness.unwrap_or_default()
            )));
        }
    }
    Ok(HopfCyclic { h, pair })
}

impl HopfCyclic {
    pub fn sigma_antipode_of(&self, e: &Element) -> Element {
        mul(&*self.h, &self.pair.sigma, &antipode(&*self.h, e))
    }
}

impl CyclicModule for HopfCyclic {
    fn label(&self) -> String {
        format!("~H({}; {})", self.h.name(), self.pair)
    }
    fn field(&self) -> Field {
        self.h.field()
    }
    fn width(&self, n: usize) -> usize {
        n
    }
    fn factor(&self, _n: usize, _j: usize) -> &dyn Algebra {
        &*self.h
    }
    fn face(&self, n: usize, i: usize, t: &TensorWord) -> Tensor {
        let f = self.field();
        if i == 0 {
            single(t[1..].iter().cloned().collect(), self.h.counit_word(&t[0]))
        } else if i == n {
            single(t[..n - 1].iter().cloned().collect(), self.pair.delta.eval_word(f, &t[n - 1]))
        } else {
            mul_adjacent(&*self.h, t, i - 1)
        }
    }
    fn degeneracy(&self, _n: usize, i: usize, t: &TensorWord) -> Tensor {
        Tensor::single(insert_unit(t, i), self.field().one())
    }
    fn cyclic(&self, n: usize, t: &TensorWord) -> Option<Tensor> {
        let f = self.field();
        if n == 0 {
            return Some(Tensor::single(t.clone(), f.one()));
        }
        let h = &*self.h;
        let mut out = Tensor::zero();
        for (parts, c) in coproduct_terms(h, t, 2) {
            let d = self.pair.delta.eval_word(f, &parts[n - 1][1]);
            if d.is_zero() {
                continue;
            }
            let p = product(h, parts.iter().map(|p| &p[0]));
            let s = self.sigma_antipode_of(&p);
            let rest: TensorWord = parts[..n - 1].iter().map(|p| p[1].clone()).collect();
            let mut k = TensorWord::with_capacity(n);
            k.push(Word::new());
            k.extend(rest);
            out.add_scaled(&(&c * &d), &splice(&k, 0, 1, &s));
        }
        Some(out)
    }
}

/// The cyclic module `C_*(A)`: level `n` is `A^{⊗(n+1)}`.
pub struct AlgebraCyclic {
    pub a: AlgebraRef,
}

impl CyclicModule for AlgebraCyclic {
    fn normalized_slots(&self, n: usize) -> std::ops::Range<usize> {
        1..n + 1
    }

    fn label(&self) -> String {
        format!("C({})", self.a.name())
    }
    fn field(&self) -> Field {
        self.a.field()
    }
    fn width(&self, n: usize) -> usize {
        n + 1
    }
    fn factor(&self, _n: usize, _j: usize) -> &dyn Algebra {
        &*self.a
    }
    fn face(&self, n: usize, i: usize, t: &TensorWord) -> Tensor {
        if i < n {
            return mul_adjacent(&*self.a, t, i);
        }
        let p = self.a.mul_words(&t[n], &t[0]);
        let rest: TensorWord = std::iter::once(Word::new()).chain(t[1..n].iter().cloned()).collect();
        splice(&rest, 0, 1, &p)
    }
    fn degeneracy(&self, _n: usize, i: usize, t: &TensorWord) -> Tensor {
        Tensor::single(insert_unit(t, i + 1), self.field().one())
    }
    fn cyclic(&self, n: usize, t: &TensorWord) -> Option<Tensor> {
        let mut k = t.clone();
        k.rotate_right(1);
        debug_assert_eq!(k.len(), n + 1);
        Some(Tensor::single(k, self.field().one()))
    }
}

/// The path space `EH`: level `n` is `H^{⊗(n+1)}`, faces and degeneracies
/// are those of `~H^{(ε,1)}` shifted by one. Cyclic when `H` is
/// cocommutative.
pub struct PathSpace {
    pub h: HopfRef,
    cyclic: bool,
}

impl PathSpace {
    /// The simplicial path space, without `t_n`.
    pub fn simplicial(h: HopfRef) -> Self {
        PathSpace { h, cyclic: false }
    }

    /// The cyclic path space; requires the cocommutative flag.
    pub fn cyclic(h: HopfRef) -> Result<Self> {
        if !h.declared_flags().cocommutative {
            return Err(Error::NotCocommutative);
        }
        Ok(PathSpace { h, cyclic: true })
    }

    /// The contraction `s(h_0 ⊗ … ⊗ h_n) = 1 ⊗ h_0 ⊗ … ⊗ h_n`.
    pub fn contraction(&self, t: &TensorWord) -> Tensor {
        Tensor::single(insert_unit(t, 0), self.field().one())
    }

    /// `t_n(h_0 ⊗ … ⊗ h_n) = Σ h_0 h_1(1)…h_n(1) ⊗ S(h_1(2)…h_n(2)) ⊗ h_1(3) ⊗ … ⊗ h_{n-1}(3)`.
    fn t_n(&self, n: usize, t: &TensorWord) -> Tensor {
        let h = &*self.h;
        let f = h.field();
        if n == 0 {
            return Tensor::single(t.clone(), f.one());
        }
        let mut out = Tensor::zero();
        let inner = coproduct_terms(h, &t[1..n], 3);
        for (last, cl) in crate::hopf::iterated_coproduct(h, &t[n], 2).iter() {
            for (parts, c) in &inner {
                let firsts = std::iter::once(&t[0]).chain(parts.iter().map(|p| &p[0])).chain(std::iter::once(&last[0]));
                let a = product(h, firsts);
                let b = antipode(h, &product(h, parts.iter().map(|p| &p[1]).chain(std::iter::once(&last[1]))));
                let rest: Vec<Word> = parts.iter().map(|p| p[2].clone()).collect();
                for (wa, ca) in a.iter() {
                    for (wb, cb) in b.iter() {
                        let mut k = TensorWord::with_capacity(n + 1);
                        k.push(wa.clone());
                        k.push(wb.clone());
                        k.extend(rest.iter().cloned());
                        out.add_term(k, &(&(c * cl) * ca) * cb);
                    }
                }
            }
        }
        out
    }
}

impl CyclicModule for PathSpace {
    fn normalized_slots(&self, n: usize) -> std::ops::Range<usize> {
        1..n + 1
    }

    fn label(&self) -> String {
        format!("E({})", self.h.name())
    }
    fn field(&self) -> Field {
        self.h.field()
    }
    fn width(&self, n: usize) -> usize {
        n + 1
    }
    fn factor(&self, _n: usize, _j: usize) -> &dyn Algebra {
        &*self.h
    }
    fn face(&self, n: usize, i: usize, t: &TensorWord) -> Tensor {
        if i < n {
            mul_adjacent(&*self.h, t, i)
        } else {
            single(t[..n].iter().cloned().collect(), self.h.counit_word(&t[n]))
        }
    }
    fn degeneracy(&self, _n: usize, i: usize, t: &TensorWord) -> Tensor {
        Tensor::single(insert_unit(t, i + 1), self.field().one())
    }
    fn cyclic(&self, n: usize, t: &TensorWord) -> Option<Tensor> {
        self.cyclic.then(|| self.t_n(n, t))
    }
}

/// Checks that the contraction `s` contracts `EH` onto `k`: `δ_0 s = id`,
/// `δ_i s = s δ_{i-1}` for `i >= 1`, `δ_1 s = η ε` at level 0, and the
/// alternating-sum form `b s + s b = id` (`b s + η ε = id` at level 0).
pub fn verify_contraction(e: &PathSpace, n_max: usize, d: u32) -> Vec<Check> {
    let f = e.field();
    let h = &*e.h;
    let sign = |k: usize| if k.is_multiple_of(2) { f.one() } else { f.one().neg() };
    let b = |n: usize, x: &Tensor| {
        let mut acc = Tensor::zero();
        for i in 0..=n {
            acc.add_scaled(&sign(i), &x.map_linear(|t| e.face(n, i, t)));
        }
        acc
    };
    let s = |x: &Tensor| x.map_linear(|t| e.contraction(t));
    let mut out = Vec::new();
    for n in 0..=n_max {
        let algs = level_factors(e, n);
        let words = spanning_words(&algs, d);
        out.push(run_words(format!("contraction: faces [n={n}]"), &words, &algs, |t| {
            let x = Tensor::single(t.clone(), f.one());
            let sx = s(&x);
            if sx.map_linear(|u| e.face(n + 1, 0, u)) != x {
                return Some("face_0 s differs from id".into());
            }
            for i in 1..=n + 1 {
                let lhs = sx.map_linear(|u| e.face(n + 1, i, u));
                let rhs = if n == 0 {
                    single(TensorWord::from_elem(Word::new(), 1), h.counit_word(&t[0]))
                } else {
                    s(&x.map_linear(|u| e.face(n, i - 1, u)))
                };
                if lhs != rhs {
                    return Some(format!("i={i}: {}", format_level(&algs, &lhs.sub(&rhs))));
                }
            }
            None
        }));
        out.push(run_words(format!("contraction: bs + sb = id [n={n}]"), &words, &algs, |t| {
            let x = Tensor::single(t.clone(), f.one());
            let mut lhs = b(n + 1, &s(&x));
            if n == 0 {
                lhs.add_assign(&single(TensorWord::from_elem(Word::new(), 1), h.counit_word(&t[0])));
            } else {
                lhs.add_assign(&s(&b(n, &x)));
            }
            (lhs != x).then(|| format!("bs + sb - id = {}", format_level(&algs, &lhs.sub(&x))))
        }));
    }
    out
}

/// Coefficients of a Hochschild complex of `H`: `H` itself with left and
/// right multiplication, or `k` with actions through two characters.
#[derive(Clone)]
pub enum Coefficients {
    Regular,
    Scalars { left: Character, right: Character },
}

/// The Hochschild complex `C_*(H, M)` (levels `M ⊗ H^{⊗n}`) or, when
/// `twisted`, `C_*(H, M~)` (levels `H^{⊗n} ⊗ M`) whose last face uses
/// `h ▶ m = h(2) m S(h(1))`.
pub struct HochschildModule {
    pub h: HopfRef,
    pub coefficients: Coefficients,
    pub twisted: bool,
    ground: Ground,
}

impl HochschildModule {
    pub fn new(h: HopfRef, coefficients: Coefficients, twisted: bool) -> Self {
        let ground = Ground::new(h.field());
        HochschildModule { h, coefficients, twisted, ground }
    }

    pub fn coefficient_algebra(&self) -> &dyn Algebra {
        match self.coefficients {
            Coefficients::Regular => &*self.h,
            Coefficients::Scalars { .. } => &self.ground,
        }
    }

    pub fn left_act(&self, a: &Word, m: &Word) -> Element {
        match &self.coefficients {
            Coefficients::Regular => self.h.mul_words(a, m),
            Coefficients::Scalars { left, .. } => scalar_element(m, left.eval_word(self.h.field(), a)),
        }
    }

    pub fn right_act(&self, m: &Word, a: &Word) -> Element {
        match &self.coefficients {
            Coefficients::Regular => self.h.mul_words(m, a),
            Coefficients::Scalars { right, .. } => scalar_element(m, right.eval_word(self.h.field(), a)),
        }
    }

    pub fn right_act_elem(&self, m: &Word, e: &Element) -> Element {
        e.map_linear(|a| self.right_act(m, a))
    }

    /// `h ▶ m = Σ h(2) m S(h(1))`.
    pub fn adjoint(&self, a: &Word, m: &Word) -> Element {
        let mut out = Element::zero();
        for (p, c) in self.h.coproduct_word(a).iter() {
            let lm = self.left_act(&p[1], m);
            let s = self.h.antipode_word(&p[0]);
            let r = lm.map_linear(|mw| self.right_act_elem(mw, &s));
            out.add_scaled(c, &r);
        }
        out
    }
}

fn scalar_element(m: &Word, c: Scalar) -> Element {
    if c.is_zero() {
        Element::zero()
    } else {
        Element::single(m.clone(), c)
    }
}

impl CyclicModule for HochschildModule {
    fn normalized_slots(&self, n: usize) -> std::ops::Range<usize> {
        if self.twisted {
            0..n
        } else {
            1..n + 1
        }
    }

    fn label(&self) -> String {
        let m = match self.coefficients {
            Coefficients::Regular => self.h.name().to_string(),
            Coefficients::Scalars { .. } => "k".into(),
        };
        if self.twisted {
            format!("C({}, {m}~)", self.h.name())
        } else {
            format!("C({}, {m})", self.h.name())
        }
    }
    fn field(&self) -> Field {
        self.h.field()
    }
    fn width(&self, n: usize) -> usize {
        n + 1
    }
    fn factor(&self, n: usize, j: usize) -> &dyn Algebra {
        let m_pos = if self.twisted { n } else { 0 };
        if j == m_pos {
            self.coefficient_algebra()
        } else {
            &*self.h
        }
    }
    fn face(&self, n: usize, i: usize, t: &TensorWord) -> Tensor {
        let h = &*self.h;
        if !self.twisted {
            // t = m, h_1, …, h_n
            if i == 0 {
                splice(t, 0, 2, &self.right_act(&t[0], &t[1]))
            } else if i < n {
                mul_adjacent(h, t, i)
            } else {
                let rest: TensorWord = std::iter::once(Word::new()).chain(t[1..n].iter().cloned()).collect();
                splice(&rest, 0, 1, &self.left_act(&t[n], &t[0]))
            }
        } else {
            // t = h_1, …, h_n, m
            if i == 0 {
                single(t[1..].iter().cloned().collect(), h.counit_word(&t[0]))
            } else if i < n {
                mul_adjacent(h, t, i - 1)
            } else {
                splice(t, n - 1, 2, &self.adjoint(&t[n - 1], &t[n]))
            }
        }
    }
    fn degeneracy(&self, _n: usize, i: usize, t: &TensorWord) -> Tensor {
        let pos = if self.twisted { i } else { i + 1 };
        Tensor::single(insert_unit(t, pos), self.field().one())
    }
    fn cyclic(&self, _n: usize, _t: &TensorWord) -> Option<Tensor> {
        None
    }
}
