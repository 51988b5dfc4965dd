//! Maps between (co)cyclic modules, `π`, `γ`, `θ`, the Mac Lane
//! isomorphism and `ψ`, with commutation verifiers.

use super::*;
use crate::check::Check;
use crate::error::{Error, Result};
use crate::hopf::checks::check_modular_involution;
use crate::hopf::coaction::{check_trace_properties, Coaction, Trace};
use crate::hopf::{antipode, mul, Character, HopfRef, ModularPair};

/// A linear map given on basis words, level by level.
pub trait LevelMap: Send + Sync {
    fn label(&self) -> String;
    fn apply_word(&self, n: usize, t: &TensorWord) -> Tensor;

    fn apply(&self, n: usize, x: &Tensor) -> Tensor {
        x.map_linear(|t| self.apply_word(n, t))
    }
}

/// `π(h_0 ⊗ … ⊗ h_n) = ε(h_0) h_1 ⊗ … ⊗ h_n`, from `EH` to `~H^{(ε,1)}`.
pub struct Pi {
    pub h: HopfRef,
}

impl LevelMap for Pi {
    fn label(&self) -> String {
        "pi".into()
    }
    fn apply_word(&self, _n: usize, t: &TensorWord) -> Tensor {
        single(t[1..].iter().cloned().collect(), self.h.counit_word(&t[0]))
    }
}

/// `γ(a_0 ⊗ … ⊗ a_n) = Σ Tr(a_0 a_1(0)…a_n(0)) a_1(1) ⊗ … ⊗ a_n(1)`, from
/// `C_*(A)` to `~H^{(δ,σ)}`.
pub struct Gamma {
    pub coaction: Coaction,
    pub trace: Trace,
}

impl Gamma {
    /// Requires `Tr` to be a `δ`-trace and `σ`-invariant on words of degree
    /// `<= d`.
    pub fn new(coaction: Coaction, trace: Trace, pair: &ModularPair, d: u32) -> Result<Self> {
        let r = check_trace_properties(&trace, &coaction, pair, d);
        if !(r.is_delta_trace && r.is_sigma_invariant) {
            let bad = r.checks.iter().find(|c| !c.passed).expect("a failing check");
            return Err(Error::TraceAxiomsFail(format!(
                "{}: {} on {}",
                trace.name,
                bad.name,
                bad.witness.clone().unwrap_or_default()
            )));
        }
        Ok(Gamma { coaction, trace })
    }
}

impl LevelMap for Gamma {
    fn label(&self) -> String {
        format!("gamma[{}]", self.trace.name)
    }
    fn apply_word(&self, n: usize, t: &TensorWord) -> Tensor {
        let a = &*self.coaction.algebra;
        let mut terms: Vec<(Vec<TensorWord>, Scalar)> = vec![(Vec::new(), a.field().one())];
        for w in &t[1..=n] {
            let b = self.coaction.coact_word(w);
            let mut next = Vec::new();
            for (parts, c) in &terms {
                for (tw, e) in b.iter() {
                    let mut p = parts.clone();
                    p.push(tw.clone());
                    next.push((p, c * e));
                }
            }
            terms = next;
        }
        let mut out = Tensor::zero();
        for (parts, c) in terms {
            let p = product(a, std::iter::once(&t[0]).chain(parts.iter().map(|p| &p[0])));
            let v = self.trace.eval(&p);
            if v.is_zero() {
                continue;
            }
            let k: TensorWord = parts.iter().map(|p| p[1].clone()).collect();
            out.add_term(k, &c * &v);
        }
        out
    }
}

/// `θ(h_1 ⊗ … ⊗ h_n) = S_σ(h_1(1)…h_n(1)) ⊗ h_1(2) ⊗ … ⊗ h_n(2)`, from
/// `~H^{(ε,σ)}` to `C_*(H)`.
pub struct Theta {
    pub h: HopfRef,
    pub sigma: Element,
}

impl Theta {
    /// Requires `S_σ^2 = id` on words of degree `<= d`.
    pub fn new(h: HopfRef, sigma: Element, d: u32) -> Result<Self> {
        let pair = ModularPair::new(Character::counit(&*h), sigma.clone(), "theta");
        let c = check_modular_involution(&*h, &pair, d);
        if !c.passed {
            return Err(Error::InvolutionFails(c.witness.unwrap_or_default()));
        }
        Ok(Theta { h, sigma })
    }
}

impl LevelMap for Theta {
    fn label(&self) -> String {
        "theta".into()
    }
    fn apply_word(&self, _n: usize, t: &TensorWord) -> Tensor {
        let h = &*self.h;
        let mut out = Tensor::zero();
        for (parts, c) in coproduct_terms(h, t, 2) {
            let p = product(h, parts.iter().map(|p| &p[0]));
            let s = mul(h, &self.sigma, &antipode(h, &p));
            let k: TensorWord = std::iter::once(Word::new()).chain(parts.iter().map(|p| p[1].clone())).collect();
            out.add_scaled(&c, &splice(&k, 0, 1, &s));
        }
        out
    }
}

/// `θ(m ⊗ h_1 ⊗ … ⊗ h_n) = Σ h_1(2) ⊗ … ⊗ h_n(2) ⊗ m h_1(1)…h_n(1)`.
pub struct MacLaneTheta<'a> {
    pub source: &'a HochschildModule,
}

/// `θ⁻¹(h_1 ⊗ … ⊗ h_n ⊗ m) = Σ m S(h_1(1)…h_n(1)) ⊗ h_1(2) ⊗ … ⊗ h_n(2)`.
pub struct MacLaneInverse<'a> {
    pub source: &'a HochschildModule,
}

impl LevelMap for MacLaneTheta<'_> {
    fn label(&self) -> String {
        "maclane-theta".into()
    }
    fn apply_word(&self, n: usize, t: &TensorWord) -> Tensor {
        let m = self.source;
        let h = &*m.h;
        let mut out = Tensor::zero();
        for (parts, c) in coproduct_terms(h, &t[1..=n], 2) {
            let p = product(h, parts.iter().map(|p| &p[0]));
            let mp = m.right_act_elem(&t[0], &p);
            let k: TensorWord = parts.iter().map(|p| p[1].clone()).chain(std::iter::once(Word::new())).collect();
            out.add_scaled(&c, &splice(&k, n, 1, &mp));
        }
        out
    }
}

impl LevelMap for MacLaneInverse<'_> {
    fn label(&self) -> String {
        "maclane-theta-inverse".into()
    }
    fn apply_word(&self, n: usize, t: &TensorWord) -> Tensor {
        let m = self.source;
        let h = &*m.h;
        let mut out = Tensor::zero();
        for (parts, c) in coproduct_terms(h, &t[..n], 2) {
            let p = antipode(h, &product(h, parts.iter().map(|p| &p[0])));
            let mp = m.right_act_elem(&t[n], &p);
            let k: TensorWord = std::iter::once(Word::new()).chain(parts.iter().map(|p| p[1].clone())).collect();
            out.add_scaled(&c, &splice(&k, 0, 1, &mp));
        }
        out
    }
}

/// `ψ(h_1 ⊗ … ⊗ h_n) = 1 ⊗ h_1 ⊗ … ⊗ h_n`.
pub struct Psi {
    pub field: Field,
}

impl LevelMap for Psi {
    fn label(&self) -> String {
        "psi".into()
    }
    fn apply_word(&self, _n: usize, t: &TensorWord) -> Tensor {
        Tensor::single(insert_unit(t, 0), self.field.one())
    }
}

/// Checks `f δ_i = δ_i f`, `f σ_i = σ_i f` and, when both ends are cyclic,
/// `f τ = τ f`, at source levels `0..=n_max` on words of degree `<= d`.
pub fn verify_cyclic_map(
    source: &dyn CyclicModule,
    target: &dyn CyclicModule,
    f: &dyn LevelMap,
    n_max: usize,
    d: u32,
) -> Vec<Check> {
    let cyclic = source.is_cyclic() && target.is_cyclic();
    let one = source.field().one();
    let label = f.label();
    let mut out = Vec::new();
    for n in 0..=n_max {
        let algs = level_factors(source, n);
        let words = spanning_words(&algs, d);
        out.push(run_words(format!("{label} commutes with faces [n={n}]"), &words, &algs, |t| {
            let x = Tensor::single(t.clone(), one.clone());
            let fx = f.apply(n, &x);
            for i in (0..=n).filter(|_| n > 0) {
                let lhs = f.apply(n - 1, &x.map_linear(|u| source.face(n, i, u)));
                let rhs = fx.map_linear(|u| target.face(n, i, u));
                if lhs != rhs {
                    return Some(format!("i={i}: {}", mismatch(&level_factors(target, n - 1), &lhs, &rhs)));
                }
            }
            None
        }));
        out.push(run_words(format!("{label} commutes with degeneracies [n={n}]"), &words, &algs, |t| {
            let x = Tensor::single(t.clone(), one.clone());
            let fx = f.apply(n, &x);
            for i in 0..=n {
                let lhs = f.apply(n + 1, &x.map_linear(|u| source.degeneracy(n, i, u)));
                let rhs = fx.map_linear(|u| target.degeneracy(n, i, u));
                if lhs != rhs {
                    return Some(format!("i={i}: {}", mismatch(&level_factors(target, n + 1), &lhs, &rhs)));
                }
            }
            None
        }));
        if cyclic {
            out.push(run_words(format!("{label} commutes with tau [n={n}]"), &words, &algs, |t| {
                let x = Tensor::single(t.clone(), one.clone());
                let lhs = f.apply(n, &x.map_linear(|u| source.cyclic(n, u).expect("cyclic")));
                let rhs = f.apply(n, &x).map_linear(|u| target.cyclic(n, u).expect("cyclic"));
                (lhs != rhs).then(|| mismatch(&level_factors(target, n), &lhs, &rhs))
            }));
        }
    }
    out
}

/// The cocyclic analogue of [`verify_cyclic_map`].
pub fn verify_cocyclic_map(
    source: &dyn CocyclicModule,
    target: &dyn CocyclicModule,
    f: &dyn LevelMap,
    n_max: usize,
    d: u32,
) -> Vec<Check> {
    let one = source.field().one();
    let label = f.label();
    let mut out = Vec::new();
    for n in 0..=n_max {
        let algs = colevel_factors(source, n);
        let words = spanning_words(&algs, d);
        out.push(run_words(format!("{label} commutes with cofaces [n={n}]"), &words, &algs, |t| {
            let x = Tensor::single(t.clone(), one.clone());
            let fx = f.apply(n, &x);
            for i in 0..=n + 1 {
                let lhs = f.apply(n + 1, &x.map_linear(|u| source.coface(n, i, u)));
                let rhs = fx.map_linear(|u| target.coface(n, i, u));
                if lhs != rhs {
                    return Some(format!("i={i}: {}", mismatch(&colevel_factors(target, n + 1), &lhs, &rhs)));
                }
            }
            None
        }));
        if n >= 1 {
            out.push(run_words(format!("{label} commutes with codegeneracies [n={n}]"), &words, &algs, |t| {
                let x = Tensor::single(t.clone(), one.clone());
                let fx = f.apply(n, &x);
                for i in 0..n {
                    let lhs = f.apply(n - 1, &x.map_linear(|u| source.codegeneracy(n, i, u)));
                    let rhs = fx.map_linear(|u| target.codegeneracy(n, i, u));
                    if lhs != rhs {
                        return Some(format!("i={i}: {}", mismatch(&colevel_factors(target, n - 1), &lhs, &rhs)));
                    }
                }
                None
            }));
        }
        out.push(run_words(format!("{label} commutes with tau [n={n}]"), &words, &algs, |t| {
            let x = Tensor::single(t.clone(), one.clone());
            let lhs = f.apply(n, &x.map_linear(|u| source.cocyclic(n, u)));
            let rhs = f.apply(n, &x).map_linear(|u| target.cocyclic(n, u));
            (lhs != rhs).then(|| mismatch(&colevel_factors(target, n), &lhs, &rhs))
        }));
    }
    out
}

/// Checks `g ∘ f = id` on `a` and `f ∘ g = id` on `b`, levels `0..=n_max`.
pub fn verify_inverse_pair(
    a: &dyn CyclicModule,
    b: &dyn CyclicModule,
    f: &dyn LevelMap,
    g: &dyn LevelMap,
    n_max: usize,
    d: u32,
) -> Vec<Check> {
    let one = a.field().one();
    let mut out = Vec::new();
    for n in 0..=n_max {
        for (src, first, second, name) in [(a, f, g, "g f = id"), (b, g, f, "f g = id")] {
            let algs = level_factors(src, n);
            let words = spanning_words(&algs, d);
            out.push(run_words(format!("{}: {name} [n={n}]", f.label()), &words, &algs, |t| {
                let x = Tensor::single(t.clone(), one.clone());
                let y = second.apply(n, &first.apply(n, &x));
                (y != x).then(|| mismatch(&algs, &y, &x))
            }));
        }
    }
    out
}

/// Checks `γ ∘ θ = Tr(σ) · id` on `~H^{(ε,σ)}` at levels `0..=n_max`.
pub fn verify_gamma_theta(source: &HopfCyclic, gamma: &Gamma, theta: &Theta, n_max: usize, d: u32) -> Vec<Check> {
    let tr_sigma = gamma.trace.eval(&theta.sigma);
    let one = source.field().one();
    (0..=n_max)
        .map(|n| {
            let algs = level_factors(source, n);
            let words = spanning_words(&algs, d);
            run_words(format!("gamma theta = Tr(sigma) id [n={n}]"), &words, &algs, |t| {
                let x = Tensor::single(t.clone(), one.clone());
                let y = gamma.apply(n, &theta.apply(n, &x));
                let want = x.scale(&tr_sigma);
                (y != want).then(|| mismatch(&algs, &y, &want))
            })
        })
        .collect()
}
