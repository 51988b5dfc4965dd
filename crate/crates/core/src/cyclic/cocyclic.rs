//! Cocyclic modules of a commutative Hopf algebra: the path-space form on
//! `H^{⊗(n+1)}` and the Connes–Moscovici module on `H^{⊗n}`.

use super::*;
use crate::error::{Error, Result};
use crate::hopf::{antipode, element_of, iterated_coproduct, tensor_mul_same, twisted_antipode, HopfRef, ModularPair};

fn coproduct_at(h: &dyn HopfAlgebra, t: &TensorWord, j: usize) -> Tensor {
    let mut out = Tensor::zero();
    for (p, c) in h.coproduct_word(&t[j]).iter() {
        let mut k: TensorWord = t[..j].iter().cloned().collect();
        k.push(p[0].clone());
        k.push(p[1].clone());
        k.extend(t[j + 1..].iter().cloned());
        out.add_term(k, c.clone());
    }
    out
}

fn counit_at(h: &dyn HopfAlgebra, t: &TensorWord, j: usize) -> Tensor {
    let mut k = t.clone();
    let w = k.remove(j);
    single(k, h.counit_word(&w))
}

/// Path-space cocyclic module of a commutative `H`. Level `n` is
/// `H^{⊗(n+1)}`; `d_i` applies `Δ` to factor `i` for `i <= n`, `d_{n+1}`
/// appends `1`, `s_i` applies `ε` to factor `i + 1`, and
/// `τ(h_0 ⊗ … ⊗ h_n) = Δ^(n+1)(h_0) · (1 ⊗ Δ^(n)(S h_1)) · (1 ⊗ h_2 ⊗ … ⊗ h_n ⊗ 1)`.
pub struct CommutativeCocyclic {
    pub h: HopfRef,
}

impl CommutativeCocyclic {
    pub fn new(h: HopfRef) -> Result<Self> {
        if !h.declared_flags().commutative {
            return Err(Error::NotCommutative);
        }
        Ok(CommutativeCocyclic { h })
    }
}

impl CocyclicModule for CommutativeCocyclic {
    fn label(&self) -> String {
        format!("E^({})", self.h.name())
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
    fn coface(&self, n: usize, i: usize, t: &TensorWord) -> Tensor {
        if i <= n {
            coproduct_at(&*self.h, t, i)
        } else {
            Tensor::single(insert_unit(t, n + 1), self.field().one())
        }
    }
    fn codegeneracy(&self, _n: usize, i: usize, t: &TensorWord) -> Tensor {
        counit_at(&*self.h, t, i + 1)
    }
    fn cocyclic(&self, n: usize, t: &TensorWord) -> Tensor {
        let h = &*self.h;
        let f = h.field();
        if n == 0 {
            return Tensor::single(t.clone(), f.one());
        }
        let a = iterated_coproduct(h, &t[0], n + 1);
        let mut b = Tensor::zero();
        for (w, c) in antipode(h, &element_of(h, &t[1])).iter() {
            for (tw, e) in iterated_coproduct(h, w, n).iter() {
                b.add_term(insert_unit(tw, 0), c * e);
            }
        }
        let rest: TensorWord =
            std::iter::once(Word::new()).chain(t[2..].iter().cloned()).chain(std::iter::once(Word::new())).collect();
        let rest = Tensor::single(rest, f.one());
        tensor_mul_same(h, &a, &tensor_mul_same(h, &b, &rest))
    }
}

/// The Connes–Moscovici cocyclic module `H^{(δ,σ)}`. Level `n` is
/// `H^{⊗n}`; `d_0` prepends `1`, `d_i` applies `Δ` to `h_i`, `d_{n+1}`
/// appends `σ`, `s_i` applies `ε` to `h_{i+1}`, and
/// `τ(h_1 ⊗ … ⊗ h_n) = Δ^(n)(S~(h_1)) · (h_2 ⊗ … ⊗ h_n ⊗ σ)`.
pub struct CmCocyclic {
    pub h: HopfRef,
    pub pair: ModularPair,
}

impl CocyclicModule for CmCocyclic {
    fn label(&self) -> String {
        format!("H^({}; {})", self.h.name(), self.pair)
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
    fn coface(&self, n: usize, i: usize, t: &TensorWord) -> Tensor {
        let f = self.field();
        if i == 0 {
            Tensor::single(insert_unit(t, 0), f.one())
        } else if i <= n {
            coproduct_at(&*self.h, t, i - 1)
        } else {
            let k: TensorWord = t.iter().cloned().chain(std::iter::once(Word::new())).collect();
            splice(&k, n, 1, &self.pair.sigma)
        }
    }
    fn codegeneracy(&self, _n: usize, i: usize, t: &TensorWord) -> Tensor {
        counit_at(&*self.h, t, i)
    }
    fn cocyclic(&self, n: usize, t: &TensorWord) -> Tensor {
        let h = &*self.h;
        let f = h.field();
        if n == 0 {
            return Tensor::single(t.clone(), f.one());
        }
        let st = twisted_antipode(h, &element_of(h, &t[0]), &self.pair);
        let mut a = Tensor::zero();
        for (w, c) in st.iter() {
            a.add_scaled(c, &iterated_coproduct(h, w, n));
        }
        let k: TensorWord = t[1..].iter().cloned().chain(std::iter::once(Word::new())).collect();
        let rest = splice(&k, n - 1, 1, &self.pair.sigma);
        tensor_mul_same(h, &a, &rest)
    }
}
