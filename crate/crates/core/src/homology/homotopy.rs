//! The contracting homotopy `S` of the `U_q(sl2)` resolution, with
//! `S d + d S = id` checked on PBW words.

use rayon::prelude::*;
use serde::Serialize;

use super::resolution::{augmentation, FreeElem, ResolutionData};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{letter_by_name, mul, normalize_product, tensor_of, Algebra, Element, Tensor, Word};

/// Which version of `S_1` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Formulas {
    /// Exactly as printed; `S d + d S = id` fails from degree 1 on.
    Printed,
    /// `S_1(e_σ)` negated; in `S_1(e_x)` the `e_x∧e_σ` sum uses
    /// `[n]_{q^-2} φ(x, q^2 x, m)(σ^-1 ⊗ σ^-1) + q^-2 [n]_{q^2} φ(x, q^-2 x, m)`
    /// and the `e_y∧e_σ` sum weights `y^{n-2-b} ⊗ y^b` by
    /// `[b+1]_{q^-2} (σ^-1 ⊗ σ^-1) + q^2 [b+1]_{q^2}`.
    Corrected,
}

/// Letters and generator positions the homotopy formulas refer to.
pub struct Uqsl2Homotopy<'a> {
    r: &'a ResolutionData,
    formulas: Formulas,
    k: u16,
    k_inv: u16,
    x: u16,
    y: u16,
    // degree 1
    e_sigma: usize,
    e_x: usize,
    e_y: usize,
    // degree 2
    e_xs: usize,
    e_ys: usize,
    e_xy: usize,
    // degree 3
    e_xys: usize,
}

fn gen(r: &ResolutionData, n: usize, name: &str) -> Result<usize> {
    r.generator_index(n, name)
        .ok_or_else(|| Error::Config(format!("resolution {} has no generator {name} in degree {n}", r.name)))
}

/// `φ(a, b, n) = Σ_{i=0}^{n-1} a^{n-1-i} ⊗ b^i`, zero for `n <= 0`.
fn phi(h: &dyn Algebra, a: &Element, b: &Element, n: i64) -> Tensor {
    let mut out = Tensor::zero();
    if n <= 0 {
        return out;
    }
    let n = n as usize;
    let pa = powers(h, a, n);
    let pb = powers(h, b, n);
    for i in 0..n {
        out.add_assign(&tensor_of(&[pa[n - 1 - i].clone(), pb[i].clone()]));
    }
    out
}

fn powers(h: &dyn Algebra, a: &Element, n: usize) -> Vec<Element> {
    let mut out = vec![h.unit()];
    for i in 1..n {
        out.push(mul(h, &out[i - 1], a));
    }
    out
}

impl<'a> Uqsl2Homotopy<'a> {
    pub fn new(r: &'a ResolutionData, formulas: Formulas) -> Result<Self> {
        let h: &dyn Algebra = &*r.h;
        let letter = |s: &str| letter_by_name(h, s).ok_or_else(|| Error::UnknownGenerator(s.into()));
        if r.cap() < 4 {
            return Err(Error::CapExceeded("the homotopy check needs the resolution up to degree 4".into()));
        }
        Ok(Uqsl2Homotopy {
            r,
            formulas,
            k: letter("K")?,
            k_inv: letter("K^-1")?,
            x: letter("x")?,
            y: letter("y")?,
            e_sigma: gen(r, 1, "e_sigma")?,
            e_x: gen(r, 1, "e_x")?,
            e_y: gen(r, 1, "e_y")?,
            e_xs: gen(r, 2, "e_x^e_sigma")?,
            e_ys: gen(r, 2, "e_y^e_sigma")?,
            e_xy: gen(r, 2, "e_x^e_y")?,
            e_xys: gen(r, 3, "e_x^e_y^e_sigma")?,
        })
    }

    fn h(&self) -> &dyn Algebra {
        &*self.r.h
    }

    fn scalar(&self, s: &str) -> Scalar {
        self.h().field().parse_scalar(s).expect("constant")
    }

    fn elem(&self, factors: &[(u16, i64)]) -> Element {
        normalize_product(self.h(), factors).expect("letters of the instance")
    }

    /// `(l, m, n)` with `w = σ^l x^m y^n`.
    fn pbw(&self, w: &Word) -> (i64, i64, i64) {
        let count = |c: u16| w.iter().filter(|&&l| l == c).count() as i64;
        (count(self.k) - count(self.k_inv), count(self.x), count(self.y))
    }

    fn sigma_pow(&self, l: i64) -> Element {
        self.elem(&[(self.k, l)])
    }

    fn pair(&self, a: Element, b: Element) -> Tensor {
        tensor_of(&[a, b])
    }

    fn emul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        super::resolution::enveloping_mul(self.h(), a, b)
    }

    /// `Σ_{i<k} q^{e i}`.
    fn q_int(&self, k: i64, e: i64) -> Scalar {
        let f = self.h().field();
        (0..k).fold(f.zero(), |acc, i| &acc + &f.q_pow(e * i).expect("rational functions"))
    }

    /// `Σ_{i=0}^{n-1} w(i) a^{n-1-i} ⊗ a^i`.
    fn weighted_phi(&self, a: &Element, n: i64, w: impl Fn(i64) -> Scalar) -> Tensor {
        let mut out = Tensor::zero();
        if n <= 0 {
            return out;
        }
        let p = powers(self.h(), a, n as usize);
        for i in 0..n {
            out.add_scaled(&w(i), &tensor_of(&[p[(n - 1 - i) as usize].clone(), p[i as usize].clone()]));
        }
        out
    }

    fn put(&self, out: &mut FreeElem, g: usize, c: Tensor) {
        out[g].add_assign(&c);
    }

    /// `S_{-1}(a) = 1 ⊗ a`.
    pub fn s_minus1(&self, a: &Element) -> FreeElem {
        let mut out = self.r.zero(0);
        out[0] = self.pair(self.h().unit(), a.clone());
        out
    }

    /// `S_n` on one generator `g` with coefficient `σ^l x^m y^n ⊗ 1`.
    fn on_word(&self, deg: usize, g: usize, (l, m, n): (i64, i64, i64)) -> FreeElem {
        let r = self.r;
        let f = self.h().field();
        let one = self.h().unit();
        let mut out = r.zero(deg + 1);
        let x = self.elem(&[(self.x, 1)]);
        let y = self.elem(&[(self.y, 1)]);
        let sl = self.sigma_pow(l);
        let slxm = self.elem(&[(self.k, l), (self.x, m)]);
        let yn = self.elem(&[(self.y, n)]);
        let q = |k: i64| f.q_pow(k).expect("rational functions");
        let kk = self.pair(self.sigma_pow(-1), self.sigma_pow(-1));
        match deg {
            0 => {
                let xmyn = self.elem(&[(self.x, m), (self.y, n)]);
                self.put(
                    &mut out,
                    self.e_y,
                    self.emul(&self.pair(slxm.clone(), one.clone()), &phi(self.h(), &y, &y, n)),
                );
                self.put(&mut out, self.e_x, self.emul(&self.pair(sl, yn), &phi(self.h(), &x, &x, m)));
                let front = self.pair(one.clone(), xmyn);
                if l >= 0 {
                    let s = self.sigma_pow(1);
                    self.put(&mut out, self.e_sigma, self.emul(&front, &phi(self.h(), &s, &s, l)));
                } else {
                    let s = self.sigma_pow(-1);
                    let t = self.emul(&self.emul(&front, &phi(self.h(), &s, &s, -l)), &kk);
                    self.put(&mut out, self.e_sigma, t.neg());
                }
            }
            1 if g == self.e_x => {
                self.put(
                    &mut out,
                    self.e_xy,
                    self.emul(&self.pair(slxm.clone(), one.clone()), &phi(self.h(), &y, &y, n)),
                );
                if n >= 1 {
                    let inv = self.scalar("1/(q-q^-1)");
                    let front = self.pair(sl, self.elem(&[(self.y, n - 1)]));
                    let front_y = self.pair(slxm, one.clone());
                    let (xs, ys) = match self.formulas {
                        Formulas::Printed => {
                            let mut tail = kk.clone();
                            tail.add_assign(&self.pair(one.clone(), one.clone()).scale(&q(-2)));
                            let xs = self
                                .emul(&self.emul(&front, &phi(self.h(), &x, &x, m)), &tail)
                                .scale(&self.q_int(n, 2));
                            let mut tail = kk.clone();
                            tail.add_assign(&self.pair(one.clone(), one).scale(&q(2)));
                            (xs, self.emul(&self.emul(&front_y, &phi(self.h(), &y, &y, n - 1)), &tail))
                        }
                        Formulas::Corrected => {
                            let (qx, qx_inv) = (x.scale(&q(-2)), x.scale(&q(2)));
                            let mut xs = self
                                .emul(&self.emul(&front, &phi(self.h(), &x, &qx_inv, m)), &kk)
                                .scale(&self.q_int(n, -2));
                            xs.add_assign(
                                &self.emul(&front, &phi(self.h(), &x, &qx, m)).scale(&(&q(-2) * &self.q_int(n, 2))),
                            );
                            let mut ys = self.emul(
                                &self.emul(&front_y, &self.weighted_phi(&y, n - 1, |b| self.q_int(b + 1, -2))),
                                &kk,
                            );
                            ys.add_assign(
                                &self.emul(&front_y, &self.weighted_phi(&y, n - 1, |b| &q(2) * &self.q_int(b + 1, 2))),
                            );
                            (xs, ys)
                        }
                    };
                    self.put(&mut out, self.e_xs, xs.scale(&inv));
                    self.put(&mut out, self.e_ys, ys.scale(&inv));
                }
            }
            1 if g == self.e_sigma => {
                let sign = match self.formulas {
                    Formulas::Printed => f.one(),
                    Formulas::Corrected => f.one().neg(),
                };
                let qy = y.scale(&q(2));
                let qx = x.scale(&q(-2));
                let t = self.emul(&self.pair(slxm, one), &phi(self.h(), &y, &qy, n));
                self.put(&mut out, self.e_ys, t.scale(&(&sign * &q(2))));
                let t = self.emul(&self.pair(sl, yn), &phi(self.h(), &x, &qx, m));
                self.put(&mut out, self.e_xs, t.scale(&(&sign * &q(2 * (n - 1)))));
            }
            2 if g == self.e_xs => {
                let qy = y.scale(&q(2));
                self.put(&mut out, self.e_xys, self.emul(&self.pair(slxm, one), &phi(self.h(), &y, &qy, n)));
            }
            _ => {}
        }
        out
    }

    /// `S_n: M_n -> M_{n+1}`, extended from `σ^l x^m y^n ⊗ b` by
    /// `S((1 ⊗ b) ξ) = (1 ⊗ b) S(ξ)`; zero for `n >= 3`.
    pub fn s(&self, deg: usize, x: &FreeElem) -> FreeElem {
        let h = self.h();
        let mut out = self.r.zero(deg + 1);
        if deg >= 3 {
            return out;
        }
        for (g, c) in x.iter().enumerate() {
            for (t, s) in c.iter() {
                let img = self.on_word(deg, g, self.pbw(&t[0]));
                let front = Tensor::single([Word::new(), t[1].clone()].into_iter().collect(), s.clone());
                for (j, e) in img.iter().enumerate() {
                    if !e.is_zero() {
                        out[j].add_assign(&super::resolution::enveloping_mul(h, &front, e));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyReport {
    pub formulas: Formulas,
    pub l_max: i64,
    pub d_max: i64,
    pub checks: Vec<Check>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks `μ S_{-1} = id`, `S_{-1} μ + d_1 S_0 = id` and
/// `S_{n-1} d_n + d_{n+1} S_n = id` for `n = 1, 2, 3` on every generator
/// with coefficient `σ^l x^m y^n ⊗ 1`, `|l| <= l_max`, `m, n <= d_max`.
pub fn verify_homotopy_uqsl2(r: &ResolutionData, formulas: Formulas, l_max: i64, d_max: i64) -> Result<HomotopyReport> {
    if l_max < 1 || d_max < 1 {
        return Err(Error::Config("homotopy bounds must be at least 1".into()));
    }
    let hs = Uqsl2Homotopy::new(r, formulas)?;
    let h = hs.h();
    let words: Vec<(i64, i64, i64)> =
        (-l_max..=l_max).flat_map(|l| (0..=d_max).flat_map(move |m| (0..=d_max).map(move |n| (l, m, n)))).collect();
    let fmt = |(l, m, n): &(i64, i64, i64)| format!("K^{l} x^{m} y^{n}");
    let mut checks = vec![Check::run("augmentation after S_-1 is the identity", &words, |w| {
        let a = hs.elem(&[(hs.k, w.0), (hs.x, w.1), (hs.y, w.2)]);
        (augmentation(h, &hs.s_minus1(&a)) != a).then(|| (fmt(w), "mu S_-1 differs".into()))
    })];
    let per_degree: Vec<Check> = (0..=3usize)
        .into_par_iter()
        .flat_map_iter(|deg| {
            let (hs, words) = (&hs, &words);
            (0..r.rank(deg)).map(move |g| {
                let name = &r.generators[deg][g];
                Check::run(format!("S d + d S = id [{name}]"), words, |w| {
                    let a = hs.elem(&[(hs.k, w.0), (hs.x, w.1), (hs.y, w.2)]);
                    let mut xi = r.zero(deg);
                    xi[g] = hs.pair(a, h.unit());
                    let mut lhs = r.apply_d(deg + 1, &hs.s(deg, &xi));
                    let other =
                        if deg == 0 { hs.s_minus1(&augmentation(h, &xi)) } else { hs.s(deg - 1, &r.apply_d(deg, &xi)) };
                    for (a, b) in lhs.iter_mut().zip(&other) {
                        a.add_assign(b);
                    }
                    if lhs == xi {
                        None
                    } else {
                        let diff: FreeElem = lhs.iter().zip(&xi).map(|(a, b)| a.sub(b)).collect();
                        Some((fmt(w), r.format(deg, &diff)))
                    }
                })
            })
        })
        .collect();
    checks.extend(per_degree);
    Ok(HomotopyReport { formulas, l_max, d_max, checks })
}
