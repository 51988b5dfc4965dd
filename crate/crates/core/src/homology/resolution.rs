//! Free bimodule resolutions: loading, `d^2 = 0` verification, base change
//! along a pair of characters, and the comparison map into the bar
//! resolution.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{operator_matrix, ChainComplex, Piece};
use crate::check::Check;
use crate::cyclic::spanning_words;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{
    find_character, format_tensor, parse_word_expr, tensor_of, Algebra, Character, HopfAlgebra, HopfRef, Tensor,
    TensorWord,
};
use crate::instances::build_instance;
use crate::linalg::{SparseMatrix, SparseVec};

pub const UQSL2_RESOLUTION: &str = include_str!("../../data/resolutions/uqsl2.toml");
pub const ASLQ2_RESOLUTION: &str = include_str!("../../data/resolutions/aslq2.toml");

/// `[coefficient, left factor, right factor, target generator]`.
pub type TermSpec = [String; 4];

#[derive(Debug, Deserialize)]
struct FileSpec {
    name: String,
    instance: String,
    version: u32,
    base_change: [String; 2],
    #[serde(default)]
    degree: Vec<DegreeSpec>,
    #[serde(default)]
    family: Vec<FamilySpec>,
    #[serde(default)]
    identify: Vec<Identify>,
    #[serde(default)]
    erratum: Vec<Erratum>,
}

#[derive(Debug, Deserialize)]
struct DegreeSpec {
    n: usize,
    generators: Vec<String>,
    #[serde(default)]
    differential: BTreeMap<String, Vec<TermSpec>>,
}

#[derive(Debug, Deserialize)]
struct FamilySpec {
    step: usize,
    offset: usize,
    p_min: usize,
    generators: Vec<String>,
    differential: BTreeMap<String, Vec<TermSpec>>,
}

#[derive(Debug, Deserialize)]
struct Identify {
    name: String,
    coefficient: String,
    target: String,
}

/// A correction to a transcribed differential. `printed: None` adds a
/// term, `corrected: None` removes one.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct Erratum {
    pub generator: String,
    pub printed: Option<TermSpec>,
    pub corrected: Option<TermSpec>,
    pub note: String,
}

/// An element of a free `H^e`-module: one coefficient in `H ⊗ H^op` per
/// generator, stored as width-2 tensors.
pub type FreeElem = Vec<Tensor>;

#[derive(Clone)]
pub struct ResolutionData {
    pub name: String,
    pub version: u32,
    pub h: HopfRef,
    /// Character names for the left and right factor on base change.
    pub base_change: [String; 2],
    /// Generator names of degrees `0..=cap`.
    pub generators: Vec<Vec<String>>,
    /// `d[n][g]` is the image of generator `g` of degree `n`.
    d: Vec<Vec<FreeElem>>,
    pub errata: Vec<Erratum>,
    pub errata_applied: bool,
}

fn substitute(template: &str, p: usize) -> String {
    template
        .replace("{p}", &p.to_string())
        .replace("{p+1}", &(p + 1).to_string())
        .replace("{p+2}", &(p + 2).to_string())
}

fn apply_errata(spec: &mut FileSpec) -> Result<()> {
    for e in &spec.erratum {
        let maps = spec
            .degree
            .iter_mut()
            .map(|d| &mut d.differential)
            .chain(spec.family.iter_mut().map(|f| &mut f.differential));
        let mut hits = 0;
        for map in maps {
            let Some(terms) = map.get_mut(&e.generator) else { continue };
            hits += 1;
            match (&e.printed, &e.corrected) {
                (Some(old), new) => {
                    let i = terms.iter().position(|t| t == old).ok_or_else(|| {
                        Error::Config(format!("erratum for {}: printed term {:?} not found", e.generator, old))
                    })?;
                    match new {
                        Some(t) => terms[i] = t.clone(),
                        None => {
                            terms.remove(i);
                        }
                    }
                }
                (None, Some(t)) => terms.push(t.clone()),
                (None, None) => return Err(Error::Config("empty erratum".into())),
            }
        }
        if hits != 1 {
            return Err(Error::Config(format!("erratum generator {} matched {hits} differentials", e.generator)));
        }
    }
    Ok(())
}

/// Parses resolution data, instantiating degrees `0..=cap`.
pub fn parse_resolution(src: &str, cap: usize, with_errata: bool) -> Result<ResolutionData> {
    let mut spec: FileSpec = toml::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
    if with_errata {
        apply_errata(&mut spec)?;
    }
    let h = build_instance(&spec.instance, None)?.hopf;
    let f = h.field();
    let mut identify = BTreeMap::new();
    for i in &spec.identify {
        identify.insert(i.name.clone(), (f.parse_scalar(&i.coefficient)?, i.target.clone()));
    }

    let mut generators: Vec<Vec<String>> = Vec::new();
    let mut raw: Vec<BTreeMap<String, Vec<TermSpec>>> = Vec::new();
    for n in 0..=cap {
        if let Some(d) = spec.degree.iter().find(|d| d.n == n) {
            generators.push(d.generators.clone());
            raw.push(d.differential.clone());
            continue;
        }
        let fam = spec.family.iter().find(|fm| n >= fm.offset + fm.step * fm.p_min && (n - fm.offset) % fm.step == 0);
        match fam {
            Some(fm) => {
                let p = (n - fm.offset) / fm.step;
                generators.push(fm.generators.iter().map(|g| substitute(g, p)).collect());
                raw.push(
                    fm.differential
                        .iter()
                        .map(|(g, terms)| {
                            let terms = terms
                                .iter()
                                .map(|t| {
                                    let mut t = t.clone();
                                    t[3] = substitute(&t[3], p);
                                    t
                                })
                                .collect();
                            (substitute(g, p), terms)
                        })
                        .collect(),
                );
            }
            None => {
                generators.push(Vec::new());
                raw.push(BTreeMap::new());
            }
        }
    }

    let mut d = vec![Vec::new()];
    for n in 1..=cap {
        let targets = &generators[n - 1];
        let mut images = Vec::new();
        for g in &generators[n] {
            let terms = raw[n]
                .get(g)
                .ok_or_else(|| Error::Config(format!("no differential for generator {g} in degree {n}")))?;
            let mut img = vec![Tensor::zero(); targets.len()];
            for [c, l, r, t] in terms {
                let mut coef = f.parse_scalar(c)?;
                let mut target = t.clone();
                if let Some((k, to)) = identify.get(t) {
                    coef = &coef * k;
                    target = to.clone();
                }
                let j = targets
                    .iter()
                    .position(|x| *x == target)
                    .ok_or_else(|| Error::Config(format!("{g} in degree {n} maps to unknown generator {target}")))?;
                let term = tensor_of(&[parse_word_expr(&*h, l)?, parse_word_expr(&*h, r)?]).scale(&coef);
                img[j].add_assign(&term);
            }
            images.push(img);
        }
        if let Some(extra) = raw[n].keys().find(|k| !generators[n].contains(k)) {
            return Err(Error::Config(format!("differential given for unknown generator {extra}")));
        }
        d.push(images);
    }
    Ok(ResolutionData {
        name: spec.name,
        version: spec.version,
        h,
        base_change: spec.base_change,
        generators,
        d,
        errata: if with_errata { spec.erratum } else { Vec::new() },
        errata_applied: with_errata,
    })
}

/// Loads a built-in resolution: `uqsl2` or `aslq2`.
pub fn load_resolution(name: &str, cap: usize) -> Result<ResolutionData> {
    parse_resolution(builtin_source(name)?, cap, true)
}

pub fn builtin_source(name: &str) -> Result<&'static str> {
    match name {
        "uqsl2" => Ok(UQSL2_RESOLUTION),
        "aslq2" => Ok(ASLQ2_RESOLUTION),
        _ => Err(Error::Config(format!("no built-in resolution '{name}'"))),
    }
}

/// `(a ⊗ b)(a' ⊗ b') = a a' ⊗ b' b`.
pub fn enveloping_mul(h: &dyn Algebra, x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (s, c) in x.iter() {
        for (t, e) in y.iter() {
            let left = h.mul_words(&s[0], &t[0]);
            let right = h.mul_words(&t[1], &s[1]);
            let ce = c * e;
            for (l, a) in left.iter() {
                for (r, b) in right.iter() {
                    out.add_term([l.clone(), r.clone()].into_iter().collect(), &(&ce * a) * b);
                }
            }
        }
    }
    out
}

impl ResolutionData {
    pub fn cap(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.generators[n].len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.generators.iter().map(Vec::len).collect()
    }

    pub fn generator_index(&self, n: usize, name: &str) -> Option<usize> {
        self.generators.get(n)?.iter().position(|g| g == name)
    }

    /// The image of generator `g` of degree `n >= 1`.
    pub fn image(&self, n: usize, g: usize) -> &FreeElem {
        &self.d[n][g]
    }

    pub fn zero(&self, n: usize) -> FreeElem {
        vec![Tensor::zero(); self.rank(n)]
    }

    /// The generator `g` of degree `n` with coefficient `1 ⊗ 1`.
    pub fn basis(&self, n: usize, g: usize) -> FreeElem {
        let mut x = self.zero(n);
        x[g] = Tensor::single([Default::default(), Default::default()].into_iter().collect(), self.h.field().one());
        x
    }

    /// `d_n` on an element of degree `n >= 1`.
    pub fn apply_d(&self, n: usize, x: &FreeElem) -> FreeElem {
        let h = &*self.h;
        let mut out = self.zero(n - 1);
        for (g, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, e) in self.d[n][g].iter().enumerate() {
                if !e.is_zero() {
                    out[j].add_assign(&enveloping_mul(h, c, e));
                }
            }
        }
        out
    }

    pub fn format(&self, n: usize, x: &FreeElem) -> String {
        let h: &dyn Algebra = &*self.h;
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| format!("({}) * {}", format_tensor(&[h, h], c), self.generators[n][g]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Left `H^e`-action on a free element.
pub fn act(h: &dyn Algebra, c: &Tensor, x: &FreeElem) -> FreeElem {
    x.iter().map(|e| enveloping_mul(h, c, e)).collect()
}

/// `μ(a ⊗ b) = a b` on degree 0.
pub fn augmentation(h: &dyn Algebra, x: &FreeElem) -> crate::hopf::Element {
    let mut out = crate::hopf::Element::zero();
    for c in x {
        for (t, s) in c.iter() {
            out.add_scaled(s, &h.mul_words(&t[0], &t[1]));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub name: String,
    pub version: u32,
    pub cap: usize,
    pub ranks: Vec<usize>,
    pub errata_applied: bool,
    pub errata: Vec<Erratum>,
    pub checks: Vec<Check>,
}

/// Checks `μ d_1 = 0` and `d_{n-1} d_n = 0` generator by generator up to
/// the loaded cap; failures carry the residual.
pub fn verify_resolution(r: &ResolutionData) -> ResolutionReport {
    let h: &dyn Algebra = &*r.h;
    let mut checks = Vec::new();
    for (g, name) in r.generators.get(1).into_iter().flatten().enumerate() {
        let res = augmentation(h, &r.apply_d(1, &r.basis(1, g)));
        checks.push(if res.is_zero() {
            Check::pass(format!("augmentation of d_1 vanishes [{name}]"), 1)
        } else {
            Check::fail(format!("augmentation of d_1 vanishes [{name}]"), 1, name.clone(), format!("{res:?}"))
        });
    }
    let per_degree: Vec<Vec<Check>> = (2..=r.cap())
        .into_par_iter()
        .map(|n| {
            r.generators[n]
                .iter()
                .enumerate()
                .map(|(g, name)| {
                    let label = format!("d_{} d_{n} = 0 [{name}]", n - 1);
                    let res = r.apply_d(n - 1, &r.apply_d(n, &r.basis(n, g)));
                    if res.iter().all(Tensor::is_zero) {
                        Check::pass(label, 1)
                    } else {
                        Check::fail(label, 1, name.clone(), r.format(n - 2, &res))
                    }
                })
                .collect()
        })
        .collect();
    checks.extend(per_degree.into_iter().flatten());
    ResolutionReport {
        name: r.name.clone(),
        version: r.version,
        cap: r.cap(),
        ranks: r.ranks(),
        errata_applied: r.errata_applied,
        errata: r.errata.clone(),
        checks,
    }
}

/// Characters for base change: the data file's assignment, or the two
/// swapped.
pub fn base_change_characters(r: &ResolutionData, swapped: bool) -> Result<(Character, Character)> {
    let h: &dyn HopfAlgebra = &*r.h;
    let a = find_character(h, &r.base_change[0])?;
    let b = find_character(h, &r.base_change[1])?;
    Ok(if swapped { (b, a) } else { (a, b) })
}

fn evaluate(h: &dyn Algebra, c: &Tensor, left: &Character, right: &Character) -> Scalar {
    let f = h.field();
    let mut acc = f.zero();
    for (t, s) in c.iter() {
        acc = &acc + &(&(s * &left.eval_word(f, &t[0])) * &right.eval_word(f, &t[1]));
    }
    acc
}

/// `k ⊗_{H^e} M_*` with `a ⊗ b` acting by `left(a) right(b)`, degrees
/// `0..=cap`.
pub fn base_change(r: &ResolutionData, left: &Character, right: &Character) -> Result<ChainComplex> {
    let h: &dyn Algebra = &*r.h;
    let f = h.field();
    let mut d = vec![SparseMatrix::zero(0, r.rank(0), f)];
    for n in 1..=r.cap() {
        let cols = r.d[n]
            .iter()
            .map(|img| {
                SparseVec::from_pairs(img.iter().enumerate().map(|(j, c)| (j, evaluate(h, c, left, right))).collect())
            })
            .collect();
        d.push(SparseMatrix::from_columns(r.rank(n - 1), cols, f)?);
    }
    ChainComplex::new(f, d)
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseChangeReport {
    pub resolution: String,
    pub characters: [String; 2],
    pub n_max: usize,
    pub cap: usize,
    pub dims: Vec<usize>,
    /// Cycle representatives of a basis of each `H_n`.
    pub representatives: Vec<Vec<String>>,
}

fn format_vector(r: &ResolutionData, n: usize, v: &SparseVec) -> String {
    v.entries()
        .iter()
        .map(|(i, c)| format!("({}) {}", c.to_report_string(), r.generators[n][*i]))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `H_n(k ⊗_{H^e} M_*)` for `n <= n_max`; needs `n_max < cap`.
pub fn base_change_homology(
    r: &ResolutionData,
    left: &Character,
    right: &Character,
    n_max: usize,
) -> Result<(BaseChangeReport, ChainComplex)> {
    if n_max >= r.cap() {
        return Err(Error::CapExceeded(format!("H_{n_max} needs the resolution up to degree {}", n_max + 1)));
    }
    let c = base_change(r, left, right)?;
    let mut dims = Vec::new();
    let mut representatives = Vec::new();
    for n in 0..=n_max {
        let hr = c.homology(n)?;
        dims.push(hr.dimension);
        representatives.push(hr.representatives.iter().map(|v| format_vector(r, n, v)).collect());
    }
    let report = BaseChangeReport {
        resolution: r.name.clone(),
        characters: [left.name.clone(), right.name.clone()],
        n_max,
        cap: r.cap(),
        dims,
        representatives,
    };
    Ok((report, c))
}

/// Whether the classes of the given cycles form a basis of `H_n`.
pub fn classes_form_basis(c: &ChainComplex, n: usize, cycles: &[SparseVec]) -> Result<bool> {
    let f = c.field;
    let outgoing = c.differential(n);
    if cycles.iter().any(|v| !outgoing.apply(v).is_zero()) {
        return Ok(false);
    }
    let dim = c.homology(n)?.dimension;
    let boundaries: Vec<SparseVec> = if n < c.top() { c.differential(n + 1).columns().to_vec() } else { Vec::new() };
    let rows = c.dims()[n];
    let b = SparseMatrix::from_columns(rows, boundaries.clone(), f)?.rank();
    let all =
        SparseMatrix::from_columns(rows, boundaries.into_iter().chain(cycles.iter().cloned()).collect(), f)?.rank();
    Ok(cycles.len() == dim && all == b + dim)
}

/// The unit vector of a named generator in degree `n` of a base-changed
/// complex.
pub fn generator_vector(r: &ResolutionData, n: usize, name: &str) -> Result<SparseVec> {
    let i = r.generator_index(n, name).ok_or_else(|| Error::Config(format!("no generator {name} in degree {n}")))?;
    Ok(SparseVec::unit(i, r.h.field()))
}

/// Bar differential on `a_0 ⊗ … ⊗ a_{n+1}`:
/// `Σ_{i=0}^{n} (-1)^i a_0 ⊗ … ⊗ a_i a_{i+1} ⊗ …`.
pub fn bar_differential(h: &dyn Algebra, t: &TensorWord) -> Tensor {
    let f = h.field();
    let mut out = Tensor::zero();
    for i in 0..t.len() - 1 {
        let s = if i % 2 == 0 { f.one() } else { f.one().neg() };
        for (w, c) in h.mul_words(&t[i], &t[i + 1]).iter() {
            let mut k: TensorWord = t[..i].iter().cloned().collect();
            k.push(w.clone());
            k.extend(t[i + 2..].iter().cloned());
            out.add_term(k, &s * c);
        }
    }
    out
}

/// `(a ⊗ b) · (a_0 ⊗ … ⊗ a_m) = a a_0 ⊗ … ⊗ a_m b` for `m >= 1`.
pub fn bar_act(h: &dyn Algebra, c: &Tensor, x: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for (s, e) in c.iter() {
        for (t, g) in x.iter() {
            let m = t.len() - 1;
            let first = h.mul_words(&s[0], &t[0]);
            let last = h.mul_words(&t[m], &s[1]);
            let eg = e * g;
            for (w0, a) in first.iter() {
                for (wm, b) in last.iter() {
                    let mut k: TensorWord = std::iter::once(w0.clone()).collect();
                    k.extend(t[1..m].iter().cloned());
                    k.push(wm.clone());
                    out.add_term(k, &(&eg * a) * b);
                }
            }
        }
    }
    out
}

/// Base change of the bar resolution of a finite dimensional `H`, degrees
/// `0..=top`, with generators `1 ⊗ h_1 ⊗ … ⊗ h_n ⊗ 1` over a basis.
pub fn bar_base_change(h: &dyn Algebra, left: &Character, right: &Character, top: usize) -> Result<ChainComplex> {
    if !h.is_finite_dimensional() {
        return Err(Error::NotTruncatable(format!("{} is not finite dimensional", h.name())));
    }
    let f = h.field();
    let pieces: Vec<Piece> = (0..=top).map(|n| Piece::new(spanning_words(&vec![h; n], 0))).collect();
    let mut d = vec![SparseMatrix::zero(0, pieces[0].len(), f)];
    for n in 1..=top {
        let op = |t: &TensorWord| {
            let full: TensorWord = std::iter::once(Default::default())
                .chain(t.iter().cloned())
                .chain(std::iter::once(Default::default()))
                .collect();
            let mut out = Tensor::zero();
            for (k, c) in bar_differential(h, &full).iter() {
                let s = c * &(&left.eval_word(f, &k[0]) * &right.eval_word(f, &k[k.len() - 1]));
                out.add_term(k[1..k.len() - 1].iter().cloned().collect(), s);
            }
            out
        };
        d.push(operator_matrix(f, &pieces[n], &pieces[n - 1], op, |_| false)?);
    }
    ChainComplex::new(f, d)
}

/// A chain map from a resolution into the bar resolution: `maps[n][g]` is
/// the image of generator `g` of degree `n`, an element of width `n + 2`.
#[derive(Clone, Debug)]
pub struct ComparisonLift {
    pub maps: Vec<Vec<Tensor>>,
}

impl ComparisonLift {
    pub fn apply(&self, h: &dyn Algebra, n: usize, x: &FreeElem) -> Tensor {
        let mut out = Tensor::zero();
        for (g, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign(&bar_act(h, c, &self.maps[n][g]));
            }
        }
        out
    }
}

/// `f_0 = id` and `f_{n+1}(g) = s f_n(d g)` with `s` prepending `1`, for
/// degrees `0..=n_max`.
pub fn comparison_lift(r: &ResolutionData, n_max: usize) -> Result<ComparisonLift> {
    if n_max > r.cap() {
        return Err(Error::CapExceeded(format!("resolution loaded only up to degree {}", r.cap())));
    }
    let h: &dyn Algebra = &*r.h;
    let one = h.field().one();
    let unit2: TensorWord = [Default::default(), Default::default()].into_iter().collect();
    let mut maps = vec![vec![Tensor::single(unit2, one); r.rank(0)]];
    for n in 1..=n_max {
        let prev = ComparisonLift { maps: maps.clone() };
        let level: Vec<Tensor> = (0..r.rank(n))
            .into_par_iter()
            .map(|g| {
                let z = prev.apply(h, n - 1, r.image(n, g));
                z.map_linear(|t| {
                    Tensor::single(
                        std::iter::once(Default::default()).chain(t.iter().cloned()).collect(),
                        h.field().one(),
                    )
                })
            })
            .collect();
        maps.push(level);
    }
    Ok(ComparisonLift { maps })
}

/// `d^bar f_n = f_{n-1} d_n` on every generator, and `f_0` lifts the
/// identity of `H`.
pub fn verify_comparison(r: &ResolutionData, lift: &ComparisonLift) -> Vec<Check> {
    let h: &dyn Algebra = &*r.h;
    let mut out = Vec::new();
    for n in 1..lift.maps.len() {
        for (g, name) in r.generators[n].iter().enumerate() {
            let lhs = lift.maps[n][g].map_linear(|t| bar_differential(h, t));
            let rhs = lift.apply(h, n - 1, r.image(n, g));
            let label = format!("bar differential commutes with the lift [{name}]");
            out.push(if lhs == rhs {
                Check::pass(label, 1)
            } else {
                Check::fail(label, 1, name.clone(), format!("difference has {} terms", lhs.sub(&rhs).len()))
            });
        }
    }
    out
}
