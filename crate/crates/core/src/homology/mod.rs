//! Chain complexes over a field, Hochschild and cyclic homology of cyclic
//! modules, resolutions and their base change.

pub mod cocyclic;
pub mod homotopy;
pub mod resolution;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclic::{level_factors, CyclicModule};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{Tensor, TensorWord, Word};
use crate::linalg::{homology_of_pair, HomologyResult, SparseMatrix, SparseVec};

/// `C_0 <- C_1 <- … <- C_top` with `d[n]: C_n -> C_{n-1}`. Degrees above
/// `top` are zero.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub field: Field,
    dims: Vec<usize>,
    d: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `d[0]` must have zero rows. Rejects shapes that do not chain and
    /// nonzero composites `d[n-1] d[n]`.
    pub fn new(field: Field, d: Vec<SparseMatrix>) -> Result<Self> {
        let dims: Vec<usize> = d.iter().map(|m| m.ncols()).collect();
        if let Some(d0) = d.first() {
            if d0.nrows() != 0 {
                return Err(Error::DimensionMismatch("d_0 must map to the zero space".into()));
            }
        }
        for n in 1..d.len() {
            if d[n].nrows() != dims[n - 1] {
                return Err(Error::DimensionMismatch(format!(
                    "d_{n} has {} rows but C_{} has dimension {}",
                    d[n].nrows(),
                    n - 1,
                    dims[n - 1]
                )));
            }
        }
        let bad: Option<(usize, usize)> = (2..d.len())
            .into_par_iter()
            .find_map_first(|n| d[n].columns().iter().position(|c| !d[n - 1].apply(c).is_zero()).map(|j| (n, j)));
        if let Some((_, column)) = bad {
            return Err(Error::NotAComplex { column });
        }
        Ok(ChainComplex { field, dims, d })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.d[n]
    }

    fn ranks(&self) -> Vec<usize> {
        self.d.par_iter().map(|m| m.rank()).collect()
    }

    /// `dim H_n` for every degree `0..=top`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let r = self.ranks();
        (0..self.dims.len()).map(|n| self.dims[n] - r[n] - r.get(n + 1).copied().unwrap_or(0)).collect()
    }

    /// `H_n` with representatives.
    pub fn homology(&self, n: usize) -> Result<HomologyResult> {
        let empty = SparseMatrix::zero(self.dims[n], 0, self.field);
        let incoming = self.d.get(n + 1).unwrap_or(&empty);
        homology_of_pair(incoming, &self.d[n])
    }

    /// `Σ (-1)^n dim C_n = Σ (-1)^n dim H_n`.
    pub fn euler_holds(&self) -> bool {
        let h = self.homology_dims();
        let alt = |v: &[usize]| {
            v.iter().enumerate().map(|(n, x)| if n % 2 == 0 { *x as i64 } else { -(*x as i64) }).sum::<i64>()
        };
        alt(&self.dims) == alt(&h)
    }
}

/// Basis of one level and weight of a cyclic module.
#[derive(Clone, Debug, Default)]
pub struct Piece {
    pub words: Vec<TensorWord>,
    index: HashMap<TensorWord, usize>,
}

impl Piece {
    pub(crate) fn new(words: Vec<TensorWord>) -> Self {
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Piece { words, index }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, t: &TensorWord) -> Option<usize> {
        self.index.get(t).copied()
    }
}

fn is_degenerate(m: &dyn CyclicModule, n: usize, t: &TensorWord) -> bool {
    m.normalized_slots(n).any(|j| t[j].is_empty())
}

/// Drops the degenerate words of a level-`n` element.
pub fn normalize(m: &dyn CyclicModule, n: usize, x: &Tensor) -> Tensor {
    let mut y = x.clone();
    y.retain(|t| !is_degenerate(m, n, t));
    y
}

/// Which weights a computation covers: only weight 0 for finite
/// dimensional modules, `0..=cap` for graded ones.
pub fn weights_for(m: &dyn CyclicModule, cap: u32) -> Result<Vec<u32>> {
    let factors = level_factors(m, 1);
    if factors.iter().all(|a| a.is_finite_dimensional()) {
        return Ok(vec![0]);
    }
    if factors.iter().all(|a| a.is_graded()) {
        return Ok((0..=cap).collect());
    }
    Err(Error::NotTruncatable(format!("{} has no finite weight pieces; use a resolution instead", m.label())))
}

/// Basis words at level `n` of total degree exactly `w`.
pub fn level_piece(m: &dyn CyclicModule, n: usize, w: u32, normalized: bool) -> Piece {
    let factors = level_factors(m, n);
    let slots = m.normalized_slots(n);
    let bases: Vec<Vec<(Word, u32)>> = factors
        .iter()
        .enumerate()
        .map(|(j, a)| {
            a.basis_up_to(w)
                .into_iter()
                .filter(|x| !(normalized && slots.contains(&j) && x.is_empty()))
                .map(|x| {
                    let d = a.degree(&x);
                    (x, d)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    fn rec(bases: &[Vec<(Word, u32)>], left: u32, cur: &mut TensorWord, out: &mut Vec<TensorWord>) {
        let Some((first, rest)) = bases.split_first() else {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        };
        for (x, d) in first {
            if *d <= left {
                cur.push(x.clone());
                rec(rest, left - d, cur, out);
                cur.pop();
            }
        }
    }
    rec(&bases, w, &mut TensorWord::new(), &mut out);
    Piece::new(out)
}

/// Matrix of `op` from `src` to `tgt`. Terms rejected by `drop` are
/// discarded; any other term outside `tgt` is an error.
pub fn operator_matrix(
    field: Field,
    src: &Piece,
    tgt: &Piece,
    op: impl Fn(&TensorWord) -> Tensor + Sync,
    drop: impl Fn(&TensorWord) -> bool + Sync,
) -> Result<SparseMatrix> {
    let cols: Result<Vec<SparseVec>> = src
        .words
        .par_iter()
        .map(|t| {
            let mut pairs = Vec::new();
            for (k, c) in op(t).iter() {
                match tgt.position(k) {
                    Some(i) => pairs.push((i, c.clone())),
                    None if drop(k) => {}
                    None => {
                        return Err(Error::NotTruncatable(format!(
                            "an operator leaves the weight piece (term of length {})",
                            k.len()
                        )))
                    }
                }
            }
            Ok(SparseVec::from_pairs(pairs))
        })
        .collect();
    SparseMatrix::from_columns(tgt.len(), cols?, field)
}

fn sign(field: Field, k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        field.one()
    } else {
        field.one().neg()
    }
}

/// `b = Σ_{i=0}^{n} (-1)^i δ_i` on one word.
pub fn hochschild_b(m: &dyn CyclicModule, n: usize, t: &TensorWord) -> Tensor {
    let f = m.field();
    let mut acc = Tensor::zero();
    for i in 0..=n {
        acc.add_scaled(&sign(f, i), &m.face(n, i, t));
    }
    acc
}

/// `b' = Σ_{i=0}^{n-1} (-1)^i δ_i` on one word.
pub fn hochschild_b_prime(m: &dyn CyclicModule, n: usize, t: &TensorWord) -> Tensor {
    let f = m.field();
    let mut acc = Tensor::zero();
    for i in 0..n {
        acc.add_scaled(&sign(f, i), &m.face(n, i, t));
    }
    acc
}

fn tau(m: &dyn CyclicModule, n: usize, x: &Tensor) -> Result<Tensor> {
    x.try_map_linear(|t| m.cyclic(n, t).ok_or_else(|| Error::Config(format!("{} has no cyclic operator", m.label()))))
}

/// `λ = (-1)^n τ_n`.
fn lambda(m: &dyn CyclicModule, n: usize, x: &Tensor) -> Result<Tensor> {
    Ok(tau(m, n, x)?.scale(&sign(m.field(), n)))
}

/// `N = Σ_{i=0}^{n} λ^i`.
pub fn norm_operator(m: &dyn CyclicModule, n: usize, x: &Tensor) -> Result<Tensor> {
    let mut acc = x.clone();
    let mut cur = x.clone();
    for _ in 0..n {
        cur = lambda(m, n, &cur)?;
        acc.add_assign(&cur);
    }
    Ok(acc)
}

/// Connes' boundary `B = (1 - λ) s N` from level `n` to `n + 1`, with the
/// extra degeneracy `s = τ_{n+1} σ_n`.
pub fn connes_b(m: &dyn CyclicModule, n: usize, x: &Tensor) -> Result<Tensor> {
    let nx = norm_operator(m, n, x)?;
    let s = tau(m, n + 1, &nx.map_linear(|t| m.degeneracy(n, n, t)))?;
    let ls = lambda(m, n + 1, &s)?;
    Ok(s.sub(&ls))
}

/// `B` followed by the projection to the normalized complex.
pub fn connes_b_normalized(m: &dyn CyclicModule, n: usize, x: &Tensor) -> Result<Tensor> {
    Ok(normalize(m, n + 1, &connes_b(m, n, x)?))
}

/// Dimensions per degree, summed over weights, with the bounds used.
#[derive(Clone, Debug, Serialize)]
pub struct GradedDims {
    pub n_max: usize,
    /// `None` for finite dimensional modules.
    pub weight_cap: Option<u32>,
    pub dims: Vec<usize>,
    /// `by_weight[w][n]`.
    pub by_weight: Vec<Vec<usize>>,
    pub euler_holds: bool,
}

fn collect_dims(n_max: usize, cap: Option<u32>, per_weight: Vec<(Vec<usize>, bool)>) -> GradedDims {
    let mut dims = vec![0; n_max + 1];
    for (d, _) in &per_weight {
        for n in 0..=n_max {
            dims[n] += d[n];
        }
    }
    GradedDims {
        n_max,
        weight_cap: cap,
        dims,
        euler_holds: per_weight.iter().all(|(_, e)| *e),
        by_weight: per_weight.into_iter().map(|(d, _)| d[..=n_max].to_vec()).collect(),
    }
}

fn finite_cap(m: &dyn CyclicModule, cap: u32) -> Option<u32> {
    let finite = level_factors(m, 1).iter().all(|a| a.is_finite_dimensional());
    (!finite).then_some(cap)
}

/// The normalized Hochschild complex of one weight, degrees `0..=top`.
pub fn normalized_hochschild_complex(m: &dyn CyclicModule, top: usize, w: u32) -> Result<ChainComplex> {
    let f = m.field();
    let pieces: Vec<Piece> = (0..=top).map(|n| level_piece(m, n, w, true)).collect();
    let mut d = vec![SparseMatrix::zero(0, pieces[0].len(), f)];
    for n in 1..=top {
        d.push(operator_matrix(
            f,
            &pieces[n],
            &pieces[n - 1],
            |t| hochschild_b(m, n, t),
            |k| is_degenerate(m, n - 1, k),
        )?);
    }
    ChainComplex::new(f, d)
}

/// `HH_n` for `n <= n_max`, from the normalized `b`-complex split by weight.
pub fn hochschild_homology(m: &dyn CyclicModule, n_max: usize, weight_cap: u32) -> Result<GradedDims> {
    let weights = weights_for(m, weight_cap)?;
    let per: Result<Vec<(Vec<usize>, bool)>> = weights
        .par_iter()
        .map(|&w| {
            let c = normalized_hochschild_complex(m, n_max + 1, w)?;
            Ok((c.homology_dims(), c.euler_holds()))
        })
        .collect();
    Ok(collect_dims(n_max, finite_cap(m, weight_cap), per?))
}

/// Total complex of the normalized `(b, B)` bicomplex of one weight:
/// `Tot_n = C̄_n ⊕ C̄_{n-2} ⊕ …`, differential `b + B`.
pub fn bb_total_complex(m: &dyn CyclicModule, top: usize, w: u32) -> Result<ChainComplex> {
    let f = m.field();
    let pieces: Vec<Piece> = (0..=top).map(|n| level_piece(m, n, w, true)).collect();
    let mut b = vec![SparseMatrix::zero(0, pieces[0].len(), f)];
    for n in 1..=top {
        b.push(operator_matrix(
            f,
            &pieces[n],
            &pieces[n - 1],
            |t| hochschild_b(m, n, t),
            |k| is_degenerate(m, n - 1, k),
        )?);
    }
    let mut bb = Vec::new();
    for n in 0..top {
        let one = f.one();
        bb.push(operator_matrix(
            f,
            &pieces[n],
            &pieces[n + 1],
            |t| connes_b_normalized(m, n, &Tensor::single(t.clone(), one.clone())).expect("cyclic module"),
            |_| false,
        )?);
    }
    let comps = |n: usize| -> Vec<usize> { (0..=n).rev().step_by(2).collect() };
    let offsets = |n: usize| -> (Vec<usize>, usize) {
        let mut off = Vec::new();
        let mut acc = 0;
        for c in comps(n) {
            off.push(acc);
            acc += pieces[c].len();
        }
        (off, acc)
    };
    let mut d = Vec::new();
    for n in 0..=top {
        let (src_off, src_dim) = offsets(n);
        if n == 0 {
            d.push(SparseMatrix::zero(0, src_dim, f));
            continue;
        }
        let (tgt_off, tgt_dim) = offsets(n - 1);
        let tgt_comps = comps(n - 1);
        let mut trip = Vec::new();
        for (k, c) in comps(n).into_iter().enumerate() {
            let place = |mat: &SparseMatrix, to: usize, trip: &mut Vec<(usize, usize, Scalar)>| {
                let ti = tgt_comps.iter().position(|x| *x == to).expect("component");
                for (j, col) in mat.columns().iter().enumerate() {
                    for (i, v) in col.entries() {
                        trip.push((tgt_off[ti] + i, src_off[k] + j, v.clone()));
                    }
                }
            };
            if c >= 1 {
                place(&b[c], c - 1, &mut trip);
            }
            if c + 2 <= n {
                place(&bb[c], c + 1, &mut trip);
            }
        }
        d.push(SparseMatrix::from_triplets(tgt_dim, src_dim, f, trip)?);
    }
    ChainComplex::new(f, d)
}

/// Stabilized even and odd `HC` dimensions over the computed window.
#[derive(Clone, Debug, Serialize)]
pub struct PeriodicReport {
    pub window: usize,
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
    /// Set when the last two entries of the sequence agree.
    pub stabilized_even: Option<usize>,
    pub stabilized_odd: Option<usize>,
}

fn stabilized(v: &[usize]) -> Option<usize> {
    match v {
        [.., a, b] if a == b => Some(*b),
        _ => None,
    }
}

pub fn periodic_report(dims: &[usize]) -> PeriodicReport {
    let even: Vec<usize> = dims.iter().step_by(2).copied().collect();
    let odd: Vec<usize> = dims.iter().skip(1).step_by(2).copied().collect();
    PeriodicReport {
        window: dims.len().saturating_sub(1),
        stabilized_even: stabilized(&even),
        stabilized_odd: stabilized(&odd),
        even,
        odd,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicReport {
    pub hc: GradedDims,
    pub periodic: PeriodicReport,
}

/// `HC_n` for `n <= n_max` from the normalized `(b, B)` total complex.
pub fn cyclic_homology(m: &dyn CyclicModule, n_max: usize, weight_cap: u32) -> Result<CyclicReport> {
    if !m.is_cyclic() {
        return Err(Error::Config(format!("{} has no cyclic operator", m.label())));
    }
    let weights = weights_for(m, weight_cap)?;
    let per: Result<Vec<(Vec<usize>, bool)>> = weights
        .par_iter()
        .map(|&w| {
            let c = bb_total_complex(m, n_max + 1, w)?;
            Ok((c.homology_dims(), c.euler_holds()))
        })
        .collect();
    let hc = collect_dims(n_max, finite_cap(m, weight_cap), per?);
    let periodic = periodic_report(&hc.dims);
    Ok(CyclicReport { hc, periodic })
}

/// Total complex of the full cyclic bicomplex `CC` of one weight: columns
/// `b`, `-b'` alternating, rows `1 - λ` and `N`.
pub fn cc_total_complex(m: &dyn CyclicModule, top: usize, w: u32) -> Result<ChainComplex> {
    let f = m.field();
    let pieces: Vec<Piece> = (0..=top).map(|n| level_piece(m, n, w, false)).collect();
    let one = f.one();
    let unit = |t: &TensorWord| Tensor::single(t.clone(), one.clone());
    let mut b = vec![SparseMatrix::zero(0, pieces[0].len(), f)];
    let mut bp = vec![SparseMatrix::zero(0, pieces[0].len(), f)];
    for n in 1..=top {
        b.push(operator_matrix(f, &pieces[n], &pieces[n - 1], |t| hochschild_b(m, n, t), |_| false)?);
        bp.push(
            operator_matrix(f, &pieces[n], &pieces[n - 1], |t| hochschild_b_prime(m, n, t), |_| false)?
                .scale(&f.one().neg()),
        );
    }
    let mut one_minus_lambda = Vec::new();
    let mut norm = Vec::new();
    for n in 0..=top {
        let lam = |t: &TensorWord| {
            let x = unit(t);
            x.sub(&lambda(m, n, &x).expect("cyclic module"))
        };
        one_minus_lambda.push(operator_matrix(f, &pieces[n], &pieces[n], lam, |_| false)?);
        norm.push(operator_matrix(
            f,
            &pieces[n],
            &pieces[n],
            |t| norm_operator(m, n, &unit(t)).expect("cyclic module"),
            |_| false,
        )?);
    }
    // Tot_n = ⊕_{p=0}^{n} CC_{p, n-p}, ordered by p
    let offsets = |n: usize| -> (Vec<usize>, usize) {
        let mut off = Vec::new();
        let mut acc = 0;
        for p in 0..=n {
            off.push(acc);
            acc += pieces[n - p].len();
        }
        (off, acc)
    };
    let mut d = Vec::new();
    for n in 0..=top {
        let (src_off, src_dim) = offsets(n);
        if n == 0 {
            d.push(SparseMatrix::zero(0, src_dim, f));
            continue;
        }
        let (tgt_off, tgt_dim) = offsets(n - 1);
        let mut trip = Vec::new();
        for p in 0..=n {
            let q = n - p;
            let mut place = |mat: &SparseMatrix, tp: usize| {
                for (j, col) in mat.columns().iter().enumerate() {
                    for (i, v) in col.entries() {
                        trip.push((tgt_off[tp] + i, src_off[p] + j, v.clone()));
                    }
                }
            };
            if q >= 1 {
                place(if p % 2 == 0 { &b[q] } else { &bp[q] }, p);
            }
            if p >= 1 {
                place(if p % 2 == 1 { &one_minus_lambda[q] } else { &norm[q] }, p - 1);
            }
        }
        d.push(SparseMatrix::from_triplets(tgt_dim, src_dim, f, trip)?);
    }
    ChainComplex::new(f, d)
}

/// `HC_n` from the full cyclic bicomplex; a slower cross-check of
/// [`cyclic_homology`].
pub fn cyclic_homology_cc(m: &dyn CyclicModule, n_max: usize, weight_cap: u32) -> Result<GradedDims> {
    let weights = weights_for(m, weight_cap)?;
    let per: Result<Vec<(Vec<usize>, bool)>> = weights
        .par_iter()
        .map(|&w| {
            let c = cc_total_complex(m, n_max + 1, w)?;
            Ok((c.homology_dims(), c.euler_holds()))
        })
        .collect();
    Ok(collect_dims(n_max, finite_cap(m, weight_cap), per?))
}

/// Total dimensions computed with caps `W` and `W + 1` agree, i.e. the
/// extra weight contributes nothing through `n_max`.
pub fn weight_stable(small: &GradedDims, large: &GradedDims) -> bool {
    small.n_max == large.n_max && small.dims == large.dims
}

#[derive(Clone, Debug, Serialize)]
pub struct KaroubiReport {
    pub n_max: usize,
    pub weight_cap: Option<u32>,
    /// `HC_n^{(ε,1)}` from the cyclic bicomplex.
    pub cyclic: Vec<usize>,
    /// `H_n(H, k)` from the Hochschild complex.
    pub hochschild: Vec<usize>,
    /// `Σ_{i>=0} H_{n-2i}(H, k)`.
    pub predicted: Vec<usize>,
    pub equal: bool,
}

/// Compares `HC_n^{(ε,1)}(H)` with `⊕_{i>=0} H_{n-2i}(H, k)` for a
/// cocommutative `H`.
pub fn karoubi_compare(h: crate::hopf::HopfRef, n_max: usize, weight_cap: u32) -> Result<KaroubiReport> {
    if !h.declared_flags().cocommutative {
        return Err(Error::NotCocommutative);
    }
    let pair = crate::hopf::ModularPair::trivial(&*h);
    let m = crate::cyclic::HopfCyclic { h, pair };
    let hc = cyclic_homology(&m, n_max, weight_cap)?;
    let hh = hochschild_homology(&m, n_max, weight_cap)?;
    let predicted: Vec<usize> = (0..=n_max).map(|n| (0..=n).rev().step_by(2).map(|j| hh.dims[j]).sum()).collect();
    Ok(KaroubiReport {
        n_max,
        weight_cap: hc.hc.weight_cap,
        equal: predicted == hc.hc.dims,
        cyclic: hc.hc.dims,
        hochschild: hh.dims,
        predicted,
    })
}
