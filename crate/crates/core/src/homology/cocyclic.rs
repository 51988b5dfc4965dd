//! Cyclic cohomology of cocyclic modules and the periodic comparison for
//! commutative Hopf algebras.

use rayon::prelude::*;
use serde::Serialize;

use super::{operator_matrix, periodic_report, PeriodicReport, Piece};
use crate::cyclic::{colevel_factors, spanning_words, CmCocyclic, CocyclicModule, CommutativeCocyclic};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{HopfRef, ModularPair, Tensor, TensorWord};
use crate::linalg::SparseMatrix;

/// `C^0 -> C^1 -> … -> C^top` with `d[n]: C^n -> C^{n+1}`.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub field: Field,
    dims: Vec<usize>,
    d: Vec<SparseMatrix>,
}

impl CochainComplex {
    /// `dims.len() == d.len() + 1`; rejects nonzero composites.
    pub fn new(field: Field, dims: Vec<usize>, d: Vec<SparseMatrix>) -> Result<Self> {
        if dims.len() != d.len() + 1 {
            return Err(Error::DimensionMismatch("need one more space than maps".into()));
        }
        for (n, m) in d.iter().enumerate() {
            if m.ncols() != dims[n] || m.nrows() != dims[n + 1] {
                return Err(Error::DimensionMismatch(format!("d^{n} has shape {}x{}", m.nrows(), m.ncols())));
            }
        }
        let bad = (1..d.len())
            .into_par_iter()
            .find_map_first(|n| d[n - 1].columns().iter().position(|c| !d[n].apply(c).is_zero()));
        if let Some(column) = bad {
            return Err(Error::NotAComplex { column });
        }
        Ok(CochainComplex { field, dims, d })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim H^n` for `n < top`; the top space has no outgoing map and is
    /// left out.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let r: Vec<usize> = self.d.par_iter().map(|m| m.rank()).collect();
        (0..self.d.len()).map(|n| self.dims[n] - r[n] - if n > 0 { r[n - 1] } else { 0 }).collect()
    }
}

fn colevel_piece(m: &dyn CocyclicModule, n: usize) -> Result<Piece> {
    let factors = colevel_factors(m, n);
    if !factors.iter().all(|a| a.is_finite_dimensional()) {
        return Err(Error::NotTruncatable(format!("{} is not finite dimensional", m.label())));
    }
    Ok(Piece::new(spanning_words(&factors, 0)))
}

fn sign(field: Field, k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        field.one()
    } else {
        field.one().neg()
    }
}

/// `Σ_{i=0}^{last} (-1)^i d_i` on one word of level `n`.
fn coface_sum(m: &dyn CocyclicModule, n: usize, last: usize, t: &TensorWord) -> Tensor {
    let f = m.field();
    let mut acc = Tensor::zero();
    for i in 0..=last {
        acc.add_scaled(&sign(f, i), &m.coface(n, i, t));
    }
    acc
}

/// The coboundary `b = Σ_{i=0}^{n+1} (-1)^i d_i` on levels `0..top`.
pub fn coboundary_complex(m: &dyn CocyclicModule, top: usize) -> Result<CochainComplex> {
    let f = m.field();
    let pieces: Vec<Piece> = (0..=top).map(|n| colevel_piece(m, n)).collect::<Result<_>>()?;
    let d = (0..top)
        .map(|n| operator_matrix(f, &pieces[n], &pieces[n + 1], |t| coface_sum(m, n, n + 1, t), |_| false))
        .collect::<Result<Vec<_>>>()?;
    CochainComplex::new(f, pieces.iter().map(Piece::len).collect(), d)
}

/// Total complex of the cocyclic bicomplex: columns `b`, `-b'`
/// alternating, rows `1 - λ` and `N`, `λ = (-1)^n τ_n`.
pub fn cocyclic_total_complex(m: &dyn CocyclicModule, top: usize) -> Result<CochainComplex> {
    let f = m.field();
    let pieces: Vec<Piece> = (0..=top).map(|n| colevel_piece(m, n)).collect::<Result<_>>()?;
    let mut b = Vec::new();
    let mut bp = Vec::new();
    for n in 0..top {
        b.push(operator_matrix(f, &pieces[n], &pieces[n + 1], |t| coface_sum(m, n, n + 1, t), |_| false)?);
        bp.push(
            operator_matrix(f, &pieces[n], &pieces[n + 1], |t| coface_sum(m, n, n, t), |_| false)?
                .scale(&f.one().neg()),
        );
    }
    let mut one_minus_lambda = Vec::new();
    let mut norm = Vec::new();
    for n in 0..=top {
        let lambda = operator_matrix(f, &pieces[n], &pieces[n], |t| m.cocyclic(n, t), |_| false)?.scale(&sign(f, n));
        let id = SparseMatrix::identity(pieces[n].len(), f);
        let mut acc = id.clone();
        let mut power = id.clone();
        for _ in 0..n {
            power = lambda.mul(&power)?;
            acc = acc.add(&power)?;
        }
        one_minus_lambda.push(id.add(&lambda.scale(&f.one().neg()))?);
        norm.push(acc);
    }
    // Tot^n = ⊕_{p=0}^{n} CC^{p, n-p}, ordered by p
    let offsets = |n: usize| -> (Vec<usize>, usize) {
        let mut off = Vec::new();
        let mut acc = 0;
        for p in 0..=n {
            off.push(acc);
            acc += pieces[n - p].len();
        }
        (off, acc)
    };
    let dims: Vec<usize> = (0..=top).map(|n| offsets(n).1).collect();
    let mut d = Vec::new();
    for n in 0..top {
        let (src_off, _) = offsets(n);
        let (tgt_off, tgt_dim) = offsets(n + 1);
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
            place(if p % 2 == 0 { &b[q] } else { &bp[q] }, p);
            place(if p % 2 == 0 { &one_minus_lambda[q] } else { &norm[q] }, p + 1);
        }
        d.push(SparseMatrix::from_triplets(tgt_dim, dims[n], f, trip)?);
    }
    CochainComplex::new(f, dims, d)
}

#[derive(Clone, Debug, Serialize)]
pub struct CocyclicReport {
    pub n_max: usize,
    pub hc: Vec<usize>,
    pub periodic: PeriodicReport,
}

/// `HC^n` for `n <= n_max` of a finite dimensional cocyclic module.
pub fn cyclic_cohomology(m: &dyn CocyclicModule, n_max: usize) -> Result<CocyclicReport> {
    let hc = cocyclic_total_complex(m, n_max + 1)?.cohomology_dims();
    Ok(CocyclicReport { n_max, periodic: periodic_report(&hc), hc })
}

#[derive(Clone, Debug, Serialize)]
pub struct HpReport {
    pub instance: String,
    pub n_max: usize,
    /// `HC^n` of the commutative cocyclic module.
    pub cyclic: Vec<usize>,
    /// `H^i(H, k)` from the cobar complex.
    pub coalgebra: Vec<usize>,
    /// `HP^0`, `HP^1` read off the stabilized cyclic side.
    pub hp_cyclic: [Option<usize>; 2],
    /// `Σ_{i ≡ n mod 2} H^i(H, k)` over the window.
    pub hp_coalgebra: [usize; 2],
    pub equal: bool,
}

/// Compares `HP^n` of a commutative `H` computed from its cocyclic module
/// with `⊕_{i ≡ n mod 2} H^i(H, k)` from the cobar complex.
pub fn commutative_hp_compare(h: HopfRef, n_max: usize) -> Result<HpReport> {
    let instance = h.name().to_string();
    let pair = ModularPair::trivial(&*h);
    let cm = CmCocyclic { h: h.clone(), pair };
    let coalgebra = coboundary_complex(&cm, n_max + 1)?.cohomology_dims();
    let e = CommutativeCocyclic::new(h)?;
    let r = cyclic_cohomology(&e, n_max)?;
    let hp_coalgebra = [0, 1].map(|parity| coalgebra.iter().skip(parity).step_by(2).sum());
    let hp_cyclic = [r.periodic.stabilized_even, r.periodic.stabilized_odd];
    Ok(HpReport {
        instance,
        n_max,
        equal: hp_cyclic[0] == Some(hp_coalgebra[0]) && hp_cyclic[1] == Some(hp_coalgebra[1]),
        cyclic: r.hc,
        coalgebra,
        hp_cyclic,
        hp_coalgebra,
    })
}
