//! Exact sparse linear algebra over a [`Field`].
//!
//! Everything here is elimination on sparse vectors. Vectors are processed in
//! order of increasing fill and pivots are normalized to 1, so results only
//! depend on the input order.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn from_map(m: BTreeMap<usize, Scalar>) -> Self {
        SparseVec { entries: m.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut m: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            match m.get_mut(&i) {
                Some(old) => *old = &*old + &v,
                None => {
                    m.insert(i, v);
                }
            }
        }
        SparseVec::from_map(m)
    }

    pub fn unit(i: usize, field: Field) -> Self {
        SparseVec { entries: vec![(i, field.one())] }
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn lead(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let s = x + &(c * y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    /// Divides by the leading coefficient.
    pub fn normalized(&self) -> SparseVec {
        match self.lead() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero lead")),
            _ => self.clone(),
        }
    }
}

/// Incremental row-echelon basis keyed by leading index.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the current pivots (leading terms only).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        while let Some((lead, c)) = v.lead().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => v = v.axpy(&c.neg(), p),
                None => break,
            }
        }
        v
    }

    /// Inserts `v`; returns true if it was independent of the basis.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        // Reduce until the leading entry is a fresh pivot position. Entries
        // past the lead may still hit pivots; that is fine for echelon form.
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let r = r.normalized();
        let lead = r.lead().unwrap().0;
        self.pivots.insert(lead, r);
        true
    }

    pub fn pivot_indices(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Fully reduced form: every pivot column is zero in all other pivots.
    pub fn into_reduced(self) -> BTreeMap<usize, SparseVec> {
        let mut piv = self.pivots;
        let keys: Vec<usize> = piv.keys().copied().rev().collect();
        for &k in &keys {
            let pk = piv[&k].clone();
            for &j in keys.iter().filter(|&&j| j < k) {
                let pj = &piv[&j];
                if let Some(c) = pj.get(k) {
                    let c = c.neg();
                    let new = pj.axpy(&c, &pk);
                    piv.insert(j, new);
                }
            }
        }
        piv
    }
}

/// Rows x cols matrix stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
    field: Field,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        SparseMatrix { rows, cols: vec![SparseVec::new(); cols], field }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(|i| SparseVec::unit(i, field)).collect(), field }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>, field: Field) -> Result<Self> {
        for (j, c) in cols.iter().enumerate() {
            if c.entries.last().is_some_and(|e| e.0 >= rows) {
                return Err(Error::DimensionMismatch(format!("column {j} has an entry past row {rows}")));
            }
        }
        Ok(SparseMatrix { rows, cols, field })
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        field: Field,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch(format!("entry ({r},{c}) out of range")));
            }
            per_col[c].push((r, v));
        }
        Ok(SparseMatrix { rows, cols: per_col.into_iter().map(SparseVec::from_pairs).collect(), field })
    }

    pub fn from_dense(field: Field, rows: &[Vec<Scalar>]) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        let trip = rows.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        SparseMatrix::from_triplets(nr, nc, field, trip)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn rows_as_vecs(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in &c.entries {
                rows[*i].push((j, v.clone()));
            }
        }
        rows.into_iter().map(|entries| SparseVec { entries }).collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix { rows: self.cols.len(), cols: self.rows_as_vecs(), field: self.field }
    }

    /// Applies the matrix to a sparse vector of length `ncols`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (j, x) in &v.entries {
            for (i, a) in &self.cols[*j].entries {
                let t = a * x;
                match acc.get_mut(i) {
                    Some(s) => *s = &*s + &t,
                    None => {
                        acc.insert(*i, t);
                    }
                }
            }
        }
        SparseVec::from_map(acc)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows,
                self.ncols(),
                other.rows,
                other.ncols()
            )));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
            field: self.field,
        })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.axpy(&self.field.one(), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.axpy(c, b)).collect(),
            field: self.field,
        })
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect(), field: self.field }
    }

    pub fn rank(&self) -> usize {
        // Eliminate whichever side is shorter, sparsest vectors first.
        let mut vecs = if self.rows < self.ncols() { self.rows_as_vecs() } else { self.cols.clone() };
        vecs.retain(|v| !v.is_zero());
        vecs.sort_by_key(|v| v.nnz());
        let mut ech = Echelon::new();
        for v in &vecs {
            ech.insert(v);
        }
        ech.rank()
    }

    /// Rank and a basis of the nullspace (vectors of length `ncols`), each
    /// normalized to leading coefficient 1.
    pub fn rank_nullspace(&self) -> (usize, Vec<SparseVec>) {
        let mut rows = self.rows_as_vecs();
        rows.retain(|v| !v.is_zero());
        rows.sort_by_key(|v| v.nnz());
        let mut ech = Echelon::new();
        for r in &rows {
            ech.insert(r);
        }
        let rank = ech.rank();
        let rref = ech.into_reduced();
        let pivot_cols: std::collections::BTreeSet<usize> = rref.keys().copied().collect();
        let mut basis = Vec::new();
        for f in (0..self.ncols()).filter(|c| !pivot_cols.contains(c)) {
            let mut pairs = vec![(f, self.field.one())];
            for (&pc, row) in &rref {
                if let Some(v) = row.get(f) {
                    pairs.push((pc, v.neg()));
                }
            }
            basis.push(SparseVec::from_pairs(pairs).normalized());
        }
        (rank, basis)
    }
}

/// Homology of `C_{n+1} --incoming--> C_n --outgoing--> C_{n-1}` at `C_n`.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyResult {
    pub dimension: usize,
    /// Kernel vectors completing a basis of the image; coordinates in `C_n`.
    #[serde(skip)]
    pub representatives: Vec<SparseVec>,
}

pub fn homology_of_pair(incoming: &SparseMatrix, outgoing: &SparseMatrix) -> Result<HomologyResult> {
    if incoming.nrows() != outgoing.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "incoming has {} rows, outgoing has {} columns",
            incoming.nrows(),
            outgoing.ncols()
        )));
    }
    for (j, c) in incoming.columns().iter().enumerate() {
        if !outgoing.apply(c).is_zero() {
            return Err(Error::NotAComplex { column: j });
        }
    }
    let (_, kernel) = outgoing.rank_nullspace();
    let mut ech = Echelon::new();
    for c in incoming.columns() {
        ech.insert(c);
    }
    let mut reps = Vec::new();
    for k in &kernel {
        if ech.insert(k) {
            reps.push(k.clone());
        }
    }
    Ok(HomologyResult { dimension: reps.len(), representatives: reps })
}

/// Dimension only; skips the kernel basis.
pub fn homology_dim(incoming: &SparseMatrix, outgoing: &SparseMatrix) -> usize {
    let nullity = outgoing.ncols() - outgoing.rank();
    nullity - incoming.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::RatFun
    }

    fn s(f: Field, e: &str) -> Scalar {
        f.parse_scalar(e).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f = Field::Rational;
        let (r, ns) = SparseMatrix::identity(2, f).rank_nullspace();
        assert_eq!((r, ns.len()), (2, 0));
        let (r, ns) = SparseMatrix::zero(3, 5, f).rank_nullspace();
        assert_eq!((r, ns.len()), (0, 5));
    }

    #[test]
    fn aslq2_degree_one_row() {
        let f = q();
        let m = SparseMatrix::from_dense(f, &[vec![f.zero(), f.zero(), s(f, "1-q"), s(f, "1-q^-1")]]).unwrap();
        let (r, ns) = m.rank_nullspace();
        assert_eq!(r, 1);
        assert_eq!(ns.len(), 3);
        for v in &ns {
            assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn homology_trivial_cases() {
        let f = Field::Rational;
        let z = SparseMatrix::zero(4, 4, f);
        assert_eq!(homology_of_pair(&z, &z).unwrap().dimension, 4);
        let id = SparseMatrix::identity(4, f);
        assert_eq!(homology_of_pair(&id, &z).unwrap().dimension, 0);
    }

    #[test]
    fn not_a_complex_is_reported() {
        let f = Field::Rational;
        let id = SparseMatrix::identity(2, f);
        assert!(matches!(homology_of_pair(&id, &id), Err(Error::NotAComplex { column: 0 })));
    }

    #[test]
    fn representative_is_normalized() {
        let f = Field::Rational;
        // outgoing = [1 1], incoming = 0: kernel spanned by (1,-1).
        let out = SparseMatrix::from_dense(f, &[vec![f.one(), f.one()]]).unwrap();
        let inc = SparseMatrix::zero(2, 0, f);
        let h = homology_of_pair(&inc, &out).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.representatives[0].entries()[0], (0, f.one()));
        assert_eq!(h.representatives[0].entries()[1], (1, f.from_i64(-1)));
    }
}
