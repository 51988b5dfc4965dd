use std::collections::BTreeMap;

use smallvec::SmallVec;

use crate::field::Scalar;

/// A normal-form basis word: a string of letter ids whose meaning is fixed by
/// the owning instance. The empty word is always the unit.
pub type Word = SmallVec<[u16; 6]>;

/// An ordered tuple of words, one per tensor factor. Level 0 is the empty tuple.
pub type TensorWord = SmallVec<[Word; 4]>;

/// Finite linear combination with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

pub type Element = LinComb<Word>;
pub type Tensor = LinComb<TensorWord>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut out = LinComb::zero();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn get(&self, k: &K) -> Option<&Scalar> {
        self.terms.get(k)
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Scalar)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &LinComb<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LinComb<K> {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn neg(&self) -> LinComb<K> {
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect() }
    }

    /// Linear extension of `f` from basis keys.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2>, E>,
    ) -> Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }

    pub fn retain(&mut self, mut f: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| f(k));
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Level-0 tensor carrying a scalar.
pub fn scalar_tensor(c: Scalar) -> Tensor {
    Tensor::single(TensorWord::new(), c)
}

pub fn word(letters: &[u16]) -> Word {
    Word::from_slice(letters)
}

pub fn tensor_word(words: &[Word]) -> TensorWord {
    words.iter().cloned().collect()
}
