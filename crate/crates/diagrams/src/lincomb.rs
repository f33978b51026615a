//! Formal rational linear combinations of diagrams.

use std::collections::BTreeMap;

use ratlin::{SparseVec, Q};

/// A finite linear combination `Σ c_k · k` with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K) -> Self {
        Self::term(Q::one(), k)
    }

    pub fn term(c: Q, k: K) -> Self {
        let mut out = Self::new();
        out.add_term(k, &c);
        out
    }

    pub fn add_term(&mut self, k: K, c: &Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(c * v));
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&Q::one(), other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), other);
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::new();
        out.add_scaled(c, self);
        out
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Coordinates with respect to an indexing of the keys; `None` if some
    /// key has no index.
    pub fn to_sparse<F: Fn(&K) -> Option<usize>>(&self, index: F) -> Option<SparseVec> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            pairs.push((index(k)?, c.clone()));
        }
        Some(SparseVec::from_pairs(pairs))
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, F: FnMut(&K) -> LinComb<L>>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Applies a fallible linear map given on basis elements.
    pub fn try_map_linear<L: Ord + Clone, E, F: FnMut(&K) -> Result<LinComb<L>, E>>(
        &self,
        mut f: F,
    ) -> Result<LinComb<L>, E> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k)?);
        }
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}
