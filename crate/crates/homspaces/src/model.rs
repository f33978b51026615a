//! A vector space presented by a spanning set and relation vectors.

use std::collections::HashMap;
use std::hash::Hash;

use diagrams::LinComb;
use ratlin::{QuotientSpace, SparseVec};
use serde_json::{json, Value};

use crate::HomError;

/// `K⟨spanning⟩ / span(relations)` with normal forms in the coordinates of
/// the non-pivot spanning elements.
#[derive(Clone, Debug)]
pub struct HomSpaceModel<K: Ord + Clone + Hash> {
    label: String,
    spanning: Vec<K>,
    index: HashMap<K, usize>,
    relation_count: usize,
    quotient: QuotientSpace,
}

impl<K: Ord + Clone + Hash> HomSpaceModel<K> {
    /// Builds the model from relation vectors given on spanning indices.
    pub fn new(label: impl Into<String>, spanning: Vec<K>, relations: &[SparseVec]) -> Result<Self, HomError> {
        let index: HashMap<K, usize> = spanning.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        if index.len() != spanning.len() {
            return Err(HomError::Invalid("spanning set has repeated elements".into()));
        }
        let quotient = QuotientSpace::from_relations(spanning.len(), relations)?;
        Ok(HomSpaceModel { label: label.into(), spanning, index, relation_count: relations.len(), quotient })
    }

    /// Builds the model from relations written as combinations of keys.
    pub fn from_lincombs(label: impl Into<String>, spanning: Vec<K>, relations: &[LinComb<K>]) -> Result<Self, HomError> {
        let index: HashMap<K, usize> = spanning.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let rels = relations
            .iter()
            .map(|r| r.to_sparse(|k| index.get(k).copied()).ok_or_else(|| HomError::Invalid("relation outside the spanning set".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(label, spanning, &rels)
    }

    /// The free space on `spanning`.
    pub fn free(label: impl Into<String>, spanning: Vec<K>) -> Result<Self, HomError> {
        Self::new(label, spanning, &[])
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn spanning(&self) -> &[K] {
        &self.spanning
    }

    pub fn relation_count(&self) -> usize {
        self.relation_count
    }

    pub fn relation_rank(&self) -> usize {
        self.quotient.relation_rank()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Spanning elements chosen as the quotient basis.
    pub fn basis(&self) -> Vec<&K> {
        self.quotient.basis_cols().iter().map(|&c| &self.spanning[c]).collect()
    }

    /// Writes `v` in spanning coordinates.
    pub fn ambient(&self, v: &LinComb<K>) -> Result<SparseVec, HomError> {
        v.to_sparse(|k| self.index_of(k)).ok_or_else(|| HomError::Invalid(format!("element outside the spanning set of {}", self.label)))
    }

    /// Quotient coordinates of `v`.
    pub fn nf(&self, v: &LinComb<K>) -> Result<SparseVec, HomError> {
        Ok(self.quotient.nf(&self.ambient(v)?))
    }

    /// Quotient coordinates of a spanning element.
    pub fn nf_index(&self, i: usize) -> SparseVec {
        self.quotient.nf_col(i)
    }

    /// The combination of basis representatives with the given coordinates.
    pub fn lift(&self, coords: &SparseVec) -> LinComb<K> {
        self.quotient.lift(coords).iter().map(|(c, a)| (self.spanning[c].clone(), a.clone())).collect()
    }

    /// A JSON summary: label, spanning elements, relation count, dimension
    /// and the spanning indices of the basis.
    pub fn summary(&self, ser: impl Fn(&K) -> Value) -> Value {
        json!({
            "label": self.label,
            "spanning": self.spanning.iter().map(ser).collect::<Vec<_>>(),
            "relation_count": self.relation_count,
            "dim": self.dim(),
            "basis_pivots": self.quotient.basis_cols(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ratlin::Q;

    #[test]
    fn quotient_by_one_relation() {
        let rel: LinComb<&str> = [("a", Q::one()), ("b", -Q::one())].into_iter().collect();
        let m = HomSpaceModel::from_lincombs("t", vec!["a", "b", "c"], &[rel]).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.nf(&LinComb::single("a")).unwrap(), m.nf(&LinComb::single("b")).unwrap());
        for (i, k) in m.spanning().iter().enumerate() {
            let back = m.nf(&m.lift(&m.nf_index(i))).unwrap();
            assert_eq!(back, m.nf(&LinComb::single(*k)).unwrap());
        }
        assert!(HomSpaceModel::free("dup", vec![1, 1]).is_err());
    }
}
