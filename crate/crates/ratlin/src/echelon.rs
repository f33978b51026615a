//! Incremental row echelon forms, canonical subspaces and presented quotients.

use crate::q::Q;
use crate::sparse::{RatMatrix, SparseVec};
use crate::LinError;

/// Rows in echelon form with unit pivots, built one vector at a time.
///
/// Every stored row has its pivot at its leading column; entries of a row
/// only occur at columns to the right of its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: Vec::new(), pivot_row: vec![None; ambient] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivot_row.get(col).copied().flatten()
    }

    fn check(&self, v: &SparseVec) -> Result<(), LinError> {
        if v.support_bound() > self.ambient {
            return Err(LinError::DimensionMismatch { expected: self.ambient, found: v.support_bound() });
        }
        Ok(())
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut pos = 0;
        while pos < v.nnz() {
            let (c, a) = v.entries()[pos].clone();
            match self.pivot_row[c] {
                Some(r) => v = v.add_scaled(&-a, &self.rows[r]),
                None => pos += 1,
            }
        }
        v
    }

    /// Reduces `v`, also returning the multiples of stored rows that were
    /// subtracted: `v = residual + Σ coef · row[idx]`.
    pub fn reduce_tracked(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, Q)>) {
        let mut v = v.clone();
        let mut used = Vec::new();
        let mut pos = 0;
        while pos < v.nnz() {
            let (c, a) = v.entries()[pos].clone();
            match self.pivot_row[c] {
                Some(r) => {
                    v = v.add_scaled(&-&a, &self.rows[r]);
                    used.push((r, a));
                }
                None => pos += 1,
            }
        }
        (v, used)
    }

    /// Inserts `v` if it is independent of the stored rows. Returns the index
    /// of the new row and the scale applied to the residual to normalize it.
    pub fn insert_reduced(&mut self, residual: SparseVec) -> Option<(usize, Q)> {
        let (p, lead) = residual.leading()?;
        let s = lead.recip();
        let row = residual.scale(&s);
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(row);
        Some((self.rows.len() - 1, s))
    }

    /// Inserts `v`; returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool, LinError> {
        self.check(v)?;
        let r = self.reduce(v);
        Ok(self.insert_reduced(r).is_some())
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Back-substitutes into the canonical reduced row echelon form.
    pub fn into_subspace(self) -> Subspace {
        let ambient = self.ambient;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].leading().unwrap().0);
        let mut done: Vec<Option<SparseVec>> = vec![None; self.rows.len()];
        for &r in order.iter().rev() {
            let row = &self.rows[r];
            let p = row.leading().unwrap().0;
            let mut out = row.clone();
            for (c, _) in row.entries().iter().skip(1) {
                if let Some(r2) = self.pivot_row[*c] {
                    let other = done[r2].as_ref().expect("processed in decreasing pivot order");
                    let coef = out.get(*c);
                    if !coef.is_zero() {
                        out = out.add_scaled(&-coef, other);
                    }
                }
            }
            debug_assert_eq!(out.leading().map(|x| x.0), Some(p));
            done[r] = Some(out);
        }
        let rows: Vec<SparseVec> = order.iter().map(|&r| done[r].take().unwrap()).collect();
        Subspace::from_rref_unchecked(ambient, rows)
    }
}

/// A subspace stored by its canonical reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(SparseVec::unit).collect() }
    }

    pub(crate) fn from_rref_unchecked(ambient: usize, rows: Vec<SparseVec>) -> Self {
        Subspace { ambient, rows }
    }

    /// The span of `vecs` in `K^ambient`.
    pub fn span(ambient: usize, vecs: &[SparseVec]) -> Result<Self, LinError> {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.insert(v)?;
        }
        Ok(e.into_subspace())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().unwrap().0).collect()
    }

    fn pivot_index(&self, col: usize) -> Option<usize> {
        self.rows.binary_search_by_key(&col, |r| r.leading().unwrap().0).ok()
    }

    /// Reduces `v` modulo this subspace (zero exactly when `v` lies in it).
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (c, _) in v.iter() {
            if let Some(r) = self.pivot_index(c) {
                let coef = out.get(c);
                if !coef.is_zero() {
                    out = out.add_scaled(&-coef, &self.rows[r]);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let coords = SparseVec::from_pairs(
            self.rows.iter().enumerate().map(|(i, r)| (i, v.get(r.leading().unwrap().0))),
        );
        let mut recon = SparseVec::new();
        for (i, a) in coords.iter() {
            recon = recon.add_scaled(a, &self.rows[i]);
        }
        (recon == *v).then_some(coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    fn check_same(&self, other: &Subspace) -> Result<(), LinError> {
        if self.ambient != other.ambient {
            return Err(LinError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_same(other)?;
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Intersection by the Zassenhaus stacked-system method.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_same(other)?;
        let n = self.ambient;
        let mut e = Echelon::new(2 * n);
        for a in &self.rows {
            let doubled = SparseVec::from_sorted_unchecked(
                a.iter().map(|(i, v)| (i, v.clone())).chain(a.iter().map(|(i, v)| (i + n, v.clone()))).collect(),
            );
            e.insert(&doubled)?;
        }
        for b in &other.rows {
            e.insert(b)?;
        }
        let inter: Vec<SparseVec> = e
            .rows()
            .iter()
            .filter(|r| r.leading().unwrap().0 >= n)
            .map(|r| r.remap(|i| i.checked_sub(n)))
            .collect();
        Subspace::span(n, &inter)
    }
}

/// Result of `subspace_ops`.
#[derive(Clone, Debug)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub equal: bool,
    /// Whether `a` contains `b`.
    pub contains: bool,
}

/// Sum, intersection, equality and containment of two subspaces.
pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspaceOps, LinError> {
    Ok(SubspaceOps {
        sum: a.sum(b)?,
        intersection: a.intersection(b)?,
        equal: a == b,
        contains: a.contains_subspace(b),
    })
}

/// Row reduction: rank, canonical row space and pivot columns.
pub fn rref(m: &RatMatrix) -> (usize, Subspace, Vec<usize>) {
    let s = Subspace::span(m.cols(), m.row_vecs()).expect("rows fit the column count");
    let p = s.pivots();
    (s.dim(), s, p)
}

/// Dimension of `span(spanning) / (span(spanning) ∩ span(relations))`.
pub fn quotient_dim(ambient: usize, spanning: &[SparseVec], relations: &[SparseVec]) -> Result<usize, LinError> {
    let mut e = Echelon::new(ambient);
    for r in relations {
        e.insert(r)?;
    }
    let base = e.rank();
    for s in spanning {
        e.insert(s)?;
    }
    Ok(e.rank() - base)
}

/// Right null space `{x : m x = 0}`.
pub fn kernel(m: &RatMatrix) -> Subspace {
    let (_, rs, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut pairs = vec![(f, Q::one())];
        for (row, &p) in rs.basis().iter().zip(&pivots) {
            let a = row.get(f);
            if !a.is_zero() {
                pairs.push((p, -a));
            }
        }
        vecs.push(SparseVec::from_pairs(pairs));
    }
    Subspace::span(n, &vecs).expect("kernel vectors fit")
}

/// Splits `K^n = image(e) ⊕ kernel(e)` for an idempotent matrix `e`.
pub fn split_idempotent(e: &RatMatrix) -> Result<(Subspace, Subspace), LinError> {
    if e.rows() != e.cols() {
        return Err(LinError::NotSquare);
    }
    if e.mul(e)? != *e {
        return Err(LinError::NotIdempotent);
    }
    let image = Subspace::span(e.cols(), e.transpose().row_vecs())?;
    Ok((image, kernel(e)))
}

/// A vector space presented as `K^ambient / span(relations)`, with normal
/// forms expressed in the coordinates of the non-pivot columns.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    relations: Subspace,
    basis_cols: Vec<usize>,
    col_pos: Vec<Option<usize>>,
    pivot_row: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let n = relations.ambient_dim();
        let mut pivot_row = vec![None; n];
        for (i, p) in relations.pivots().into_iter().enumerate() {
            pivot_row[p] = Some(i);
        }
        let basis_cols: Vec<usize> = (0..n).filter(|&c| pivot_row[c].is_none()).collect();
        let mut col_pos = vec![None; n];
        for (i, &c) in basis_cols.iter().enumerate() {
            col_pos[c] = Some(i);
        }
        QuotientSpace { relations, basis_cols, col_pos, pivot_row }
    }

    pub fn from_relations(ambient: usize, relations: &[SparseVec]) -> Result<Self, LinError> {
        Ok(Self::new(Subspace::span(ambient, relations)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.basis_cols.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.dim()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient columns representing the quotient basis, in order.
    pub fn basis_cols(&self) -> &[usize] {
        &self.basis_cols
    }

    /// Normal form of the ambient unit vector `e_col`.
    pub fn nf_col(&self, col: usize) -> SparseVec {
        if let Some(i) = self.col_pos[col] {
            return SparseVec::unit(i);
        }
        let row = &self.relations.basis()[self.pivot_row[col].unwrap()];
        SparseVec::from_sorted_unchecked(
            row.iter().skip(1).map(|(c, a)| (self.col_pos[c].expect("rref row has non-pivot tail"), -a)).collect(),
        )
    }

    /// Normal form of an ambient vector.
    pub fn nf(&self, v: &SparseVec) -> SparseVec {
        let mut acc = crate::sparse::Accumulator::new();
        for (c, a) in v.iter() {
            acc.add_vec(a, &self.nf_col(c));
        }
        acc.finish()
    }

    /// Lifts quotient coordinates to the ambient space (on basis columns).
    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        v.remap(|i| Some(self.basis_cols[i]))
    }
}

/// Coordinates on a subquotient `U / V` with `V ⊆ U`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    v: Subspace,
    complement: Subspace,
}

impl Subquotient {
    pub fn new(u: &Subspace, v: &Subspace) -> Result<Self, LinError> {
        if !u.contains_subspace(v) {
            return Err(LinError::NotNested);
        }
        let reduced: Vec<SparseVec> = u.basis().iter().map(|x| v.reduce(x)).collect();
        let complement = Subspace::span(u.ambient_dim(), &reduced)?;
        Ok(Subquotient { v: v.clone(), complement })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    /// Representatives of a basis of `U / V`.
    pub fn basis(&self) -> &[SparseVec] {
        self.complement.basis()
    }

    /// Coordinates of the class of `x ∈ U`.
    pub fn coords(&self, x: &SparseVec) -> Result<SparseVec, LinError> {
        let r = self.v.reduce(x);
        self.complement.coordinates(&r).ok_or(LinError::NotInSubspace)
    }

    /// Trace of a map `U → U` (given on ambient vectors) on `U / V`.
    pub fn trace<F: Fn(&SparseVec) -> SparseVec>(&self, f: F) -> Result<Q, LinError> {
        let mut t = Q::zero();
        for (i, b) in self.complement.basis().iter().enumerate() {
            t += &self.coords(&f(b))?.get(i);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> SparseVec {
        SparseVec::from_ints(x)
    }

    #[test]
    fn rref_examples() {
        let (r, s, p) = rref(&RatMatrix::identity(3));
        assert_eq!((r, p), (3, vec![0, 1, 2]));
        assert_eq!(s, Subspace::full(3));
        let (r, s, _) = rref(&RatMatrix::zeros(2, 4));
        assert_eq!((r, s.dim()), (0, 0));
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(rref(&m).0, 2);
        assert_eq!(rref(&m).1.basis(), &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
    }

    #[test]
    fn quotient_dim_examples() {
        let e = [v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])];
        assert_eq!(quotient_dim(3, &e, &[]).unwrap(), 3);
        assert_eq!(quotient_dim(3, &e, &[v(&[1, -1, 0]), v(&[0, 1, -1])]).unwrap(), 1);
        assert_eq!(quotient_dim(3, &e[..1], &e[..1]).unwrap(), 0);
        assert!(quotient_dim(2, &e, &[]).is_err());
    }

    #[test]
    fn subspace_ops_examples() {
        let a = Subspace::span(2, &[v(&[1, 0])]).unwrap();
        let b = Subspace::span(2, &[v(&[0, 1])]).unwrap();
        let ops = subspace_ops(&a, &b).unwrap();
        assert_eq!(ops.sum, Subspace::full(2));
        assert_eq!(ops.intersection.dim(), 0);
        let ops = subspace_ops(&a, &a).unwrap();
        assert!(ops.equal && ops.contains);
        assert_eq!(ops.sum, a);
        assert_eq!(ops.intersection, a);
        let c = Subspace::span(2, &[v(&[1, 1]), v(&[0, 1])]).unwrap();
        assert_eq!(subspace_ops(&c, &a).unwrap().intersection, a);
    }

    #[test]
    fn split_idempotent_examples() {
        let (im, ker) = split_idempotent(&RatMatrix::identity(3)).unwrap();
        assert_eq!((im.dim(), ker.dim()), (3, 0));
        let (im, ker) = split_idempotent(&RatMatrix::zeros(3, 3)).unwrap();
        assert_eq!((im.dim(), ker.dim()), (0, 3));
        let h = Q::new(1, 2);
        let e = RatMatrix::from_dense(&[vec![h.clone(), h.clone()], vec![h.clone(), h]]);
        let (im, ker) = split_idempotent(&e).unwrap();
        assert_eq!(im, Subspace::span(2, &[v(&[1, 1])]).unwrap());
        assert_eq!(ker, Subspace::span(2, &[v(&[1, -1])]).unwrap());
        let bad = RatMatrix::from_int_rows(&[vec![2]]);
        assert!(matches!(split_idempotent(&bad), Err(LinError::NotIdempotent)));
    }

    #[test]
    fn quotient_space_normal_forms() {
        let q = QuotientSpace::from_relations(3, &[v(&[1, -1, 0]), v(&[0, 1, -1])]).unwrap();
        assert_eq!(q.dim(), 1);
        for c in 0..3 {
            assert_eq!(q.nf_col(c), SparseVec::unit(0));
        }
        assert_eq!(q.nf(&v(&[1, 2, 3])), SparseVec::from_ints(&[6]));
    }

    #[test]
    fn subquotient_trace() {
        let u = Subspace::full(3);
        let w = Subspace::span(3, &[v(&[1, 1, 1])]).unwrap();
        let sq = Subquotient::new(&u, &w).unwrap();
        assert_eq!(sq.dim(), 2);
        // Cyclic shift on K^3 modulo the diagonal has trace -1.
        let shift = |x: &SparseVec| x.remap(|i| Some((i + 1) % 3));
        assert_eq!(sq.trace(shift).unwrap(), Q::from_int(-1));
    }
}
