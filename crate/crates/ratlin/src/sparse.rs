//! Sparse vectors, matrices and linear maps over `Q`.

use std::collections::BTreeMap;

use crate::q::Q;
use crate::LinError;

/// A sparse vector: entries sorted by index, all nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// The unit vector `e_i`.
    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Q::one())] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut m: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let e = m.entry(i).or_insert_with(Q::zero);
            *e += &v;
        }
        SparseVec { entries: m.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// Builds from pairs already sorted by strictly increasing index and nonzero.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Q)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Q]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        SparseVec::from_dense(&v.iter().map(|&x| Q::from_int(x)).collect::<Vec<_>>())
    }

    pub fn to_dense(&self, len: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Q)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest index + 1, or 0 for the zero vector.
    pub fn support_bound(&self) -> usize {
        self.entries.last().map(|(i, _)| i + 1).unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(usize, &Q)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn scale(&self, a: &Q) -> SparseVec {
        if a.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * a)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// Returns `self + a * other`.
    pub fn add_scaled(&self, a: &Q, other: &SparseVec) -> SparseVec {
        if a.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (x, y) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(x[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((y[j].0, a * &y[j].1));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &x[i].1 + &(a * &y[j].1);
                    if !s.is_zero() {
                        out.push((x[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend(y[j..].iter().map(|(k, v)| (*k, a * v)));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Q::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Q::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Q {
        let (x, y) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = Q::zero();
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(&x[i].1 * &y[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Reindexes entries through `f`; entries mapped to `None` are dropped.
    pub fn remap<F: Fn(usize) -> Option<usize>>(&self, f: F) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, v)| f(*i).map(|j| (j, v.clone()))))
    }

    /// Scales so the leading coefficient is one.
    pub fn normalized(&self) -> SparseVec {
        match self.leading() {
            None => self.clone(),
            Some((_, l)) => self.scale(&l.recip()),
        }
    }
}

/// Accumulates a linear combination keyed by index.
#[derive(Clone, Debug, Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Q>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, v: &Q) {
        if v.is_zero() {
            return;
        }
        let e = self.map.entry(i).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.map.remove(&i);
        }
    }

    pub fn add_vec(&mut self, a: &Q, v: &SparseVec) {
        for (i, x) in v.iter() {
            self.add(i, &(a * x));
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec::from_sorted_unchecked(self.map.into_iter().collect())
    }
}

/// A sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    /// Builds from row vectors; every row must fit within `cols`.
    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Result<Self, LinError> {
        for r in &rows {
            if r.support_bound() > cols {
                return Err(LinError::DimensionMismatch { expected: cols, found: r.support_bound() });
            }
        }
        Ok(RatMatrix { rows: rows.len(), cols, data: rows })
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        RatMatrix { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        RatMatrix { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_ints(r)).collect() }
    }

    /// Builds from `(row, col, value)` triples, summing duplicates.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(usize, usize, Q)]) -> Result<Self, LinError> {
        let mut acc: Vec<Vec<(usize, Q)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            if *r >= rows || *c >= cols {
                return Err(LinError::IndexOutOfRange);
            }
            acc[*r].push((*c, v.clone()));
        }
        Ok(RatMatrix { rows, cols, data: acc.into_iter().map(SparseVec::from_pairs).collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn entries(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                out.push((r, c, v.clone()));
            }
        }
        out
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r].get(c)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut cols: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                cols[c].push((r, v.clone()));
            }
        }
        RatMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Accumulator::new();
                for (k, a) in row.iter() {
                    acc.add_vec(a, &other.data[k]);
                }
                acc.finish()
            })
            .collect();
        Ok(RatMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Matrix-vector product `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let x = row.dot(v);
                    (!x.is_zero()).then_some((r, x))
                })
                .collect(),
        )
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, LinError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinError::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn scale(&self, a: &Q) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|r| r.scale(a)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self.data[i].get(i);
        }
        t
    }
}

/// A linear map stored by the images of basis vectors (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub src_dim: usize,
    pub dst_dim: usize,
    pub images: Vec<SparseVec>,
}

impl LinearMap {
    pub fn new(src_dim: usize, dst_dim: usize, images: Vec<SparseVec>) -> Self {
        debug_assert_eq!(images.len(), src_dim);
        LinearMap { src_dim, dst_dim, images }
    }

    pub fn zero(src_dim: usize, dst_dim: usize) -> Self {
        LinearMap { src_dim, dst_dim, images: vec![SparseVec::new(); src_dim] }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { src_dim: n, dst_dim: n, images: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        match v.nnz() {
            0 => SparseVec::new(),
            1 => {
                let (i, a) = v.leading().unwrap();
                self.images[i].scale(a)
            }
            _ => {
                let mut acc = Accumulator::new();
                for (i, a) in v.iter() {
                    acc.add_vec(a, &self.images[i]);
                }
                acc.finish()
            }
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &LinearMap) -> LinearMap {
        LinearMap {
            src_dim: first.src_dim,
            dst_dim: self.dst_dim,
            images: first.images.iter().map(|v| self.apply(v)).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            src_dim: self.src_dim,
            dst_dim: self.dst_dim,
            images: self.images.iter().zip(&other.images).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, a: &Q) -> LinearMap {
        LinearMap { src_dim: self.src_dim, dst_dim: self.dst_dim, images: self.images.iter().map(|v| v.scale(a)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| v.is_zero())
    }

    pub fn trace(&self) -> Q {
        let mut t = Q::zero();
        for (i, v) in self.images.iter().enumerate() {
            t += &v.get(i);
        }
        t
    }

    /// The matrix acting on column vectors.
    pub fn to_matrix(&self) -> RatMatrix {
        RatMatrix { rows: self.src_dim, cols: self.dst_dim, data: self.images.clone() }.transpose()
    }

    pub fn from_matrix(m: &RatMatrix) -> LinearMap {
        let t = m.transpose();
        LinearMap { src_dim: m.cols(), dst_dim: m.rows(), images: t.data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVec::from_ints(&[1, 2, 0, 3]);
        let b = SparseVec::from_ints(&[1, 0, 5, 3]);
        let c = a.add_scaled(&-Q::one(), &b);
        assert_eq!(c, SparseVec::from_ints(&[0, 2, -5, 0]));
        assert_eq!(a.dot(&b), Q::from_int(10));
    }

    #[test]
    fn matrix_round_trips() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 0], vec![0, 0, 3]]);
        assert_eq!(m.transpose().transpose(), m);
        let lm = LinearMap::from_matrix(&m);
        assert_eq!(lm.to_matrix(), m);
        let v = SparseVec::from_ints(&[1, 1, 1]);
        assert_eq!(lm.apply(&v), m.mul_vec(&v));
        let e = m.entries();
        assert_eq!(RatMatrix::from_entries(2, 3, &e).unwrap(), m);
    }
}
