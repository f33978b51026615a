//! Integer partitions.

use std::fmt;
use std::str::FromStr;

use crate::SymError;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::BadPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// Boxes `(row, col)`, 0-based, row-major.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j))).collect()
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0.iter().skip(i + 1).filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Multiplicities `m_k` of each part size `k` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = t.split(',').map(|x| x.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| SymError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_conjugates() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let l: Partition = "(3,1)".parse().unwrap();
        assert_eq!(l.conjugate().to_string(), "(2,1,1)");
        assert_eq!(l.hook(0, 0), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
