//! Permutations of `{0, …, n−1}`, printed 1-based in cycle notation.

use std::fmt;

use crate::partition::Partition;
use crate::SymError;

/// A permutation given by its images: `self.image(i) = σ(i)`.
///
/// Products follow function composition: `a.compose(&b)` is `a ∘ b`,
/// applying `b` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(SymError::NotAPermutation(images.clone()));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds from 1-based cycles, e.g. `&[&[1, 3, 2]]` for `(1 3 2)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, SymError> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n || seen[a - 1] {
                    return Err(SymError::BadCycle(cyc.to_vec()));
                }
                seen[a - 1] = true;
                let b = cyc[(k + 1) % cyc.len()];
                img[a - 1] = b - 1;
            }
        }
        Perm::from_images(img)
    }

    /// The transposition of two 0-based points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(i, j);
        Perm(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Disjoint cycles (0-based), each starting at its smallest point,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                cyc.push(x);
                x = self.0[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("cycle lengths are positive")
    }

    pub fn sign(&self) -> i64 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // Next lexicographic permutation.
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// A representative of the conjugacy class with cycle type `mu`, whose
    /// cycles occupy consecutive blocks of points.
    pub fn class_representative(mu: &Partition) -> Perm {
        let n = mu.size();
        let mut img: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &k in mu.parts() {
            for j in 0..k {
                img[start + j] = start + (j + 1) % k;
            }
            start += k;
        }
        Perm(img)
    }

    /// Writes the permutation as a word in adjacent transpositions
    /// `s_i = (i, i+1)` (0-based `i`), so that `σ = s_{w[0]} ∘ s_{w[1]} ∘ …`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble-sort the image list; each swap is a right multiplication.
        let mut cur = self.0.clone();
        let mut word = Vec::new();
        let n = cur.len();
        for _ in 0..n {
            for i in 0..n.saturating_sub(1) {
                if cur[i] > cur[i + 1] {
                    cur.swap(i, i + 1);
                    word.push(i);
                }
            }
        }
        // σ ∘ s_{w0} ∘ … ∘ s_{wk} = id, so σ is the reversed product.
        word.reverse();
        word
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 3]]).unwrap();
        assert_eq!(a.compose(&b).to_string(), "(1 3 2)");
        assert_eq!(a.compose(&a), Perm::identity(3));
    }

    #[test]
    fn adjacent_word_reproduces_permutation() {
        for p in Perm::all(4) {
            let mut acc = Perm::identity(4);
            for &i in &p.adjacent_word() {
                acc = acc.compose(&Perm::transposition(4, i, i + 1));
            }
            assert_eq!(acc, p, "{p}");
        }
    }

    #[test]
    fn all_counts_and_signs() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().map(|p| p.sign()).sum::<i64>(), 0);
        let r = Perm::class_representative(&Partition::new(vec![3, 1]).unwrap());
        assert_eq!(r.cycle_type(), Partition::new(vec![3, 1]).unwrap());
    }
}
