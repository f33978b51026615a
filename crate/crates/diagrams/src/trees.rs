//! Rooted binary trees with labeled leaves, modelling multilinear Lie words.

use std::collections::BTreeMap;
use std::fmt;

use ratlin::Q;

use crate::lincomb::LinComb;

/// A planar rooted binary tree; `Node(a, b)` is the bracket `[a, b]`.
/// Leaves carry 0-based labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RootedTree {
    Leaf(usize),
    Node(Box<RootedTree>, Box<RootedTree>),
}

/// A linear combination of trees.
pub type TreeVector = LinComb<RootedTree>;

impl RootedTree {
    pub fn leaf(l: usize) -> Self {
        RootedTree::Leaf(l)
    }

    pub fn bracket(a: RootedTree, b: RootedTree) -> Self {
        RootedTree::Node(Box::new(a), Box::new(b))
    }

    /// The left-normed bracket `[[…[x₀, x₁], …], x_k]`.
    pub fn left_normed(labels: &[usize]) -> Self {
        let mut t = RootedTree::Leaf(labels[0]);
        for &l in &labels[1..] {
            t = RootedTree::bracket(t, RootedTree::Leaf(l));
        }
        t
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            RootedTree::Leaf(l) => out.push(*l),
            RootedTree::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn n_leaves(&self) -> usize {
        match self {
            RootedTree::Leaf(_) => 1,
            RootedTree::Node(a, b) => a.n_leaves() + b.n_leaves(),
        }
    }

    pub fn min_leaf(&self) -> usize {
        match self {
            RootedTree::Leaf(l) => *l,
            RootedTree::Node(a, b) => a.min_leaf().min(b.min_leaf()),
        }
    }

    /// Relabels every leaf through `f`.
    pub fn relabel(&self, f: &dyn Fn(usize) -> usize) -> RootedTree {
        match self {
            RootedTree::Leaf(l) => RootedTree::Leaf(f(*l)),
            RootedTree::Node(a, b) => RootedTree::bracket(a.relabel(f), b.relabel(f)),
        }
    }

    /// Replaces leaf `l` by `subs[l]`.
    pub fn substitute(&self, subs: &[RootedTree]) -> RootedTree {
        match self {
            RootedTree::Leaf(l) => subs[*l].clone(),
            RootedTree::Node(a, b) => RootedTree::bracket(a.substitute(subs), b.substitute(subs)),
        }
    }

    /// Expansion in the free associative algebra: `[a,b] ↦ ab − ba`.
    pub fn expand(&self) -> BTreeMap<Vec<usize>, i64> {
        match self {
            RootedTree::Leaf(l) => [(vec![*l], 1)].into_iter().collect(),
            RootedTree::Node(a, b) => {
                let (ea, eb) = (a.expand(), b.expand());
                let mut out = BTreeMap::new();
                for (wa, ca) in &ea {
                    for (wb, cb) in &eb {
                        let mut w = wa.clone();
                        w.extend(wb);
                        *out.entry(w).or_insert(0) += ca * cb;
                        let mut w = wb.clone();
                        w.extend(wa);
                        *out.entry(w).or_insert(0) -= ca * cb;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }

    /// The part of the expansion made of words starting with leaf `m`.
    pub fn expand_from(&self, m: usize) -> BTreeMap<Vec<usize>, i64> {
        match self {
            RootedTree::Leaf(l) => {
                if *l == m {
                    [(vec![m], 1)].into_iter().collect()
                } else {
                    BTreeMap::new()
                }
            }
            RootedTree::Node(a, b) => {
                let (first, second, sign) =
                    if a.leaves().contains(&m) { (a.expand_from(m), b.expand(), 1) } else { (b.expand_from(m), a.expand(), -1) };
                let mut out = BTreeMap::new();
                for (w1, c1) in &first {
                    for (w2, c2) in &second {
                        let mut w = w1.clone();
                        w.extend(w2);
                        *out.entry(w).or_insert(0) += sign * c1 * c2;
                    }
                }
                out.retain(|_, c| *c != 0);
                out
            }
        }
    }

    /// Coordinates in the left-normed basis `[[x_min, x_{w₁}], …]`, keyed by
    /// the label sequence following the minimal leaf.
    pub fn lie_coords(&self) -> BTreeMap<Vec<usize>, i64> {
        let m = self.min_leaf();
        self.expand_from(m).into_iter().map(|(w, c)| (w[1..].to_vec(), c)).collect()
    }

    /// Swaps the children at the node reached by `path` (false = left).
    fn swap_at(&self, path: &[bool]) -> RootedTree {
        match (self, path.split_first()) {
            (RootedTree::Node(a, b), None) => RootedTree::Node(b.clone(), a.clone()),
            (RootedTree::Node(a, b), Some((&false, rest))) => RootedTree::Node(Box::new(a.swap_at(rest)), b.clone()),
            (RootedTree::Node(a, b), Some((&true, rest))) => RootedTree::Node(a.clone(), Box::new(b.swap_at(rest))),
            (RootedTree::Leaf(_), _) => unreachable!("paths end at internal nodes"),
        }
    }

    fn replace_at(&self, path: &[bool], with: RootedTree) -> RootedTree {
        match (self, path.split_first()) {
            (_, None) => with,
            (RootedTree::Node(a, b), Some((&false, rest))) => RootedTree::Node(Box::new(a.replace_at(rest, with)), b.clone()),
            (RootedTree::Node(a, b), Some((&true, rest))) => RootedTree::Node(a.clone(), Box::new(b.replace_at(rest, with))),
            (RootedTree::Leaf(_), Some(_)) => unreachable!("paths end at internal nodes"),
        }
    }

    fn internal_paths(&self, prefix: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if let RootedTree::Node(a, b) = self {
            out.push(prefix.clone());
            prefix.push(false);
            a.internal_paths(prefix, out);
            prefix.pop();
            prefix.push(true);
            b.internal_paths(prefix, out);
            prefix.pop();
        }
    }

    fn subtree(&self, path: &[bool]) -> &RootedTree {
        match (self, path.split_first()) {
            (_, None) => self,
            (RootedTree::Node(a, _), Some((&false, rest))) => a.subtree(rest),
            (RootedTree::Node(_, b), Some((&true, rest))) => b.subtree(rest),
            (RootedTree::Leaf(_), Some(_)) => unreachable!(),
        }
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootedTree::Leaf(l) => write!(f, "x{}", l + 1),
            RootedTree::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// All planar binary trees whose leaves are the labels `leaves` in any order.
pub fn all_trees(leaves: &[usize]) -> Vec<RootedTree> {
    if leaves.len() == 1 {
        return vec![RootedTree::Leaf(leaves[0])];
    }
    let k = leaves.len();
    let mut out = Vec::new();
    // Split into nonempty left/right label sets; both orders are produced.
    for mask in 1u32..((1u32 << k) - 1) {
        let left: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| leaves[i]).collect();
        let right: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).map(|i| leaves[i]).collect();
        let rs = all_trees(&right);
        for a in all_trees(&left) {
            for b in &rs {
                out.push(RootedTree::bracket(a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Antisymmetry and IHX relators among trees on the given labels.
pub fn as_ihx_relators(leaves: &[usize]) -> Vec<TreeVector> {
    let mut out = Vec::new();
    for t in all_trees(leaves) {
        let mut paths = Vec::new();
        t.internal_paths(&mut Vec::new(), &mut paths);
        for p in &paths {
            let mut v = TreeVector::single(t.clone());
            v.add_term(t.swap_at(p), &Q::one());
            out.push(v);
            // Jacobi identity at a node of the form [[A,B],C].
            if let RootedTree::Node(l, c) = t.subtree(p) {
                if let RootedTree::Node(a, b) = l.as_ref() {
                    let (a, b, c) = ((**a).clone(), (**b).clone(), (**c).clone());
                    let t1 = t.clone();
                    let t2 = t.replace_at(p, RootedTree::bracket(RootedTree::bracket(b.clone(), c.clone()), a.clone()));
                    let t3 = t.replace_at(p, RootedTree::bracket(RootedTree::bracket(c, a), b));
                    out.push([t1, t2, t3].into_iter().map(|x| (x, Q::one())).collect());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_expansion() {
        let t = RootedTree::bracket(RootedTree::leaf(0), RootedTree::leaf(1));
        let e = t.expand();
        assert_eq!(e[&vec![0, 1]], 1);
        assert_eq!(e[&vec![1, 0]], -1);
    }

    #[test]
    fn coordinates_of_left_normed_words_are_unit_vectors() {
        let t = RootedTree::left_normed(&[0, 2, 1]);
        let c = t.lie_coords();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&vec![2, 1]], 1);
    }

    #[test]
    fn coordinates_respect_jacobi() {
        let (a, b, c) = (RootedTree::leaf(0), RootedTree::leaf(1), RootedTree::leaf(2));
        let t1 = RootedTree::bracket(RootedTree::bracket(a.clone(), b.clone()), c.clone());
        let t2 = RootedTree::bracket(RootedTree::bracket(b.clone(), c.clone()), a.clone());
        let t3 = RootedTree::bracket(RootedTree::bracket(c, a), b);
        let mut total: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for t in [t1, t2, t3] {
            for (w, x) in t.lie_coords() {
                *total.entry(w).or_default() += x;
            }
        }
        assert!(total.values().all(|x| *x == 0));
    }

    #[test]
    fn tree_counts() {
        // (2k−2)!/(k−1)! planar binary trees with k labeled leaves.
        assert_eq!(all_trees(&[0]).len(), 1);
        assert_eq!(all_trees(&[0, 1]).len(), 2);
        assert_eq!(all_trees(&[0, 1, 2]).len(), 12);
        assert_eq!(all_trees(&[0, 1, 2, 3]).len(), 120);
    }
}
