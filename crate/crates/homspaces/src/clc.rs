//! `catLieC(0,n)_d`: forests of Lie trees on `2d` leaves paired by `d`
//! Casimir elements, modulo symmetry of the pairing and ad-invariance.

use diagrams::{perfect_matchings, RootedTree};
use ratlin::SparseVec;
use symgrp::Perm;

use crate::model::HomSpaceModel;
use crate::prop::{compose_forests, forest_coords, key_forest, lie_basis, WordKey};
use crate::HomError;

/// The model of `catLieC(0,n)_d`. Spanning elements are the basis words of
/// `catLie(2d,n)` precomposed with `c^{⊗d}`, which joins leaves `2k, 2k+1`.
#[derive(Clone, Debug)]
pub struct Clc0 {
    pub d: usize,
    pub n: usize,
    pub model: HomSpaceModel<WordKey>,
}

impl Clc0 {
    pub fn dim(&self) -> usize {
        self.model.dim()
    }

    /// Quotient coordinates of a forest of `n` trees on the leaves `0..2d`.
    pub fn nf_forest(&self, forest: &[RootedTree]) -> Result<SparseVec, HomError> {
        if forest.len() != self.n {
            return Err(HomError::Invalid(format!("{} trees for clc0({},{})", forest.len(), self.n, self.d)));
        }
        self.model.nf(&forest_coords(forest))
    }

    /// Representative forests of the quotient basis.
    pub fn basis_forests(&self) -> Vec<Vec<RootedTree>> {
        self.model.basis().into_iter().map(key_forest).collect()
    }
}

/// All perfect matchings of `0..2d`, smallest point paired first.
pub fn matchings(d: usize) -> Vec<Vec<(usize, usize)>> {
    let pts: Vec<usize> = (0..2 * d).collect();
    perfect_matchings(&pts)
}

/// Generators of the stabilizer `S₂ ≀ S_d` of the standard matching.
pub fn wreath_generators(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    if d >= 1 {
        out.push(Perm::transposition(2 * d, 0, 1));
    }
    for k in 0..d.saturating_sub(1) {
        let mut img: Vec<usize> = (0..2 * d).collect();
        img.swap(2 * k, 2 * k + 2);
        img.swap(2 * k + 1, 2 * k + 3);
        out.push(Perm::from_images(img).expect("a permutation"));
    }
    out
}

/// The two forests `([x, a], b, rest)` and `(a, [x, b], rest)` on the
/// leaves `0..2d`, where `(a, b) = (0, 1)` is the first Casimir pair.
fn invariance_pair(d: usize, x: usize) -> (Vec<RootedTree>, Vec<RootedTree>) {
    let rest: Vec<RootedTree> = (2..2 * d).filter(|&l| l != x).map(RootedTree::leaf).collect();
    let xa = RootedTree::bracket(RootedTree::leaf(x), RootedTree::leaf(0));
    let xb = RootedTree::bracket(RootedTree::leaf(x), RootedTree::leaf(1));
    let y1 = [vec![xa, RootedTree::leaf(1)], rest.clone()].concat();
    let y2 = [vec![RootedTree::leaf(0), xb], rest].concat();
    (y1, y2)
}

/// Builds `catLieC(0,n)_d`.
pub fn clc0(n: usize, d: usize) -> Result<Clc0, HomError> {
    let spanning = lie_basis(2 * d, n);
    let mut rels = Vec::new();
    for key in &spanning {
        let f = key_forest(key);
        for rho in wreath_generators(d) {
            let moved: Vec<RootedTree> = f.iter().map(|t| t.relabel(&|l| rho.image(l))).collect();
            rels.push(forest_coords(&moved).minus(&forest_coords(&f)));
        }
    }
    if d >= 2 {
        for x in 2..2 * d {
            let (y1, y2) = invariance_pair(d, x);
            for g in lie_basis(2 * d - 1, n) {
                let g = key_forest(&g);
                rels.push(forest_coords(&compose_forests(&g, &y1)).plus(&forest_coords(&compose_forests(&g, &y2))));
            }
        }
    }
    let model = HomSpaceModel::from_lincombs(format!("clc0(n={n},d={d})"), spanning, &rels)?;
    Ok(Clc0 { d, n, model })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_values() {
        for d in 0..=3 {
            assert_eq!(clc0(1, d).unwrap().dim(), 0, "d={d}");
        }
        assert_eq!(clc0(0, 0).unwrap().dim(), 1);
        let c = clc0(2, 1).unwrap();
        assert_eq!(c.dim(), 1);
        let swapped = vec![RootedTree::leaf(1), RootedTree::leaf(0)];
        let straight = vec![RootedTree::leaf(0), RootedTree::leaf(1)];
        assert_eq!(c.nf_forest(&swapped).unwrap(), c.nf_forest(&straight).unwrap());
    }

    #[test]
    fn matchings_are_counted_by_double_factorials() {
        assert_eq!(matchings(3).len(), 15);
        assert_eq!(wreath_generators(3).len(), 3);
    }
}
