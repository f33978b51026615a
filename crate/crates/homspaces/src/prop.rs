//! The PROPs catAss and catLie: bases, composition of forests and
//! independent dimension counts.

use std::collections::BTreeMap;

use diagrams::{all_trees, as_ihx_relators, LinComb, RootedTree};
use ratlin::Q;
use symgrp::Perm;

use crate::model::HomSpaceModel;
use crate::HomError;

/// A basis word of `catAss(m,n)` or `catLie(m,n)`: for each output, the
/// ordered list of inputs feeding it. In catLie each list is a left-normed
/// bracket with its minimal input first.
pub type WordKey = Vec<Vec<usize>>;

/// Alias kept for the Lie case.
pub type LieKey = WordKey;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropCat {
    CatAss,
    CatLie,
}

/// All functions `[m] → [n]`, as image vectors in lexicographic order.
pub fn functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0; m];
    loop {
        out.push(cur.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < n {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// All surjections `[m] → [n]`.
pub fn surjections(m: usize, n: usize) -> Vec<Vec<usize>> {
    functions(m, n)
        .into_iter()
        .filter(|f| {
            let mut hit = vec![false; n];
            f.iter().for_each(|&j| hit[j] = true);
            hit.iter().all(|&h| h)
        })
        .collect()
}

fn fibers(f: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (i, &j) in f.iter().enumerate() {
        out[j].push(i);
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    Perm::all(items.len()).iter().map(|p| (0..items.len()).map(|i| items[p.image(i)]).collect()).collect()
}

fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out.iter().flat_map(|pre| c.iter().map(move |x| [pre.clone(), vec![x.clone()]].concat())).collect();
    }
    out
}

/// The left-normed basis of `catLie(m,n)`, sorted.
pub fn lie_basis(m: usize, n: usize) -> Vec<WordKey> {
    let mut out = Vec::new();
    for f in surjections(m, n) {
        let choices: Vec<Vec<Vec<usize>>> = fibers(&f, n)
            .iter()
            .map(|fib| permutations(&fib[1..]).into_iter().map(|rest| [vec![fib[0]], rest].concat()).collect())
            .collect();
        out.extend(product(&choices));
    }
    out.sort();
    out
}

/// The basis `μ^{[p]}P_σ` of `catAss(m,n)`, written as ordered fibers.
pub fn ass_basis(m: usize, n: usize) -> Vec<WordKey> {
    let mut out = Vec::new();
    for f in functions(m, n) {
        let choices: Vec<Vec<Vec<usize>>> = fibers(&f, n).iter().map(|fib| permutations(fib)).collect();
        out.extend(product(&choices));
    }
    out.sort();
    out
}

/// The model of `catAss(m,n)` or `catLie(m,n)`, free on its basis words.
pub fn prop_hom(cat: PropCat, m: usize, n: usize) -> Result<HomSpaceModel<WordKey>, HomError> {
    match cat {
        PropCat::CatAss => HomSpaceModel::free(format!("catAss({m},{n})"), ass_basis(m, n)),
        PropCat::CatLie => HomSpaceModel::free(format!("catLie({m},{n})"), lie_basis(m, n)),
    }
}

/// The forest of left-normed brackets named by a basis word.
pub fn key_forest(key: &WordKey) -> Vec<RootedTree> {
    key.iter().map(|w| RootedTree::left_normed(w)).collect()
}

/// Coordinates of a forest of Lie trees in the left-normed basis.
pub fn forest_coords(forest: &[RootedTree]) -> LinComb<WordKey> {
    let mut acc: Vec<(WordKey, i64)> = vec![(Vec::new(), 1)];
    for t in forest {
        let m = t.min_leaf();
        let coords = t.lie_coords();
        let mut next = Vec::with_capacity(acc.len() * coords.len());
        for (k, c) in &acc {
            for (suffix, e) in &coords {
                let mut k = k.clone();
                k.push([vec![m], suffix.clone()].concat());
                next.push((k, c * e));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(k, c)| (k, Q::from_int(c))).collect()
}

/// `g ∘ f`: the inputs of `g` are the outputs of `f`.
pub fn compose_forests(g: &[RootedTree], f: &[RootedTree]) -> Vec<RootedTree> {
    g.iter().map(|t| t.substitute(f)).collect()
}

/// `P_σ` as a forest of single leaves: input `i` goes to output `σ(i)`.
pub fn perm_forest(sigma: &Perm) -> Vec<RootedTree> {
    let mut out = vec![RootedTree::leaf(0); sigma.degree()];
    for i in 0..sigma.degree() {
        out[sigma.image(i)] = RootedTree::leaf(i);
    }
    out
}

/// `id^{⊗p} ⊗ [,] ⊗ id^{⊗(m−p−2)}` in `catLie(m, m−1)`.
pub fn bracket_forest(m: usize, p: usize) -> Vec<RootedTree> {
    (0..m - 1)
        .map(|j| match j.cmp(&p) {
            std::cmp::Ordering::Less => RootedTree::leaf(j),
            std::cmp::Ordering::Equal => RootedTree::bracket(RootedTree::leaf(p), RootedTree::leaf(p + 1)),
            std::cmp::Ordering::Greater => RootedTree::leaf(j + 1),
        })
        .collect()
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// `Σ_{f:[m]→[n]} ∏ |f⁻¹(i)|!`.
pub fn catass_operad_sum(m: usize, n: usize) -> usize {
    functions(m, n).iter().map(|f| fibers(f, n).iter().map(|x| factorial(x.len())).product::<usize>()).sum()
}

/// `Σ_{f surjective} ∏ (|f⁻¹(i)| − 1)!`.
pub fn catlie_surjection_sum(m: usize, n: usize) -> usize {
    surjections(m, n).iter().map(|f| fibers(f, n).iter().map(|x| factorial(x.len() - 1)).product::<usize>()).sum()
}

/// `dim catLie(m,n)` as the rank of tuples of planar trees modulo AS and
/// IHX, computed per surjection.
pub fn as_ihx_rank(m: usize, n: usize) -> Result<usize, HomError> {
    let mut total = 0;
    for f in surjections(m, n) {
        let fibs = fibers(&f, n);
        let trees: Vec<Vec<RootedTree>> = fibs.iter().map(|x| all_trees(x)).collect();
        let spanning = product(&trees);
        let index: BTreeMap<&Vec<RootedTree>, usize> = spanning.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut rels = Vec::new();
        for (slot, fib) in fibs.iter().enumerate() {
            for r in as_ihx_relators(fib) {
                let mut others = trees.clone();
                others[slot] = vec![RootedTree::leaf(usize::MAX)];
                for ctx in product(&others) {
                    let v = ratlin::SparseVec::from_pairs(r.iter().map(|(t, c)| {
                        let mut k = ctx.clone();
                        k[slot] = t.clone();
                        (index[&k], c.clone())
                    }));
                    rels.push(v);
                }
            }
        }
        total += spanning.len() - ratlin::Subspace::span(spanning.len(), &rels)?.dim();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(prop_hom(PropCat::CatAss, 2, 2).unwrap().dim(), 6);
        assert_eq!(prop_hom(PropCat::CatLie, 2, 1).unwrap().dim(), 1);
        assert_eq!(prop_hom(PropCat::CatLie, 2, 3).unwrap().dim(), 0);
        assert_eq!(prop_hom(PropCat::CatLie, 0, 0).unwrap().dim(), 1);
        assert_eq!(prop_hom(PropCat::CatAss, 0, 2).unwrap().dim(), 1);
    }

    #[test]
    fn bracket_is_antisymmetric_in_coordinates() {
        let t = RootedTree::bracket(RootedTree::leaf(1), RootedTree::leaf(0));
        let c = forest_coords(&[t]);
        assert_eq!(c.coeff(&vec![vec![0, 1]]), -Q::one());
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn forest_composition_with_permutations() {
        let s = Perm::from_images(vec![1, 2, 0]).unwrap();
        let f = perm_forest(&s);
        let g = perm_forest(&s.inverse());
        let id = compose_forests(&g, &f);
        assert_eq!(id, perm_forest(&Perm::identity(3)));
        let b = bracket_forest(3, 1);
        assert_eq!(b[1].to_string(), "[x2,x3]");
    }
}
