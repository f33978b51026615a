//! The tensor algebra on `C₁` and its quotients by the quadratic relators
//! `r_s` (swapping two Casimir pairs) and `r_c` (ad-invariance of a pair).

use diagrams::{LinComb, RootedTree};
use homspaces::{
    bracket_forest, clc0, coend_induce, compose_forests, forest_coords, jac_space_cached, key_forest, lie_basis, perm_forest,
    CatLieModule, HomError, HomSpaceModel, WordKey,
};
use rayon::prelude::*;
use serde_json::{json, Value};
use symgrp::Perm;

use crate::day::{day_product, identity_forest, module_from_models, tensor_forests};

/// `C₁`: the trivial representation in arity 2, spanned by `c`.
pub fn c1() -> Result<CatLieModule, HomError> {
    CatLieModule::casimir_family(1)
}

/// `C₁^{⊠d}` by iterated Day convolution.
pub fn tensor_power_c1(d: usize) -> Result<CatLieModule, HomError> {
    let c = c1()?;
    let mut out = CatLieModule::unit();
    for _ in 0..d {
        out = day_product(&out, &c)?;
    }
    Ok(out)
}

/// Relations of `C₁^{⊠d}(n)` written on `catLie(2d, n)`, where the Casimir
/// slots join leaves `2k, 2k+1`: each slot is symmetric and killed by a
/// bracket of its two legs.
fn slot_relations(d: usize, n: usize) -> Vec<LinComb<WordKey>> {
    let mut rels = Vec::new();
    let basis = lie_basis(2 * d, n);
    let lower = lie_basis(2 * d - 1, n);
    for k in 0..d {
        let swap = perm_forest(&Perm::transposition(2 * d, 2 * k, 2 * k + 1));
        for h in &basis {
            let f = key_forest(h);
            rels.push(forest_coords(&compose_forests(&f, &swap)).minus(&forest_coords(&f)));
        }
        let br = bracket_forest(2 * d, 2 * k);
        for h in &lower {
            rels.push(forest_coords(&compose_forests(&key_forest(h), &br)));
        }
    }
    rels
}

/// `r_s` on the slots `k, k+1`: `h − h∘P_{(13)(24)}` for every `h`.
fn swap_relators(d: usize, n: usize, k: usize) -> Vec<LinComb<WordKey>> {
    let mut images: Vec<usize> = (0..2 * d).collect();
    images.swap(2 * k, 2 * k + 2);
    images.swap(2 * k + 1, 2 * k + 3);
    let p = perm_forest(&Perm::from_images(images).expect("a permutation"));
    lie_basis(2 * d, n)
        .iter()
        .map(|h| {
            let f = key_forest(h);
            forest_coords(&f).minus(&forest_coords(&compose_forests(&f, &p)))
        })
        .collect()
}

/// The morphism `(([,]⊗id₂)P_{(23)} + id₁⊗[,]⊗id₁) : L⁴ → L³` of `r_c`.
fn casimir_relator_forests() -> [Vec<RootedTree>; 2] {
    let p23 = perm_forest(&Perm::transposition(4, 1, 2));
    [compose_forests(&bracket_forest(4, 0), &p23), bracket_forest(4, 1)]
}

/// `r_c` on the slots `k, k+1`, composed with every `h ∈ catLie(2d−1, n)`.
fn casimir_relators(d: usize, n: usize, k: usize) -> Vec<LinComb<WordKey>> {
    let whole: Vec<Vec<RootedTree>> = casimir_relator_forests()
        .iter()
        .map(|g| {
            let left = tensor_forests(&identity_forest(2 * k), 2 * k, g);
            tensor_forests(&left, 2 * k + 4, &identity_forest(2 * d - 2 * k - 4))
        })
        .collect();
    lie_basis(2 * d - 1, n)
        .iter()
        .map(|h| {
            let f = key_forest(h);
            forest_coords(&compose_forests(&f, &whole[0])).plus(&forest_coords(&compose_forests(&f, &whole[1])))
        })
        .collect()
}

/// All relators of the degree-`d` part of the ideal at arity `n`.
pub fn quadratic_relators(d: usize, n: usize) -> Vec<LinComb<WordKey>> {
    let mut out = Vec::new();
    for k in 0..d.saturating_sub(1) {
        out.extend(swap_relators(d, n, k));
        out.extend(casimir_relators(d, n, k));
    }
    out
}

/// `C₁^{⊠d}(n)` on the spanning set `catLie(2d, n)∘c^{⊗d}`.
pub fn free_power(d: usize, n: usize) -> Result<HomSpaceModel<WordKey>, HomError> {
    let rels = if d == 0 { Vec::new() } else { slot_relations(d, n) };
    HomSpaceModel::from_lincombs(format!("C1^{d}(n={n})"), lie_basis(2 * d, n), &rels)
}

/// `(C₁^{⊠} / ⟨r_s, r_c⟩)_d(n)`.
pub fn quadratic_quotient(d: usize, n: usize) -> Result<HomSpaceModel<WordKey>, HomError> {
    let mut rels = if d == 0 { Vec::new() } else { slot_relations(d, n) };
    rels.extend(quadratic_relators(d, n));
    HomSpaceModel::from_lincombs(format!("quadratic C_{d}(n={n})"), lie_basis(2 * d, n), &rels)
}

pub fn quadratic_quotient_dim(d: usize, n: usize) -> Result<usize, HomError> {
    Ok(quadratic_quotient(d, n)?.dim())
}

/// The degree-`d` part of the quadratic quotient as a catLie-module on
/// arities `0..=2d`.
pub fn quadratic_quotient_module(d: usize) -> Result<CatLieModule, HomError> {
    let models = (0..=2 * d).map(|n| quadratic_quotient(d, n)).collect::<Result<Vec<_>, _>>()?;
    module_from_models(format!("Q{d}"), &models, key_forest, |_, h| h.clone())
}

/// `C₁^{⊠d}` on arities `0..=2d`, in the spanning set `catLie(2d,−)∘c^{⊗d}`.
pub fn free_power_module(d: usize) -> Result<CatLieModule, HomError> {
    let models = (0..=2 * d).map(|n| free_power(d, n)).collect::<Result<Vec<_>, _>>()?;
    module_from_models(format!("C1^{d}"), &models, key_forest, |_, h| h.clone())
}

/// `(A₁^{⊠} / ⟨r̃_s, r̃_c⟩)_d(n)`, computed as the induction of the catLie
/// quotient along the coend; induction is symmetric monoidal and right exact,
/// so it carries the catLie presentation to the chord diagram side.
pub fn a_side_quadratic_dim(d: usize, n: usize) -> Result<usize, HomError> {
    Ok(coend_induce(&quadratic_quotient_module(d)?, n)?.dim())
}

/// Whether `r_s` and `r_c` vanish in `catLieC(0,n)_d`, which shares the
/// spanning set `catLie(2d,n)∘c^{⊗d}`.
pub fn relators_vanish(d: usize, n: usize) -> Result<bool, HomError> {
    let target = clc0(n, d)?;
    for r in quadratic_relators(d, n) {
        if !target.model.nf(&r)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One cell of the presentation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticCell {
    pub side: char,
    pub d: usize,
    pub n: usize,
    pub free_dim: usize,
    pub quotient_dim: usize,
    pub reference_dim: usize,
}

impl QuadraticCell {
    pub fn ideal_rank(&self) -> usize {
        self.free_dim - self.quotient_dim
    }

    pub fn equal(&self) -> bool {
        self.quotient_dim == self.reference_dim
    }

    pub fn to_json(&self) -> Value {
        json!({
            "side": self.side.to_string(),
            "d": self.d,
            "n": self.n,
            "free_dim": self.free_dim,
            "ideal_rank": self.ideal_rank(),
            "quotient_dim": self.quotient_dim,
            "reference_dim": self.reference_dim,
            "equal": self.equal(),
        })
    }
}

/// The Casimir Lie side: quotient against `catLieC(0,n)_d`.
pub fn c_side_cell(d: usize, n: usize) -> Result<QuadraticCell, HomError> {
    Ok(QuadraticCell {
        side: 'C',
        d,
        n,
        free_dim: free_power(d, n)?.dim(),
        quotient_dim: quadratic_quotient_dim(d, n)?,
        reference_dim: clc0(n, d)?.dim(),
    })
}

/// The chord diagram side: induced quotient against `𝒜_d(0,n)`.
pub fn a_side_cell(d: usize, n: usize) -> Result<QuadraticCell, HomError> {
    Ok(QuadraticCell {
        side: 'A',
        d,
        n,
        free_dim: coend_induce(&free_power_module(d)?, n)?.dim(),
        quotient_dim: a_side_quadratic_dim(d, n)?,
        reference_dim: jac_space_cached(d, 0, n)?.dim(),
    })
}

/// Every cell `(d, n)` with `d ≤ d_max`, `n ≤ 2d` (C side) or `n ≤ n_max`
/// (A side), computed in parallel.
pub fn presentation_report(c_max: usize, a_max: usize, a_arity: usize) -> Result<Vec<QuadraticCell>, HomError> {
    let mut cells: Vec<(char, usize, usize)> = (0..=c_max).flat_map(|d| (0..=2 * d).map(move |n| ('C', d, n))).collect();
    cells.extend((0..=a_max).flat_map(|d| (0..=a_arity).map(move |n| ('A', d, n))));
    cells.par_iter().map(|&(s, d, n)| if s == 'C' { c_side_cell(d, n) } else { a_side_cell(d, n) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_has_no_relators() {
        assert!(quadratic_relators(1, 2).is_empty());
        assert_eq!(quadratic_quotient_dim(1, 2).unwrap(), 1);
        assert_eq!(quadratic_quotient_dim(1, 1).unwrap(), 0);
    }

    #[test]
    fn free_square_drops_at_arity_three() {
        let free = free_power(2, 3).unwrap().dim();
        let q = quadratic_quotient_dim(2, 3).unwrap();
        assert!(q < free, "free {free}, quotient {q}");
    }
}
