use std::collections::BTreeMap;

use proptest::prelude::*;
use ratlin::{RatMatrix, SparseVec, Q};
use symgrp::{
    decompose_sn_rep, schur_dim, specht_dim, sum_of_squares_identity, young_symmetrizer, Partition, Perm,
};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Matrices of left multiplication by adjacent transpositions on K[S_n].
fn regular_rep(n: usize) -> Vec<RatMatrix> {
    let all = Perm::all(n);
    let index: BTreeMap<Perm, usize> = all.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    (0..n - 1)
        .map(|i| {
            let s = Perm::transposition(n, i, i + 1);
            let cols: Vec<SparseVec> = all.iter().map(|p| SparseVec::unit(index[&s.compose(p)])).collect();
            RatMatrix::from_rows(all.len(), cols).unwrap().transpose()
        })
        .collect()
}

#[test]
fn regular_representation_of_s3() {
    let m = decompose_sn_rep(&regular_rep(3), 3).unwrap();
    for l in Partition::all(3) {
        assert_eq!(m[&l] as u64, specht_dim(&l), "{l}");
    }
}

#[test]
fn trivial_and_sign_actions() {
    let one = RatMatrix::identity(1);
    let m = decompose_sn_rep(&vec![one.clone(); 3], 4).unwrap();
    assert_eq!(m, [(part("(4)"), 1)].into_iter().collect());
    let minus = one.scale(&-Q::one());
    let m = decompose_sn_rep(&vec![minus; 2], 3).unwrap();
    assert_eq!(m, [(part("(1,1,1)"), 1)].into_iter().collect());
}

#[test]
fn invalid_generators_are_rejected() {
    let bad = RatMatrix::from_int_rows(&[vec![2]]);
    assert!(decompose_sn_rep(&[bad.clone(), bad], 3).is_err());
    // Two non-commuting involutions violating the braid relation.
    let a = RatMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]);
    let b = RatMatrix::from_int_rows(&[vec![1, 0], vec![0, -1]]);
    assert!(decompose_sn_rep(&[a, b], 3).is_err());
}

#[test]
fn symmetrizers_are_quasi_idempotent() {
    for d in 1..=5 {
        for l in Partition::all(d) {
            let c = young_symmetrizer(&l);
            let s = c.quasi_idempotent_scalar().expect("c_λ² is a multiple of c_λ");
            assert!(!s.is_zero(), "{l}");
        }
    }
}

#[test]
fn specht_dimensions_square_sum() {
    for d in 0..=6 {
        assert!(sum_of_squares_identity(d), "d = {d}");
    }
}

#[test]
fn schur_dim_is_polynomial_of_degree_size() {
    // The (|λ|+1)-th finite difference vanishes.
    for d in 1..=4 {
        for l in Partition::all(d) {
            let vals: Vec<i128> = (0..=d + 4).map(|n| schur_dim(&l, n) as i128).collect();
            let mut diff = vals;
            for _ in 0..=d {
                diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
            }
            assert!(diff.iter().all(|&x| x == 0), "{l}");
        }
    }
}

#[test]
fn even_plethysm_dimension_identity() {
    // Σ_{λ ⊢ 3} dim S^{2λ}(K^n) = binom(binom(n+1,2)+2, 3).
    for n in 0..8u64 {
        let total: u64 = symgrp::even_plethysm_parts(3).iter().map(|l| schur_dim(l, n as usize)).sum();
        let m = n * (n + 1) / 2;
        assert_eq!(total, (m + 2) * (m + 1) * m / 6, "n = {n}");
    }
}

proptest! {
    #[test]
    fn compose_inverse_is_identity(seed in prop::collection::vec(0usize..100, 6)) {
        let n = 6;
        let mut img: Vec<usize> = (0..n).collect();
        for (i, s) in seed.iter().enumerate() {
            img.swap(i, s % n);
        }
        let p = Perm::from_images(img).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.cycle_type().size(), n);
    }
}
