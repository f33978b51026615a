use std::collections::BTreeSet;

use diagrams::{enumerate_chords, LinComb, RootedTree};
use homspaces::{
    al0, al0_compose, as_ihx_rank, ass_basis, ass_word_diagram, catass_operad_sum, catlie_surjection_sum, clc0,
    coend_induce, coend_induce_with, compose_forests, jac_space, key_forest, lie_basis, perm_forest, prop_hom, word_form,
    CatLieModule, ExtraMorphism, PropCat,
};
use proptest::prelude::*;
use ratlin::LinearMap;
use symgrp::{schur_dim, Partition, Perm};

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[test]
fn chord_word_count() {
    for m in 0..=8 {
        for n in 1..=8 - m {
            assert_eq!(enumerate_chords(0, n, m).len(), factorial(m) * binom(m + n - 1, n - 1), "m={m} n={n}");
        }
    }
    assert_eq!(al0(2, 2).unwrap().dim(), 6);
}

#[test]
fn prop_dimensions_match_counting_formulas() {
    for m in 0..=5 {
        for n in 0..=5 {
            let ass = prop_hom(PropCat::CatAss, m, n).unwrap().dim();
            assert_eq!(ass, catass_operad_sum(m, n), "catAss({m},{n})");
            if n > 0 {
                assert_eq!(ass, factorial(m) * binom(m + n - 1, n - 1));
            }
            let lie = prop_hom(PropCat::CatLie, m, n).unwrap().dim();
            assert_eq!(lie, catlie_surjection_sum(m, n), "catLie({m},{n})");
            assert_eq!(lie, as_ihx_rank(m, n).unwrap(), "catLie({m},{n}) by AS-IHX");
            if m < n {
                assert_eq!(lie, 0);
            }
        }
    }
}

#[test]
fn ass_words_biject_onto_chord_words() {
    for m in 0..=4 {
        for n in 1..=4 {
            let image: BTreeSet<_> = ass_basis(m, n).iter().map(|k| ass_word_diagram(k, m).unwrap()).collect();
            let target: BTreeSet<_> = enumerate_chords(0, n, m).into_iter().collect();
            assert_eq!(image, target, "m={m} n={n}");
            for x in &target {
                let (comp, sigma) = word_form(x).unwrap();
                assert_eq!(comp.iter().sum::<usize>(), m);
                assert_eq!(sigma.degree(), m);
            }
        }
    }
}

#[test]
fn matchings_span_the_top_arity() {
    for (d, count) in [(1, 1), (2, 3), (3, 15)] {
        assert_eq!(clc0(2 * d, d).unwrap().dim(), count, "d={d}");
    }
}

#[test]
fn specht_induction_gives_schur_functors() {
    for k in 1..=3 {
        for lambda in Partition::all(k) {
            let j = CatLieModule::specht(&lambda).unwrap();
            for n in 1..=5 {
                let got = coend_induce(&j, n).unwrap().dim();
                assert_eq!(got as u64, schur_dim(&lambda, n), "λ={lambda} n={n}");
            }
        }
    }
    for n in 0..=4 {
        assert_eq!(coend_induce(&CatLieModule::unit(), n).unwrap().dim(), 1);
    }
}

#[test]
fn casimir_induction_recovers_chord_spaces() {
    for d in 0..=2 {
        let j = CatLieModule::casimir_family(d).unwrap();
        for n in 1..=4 {
            let got = coend_induce(&j, n).unwrap().dim();
            assert_eq!(got, jac_space(d, 0, n).unwrap().dim(), "d={d} n={n}");
        }
    }
}

/// The action of an arbitrary forest `f : m′ → m` on `C_d`, computed directly.
fn casimir_action(d: usize, f: &[RootedTree], src: usize) -> LinearMap {
    let (from, to) = (clc0(src, d).unwrap(), clc0(f.len(), d).unwrap());
    let images = from.basis_forests().iter().map(|x| to.nf_forest(&compose_forests(f, x)).unwrap()).collect();
    LinearMap::new(from.dim(), to.dim(), images)
}

#[test]
fn longer_morphisms_add_no_relations() {
    let d = 2;
    let j = CatLieModule::casimir_family(d).unwrap();
    let b = |a: usize, c: usize| RootedTree::bracket(RootedTree::leaf(a), RootedTree::leaf(c));
    let forests: Vec<(Vec<RootedTree>, usize)> = vec![
        (vec![RootedTree::bracket(b(0, 2), RootedTree::leaf(1)), RootedTree::leaf(3)], 4),
        (vec![b(3, 0), b(1, 2)], 4),
        (perm_forest(&Perm::from_images(vec![2, 0, 3, 1]).unwrap()), 4),
        (vec![RootedTree::leaf(2), b(1, 0)], 3),
    ];
    let extra: Vec<ExtraMorphism> = forests
        .into_iter()
        .map(|(f, src)| ExtraMorphism { action: casimir_action(d, &f, src), target: f.len(), source: src, forest: f })
        .collect();
    for n in 1..=3 {
        assert_eq!(coend_induce_with(&j, n, &extra).unwrap().dim(), coend_induce(&j, n).unwrap().dim(), "n={n}");
    }
}

fn diagram_and_forests() -> impl Strategy<Value = (usize, usize, usize, usize, usize, usize)> {
    (1usize..=2, 1usize..=4).prop_flat_map(|(n, m)| (Just(n), Just(m), m..=4, 0usize..1000, 0usize..1000, 0usize..1000))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn right_action_is_associative((n, m, m1, ix, jf, jg) in diagram_and_forests(), extra in 0usize..=1) {
        let m2 = (m1 + extra).min(4);
        let xs = enumerate_chords(0, n, m);
        let fs = lie_basis(m1, m);
        let gs = lie_basis(m2, m1);
        let x = LinComb::single(xs[ix % xs.len()].clone());
        let f = key_forest(&fs[jf % fs.len()]);
        let g = key_forest(&gs[jg % gs.len()]);
        let lhs = al0_compose(&al0_compose(&x, &f, m1).unwrap(), &g, m2).unwrap();
        let rhs = al0_compose(&x, &compose_forests(&f, &g), m2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
