use std::collections::HashMap;

use diagrams::{
    all_trees, as_ihx_relators, enumerate_chords, enumerate_jacobi, four_t_relators, stu_closure_relators, ChordDiagram,
    DiagramVector, JacobiDiagram, LinComb, RootedTree, StuSite,
};
use proptest::prelude::*;
use ratlin::{quotient_dim, SparseVec};

fn index_of(basis: &[ChordDiagram]) -> HashMap<ChordDiagram, usize> {
    basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect()
}

fn coords(index: &HashMap<ChordDiagram, usize>, vs: &[DiagramVector]) -> Vec<SparseVec> {
    vs.iter().map(|v| v.to_sparse(|d| index.get(d).copied()).expect("relator inside the shape class")).collect()
}

fn chord_quotient_dim(d: usize, n: usize, rels: &[DiagramVector]) -> usize {
    let basis = enumerate_chords(d, n, 0);
    let idx = index_of(&basis);
    let span: Vec<SparseVec> = (0..basis.len()).map(SparseVec::unit).collect();
    quotient_dim(basis.len(), &span, &coords(&idx, rels)).unwrap()
}

#[test]
fn canonical_form_is_idempotent() {
    for d in 0..=3 {
        for m in 0..=4 {
            if 2 * d + m > 7 {
                continue;
            }
            for n in 0..=4 {
                for c in enumerate_chords(d, n, m) {
                    let again = ChordDiagram::new(c.n_upper(), c.strands().to_vec()).unwrap();
                    assert_eq!(again, c);
                    assert_eq!(ChordDiagram::from_json(&c.to_json()).unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn four_t_matches_stu_closure() {
    for (d, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 1)] {
        let a = chord_quotient_dim(d, n, &four_t_relators(d, n, 0));
        let b = chord_quotient_dim(d, n, &stu_closure_relators(d, n, 0, 1).unwrap());
        assert_eq!(a, b, "d={d} n={n}");
    }
}

#[test]
fn known_small_dimensions() {
    assert_eq!(chord_quotient_dim(2, 1, &four_t_relators(2, 1, 0)), 2);
    for n in 0..=4 {
        assert_eq!(chord_quotient_dim(1, n, &four_t_relators(1, n, 0)), n * (n + 1) / 2);
    }
}

#[test]
fn four_t_relators_are_stu_consequences() {
    // Every 4T relator lies in the span of the STU-closure relators.
    for (d, n) in [(2, 2), (2, 3)] {
        let basis = enumerate_chords(d, n, 0);
        let idx = index_of(&basis);
        let stu = ratlin::Subspace::span(basis.len(), &coords(&idx, &stu_closure_relators(d, n, 0, 1).unwrap())).unwrap();
        for r in coords(&idx, &four_t_relators(d, n, 0)) {
            assert!(stu.contains(&r));
        }
    }
}

#[test]
fn degree_zero_trees_span_chords() {
    // STU normal forms of all degree-0 Jacobi diagrams with up to two
    // trivalent vertices span exactly the chord basis.
    for (m, n) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
        let basis = enumerate_chords(0, n, m);
        let idx: HashMap<ChordDiagram, usize> = index_of(&basis);
        let mut vecs = Vec::new();
        for t in 0..=2.min(m.saturating_sub(1)) {
            for j in enumerate_jacobi(0, n, m, t, false) {
                vecs.push(j.stu_normalize().unwrap().to_sparse(|d| idx.get(d).copied()).unwrap());
            }
        }
        let span = ratlin::Subspace::span(basis.len(), &vecs).unwrap();
        assert_eq!(span.dim(), basis.len());
    }
}

#[test]
fn lie_rank_is_factorial() {
    for k in 1..=5usize {
        let labels: Vec<usize> = (0..k).collect();
        let trees = all_trees(&labels);
        let idx: HashMap<RootedTree, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let rels: Vec<SparseVec> =
            as_ihx_relators(&labels).iter().map(|r| r.to_sparse(|t| idx.get(t).copied()).unwrap()).collect();
        let span: Vec<SparseVec> = (0..trees.len()).map(SparseVec::unit).collect();
        let dim = quotient_dim(trees.len(), &span, &rels).unwrap();
        assert_eq!(dim, (1..k).product::<usize>(), "k={k}");
    }
}

#[test]
fn lie_coordinates_kill_relators() {
    let labels = [0, 1, 2, 3];
    for r in as_ihx_relators(&labels) {
        let mut total: LinComb<Vec<usize>> = LinComb::new();
        for (t, c) in r.iter() {
            for (w, x) in t.lie_coords() {
                total.add_term(w, &(c * &ratlin::Q::from_int(x)));
            }
        }
        assert!(total.is_zero());
    }
}

fn shapes() -> Vec<(usize, usize, usize)> {
    vec![(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 1, 2), (3, 1, 1), (3, 2, 2), (2, 2, 3), (3, 1, 3)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn stu_normalization_is_order_independent(shape in 0usize..8, pick in any::<u64>(), seed in any::<u64>()) {
        let (d, n, t) = shapes()[shape];
        let js = enumerate_jacobi(d, n, 0, t, false);
        prop_assume!(!js.is_empty());
        let j: &JacobiDiagram = &js[(pick % js.len() as u64) as usize];
        let reference = j.stu_normalize().unwrap();
        let mut state = seed | 1;
        let mut chooser = |s: &[StuSite]| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % s.len() as u64) as usize
        };
        let other = j.stu_normalize_with(&mut chooser).unwrap();
        // Different orders agree modulo 4T; compare images in the quotient.
        let basis = enumerate_chords(d, n, 0);
        let idx = index_of(&basis);
        let rel = ratlin::QuotientSpace::from_relations(basis.len(), &coords(&idx, &four_t_relators(d, n, 0))).unwrap();
        let a = rel.nf(&reference.to_sparse(|x| idx.get(x).copied()).unwrap());
        let b = rel.nf(&other.to_sparse(|x| idx.get(x).copied()).unwrap());
        prop_assert_eq!(a, b);
    }
}
