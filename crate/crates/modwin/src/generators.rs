//! The distinguished elements `P_d, Q_d, P^L_d, Q′_d, Q″_d` and the
//! symmetrizing idempotent.

use std::collections::HashMap;

use diagrams::{ChordDiagram, DiagramVector, Tok};
use ratlin::{Accumulator, LinearMap, SparseVec, Q};
use symgrp::Perm;

use crate::window::{WindowMap, WindowModule};
use crate::WinError;

/// `c̃^{⊗d}` (for `m = 0`) or `i⊗c̃^{⊗d}` (for `m = 1`) on `2d + m` strands.
pub fn x0(d: usize, m: usize) -> ChordDiagram {
    let mut strands = Vec::with_capacity(2 * d + m);
    if m == 1 {
        strands.push(vec![Tok::Up(0)]);
    }
    for k in 0..d as u16 {
        strands.push(vec![Tok::Ch(k)]);
        strands.push(vec![Tok::Ch(k)]);
    }
    ChordDiagram::new(m, strands).expect("valid generator diagram")
}

fn symmetrized(x: &ChordDiagram) -> DiagramVector {
    let mut out = DiagramVector::new();
    for s in Perm::all(x.n_strands()) {
        out.add_term(x.permute(&s), &Q::one());
    }
    out
}

fn minus_swapped(x: &ChordDiagram, i: usize, j: usize) -> Result<DiagramVector, WinError> {
    let n = x.n_strands();
    if j >= n {
        return Err(WinError::Invalid(format!("the transposition ({} {}) needs {} strands", i + 1, j + 1, j + 1)));
    }
    let mut out = DiagramVector::single(x.clone());
    out.add_term(x.permute(&Perm::transposition(n, i, j)), &-Q::one());
    Ok(out)
}

/// `P_d = (Σ_{σ∈S_{2d}} P_σ)∘c̃^{⊗d}`.
pub fn p_d(d: usize) -> DiagramVector {
    symmetrized(&x0(d, 0))
}

/// `Q_d = c̃^{⊗d} − P_{(23)}∘c̃^{⊗d}`, defined for `d ≥ 2`.
pub fn q_d(d: usize) -> Result<DiagramVector, WinError> {
    if d < 2 {
        return Err(WinError::Invalid("Q_d is defined for d ≥ 2".into()));
    }
    minus_swapped(&x0(d, 0), 1, 2)
}

/// `P^L_d = (Σ_{σ∈S_{2d+1}} P_σ)∘(i⊗c̃^{⊗d})`.
pub fn p_l(d: usize) -> DiagramVector {
    symmetrized(&x0(d, 1))
}

/// `Q′_d = i⊗c̃^{⊗d} − P_{(12)}∘(i⊗c̃^{⊗d})`, defined for `d ≥ 1`.
pub fn q_prime(d: usize) -> Result<DiagramVector, WinError> {
    if d < 1 {
        return Err(WinError::Invalid("Q′_d is defined for d ≥ 1".into()));
    }
    minus_swapped(&x0(d, 1), 0, 1)
}

/// `Q″_d = i⊗c̃^{⊗d} − P_{(34)}∘(i⊗c̃^{⊗d})`, defined for `d ≥ 2`.
pub fn q_double_prime(d: usize) -> Result<DiagramVector, WinError> {
    if d < 2 {
        return Err(WinError::Invalid("Q″_d is defined for d ≥ 2".into()));
    }
    minus_swapped(&x0(d, 1), 2, 3)
}

/// The distinguished elements of degree `d`; entries undefined at this
/// degree are `None`.
#[derive(Clone, Debug)]
pub struct CanonicalGenerators {
    pub p: DiagramVector,
    pub q: Option<DiagramVector>,
    pub p_l: DiagramVector,
    pub q_prime: Option<DiagramVector>,
    pub q_double_prime: Option<DiagramVector>,
}

pub fn canonical_generators(d: usize) -> CanonicalGenerators {
    CanonicalGenerators { p: p_d(d), q: q_d(d).ok(), p_l: p_l(d), q_prime: q_prime(d).ok(), q_double_prime: q_double_prime(d).ok() }
}

/// The idempotent `e` with `e(f∘x_0) = f∘P/(2d+m)!` on `A_d` (`m = 0`) or
/// `A^L_d` (`m = 1`), where `x_0` is `c̃^{⊗d}` or `i⊗c̃^{⊗d}` and `P` its
/// symmetrization.
///
/// On a diagram with endpoint counts `p` per strand this is
/// `2^d d!/(2d+m)!` times the sum of all diagrams with the same counts.
/// The map is checked to vanish on every 4T relation.
pub fn symmetrizer_idempotent(m: &WindowModule) -> Result<WindowMap, WinError> {
    let r = m.degrees();
    if r.len() != 1 || r.start == 0 {
        return Err(WinError::Invalid("the symmetrizer needs a single degree d ≥ 1".into()));
    }
    let d = r.start;
    let k = 2 * d + m.upper();
    let fact = |j: usize| (1..=j).fold(Q::one(), |a, i| &a * &Q::from_int(i as i64));
    let scale = &(&Q::from_int(1 << d) * &fact(d)) / &fact(k);
    let mut maps = Vec::with_capacity(m.window() + 1);
    for n in 0..=m.window() {
        let b = m.block(n, d);
        let mut sums: HashMap<Vec<usize>, Accumulator> = HashMap::new();
        for (i, x) in b.spanning().iter().enumerate() {
            sums.entry(x.strand_counts()).or_default().add_vec(&Q::one(), &b.nf_index(i));
        }
        let sums: HashMap<Vec<usize>, SparseVec> = sums.into_iter().map(|(c, a)| (c, a.finish().scale(&scale))).collect();
        let col = |c: usize| &sums[&b.spanning()[c].strand_counts()];
        for row in b.quotient().relations().basis() {
            let mut acc = Accumulator::new();
            for (c, a) in row.iter() {
                acc.add_vec(a, col(c));
            }
            if !acc.finish().is_zero() {
                return Err(WinError::NotWellDefined(format!("symmetrizer on a relation at arity {n}")));
            }
        }
        let images = b.quotient().basis_cols().iter().map(|&c| col(c).clone()).collect();
        maps.push(LinearMap::new(b.dim(), b.dim(), images));
    }
    Ok(WindowMap { maps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_is_twice_the_casimir() {
        let p = p_d(1);
        assert_eq!(p, DiagramVector::term(Q::from_int(2), x0(1, 0)));
        assert!(q_d(1).is_err());
        assert!(q_double_prime(1).is_err());
        assert!(q_prime(1).is_ok());
    }

    #[test]
    fn generator_shapes() {
        assert_eq!(x0(2, 0).n_strands(), 4);
        assert_eq!(x0(2, 1).n_strands(), 5);
        assert_eq!(x0(0, 0).n_strands(), 0);
        let g = canonical_generators(2);
        assert_eq!(g.q.unwrap().len(), 2);
        assert_eq!(g.p_l.iter().map(|(_, c)| c.clone()).fold(Q::zero(), |a, c| &a + &c), Q::from_int(120));
    }
}
