//! Chord diagram spaces `𝒜^L_d(L^m, H^n)` modulo 4T and the right action
//! of catLie on the upper legs.

use diagrams::{enumerate_chords, four_t_relators, ChordDiagram, DiagramVector, JacobiDiagram, RootedTree, Tok};
use symgrp::Perm;

use crate::model::HomSpaceModel;
use crate::prop::WordKey;
use crate::HomError;

/// `𝒜^L_d(L^m, H^n)`: chord diagrams modulo the 4T relations.
pub fn jac_space(d: usize, m: usize, n: usize) -> Result<HomSpaceModel<ChordDiagram>, HomError> {
    let spanning = enumerate_chords(d, n, m);
    let rels = if d == 0 { Vec::new() } else { four_t_relators(d, n, m) };
    HomSpaceModel::from_lincombs(format!("jac(d={d},m={m},n={n})"), spanning, &rels)
}

/// `𝒜^L_0(L^m, H^n)`, free on the diagrams `C(m,n)`.
pub fn al0(m: usize, n: usize) -> Result<HomSpaceModel<ChordDiagram>, HomError> {
    HomSpaceModel::free(format!("al0(m={m},n={n})"), enumerate_chords(0, n, m))
}

/// The word `μ^{[p]}P_σ i^{⊗m}` of a degree-0 diagram: the composition `p`
/// of leg counts per strand and `σ` sending leg `u` to its position in the
/// strand-by-strand reading order.
pub fn word_form(x: &ChordDiagram) -> Result<(Vec<usize>, Perm), HomError> {
    if x.n_chords() > 0 {
        return Err(HomError::Invalid("word form needs a diagram without chords".into()));
    }
    let mut images = vec![0; x.n_upper()];
    let mut k = 0;
    let mut comp = Vec::with_capacity(x.n_strands());
    for s in x.strands() {
        comp.push(s.len());
        for t in s {
            if let Tok::Up(u) = t {
                images[*u as usize] = k;
                k += 1;
            }
        }
    }
    Ok((comp, Perm::from_images(images).map_err(|e| HomError::Invalid(e.to_string()))?))
}

/// The diagram `μ^{[p]}P_σ i^{⊗m}` for a catAss basis word: strand `i`
/// carries the upper legs listed in `key[i]`, in order.
pub fn ass_word_diagram(key: &WordKey, m: usize) -> Result<ChordDiagram, HomError> {
    let strands = key.iter().map(|w| w.iter().map(|&u| Tok::Up(u as u16)).collect()).collect();
    Ok(ChordDiagram::new(m, strands)?)
}

/// `x ∘ f`: substitutes the trees of `f ∈ catLie(m′, m)` into the upper
/// legs of `x` and normalizes by STU.
pub fn compose_upper(x: &DiagramVector, f: &[RootedTree], m_new: usize) -> Result<DiagramVector, HomError> {
    let mut out = DiagramVector::new();
    for (d, c) in x.iter() {
        if d.n_upper() != f.len() {
            return Err(HomError::Invalid(format!("{} trees for {} upper legs", f.len(), d.n_upper())));
        }
        let j = JacobiDiagram::from_chord(d).substitute_upper(f, m_new)?;
        out.add_scaled(c, &j.stu_normalize()?);
    }
    Ok(out)
}

/// The right catLie action on `𝒜^L_0(L^−, H^n)`.
pub fn al0_compose(x: &DiagramVector, f: &[RootedTree], m_new: usize) -> Result<DiagramVector, HomError> {
    compose_upper(x, f, m_new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prop::{bracket_forest, perm_forest};
    use diagrams::vector_of;

    fn d(m: usize, strands: Vec<Vec<Tok>>) -> ChordDiagram {
        ChordDiagram::new(m, strands).unwrap()
    }

    #[test]
    fn small_spaces() {
        assert_eq!(al0(2, 2).unwrap().dim(), 6);
        assert_eq!(al0(0, 3).unwrap().dim(), 1);
        assert_eq!(al0(3, 1).unwrap().dim(), 6);
        assert_eq!(jac_space(2, 0, 1).unwrap().dim(), 2);
        for n in 1..=3 {
            assert_eq!(jac_space(1, 0, n).unwrap().dim(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn bracket_on_a_single_leg() {
        let x = vector_of(&[(1, d(1, vec![vec![Tok::Up(0)]]))]);
        let got = al0_compose(&x, &bracket_forest(2, 0), 2).unwrap();
        let ab = d(2, vec![vec![Tok::Up(0), Tok::Up(1)]]);
        let ba = d(2, vec![vec![Tok::Up(1), Tok::Up(0)]]);
        assert_eq!(got, vector_of(&[(-1, ab), (1, ba)]));
    }

    #[test]
    fn identity_and_permutation_actions() {
        let x = d(2, vec![vec![Tok::Up(1)], vec![Tok::Up(0)]]);
        let v = vector_of(&[(1, x.clone())]);
        assert_eq!(al0_compose(&v, &perm_forest(&Perm::identity(2)), 2).unwrap(), v);
        let s = Perm::transposition(2, 0, 1);
        let got = al0_compose(&v, &perm_forest(&s), 2).unwrap();
        assert_eq!(got, vector_of(&[(1, x.rename_upper(&s))]));
    }

    #[test]
    fn word_forms_round_trip() {
        let x = d(3, vec![vec![Tok::Up(2), Tok::Up(0)], vec![Tok::Up(1)]]);
        let (comp, sigma) = word_form(&x).unwrap();
        assert_eq!(comp, vec![2, 1]);
        assert_eq!(sigma.images(), &[1, 2, 0]);
    }
}
