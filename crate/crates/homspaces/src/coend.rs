//! Finitely supported left catLie-modules and their induction
//! `𝒜^L_0(L^−, H^n) ⊗_{catLie} J`.

use std::collections::BTreeMap;

use diagrams::{enumerate_chords, ChordDiagram, DiagramVector, LinComb, RootedTree};
use ratlin::{LinearMap, SparseVec, Subspace};
use symgrp::{young_symmetrizer, GroupAlgebraElement, Partition, Perm};

use crate::clc::clc0;
use crate::jac::compose_upper;
use crate::model::HomSpaceModel;
use crate::prop::{bracket_forest, compose_forests, perm_forest};
use crate::HomError;

/// A left catLie-module supported in arities `0..dims.len()`, given by the
/// actions of the adjacent transpositions and of the one-bracket morphisms.
#[derive(Clone, Debug)]
pub struct CatLieModule {
    pub name: String,
    pub dims: Vec<usize>,
    /// `transpositions[m][p]`: the action of `(p, p+1)` on `J(m)`.
    pub transpositions: Vec<Vec<LinearMap>>,
    /// `brackets[m][p]`: `id^{⊗p}⊗[,]⊗id : J(m) → J(m−1)`, for `m ≥ 2`.
    pub brackets: Vec<Vec<LinearMap>>,
}

impl CatLieModule {
    pub fn max_arity(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dim(&self, m: usize) -> usize {
        self.dims.get(m).copied().unwrap_or(0)
    }

    /// `catLie(0,−)`: the ground field in arity 0.
    pub fn unit() -> Self {
        CatLieModule { name: "unit".into(), dims: vec![1], transpositions: vec![vec![]], brackets: vec![vec![]] }
    }

    /// The Specht module `K S_k c_λ`, concentrated in arity `k = |λ|`.
    pub fn specht(lambda: &Partition) -> Result<Self, HomError> {
        let k = lambda.size();
        let group = Perm::all(k);
        let index: BTreeMap<&Perm, usize> = group.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let to_vec = |e: &GroupAlgebraElement| SparseVec::from_pairs(e.terms().iter().map(|(p, c)| (index[p], c.clone())));
        let c = young_symmetrizer(lambda);
        let gens: Vec<SparseVec> = group.iter().map(|p| to_vec(&GroupAlgebraElement::from_perm(p.clone()).mul(&c))).collect();
        let space = Subspace::span(group.len(), &gens)?;
        let dim = space.dim();
        let basis: Vec<GroupAlgebraElement> = space
            .basis()
            .iter()
            .map(|v| {
                let mut e = GroupAlgebraElement::zero(k);
                for (i, a) in v.iter() {
                    e.add_term(group[i].clone(), a);
                }
                e
            })
            .collect();
        let mut transpositions = vec![Vec::new(); k + 1];
        for p in 0..k.saturating_sub(1) {
            let s = GroupAlgebraElement::from_perm(Perm::transposition(k, p, p + 1));
            let images = basis
                .iter()
                .map(|b| space.coordinates(&to_vec(&s.mul(b))).ok_or_else(|| HomError::Invalid("left ideal not stable".into())))
                .collect::<Result<Vec<_>, _>>()?;
            transpositions[k].push(LinearMap::new(dim, dim, images));
        }
        let mut dims = vec![0; k + 1];
        dims[k] = dim;
        let mut brackets = vec![Vec::new(); k + 1];
        if k >= 2 {
            brackets[k] = (0..k - 1).map(|_| LinearMap::zero(dim, 0)).collect();
        }
        Ok(CatLieModule { name: format!("S{lambda}"), dims, transpositions, brackets })
    }

    /// The family `C_d = catLieC(0,−)_d`, supported in arities `0..=2d`.
    pub fn casimir_family(d: usize) -> Result<Self, HomError> {
        let spaces = (0..=2 * d).map(|m| clc0(m, d)).collect::<Result<Vec<_>, _>>()?;
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let mut transpositions = vec![Vec::new(); dims.len()];
        let mut brackets = vec![Vec::new(); dims.len()];
        for (m, sp) in spaces.iter().enumerate() {
            let forests = sp.basis_forests();
            for p in 0..m.saturating_sub(1) {
                let g = perm_forest(&Perm::transposition(m, p, p + 1));
                let images =
                    forests.iter().map(|f| sp.nf_forest(&compose_forests(&g, f))).collect::<Result<Vec<_>, _>>()?;
                transpositions[m].push(LinearMap::new(dims[m], dims[m], images));
                let b = bracket_forest(m, p);
                let images =
                    forests.iter().map(|f| spaces[m - 1].nf_forest(&compose_forests(&b, f))).collect::<Result<Vec<_>, _>>()?;
                brackets[m].push(LinearMap::new(dims[m], dims[m - 1], images));
            }
        }
        Ok(CatLieModule { name: format!("C{d}"), dims, transpositions, brackets })
    }
}

/// A spanning element `x ⊗ e_j` of the coend, with `x ∈ C(m,n)`.
pub type CoendKey = (ChordDiagram, usize);

fn tensor_with(x: &DiagramVector, y: &SparseVec) -> LinComb<CoendKey> {
    let mut out = LinComb::new();
    for (d, c) in x.iter() {
        for (j, a) in y.iter() {
            out.add_term((d.clone(), j), &(c * a));
        }
    }
    out
}

/// A relation `(x∘f)⊗y − x⊗(f·y)` for a catLie morphism `f : m′ → m` given
/// as a forest together with its action `J(m′) → J(m)`.
#[derive(Clone, Debug)]
pub struct ExtraMorphism {
    pub forest: Vec<RootedTree>,
    pub source: usize,
    pub target: usize,
    pub action: LinearMap,
}

/// `⊕_m C(m,n) ⊗ J(m)` modulo the coend relations of adjacent
/// transpositions and one-bracket morphisms.
pub fn coend_induce(j: &CatLieModule, n: usize) -> Result<HomSpaceModel<CoendKey>, HomError> {
    coend_induce_with(j, n, &[])
}

/// `coend_induce` with additional relations from the given morphisms.
pub fn coend_induce_with(j: &CatLieModule, n: usize, extra: &[ExtraMorphism]) -> Result<HomSpaceModel<CoendKey>, HomError> {
    let top = j.max_arity();
    let mut spanning = Vec::new();
    for m in 0..=top {
        for x in enumerate_chords(0, n, m) {
            for y in 0..j.dim(m) {
                spanning.push((x.clone(), y));
            }
        }
    }
    let mut rels = Vec::new();
    let mut add = |x: &ChordDiagram, f: &[RootedTree], src: usize, action: &LinearMap| -> Result<(), HomError> {
        let xf = compose_upper(&LinComb::single(x.clone()), f, src)?;
        for y in 0..j.dim(src) {
            let lhs = tensor_with(&xf, &SparseVec::unit(y));
            let rhs = tensor_with(&LinComb::single(x.clone()), &action.apply(&SparseVec::unit(y)));
            rels.push(lhs.minus(&rhs));
        }
        Ok(())
    };
    for m in 0..=top {
        let xs = enumerate_chords(0, n, m);
        for p in (0..m.saturating_sub(1)).filter(|_| j.dim(m) > 0) {
            let f = perm_forest(&Perm::transposition(m, p, p + 1));
            for x in &xs {
                add(x, &f, m, &j.transpositions[m][p])?;
            }
        }
        if m < top && j.dim(m + 1) > 0 {
            for p in 0..m {
                let f = bracket_forest(m + 1, p);
                for x in &xs {
                    add(x, &f, m + 1, &j.brackets[m + 1][p])?;
                }
            }
        }
    }
    for e in extra {
        if e.forest.len() != e.target || e.target > top || e.source > top {
            return Err(HomError::Invalid("extra morphism outside the support".into()));
        }
        for x in enumerate_chords(0, n, e.target) {
            add(&x, &e.forest, e.source, &e.action)?;
        }
    }
    HomSpaceModel::from_lincombs(format!("coend({},n={n})", j.name), spanning, &rels)
}
