//! Day convolution `M ⊠ N = ∫^{a,b} catLie(a+b, −) ⊗ M(a) ⊗ N(b)` of
//! finitely supported catLie-modules.

use diagrams::{LinComb, RootedTree};
use homspaces::{bracket_forest, compose_forests, forest_coords, key_forest, lie_basis, perm_forest, CatLieModule, HomError, HomSpaceModel, WordKey};
use ratlin::{LinearMap, SparseVec};
use symgrp::Perm;

/// A spanning element `h ⊗ e_i ⊗ f_j` with `h ∈ catLie(a+b, n)`, `e_i`
/// a basis vector of `M(a)` and `f_j` one of `N(b)`.
pub type DayKey = (WordKey, usize, usize, usize);

/// `f ⊗ g` for forests with `f` on `f_inputs` leaves.
pub fn tensor_forests(f: &[RootedTree], f_inputs: usize, g: &[RootedTree]) -> Vec<RootedTree> {
    f.iter().cloned().chain(g.iter().map(|t| t.relabel(&|l| l + f_inputs))).collect()
}

pub fn identity_forest(k: usize) -> Vec<RootedTree> {
    (0..k).map(RootedTree::leaf).collect()
}

fn with_slots(forest: &[RootedTree], a: usize, i: usize, j: usize) -> LinComb<DayKey> {
    forest_coords(forest).iter().map(|(h, c)| ((h.clone(), a, i, j), c.clone())).collect()
}

fn one_sided_relations(
    m: &CatLieModule,
    nmod: &CatLieModule,
    n: usize,
    left: bool,
    out: &mut Vec<LinComb<DayKey>>,
) {
    let (act, other) = if left { (m, nmod) } else { (nmod, m) };
    for b in (0..=other.max_arity()).filter(|&b| other.dim(b) > 0) {
        for a in 0..=act.max_arity() {
            // (the catLie morphism, its source arity, its action)
            let mut morphisms: Vec<(Vec<RootedTree>, usize, &LinearMap)> = Vec::new();
            if act.dim(a) > 0 {
                for p in 0..a.saturating_sub(1) {
                    morphisms.push((perm_forest(&Perm::transposition(a, p, p + 1)), a, &act.transpositions[a][p]));
                }
            }
            if a < act.max_arity() && act.dim(a + 1) > 0 {
                for p in 0..a {
                    morphisms.push((bracket_forest(a + 1, p), a + 1, &act.brackets[a + 1][p]));
                }
            }
            for (f, src, action) in morphisms {
                let whole = if left { tensor_forests(&f, src, &identity_forest(b)) } else { tensor_forests(&identity_forest(b), b, &f) };
                for h in lie_basis(a + b, n) {
                    let composed = compose_forests(&key_forest(&h), &whole);
                    for x in 0..act.dim(src) {
                        let image = action.apply(&SparseVec::unit(x));
                        for y in 0..other.dim(b) {
                            let (i, j, asrc) = if left { (x, y, src) } else { (y, x, b) };
                            let mut r = with_slots(&composed, asrc, i, j);
                            for (z, c) in image.iter() {
                                let (i2, j2) = if left { (z, y) } else { (y, z) };
                                let a2 = if left { a } else { b };
                                r.add_term((h.clone(), a2, i2, j2), &-c);
                            }
                            out.push(r);
                        }
                    }
                }
            }
        }
    }
}

/// `(M ⊠ N)(n)` presented by `⊕_{a,b} catLie(a+b,n) ⊗ M(a) ⊗ N(b)` modulo
/// the coend relations of adjacent transpositions and one-bracket
/// morphisms acting on either factor.
pub fn day_convolve(m: &CatLieModule, nmod: &CatLieModule, n: usize) -> Result<HomSpaceModel<DayKey>, HomError> {
    let mut spanning = Vec::new();
    for a in (0..=m.max_arity()).filter(|&a| m.dim(a) > 0) {
        for b in (0..=nmod.max_arity()).filter(|&b| nmod.dim(b) > 0) {
            for h in lie_basis(a + b, n) {
                for i in 0..m.dim(a) {
                    for j in 0..nmod.dim(b) {
                        spanning.push((h.clone(), a, i, j));
                    }
                }
            }
        }
    }
    let mut rels = Vec::new();
    one_sided_relations(m, nmod, n, true, &mut rels);
    one_sided_relations(m, nmod, n, false, &mut rels);
    HomSpaceModel::from_lincombs(format!("({})⊠({})(n={n})", m.name, nmod.name), spanning, &rels)
}

/// Builds the catLie-module whose value at `n` is `models[n]`; catLie acts
/// by postcomposition on the first key component.
pub fn module_from_models<K: Ord + Clone + std::hash::Hash>(
    name: String,
    models: &[HomSpaceModel<K>],
    forest_of: impl Fn(&K) -> Vec<RootedTree>,
    rekey: impl Fn(&K, &WordKey) -> K,
) -> Result<CatLieModule, HomError> {
    let dims: Vec<usize> = models.iter().map(HomSpaceModel::dim).collect();
    let mut transpositions = vec![Vec::new(); dims.len()];
    let mut brackets = vec![Vec::new(); dims.len()];
    let image = |k: &K, post: &[RootedTree], target: &HomSpaceModel<K>| -> Result<SparseVec, HomError> {
        let composed = compose_forests(post, &forest_of(k));
        let v: LinComb<K> = forest_coords(&composed).iter().map(|(h, c)| (rekey(k, h), c.clone())).collect();
        target.nf(&v)
    };
    for (n, model) in models.iter().enumerate() {
        let basis: Vec<K> = model.basis().into_iter().cloned().collect();
        for p in 0..n.saturating_sub(1) {
            let t = perm_forest(&Perm::transposition(n, p, p + 1));
            let images = basis.iter().map(|k| image(k, &t, model)).collect::<Result<Vec<_>, _>>()?;
            transpositions[n].push(LinearMap::new(dims[n], dims[n], images));
            let br = bracket_forest(n, p);
            let images = basis.iter().map(|k| image(k, &br, &models[n - 1])).collect::<Result<Vec<_>, _>>()?;
            brackets[n].push(LinearMap::new(dims[n], dims[n - 1], images));
        }
    }
    Ok(CatLieModule { name, dims, transpositions, brackets })
}

/// `M ⊠ N` as a catLie-module, supported in arities up to the sum of the
/// supports.
pub fn day_product(m: &CatLieModule, nmod: &CatLieModule) -> Result<CatLieModule, HomError> {
    let top = m.max_arity() + nmod.max_arity();
    let models = (0..=top).map(|n| day_convolve(m, nmod, n)).collect::<Result<Vec<_>, _>>()?;
    module_from_models(
        format!("{}⊠{}", m.name, nmod.name),
        &models,
        |k: &DayKey| key_forest(&k.0),
        |k: &DayKey, h: &WordKey| (h.clone(), k.1, k.2, k.3),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use symgrp::Partition;

    fn s1() -> CatLieModule {
        CatLieModule::specht(&Partition::new(vec![1]).unwrap()).unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let c2 = CatLieModule::casimir_family(2).unwrap();
        for n in 0..=4 {
            assert_eq!(day_convolve(&CatLieModule::unit(), &c2, n).unwrap().dim(), c2.dim(n));
            assert_eq!(day_convolve(&c2, &CatLieModule::unit(), n).unwrap().dim(), c2.dim(n));
        }
    }

    #[test]
    fn product_of_two_points_is_free_on_two_inputs() {
        assert_eq!(day_convolve(&s1(), &s1(), 2).unwrap().dim(), 2);
        assert_eq!(day_convolve(&s1(), &s1(), 1).unwrap().dim(), 1);
    }

    #[test]
    fn tensor_forests_shift_the_second_factor() {
        let f = vec![RootedTree::bracket(RootedTree::leaf(0), RootedTree::leaf(1))];
        let t = tensor_forests(&f, 2, &identity_forest(2));
        assert_eq!(t.len(), 3);
        assert_eq!(t[2], RootedTree::leaf(3));
    }
}
