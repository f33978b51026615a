//! Carriers for the identity checker: Jacobi diagrams with strand and
//! L-outputs, and Casimir Lie forests.

use std::collections::BTreeMap;

use diagrams::{normalize_all, JacobiDiagram, LinComb, RootedTree, Site};
use propdsl::{Carrier, DslError, Letter, ObjectWord, Prim};
use ratlin::Q;
use symgrp::Perm;

use crate::cache::{clc0_cached, jac_space_cached};
use crate::HomError;

fn dsl(e: impl std::fmt::Display) -> DslError {
    DslError::Carrier(e.to_string())
}

impl From<HomError> for DslError {
    fn from(e: HomError) -> Self {
        dsl(e)
    }
}

/// Elements of `𝒜^L(L^m, w)` for words `w` in `H` and `L`, as sums of
/// Jacobi diagrams. Equality closes every L-output with `i`, normalizes by
/// STU and compares modulo 4T.
#[derive(Clone, Debug)]
pub struct MixedCarrier {
    pub max_degree: usize,
    pub max_upper: usize,
    pub extra_strands: usize,
}

impl Default for MixedCarrier {
    fn default() -> Self {
        MixedCarrier { max_degree: 1, max_upper: 1, extra_strands: 1 }
    }
}

pub type MixedElem = Vec<(Q, JacobiDiagram)>;

impl MixedCarrier {
    fn close(x: &MixedElem) -> Result<MixedElem, DslError> {
        x.iter()
            .map(|(c, j)| {
                let mut j = j.clone();
                let roots: Vec<usize> =
                    j.bottom().iter().enumerate().filter(|(_, s)| matches!(s, Site::Root(_))).map(|(i, _)| i).collect();
                for i in roots {
                    j.inclusion(i).map_err(dsl)?;
                }
                Ok((c.clone(), j))
            })
            .collect()
    }

    /// Quotient coordinates of `x`, grouped by shape `(degree, upper, strands)`.
    fn reduce(&self, x: &MixedElem) -> Result<BTreeMap<(usize, usize, usize), ratlin::SparseVec>, DslError> {
        let v = normalize_all(&Self::close(x)?).map_err(dsl)?;
        let mut groups: BTreeMap<(usize, usize, usize), diagrams::DiagramVector> = BTreeMap::new();
        for (d, c) in v.iter() {
            groups.entry((d.degree(), d.n_upper(), d.n_strands())).or_default().add_term(d.clone(), c);
        }
        groups
            .into_iter()
            .map(|(k, g)| {
                let sp = jac_space_cached(k.0, k.1, k.2)?;
                Ok((k, sp.nf(&g)?))
            })
            .collect()
    }
}

impl Carrier for MixedCarrier {
    type Elem = MixedElem;

    fn name(&self) -> String {
        "jacobi".into()
    }

    fn supports(&self, p: &Prim) -> bool {
        !matches!(p, Prim::AdL)
    }

    fn apply(&self, p: &Prim, o: usize, x: &MixedElem) -> Result<MixedElem, DslError> {
        let mut out = Vec::with_capacity(x.len());
        for (c, j) in x {
            let mut j = j.clone();
            match p {
                Prim::Mu => j.mu(o).map_err(dsl)?,
                Prim::Eta => j.eta(o).map_err(dsl)?,
                Prim::Delta => {
                    out.extend(j.delta(o).map_err(dsl)?.into_iter().map(|d| (c.clone(), d)));
                    continue;
                }
                Prim::Eps => {
                    if !j.eps(o).map_err(dsl)? {
                        continue;
                    }
                }
                Prim::Antipode => {
                    let s = j.antipode(o).map_err(dsl)?;
                    out.push((c * &Q::from_int(s), j));
                    continue;
                }
                Prim::Perm(s) => j.permute(o, s).map_err(dsl)?,
                Prim::Cas => j.casimir(o).map_err(dsl)?,
                Prim::Bracket => j.bracket(o).map_err(dsl)?,
                Prim::LieCas => j.lie_casimir(o).map_err(dsl)?,
                Prim::Incl => j.inclusion(o).map_err(dsl)?,
                Prim::AdL => return Err(DslError::Unsupported { prim: p.to_string(), carrier: self.name() }),
            }
            out.push((c.clone(), j));
        }
        Ok(out)
    }

    fn combine(&self, terms: &[(Q, MixedElem)]) -> Result<MixedElem, DslError> {
        Ok(terms.iter().flat_map(|(k, x)| x.iter().map(move |(c, j)| (k * c, j.clone()))).collect())
    }

    fn equal(&self, a: &MixedElem, b: &MixedElem) -> Result<bool, DslError> {
        let neg: MixedElem = b.iter().map(|(c, j)| (-c, j.clone())).collect();
        let diff = [a.clone(), neg].concat();
        Ok(self.reduce(&diff)?.values().all(|v| v.is_zero()))
    }

    fn inputs(&self, source: &ObjectWord) -> Result<Vec<(String, MixedElem, usize)>, DslError> {
        let k_l = source.count(Letter::L);
        let k_h = source.count(Letter::H);
        let mut out = Vec::new();
        for extra in 0..=self.extra_strands {
            let n = k_h + extra;
            for d in 0..=self.max_degree {
                for m in 0..=self.max_upper {
                    let sp = jac_space_cached(d, m, n)?;
                    for x in sp.basis() {
                        let j = JacobiDiagram::identity_l(k_l).tensor(&JacobiDiagram::from_chord(x));
                        let j = arrange(j, source)?;
                        for off in 0..=extra {
                            let mut jj = j.clone();
                            if off > 0 {
                                // Move `off` trailing strands in front of the source sites.
                                let width = source.len() + off;
                                let images: Vec<usize> = (0..width).map(|i| (i + off) % width).collect();
                                jj.permute(0, &Perm::from_images(images).map_err(dsl)?).map_err(dsl)?;
                            }
                            out.push((format!("d={d} m={m} n={n} off={off}"), vec![(Q::one(), jj)], off));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn describe(&self, x: &MixedElem) -> String {
        match self.reduce(x) {
            Ok(g) => {
                let parts: Vec<String> =
                    g.iter().map(|((d, m, n), v)| format!("[d={d} m={m} n={n}: {} nonzero coords]", v.nnz())).collect();
                format!("{} terms {}", x.len(), parts.join(" "))
            }
            Err(e) => format!("{} terms ({e})", x.len()),
        }
    }
}

/// Reorders the sites of `identity_l(k_L) ⊗ x` so the first `|w|` sites
/// follow the letters of `w`.
fn arrange(j: JacobiDiagram, w: &ObjectWord) -> Result<JacobiDiagram, DslError> {
    let total = j.bottom().len();
    let k_l = w.count(Letter::L);
    let (mut next_l, mut next_h) = (0, k_l);
    let mut images = vec![0; total];
    for (pos, l) in w.letters().iter().enumerate() {
        let src = match l {
            Letter::L => {
                next_l += 1;
                next_l - 1
            }
            Letter::H => {
                next_h += 1;
                next_h - 1
            }
        };
        images[src] = pos;
    }
    for (k, src) in (next_h..total).enumerate() {
        images[src] = w.len() + k;
    }
    let mut j = j;
    j.permute(0, &Perm::from_images(images).map_err(dsl)?).map_err(dsl)?;
    Ok(j)
}

/// An output slot of a Casimir Lie forest: the unit of `H`, or a Lie tree
/// whose leaves are Casimir ends; leaves `2k, 2k+1` form the `k`-th pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Slot {
    Unit,
    Tree(RootedTree),
}

pub type LieCElem = LinComb<Vec<Slot>>;

/// `catLieC(0, −)` with unit slots for `η`: supports brackets, the Lie
/// Casimir, symmetries, `η` and `ad_L` on a unit slot.
#[derive(Clone, Debug)]
pub struct LieCCarrier {
    pub max_degree: usize,
    pub extra_outputs: usize,
}

impl Default for LieCCarrier {
    fn default() -> Self {
        LieCCarrier { max_degree: 2, extra_outputs: 1 }
    }
}

fn n_leaves(slots: &[Slot]) -> usize {
    slots
        .iter()
        .map(|s| match s {
            Slot::Unit => 0,
            Slot::Tree(t) => t.n_leaves(),
        })
        .sum()
}

impl LieCCarrier {
    fn apply_one(&self, p: &Prim, o: usize, slots: &[Slot]) -> Result<Vec<Slot>, DslError> {
        let bad = |msg: &str| DslError::Carrier(format!("{p} at {o}: {msg}"));
        let mut s = slots.to_vec();
        match p {
            Prim::Eta => {
                if o > s.len() {
                    return Err(bad("offset out of range"));
                }
                s.insert(o, Slot::Unit);
            }
            Prim::Perm(sigma) => {
                let k = sigma.degree();
                if o + k > s.len() {
                    return Err(bad("offset out of range"));
                }
                let old = s[o..o + k].to_vec();
                for (j, x) in old.into_iter().enumerate() {
                    s[o + sigma.image(j)] = x;
                }
            }
            Prim::Bracket => match (s.get(o).cloned(), s.get(o + 1).cloned()) {
                (Some(Slot::Tree(a)), Some(Slot::Tree(b))) => {
                    s[o] = Slot::Tree(RootedTree::bracket(a, b));
                    s.remove(o + 1);
                }
                _ => return Err(bad("needs two L-outputs")),
            },
            Prim::LieCas => {
                if o > s.len() {
                    return Err(bad("offset out of range"));
                }
                let k = n_leaves(&s);
                s.insert(o, Slot::Tree(RootedTree::leaf(k)));
                s.insert(o + 1, Slot::Tree(RootedTree::leaf(k + 1)));
            }
            Prim::AdL => match (s.get(o), s.get(o + 1)) {
                (Some(Slot::Unit), Some(Slot::Tree(_))) => {
                    s.remove(o);
                }
                _ => return Err(bad("only defined on a unit followed by an L-output")),
            },
            _ => return Err(DslError::Unsupported { prim: p.to_string(), carrier: self.name() }),
        }
        Ok(s)
    }

    fn reduce(&self, x: &LieCElem) -> Result<BTreeMap<(usize, usize), ratlin::SparseVec>, DslError> {
        type Forests = Vec<(Q, Vec<RootedTree>)>;
        let mut groups: BTreeMap<(usize, usize), Forests> = BTreeMap::new();
        for (slots, c) in x.iter() {
            let trees = slots
                .iter()
                .map(|s| match s {
                    Slot::Tree(t) => Ok(t.clone()),
                    Slot::Unit => Err(DslError::Carrier("unit output cannot be compared".into())),
                })
                .collect::<Result<Vec<_>, _>>()?;
            groups.entry((trees.len(), n_leaves(slots) / 2)).or_default().push((c.clone(), trees));
        }
        groups
            .into_iter()
            .map(|((n, d), terms)| {
                let sp = clc0_cached(n, d)?;
                let mut acc = ratlin::Accumulator::new();
                for (c, f) in &terms {
                    acc.add_vec(c, &sp.nf_forest(f)?);
                }
                Ok(((n, d), acc.finish()))
            })
            .collect()
    }
}

impl Carrier for LieCCarrier {
    type Elem = LieCElem;

    fn name(&self) -> String {
        "casimir-lie".into()
    }

    fn supports(&self, p: &Prim) -> bool {
        matches!(p, Prim::Eta | Prim::Perm(_) | Prim::Bracket | Prim::LieCas | Prim::AdL)
    }

    fn apply(&self, p: &Prim, o: usize, x: &LieCElem) -> Result<LieCElem, DslError> {
        let mut out = LieCElem::new();
        for (slots, c) in x.iter() {
            out.add_term(self.apply_one(p, o, slots)?, c);
        }
        Ok(out)
    }

    fn combine(&self, terms: &[(Q, LieCElem)]) -> Result<LieCElem, DslError> {
        let mut out = LieCElem::new();
        for (k, x) in terms {
            out.add_scaled(k, x);
        }
        Ok(out)
    }

    fn equal(&self, a: &LieCElem, b: &LieCElem) -> Result<bool, DslError> {
        Ok(self.reduce(&a.minus(b))?.values().all(|v| v.is_zero()))
    }

    fn inputs(&self, source: &ObjectWord) -> Result<Vec<(String, LieCElem, usize)>, DslError> {
        if source.count(Letter::H) > 0 {
            return Err(DslError::Carrier("casimir-lie inputs have L-outputs only".into()));
        }
        let a = source.len();
        let mut out = Vec::new();
        for extra in 0..=self.extra_outputs {
            for d in 0..=self.max_degree {
                let sp = clc0_cached(a + extra, d)?;
                for f in sp.basis_forests() {
                    let slots: Vec<Slot> = f.into_iter().map(Slot::Tree).collect();
                    for off in 0..=extra {
                        out.push((format!("d={d} n={} off={off}", a + extra), LieCElem::single(slots.clone()), off));
                    }
                }
            }
        }
        Ok(out)
    }

    fn describe(&self, x: &LieCElem) -> String {
        match self.reduce(x) {
            Ok(g) => {
                let parts: Vec<String> = g.iter().map(|((n, d), v)| format!("[n={n} d={d}: {} nonzero coords]", v.nnz())).collect();
                format!("{} terms {}", x.len(), parts.join(" "))
            }
            Err(e) => format!("{} terms ({e})", x.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use propdsl::{axiom_check, carrier_supports, find_axiom};

    #[test]
    fn lie_bracket_relations_hold_in_clc() {
        let c = LieCCarrier::default();
        for id in ["lie_as", "lie_jacobi", "c_sym", "lie_cas", "adl_unit"] {
            let a = find_axiom(id).unwrap();
            assert!(carrier_supports(&c, &a).unwrap(), "{id}");
            let r = axiom_check(&a, &c).unwrap();
            assert!(r.holds(), "{r}");
            assert!(!r.cases.is_empty());
        }
    }

    #[test]
    fn inclusion_relation_holds_on_jacobi_diagrams() {
        let c = MixedCarrier::default();
        let r = axiom_check(&find_axiom("al1").unwrap(), &c).unwrap();
        assert!(r.holds(), "{r}");
    }
}
