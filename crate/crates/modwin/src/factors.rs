//! Composition factors `S^λ∘𝔞^#` of window subquotients from the
//! `S_n`-multiplicity tables at every arity.

use std::collections::BTreeMap;
use std::fmt;

use ratlin::{Echelon, SparseVec, Subquotient, Subspace, Q};
use symgrp::{decompose_character, schur_restriction, Partition, Perm};

use crate::submodule::WindowSubmodule;
use crate::window::{Gen, WindowModule};
use crate::WinError;

/// The `S_n`-multiplicities of `U(n)/V(n)` for `n ≤ N` and the factors
/// `⊕ a_λ S^λ∘𝔞^#` matching them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorTable {
    pub table: Vec<BTreeMap<Partition, usize>>,
    pub factors: BTreeMap<Partition, usize>,
}

impl FactorTable {
    /// Dimensions of the subquotient per arity.
    pub fn dims(&self) -> Vec<u64> {
        self.table
            .iter()
            .map(|t| t.iter().map(|(l, k)| symgrp::specht_dim(l) * *k as u64).sum())
            .collect()
    }

    /// The factors as a list, repeated by multiplicity.
    pub fn factor_list(&self) -> Vec<Partition> {
        self.factors.iter().flat_map(|(l, k)| std::iter::repeat_n(l.clone(), *k)).collect()
    }
}

fn show_table(t: &[BTreeMap<Partition, usize>]) -> String {
    t.iter()
        .enumerate()
        .map(|(n, row)| {
            let parts: Vec<String> = row.iter().map(|(l, k)| format!("{k}×{l}")).collect();
            format!("n={n}: {}", parts.join(" + "))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

impl fmt::Display for FactorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|(l, k)| if *k == 1 { format!("{l}") } else { format!("{k}×{l}") }).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The `S_n`-multiplicities of `U(n)/V(n)`, from traces of permutations.
pub fn sn_multiplicities(
    m: &WindowModule,
    upper: &WindowSubmodule,
    lower: Option<&WindowSubmodule>,
    n: usize,
) -> Result<BTreeMap<Partition, usize>, WinError> {
    let zero = Subspace::zero(m.dim(n));
    let sq = Subquotient::new(&upper.parts[n], lower.map_or(&zero, |l| &l.parts[n]))?;
    let mut values = BTreeMap::new();
    for mu in Partition::all(n) {
        let sigma = Perm::class_representative(&mu);
        let f = if n == 0 { ratlin::LinearMap::identity(m.dim(0)) } else { m.gen_matrix(&Gen::Perm(sigma), n)? };
        values.insert(mu, sq.trace(|v| f.apply(v))?);
    }
    decompose_character(n, &values).map_err(|e| WinError::NoMatch(e.to_string()))
}

/// Finds the unique `a_λ ≥ 0`, `|λ| ≤ max_size`, with
/// `U(n)/V(n) ≅ ⊕ a_λ S^λ(K^n)` as `S_n`-representations for every
/// `n ≤ N`. Fails with the raw table when the match is not unique or not a
/// nonnegative integer vector.
pub fn identify_factors(
    m: &WindowModule,
    upper: &WindowSubmodule,
    lower: Option<&WindowSubmodule>,
    max_size: usize,
) -> Result<FactorTable, WinError> {
    let table = (0..=m.window()).map(|n| sn_multiplicities(m, upper, lower, n)).collect::<Result<Vec<_>, _>>()?;
    let factors = fit(&table, max_size).map_err(|e| WinError::NoMatch(format!("{e}; table {}", show_table(&table))))?;
    Ok(FactorTable { table, factors })
}

fn fit(table: &[BTreeMap<Partition, usize>], max_size: usize) -> Result<BTreeMap<Partition, usize>, String> {
    let n_max = table.len() - 1;
    let cands: Vec<Partition> = (0..=max_size).flat_map(Partition::all).filter(|l| l.len() <= n_max).collect();
    let rhs = cands.len();
    let mut ech = Echelon::new(rhs + 1);
    for (n, row) in table.iter().enumerate() {
        let restr: Vec<BTreeMap<Partition, usize>> = cands.iter().map(|l| schur_restriction(l, n)).collect();
        for mu in Partition::all(n) {
            let mut pairs: Vec<(usize, Q)> =
                restr.iter().enumerate().filter_map(|(j, r)| r.get(&mu).map(|&k| (j, Q::from_int(k as i64)))).collect();
            let b = row.get(&mu).copied().unwrap_or(0);
            if b > 0 {
                pairs.push((rhs, Q::from_int(-(b as i64))));
            }
            ech.insert(&SparseVec::from_pairs(pairs)).expect("row inside the system");
        }
    }
    let sol = ech.into_subspace();
    if sol.pivots().contains(&rhs) {
        return Err("no combination of Schur functors matches".into());
    }
    if sol.dim() < rhs {
        return Err(format!("the table does not determine the factors ({} unknowns, rank {})", rhs, sol.dim()));
    }
    let mut out = BTreeMap::new();
    for (row, &p) in sol.basis().iter().zip(sol.pivots().iter()) {
        let a = -row.get(rhs);
        match a.to_i64() {
            Some(k) if k >= 0 => {
                if k > 0 {
                    out.insert(cands[p].clone(), k as usize);
                }
            }
            _ => return Err(format!("coefficient {a} of {} is not a nonnegative integer", cands[p])),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_a_sum_of_schur_functors() {
        let lambdas = [Partition::new(vec![2, 2]).unwrap(), Partition::new(vec![1, 1, 1]).unwrap(), Partition::new(vec![2]).unwrap()];
        let table: Vec<BTreeMap<Partition, usize>> = (0..=5)
            .map(|n| {
                let mut t = BTreeMap::new();
                for l in &lambdas {
                    for (mu, k) in schur_restriction(l, n) {
                        *t.entry(mu).or_insert(0) += k;
                    }
                }
                t
            })
            .collect();
        let got = fit(&table, 4).unwrap();
        assert_eq!(got.len(), 3);
        assert!(lambdas.iter().all(|l| got[l] == 1));
    }
}
