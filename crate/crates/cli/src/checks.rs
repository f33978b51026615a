//! The verification checklist: one check per numbered claim, each with a
//! plain statement of what it establishes and a runtime budget.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{Debug, Display};
use std::time::Duration;

use anyhow::Result;
use diagrams::{enumerate_chords, four_t_relators, stu_closure_relators, ChordDiagram, DiagramVector};
use homspaces::{
    al0, as_ihx_rank, catass_operad_sum, catlie_surjection_sum, coend_induce, jac_space_cached, prop_hom, CatLieModule,
    LieCCarrier, MixedCarrier, PropCat,
};
use modwin::{
    build_window, canonical_generators, end_algebra, filtration_subspace, generated_submodule, identify_factors, q_d,
    submodule_lattice, symmetrizer_idempotent, window_axiom_check, window_certificate, EndOptions, WindowModule,
    WindowSpec, WindowSubmodule,
};
use propdsl::{all_axioms, axiom_check, carrier_supports, casimir_hopf_axioms, hopf_axioms, AxiomReport};
use ratlin::{quotient_dim, SparseVec, Q};
use serde_json::{json, Value};
use symgrp::{even_plethysm_parts, schur_dim, Partition};

/// Parameters a caller may narrow.
#[derive(Clone, Debug)]
pub struct Settings {
    /// Largest degree on the Casimir Lie side of the quadratic check.
    pub quadratic_dmax: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { quadratic_dmax: 3 }
    }
}

/// The result of running a check body.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    pub values: Value,
}

pub struct Check {
    pub id: &'static str,
    pub criterion: usize,
    pub anchor: &'static str,
    pub budget: Option<Duration>,
    pub run: fn(&Settings) -> Result<Outcome>,
}

/// Collects mismatches while a check runs.
#[derive(Default)]
struct Tally {
    compared: usize,
    failures: Vec<String>,
}

impl Tally {
    fn eq<T: PartialEq + Debug>(&mut self, what: impl Display, got: T, want: T) {
        self.compared += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn holds(&mut self, what: impl Display, ok: bool) {
        self.compared += 1;
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self, mut values: Value) -> Outcome {
        values["comparisons"] = json!(self.compared);
        values["failures"] = json!(self.failures);
        Outcome { passed: self.failures.is_empty(), values }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("a partition")
}

fn factor_set(parts: &[&[usize]]) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for p in parts {
        *out.entry(partition(p)).or_insert(0) += 1;
    }
    out
}

fn window(s: &str, n: usize) -> Result<WindowModule> {
    Ok(build_window(s.parse::<WindowSpec>()?, n)?)
}

fn basis_counts(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    for m in 0..=8u64 {
        for n in 0..=8 - m {
            let got = enumerate_chords(0, n as usize, m as usize).len() as u64;
            let want = if n == 0 { u64::from(m == 0) } else { factorial(m) * binom(m + n - 1, n - 1) };
            t.eq(format!("|C({m},{n})|"), got, want);
        }
    }
    let c22 = al0(2, 2)?.dim();
    t.eq("dim C(2,2)", c22, 6);
    Ok(t.finish(json!({ "range": "m+n ≤ 8", "dim_c22": c22 })))
}

fn prop_dims(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut rows = Vec::new();
    for m in 0..=5 {
        for n in 0..=5 {
            let ass = prop_hom(PropCat::CatAss, m, n)?.dim();
            let lie = prop_hom(PropCat::CatLie, m, n)?.dim();
            t.eq(format!("catAss({m},{n}) vs operad sum"), ass, catass_operad_sum(m, n));
            t.eq(format!("catLie({m},{n}) vs surjection sum"), lie, catlie_surjection_sum(m, n));
            t.eq(format!("catLie({m},{n}) vs AS-IHX rank"), lie, as_ihx_rank(m, n)?);
            if m < n {
                t.eq(format!("catLie({m},{n})"), lie, 0);
            }
            rows.push(json!({ "m": m, "n": n, "catass": ass, "catlie": lie }));
        }
    }
    Ok(t.finish(json!({ "table": rows })))
}

fn chord_quotient_dim(d: usize, n: usize, rels: &[DiagramVector]) -> Result<usize> {
    let basis = enumerate_chords(d, n, 0);
    let index: HashMap<&ChordDiagram, usize> = basis.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let coords = rels
        .iter()
        .map(|r| r.to_sparse(|x| index.get(x).copied()).ok_or_else(|| anyhow::anyhow!("relator leaves the basis at d={d} n={n}")))
        .collect::<Result<Vec<SparseVec>>>()?;
    let span: Vec<SparseVec> = (0..basis.len()).map(SparseVec::unit).collect();
    Ok(quotient_dim(basis.len(), &span, &coords)?)
}

fn stu_4t(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut cells: Vec<(usize, usize)> = (0..=3).flat_map(|d| (0..=2).map(move |n| (d, n))).collect();
    cells.extend((0..=2).map(|d| (d, 3)));
    let mut rows = Vec::new();
    for (d, n) in cells {
        let four_t = chord_quotient_dim(d, n, &four_t_relators(d, n, 0))?;
        let stu = chord_quotient_dim(d, n, &stu_closure_relators(d, n, 0, 1)?)?;
        t.eq(format!("d={d} n={n}"), four_t, stu);
        rows.push(json!({ "d": d, "n": n, "four_t": four_t, "stu": stu }));
    }
    Ok(t.finish(json!({ "cells": rows })))
}

/// Every window built by the checklist.
pub const AXIOM_WINDOWS: &[(&str, usize)] = &[
    ("A0modA2", 4),
    ("A1", 6),
    ("A2", 6),
    ("A0modA3", 6),
    ("A1modA3", 6),
    ("AQmodAQ3", 6),
    ("A2P", 6),
    ("A2Q", 6),
    ("A3Q", 6),
    ("A0modA4", 8),
    ("A2modA4", 8),
    ("AQmodAQ4", 8),
    ("AL1", 5),
    ("AL2", 5),
    ("AL1Q", 5),
    ("AL2Q", 5),
];

fn axioms(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut covered = BTreeSet::new();
    let mut rows = Vec::new();
    let mut record = |t: &mut Tally, r: AxiomReport, id: &'static str| {
        t.holds(r.to_string(), r.holds());
        covered.insert(id);
        rows.push(json!({ "identity": r.axiom, "carrier": r.carrier, "cases": r.cases.len(), "holds": r.holds() }));
    };
    for &(s, n) in AXIOM_WINDOWS {
        let m = window(s, n)?;
        for a in hopf_axioms().into_iter().chain(casimir_hopf_axioms()) {
            record(&mut t, window_axiom_check(&m, &a)?, a.id);
        }
    }
    let mixed = MixedCarrier::default();
    let lie = LieCCarrier::default();
    for a in all_axioms() {
        if carrier_supports(&mixed, &a)? {
            record(&mut t, axiom_check(&a, &mixed)?, a.id);
        }
        if carrier_supports(&lie, &a)? {
            record(&mut t, axiom_check(&a, &lie)?, a.id);
        }
    }
    for a in all_axioms() {
        t.holds(format!("{} is checked on some carrier", a.id), covered.contains(a.id));
    }
    Ok(t.finish(json!({ "windows": AXIOM_WINDOWS.len(), "checks": rows })))
}

fn degree_one(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let m = window("A1", 6)?;
    let want: Vec<usize> = (0..=6).map(|n| n * (n + 1) / 2).collect();
    t.eq("dims of A1", m.dims().to_vec(), want);
    let f = identify_factors(&m, &WindowSubmodule::full(&m), None, 4)?;
    t.eq("factors of A1", f.factors.clone(), factor_set(&[&[2]]));
    Ok(t.finish(json!({ "dims": m.dims(), "factors": f.to_string() })))
}

fn degree_two_split(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let m = window("A2", 6)?;
    let e = symmetrizer_idempotent(&m)?;
    t.holds("e∘e = e", e.is_idempotent());
    t.holds("e commutes with the action", e.commutes_with_actions(&m)?);
    let ranks: Vec<u64> = e.ranks().iter().map(|&r| r as u64).collect();
    t.eq("rank of e", ranks.clone(), (0..=6).map(|n| binom(n + 3, 4)).collect());
    let im = e.image()?;
    let ker = e.kernel();
    let fi = identify_factors(&m, &im, None, 4)?;
    let fk = identify_factors(&m, &ker, None, 4)?;
    t.eq("factors of im e", fi.factors.clone(), factor_set(&[&[4]]));
    t.eq("factors of ker e", fk.factors.clone(), factor_set(&[&[2, 2], &[1, 1, 1], &[2]]));
    let q = generated_submodule(&m, &[m.element_of(&q_d(2)?)?])?;
    t.holds("ker e is generated by Q₂", q == ker);
    let mut seeds = vec![im, ker];
    for k in 1..=3 {
        seeds.push(filtration_subspace(&m, 2, k)?);
    }
    for i in 0..m.dim(4) {
        let x = m.basis_element(4, i);
        let ex = e.apply(&x)?;
        let rest = x.add_scaled(&-Q::one(), &ex)?;
        for y in [x, ex, rest] {
            seeds.push(generated_submodule(&m, &[y])?);
        }
    }
    let lattice = submodule_lattice(&m, &seeds)?;
    t.eq("submodules", lattice.len(), 8);
    let end = end_algebra(&m, &EndOptions::default())?;
    t.eq("primitive idempotents", end.summary.primitive_idempotents, 2);
    Ok(t.finish(json!({
        "ranks": ranks,
        "image_factors": fi.to_string(),
        "kernel_factors": fk.to_string(),
        "submodules": lattice.len(),
        "submodule_dims": lattice.iter().map(WindowSubmodule::dims).collect::<Vec<_>>(),
        "idempotents": end.summary.primitive_idempotents,
    })))
}

fn degree_three_head(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let m = window("A3Q", 6)?;
    let u = generated_submodule(&m, m.generators())?;
    let l = filtration_subspace(&m, 3, 1)?;
    t.holds("A_{3,1} lies in A₃Q", u.contains_submodule(&l));
    let head = identify_factors(&m, &u, Some(&l), 6)?;
    t.eq("factors of A₃Q/A_{3,1}", head.factors.clone(), factor_set(&[&[4, 2], &[2, 2, 2]]));
    let want: Vec<u64> =
        (0..=6).map(|n| schur_dim(&partition(&[4, 2]), n) + schur_dim(&partition(&[2, 2, 2]), n)).collect();
    t.eq("graded dims", head.dims(), want);
    Ok(t.finish(json!({ "factors": head.to_string(), "dims": head.dims() })))
}

fn quadratic(s: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let a_max = s.quadratic_dmax.min(2);
    let cells = dayquad::presentation_report(s.quadratic_dmax, a_max, 4)?;
    for c in &cells {
        t.eq(format!("{}-side d={} n={}", c.side, c.d, c.n), c.quotient_dim, c.reference_dim);
    }
    for d in 2..=s.quadratic_dmax {
        for n in 0..=2 * d {
            t.holds(format!("r_s and r_c vanish in catLieC(0,{n})_{d}"), dayquad::relators_vanish(d, n)?);
        }
    }
    let rows: Vec<Value> = cells.iter().map(dayquad::QuadraticCell::to_json).collect();
    Ok(t.finish(json!({ "cells": rows })))
}

fn schur(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    for k in 0..=3 {
        for lambda in Partition::all(k) {
            let j = if k == 0 { CatLieModule::unit() } else { CatLieModule::specht(&lambda)? };
            for n in 0..=5 {
                let got = coend_induce(&j, n)?.dim() as u64;
                t.eq(format!("λ={lambda} n={n}"), got, schur_dim(&lambda, n));
            }
        }
    }
    Ok(t.finish(json!({ "range": "|λ| ≤ 3, n ≤ 5" })))
}

fn coend_factorization(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut rows = Vec::new();
    for d in 0..=2 {
        let c = CatLieModule::casimir_family(d)?;
        for n in 0..=4 {
            let induced = coend_induce(&c, n)?.dim();
            let direct = jac_space_cached(d, 0, n)?.dim();
            t.eq(format!("d={d} n={n}"), induced, direct);
            rows.push(json!({ "d": d, "n": n, "induced": induced, "direct": direct }));
        }
    }
    Ok(t.finish(json!({ "cells": rows })))
}

fn lie_split(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut rows = Vec::new();
    for d in 1..=2usize {
        let m = window(&format!("AL{d}"), 5)?;
        let e = symmetrizer_idempotent(&m)?;
        t.holds(format!("e∘e = e on AL{d}"), e.is_idempotent());
        let ranks: Vec<u64> = e.ranks().iter().map(|&r| r as u64).collect();
        let want: Vec<u64> = (0..=5).map(|n| binom(n + 2 * d as u64, 2 * d as u64 + 1)).collect();
        t.eq(format!("rank of e on AL{d}"), ranks.clone(), want);
        let g = canonical_generators(d);
        t.holds(format!("Q″ exists on AL{d} iff d ≥ 2"), g.q_double_prime.is_some() == (d >= 2));
        for (name, x) in [("Q′", g.q_prime), ("Q″", g.q_double_prime)] {
            if let Some(x) = x {
                t.holds(format!("{name}_{d} ∈ ker e"), e.apply(&m.element_of(&x)?)?.is_zero());
            }
        }
        let l = filtration_subspace(&m, d, 1)?;
        let head = identify_factors(&m, &WindowSubmodule::full(&m), Some(&l), 2 * d + 1)?;
        let want: Vec<u64> =
            (0..=5).map(|n| n as u64 * even_plethysm_parts(d).iter().map(|p| schur_dim(p, n)).sum::<u64>()).collect();
        t.eq(format!("head dims of AL{d}"), head.dims(), want);
        rows.push(json!({ "d": d, "ranks": ranks, "head_factors": head.to_string(), "head_dims": head.dims() }));
    }
    Ok(t.finish(json!({ "modules": rows })))
}

/// The windows certified by the checklist, each at `N = 2d′`.
pub const CERTIFIED_WINDOWS: &[&str] = &["A0modA2", "A0modA3", "A1modA3", "A2modA4", "AQmodAQ3", "AQmodAQ4"];

fn window_certificates(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let opts = EndOptions { stop_at_scalars: true, ..EndOptions::default() };
    let mut rows = Vec::new();
    for s in CERTIFIED_WINDOWS {
        let spec: WindowSpec = s.parse()?;
        let (_, _, hi) = spec.ambient();
        let c = window_certificate(spec, 2 * hi, &opts)?;
        t.holds(format!("{s}: {}", c.statement()), c.certifies_no_idempotent());
        t.holds(format!("{s} is labeled"), c.statement().starts_with("window certificate"));
        rows.push(c.to_json());
    }
    Ok(t.finish(json!({ "certificates": rows })))
}

fn lie_q_commutant(_: &Settings) -> Result<Outcome> {
    let mut t = Tally::default();
    let opts = EndOptions::default();
    let m = window("AL1Q", 5)?;
    let r = end_algebra(&m, &opts)?;
    t.holds("AL1Q has no nontrivial idempotent", !r.summary.has_nontrivial_idempotent());
    let experimental = match window("AL2Q", 5).and_then(|m| Ok(end_algebra(&m, &opts)?)) {
        Ok(r) => json!({ "module": "AL2Q", "window": 5, "end0_dim": r.dim(), "nontrivial_idempotent": r.summary.has_nontrivial_idempotent() }),
        Err(e) => json!({ "module": "AL2Q", "window": 5, "error": e.to_string() }),
    };
    Ok(t.finish(json!({ "AL1Q": r.to_json(), "experimental": experimental })))
}

/// The checklist in order.
pub fn all_checks() -> Vec<Check> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Check { id: "basis_counts", criterion: 1, anchor: "the chord word basis of C(m,n) has m!·binom(m+n−1,n−1) elements and C(2,2) has six", budget: secs(1), run: basis_counts },
        Check { id: "prop_dims", criterion: 2, anchor: "catAss and catLie hom-spaces have the operad, surjection and AS-IHX dimensions", budget: secs(10), run: prop_dims },
        Check { id: "stu_4t", criterion: 3, anchor: "the 4T quotient of chord diagrams equals the STU quotient of Jacobi diagrams", budget: secs(120), run: stu_4t },
        Check { id: "axioms", criterion: 4, anchor: "the Hopf, Casimir Hopf, Casimir Lie, inclusion and antipode identities hold as operator identities", budget: secs(120), run: axioms },
        Check { id: "degree_one", criterion: 5, anchor: "A₁ is S²∘𝔞^# with dimension n(n+1)/2", budget: None, run: degree_one },
        Check { id: "degree_two_split", criterion: 6, anchor: "A₂ = A₂P ⊕ A₂Q with A₂P simple of type (4) and eight submodules", budget: secs(300), run: degree_two_split },
        Check { id: "degree_three_head", criterion: 7, anchor: "the head A₃Q/A_{3,1} has factors (4,2) and (2,2,2)", budget: secs(900), run: degree_three_head },
        Check { id: "quadratic", criterion: 8, anchor: "the Casimir Lie and chord diagram algebras are quadratic over C₁ and A₁", budget: secs(600), run: quadratic },
        Check { id: "schur", criterion: 9, anchor: "inducing the Specht module S_λ gives the Schur functor S^λ", budget: secs(120), run: schur },
        Check { id: "coend_factorization", criterion: 10, anchor: "𝒜_d(0,−) is the coend of 𝒜^L_0 with C_d over catLie", budget: secs(300), run: coend_factorization },
        Check { id: "lie_split", criterion: 11, anchor: "the symmetrizer splits A^L_d with image of rank binom(n+2d,2d+1) and head S¹⊗(S^d∘S²)", budget: None, run: lie_split },
        Check { id: "window_certificates", criterion: 12, anchor: "window commutants of the truncations have no nontrivial idempotent", budget: secs(1200), run: window_certificates },
        Check { id: "lie_q_commutant", criterion: 13, anchor: "the commutant of A^L_1Q has no nontrivial idempotent", budget: None, run: lie_q_commutant },
    ]
}

/// Looks a check up by id or criterion number.
pub fn find_check(key: &str) -> Option<Check> {
    all_checks().into_iter().find(|c| c.id == key || c.criterion.to_string() == key)
}

/// Runs a check body, turning an error into a failure that carries it.
pub fn run_check(c: &Check, s: &Settings) -> Outcome {
    match (c.run)(s) {
        Ok(o) => o,
        Err(e) => Outcome { passed: false, values: json!({ "error": format!("{e:#}") }) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_criteria_are_unique() {
        let checks = all_checks();
        let ids: BTreeSet<_> = checks.iter().map(|c| c.id).collect();
        let nums: BTreeSet<_> = checks.iter().map(|c| c.criterion).collect();
        assert_eq!(ids.len(), checks.len());
        assert_eq!(nums, (1..=13).collect());
    }

    #[test]
    fn lookup_by_number_or_id() {
        assert_eq!(find_check("8").unwrap().id, "quadratic");
        assert_eq!(find_check("axioms").unwrap().criterion, 4);
        assert!(find_check("nothing").is_none());
    }

    #[test]
    fn tally_records_mismatches() {
        let mut t = Tally::default();
        t.eq("a", 1, 1);
        t.eq("b", 1, 2);
        let o = t.finish(json!({}));
        assert!(!o.passed);
        assert_eq!(o.values["comparisons"], 2);
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(7, 4), 35);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(factorial(5), 120);
    }

    #[test]
    fn fast_checks_pass() {
        for id in ["basis_counts", "schur"] {
            let c = find_check(id).unwrap();
            let o = run_check(&c, &Settings::default());
            assert!(o.passed, "{id}: {}", o.values);
        }
    }

    #[test]
    fn errors_become_failures() {
        let c = Check { id: "x", criterion: 0, anchor: "", budget: None, run: |_| Err(anyhow::anyhow!("boom")) };
        let o = run_check(&c, &Settings::default());
        assert!(!o.passed);
        assert_eq!(o.values["error"], "boom");
    }
}
