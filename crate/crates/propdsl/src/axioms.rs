//! Carriers on which compiled morphisms act, the defining identities, and
//! their mechanical verification.

use std::fmt;

use ratlin::Q;

use crate::expr::ObjectWord;
use crate::types::{compile_str, ActionPipeline, Prim};
use crate::DslError;

/// A family of spaces on which primitive generators act.
///
/// Elements carry their own output word; `apply` acts at a position of
/// that word.
pub trait Carrier {
    type Elem: Clone;

    fn name(&self) -> String;

    fn supports(&self, prim: &Prim) -> bool;

    fn apply(&self, prim: &Prim, offset: usize, x: &Self::Elem) -> Result<Self::Elem, DslError>;

    /// `Σ c_k x_k`; an empty list is the zero element.
    fn combine(&self, terms: &[(Q, Self::Elem)]) -> Result<Self::Elem, DslError>;

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool, DslError>;

    /// Test inputs for a morphism with the given source: each is a labeled
    /// element together with the offset at which the source word sits.
    fn inputs(&self, source: &ObjectWord) -> Result<Vec<(String, Self::Elem, usize)>, DslError>;

    fn describe(&self, x: &Self::Elem) -> String;
}

/// Runs a pipeline on `x` with its source placed at `offset`.
pub fn run<C: Carrier>(c: &C, p: &ActionPipeline, offset: usize, x: &C::Elem) -> Result<C::Elem, DslError> {
    let mut cur = x.clone();
    for s in &p.steps {
        if !c.supports(&s.prim) {
            return Err(DslError::Unsupported { prim: s.prim.to_string(), carrier: c.name() });
        }
        cur = c.apply(&s.prim, offset + s.offset, &cur)?;
    }
    Ok(cur)
}

/// A signed sum of expressions.
pub type Side = Vec<(i64, &'static str)>;

/// An identity `lhs = rhs` between morphisms.
#[derive(Clone, Debug)]
pub struct Axiom {
    pub id: &'static str,
    pub anchor: &'static str,
    pub lhs: Side,
    pub rhs: Side,
}

fn ax(id: &'static str, anchor: &'static str, lhs: Side, rhs: Side) -> Axiom {
    Axiom { id, anchor, lhs, rhs }
}

/// Hopf algebra identities.
pub fn hopf_axioms() -> Vec<Axiom> {
    vec![
        ax("assoc", "μ(μ⊗id) = μ(id⊗μ)", vec![(1, "mu . (mu * id(H))")], vec![(1, "mu . (id(H) * mu)")]),
        ax("unit", "μ(η⊗id) = id = μ(id⊗η)", vec![(1, "mu . (eta * id(H))")], vec![(1, "mu . (id(H) * eta)")]),
        ax("unit_id", "μ(η⊗id) = id", vec![(1, "mu . (eta * id(H))")], vec![(1, "id(H)")]),
        ax("coassoc", "(Δ⊗id)Δ = (id⊗Δ)Δ", vec![(1, "(delta * id(H)) . delta")], vec![(1, "(id(H) * delta) . delta")]),
        ax("counit", "(ε⊗id)Δ = id", vec![(1, "(eps * id(H)) . delta")], vec![(1, "id(H)")]),
        ax("counit_r", "(id⊗ε)Δ = id", vec![(1, "(id(H) * eps) . delta")], vec![(1, "id(H)")]),
        ax(
            "bialgebra",
            "Δμ = (μ⊗μ)(id⊗P⊗id)(Δ⊗Δ)",
            vec![(1, "delta . mu")],
            vec![(1, "(mu * mu) . (id(H) * P(1 2) * id(H)) . (delta * delta)")],
        ),
        ax("eps_mu", "εμ = ε⊗ε", vec![(1, "eps . mu")], vec![(1, "eps * eps")]),
        ax("delta_eta", "Δη = η⊗η", vec![(1, "delta . eta")], vec![(1, "eta * eta")]),
        ax("cocomm", "P_{H,H}Δ = Δ", vec![(1, "P(1 2) . delta")], vec![(1, "delta")]),
        ax("antipode", "μ(id⊗S)Δ = ηε", vec![(1, "mu . (id(H) * S) . delta")], vec![(1, "eta . eps")]),
        ax("antipode_l", "μ(S⊗id)Δ = ηε", vec![(1, "mu . (S * id(H)) . delta")], vec![(1, "eta . eps")]),
    ]
}

/// Identities involving the Casimir 2-tensor `c̃`.
pub fn casimir_hopf_axioms() -> Vec<Axiom> {
    vec![
        ax(
            "coprod_cas",
            "(Δ⊗id)c̃ = (id⊗η⊗id)c̃ + η⊗c̃",
            vec![(1, "(delta * id(H)) . cas")],
            vec![(1, "(id(H) * eta * id(H)) . cas"), (1, "eta * cas")],
        ),
        ax("cas_sym", "P_{H,H}c̃ = c̃", vec![(1, "P(1 2) . cas")], vec![(1, "cas")]),
        ax(
            "cas_ad",
            "(ad⊗ad)(id⊗P⊗id)(Δ⊗c̃) = c̃ε",
            vec![(1, "(ad * ad) . (id(H) * P(1 2) * id(H)) . (delta * cas)")],
            vec![(1, "cas . eps")],
        ),
    ]
}

/// Identities of the Casimir Lie algebra `(L, [,], c)`.
pub fn casimir_lie_axioms() -> Vec<Axiom> {
    vec![
        ax("lie_as", "[,]P = −[,]", vec![(1, "br . P(1 2)")], vec![(-1, "br")]),
        ax(
            "lie_jacobi",
            "Jacobi identity",
            vec![(1, "br . (br * id(L))"), (1, "br . (br * id(L)) . P(1 2 3)"), (1, "br . (br * id(L)) . P(1 3 2)")],
            vec![],
        ),
        ax("c_sym", "P_{L,L}c = c", vec![(1, "P(1 2) . c")], vec![(1, "c")]),
        ax(
            "lie_cas",
            "([,]⊗id)(id⊗c) = (id⊗[,])(c⊗id)",
            vec![(1, "(br * id(L)) . (id(L) * c)")],
            vec![(1, "(id(L) * br) . (c * id(L))")],
        ),
    ]
}

/// Relations involving `i : L → H`.
pub fn inclusion_axioms() -> Vec<Axiom> {
    vec![
        ax("al1", "i[·,·] = −μ(i⊗i) + μP_{H,H}(i⊗i)", vec![(1, "i . br")], vec![(-1, "mu . (i * i)"), (1, "mu . P(1 2) . (i * i)")]),
        ax("al2", "Δi = i⊗η + η⊗i", vec![(1, "delta . i")], vec![(1, "i * eta"), (1, "eta * i")]),
        ax("al3", "εi = 0", vec![(1, "eps . i")], vec![]),
        ax("al4", "Si = −i", vec![(1, "S . i")], vec![(-1, "i")]),
        ax("cas_from_c", "c̃ = i^{⊗2}c", vec![(1, "cas")], vec![(1, "(i * i) . c")]),
    ]
}

/// `ad_L` restricted to the unit: `ad_L(η⊗id_L) = id_L`.
pub fn adjoint_unit_axioms() -> Vec<Axiom> {
    vec![ax("adl_unit", "ad_L(η⊗id_L) = id_L", vec![(1, "adL . (eta * id(L))")], vec![(1, "id(L)")])]
}

/// Every identity known to the checker.
pub fn all_axioms() -> Vec<Axiom> {
    let mut v = hopf_axioms();
    v.extend(casimir_hopf_axioms());
    v.extend(casimir_lie_axioms());
    v.extend(inclusion_axioms());
    v.extend(adjoint_unit_axioms());
    v
}

pub fn find_axiom(id: &str) -> Option<Axiom> {
    all_axioms().into_iter().find(|a| a.id == id)
}

/// Outcome on a single test input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub equal: bool,
    pub witness: Option<String>,
}

/// Outcome of checking one identity on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: String,
    pub carrier: String,
    pub cases: Vec<CaseResult>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.cases.iter().all(|c| c.equal)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bad = self.cases.iter().filter(|c| !c.equal).count();
        write!(f, "{} on {}: {} cases, {} unequal", self.axiom, self.carrier, self.cases.len(), bad)
    }
}

fn compile_side(side: &Side) -> Result<Vec<(Q, ActionPipeline)>, DslError> {
    side.iter().map(|(c, s)| Ok((Q::from_int(*c), compile_str(s)?))).collect()
}

/// Whether every primitive used by the identity is available on `c`.
pub fn carrier_supports<C: Carrier>(c: &C, a: &Axiom) -> Result<bool, DslError> {
    for (_, p) in compile_side(&a.lhs)?.iter().chain(compile_side(&a.rhs)?.iter()) {
        if p.steps.iter().any(|s| !c.supports(&s.prim)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates both sides on every test input of the carrier.
pub fn axiom_check<C: Carrier>(a: &Axiom, c: &C) -> Result<AxiomReport, DslError> {
    let lhs = compile_side(&a.lhs)?;
    let rhs = compile_side(&a.rhs)?;
    let all: Vec<&ActionPipeline> = lhs.iter().chain(rhs.iter()).map(|(_, p)| p).collect();
    let first = all.first().ok_or_else(|| DslError::Carrier(format!("{}: empty identity", a.id)))?;
    for p in &all {
        if p.source.len() != first.source.len() || p.target.len() != first.target.len() || p.degree != first.degree {
            return Err(DslError::Carrier(format!("{}: sides have different types", a.id)));
        }
    }
    let source = all
        .iter()
        .find_map(|p| p.source.concrete())
        .ok_or_else(|| DslError::Carrier(format!("{}: source word is not determined", a.id)))?;
    let mut cases = Vec::new();
    for (label, x, off) in c.inputs(&source)? {
        let eval = |side: &[(Q, ActionPipeline)]| -> Result<C::Elem, DslError> {
            let terms = side.iter().map(|(k, p)| Ok((k.clone(), run(c, p, off, &x)?))).collect::<Result<Vec<_>, DslError>>()?;
            c.combine(&terms)
        };
        let (l, r) = (eval(&lhs)?, eval(&rhs)?);
        let equal = c.equal(&l, &r)?;
        let witness = (!equal).then(|| format!("input {}: lhs {} vs rhs {}", c.describe(&x), c.describe(&l), c.describe(&r)));
        cases.push(CaseResult { label, equal, witness });
    }
    Ok(AxiomReport { axiom: a.id.to_string(), carrier: c.name(), cases })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::typecheck;
    use crate::parse::parse;

    #[test]
    fn both_sides_typecheck_alike() {
        for a in all_axioms() {
            let types: Vec<_> = a.lhs.iter().chain(a.rhs.iter()).map(|(_, s)| typecheck(&parse(s).unwrap()).unwrap()).collect();
            for t in &types {
                assert_eq!(t.source.len(), types[0].source.len(), "{}", a.id);
                assert_eq!(t.target.len(), types[0].target.len(), "{}", a.id);
                assert_eq!(t.degree, types[0].degree, "{}", a.id);
            }
        }
    }
}
