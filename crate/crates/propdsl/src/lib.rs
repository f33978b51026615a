//! A typed expression language for morphisms over the objects `{H, L}*`,
//! compiled to pipelines of primitive generator actions, with a checker
//! for the defining identities on any carrier.

pub mod axioms;
pub mod expr;
pub mod parse;
pub mod types;

pub use axioms::{
    adjoint_unit_axioms, all_axioms, axiom_check, carrier_supports, casimir_hopf_axioms, casimir_lie_axioms, find_axiom,
    hopf_axioms, inclusion_axioms, run, Axiom, AxiomReport, Carrier, CaseResult,
};
pub use expr::{Expr, Gen, Letter, ObjectWord};
pub use parse::parse;
pub use types::{compile, compile_str, typecheck, ActionPipeline, Prim, Step, Sym, TypeWord, Typing, AD_EXPANSION};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{name}' at {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("composition mismatch: {outer} expects {expects} but {inner} gives {gives}")]
    CompositionMismatch { outer: String, expects: String, inner: String, gives: String },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("generator {prim} is not supported on carrier {carrier}")]
    Unsupported { prim: String, carrier: String },
    #[error("{0}")]
    Carrier(String),
}
