//! Window-truncated modules over the chord diagram categories: the spaces
//! `M(0..N)` of a functor module restricted to a range of degrees, exact
//! generator actions, submodules, filtrations, endomorphism algebras and
//! composition factors.

pub mod carrier;
pub mod endo;
pub mod factors;
pub mod generators;
pub mod report;
pub mod spec;
pub mod submodule;
pub mod window;

pub use carrier::{window_axiom_check, WindowCarrier};
pub use endo::{end_algebra, window_certificate, AlgebraSummary, EndOptions, EndResult, WindowCertificate};
pub use factors::{identify_factors, sn_multiplicities, FactorTable};
pub use generators::{canonical_generators, p_d, p_l, q_d, q_double_prime, q_prime, symmetrizer_idempotent, CanonicalGenerators};
pub use report::module_report;
pub use spec::WindowSpec;
pub use submodule::{filtration_subspace, generated_submodule, submodule_lattice, WindowSubmodule};
pub use window::{build_window, Element, Gen, WindowMap, WindowModule};

use homspaces::HomError;
use ratlin::LinError;

#[derive(Debug, thiserror::Error)]
pub enum WinError {
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("arity {0} lies outside the window")]
    OutOfWindow(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("axiom {0} fails on the window")]
    Axiom(String),
    #[error("the map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("endomorphism algebra has dimension {0}: window too rich; raise bound")]
    TooRich(usize),
    #[error("no consistent factor match: {0}")]
    NoMatch(String),
    #[error("idempotent analysis unsupported: {0}")]
    Unsupported(String),
}
