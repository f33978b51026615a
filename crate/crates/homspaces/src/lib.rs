//! Presented models of finite-dimensional hom-spaces: the PROPs of
//! associative and Lie algebras, Casimir Lie diagrams, chord diagram spaces
//! modulo 4T, and induction of catLie-modules along the coend.

pub mod cache;
pub mod carriers;
pub mod clc;
pub mod coend;
pub mod jac;
pub mod model;
pub mod prop;

pub use cache::{cached_summary, clc0_cached, jac_space_cached, DiskCache};
pub use carriers::{LieCCarrier, LieCElem, MixedCarrier, Slot};
pub use clc::{clc0, matchings, wreath_generators, Clc0};
pub use coend::{coend_induce, coend_induce_with, CatLieModule, CoendKey, ExtraMorphism};
pub use jac::{al0, al0_compose, ass_word_diagram, compose_upper, jac_space, word_form};
pub use model::HomSpaceModel;
pub use prop::{
    as_ihx_rank, ass_basis, bracket_forest, catass_operad_sum, catlie_surjection_sum, compose_forests, forest_coords, functions,
    key_forest, lie_basis, perm_forest, prop_hom, surjections, LieKey, PropCat, WordKey,
};

/// Errors from building or querying hom-space models.
#[derive(Debug, thiserror::Error)]
pub enum HomError {
    #[error(transparent)]
    Diagram(#[from] diagrams::DiagramError),
    #[error(transparent)]
    Lin(#[from] ratlin::LinError),
    #[error("{0}")]
    Invalid(String),
    #[error("cache: {0}")]
    Cache(String),
}
