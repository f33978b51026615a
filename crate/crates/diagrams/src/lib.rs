//! Chord diagrams, Jacobi diagrams and rooted trees: canonical forms,
//! enumeration, STU normalization and relation generators.

pub mod chord;
pub mod jacobi;
pub mod lincomb;
pub mod relations;
pub mod trees;

pub use chord::{compositions, enumerate_chords, perfect_matchings, vector_of, ChordDiagram, DiagramVector, Endpoint, Tok};
pub use jacobi::{normalize_all, Half, JacobiDiagram, Node, Site, StuSite};
pub use lincomb::LinComb;
pub use relations::{commutator_relators, enumerate_jacobi, four_t_relators, stu_closure_relators};
pub use trees::{all_trees, as_ihx_relators, RootedTree, TreeVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("a component has no path to a strand")]
    Disconnected,
    #[error("not a chord diagram: {0}")]
    NotChord(String),
}
