//! Symmetric groups: permutations, partitions, the group algebra, Young
//! symmetrizers, irreducible characters and Schur functor dimensions.

mod algebra;
mod character;
mod partition;
mod perm;

pub use algebra::{young_symmetrizer, GroupAlgebraElement};
pub use character::{
    centralizer_order, class_size, decompose_character, decompose_sn_rep, even_plethysm_parts, mn_character,
    restricted_schur_character, schur_dim, schur_restriction, specht_dim, sum_of_squares_identity,
};
pub use partition::Partition;
pub use perm::Perm;

/// Errors from symmetric group computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("invalid cycle: {0:?}")]
    BadCycle(Vec<usize>),
    #[error("not a partition: {0:?}")]
    BadPartition(Vec<usize>),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("invalid representation: {0}")]
    BadRepresentation(String),
    #[error("class function is not a character (inner product {0})")]
    NotACharacter(String),
    #[error("missing value for class {0}")]
    MissingClass(String),
}
