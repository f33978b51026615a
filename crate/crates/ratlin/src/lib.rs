//! Exact linear algebra over the rationals: sparse vectors and matrices,
//! canonical subspaces, presented quotients and idempotent splittings.

mod echelon;
mod q;
mod sparse;

pub use echelon::{
    kernel, quotient_dim, rref, split_idempotent, subspace_ops, Echelon, QuotientSpace, Subquotient, Subspace,
    SubspaceOps,
};
pub use q::{ParseQError, Q};
pub use sparse::{Accumulator, LinearMap, RatMatrix, SparseVec};

/// Errors from linear algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("matrix is not square")]
    NotSquare,
    #[error("not idempotent")]
    NotIdempotent,
    #[error("subspaces are not nested")]
    NotNested,
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
}
