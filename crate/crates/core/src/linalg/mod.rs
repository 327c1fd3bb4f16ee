//! Exact linear algebra over the rationals.

mod scalar;
mod sparse;

pub use scalar::Scalar;
pub use sparse::{axpy, span_dim, SparseMatrix, SparseVec};

/// Rank of `m` over the rationals.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    m.rank()
}

/// A basis of `ker m` over the rationals.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    m.kernel_basis()
}
