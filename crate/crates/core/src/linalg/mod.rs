//! Dense real-symmetric and complex-Hermitian matrices, index partitions and
//! a cyclic Jacobi eigensolver.

mod eigen;
mod matrix;
mod partition;

pub use eigen::{eigen_hermitian, eigen_symmetric, Spectrum, MAX_SWEEPS};
pub use matrix::{scaled_combination, HermitianMatrix, SymmetricMatrix, MAX_DIM};
pub use partition::{validate_block_zero, BlockPartition};

pub use num_complex::Complex64;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix dimension must be at least 1")]
    Empty,
    #[error("matrix dimension {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("entry ({i}, {j}) is not finite")]
    NonFinite { i: usize, j: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix is not Hermitian at ({i}, {j})")]
    NotHermitian { i: usize, j: usize },
    #[error("diagonal entry {i} has a nonzero imaginary part")]
    ComplexDiagonal { i: usize },
    #[error("matrix is not diagonal: entry ({i}, {j}) is nonzero")]
    NotDiagonal { i: usize, j: usize },
    #[error("a block partition needs at least 2 parts, got {r}")]
    TooFewParts { r: usize },
    #[error("index {index} assigned to part {part}, outside [0, {r})")]
    PartOutOfRange { index: usize, part: usize, r: usize },
    #[error("part {part} of the partition is empty")]
    EmptyPart { part: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
}
