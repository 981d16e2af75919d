use thiserror::Error;

/// Errors produced by construction, enumeration and geometry routines.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("labels matrix is not symmetric at ({i},{j})")]
    AsymmetricLabels { i: usize, j: usize },

    #[error(
        "invalid label {value} at ({i},{j}): diagonal must be 1, off-diagonal 0 (infinite) or >= 2"
    )]
    InvalidLabel { i: usize, j: usize, value: i64 },

    #[error("bilinear override targets the finite-label pair ({i},{j})")]
    OverrideOnFinitePair { i: usize, j: usize },

    #[error("bilinear override {value} at ({i},{j}) must be <= -1")]
    OverrideAboveMinusOne { i: usize, j: usize, value: f64 },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("gram entry {value} at ({i},{j}) is neither -cos(pi/m) for integer m >= 2 nor <= -1")]
    InvalidGramEntry { i: usize, j: usize, value: f64 },

    #[error("simple roots are not positively independent")]
    NotPositivelyIndependent,

    #[error("roots do not form a valid simple system: {reason}")]
    InvalidSimpleSystem { reason: String },

    #[error("mirror vector is isotropic: |q(mirror)| <= {tol:e}")]
    IsotropicMirror { tol: f64 },

    #[error("coordinate magnitude exceeded {limit:e} during enumeration")]
    DepthOverflow { limit: f64 },

    #[error("every simple/root pairing vanishes; kappa is undefined")]
    AllOrthogonal,

    #[error("vector lies on the kernel of the cut functional: |f(v)| <= {tol:e}")]
    OnKernel { tol: f64 },

    #[error("line endpoints coincide")]
    CoincidentPoints,

    #[error("word leaves the action domain at letter {step}: |f| <= {tol:e}")]
    KernelCrossing { step: usize, tol: f64 },

    #[error("generator index {index} out of range for rank {rank}")]
    InvalidGenerator { index: usize, rank: usize },

    #[error("point set is empty")]
    EmptySet,

    #[error("the isotropic cone has no nonzero real points (form is positive definite)")]
    EmptyQuadric,

    #[error("no canonical simple pair found within the table's depth")]
    CanonicalPairNotInTable,

    #[error("rendering supports rank 2, 3 and 4 only (got rank {rank})")]
    UnsupportedRank { rank: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
