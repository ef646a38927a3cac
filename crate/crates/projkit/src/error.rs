use thiserror::Error;

/// Errors reported by constructions and projection operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vectors must have at least one entry")]
    EmptyVector,

    #[error("non-finite entry {value} at index {index}")]
    NonFiniteEntry { index: usize, value: f64 },

    #[error("scalar must be finite, got {value}")]
    NonFiniteScalar { value: f64 },

    #[error("hyperplane normal must be nonzero")]
    ZeroNormal,

    #[error("tolerance {name} must lie strictly between 0 and 1e-4, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("basis of size {size} does not fit in ambient dimension {dim}")]
    BasisTooLarge { size: usize, dim: usize },

    #[error("basis is not orthonormal (deviation {deviation:e})")]
    BasisNotOrthonormal { deviation: f64 },

    #[error("anchor is not orthogonal to the basis (residual {residual:e})")]
    AnchorNotOrthogonal { residual: f64 },

    #[error("linear system must have at least one row")]
    EmptySystem,

    #[error("hyperplane family must not be empty")]
    EmptyFamily,

    #[error("linear system is infeasible (residual {residual:e})")]
    Infeasible { residual: f64 },

    #[error("the cone projection of the normal vanishes; the correction formula does not apply")]
    DegenerateDirection,

    #[error("invalid experiment config: {0}")]
    InvalidConfig(&'static str),

    #[error("start point coincides with its projection; relative proximity is undefined")]
    ConvergedAtStart,
}
