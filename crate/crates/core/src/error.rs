use thiserror::Error;

/// Errors reported by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The value is zero or a zero divisor: at least one idempotent
    /// component vanishes, so no inverse exists.
    #[error("value lies in the null cone (zero divisor)")]
    NullCone,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Gram-Schmidt produced a residual whose self-product lies in the
    /// null cone; the inputs are linearly dependent in at least one
    /// idempotent component.
    #[error("gram-schmidt breakdown at ket {index}: residual self-product lies in the null cone")]
    NullConeBreakdown { index: usize },

    #[error("prefix length {n} exceeds system size {size}")]
    InvalidPrefix { n: usize, size: usize },

    #[error("scalar-product weights must be strictly positive and finite")]
    InvalidWeights,

    #[error("kets {i} and {j} are not orthonormal within tolerance")]
    NotOrthonormal { i: usize, j: usize },

    #[error("non-finite coordinate")]
    NonFinite,
}
