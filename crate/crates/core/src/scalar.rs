//! Real scalar abstraction underlying every coordinate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar for the real coordinates: `f32` or `f64`.
///
/// The associated constants pin the numerical thresholds used by null-cone
/// classification, positivity checks and Gram-Schmidt breakdown detection.
/// The `f64` values are the contractual ones exercised by the CLI and the
/// verification suites; the `f32` values are analogues scaled to that
/// type's precision.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Relative threshold below which an idempotent component counts as zero.
    const NULL_CONE_TOL: Self;
    /// Absolute slack admitted when testing membership in the positive
    /// hyperbolic cone, so boundary values produced by computation still
    /// classify as positive.
    const D_PLUS_SLACK: Self;
    /// Pairwise tolerance for validating an orthonormal system.
    const ORTHO_TOL: Self;
    /// Threshold, relative to the squared input scale, that flags a
    /// Gram-Schmidt residual self-product as a null-cone breakdown.
    const GS_BREAKDOWN_TOL: Self;

    /// Shorthand for `1/2`.
    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    /// Shorthand for `2`.
    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Real for f64 {
    const NULL_CONE_TOL: Self = 1e-12;
    const D_PLUS_SLACK: Self = 1e-12;
    const ORTHO_TOL: Self = 1e-10;
    const GS_BREAKDOWN_TOL: Self = 1e-10;
}

impl Real for f32 {
    const NULL_CONE_TOL: Self = 1e-6;
    const D_PLUS_SLACK: Self = 1e-6;
    const ORTHO_TOL: Self = 1e-4;
    const GS_BREAKDOWN_TOL: Self = 1e-4;
}
