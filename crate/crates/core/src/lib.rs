//! Bicomplex numbers, finite bicomplex Hilbert modules, and the
//! Riesz-Fischer coefficient isometry onto the square-summable bicomplex
//! sequence space, together with seeded verification suites for the
//! identities the types are expected to satisfy.
//!
//! The numeric kernel is generic over the real scalar through
//! [`scalar::Real`]; the `*64` aliases below fix `f64`, which is what the
//! CLI and the verification suites use.
//!
//! Layout:
//! - [`bicomplex`]: the commutative ring — arithmetic, conjugations,
//!   moduli, idempotent decomposition, inverses, roots, null cone.
//! - [`hilbert`]: kets, diagonal positive scalar products, induced norm.
//! - [`ortho`]: Gram-Schmidt, Fourier coefficients, best approximation.
//! - [`l2`]: truncated square-summable sequences and the coefficient
//!   isometry.
//! - [`verify`]: the seeded, reproducible property suites.

pub mod bicomplex;
mod error;
pub mod hilbert;
pub mod l2;
pub mod ortho;
pub mod scalar;
pub mod verify;

pub use bicomplex::{Bicomplex, Component, Conjugation, Hyperbolic, IdempotentPair, Modulus};
pub use error::Error;
pub use hilbert::{Ket, ScalarProductSpec};
pub use l2::{BicomplexSequence, RieszFischerMap};
pub use num_complex::Complex;
pub use ortho::{gram_schmidt, CoefficientList, OrthonormalSystem};
pub use scalar::Real;

pub type Complex64 = Complex<f64>;
pub type Bicomplex64 = Bicomplex<f64>;
pub type IdempotentPair64 = IdempotentPair<f64>;
pub type Hyperbolic64 = Hyperbolic<f64>;
pub type Ket64 = Ket<f64>;
pub type ScalarProductSpec64 = ScalarProductSpec<f64>;
pub type OrthonormalSystem64 = OrthonormalSystem<f64>;
pub type CoefficientList64 = CoefficientList<f64>;
pub type BicomplexSequence64 = BicomplexSequence<f64>;
pub type RieszFischerMap64 = RieszFischerMap<f64>;

pub type Complex32 = Complex<f32>;
pub type Bicomplex32 = Bicomplex<f32>;
pub type Hyperbolic32 = Hyperbolic<f32>;
pub type Ket32 = Ket<f32>;
