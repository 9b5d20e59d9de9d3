//! The truncated square-summable bicomplex sequence space and the
//! Riesz-Fischer coefficient isometry.
//!
//! Sequences are finite with a declared zero tail, so every series in sight
//! is a finite sum. A sequence splits entrywise into two ordinary complex
//! sequences via the idempotent coordinates, and its norm agrees with the
//! induced module norm of that decomposition. Mapping a ket to its Fourier
//! coefficients against a full orthonormal basis is a bicomplex-linear
//! isometric bijection onto this space.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{Bicomplex, Component};
use crate::error::Error;
use crate::hilbert::Ket;
use crate::ortho::{CoefficientList, OrthonormalSystem};
use crate::scalar::Real;

/// Tail model of a truncated sequence. Only the zero tail exists today;
/// the field is kept on the wire for future models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Tail {
    #[default]
    #[serde(rename = "zero")]
    Zero,
}

/// A truncated element of the square-summable bicomplex sequence space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "RawSequence<T>",
    bound(deserialize = "T: Real + Deserialize<'de>")
)]
pub struct BicomplexSequence<T: Real> {
    values: Vec<Bicomplex<T>>,
    tail: Tail,
}

#[derive(Deserialize)]
#[serde(bound(deserialize = "T: Real + Deserialize<'de>"))]
struct RawSequence<T: Real> {
    values: Vec<Bicomplex<T>>,
    #[serde(default)]
    tail: Tail,
}

impl<T: Real> TryFrom<RawSequence<T>> for BicomplexSequence<T> {
    type Error = Error;
    fn try_from(raw: RawSequence<T>) -> Result<Self, Error> {
        let _ = raw.tail;
        BicomplexSequence::new(raw.values)
    }
}

impl<T: Real> BicomplexSequence<T> {
    pub fn new(values: Vec<Bicomplex<T>>) -> Result<Self, Error> {
        if values.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(BicomplexSequence {
            values,
            tail: Tail::Zero,
        })
    }

    pub fn zero(len: usize) -> Self {
        BicomplexSequence {
            values: vec![Bicomplex::zero(); len],
            tail: Tail::Zero,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Bicomplex<T>] {
        &self.values
    }

    /// The sequence norm `sqrt(sum |w_l|^2)` built on the Euclidean norm
    /// of each entry.
    pub fn l2_norm(&self) -> T {
        self.values
            .iter()
            .map(|w| w.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Entrywise idempotent coordinates; recombining the two splits
    /// through `e1`/`e2` restores the sequence.
    pub fn split(&self, k: Component) -> Vec<Complex<T>> {
        self.values.iter().map(|w| w.project(k)).collect()
    }
}

impl<T: Real> From<CoefficientList<T>> for BicomplexSequence<T> {
    fn from(c: CoefficientList<T>) -> Self {
        BicomplexSequence {
            values: c.values,
            tail: Tail::Zero,
        }
    }
}

/// The coefficient isometry attached to a full orthonormal basis: a ket
/// maps to its Fourier coefficients, preserving the norm in both
/// directions.
#[derive(Debug, Clone, PartialEq)]
pub struct RieszFischerMap<T: Real> {
    basis: OrthonormalSystem<T>,
}

impl<T: Real> RieszFischerMap<T> {
    /// Requires a full basis; partial systems go through best
    /// approximation instead of this map.
    pub fn new(basis: OrthonormalSystem<T>) -> Result<Self, Error> {
        if !basis.is_full_basis() {
            return Err(Error::DimensionMismatch {
                expected: basis.space().dim(),
                got: basis.len(),
            });
        }
        Ok(RieszFischerMap { basis })
    }

    pub fn basis(&self) -> &OrthonormalSystem<T> {
        &self.basis
    }

    /// `T(psi)`: the Fourier coefficients of `psi` as a sequence.
    pub fn forward(&self, psi: &Ket<T>) -> Result<BicomplexSequence<T>, Error> {
        Ok(self.basis.fourier_coefficients(psi)?.into())
    }

    /// `T^-1`: rebuilds the ket `sum_l s_l * m_l`.
    pub fn inverse(&self, s: &BicomplexSequence<T>) -> Result<Ket<T>, Error> {
        self.basis
            .expand(&CoefficientList::new(s.values.clone()))
    }

    /// The `k`-th idempotent part of the image, `e_k * T(psi)`; equals
    /// `T(e_k * psi)` by bicomplex linearity.
    pub fn component(&self, psi: &Ket<T>, k: Component) -> Result<BicomplexSequence<T>, Error> {
        let e = match k {
            Component::One => Bicomplex::e1(),
            Component::Two => Bicomplex::e2(),
        };
        let forward = self.forward(psi)?;
        Ok(BicomplexSequence {
            values: forward.values.iter().map(|&w| e * w).collect(),
            tail: Tail::Zero,
        })
    }

    /// `| ||T(psi)||_2 - ||psi|| |`, the isometry defect.
    pub fn isometry_residual(&self, psi: &Ket<T>) -> Result<T, Error> {
        let image_norm = self.forward(psi)?.l2_norm();
        let ket_norm = self.basis.space().induced_norm(psi)?;
        Ok((image_norm - ket_norm).abs())
    }
}
