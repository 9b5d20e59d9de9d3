//! Gram-Schmidt orthonormalization, coefficient expansion and best
//! approximation over bicomplex modules.
//!
//! Orthonormalization runs as modified Gram-Schmidt with one
//! re-orthogonalization pass, applied independently to the two idempotent
//! coordinate vectors and recombined through `e1`/`e2`. A residual whose
//! self-product falls into the null cone means the inputs are linearly
//! dependent in at least one component; that surfaces as
//! [`Error::NullConeBreakdown`] rather than being repaired silently.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bicomplex::{Bicomplex, Component};
use crate::error::Error;
use crate::hilbert::{Ket, ScalarProductSpec};
use crate::scalar::Real;

/// Fourier (or free) coefficients paired with an orthonormal system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(deserialize = "T: Real + Deserialize<'de>"))]
pub struct CoefficientList<T: Real> {
    pub values: Vec<Bicomplex<T>>,
}

impl<T: Real> CoefficientList<T> {
    pub fn new(values: Vec<Bicomplex<T>>) -> Self {
        CoefficientList { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<T: Real> From<Vec<Bicomplex<T>>> for CoefficientList<T> {
    fn from(values: Vec<Bicomplex<T>>) -> Self {
        CoefficientList { values }
    }
}

/// An ordered family of kets that is orthonormal under its space's scalar
/// product: pairwise products are bicomplex `0`, self-products `1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "RawSystem<T>",
    bound(deserialize = "T: Real + Deserialize<'de>")
)]
pub struct OrthonormalSystem<T: Real> {
    space: ScalarProductSpec<T>,
    kets: Vec<Ket<T>>,
}

#[derive(Deserialize)]
#[serde(bound(deserialize = "T: Real + Deserialize<'de>"))]
struct RawSystem<T: Real> {
    space: ScalarProductSpec<T>,
    kets: Vec<Ket<T>>,
}

impl<T: Real> TryFrom<RawSystem<T>> for OrthonormalSystem<T> {
    type Error = Error;
    fn try_from(raw: RawSystem<T>) -> Result<Self, Error> {
        OrthonormalSystem::new(raw.space, raw.kets)
    }
}

impl<T: Real> OrthonormalSystem<T> {
    /// Validates pairwise orthonormality within [`Real::ORTHO_TOL`].
    pub fn new(space: ScalarProductSpec<T>, kets: Vec<Ket<T>>) -> Result<Self, Error> {
        for (i, ket) in kets.iter().enumerate() {
            if ket.dim() != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    got: ket.dim(),
                });
            }
            for (j, other) in kets.iter().enumerate().take(i + 1) {
                let p = space.scalar_product(other, ket)?;
                let expected = if i == j {
                    Bicomplex::one()
                } else {
                    Bicomplex::zero()
                };
                if (p - expected).norm() > T::ORTHO_TOL {
                    return Err(Error::NotOrthonormal { i: j, j: i });
                }
            }
        }
        Ok(OrthonormalSystem { space, kets })
    }

    fn new_unchecked(space: ScalarProductSpec<T>, kets: Vec<Ket<T>>) -> Self {
        OrthonormalSystem { space, kets }
    }

    pub fn space(&self) -> &ScalarProductSpec<T> {
        &self.space
    }

    pub fn kets(&self) -> &[Ket<T>] {
        &self.kets
    }

    pub fn len(&self) -> usize {
        self.kets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kets.is_empty()
    }

    /// True when the system spans the whole space (`len == dim`).
    pub fn is_full_basis(&self) -> bool {
        self.kets.len() == self.space.dim()
    }

    /// Coefficients `<m_l, psi>` of `psi` against the system.
    pub fn fourier_coefficients(&self, psi: &Ket<T>) -> Result<CoefficientList<T>, Error> {
        let values = self
            .kets
            .iter()
            .map(|m| self.space.scalar_product(m, psi))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CoefficientList { values })
    }

    /// The combination `sum_l c_l * m_l`.
    pub fn expand(&self, coeffs: &CoefficientList<T>) -> Result<Ket<T>, Error> {
        if coeffs.len() != self.kets.len() {
            return Err(Error::DimensionMismatch {
                expected: self.kets.len(),
                got: coeffs.len(),
            });
        }
        let mut out = Ket::zero(self.space.dim());
        for (c, m) in coeffs.values.iter().zip(&self.kets) {
            out = &out + &m.scale(*c);
        }
        Ok(out)
    }

    /// Orthogonal projection onto the first `n` system members, along with
    /// the norm of what is left over. No other coefficient choice gives a
    /// smaller residual.
    pub fn best_approximation(&self, psi: &Ket<T>, n: usize) -> Result<(Ket<T>, T), Error> {
        if n > self.kets.len() {
            return Err(Error::InvalidPrefix {
                n,
                size: self.kets.len(),
            });
        }
        if psi.dim() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                got: psi.dim(),
            });
        }
        let mut proj = Ket::zero(self.space.dim());
        for m in &self.kets[..n] {
            let c = self.space.scalar_product(m, psi)?;
            proj = &proj + &m.scale(c);
        }
        let residual = self.space.induced_norm(&(psi - &proj))?;
        Ok((proj, residual))
    }
}

/// Orthonormalizes `kets` under the product of `space`.
///
/// Fails with [`Error::NullConeBreakdown`] carrying the index of the first
/// ket whose residual self-product has a vanishing idempotent component.
pub fn gram_schmidt<T: Real>(
    space: ScalarProductSpec<T>,
    kets: &[Ket<T>],
) -> Result<OrthonormalSystem<T>, Error> {
    for ket in kets {
        if ket.dim() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: ket.dim(),
            });
        }
    }

    let coords: [Vec<Vec<Complex<T>>>; 2] = [
        kets.iter().map(|k| k.component_coords(Component::One)).collect(),
        kets.iter().map(|k| k.component_coords(Component::Two)).collect(),
    ];

    // Breakdown thresholds scale with the squared component norms of the
    // inputs; an identically-zero component then breaks down immediately.
    let scale_sq: [T; 2] = [
        component_scale_sq(&space, Component::One, &coords[0]),
        component_scale_sq(&space, Component::Two, &coords[1]),
    ];

    let mut basis: [Vec<Vec<Complex<T>>>; 2] = [Vec::new(), Vec::new()];
    #[allow(clippy::needless_range_loop)]
    for i in 0..kets.len() {
        for k in Component::BOTH {
            let ki = k.index();
            let mut v = coords[ki][i].clone();
            // One orthogonalization pass plus one re-orthogonalization pass.
            for _ in 0..2 {
                for q in &basis[ki] {
                    let c = space.component_product(k, q, &v);
                    for (vl, ql) in v.iter_mut().zip(q) {
                        *vl = *vl - *ql * c;
                    }
                }
            }
            let s = space.component_product(k, &v, &v).re;
            if s <= T::GS_BREAKDOWN_TOL * scale_sq[ki] {
                return Err(Error::NullConeBreakdown { index: i });
            }
            let inv = s.sqrt().recip();
            for vl in v.iter_mut() {
                *vl = vl.scale(inv);
            }
            basis[ki].push(v);
        }
    }

    let out = (0..kets.len())
        .map(|i| Ket::from_components(&basis[0][i], &basis[1][i]))
        .collect();
    Ok(OrthonormalSystem::new_unchecked(space, out))
}

fn component_scale_sq<T: Real>(
    space: &ScalarProductSpec<T>,
    k: Component,
    coords: &[Vec<Complex<T>>],
) -> T {
    coords
        .iter()
        .map(|x| space.component_product(k, x, x).re)
        .fold(T::zero(), T::max)
}
