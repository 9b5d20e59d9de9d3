//! Finite-dimensional bicomplex modules with hyperbolic-positive scalar
//! products.
//!
//! A ket is an ordered list of bicomplex coefficients. Multiplying by the
//! idempotents splits it as `psi = psi_1 + psi_2`, and each part lives in a
//! complex vector space whose coordinates are the matching idempotent
//! projections of the coefficients. A scalar product on the module is
//! completely determined by one ordinary scalar product per part; here
//! those are diagonal products with strictly positive weights, which makes
//! hyperbolic positivity hold by construction.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bicomplex::{Bicomplex, Component, IdempotentPair};
use crate::error::Error;
use crate::scalar::Real;

/// A vector in a finite-dimensional bicomplex module.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawKet<T>", bound(deserialize = "T: Real + Deserialize<'de>"))]
pub struct Ket<T: Real> {
    coeffs: Vec<Bicomplex<T>>,
}

#[derive(Deserialize)]
#[serde(bound(deserialize = "T: Real + Deserialize<'de>"))]
struct RawKet<T: Real> {
    coeffs: Vec<Bicomplex<T>>,
}

impl<T: Real> TryFrom<RawKet<T>> for Ket<T> {
    type Error = Error;
    fn try_from(raw: RawKet<T>) -> Result<Self, Error> {
        Ket::new(raw.coeffs)
    }
}

impl<T: Real> Ket<T> {
    /// Builds a ket, rejecting non-finite coefficients.
    pub fn new(coeffs: Vec<Bicomplex<T>>) -> Result<Self, Error> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Ket { coeffs })
    }

    pub fn zero(dim: usize) -> Self {
        Ket {
            coeffs: vec![Bicomplex::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Bicomplex<T>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Bicomplex<T>> {
        self.coeffs
    }

    /// The idempotent part `e_k * psi`; satisfies `e_k * split = split`
    /// and `split(One) + split(Two) = psi`.
    pub fn split(&self, k: Component) -> Ket<T> {
        let e = match k {
            Component::One => Bicomplex::e1(),
            Component::Two => Bicomplex::e2(),
        };
        self.scale(e)
    }

    /// The complex coordinates of the `k`-th idempotent part.
    pub fn component_coords(&self, k: Component) -> Vec<Complex<T>> {
        self.coeffs.iter().map(|c| c.project(k)).collect()
    }

    /// Coefficientwise multiplication by a bicomplex scalar.
    pub fn scale(&self, w: Bicomplex<T>) -> Ket<T> {
        Ket {
            coeffs: self.coeffs.iter().map(|&c| w * c).collect(),
        }
    }

    /// Rebuilds a ket from its two component coordinate vectors.
    pub fn from_components(h1: &[Complex<T>], h2: &[Complex<T>]) -> Self {
        assert_eq!(h1.len(), h2.len(), "component lengths differ");
        Ket {
            coeffs: h1
                .iter()
                .zip(h2)
                .map(|(&a, &b)| Bicomplex::from_idempotent(IdempotentPair { h1: a, h2: b }))
                .collect(),
        }
    }
}

impl<T: Real> std::ops::Add for &Ket<T> {
    type Output = Ket<T>;
    fn add(self, rhs: Self) -> Ket<T> {
        assert_eq!(self.dim(), rhs.dim(), "ket dimensions differ");
        Ket {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> std::ops::Sub for &Ket<T> {
    type Output = Ket<T>;
    fn sub(self, rhs: Self) -> Ket<T> {
        assert_eq!(self.dim(), rhs.dim(), "ket dimensions differ");
        Ket {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<T: Real> std::ops::Index<usize> for Ket<T> {
    type Output = Bicomplex<T>;
    fn index(&self, i: usize) -> &Bicomplex<T> {
        &self.coeffs[i]
    }
}

/// A diagonal, strictly positive scalar product on each idempotent part.
///
/// The product of two kets is `e1*<x1,y1> + e2*<x2,y2>`, where
/// `<x,y> = sum_l w_l * conj(x_l) * y_l` acts on the part coordinates
/// (conjugate-linear in the first slot, following the physics convention).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "RawSpec<T>",
    bound(deserialize = "T: Real + Deserialize<'de>")
)]
pub struct ScalarProductSpec<T: Real> {
    dim: usize,
    w1: Vec<T>,
    w2: Vec<T>,
}

// Omitted weight lists default to all ones (the standard product).
#[derive(Deserialize)]
#[serde(bound(deserialize = "T: Real + Deserialize<'de>"))]
struct RawSpec<T: Real> {
    dim: usize,
    #[serde(default)]
    w1: Option<Vec<T>>,
    #[serde(default)]
    w2: Option<Vec<T>>,
}

impl<T: Real> TryFrom<RawSpec<T>> for ScalarProductSpec<T> {
    type Error = Error;
    fn try_from(raw: RawSpec<T>) -> Result<Self, Error> {
        let ones = || vec![T::one(); raw.dim];
        ScalarProductSpec::new(
            raw.dim,
            raw.w1.unwrap_or_else(ones),
            raw.w2.unwrap_or_else(ones),
        )
    }
}

impl<T: Real> ScalarProductSpec<T> {
    pub fn new(dim: usize, w1: Vec<T>, w2: Vec<T>) -> Result<Self, Error> {
        if w1.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: w1.len(),
            });
        }
        if w2.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: w2.len(),
            });
        }
        let positive = |w: &[T]| w.iter().all(|x| x.is_finite() && *x > T::zero());
        if !positive(&w1) || !positive(&w2) {
            return Err(Error::InvalidWeights);
        }
        Ok(ScalarProductSpec { dim, w1, w2 })
    }

    /// Unit weights in both parts.
    pub fn standard(dim: usize) -> Self {
        ScalarProductSpec {
            dim,
            w1: vec![T::one(); dim],
            w2: vec![T::one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self, k: Component) -> &[T] {
        match k {
            Component::One => &self.w1,
            Component::Two => &self.w2,
        }
    }

    fn check_dim(&self, ket: &Ket<T>) -> Result<(), Error> {
        if ket.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: ket.dim(),
            });
        }
        Ok(())
    }

    /// The ordinary weighted product on one idempotent part.
    pub fn component_product(&self, k: Component, x: &[Complex<T>], y: &[Complex<T>]) -> Complex<T> {
        assert_eq!(x.len(), self.dim, "coordinate length differs from dim");
        assert_eq!(y.len(), self.dim, "coordinate length differs from dim");
        let w = self.weights(k);
        let mut acc = Complex::zero();
        for l in 0..self.dim {
            acc = acc + x[l].conj() * y[l].scale(w[l]);
        }
        acc
    }

    /// Bicomplex scalar product `e1*<psi_1,phi_1> + e2*<psi_2,phi_2>`.
    ///
    /// Conjugate-linear in `psi`, linear in `phi`, hermitian under the
    /// third conjugation, and hyperbolic positive on the diagonal.
    pub fn scalar_product(&self, psi: &Ket<T>, phi: &Ket<T>) -> Result<Bicomplex<T>, Error> {
        self.check_dim(psi)?;
        self.check_dim(phi)?;
        let h1 = self.component_product(
            Component::One,
            &psi.component_coords(Component::One),
            &phi.component_coords(Component::One),
        );
        let h2 = self.component_product(
            Component::Two,
            &psi.component_coords(Component::Two),
            &phi.component_coords(Component::Two),
        );
        Ok(Bicomplex::from_idempotent(IdempotentPair { h1, h2 }))
    }

    /// Induced norm `sqrt((<psi_1,psi_1> + <psi_2,psi_2>)/2)`; also equals
    /// the Euclidean norm of the principal square root of the self-product.
    pub fn induced_norm(&self, psi: &Ket<T>) -> Result<T, Error> {
        self.check_dim(psi)?;
        let mut total = T::zero();
        for k in Component::BOTH {
            let x = psi.component_coords(k);
            let s = self.component_product(k, &x, &x).re;
            total = total + s.max(T::zero());
        }
        Ok((total / T::two()).sqrt())
    }

    /// Scale-aware threshold under which a ket counts as zero.
    pub fn zero_threshold(&self) -> T {
        let max_w = self
            .w1
            .iter()
            .chain(&self.w2)
            .fold(T::zero(), |m, &w| m.max(w));
        let n = T::from_usize(self.dim).expect("dimension fits any float");
        T::NULL_CONE_TOL * n.sqrt() * max_w.max(T::one())
    }

    /// Nondegeneracy in operational form: the induced norm is below the
    /// zero threshold only for (numerically) zero kets.
    pub fn is_zero_ket(&self, psi: &Ket<T>) -> Result<bool, Error> {
        Ok(self.induced_norm(psi)? <= self.zero_threshold())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::Conjugation;
    use num_traits::One;

    type B = Bicomplex<f64>;

    fn ket(cs: Vec<B>) -> Ket<f64> {
        Ket::new(cs).unwrap()
    }

    fn close(a: B, b: B, tol: f64) -> bool {
        (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
    }

    #[test]
    fn split_of_real_ket_is_even() {
        let psi = ket(vec![B::one(), B::from_real(2.0)]);
        let p1 = psi.split(Component::One);
        let p2 = psi.split(Component::Two);
        assert_eq!(p1.coeffs()[0], B::e1());
        assert_eq!(p1.coeffs()[1], B::e1() * 2.0);
        assert_eq!(p2.coeffs()[0], B::e2());
        assert_eq!(&p1 + &p2, psi);
    }

    #[test]
    fn split_of_j_ket() {
        // j*e1 = e1, so the first part of (j, 0) is (e1, 0)
        let psi = ket(vec![B::j(), B::zero()]);
        let p1 = psi.split(Component::One);
        assert_eq!(p1.coeffs()[0], B::e1());
        assert_eq!(p1.coeffs()[1], B::zero());
        // the split is idempotent: e1 * psi_1 = psi_1
        assert_eq!(p1.split(Component::One), p1);
    }

    #[test]
    fn scalar_product_sample_values() {
        let spec = ScalarProductSpec::<f64>::standard(2);
        let psi = ket(vec![B::one(), B::i2()]);
        let phi = ket(vec![B::j(), B::zero()]);
        let p = spec.scalar_product(&psi, &phi).unwrap();
        assert!(close(p, B::j(), 1e-15));

        let self_p = spec.scalar_product(&psi, &psi).unwrap();
        assert!(close(self_p, B::from_real(2.0), 1e-15));
    }

    #[test]
    fn self_product_can_sit_on_the_null_cone() {
        let spec = ScalarProductSpec::<f64>::standard(2);
        let psi = ket(vec![B::e1(), B::zero()]);
        let p = spec.scalar_product(&psi, &psi).unwrap();
        assert!(close(p, B::e1(), 1e-15));
        assert!(p.hyperbolic_part().in_d_plus());
        assert!(p.is_null_cone());
        assert!((spec.induced_norm(&psi).unwrap() - 0.5_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn induced_norm_values() {
        let spec = ScalarProductSpec::<f64>::standard(2);
        assert_eq!(spec.induced_norm(&Ket::zero(2)).unwrap(), 0.0);
        let psi = ket(vec![B::one(), B::i2()]);
        assert!((spec.induced_norm(&psi).unwrap() - 2.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn norm_matches_root_of_self_product() {
        let spec = ScalarProductSpec::new(2, vec![2.0, 0.5], vec![1.0, 3.0]).unwrap();
        let psi = ket(vec![B::from_coords(1.0, -2.0, 0.5, 3.0), B::j()]);
        let norm = spec.induced_norm(&psi).unwrap();
        let root = spec.scalar_product(&psi, &psi).unwrap().nth_root(2);
        assert!((norm - root.norm()).abs() < 1e-12 * norm.max(1.0));
    }

    #[test]
    fn hermiticity_under_third_conjugation() {
        let spec = ScalarProductSpec::new(2, vec![1.5, 0.25], vec![2.0, 1.0]).unwrap();
        let psi = ket(vec![B::from_coords(1.0, 2.0, 3.0, 4.0), B::i1()]);
        let phi = ket(vec![B::from_coords(-0.5, 1.0, 0.0, 2.0), B::e2()]);
        let lhs = spec.scalar_product(&psi, &phi).unwrap();
        let rhs = spec.scalar_product(&phi, &psi).unwrap().conj(Conjugation::Dag3);
        assert!(close(lhs, rhs, 1e-14));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let spec = ScalarProductSpec::<f64>::standard(2);
        let short = ket(vec![B::one()]);
        let ok = ket(vec![B::one(), B::zero()]);
        assert_eq!(
            spec.scalar_product(&short, &ok),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
        assert!(spec.induced_norm(&short).is_err());
    }

    #[test]
    fn weights_must_be_positive() {
        assert_eq!(
            ScalarProductSpec::new(2, vec![1.0, 0.0], vec![1.0, 1.0]),
            Err(Error::InvalidWeights)
        );
        assert_eq!(
            ScalarProductSpec::new(2, vec![1.0], vec![1.0, 1.0]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn kets_reject_non_finite_coefficients() {
        assert_eq!(
            Ket::new(vec![B::from_real(f64::NAN)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn zero_ket_detection() {
        let spec = ScalarProductSpec::<f64>::standard(3);
        assert!(spec.is_zero_ket(&Ket::zero(3)).unwrap());
        let tiny = ket(vec![B::from_real(1e-15), B::zero(), B::zero()]);
        assert!(spec.is_zero_ket(&tiny).unwrap());
        let psi = ket(vec![B::one(), B::zero(), B::zero()]);
        assert!(!spec.is_zero_ket(&psi).unwrap());
    }
}
