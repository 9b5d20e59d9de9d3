//! Arithmetic of the commutative ring of bicomplex numbers.
//!
//! A bicomplex number is a pair `w = z1 + z2*i2` of complex numbers over
//! the imaginary unit `i1`, where `i1` and `i2` are independent units with
//! `i1^2 = i2^2 = -1` and `j = i1*i2` squares to `+1`. The ring is
//! commutative but not a division algebra: the values with a vanishing
//! idempotent component are zero divisors and make up the null cone.
//!
//! Storage is always Cartesian `(z1, z2)`; the idempotent form
//! `w = h1*e1 + h2*e2` with `e1 = (1+j)/2`, `e2 = (1-j)/2` is computed on
//! demand via [`Bicomplex::to_idempotent`]. Multiplication, inversion and
//! roots act componentwise in that basis.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::scalar::Real;

/// Selector for the two idempotent components (the `e1` / `e2` directions).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Component {
    One,
    Two,
}

impl Component {
    pub const BOTH: [Component; 2] = [Component::One, Component::Two];

    /// Zero-based index, handy for table lookups.
    pub fn index(self) -> usize {
        match self {
            Component::One => 0,
            Component::Two => 1,
        }
    }
}

/// The three conjugations of a bicomplex number.
///
/// With `w = z1 + z2*i2` and a bar denoting complex conjugation in the
/// `i1` plane: `Dag1` maps to `(conj(z1), conj(z2))`, `Dag2` to
/// `(z1, -z2)` and `Dag3` to `(conj(z1), -conj(z2))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conjugation {
    Dag1,
    Dag2,
    Dag3,
}

impl Conjugation {
    pub const ALL: [Conjugation; 3] = [Conjugation::Dag1, Conjugation::Dag2, Conjugation::Dag3];
}

/// The three squared moduli, each induced by one conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Modulus {
    /// `w * conj2(w) = z1^2 + z2^2`, valued in the `i1` complex plane.
    I1,
    /// `w * conj1(w)`, valued in the `i2` complex plane.
    I2,
    /// `w * conj3(w)`, valued in the hyperbolic plane (positive cone).
    J,
}

impl Modulus {
    pub const ALL: [Modulus; 3] = [Modulus::I1, Modulus::I2, Modulus::J];

    /// The conjugation that produces this modulus.
    pub fn conjugation(self) -> Conjugation {
        match self {
            Modulus::I1 => Conjugation::Dag2,
            Modulus::I2 => Conjugation::Dag1,
            Modulus::J => Conjugation::Dag3,
        }
    }
}

/// A bicomplex number in Cartesian form `z1 + z2*i2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Bicomplex<T: Real> {
    pub z1: Complex<T>,
    pub z2: Complex<T>,
}

/// The idempotent coordinates `(h1, h2)` of a bicomplex number, so that
/// `w = h1*e1 + h2*e2` with `h1 = z1 - z2*i1` and `h2 = z1 + z2*i1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IdempotentPair<T: Real> {
    pub h1: Complex<T>,
    pub h2: Complex<T>,
}

/// A hyperbolic number `x1*e1 + x2*e2` stored in idempotent coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Hyperbolic<T: Real> {
    pub x1: T,
    pub x2: T,
}

impl<T: Real> Bicomplex<T> {
    pub fn new(z1: Complex<T>, z2: Complex<T>) -> Self {
        Bicomplex { z1, z2 }
    }

    /// Builds from the four real coordinates of `a + b*i1 + c*i2 + d*j`.
    pub fn from_coords(a: T, b: T, c: T, d: T) -> Self {
        Bicomplex::new(Complex::new(a, b), Complex::new(c, d))
    }

    pub fn from_real(a: T) -> Self {
        Bicomplex::new(Complex::new(a, T::zero()), Complex::zero())
    }

    /// The imaginary unit of the first complex plane.
    pub fn i1() -> Self {
        Bicomplex::new(Complex::i(), Complex::zero())
    }

    /// The imaginary unit of the second complex plane.
    pub fn i2() -> Self {
        Bicomplex::new(Complex::zero(), Complex::one())
    }

    /// The hyperbolic unit `j = i1*i2`, squaring to `+1`.
    pub fn j() -> Self {
        Bicomplex::new(Complex::zero(), Complex::i())
    }

    /// First idempotent `e1 = (1+j)/2`; satisfies `e1*e1 = e1`, `e1*e2 = 0`.
    pub fn e1() -> Self {
        let h = T::half();
        Bicomplex::new(Complex::new(h, T::zero()), Complex::new(T::zero(), h))
    }

    /// Second idempotent `e2 = (1-j)/2`.
    pub fn e2() -> Self {
        let h = T::half();
        Bicomplex::new(Complex::new(h, T::zero()), Complex::new(T::zero(), -h))
    }

    pub fn is_finite(self) -> bool {
        self.z1.re.is_finite()
            && self.z1.im.is_finite()
            && self.z2.re.is_finite()
            && self.z2.im.is_finite()
    }

    /// Applies one of the three conjugations.
    pub fn conj(self, k: Conjugation) -> Self {
        match k {
            Conjugation::Dag1 => Bicomplex::new(self.z1.conj(), self.z2.conj()),
            Conjugation::Dag2 => Bicomplex::new(self.z1, -self.z2),
            Conjugation::Dag3 => Bicomplex::new(self.z1.conj(), -self.z2.conj()),
        }
    }

    /// The squared modulus induced by conjugation `k`, i.e.
    /// `w * conj_k'(w)` for the matching conjugation.
    ///
    /// The result lives in a subring (complex plane or hyperbolic plane)
    /// but is returned as a full bicomplex value; for `Modulus::I2` the
    /// `z2` coordinate carries the `i2` part.
    pub fn modulus_sq(self, k: Modulus) -> Self {
        self * self.conj(k.conjugation())
    }

    /// Euclidean norm of the four real coordinates.
    pub fn norm(self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(self) -> T {
        self.z1.norm_sqr() + self.z2.norm_sqr()
    }

    /// Idempotent coordinates `h1 = z1 - z2*i1`, `h2 = z1 + z2*i1`.
    pub fn to_idempotent(self) -> IdempotentPair<T> {
        let rot = self.z2 * Complex::i();
        IdempotentPair {
            h1: self.z1 - rot,
            h2: self.z1 + rot,
        }
    }

    pub fn from_idempotent(p: IdempotentPair<T>) -> Self {
        let half = Complex::new(T::half(), T::zero());
        let z1 = (p.h1 + p.h2) * half;
        let z2 = (p.h1 - p.h2) * Complex::i() * half;
        Bicomplex::new(z1, z2)
    }

    /// Projection onto the `k`-th idempotent coordinate. Ring morphism:
    /// compatible with both addition and multiplication.
    pub fn project(self, k: Component) -> Complex<T> {
        let p = self.to_idempotent();
        match k {
            Component::One => p.h1,
            Component::Two => p.h2,
        }
    }

    /// True when the value is zero or a zero divisor, up to the relative
    /// threshold [`Real::NULL_CONE_TOL`].
    pub fn is_null_cone(self) -> bool {
        let p = self.to_idempotent();
        let a = p.h1.norm();
        let b = p.h2.norm();
        a.min(b) <= T::NULL_CONE_TOL * a.max(b).max(T::one())
    }

    /// Multiplicative inverse `h1^-1 * e1 + h2^-1 * e2`.
    ///
    /// Fails with [`Error::NullCone`] when either idempotent component is
    /// zero within tolerance.
    pub fn inverse(self) -> Result<Self, Error> {
        if self.is_null_cone() {
            return Err(Error::NullCone);
        }
        let p = self.to_idempotent();
        Ok(Bicomplex::from_idempotent(IdempotentPair {
            h1: p.h1.inv(),
            h2: p.h2.inv(),
        }))
    }

    /// Principal `n`-th root, taken componentwise in the idempotent basis.
    /// Zero components map to zero. The other `n*n` roots are reachable
    /// through [`Bicomplex::nth_root_branch`].
    pub fn nth_root(self, n: u32) -> Self {
        self.nth_root_branch(n, 0, 0)
    }

    /// `n`-th root with an explicit branch per idempotent component;
    /// branch `b` rotates the principal component root by `2*pi*b/n`.
    pub fn nth_root_branch(self, n: u32, branch1: u32, branch2: u32) -> Self {
        assert!(n >= 1, "root order must be at least 1");
        if n == 1 {
            return self;
        }
        let p = self.to_idempotent();
        Bicomplex::from_idempotent(IdempotentPair {
            h1: complex_root(p.h1, n, branch1),
            h2: complex_root(p.h2, n, branch2),
        })
    }

    /// Integer power by repeated squaring.
    pub fn powu(self, n: u32) -> Self {
        let mut base = self;
        let mut acc = Bicomplex::one();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Real parts of the idempotent coordinates, as a hyperbolic number.
    /// Lossless exactly when [`Bicomplex::is_hyperbolic`] holds.
    pub fn hyperbolic_part(self) -> Hyperbolic<T> {
        let p = self.to_idempotent();
        Hyperbolic {
            x1: p.h1.re,
            x2: p.h2.re,
        }
    }

    /// True when the idempotent coordinates are real within the null-cone
    /// tolerance, i.e. the value lies in the hyperbolic plane.
    pub fn is_hyperbolic(self) -> bool {
        let p = self.to_idempotent();
        let scale = p.h1.norm().max(p.h2.norm()).max(T::one());
        p.h1.im.abs().max(p.h2.im.abs()) <= T::NULL_CONE_TOL * scale
    }
}

fn complex_root<T: Real>(h: Complex<T>, n: u32, branch: u32) -> Complex<T> {
    if h.is_zero() {
        return Complex::zero();
    }
    // a negative-zero imaginary part would put negative reals on the wrong
    // side of the branch cut (arg = -pi instead of pi)
    let im = if h.im == T::zero() { T::zero() } else { h.im };
    let h = Complex::new(h.re, im);
    let order = T::from_u32(n).expect("small integer fits any float");
    let turn = T::from_u32(branch % n).expect("small integer fits any float");
    let r = h.norm().powf(order.recip());
    let theta = (h.arg() + T::two() * T::PI() * turn) / order;
    Complex::from_polar(r, theta)
}

impl<T: Real> From<IdempotentPair<T>> for Bicomplex<T> {
    fn from(p: IdempotentPair<T>) -> Self {
        Bicomplex::from_idempotent(p)
    }
}

impl<T: Real> From<Complex<T>> for Bicomplex<T> {
    fn from(z: Complex<T>) -> Self {
        Bicomplex::new(z, Complex::zero())
    }
}

impl<T: Real> Hyperbolic<T> {
    pub fn new(x1: T, x2: T) -> Self {
        Hyperbolic { x1, x2 }
    }

    /// Builds from the rectangular form `x + y*j`.
    pub fn from_rect(x: T, y: T) -> Self {
        Hyperbolic {
            x1: x + y,
            x2: x - y,
        }
    }

    /// Membership in the positive cone: both idempotent coordinates
    /// nonnegative, with the small absolute slack [`Real::D_PLUS_SLACK`].
    pub fn in_d_plus(self) -> bool {
        self.x1 >= -T::D_PLUS_SLACK && self.x2 >= -T::D_PLUS_SLACK
    }

    pub fn to_bicomplex(self) -> Bicomplex<T> {
        Bicomplex::from_idempotent(IdempotentPair {
            h1: Complex::new(self.x1, T::zero()),
            h2: Complex::new(self.x2, T::zero()),
        })
    }
}

impl<T: Real> From<Hyperbolic<T>> for Bicomplex<T> {
    fn from(h: Hyperbolic<T>) -> Self {
        h.to_bicomplex()
    }
}

impl<T: Real> Add for Bicomplex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Bicomplex::new(self.z1 + rhs.z1, self.z2 + rhs.z2)
    }
}

impl<T: Real> Sub for Bicomplex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Bicomplex::new(self.z1 - rhs.z1, self.z2 - rhs.z2)
    }
}

impl<T: Real> Neg for Bicomplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Bicomplex::new(-self.z1, -self.z2)
    }
}

impl<T: Real> Mul for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Bicomplex::new(
            self.z1 * rhs.z1 - self.z2 * rhs.z2,
            self.z1 * rhs.z2 + self.z2 * rhs.z1,
        )
    }
}

impl<T: Real> Mul<Complex<T>> for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        Bicomplex::new(self.z1 * rhs, self.z2 * rhs)
    }
}

impl<T: Real> Mul<T> for Bicomplex<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Bicomplex::new(self.z1.scale(rhs), self.z2.scale(rhs))
    }
}

impl<T: Real> AddAssign for Bicomplex<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> SubAssign for Bicomplex<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Real> MulAssign for Bicomplex<T> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<T: Real> Zero for Bicomplex<T> {
    fn zero() -> Self {
        Bicomplex::new(Complex::zero(), Complex::zero())
    }
    fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z2.is_zero()
    }
}

impl<T: Real> One for Bicomplex<T> {
    fn one() -> Self {
        Bicomplex::new(Complex::one(), Complex::zero())
    }
}

impl<T: Real> fmt::Display for Bicomplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*i1 + {}*i2 + {}*j",
            self.z1.re, self.z1.im, self.z2.re, self.z2.im
        )
    }
}

// Wire format: always Cartesian {"z1": [re, im], "z2": [re, im]} on output;
// the idempotent spelling {"h1": .., "h2": ..} is accepted on input.
impl<T: Real + Serialize> Serialize for Bicomplex<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Bicomplex", 2)?;
        st.serialize_field("z1", &self.z1)?;
        st.serialize_field("z2", &self.z2)?;
        st.end()
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for Bicomplex<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr<T> {
            Cartesian { z1: Complex<T>, z2: Complex<T> },
            Idempotent { h1: Complex<T>, h2: Complex<T> },
        }
        let w = match Repr::<T>::deserialize(deserializer)? {
            Repr::Cartesian { z1, z2 } => Bicomplex::new(z1, z2),
            Repr::Idempotent { h1, h2 } => Bicomplex::from_idempotent(IdempotentPair { h1, h2 }),
        };
        if !w.is_finite() {
            return Err(serde::de::Error::custom("non-finite coordinate"));
        }
        Ok(w)
    }
}
