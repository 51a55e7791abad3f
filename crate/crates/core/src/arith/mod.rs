//! Exact scalars and the base differential field `k = Q(z)`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Frac, Poly};

mod modp;
mod ratz;

pub use ratz::{hermite_rational, is_derivative_in_k, RationalHermite};

/// Exact rational scalar; the constants of every field in this crate.
pub type Q = BigRational;

/// `Q[z]`.
pub type PolyZ = Poly<Q>;

/// `k = Q(z)`, normalized with a monic denominator.
pub type RatFunZ = Frac<Q>;

/// Commutative field with exact arithmetic.
///
/// Method names avoid the `std::ops` names so that scalar types which already
/// implement the operator traits do not produce ambiguous calls.
pub trait Field: Clone + Eq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(c: &Q) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Q::from_integer(BigInt::from(n)))
    }

    /// The embedded rational, when the element lies in `Q`.
    fn as_rational(&self) -> Option<Q>;

    /// Monic gcd of two polynomials over `Frac<Self>`.
    ///
    /// `Frac<F>` delegates its polynomial gcd here so that a concrete inner
    /// field can swap in a better algorithm than the Euclidean loop.
    fn nested_poly_gcd(a: &Poly<Frac<Self>>, b: &Poly<Frac<Self>>) -> Poly<Frac<Self>> {
        crate::poly::euclid_gcd(a, b)
    }

    /// Monic gcd of two polynomials over `Self`.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        crate::poly::euclid_gcd(a, b)
    }
}

/// A field with a derivation.
pub trait Differential: Field {
    fn derive(&self) -> Self;
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(c: &Q) -> Self {
        c.clone()
    }
    fn as_rational(&self) -> Option<Q> {
        Some(self.clone())
    }
    fn nested_poly_gcd(a: &Poly<RatFunZ>, b: &Poly<RatFunZ>) -> Poly<RatFunZ> {
        crate::polyt::prs_gcd(a, b)
    }
    fn poly_gcd(a: &Poly<Q>, b: &Poly<Q>) -> Poly<Q> {
        modp::gcd_by_image(a, b).unwrap_or_else(|| crate::poly::euclid_gcd(a, b))
    }
}

impl Differential for Q {
    fn derive(&self) -> Self {
        Zero::zero()
    }
}

impl Differential for RatFunZ {
    /// `d/dz`.
    fn derive(&self) -> Self {
        if self.den().is_one() {
            return Frac::from_poly(self.num().partial());
        }
        let num = &(&self.num().partial() * self.den()) - &(self.num() * &self.den().partial());
        let den = self.den() * self.den();
        Frac::new(num, den).expect("square of a nonzero denominator is nonzero")
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`; never as a float.
pub fn fmt_rational(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl RatFunZ {
    /// The variable `z`.
    pub fn z() -> Self {
        Frac::from_poly(Poly::x())
    }

    pub fn constant(c: Q) -> Self {
        Frac::from_poly(Poly::constant(c))
    }

    /// True when the value is a rational constant.
    pub fn is_rational(&self) -> bool {
        self.den().is_one() && self.num().degree().unwrap_or(0) == 0
    }
}

/// `a op b` in `k`, for the four field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn base_field_op(a: &RatFunZ, b: &RatFunZ, op: FieldOp) -> crate::Result<RatFunZ> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

pub fn deriv_z(f: &RatFunZ) -> RatFunZ {
    f.derive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zpoly(c: &[i64]) -> PolyZ {
        Poly::from_coeffs(c.iter().map(|&x| rat(x)).collect())
    }

    fn rz(n: &[i64], d: &[i64]) -> RatFunZ {
        Frac::new(zpoly(n), zpoly(d)).unwrap()
    }

    #[test]
    fn base_field_examples() {
        let inv_z = rz(&[1], &[0, 1]);
        assert_eq!(base_field_op(&inv_z, &inv_z, FieldOp::Add).unwrap(), rz(&[2], &[0, 1]));
        assert_eq!(rz(&[-1, 0, 1], &[-1, 1]), rz(&[1, 1], &[1]));
        let a = rz(&[1, 1], &[0, 1]);
        let b = rz(&[0, 1], &[1, 1]);
        assert_eq!(base_field_op(&a, &b, FieldOp::Mul).unwrap(), RatFunZ::one());
        assert_eq!(
            base_field_op(&a, &RatFunZ::zero(), FieldOp::Div),
            Err(crate::Error::DivisionByZero)
        );
    }

    #[test]
    fn normalization_is_canonical() {
        // (2z+2)/(4z+4) and 1/2 share a representation
        let a = rz(&[2, 2], &[4, 4]);
        assert_eq!(a.num(), &Poly::constant(ratio(1, 2)));
        assert!(a.den().is_one());
        // denominator made monic: 1/(2z) = (1/2)/z
        let b = rz(&[1], &[0, 2]);
        assert_eq!(b.den(), &zpoly(&[0, 1]));
        assert_eq!(b.num(), &Poly::constant(ratio(1, 2)));
    }

    #[test]
    fn deriv_z_examples() {
        assert_eq!(deriv_z(&rz(&[0, 0, 1], &[1])), rz(&[0, 2], &[1]));
        assert_eq!(deriv_z(&rz(&[1], &[0, 1])), rz(&[-1], &[0, 0, 1]));
        assert!(Field::is_zero(&deriv_z(&RatFunZ::constant(ratio(7, 3)))));
    }
}
