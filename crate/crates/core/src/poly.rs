//! Dense univariate polynomials and normalized fractions over a [`Field`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{Differential, Field, Q};
use crate::error::{Error, Result};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`. Never has a
/// trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_rational(c: &Q) -> Self {
        Self::constant(F::from_rational(c))
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` standing in for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Formal derivative with respect to the polynomial variable.
    pub fn partial(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&F::from_int(i as i64)))
                .collect(),
        )
    }

    /// Formal antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = F::from_int(i as i64 + 1).inverse().expect("nonzero integer");
            coeffs.push(c.times(&k));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.lc().inverse().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![F::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd].times(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(d));
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quo), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Division that is known to be exact; a nonzero remainder is a defect.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self * &other.exact_div(&g).expect("gcd divides")).monic()
    }

    /// Extended Euclid: returns `(g, s, u)` with `g` monic and
    /// `s*self + u*other = g`. Requires the inputs not both zero.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut u0, mut u1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.divmod(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&quo * &s1);
            let u2 = &u0 - &(&quo * &u1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let k = r0.lc().inverse().expect("nonzero");
        (r0.scale(&k), s0.scale(&k), u0.scale(&k))
    }

    /// Inverse of `self` modulo `modulus`, reduced below `deg modulus`.
    pub fn inverse_mod(&self, modulus: &Self) -> Result<Self> {
        let (g, s, _) = self.rem(modulus)?.xgcd(modulus);
        if !g.is_one() {
            return Err(Error::NotInvertible(format!("{modulus:?}")));
        }
        s.rem(modulus)
    }

    /// Yun's squarefree decomposition of a nonzero polynomial: pairs
    /// `(D_i, i)` with monic, squarefree, pairwise coprime `D_i` in increasing
    /// multiplicity order, omitting trivial factors.
    /// `self = lc(self) * prod D_i^i`.
    pub fn squarefree(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let a = self.monic();
        let da = a.partial();
        let g = a.gcd(&da);
        let mut b = a.exact_div(&g).expect("gcd divides");
        let mut c = da.exact_div(&g).expect("gcd divides");
        let mut d = &c - &b.partial();
        let mut i = 1;
        while !b.is_unit() {
            let ai = b.gcd(&d);
            b = b.exact_div(&ai).expect("gcd divides");
            c = d.exact_div(&ai).expect("gcd divides");
            d = &c - &b.partial();
            if !ai.is_unit() {
                out.push((ai, i));
            }
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.partial()).is_unit()
    }
}

impl<F: Differential> Poly<F> {
    /// Differentiates every coefficient with the field's derivation.
    pub fn kappa(&self) -> Self {
        self.map(|c| c.derive())
    }
}

/// Monic Euclidean gcd.
pub fn euclid_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1).expect("nonzero divisor");
        r0 = std::mem::replace(&mut r1, r.monic());
    }
    r0.monic()
}

impl<F: Field> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.plus(s);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Field> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negated(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Field> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.negated()).collect(),
        }
    }
}

/// Normalized quotient `num/den`: coprime, `den` monic and nonzero, zero is
/// `0/1`. Equal values have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frac<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> Frac<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero_frac());
        }
        if den.is_unit() {
            let k = den.lc().inverse().expect("nonzero");
            return Ok(Frac {
                num: num.scale(&k),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let k = den.lc().inverse().expect("nonzero");
        Ok(Frac {
            num: num.scale(&k),
            den: den.scale(&k),
        })
    }

    /// Builds from parts already known to be coprime with monic `den`.
    fn from_normalized(num: Poly<F>, den: Poly<F>) -> Self {
        debug_assert!(den.is_monic());
        Frac { num, den }
    }

    fn zero_frac() -> Self {
        Frac {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Frac {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inverse().ok_or(Error::DivisionByZero)?;
        Ok(self.times(&inv))
    }

    /// Formal derivative in the polynomial variable.
    pub fn partial(&self) -> Self {
        if self.den.is_one() {
            return Frac::from_poly(self.num.partial());
        }
        let num = &(&self.num.partial() * &self.den) - &(&self.num * &self.den.partial());
        Frac::new(num, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero_frac();
        }
        Frac::from_normalized(self.num.scale(c), self.den.clone())
    }

    /// `(quotient, remainder numerator)` so that
    /// `self = quotient + remainder/den` with `deg remainder < deg den`.
    pub fn split_poly(&self) -> (Poly<F>, Poly<F>) {
        self.num.divmod(&self.den).expect("nonzero denominator")
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 {
            self.inverse().ok_or(Error::DivisionByZero)?
        } else {
            self.clone()
        };
        let e = n.unsigned_abs();
        Ok(Frac::from_normalized(base.num.pow(e), base.den.pow(e)))
    }
}

impl<F: Differential> Frac<F> {
    /// Applies the coefficient derivation, treating the variable as a
    /// constant.
    pub fn kappa(&self) -> Self {
        if self.den.is_one() {
            return Frac::from_poly(self.num.kappa());
        }
        let num = &(&self.num.kappa() * &self.den) - &(&self.num * &self.den.kappa());
        Frac::new(num, &self.den * &self.den).expect("nonzero denominator")
    }
}

impl<F: Field> Field for Frac<F> {
    fn zero() -> Self {
        Self::zero_frac()
    }

    fn one() -> Self {
        Frac::from_poly(Poly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            if self.den.is_one() {
                return Frac::from_poly(&self.num + &other.num);
            }
            return Frac::new(&self.num + &other.num, self.den.clone()).expect("nonzero");
        }
        if other.den.is_one() {
            return Frac::from_normalized(&self.num + &(&other.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return Frac::from_normalized(&(&self.num * &other.den) + &other.num, other.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let a = self.den.exact_div(&g).expect("gcd divides");
        let b = other.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&other.num * &a);
        let den = &a * &other.den;
        if num.is_zero() {
            return Self::zero_frac();
        }
        // a and b are coprime to num, so only factors of g can cancel, and
        // each such factor occurs in den exactly as often as in g
        let g2 = num.gcd(&g);
        if g2.is_one() {
            Frac::from_normalized(num, den)
        } else {
            Frac::from_normalized(
                num.exact_div(&g2).expect("gcd divides"),
                den.exact_div(&g2).expect("gcd divides"),
            )
        }
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_frac();
        }
        if self.den.is_one() && other.den.is_one() {
            return Frac::from_poly(&self.num * &other.num);
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let den = &d1 * &d2;
        let k = den.lc().inverse().expect("nonzero");
        Frac::from_normalized((&n1 * &n2).scale(&k), den.scale(&k))
    }

    fn negated(&self) -> Self {
        Frac::from_normalized(-&self.num, self.den.clone())
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let k = self.num.lc().inverse().expect("nonzero");
        Some(Frac::from_normalized(self.den.scale(&k), self.num.scale(&k)))
    }

    fn from_rational(c: &Q) -> Self {
        Frac::from_poly(Poly::from_rational(c))
    }

    fn as_rational(&self) -> Option<Q> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.degree() {
            None => Some(Q::zero()),
            Some(0) => self.num.lc().as_rational(),
            Some(_) => None,
        }
    }

    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        F::nested_poly_gcd(a, b)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl<F: Field> $tr<$ty<F>> for $ty<F> {
            type Output = $ty<F>;
            fn $m(self, rhs: $ty<F>) -> $ty<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Field> $tr<&$ty<F>> for $ty<F> {
            type Output = $ty<F>;
            fn $m(self, rhs: &$ty<F>) -> $ty<F> {
                (&self).$m(rhs)
            }
        }
        impl<F: Field> $tr<$ty<F>> for &$ty<F> {
            type Output = $ty<F>;
            fn $m(self, rhs: $ty<F>) -> $ty<F> {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Poly, Add, add);
forward_binop!(Poly, Sub, sub);
forward_binop!(Poly, Mul, mul);
forward_binop!(Frac, Add, add);
forward_binop!(Frac, Sub, sub);
forward_binop!(Frac, Mul, mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl<F: Field> Add<&Frac<F>> for &Frac<F> {
    type Output = Frac<F>;
    fn add(self, rhs: &Frac<F>) -> Frac<F> {
        self.plus(rhs)
    }
}

impl<F: Field> Sub<&Frac<F>> for &Frac<F> {
    type Output = Frac<F>;
    fn sub(self, rhs: &Frac<F>) -> Frac<F> {
        self.minus(rhs)
    }
}

impl<F: Field> Mul<&Frac<F>> for &Frac<F> {
    type Output = Frac<F>;
    fn mul(self, rhs: &Frac<F>) -> Frac<F> {
        self.times(rhs)
    }
}

impl<F: Field> Neg for &Frac<F> {
    type Output = Frac<F>;
    fn neg(self) -> Frac<F> {
        self.negated()
    }
}

impl<F: Field> Neg for Frac<F> {
    type Output = Frac<F>;
    fn neg(self) -> Frac<F> {
        self.negated()
    }
}

impl<F: Field> From<Poly<F>> for Frac<F> {
    fn from(p: Poly<F>) -> Self {
        Frac::from_poly(p)
    }
}
