//! The Weierstrass-like field `K = k(t, t')` with `(t')^2 = q`.

use std::ops::{Add, Neg, Sub};

use crate::arith::{rat, Field, Q, RatFunZ};
use crate::error::{Error, Result};
use crate::poly::{Frac, Poly};
use crate::polyt::{has_constant_coeffs, resultant_quadratic_m, PolyT, RatFunT};

/// Whether every special point of `y^2 - q` is known to be constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisMode {
    /// `q` has constant coefficients, so the hypothesis holds.
    AutoVerified,
    /// Accepted on the caller's word; verdicts are conditional.
    Assumed,
}

/// Extension data for `(t')^2 = q`.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    q: PolyT,
    lc_q: RatFunZ,
    q_s: PolyT,
    q_n: PolyT,
    e: PolyT,
    mode: HypothesisMode,
    invariants: Option<(Q, Q)>,
    // t'' = half_dq + kq_over_2q * t'
    half_dq: PolyT,
    kq_over_2q: RatFunT,
}

impl FieldCtx {
    /// `q = 4t^3 - g2*t - g3`.
    pub fn from_invariants(g2: Q, g3: Q) -> Result<Self> {
        let disc = &(&rat(27) * &g3) * &g3 - &(&(&g2 * &g2) * &g2);
        if Field::is_zero(&disc) {
            return Err(Error::DegenerateCurve);
        }
        let q = crate::polyt::poly_q(&[-g3, -g2, rat(0), rat(4)]);
        Self::from_q(q, false)
    }

    pub fn from_q(q: PolyT, assume_hypothesis: bool) -> Result<Self> {
        if q.deg() < 3 {
            return Err(Error::InvalidField(format!(
                "deg q = {} but at least 3 is required",
                q.deg()
            )));
        }
        if !q.is_squarefree() {
            return Err(Error::InvalidField("q is not squarefree".into()));
        }
        let mode = if has_constant_coeffs(&q) {
            HypothesisMode::AutoVerified
        } else if assume_hypothesis {
            HypothesisMode::Assumed
        } else {
            return Err(Error::HypothesisNotAssured);
        };
        let (q_n, q_s) = split_against(&q, &q);
        if !has_constant_coeffs(&q_s) {
            return Err(Error::HypothesisViolated(
                "a special factor of q has non-constant coefficients".into(),
            ));
        }
        let e = if q_n.is_unit() {
            PolyT::one()
        } else {
            q_n.monic()
        };
        let invariants = weierstrass_invariants(&q);
        let half = RatFunZ::constant(Q::new(1.into(), 2.into()));
        let half_dq = q.partial().scale(&half);
        let kq_over_2q = Frac::new(q.kappa(), q.scale(&RatFunZ::from_int(2)))?;
        Ok(FieldCtx {
            lc_q: q.lc(),
            q,
            q_s,
            q_n,
            e,
            mode,
            invariants,
            half_dq,
            kq_over_2q,
        })
    }

    pub fn q(&self) -> &PolyT {
        &self.q
    }

    pub fn lc_q(&self) -> &RatFunZ {
        &self.lc_q
    }

    /// Monic product of the special factors of `q`.
    pub fn q_s(&self) -> &PolyT {
        &self.q_s
    }

    /// Normal cofactor, carrying the leading coefficient of `q`.
    pub fn q_n(&self) -> &PolyT {
        &self.q_n
    }

    /// Differential denominator of `{1, t'}`, monic.
    pub fn e(&self) -> &PolyT {
        &self.e
    }

    pub fn mode(&self) -> HypothesisMode {
        self.mode
    }

    pub fn is_conditional(&self) -> bool {
        self.mode == HypothesisMode::Assumed
    }

    /// `(g2, g3)` when `q = 4t^3 - g2*t - g3` with rational invariants.
    pub fn invariants(&self) -> Option<&(Q, Q)> {
        self.invariants.as_ref()
    }

    pub fn deg_q(&self) -> usize {
        self.q.degree().expect("q is nonzero")
    }

    /// `t''`.
    pub fn t_second(&self) -> KElem {
        KElem::new(Frac::from_poly(self.half_dq.clone()), self.kq_over_2q.clone())
    }

    pub fn mul(&self, x: &KElem, y: &KElem) -> KElem {
        let q = Frac::from_poly(self.q.clone());
        let a = &(&x.a * &y.a) + &(&(&x.b * &y.b) * &q);
        let b = &(&x.a * &y.b) + &(&x.b * &y.a);
        KElem::new(a, b)
    }

    /// `A^2 - B^2 q`.
    pub fn norm(&self, x: &KElem) -> RatFunT {
        let q = Frac::from_poly(self.q.clone());
        &(&x.a * &x.a) - &(&(&x.b * &x.b) * &q)
    }

    pub fn inv(&self, x: &KElem) -> Result<KElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm(x);
        // q is squarefree of degree >= 3, so it is not a square in k(t)
        let n_inv = n
            .inverse()
            .ok_or_else(|| Error::Internal("zero norm of a nonzero element".into()))?;
        Ok(KElem::new(&x.a * &n_inv, -&(&x.b * &n_inv)))
    }

    pub fn div(&self, x: &KElem, y: &KElem) -> Result<KElem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &KElem, n: i32) -> Result<KElem> {
        let base = if n < 0 { self.inv(x)? } else { x.clone() };
        let mut acc = KElem::one();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    /// The derivation of `K`.
    ///
    /// With `a' = kappa(a) + partial(a) t'` on `k(t)` and
    /// `t'' = partial(q)/2 + kappa(q)/(2q) t'`.
    pub fn deriv(&self, f: &KElem) -> KElem {
        let q = Frac::from_poly(self.q.clone());
        let (a, b) = (&f.a, &f.b);
        let db = b.partial();
        let ra = &(&a.kappa() + &(&db * &q)) + &(b * &Frac::from_poly(self.half_dq.clone()));
        let rb = &(&a.partial() + &b.kappa()) + &(b * &self.kq_over_2q);
        KElem::new(ra, rb)
    }

    /// Splitting factorization `d = D_N * D_S`: `D_S` monic with only
    /// special factors, `D_N` the normal cofactor carrying `lc(d)`.
    pub fn splitting_factorization(&self, d: &PolyT) -> (PolyT, PolyT) {
        split_against(d, &self.q)
    }

    /// Whether the irreducible `p` is special.
    pub fn is_special(&self, p: &PolyT) -> bool {
        !special_gcd(p, &self.q).is_one()
    }

    /// Unique `f = N(f) + S(f)` over the basis `{1, t'}`.
    pub fn canonical_rep(&self, f: &KElem) -> CanonicalRep {
        let d = f.a.den().lcm(f.b.den());
        let (d_n, d_s) = self.splitting_factorization(&d);
        if d_n.is_unit() {
            return CanonicalRep {
                normal: KElem::zero(),
                special: f.clone(),
            };
        }
        let (_, _, u) = d_n.xgcd(&d_s);
        let split = |x: &RatFunT| -> (RatFunT, RatFunT) {
            let num = x.num() * &d.exact_div(x.den()).expect("lcm is a multiple");
            let n = (&num * &u).rem(&d_n).expect("nonconstant");
            let s = (&num - &(&n * &d_s)).exact_div(&d_n).expect("partial fraction");
            (
                Frac::new(n, d_n.clone()).expect("nonzero"),
                Frac::new(s, d_s.clone()).expect("nonzero"),
            )
        };
        let (an, as_) = split(&f.a);
        let (bn, bs) = split(&f.b);
        CanonicalRep {
            normal: KElem::new(an, bn),
            special: KElem::new(as_, bs),
        }
    }

    /// Common denominator of `f` with respect to `{1, t'}`, monic.
    pub fn denominator(&self, f: &KElem) -> PolyT {
        f.a.den().lcm(f.b.den())
    }
}

fn weierstrass_invariants(q: &PolyT) -> Option<(Q, Q)> {
    if q.degree() != Some(3) || !has_constant_coeffs(q) {
        return None;
    }
    let c = |i: usize| q.coeff(i).as_rational().expect("constant");
    if c(3) != rat(4) || !Field::is_zero(&c(2)) {
        return None;
    }
    Some((-c(1), -c(0)))
}

/// `gcd(res_y(kappa(p) + partial(p) y, y^2 - q), p)`.
fn special_gcd(p: &PolyT, q: &PolyT) -> PolyT {
    let r = resultant_quadratic_m(&p.kappa(), &p.partial(), q);
    r.gcd(p)
}

fn split_against(d: &PolyT, q: &PolyT) -> (PolyT, PolyT) {
    let mut d_n = Poly::constant(d.lc());
    let mut d_s = PolyT::one();
    if d.is_zero() {
        return (PolyT::zero(), d_s);
    }
    for (di, mu) in d.squarefree() {
        let g = special_gcd(&di, q);
        let rest = di.exact_div(&g).expect("gcd divides");
        d_s = &d_s * &g.pow(mu as u32);
        d_n = &d_n * &rest.pow(mu as u32);
    }
    (d_n, d_s)
}

/// `a + b t'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KElem {
    a: RatFunT,
    b: RatFunT,
}

impl KElem {
    pub fn new(a: RatFunT, b: RatFunT) -> Self {
        KElem { a, b }
    }

    pub fn zero() -> Self {
        KElem::new(RatFunT::zero(), RatFunT::zero())
    }

    pub fn one() -> Self {
        KElem::new(RatFunT::one(), RatFunT::zero())
    }

    /// `t'`.
    pub fn tprime() -> Self {
        KElem::new(RatFunT::zero(), RatFunT::one())
    }

    pub fn t() -> Self {
        Self::from_poly(crate::polyt::t())
    }

    pub fn from_poly(p: PolyT) -> Self {
        KElem::new(Frac::from_poly(p), RatFunT::zero())
    }

    pub fn from_ratfun(r: RatFunT) -> Self {
        KElem::new(r, RatFunT::zero())
    }

    pub fn from_base(c: RatFunZ) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_rational(c: Q) -> Self {
        Self::from_base(RatFunZ::constant(c))
    }

    pub fn a(&self) -> &RatFunT {
        &self.a
    }

    pub fn b(&self) -> &RatFunT {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Multiplies both components by an element of `k(t)`.
    pub fn scale(&self, c: &RatFunT) -> Self {
        KElem::new(&self.a * c, &self.b * c)
    }

    /// Both components are polynomials in `t`, i.e. the element is integral.
    pub fn is_integral(&self) -> bool {
        self.a.is_poly() && self.b.is_poly()
    }
}

impl Add<&KElem> for &KElem {
    type Output = KElem;
    fn add(self, rhs: &KElem) -> KElem {
        KElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&KElem> for &KElem {
    type Output = KElem;
    fn sub(self, rhs: &KElem) -> KElem {
        KElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem::new(-&self.a, -&self.b)
    }
}

impl Add for KElem {
    type Output = KElem;
    fn add(self, rhs: KElem) -> KElem {
        &self + &rhs
    }
}

impl Sub for KElem {
    type Output = KElem;
    fn sub(self, rhs: KElem) -> KElem {
        &self - &rhs
    }
}

impl Neg for KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        -&self
    }
}

/// `f = normal + special`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalRep {
    pub normal: KElem,
    pub special: KElem,
}

/// Field arithmetic selector for [`k_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn k_op(ctx: &FieldCtx, a: &KElem, b: &KElem, op: KOp) -> Result<KElem> {
    Ok(match op {
        KOp::Add => a + b,
        KOp::Sub => a - b,
        KOp::Mul => ctx.mul(a, b),
        KOp::Div => ctx.div(a, b)?,
    })
}
