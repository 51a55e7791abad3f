//! Polynomials and rational functions in `t` over `k = Q(z)`.
//!
//! Both derivations of `k[t]` live here: `kappa` differentiates coefficients
//! by `d/dz`, `partial` is the formal `t`-derivative.

use crate::arith::{Field, PolyZ, Q, RatFunZ};
use crate::error::{Error, Result};
use crate::poly::{euclid_gcd, Frac, Poly};

/// `k[t]`.
pub type PolyT = Poly<RatFunZ>;

/// `k(t)`, normalized with a monic denominator.
pub type RatFunT = Frac<RatFunZ>;

/// The variable `t` as a polynomial.
pub fn t() -> PolyT {
    Poly::x()
}

/// Polynomial with rational constant coefficients, lowest degree first.
pub fn poly_q(coeffs: &[Q]) -> PolyT {
    Poly::from_coeffs(coeffs.iter().cloned().map(RatFunZ::constant).collect())
}

/// True when every coefficient is a rational constant (`kappa(p) = 0`).
pub fn has_constant_coeffs(p: &PolyT) -> bool {
    p.coeffs().iter().all(RatFunZ::is_rational)
}

/// Polynomial arithmetic selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    DivMod,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyOpResult {
    Poly(PolyT),
    DivMod(PolyT, PolyT),
}

pub fn poly_op(a: &PolyT, b: &PolyT, op: PolyOp) -> Result<PolyOpResult> {
    Ok(match op {
        PolyOp::Add => PolyOpResult::Poly(a + b),
        PolyOp::Sub => PolyOpResult::Poly(a - b),
        PolyOp::Mul => PolyOpResult::Poly(a * b),
        PolyOp::DivMod => {
            let (q, r) = a.divmod(b)?;
            PolyOpResult::DivMod(q, r)
        }
    })
}

// Q[z][t] as a coefficient vector, used only inside the gcd.
type BiPoly = Vec<PolyZ>;

fn trim(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn clear_denominators(p: &PolyT) -> BiPoly {
    let l = p
        .coeffs()
        .iter()
        .fold(PolyZ::one(), |acc, c| acc.lcm(c.den()));
    p.coeffs()
        .iter()
        .map(|c| c.num() * &l.exact_div(c.den()).expect("lcm is a multiple"))
        .collect()
}

fn primitive_part(p: &BiPoly) -> BiPoly {
    let content = p.iter().fold(PolyZ::zero(), |acc, c| {
        if acc.is_one() {
            acc
        } else {
            acc.gcd(c)
        }
    });
    let content = content.scale(&p.last().map(|c| c.lc()).unwrap_or_else(Q::one));
    if content.is_one() {
        return p.clone();
    }
    p.iter()
        .map(|c| c.exact_div(&content).expect("content divides"))
        .collect()
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut steps = a.len() - db;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lr * bc);
        }
        trim(&mut r);
        steps -= 1;
    }
    // complete the power of lc(b) when degrees dropped by more than one
    let fix = lb.pow(steps as u32);
    if !fix.is_one() {
        for c in r.iter_mut() {
            *c = &*c * &fix;
        }
    }
    r
}

fn exact_div_all(p: &BiPoly, d: &PolyZ) -> BiPoly {
    if d.is_one() {
        return p.clone();
    }
    p.iter()
        .map(|c| c.exact_div(d).expect("subresultant division is exact"))
        .collect()
}

/// Monic gcd over `Q(z)[t]`. Constant coefficients go through Euclid over
/// `Q`; otherwise specialization, interpolation in `z`, and finally the
/// subresultant sequence.
pub fn prs_gcd(a: &PolyT, b: &PolyT) -> PolyT {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_unit() || b.is_unit() {
        return Poly::one();
    }
    if has_constant_coeffs(a) && has_constant_coeffs(b) {
        let to_q = |p: &PolyT| -> Poly<Q> { p.map(|c| c.as_rational().expect("constant")) };
        return to_q(a).gcd(&to_q(b)).map(|c| RatFunZ::constant(c.clone()));
    }
    if has_constant_coeffs(b) {
        return gcd_with_constant(a, b);
    }
    if has_constant_coeffs(a) {
        return gcd_with_constant(b, a);
    }
    if coprime_by_specialization(a, b) {
        return Poly::one();
    }
    interpolation_gcd(a, b).unwrap_or_else(|| subresultant_gcd(a, b))
}

/// Monic gcd of non-constant `a`, `b` from the subresultant remainder
/// sequence over `Q[z][t]`.
fn subresultant_gcd(a: &PolyT, b: &PolyT) -> PolyT {
    let (mut x, mut y) = (
        primitive_part(&clear_denominators(a)),
        primitive_part(&clear_denominators(b)),
    );
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    // subresultant remainder sequence
    let mut g = PolyZ::one();
    let mut h = PolyZ::one();
    loop {
        let delta = (x.len() - y.len()) as u32;
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return Poly::one();
        }
        let r = exact_div_all(&r, &(&g * &h.pow(delta)));
        x = std::mem::replace(&mut y, r);
        g = x.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_div(&h.pow(delta - 1)).expect("exact")
        };
    }
    Poly::from_coeffs(y.into_iter().map(Frac::from_poly).collect()).monic()
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Q], ys: &[Q]) -> PolyZ {
    let mut dd = ys.to_vec();
    for j in 1..xs.len() {
        for i in (j..xs.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = PolyZ::constant(dd[xs.len() - 1].clone());
    for i in (0..xs.len() - 1).rev() {
        let lin = PolyZ::from_coeffs(vec![-xs[i].clone(), Q::one()]);
        p = &(&p * &lin) + &PolyZ::constant(dd[i].clone());
    }
    p
}

/// Gcd by evaluation at `z = 1, 2, ...`, interpolation of `gamma * monic(gcd)`
/// with `gamma` the gcd of the leading coefficients, and verification by
/// pseudo-division. `None` if no candidate verifies within the try budget.
fn interpolation_gcd(a: &PolyT, b: &PolyT) -> Option<PolyT> {
    let x = primitive_part(&clear_denominators(a));
    let y = primitive_part(&clear_denominators(b));
    let (lx, ly) = (x.last()?, y.last()?);
    let gamma = lx.gcd(ly);
    let zdeg = |p: &BiPoly| p.iter().map(|c| c.deg()).max().unwrap_or(0);
    let needed = (zdeg(&x).min(zdeg(&y)) + gamma.deg()) as usize + 1;
    let at = |p: &BiPoly, z: &Q| Poly::from_coeffs(p.iter().map(|c| c.eval(z)).collect());
    let (mut zs, mut images): (Vec<Q>, Vec<Poly<Q>>) = (Vec::new(), Vec::new());
    let mut k = usize::MAX;
    for z0 in 1..=(3 * needed + 10) as i64 {
        let z = Q::from_integer(z0.into());
        if lx.eval(&z).is_zero() || ly.eval(&z).is_zero() {
            continue;
        }
        let g = at(&x, &z).gcd(&at(&y, &z));
        let d = g.degree()?;
        if d == 0 {
            return Some(Poly::one());
        }
        if d > k {
            continue;
        }
        if d < k {
            k = d;
            zs.clear();
            images.clear();
        }
        zs.push(z.clone());
        images.push(g.monic().scale(&gamma.eval(&z)));
        if zs.len() == needed {
            let cand: BiPoly = (0..=k)
                .map(|i| interpolate(&zs, &images.iter().map(|p| p.coeff(i)).collect::<Vec<_>>()))
                .collect();
            let cand = primitive_part(&cand);
            if pseudo_rem(&x, &cand).is_empty() && pseudo_rem(&y, &cand).is_empty() {
                return Some(Poly::from_coeffs(cand.into_iter().map(Frac::from_poly).collect()).monic());
            }
            zs.clear();
            images.clear();
        }
    }
    None
}

/// `a(z0, t)`, or `None` when `z0` is a pole of a coefficient or a root of
/// the leading coefficient.
fn specialize(a: &PolyT, z0: &Q) -> Option<Poly<Q>> {
    let mut out = Vec::with_capacity(a.coeffs().len());
    for c in a.coeffs() {
        let d = c.den().eval(z0);
        if d.is_zero() {
            return None;
        }
        out.push(c.num().eval(z0) / d);
    }
    let p = Poly::from_coeffs(out);
    (p.degree() == a.degree()).then_some(p)
}

/// Sufficient test for `gcd(a, b) = 1`: at a specialization that keeps both
/// degrees, the specialized gcd is a multiple of the image of the true gcd.
fn coprime_by_specialization(a: &PolyT, b: &PolyT) -> bool {
    [3i64, -5, 11]
        .iter()
        .map(|&z| Q::from_integer(z.into()))
        .filter_map(|z0| Some((specialize(a, &z0)?, specialize(b, &z0)?)))
        .take(2)
        .any(|(x, y)| x.gcd(&y).degree() == Some(0))
}

/// `gcd(a, c)` for `c` with constant coefficients. `Q` is algebraically
/// closed in `Q(z)`, so the gcd lies in `Q[t]` and equals the gcd of `c` with
/// every `z`-slice of `a`'s cleared numerator.
fn gcd_with_constant(a: &PolyT, c: &PolyT) -> PolyT {
    let mut g: Poly<Q> = c.map(|x| x.as_rational().expect("constant"));
    let x = clear_denominators(a);
    let max_z = x.iter().map(|p| p.deg()).max().unwrap_or(-1);
    for k in 0..=max_z.max(0) as usize {
        if g.degree() == Some(0) {
            break;
        }
        let slice = Poly::from_coeffs(x.iter().map(|p| p.coeff(k)).collect());
        g = g.gcd(&slice);
    }
    g.monic().map(|c| RatFunZ::constant(c.clone()))
}

/// Reference monic Euclidean gcd over `Q(z)[t]`.
pub fn gcd_t_euclid(a: &PolyT, b: &PolyT) -> PolyT {
    euclid_gcd(a, b)
}

pub fn gcd_t(a: &PolyT, b: &PolyT) -> PolyT {
    a.gcd(b)
}

/// `(g, s, u)` with `s*a + u*b = g`, `g` monic.
pub fn xgcd_t(a: &PolyT, b: &PolyT) -> (PolyT, PolyT, PolyT) {
    a.xgcd(b)
}

pub fn squarefree_decomposition(d: &PolyT) -> Vec<(PolyT, usize)> {
    d.squarefree()
}

pub fn kappa(p: &PolyT) -> PolyT {
    p.kappa()
}

pub fn partial_t(p: &PolyT) -> PolyT {
    p.partial()
}

/// `res_y(d0_const + d0_lin*y, y^2 - q) = d0_const^2 - d0_lin^2 * q`.
pub fn resultant_quadratic_m(d0_const: &PolyT, d0_lin: &PolyT, q: &PolyT) -> PolyT {
    &(d0_const * d0_const) - &(&(d0_lin * d0_lin) * q)
}

/// The unique `r` with `deg r < deg v` and `r = c mod v`.
pub fn mod_reduce(c: &RatFunT, v: &PolyT) -> Result<PolyT> {
    if v.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("modulus must have positive degree".into()));
    }
    let inv = c.den().inverse_mod(v)?;
    (c.num() * &inv).rem(v)
}

fn multiplicity(mut a: PolyT, p: &PolyT) -> i64 {
    let mut n = 0;
    loop {
        let (q, r) = a.divmod(p).expect("nonzero");
        if !r.is_zero() {
            return n;
        }
        a = q;
        n += 1;
    }
}

/// Order of `f` at the irreducible `p`.
pub fn order_at(f: &RatFunT, p: &PolyT) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::OrderOfZero);
    }
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument("place polynomial must be nonconstant".into()));
    }
    Ok(multiplicity(f.num().clone(), p) - multiplicity(f.den().clone(), p))
}

/// Order at infinity: `deg den - deg num`.
pub fn order_at_infinity(f: &RatFunT) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::OrderOfZero);
    }
    Ok(f.den().deg() - f.num().deg())
}
