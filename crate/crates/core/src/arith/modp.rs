//! Gcd in `Q[x]` through the image modulo a word-size prime.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::Q;
use crate::poly::Poly;

/// `2^61 - 1`.
const P: u64 = (1 << 61) - 1;

fn mul(a: u64, b: u64) -> u64 {
    // Mersenne reduction: 2^61 = 1 (mod p)
    let x = a as u128 * b as u128;
    let r = (x as u64 & P) + (x >> 61) as u64;
    let r = (r & P) + (r >> 61);
    if r >= P {
        r - P
    } else {
        r
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

fn int_image(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r.is_negative() { r + BigInt::from(P) } else { r };
    r.to_u64().expect("reduced below the modulus")
}

/// Image with the degree preserved, or `None` when `p` divides a
/// denominator or the leading coefficient.
fn image(a: &Poly<Q>) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(a.coeffs().len());
    for c in a.coeffs() {
        let d = int_image(c.denom());
        if d == 0 {
            return None;
        }
        out.push(mul(int_image(c.numer()), inv(d)));
    }
    (*out.last()? != 0).then_some(out)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem(mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
    let db = b.len() - 1;
    let lb_inv = inv(b[db]);
    while a.len() > db {
        let top = a.len() - 1;
        let c = mul(a[top], lb_inv);
        for (j, &bj) in b.iter().enumerate() {
            a[top - db + j] = sub(a[top - db + j], mul(c, bj));
        }
        trim(&mut a);
    }
    a
}

fn gcd_image(a: &Poly<Q>, b: &Poly<Q>) -> Option<Vec<u64>> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let (mut x, mut y) = (image(a)?, image(b)?);
    while !y.is_empty() {
        let r = rem(x, &y);
        x = std::mem::replace(&mut y, r);
    }
    let l = inv(*x.last()?);
    Some(x.into_iter().map(|c| mul(c, l)).collect())
}

/// `r/s` with `r = s u (mod p)` and `|r|, s < 2^30`, if it exists.
fn reconstruct(u: u64) -> Option<Q> {
    const BOUND: i128 = 1 << 30;
    let (mut r0, mut r1) = (P as i128, u as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 >= BOUND {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if s1 == 0 || s1.abs() >= BOUND {
        return None;
    }
    let (r, s) = if s1 < 0 { (-r1, -s1) } else { (r1, s1) };
    Some(Q::new(BigInt::from(r), BigInt::from(s)))
}

/// Monic gcd over `Q` from the image mod `p`, verified by exact division.
/// `None` when the prime is unlucky or the coefficients are too tall; the
/// caller then falls back to the Euclidean algorithm. The image of the true
/// gcd divides the gcd of degree-preserving images, so a constant image
/// proves coprimality outright.
pub fn gcd_by_image(a: &Poly<Q>, b: &Poly<Q>) -> Option<Poly<Q>> {
    let g = gcd_image(a, b)?;
    if g.len() == 1 {
        return Some(Poly::one());
    }
    let cand = Poly::from_coeffs(g.into_iter().map(reconstruct).collect::<Option<Vec<_>>>()?);
    (cand.divides(a) && cand.divides(b)).then_some(cand)
}
