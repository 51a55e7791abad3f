//! Seeded random elements of `K` shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wpint::arith::{rat, ratio};
use wpint::field::{FieldCtx, KElem};
use wpint::{Frac, Poly, PolyT, RatFunZ, Q};

pub fn pt(c: &[i64]) -> PolyT {
    Poly::from_coeffs(c.iter().map(|&x| RatFunZ::constant(rat(x))).collect())
}

pub fn tpow(n: usize) -> KElem {
    KElem::from_poly(Poly::monomial(RatFunZ::constant(rat(1)), n))
}

pub fn q_const(c: Q) -> KElem {
    KElem::from_rational(c)
}

/// Denominator pool: `t, t+1, t^2-t+1, t^2-2` plus the monic irreducible
/// factors of `q` supplied by the caller.
pub fn denominator_pool(q_factors: &[PolyT]) -> Vec<PolyT> {
    let mut pool = vec![pt(&[0, 1]), pt(&[1, 1]), pt(&[1, -1, 1]), pt(&[-2, 0, 1])];
    for f in q_factors {
        if !pool.contains(f) {
            pool.push(f.clone());
        }
    }
    pool
}

/// Rational of height at most 10.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Q {
    ratio(rng.gen_range(-10..=10), rng.gen_range(1..=10))
}

/// Coefficient in `Q(z)`: mostly rational, sometimes `a + b z`.
pub fn coeff(rng: &mut ChaCha8Rng, with_z: bool) -> RatFunZ {
    let c = RatFunZ::constant(small_rational(rng));
    if with_z && rng.gen_bool(0.25) {
        &c + &(&RatFunZ::z() * &RatFunZ::constant(small_rational(rng)))
    } else {
        c
    }
}

pub fn poly(rng: &mut ChaCha8Rng, max_deg: usize, with_z: bool) -> PolyT {
    let d = rng.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=d).map(|_| coeff(rng, with_z)).collect())
}

/// Product of up to two pool elements, multiplicities at most 2.
pub fn denominator(rng: &mut ChaCha8Rng, pool: &[PolyT]) -> PolyT {
    let mut d = PolyT::one();
    for _ in 0..rng.gen_range(0..=2) {
        let p = &pool[rng.gen_range(0..pool.len())];
        d = &d * &p.pow(rng.gen_range(1..=2));
    }
    d
}

/// `(A + B t')/D` with `deg A, deg B <= 6`.
pub fn element(rng: &mut ChaCha8Rng, pool: &[PolyT], with_z: bool) -> KElem {
    let d = denominator(rng, pool);
    KElem::new(
        Frac::new(poly(rng, 6, with_z), d.clone()).unwrap(),
        Frac::new(poly(rng, 6, with_z), d).unwrap(),
    )
}

/// The fields used for randomized checks, with the factors of `q`.
pub fn random_fields() -> Vec<(FieldCtx, Vec<PolyT>)> {
    vec![
        // 4t^3 + 4 = 4 (t+1)(t^2-t+1)
        (
            FieldCtx::from_invariants(rat(0), rat(-4)).unwrap(),
            vec![pt(&[1, 1]), pt(&[1, -1, 1])],
        ),
        // 4t^3 - 4t - 1 is irreducible over Q
        (
            FieldCtx::from_invariants(rat(4), rat(1)).unwrap(),
            vec![Poly::from_coeffs(vec![
                RatFunZ::constant(ratio(-1, 4)),
                RatFunZ::constant(rat(-1)),
                RatFunZ::constant(rat(0)),
                RatFunZ::constant(rat(1)),
            ])],
        ),
    ]
}
