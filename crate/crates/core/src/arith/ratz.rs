use super::{Field, PolyZ, RatFunZ};
use crate::poly::Frac;

/// `f = g' + poly + remainder`, with `remainder` proper and squarefree in its
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalHermite {
    pub g: RatFunZ,
    pub poly: PolyZ,
    pub remainder: RatFunZ,
}

/// Classical Hermite reduction in `Q(z)`, lowering one multiplicity at a
/// time through `B*U*V' + C*V = -A/j`.
pub fn hermite_rational(f: &RatFunZ) -> RationalHermite {
    let (poly, mut a) = f.split_poly();
    let mut d = f.den().clone();
    let mut g = RatFunZ::zero();
    let levels = d.squarefree();
    for (v, i) in levels.into_iter().filter(|(_, i)| *i >= 2) {
        let u = d.exact_div(&v.pow(i as u32)).expect("squarefree part divides");
        let uv1 = &u * &v.partial();
        let (_, s, _) = uv1.xgcd(&v);
        for j in (1..i).rev() {
            let jq = super::rat(j as i64);
            let rhs = a.scale(&jq.recip()).scale(&super::rat(-1));
            let b = (&s * &rhs).rem(&v).expect("nonconstant modulus");
            let c = (&rhs - &(&b * &uv1)).exact_div(&v).expect("Bezout relation");
            g = &g + &Frac::new(b.clone(), v.pow(j as u32)).expect("nonzero");
            a = &c.scale(&(-jq)) - &(&u * &b.partial());
        }
        d = &u * &v;
    }
    RationalHermite {
        g,
        poly,
        remainder: Frac::new(a, d).expect("nonzero"),
    }
}

/// An antiderivative of `f` in `Q(z)`, if one exists.
pub fn is_derivative_in_k(f: &RatFunZ) -> Option<RatFunZ> {
    let red = hermite_rational(f);
    if !red.remainder.is_zero() {
        return None;
    }
    Some(&red.g + &Frac::from_poly(red.poly.integral()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{deriv_z, rat, ratio};
    use crate::poly::Poly;
    use proptest::prelude::*;

    fn zp(c: &[i64]) -> PolyZ {
        Poly::from_coeffs(c.iter().map(|&x| rat(x)).collect())
    }

    fn rz(n: &[i64], d: &[i64]) -> RatFunZ {
        Frac::new(zp(n), zp(d)).unwrap()
    }

    fn reassembles(f: &RatFunZ, red: &RationalHermite) -> bool {
        &(&deriv_z(&red.g) + &Frac::from_poly(red.poly.clone())) + &red.remainder == *f
    }

    #[test]
    fn hermite_rational_examples() {
        let red = hermite_rational(&rz(&[1], &[0, 0, 1]));
        assert_eq!(red.g, rz(&[-1], &[0, 1]));
        assert!(red.poly.is_zero() && red.remainder.is_zero());

        let red = hermite_rational(&rz(&[1], &[0, 1]));
        assert!(red.g.is_zero() && red.poly.is_zero());
        assert_eq!(red.remainder, rz(&[1], &[0, 1]));

        // (3z^2+1)/(z^3+z)^2 = (-1/(z^3+z))'
        let d = zp(&[0, 1, 0, 1]);
        let f = Frac::new(zp(&[1, 0, 3]), &d * &d).unwrap();
        let red = hermite_rational(&f);
        assert!(reassembles(&f, &red));
        assert!(red.poly.is_zero());
        assert!(red.remainder.is_zero() || red.remainder.den() == &d);
    }

    #[test]
    fn derivative_in_k_examples() {
        assert_eq!(is_derivative_in_k(&rz(&[0, 2], &[1])), Some(rz(&[0, 0, 1], &[1])));
        let c = RatFunZ::constant(ratio(1, 12));
        assert_eq!(
            is_derivative_in_k(&c),
            Some(Frac::from_poly(Poly::monomial(ratio(1, 12), 1)))
        );
        assert_eq!(is_derivative_in_k(&rz(&[1], &[0, 1])), None);
    }

    fn arb_zpoly(max_deg: usize) -> impl Strategy<Value = PolyZ> {
        prop::collection::vec(-10i64..=10, 0..=max_deg + 1).prop_map(|c| zp(&c))
    }

    fn arb_ratfun(max_deg: usize) -> impl Strategy<Value = RatFunZ> {
        (arb_zpoly(max_deg), arb_zpoly(max_deg))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| Frac::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn leibniz(f in arb_ratfun(3), g in arb_ratfun(3)) {
            let lhs = deriv_z(&(&f * &g));
            let rhs = &(&deriv_z(&f) * &g) + &(&f * &deriv_z(&g));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_round_trip(f in arb_ratfun(3)) {
            let df = deriv_z(&f);
            let anti = is_derivative_in_k(&df);
            prop_assert!(anti.is_some());
            prop_assert_eq!(deriv_z(&anti.unwrap()), df);
        }

        #[test]
        fn hermite_reassembly(
            n in arb_zpoly(10),
            parts in prop::collection::vec((arb_zpoly(2), 1u32..4), 1..4),
        ) {
            let d = parts.iter().fold(Poly::one(), |acc, (p, m)| {
                if p.is_zero() || acc.deg() + p.deg() * (*m as i64) > 8 { acc } else { &acc * &p.pow(*m) }
            });
            let f = Frac::new(n, d).unwrap();
            let red = hermite_rational(&f);
            prop_assert!(reassembles(&f, &red));
            let (q, _) = red.remainder.split_poly();
            prop_assert!(q.is_zero());
            prop_assert!(red.remainder.den().is_squarefree());
        }
    }
}
