use crate::arith::{Field, RatFunZ};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, KElem};
use crate::poly::{Frac, Poly};
use crate::polyt::{PolyT, RatFunT};

/// `f = g' + f2 + eta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyReduceResult {
    pub g: KElem,
    /// `(a + b t')/q_N` with `deg a, deg b < deg q_N`.
    pub f2: KElem,
    pub eta: PolyT,
}

/// An element of `I_K / q_N` split as `normal + w + r t'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSplit {
    pub normal: KElem,
    pub w: PolyT,
    pub r: PolyT,
}

fn split_component(x: &RatFunT, e: &PolyT) -> Result<(RatFunT, PolyT)> {
    if !x.den().divides(e) {
        return Err(Error::InvalidArgument(
            "element is not in I_K/q_N: denominator does not divide q_N".into(),
        ));
    }
    let num = x.num() * &e.exact_div(x.den())?;
    let (quo, rem) = num.divmod(e)?;
    Ok((Frac::new(rem, e.clone())?, quo))
}

pub fn split_integral(f: &KElem, ctx: &FieldCtx) -> Result<IntegralSplit> {
    let (na, w) = split_component(f.a(), ctx.e())?;
    let (nb, r) = split_component(f.b(), ctx.e())?;
    Ok(IntegralSplit {
        normal: KElem::new(na, nb),
        w,
        r,
    })
}

/// `Upsilon(f)`: the `t`-antiderivative of the polynomial `t'`-coefficient.
pub fn upsilon(f: &KElem, ctx: &FieldCtx) -> Result<PolyT> {
    Ok(split_integral(f, ctx)?.r.integral())
}

/// `S*(f) = w - kappa(Upsilon(f))`.
pub fn s_star(f: &KElem, ctx: &FieldCtx) -> Result<PolyT> {
    let sp = split_integral(f, ctx)?;
    Ok(&sp.w - &sp.r.integral().kappa())
}

/// `(lambda + deg q / 2) * lc(q)`.
pub fn leading_factor(lambda: usize, ctx: &FieldCtx) -> RatFunZ {
    let two_lambda_plus_deg = RatFunZ::from_int(2 * lambda as i64 + ctx.deg_q() as i64);
    let half = RatFunZ::from_int(2).inverse().expect("nonzero");
    &(&two_lambda_plus_deg * &half) * ctx.lc_q()
}

/// Polynomial reduction on `I_K / q_N`.
pub fn poly_reduce(f: &KElem, ctx: &FieldCtx) -> Result<PolyReduceResult> {
    let deg_q = ctx.deg_q();
    let mut cur = f.clone();
    let mut g = KElem::zero();
    loop {
        let s = s_star(&cur, ctx)?;
        let Some(d) = s.degree().filter(|d| *d + 1 >= deg_q) else {
            break;
        };
        let lambda = d + 1 - deg_q;
        let delta = s
            .lc()
            .checked_div(&leading_factor(lambda, ctx))
            .map_err(|_| Error::Internal("l(lambda) vanished".into()))?;
        let term = KElem::new(RatFunT::zero(), Frac::from_poly(Poly::monomial(delta, lambda)));
        cur = &cur - &ctx.deriv(&term);
        g = &g + &term;
    }
    let sp = split_integral(&cur, ctx)?;
    let ups = sp.r.integral();
    let eta = &sp.w - &ups.kappa();
    g = &g + &KElem::from_poly(ups);
    Ok(PolyReduceResult {
        g,
        f2: sp.normal,
        eta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio, Q};
    use crate::polyt::{poly_q, t};

    fn pt(c: &[Q]) -> PolyT {
        poly_q(c)
    }

    fn ctx(g2: Q, g3: Q) -> FieldCtx {
        FieldCtx::from_invariants(g2, g3).unwrap()
    }

    fn tpow(n: usize) -> KElem {
        KElem::from_poly(Poly::monomial(RatFunZ::one(), n))
    }

    fn g_tprime(coeffs: &[Q]) -> KElem {
        KElem::new(RatFunT::zero(), Frac::from_poly(pt(coeffs)))
    }

    #[test]
    fn t_squared() {
        let (g2, g3) = (ratio(7, 3), ratio(-5, 2));
        let c = ctx(g2.clone(), g3);
        let res = poly_reduce(&tpow(2), &c).unwrap();
        assert_eq!(res.g, g_tprime(&[ratio(1, 6)]));
        assert!(res.f2.is_zero());
        assert_eq!(res.eta, pt(&[&g2 / rat(12)]));
    }

    #[test]
    fn t_cubed() {
        let (g2, g3) = (rat(4), rat(1));
        let c = ctx(g2.clone(), g3.clone());
        let res = poly_reduce(&tpow(3), &c).unwrap();
        assert_eq!(res.g, g_tprime(&[rat(0), ratio(1, 10)]));
        assert_eq!(res.eta, pt(&[&g3 / rat(10), rat(3) * &g2 / rat(20)]));
    }

    #[test]
    fn t_fourth() {
        let (g2, g3) = (rat(4), rat(1));
        let c = ctx(g2.clone(), g3.clone());
        let res = poly_reduce(&tpow(4), &c).unwrap();
        assert_eq!(
            res.g,
            g_tprime(&[rat(5) * &g2 / rat(168), rat(0), ratio(1, 14)])
        );
        assert_eq!(res.eta, pt(&[rat(5) * &g2 * &g2 / rat(336), &g3 / rat(7)]));
    }

    #[test]
    fn leading_factor_law() {
        for c in [ctx(rat(0), rat(-4)), ctx(rat(4), rat(1))] {
            for lambda in 0..=6 {
                let term = KElem::new(RatFunT::zero(), Frac::from_poly(Poly::monomial(RatFunZ::one(), lambda)));
                let s = s_star(&c.deriv(&term), &c).unwrap();
                assert_eq!(s.degree(), Some(lambda + c.deg_q() - 1));
                assert_eq!(s.lc(), leading_factor(lambda, &c));
            }
        }
    }

    #[test]
    fn rejects_non_integral_input() {
        let c = ctx(rat(0), rat(-4));
        let f = KElem::from_ratfun(Frac::new(PolyT::one(), t()).unwrap());
        assert!(matches!(poly_reduce(&f, &c), Err(Error::InvalidArgument(_))));
    }
}
