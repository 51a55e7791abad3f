use crate::arith::{Field, RatFunZ};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, KElem};
use crate::poly::Frac;
use crate::polyt::{PolyT, RatFunT};

/// `fS = g' + f1 + s` with `s = (theta/gamma) t'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialResult {
    pub g: KElem,
    /// Lies in `I_K / q_N`.
    pub f1: KElem,
    pub s: KElem,
}

const MAX_STEPS: usize = 10_000;

fn numerator_over(x: &RatFunT, d: &PolyT) -> Result<PolyT> {
    Ok(x.num() * &d.exact_div(x.den())?)
}

fn solve_mod(rhs: &PolyT, coeff: &PolyT, v: &PolyT) -> Result<PolyT> {
    let inv = coeff
        .inverse_mod(v)
        .map_err(|e| Error::Internal(format!("special reduction: {e}")))?;
    (rhs * &inv).rem(v)
}

/// Special reduction of an element whose denominator has only special
/// factors. Polynomial parts and `q_N` poles produced along the way are
/// returned in `f1`.
pub fn special_reduce(f_s: &KElem, ctx: &FieldCtx) -> Result<SpecialResult> {
    let mut g = KElem::zero();
    // special part of f_s - g'; the split is linear, so only the special
    // part needs to be carried forward
    let mut sp = ctx.canonical_rep(f_s).special;
    let mut steps = 0;
    let s = loop {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::Internal("special reduction did not terminate".into()));
        }
        let d = ctx.denominator(&sp);
        let Some((v, mu)) = d.squarefree().pop() else {
            break KElem::zero();
        };
        if !v.divides(ctx.q()) {
            return Err(Error::HypothesisViolated(
                "a special pole does not divide q".into(),
            ));
        }
        let u = d.exact_div(&v.pow(mu as u32))?;
        let a = numerator_over(sp.a(), &d)?;
        let b = numerator_over(sp.b(), &d)?;
        let dv = v.partial();
        let a_mod = a.rem(&v)?;
        if !a_mod.is_zero() {
            // (1 - 2mu) u b q_v v_t = 2A  (mod v)
            let q_v = ctx.q().exact_div(&v)?;
            let coeff = (&(&u * &q_v) * &dv).scale(&RatFunZ::from_int(1 - 2 * mu as i64));
            let bb = solve_mod(&a_mod.scale(&RatFunZ::from_int(2)), &coeff, &v)?;
            let step = KElem::new(RatFunT::zero(), Frac::new(bb, v.pow(mu as u32))?);
            sp = ctx.canonical_rep(&(&sp - &ctx.deriv(&step))).special;
            g = &g + &step;
        } else if mu >= 2 {
            // (mu - 1) u a v_t = B  (mod v)
            let coeff = (&u * &dv).scale(&RatFunZ::from_int(mu as i64 - 1));
            let aa = solve_mod(&b.rem(&v)?, &coeff, &v)?;
            let step = KElem::from_ratfun(Frac::new(aa, v.pow(mu as u32 - 1))?);
            sp = ctx.canonical_rep(&(&sp + &ctx.deriv(&step))).special;
            g = &g - &step;
        } else {
            let theta = b.rem(&v)?;
            break KElem::new(RatFunT::zero(), Frac::new(theta, v)?);
        }
    };
    let f1 = &(f_s - &ctx.deriv(&g)) - &s;
    Ok(SpecialResult { g, f1, s })
}
