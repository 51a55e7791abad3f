use crate::arith::{Field, RatFunZ};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, KElem};
use crate::poly::Frac;
use crate::polyt::{mod_reduce, PolyT, RatFunT};

/// `fN = g' + f0 + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteResult {
    pub g: KElem,
    /// Denominator divides `e`; carries any polynomial residue.
    pub f0: KElem,
    /// Squarefree normal denominator coprime with `e`, proper numerators.
    pub h: KElem,
}

const MAX_STEPS: usize = 10_000;

/// `psi_i = (v^(1-mu) w_i)' * u * v^mu` for the basis `{1, t'}`.
pub fn local_basis_psi(v: &PolyT, mu: usize, u: &PolyT, ctx: &FieldCtx) -> (KElem, KElem) {
    let one_minus_mu = RatFunZ::from_int(1 - mu as i64);
    let u_r = Frac::from_poly(u.clone());
    let kv = v.kappa();
    let dv = v.partial();
    let psi1 = KElem::new(
        Frac::from_poly(kv.scale(&one_minus_mu)),
        Frac::from_poly(dv.scale(&one_minus_mu)),
    )
    .scale(&u_r);
    let t2 = ctx.t_second();
    let v_r = Frac::from_poly(v.clone());
    let a = &Frac::from_poly((&dv * ctx.q()).scale(&one_minus_mu)) + &(&v_r * t2.a());
    let b = &Frac::from_poly(kv.scale(&one_minus_mu)) + &(&v_r * t2.b());
    let psi2 = KElem::new(a, b).scale(&u_r);
    (psi1, psi2)
}

fn as_poly(r: &RatFunT) -> Result<PolyT> {
    if !r.is_poly() {
        return Err(Error::Internal("expected an integral numerator".into()));
    }
    Ok(r.num().clone())
}

/// Hermite reduction of an element whose denominator has only normal
/// factors.
pub fn hermite_reduce(f_n: &KElem, ctx: &FieldCtx) -> Result<HermiteResult> {
    let mut g = KElem::zero();
    // w = f_n - g', updated step by step
    let mut w = f_n.clone();
    let mut steps = 0;
    let w = loop {
        let d = ctx.denominator(&w);
        let Some((v, mu)) = d.squarefree().pop().filter(|(_, mu)| *mu >= 2) else {
            break w;
        };
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::Internal("Hermite reduction did not terminate".into()));
        }
        if ctx.is_special(&v) {
            return Err(Error::InvalidArgument(
                "Hermite reduction needs a purely normal denominator".into(),
            ));
        }
        let u = d.exact_div(&v.pow(mu as u32))?;
        let (psi1, psi2) = local_basis_psi(&v, mu, &u, ctx);
        let d_r = Frac::from_poly(d.clone());
        let f1 = &d_r * w.a();
        let f2 = &d_r * w.b();
        let det = &(psi1.a() * psi2.b()) - &(psi2.a() * psi1.b());
        let det_inv = det
            .inverse()
            .ok_or_else(|| Error::Internal("singular local integral basis".into()))?;
        let c1 = &(&(&f1 * psi2.b()) - &(&f2 * psi2.a())) * &det_inv;
        let c2 = &(&(&f2 * psi1.a()) - &(&f1 * psi1.b())) * &det_inv;
        let r1 = mod_reduce(&c1, &v).map_err(internal)?;
        let r2 = mod_reduce(&c2, &v).map_err(internal)?;
        let vpow = v.pow(mu as u32 - 1);
        let step = KElem::new(
            Frac::new(r1.clone(), vpow.clone())?,
            Frac::new(r2.clone(), vpow.clone())?,
        );
        // remove the poles that t'' would add at e / gcd(e, v)
        let e1 = ctx.e().exact_div(&ctx.e().gcd(&v))?;
        let step = if e1.is_unit() {
            step
        } else {
            let vinv = vpow.inverse_mod(&e1).map_err(internal)?;
            let a1 = (&(-&r1) * &vinv).rem(&e1)?;
            let a2 = (&(-&r2) * &vinv).rem(&e1)?;
            &step + &KElem::new(Frac::from_poly(a1), Frac::from_poly(a2))
        };
        w = &w - &ctx.deriv(&step);
        g = &g + &step;
    };
    let (f0, h) = split_off_e(&w, ctx)?;
    Ok(HermiteResult { g, f0, h })
}

fn internal(e: Error) -> Error {
    Error::Internal(format!("Hermite reduction: {e}"))
}

/// Splits `w` (squarefree normal denominator) into a part over a divisor of
/// `e` and a proper part over the cofactor coprime with `e`.
fn split_off_e(w: &KElem, ctx: &FieldCtx) -> Result<(KElem, KElem)> {
    let d = ctx.denominator(w);
    let big_e = d.gcd(ctx.e());
    let d_star = d.exact_div(&big_e)?;
    if d_star.is_unit() {
        return Ok((w.clone(), KElem::zero()));
    }
    let (_, _, u) = d_star.xgcd(&big_e);
    let split = |x: &RatFunT| -> Result<(RatFunT, RatFunT)> {
        let num = as_poly(&(&Frac::from_poly(d.clone()) * x))?;
        let h = (&num * &u).rem(&d_star)?;
        let rest = (&num - &(&h * &big_e)).exact_div(&d_star)?;
        Ok((Frac::new(rest, big_e.clone())?, Frac::new(h, d_star.clone())?))
    };
    let (fa, ha) = split(w.a())?;
    let (fb, hb) = split(w.b())?;
    Ok((KElem::new(fa, fb), KElem::new(ha, hb)))
}
