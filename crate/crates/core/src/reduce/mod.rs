//! The three reductions and the whole-reduction decomposition
//! `f = g' + h + s + l + eta`.

mod hermite;
mod polynomial;
mod special;
mod table;

pub use hermite::{hermite_reduce, local_basis_psi, HermiteResult};
pub use polynomial::{
    leading_factor, poly_reduce, s_star, split_integral, upsilon, IntegralSplit, PolyReduceResult,
};
pub use special::{special_reduce, SpecialResult};
pub use table::{power_table, recurrence_row, PowerEntry, PowerRow};

use crate::arith::{is_derivative_in_k, Field, Q, RatFunZ};
use crate::error::Result;
use crate::field::{FieldCtx, KElem};
use crate::poly::Frac;
use crate::polyt::PolyT;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `f` has an antiderivative in `K`.
    InField,
    /// No antiderivative in `K`; the elementary test is inconclusive.
    NotInField,
    /// No elementary antiderivative over `K`.
    NotElementary,
    /// Output of [`elementary_necessary`] when the degree bound holds.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::InField => "InField",
            Verdict::NotInField => "NotInField",
            Verdict::NotElementary => "NotElementary",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub g: KElem,
    pub h: KElem,
    pub s: KElem,
    pub l: KElem,
    pub eta: PolyT,
    pub eta_antideriv: Option<RatFunZ>,
    /// Coefficient of the formal `zeta` (with `zeta' = -t`) when the
    /// integral fits `g + c*zeta + F(z)`.
    pub zeta_coeff: Option<Q>,
    pub verdict: Verdict,
    pub conditional: bool,
}

impl ReductionOutcome {
    /// `h`, `s` and `l` all vanish.
    pub fn remainders_vanish(&self) -> bool {
        self.h.is_zero() && self.s.is_zero() && self.l.is_zero()
    }

    /// `eta` without its constant term.
    pub fn eta_positive_part(&self) -> PolyT {
        let mut c = self.eta.coeffs().to_vec();
        if let Some(c0) = c.first_mut() {
            *c0 = RatFunZ::zero();
        }
        crate::poly::Poly::from_coeffs(c)
    }

    /// Sum of the non-integrated parts.
    pub fn remainder_sum(&self) -> KElem {
        &(&(&self.h + &self.s) + &self.l) + &KElem::from_poly(self.eta.clone())
    }
}

/// Full decomposition of `f` with verdict.
pub fn full_reduce(f: &KElem, ctx: &FieldCtx) -> Result<ReductionOutcome> {
    let rep = ctx.canonical_rep(f);
    let her = hermite_reduce(&rep.normal, ctx)?;
    let spe = special_reduce(&rep.special, ctx)?;
    let pol = poly_reduce(&(&her.f0 + &spe.f1), ctx)?;
    let g = &(&her.g + &spe.g) + &pol.g;
    let mut out = ReductionOutcome {
        g,
        h: her.h,
        s: spe.s,
        l: pol.f2,
        eta: pol.eta,
        eta_antideriv: None,
        zeta_coeff: None,
        verdict: Verdict::NotInField,
        conditional: ctx.is_conditional(),
    };
    if out.remainders_vanish() {
        if out.eta.degree().unwrap_or(0) == 0 {
            out.eta_antideriv = is_derivative_in_k(&out.eta.coeff(0));
        } else if ctx.deg_q() == 3 && out.eta.degree() == Some(1) {
            let c1 = out.eta.coeff(1).as_rational();
            if let (Some(c1), Some(_)) = (c1, is_derivative_in_k(&out.eta.coeff(0))) {
                out.zeta_coeff = Some(-c1);
            }
        }
    }
    out.verdict = if out.eta_antideriv.is_some() {
        Verdict::InField
    } else if elementary_necessary(&out, ctx) == Verdict::NotElementary {
        Verdict::NotElementary
    } else {
        Verdict::NotInField
    };
    Ok(out)
}

/// Necessary condition for an elementary integral: the positive-degree part
/// of `eta` has degree at most `deg q / 2 - 1`. Only ever rejects.
pub fn elementary_necessary(outcome: &ReductionOutcome, ctx: &FieldCtx) -> Verdict {
    let deg_eta = outcome.eta_positive_part().deg().max(0);
    if 2 * deg_eta > ctx.deg_q() as i64 - 2 {
        Verdict::NotElementary
    } else {
        Verdict::Inconclusive
    }
}

/// `g + F(z) + zeta_coeff * zeta`, where `zeta' = -t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antiderivative {
    pub g: KElem,
    pub base: RatFunZ,
    pub zeta_coeff: Q,
}

impl Antiderivative {
    /// The derivative, with `zeta'` expanded as `-t`.
    pub fn derivative(&self, ctx: &FieldCtx) -> KElem {
        let base = KElem::from_base(self.base.derive_z());
        let zeta = KElem::from_poly(crate::polyt::t()).scale(&Frac::from_poly(
            crate::poly::Poly::constant(RatFunZ::constant(-&self.zeta_coeff)),
        ));
        &(&ctx.deriv(&self.g) + &base) + &zeta
    }
}

trait DeriveZ {
    fn derive_z(&self) -> RatFunZ;
}

impl DeriveZ for RatFunZ {
    fn derive_z(&self) -> RatFunZ {
        crate::arith::deriv_z(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    HermiteRemainder,
    SpecialRemainder,
    NormalPolynomialRemainder,
    PolynomialRemainder,
}

impl Obstruction {
    pub fn describe(self) -> &'static str {
        match self {
            Obstruction::HermiteRemainder => "nonzero Hermite remainder h",
            Obstruction::SpecialRemainder => "nonzero special remainder s",
            Obstruction::NormalPolynomialRemainder => "nonzero remainder l over q_N",
            Obstruction::PolynomialRemainder => "polynomial remainder eta is not integrable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Integral {
    Closed(Antiderivative),
    Failed(Vec<Obstruction>),
}

pub fn integrate(f: &KElem, ctx: &FieldCtx) -> Result<(ReductionOutcome, Integral)> {
    let out = full_reduce(f, ctx)?;
    let integral = integral_of(&out);
    Ok((out, integral))
}

/// Builds the closed form (or failure report) from a reduction outcome.
pub fn integral_of(out: &ReductionOutcome) -> Integral {
    if let Some(anti) = &out.eta_antideriv {
        return Integral::Closed(Antiderivative {
            g: out.g.clone(),
            base: anti.clone(),
            zeta_coeff: Q::zero(),
        });
    }
    if let Some(zc) = &out.zeta_coeff {
        let base = is_derivative_in_k(&out.eta.coeff(0)).expect("checked by full_reduce");
        return Integral::Closed(Antiderivative {
            g: out.g.clone(),
            base,
            zeta_coeff: zc.clone(),
        });
    }
    let mut obs = Vec::new();
    if !out.h.is_zero() {
        obs.push(Obstruction::HermiteRemainder);
    }
    if !out.s.is_zero() {
        obs.push(Obstruction::SpecialRemainder);
    }
    if !out.l.is_zero() {
        obs.push(Obstruction::NormalPolynomialRemainder);
    }
    if obs.is_empty() {
        obs.push(Obstruction::PolynomialRemainder);
    }
    Integral::Failed(obs)
}
