use crate::arith::{rat, Field, Q, RatFunZ};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, KElem};
use crate::poly::{Frac, Poly};
use crate::polyt::RatFunT;

use super::{integrate, Integral};

/// `g + base + zeta_coeff * zeta` with `zeta' = -t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerEntry {
    pub g: KElem,
    pub base: RatFunZ,
    pub zeta_coeff: Q,
}

impl PowerEntry {
    fn scaled(&self, c: &Q) -> Self {
        let cz = RatFunZ::constant(c.clone());
        PowerEntry {
            g: self.g.scale(&Frac::from_poly(Poly::constant(cz.clone()))),
            base: &self.base * &cz,
            zeta_coeff: &self.zeta_coeff * c,
        }
    }

    fn plus(&self, o: &Self) -> Self {
        PowerEntry {
            g: &self.g + &o.g,
            base: &self.base + &o.base,
            zeta_coeff: &self.zeta_coeff + &o.zeta_coeff,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerRow {
    pub n: usize,
    pub entry: PowerEntry,
}

fn weierstrass_invariants(ctx: &FieldCtx) -> Result<(Q, Q)> {
    ctx.invariants().cloned().ok_or_else(|| {
        Error::InvalidArgument("power table needs q = 4t^3 - g2 t - g3 with rational g2, g3".into())
    })
}

/// Rows `J_0..=J_{n_max}` from the three-term recurrence.
pub fn recurrence_row(n_max: usize, g2: &Q, g3: &Q) -> Vec<PowerEntry> {
    let mut rows: Vec<PowerEntry> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let entry = match n {
            0 => PowerEntry {
                g: KElem::zero(),
                base: RatFunZ::z(),
                zeta_coeff: rat(0),
            },
            1 => PowerEntry {
                g: KElem::zero(),
                base: RatFunZ::zero(),
                zeta_coeff: rat(-1),
            },
            _ => {
                let ni = n as i64;
                let lead = Poly::monomial(RatFunZ::constant(Q::new(1.into(), (4 * ni - 2).into())), n - 2);
                let mut e = PowerEntry {
                    g: KElem::new(RatFunT::zero(), Frac::from_poly(lead)),
                    base: RatFunZ::zero(),
                    zeta_coeff: rat(0),
                };
                let c2 = g2 * Q::new((2 * ni - 3).into(), (8 * ni - 4).into());
                e = e.plus(&rows[n - 2].scaled(&c2));
                if n >= 3 {
                    let c3 = g3 * Q::new((ni - 2).into(), (4 * ni - 2).into());
                    e = e.plus(&rows[n - 3].scaled(&c3));
                }
                e
            }
        };
        rows.push(entry);
    }
    rows
}

/// `integral t^n`, `n = 0..=n_max`, cross-checked between the reducer and
/// the recurrence.
pub fn power_table(n_max: usize, ctx: &FieldCtx) -> Result<Vec<PowerRow>> {
    let (g2, g3) = weierstrass_invariants(ctx)?;
    let expected = recurrence_row(n_max, &g2, &g3);
    expected
        .into_iter()
        .enumerate()
        .map(|(n, rec)| {
            let f = KElem::from_poly(Poly::monomial(RatFunZ::one(), n));
            let (_, integral) = integrate(&f, ctx)?;
            let Integral::Closed(anti) = integral else {
                return Err(Error::Internal(format!("t^{n} did not reduce to a closed form")));
            };
            let got = PowerEntry {
                g: anti.g,
                base: anti.base,
                zeta_coeff: anti.zeta_coeff,
            };
            if got != rec {
                return Err(Error::Internal(format!(
                    "reducer and recurrence disagree at n = {n}"
                )));
            }
            Ok(PowerRow { n, entry: got })
        })
        .collect()
}
