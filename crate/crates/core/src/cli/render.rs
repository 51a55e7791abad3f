//! Text, LaTeX and JSON renderers. Scalars are always exact rationals.

use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::arith::{fmt_rational, Field, PolyZ, Q, RatFunZ};
use crate::field::{FieldCtx, KElem};
use crate::polyt::{PolyT, RatFunT};
use crate::reduce::{Antiderivative, Integral, PowerEntry, ReductionOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Reparses under the expression grammar.
    Text,
    Latex,
}

struct Names {
    t: &'static str,
    tprime: &'static str,
    z: &'static str,
    zeta: &'static str,
}

impl Style {
    fn names(self, t_var: &'static str) -> Names {
        match self {
            Style::Text => Names {
                t: t_var,
                tprime: "p'",
                z: "z",
                zeta: "zeta",
            },
            Style::Latex => Names {
                t: if t_var == "p" { "\\wp" } else { t_var },
                tprime: "\\wp'",
                z: "z",
                zeta: "\\zeta",
            },
        }
    }

    fn times(self) -> &'static str {
        match self {
            Style::Text => "*",
            Style::Latex => " ",
        }
    }

    fn power(self, var: &str, k: usize) -> String {
        match (self, k) {
            (_, 1) => var.to_string(),
            (Style::Text, _) => format!("{var}^{k}"),
            (Style::Latex, _) => format!("{var}^{{{k}}}"),
        }
    }

    fn fraction(self, num: &str, den: &str) -> String {
        match self {
            Style::Text => format!("({num})/({den})"),
            Style::Latex => format!("\\frac{{{num}}}{{{den}}}"),
        }
    }

    fn group(self, s: &str) -> String {
        match self {
            Style::Text => format!("({s})"),
            Style::Latex => format!("\\left({s}\\right)"),
        }
    }

    fn rational(self, c: &Q) -> String {
        match self {
            Style::Text => fmt_rational(c),
            Style::Latex if c.denom().is_one() => c.numer().to_string(),
            Style::Latex => format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
        }
    }
}

/// Joins signed terms `(negative, magnitude)`.
fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        // fold a leading sign of a compound term into the joiner
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) if !neg && i > 0 => (true, rest.to_string()),
            _ => (neg, body),
        };
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// `coeff * monomial` with a rational coefficient, as `(negative, magnitude)`.
fn rational_term(style: Style, c: &Q, mono: Option<String>) -> (bool, String) {
    let mag = c.abs();
    let body = match mono {
        None => style.rational(&mag),
        Some(m) if One::is_one(&mag) => m,
        Some(m) => format!("{}{}{m}", style.rational(&mag), style.times()),
    };
    (c.is_negative(), body)
}

fn polyz_terms(style: Style, p: &PolyZ, z: &str) -> Vec<(bool, String)> {
    (0..=p.deg().max(0) as usize)
        .rev()
        .filter(|&k| !p.coeff(k).is_zero())
        .map(|k| rational_term(style, &p.coeff(k), (k > 0).then(|| style.power(z, k))))
        .collect()
}

pub fn polyz(style: Style, p: &PolyZ) -> String {
    join_terms(polyz_terms(style, p, style.names("p").z))
}

pub fn ratfunz(style: Style, r: &RatFunZ) -> String {
    if r.den().is_one() {
        polyz(style, r.num())
    } else {
        style.fraction(&polyz(style, r.num()), &polyz(style, r.den()))
    }
}

/// A `k`-coefficient times a monomial.
fn coeff_term(style: Style, c: &RatFunZ, mono: Option<String>) -> (bool, String) {
    if let Some(q) = c.as_rational() {
        return rational_term(style, &q, mono);
    }
    // a single signed monomial in z needs no grouping
    let terms = if c.den().is_one() { polyz_terms(style, c.num(), "z") } else { vec![] };
    let (neg, inner) = match terms.as_slice() {
        [(neg, body)] => (*neg, body.clone()),
        _ => (false, style.group(&ratfunz(style, c))),
    };
    match mono {
        None => (neg, inner),
        Some(m) => (neg, format!("{inner}{}{m}", style.times())),
    }
}

pub fn polyt(style: Style, p: &PolyT, var: &'static str) -> String {
    let names = style.names(var);
    let terms = (0..=p.deg().max(0) as usize)
        .rev()
        .filter(|&k| !p.coeff(k).is_zero())
        .map(|k| coeff_term(style, &p.coeff(k), (k > 0).then(|| style.power(names.t, k))))
        .collect();
    join_terms(terms)
}

pub fn ratfunt(style: Style, r: &RatFunT, var: &'static str) -> String {
    if r.den().is_one() {
        polyt(style, r.num(), var)
    } else {
        style.fraction(&polyt(style, r.num(), var), &polyt(style, r.den(), var))
    }
}

/// Canonical `A + (B)*p'`.
pub fn kelem(style: Style, f: &KElem) -> String {
    let names = style.names("p");
    let a = ratfunt(style, f.a(), "p");
    if f.b().is_zero() {
        return a;
    }
    let b = format!(
        "{}{}{}",
        style.group(&ratfunt(style, f.b(), "p")),
        style.times(),
        names.tprime
    );
    if f.a().is_zero() {
        b
    } else {
        format!("{a} + {b}")
    }
}

pub fn antiderivative(style: Style, anti: &Antiderivative) -> String {
    let names = style.names("p");
    let mut parts: Vec<(bool, String)> = Vec::new();
    if !anti.g.is_zero() {
        parts.push((false, kelem(style, &anti.g)));
    }
    if !anti.base.is_zero() {
        parts.push((false, ratfunz(style, &anti.base)));
    }
    if !anti.zeta_coeff.is_zero() {
        parts.push(rational_term(style, &anti.zeta_coeff, Some(names.zeta.to_string())));
    }
    join_terms(parts)
}

fn frac_json(r: &RatFunT, var: &'static str) -> Value {
    json!({
        "num": polyt(Style::Text, r.num(), var),
        "den": polyt(Style::Text, r.den(), var),
    })
}

pub fn kelem_json(f: &KElem) -> Value {
    json!({ "A": frac_json(f.a(), "p"), "B": frac_json(f.b(), "p") })
}

pub fn field_json(ctx: &FieldCtx) -> Value {
    json!({
        "q": polyt(Style::Text, ctx.q(), "t"),
        "qN": polyt(Style::Text, ctx.q_n(), "t"),
        "qS": polyt(Style::Text, ctx.q_s(), "t"),
    })
}

pub fn outcome_json(ctx: &FieldCtx, out: &ReductionOutcome, integral: &Integral) -> Value {
    json!({
        "field": field_json(ctx),
        "g": kelem_json(&out.g),
        "h": kelem_json(&out.h),
        "s": kelem_json(&out.s),
        "l": kelem_json(&out.l),
        "eta": kelem_json(&KElem::from_poly(out.eta.clone())),
        "verdict": out.verdict.as_str(),
        "conditional": out.conditional,
        "zeta_coeff": out.zeta_coeff.as_ref().map(fmt_rational),
        "antiderivative": match integral {
            Integral::Closed(a) => Value::String(antiderivative(Style::Text, a)),
            Integral::Failed(_) => Value::Null,
        },
    })
}

pub fn outcome_text(style: Style, ctx: &FieldCtx, out: &ReductionOutcome, integral: &Integral) -> String {
    let eta = KElem::from_poly(out.eta.clone());
    let mut lines = vec![
        format!("q = {}", polyt(style, ctx.q(), "t")),
        format!("g = {}", kelem(style, &out.g)),
        format!("h = {}", kelem(style, &out.h)),
        format!("s = {}", kelem(style, &out.s)),
        format!("l = {}", kelem(style, &out.l)),
        format!("eta = {}", kelem(style, &eta)),
        format!("verdict = {}", out.verdict.as_str()),
        format!("conditional = {}", out.conditional),
    ];
    match integral {
        Integral::Closed(a) => lines.push(format!("antiderivative = {}", antiderivative(style, a))),
        Integral::Failed(obs) => {
            let why: Vec<_> = obs.iter().map(|o| o.describe()).collect();
            lines.push(format!("antiderivative = none ({})", why.join("; ")));
        }
    }
    lines.join("\n")
}

pub fn power_entry(style: Style, e: &PowerEntry) -> String {
    antiderivative(
        style,
        &Antiderivative {
            g: e.g.clone(),
            base: e.base.clone(),
            zeta_coeff: e.zeta_coeff.clone(),
        },
    )
}

/// `z`-coefficient of a row's base part (the base is `c*z` for rational `g2, g3`).
pub fn base_z_coeff(e: &PowerEntry) -> String {
    let c = e.base.num().coeff(1);
    fmt_rational(&c)
}

pub fn power_row_json(n: usize, e: &PowerEntry) -> Value {
    json!({
        "n": n,
        "g": kelem_json(&e.g),
        "z_coeff": base_z_coeff(e),
        "zeta_coeff": fmt_rational(&e.zeta_coeff),
        "antiderivative": power_entry(Style::Text, e),
    })
}

pub fn power_row_latex(n: usize, e: &PowerEntry) -> String {
    let lhs = match n {
        0 => "\\int dz".to_string(),
        1 => "\\int \\wp(z)\\,dz".to_string(),
        _ => format!("\\int \\wp(z)^{{{n}}}\\,dz"),
    };
    format!("{lhs} = {}", power_entry(Style::Latex, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::cli::parse::parse_expr;

    fn ctx0() -> FieldCtx {
        FieldCtx::from_invariants(rat(0), rat(-4)).unwrap()
    }

    #[test]
    fn worked_example_g() {
        let ctx = ctx0();
        let g = parse_expr("(1+p')/p + z*p'/(p+1)", &ctx).unwrap();
        assert_eq!(kelem(Style::Text, &g), "(1)/(p) + (((z + 1)*p + 1)/(p^2 + p))*p'");
        assert_eq!(parse_expr(&kelem(Style::Text, &g), &ctx).unwrap(), g);
    }

    #[test]
    fn coefficients() {
        let ctx = ctx0();
        let f = parse_expr("-3/4*z^2*p^2 + (z+1)/z*p - 1", &ctx).unwrap();
        assert_eq!(kelem(Style::Text, &f), "-3/4*z^2*p^2 + ((z + 1)/(z))*p - 1");
        assert_eq!(parse_expr("p'", &ctx).map(|e| kelem(Style::Text, &e)).unwrap(), "(1)*p'");
        assert_eq!(kelem(Style::Latex, &f), "-\\frac{3}{4} z^{2} \\wp^{2} + \\left(\\frac{z + 1}{z}\\right) \\wp - 1");
        assert_eq!(fmt_rational(&ratio(-5, 10)), "-1/2");
    }
}
