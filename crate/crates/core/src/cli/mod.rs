//! Command-line front end: argument model, dispatch and exit codes.

pub mod parse;
pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::reduce::{elementary_necessary, integrate, power_table, Integral};
use parse::{parse_expr, parse_q, parse_rational};
use render::Style;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_FIELD: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct FieldArgs {
    /// Invariant g2 of q = 4t^3 - g2*t - g3 (rational, e.g. -4 or 3/2).
    #[arg(long, allow_hyphen_values = true, requires = "g3", conflicts_with = "q")]
    pub g2: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "g2", conflicts_with = "q")]
    pub g3: Option<String>,
    /// General q as a polynomial in t over Q(z), e.g. "4*t^3 - z*t".
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Proceed when q has non-constant coefficients; results are flagged conditional.
    #[arg(long)]
    pub assume_hypothesis: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Verb {
    /// Full decomposition f = g' + h + s + l + eta.
    Reduce {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antiderivative, or the obstructions to one.
    Integrate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Verdict only.
    Check {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Splitting factorization of a polynomial in p (or of the denominator).
    Split {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Integrals of p^n for n = 0..=N, cross-checked against the recurrence.
    PowerTable {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "wpint", version, about = "Exact integration in Weierstrass-like differential fields")]
pub struct Command {
    #[command(subcommand)]
    pub verb: Verb,
}

impl Command {
    fn field(&self) -> &FieldArgs {
        match &self.verb {
            Verb::Reduce { field, .. }
            | Verb::Integrate { field, .. }
            | Verb::Check { field, .. }
            | Verb::Split { field, .. }
            | Verb::PowerTable { field, .. } => field,
        }
    }
}

/// Captured result of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::DivisionByZero | Error::InvalidArgument(_) => EXIT_PARSE,
        Error::InvalidField(_) | Error::DegenerateCurve | Error::HypothesisViolated(_) => {
            EXIT_INVALID_FIELD
        }
        Error::HypothesisNotAssured => EXIT_HYPOTHESIS,
        Error::NotInvertible(_) | Error::OrderOfZero | Error::Internal(_) => EXIT_INTERNAL,
    }
}

pub fn build_field(args: &FieldArgs) -> Result<FieldCtx> {
    match (&args.g2, &args.g3, &args.q) {
        (Some(g2), Some(g3), None) => {
            FieldCtx::from_invariants(parse_rational(g2)?, parse_rational(g3)?)
        }
        (None, None, Some(q)) => FieldCtx::from_q(parse_q(q)?, args.assume_hypothesis),
        _ => Err(Error::InvalidArgument(
            "give either --g2 and --g3, or --q".into(),
        )),
    }
}

pub fn run(cmd: &Command) -> Output {
    match execute(cmd) {
        Ok(stdout) => Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}"),
        },
    }
}

fn style(format: Format) -> Style {
    if format == Format::Latex {
        Style::Latex
    } else {
        Style::Text
    }
}

fn execute(cmd: &Command) -> Result<String> {
    let fa = cmd.field();
    let ctx = build_field(fa)?;
    let st = style(fa.format);
    let json_out = fa.format == Format::Json;
    let pretty = |v: serde_json::Value| serde_json::to_string_pretty(&v).expect("serializable");
    match &cmd.verb {
        Verb::Reduce { expr, .. } => {
            let f = parse_expr(expr, &ctx)?;
            let (out, integral) = integrate(&f, &ctx)?;
            Ok(if json_out {
                pretty(render::outcome_json(&ctx, &out, &integral))
            } else {
                render::outcome_text(st, &ctx, &out, &integral)
            })
        }
        Verb::Integrate { expr, .. } => {
            let f = parse_expr(expr, &ctx)?;
            let (out, integral) = integrate(&f, &ctx)?;
            if json_out {
                return Ok(pretty(render::outcome_json(&ctx, &out, &integral)));
            }
            let lhs = match st {
                Style::Text => format!("integral({})", render::kelem(st, &f)),
                Style::Latex => format!("\\int {}\\,dz", render::kelem(st, &f)),
            };
            Ok(match &integral {
                Integral::Closed(a) => {
                    let cond = if out.conditional { " [conditional]" } else { "" };
                    format!("{lhs} = {}{cond}", render::antiderivative(st, a))
                }
                Integral::Failed(obs) => {
                    let why: Vec<_> = obs.iter().map(|o| o.describe()).collect();
                    format!(
                        "{lhs}: no antiderivative of this form ({}); verdict {}",
                        why.join("; "),
                        out.verdict.as_str()
                    )
                }
            })
        }
        Verb::Check { expr, .. } => {
            let f = parse_expr(expr, &ctx)?;
            let (out, integral) = integrate(&f, &ctx)?;
            if json_out {
                return Ok(pretty(render::outcome_json(&ctx, &out, &integral)));
            }
            Ok(format!(
                "verdict = {}\nelementary_necessary = {}\nconditional = {}",
                out.verdict.as_str(),
                elementary_necessary(&out, &ctx).as_str(),
                out.conditional
            ))
        }
        Verb::Split { expr, .. } => {
            let f = parse_expr(expr, &ctx)?;
            let d = if f.b().is_zero() && f.a().is_poly() {
                f.a().num().clone()
            } else {
                ctx.denominator(&f)
            };
            let (d_n, d_s) = ctx.splitting_factorization(&d);
            let show = |p| render::polyt(st, p, "p");
            if json_out {
                return Ok(pretty(json!({
                    "field": render::field_json(&ctx),
                    "D": render::polyt(Style::Text, &d, "p"),
                    "DN": render::polyt(Style::Text, &d_n, "p"),
                    "DS": render::polyt(Style::Text, &d_s, "p"),
                    "conditional": ctx.is_conditional(),
                })));
            }
            Ok(format!("D = {}\nD_N = {}\nD_S = {}", show(&d), show(&d_n), show(&d_s)))
        }
        Verb::PowerTable { n, .. } => {
            let rows = power_table(*n, &ctx)?;
            Ok(match fa.format {
                Format::Json => pretty(json!({
                    "field": render::field_json(&ctx),
                    "rows": rows.iter().map(|r| render::power_row_json(r.n, &r.entry)).collect::<Vec<_>>(),
                })),
                Format::Latex => rows
                    .iter()
                    .map(|r| render::power_row_latex(r.n, &r.entry))
                    .collect::<Vec<_>>()
                    .join(" \\\\\n"),
                Format::Text => rows
                    .iter()
                    .map(|r| format!("n = {}: {}", r.n, render::power_entry(Style::Text, &r.entry)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        let cmd = Command::try_parse_from(std::iter::once("wpint").chain(args.iter().copied())).unwrap();
        run(&cmd)
    }

    const WORKED: &str =
        "((p^2-p-1)*p' - 4 + (2*z+2)*p^4 + (4*z+2)*p^3 - 4*z*p^2 - 4*p) / ((p+1)*p^2)";

    #[test]
    fn reduce_worked_example_json() {
        let out = run_args(&["reduce", "--g2", "0", "--g3", "-4", "--format", "json", WORKED]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdict"], "InField");
        assert_eq!(v["h"]["A"]["num"], "0");
        assert_eq!(v["eta"]["A"]["num"], "0");
        assert_eq!(v["field"]["q"], "4*t^3 + 4");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["reduce", "--q", "t^2+1", "p"]).code, EXIT_INVALID_FIELD);
        assert_eq!(run_args(&["reduce", "--g2", "3", "--g3", "1", "p"]).code, EXIT_INVALID_FIELD);
        assert_eq!(run_args(&["reduce", "--g2", "0", "--g3", "1", "2p"]).code, EXIT_PARSE);
        assert_eq!(run_args(&["reduce", "--q", "4*t^3 - z*t", "p"]).code, EXIT_HYPOTHESIS);
        let ok = run_args(&["reduce", "--q", "4*t^3 - z*t", "--assume-hypothesis", "p"]);
        assert_eq!(ok.code, EXIT_OK, "{}", ok.stderr);
        assert!(ok.stdout.contains("conditional = true"));
    }

    #[test]
    fn power_table_text() {
        let out = run_args(&["power-table", "--g2", "4", "--g3", "1", "--n", "4"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let lines: Vec<_> = out.stdout.lines().collect();
        assert_eq!(lines[0], "n = 0: z");
        assert_eq!(lines[1], "n = 1: -zeta");
        assert_eq!(lines[2], "n = 2: (1/6)*p' + 1/3*z");
        assert_eq!(lines[4], "n = 4: (1/14*p^2 + 5/42)*p' + 5/21*z - 1/7*zeta");
    }

    #[test]
    fn split_verb() {
        let out = run_args(&["split", "--g2", "0", "--g3", "-4", "p^2*(p+1)*(p-2)"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "D = p^4 - p^3 - 2*p^2\nD_N = p^3 - 2*p^2\nD_S = p + 1");
    }
}
