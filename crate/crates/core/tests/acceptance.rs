//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wpint::arith::{is_derivative_in_k, rat, ratio};
use wpint::cli::parse::parse_expr;
use wpint::field::{FieldCtx, KElem};
use wpint::reduce::{
    elementary_necessary, full_reduce, integral_of, leading_factor, power_table, recurrence_row,
    s_star, Integral, PowerEntry, Verdict,
};
use wpint::{Error, Field, Frac, Poly, PolyT, RatFunT, RatFunZ, Q};

use common::*;

const WORKED: &str =
    "((p^2-p-1)*p' - 4 + (2*z+2)*p^4 + (4*z+2)*p^3 - 4*z*p^2 - 4*p) / ((p+1)*p^2)";

fn field(g2: Q, g3: Q) -> FieldCtx {
    FieldCtx::from_invariants(g2, g3).unwrap()
}

fn cq(c: Q) -> RatFunZ {
    RatFunZ::constant(c)
}

fn z_times(c: Q) -> RatFunZ {
    &RatFunZ::z() * &cq(c)
}

/// `p(t) * t'`.
fn with_tprime(p: PolyT) -> KElem {
    KElem::new(RatFunT::zero(), Frac::from_poly(p))
}

fn polyq(c: &[Q]) -> PolyT {
    Poly::from_coeffs(c.iter().cloned().map(RatFunZ::constant).collect())
}

fn closed(f: &KElem, ctx: &FieldCtx) -> wpint::reduce::Antiderivative {
    let out = full_reduce(f, ctx).unwrap();
    match integral_of(&out) {
        Integral::Closed(a) => a,
        Integral::Failed(obs) => panic!("no closed form: {obs:?}"),
    }
}

fn c1_worked_example() {
    let ctx = field(rat(0), rat(-4));
    let f = parse_expr(WORKED, &ctx).unwrap();
    let out = full_reduce(&f, &ctx).unwrap();
    assert!(out.h.is_zero() && out.s.is_zero() && out.l.is_zero());
    assert!(out.eta.is_zero());
    assert_eq!(out.verdict, Verdict::InField);
    // (1 + t')/t + z t'/(t+1)
    let t = pt(&[0, 1]);
    let t1 = pt(&[1, 1]);
    let one_over_t = Frac::new(PolyT::one(), t).unwrap();
    let z_over_t1 = Frac::new(Poly::constant(RatFunZ::z()), t1).unwrap();
    let expected = KElem::new(one_over_t.clone(), &one_over_t + &z_over_t1);
    let anti = closed(&f, &ctx);
    assert_eq!(anti.g, expected);
    assert!(anti.base.is_zero() && anti.zeta_coeff.is_zero());
    assert_eq!(ctx.deriv(&anti.g), f);
}

fn c2_t_squared() {
    for (g2, g3) in [(rat(0), rat(-4)), (rat(4), rat(1)), (rat(1), rat(1))] {
        let ctx = field(g2.clone(), g3);
        let out = full_reduce(&tpow(2), &ctx).unwrap();
        assert_eq!(out.verdict, Verdict::InField);
        let anti = closed(&tpow(2), &ctx);
        assert_eq!(anti.g, with_tprime(polyq(&[ratio(1, 6)])));
        assert_eq!(anti.base, z_times(&g2 / rat(12)));
        assert!(anti.zeta_coeff.is_zero());
        assert_eq!(anti.derivative(&ctx), tpow(2));
    }
}

fn c3_t_cubed() {
    for (g2, g3) in [(rat(4), rat(1)), (rat(1), rat(1)), (ratio(-3, 2), ratio(7, 5)), (rat(0), rat(-4)), (rat(0), rat(3))] {
        let ctx = field(g2.clone(), g3.clone());
        let out = full_reduce(&tpow(3), &ctx).unwrap();
        assert_eq!(out.eta, polyq(&[&g3 / rat(10), rat(3) * &g2 / rat(20)]));
        let anti = closed(&tpow(3), &ctx);
        assert_eq!(anti.g, with_tprime(polyq(&[rat(0), ratio(1, 10)])));
        assert_eq!(anti.base, z_times(&g3 / rat(10)));
        assert_eq!(anti.derivative(&ctx), tpow(3));
        if g2 != rat(0) {
            assert_eq!(elementary_necessary(&out, &ctx), Verdict::NotElementary);
            assert_eq!(out.verdict, Verdict::NotElementary);
            // 1/10 t t' - 3 g2/20 zeta + g3/10 z
            assert_eq!(anti.zeta_coeff, rat(-3) * &g2 / rat(20));
        } else {
            assert_eq!(out.verdict, Verdict::InField);
            assert!(anti.zeta_coeff.is_zero());
        }
    }
}

fn c4_t_fourth() {
    for (g2, g3) in [(rat(4), rat(1)), (rat(1), rat(1)), (ratio(-3, 2), ratio(7, 5))] {
        let ctx = field(g2.clone(), g3.clone());
        let anti = closed(&tpow(4), &ctx);
        let expected_g = with_tprime(polyq(&[rat(5) * &g2 / rat(168), rat(0), ratio(1, 14)]));
        assert_eq!(anti.g, expected_g);
        assert_eq!(anti.base, z_times(rat(5) * &g2 * &g2 / rat(336)));
        assert_eq!(anti.zeta_coeff, -&g3 / rat(7));
        assert_eq!(anti.derivative(&ctx), tpow(4));
    }
}

fn c5_t() {
    for (g2, g3) in [(rat(0), rat(-4)), (rat(4), rat(1)), (rat(1), rat(1))] {
        let ctx = field(g2, g3);
        let out = full_reduce(&tpow(1), &ctx).unwrap();
        assert_eq!(out.eta, pt(&[0, 1]));
        assert_eq!(out.verdict, Verdict::NotElementary);
        assert_eq!(elementary_necessary(&out, &ctx), Verdict::NotElementary);
    }
}

fn c6_recurrence() {
    for (g2, g3) in [(rat(0), rat(-4)), (rat(4), rat(1)), (ratio(-3, 2), ratio(7, 5))] {
        let ctx = field(g2.clone(), g3.clone());
        for n in 2..=10usize {
            let ni = n as i64;
            let lead = with_tprime(Poly::monomial(cq(ratio(1, 4 * ni - 2)), n - 2));
            let mut rest = &tpow(n) - &ctx.deriv(&lead);
            let c2 = &g2 * ratio(2 * ni - 3, 8 * ni - 4);
            rest = &rest - &KElem::from_poly(Poly::monomial(cq(c2), n - 2));
            if n >= 3 {
                let c3 = &g3 * ratio(ni - 2, 4 * ni - 2);
                rest = &rest - &KElem::from_poly(Poly::monomial(cq(c3), n - 3));
            }
            assert!(rest.is_zero(), "n = {n}");
        }
        let rows = power_table(8, &ctx).unwrap();
        let rec = recurrence_row(8, &g2, &g3);
        for (row, r) in rows.iter().zip(&rec) {
            let anti = closed(&tpow(row.n), &ctx);
            let reduced = PowerEntry {
                g: anti.g,
                base: anti.base,
                zeta_coeff: anti.zeta_coeff,
            };
            assert_eq!(&reduced, r, "row {}", row.n);
            assert_eq!(&row.entry, r);
        }
    }
}

fn c7_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..200 {
        let (ctx, factors) = &random_fields()[i % 2];
        let pool = denominator_pool(factors);
        let big_f = element(&mut rng, &pool, true);
        let f = ctx.deriv(&big_f);
        let out = full_reduce(&f, ctx).unwrap();
        assert!(out.h.is_zero() && out.s.is_zero() && out.l.is_zero(), "case {i}");
        assert!(out.eta.degree().unwrap_or(0) == 0, "case {i}");
        assert!(is_derivative_in_k(&out.eta.coeff(0)).is_some(), "case {i}");
        assert_eq!(out.verdict, Verdict::InField, "case {i}");
        assert_eq!(&ctx.deriv(&out.g) + &KElem::from_poly(out.eta.clone()), f, "case {i}");
    }
}

fn c8_remainder_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..50 {
        let (ctx, factors) = &random_fields()[i % 2];
        let pool = denominator_pool(factors);
        let f = element(&mut rng, &pool, true);
        let w = element(&mut rng, &pool, true);
        let a = full_reduce(&f, ctx).unwrap();
        let b = full_reduce(&(&f + &ctx.deriv(&w)), ctx).unwrap();
        assert_eq!(a.h, b.h, "case {i}");
        assert_eq!(a.s, b.s, "case {i}");
        assert_eq!(a.l, b.l, "case {i}");
        assert_eq!(a.eta_positive_part(), b.eta_positive_part(), "case {i}");
        let diff = &a.eta.coeff(0) - &b.eta.coeff(0);
        assert!(is_derivative_in_k(&diff).is_some(), "case {i}");
    }
}

fn c9_splitting() {
    let ctx = field(rat(0), rat(-4));
    // (factor, divides q)
    let pool = [
        (pt(&[0, 1]), false),
        (pt(&[1, 1]), true),
        (pt(&[1, -1, 1]), true),
        (pt(&[-2, 1]), false),
        (pt(&[1, 1, 1]), false),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..100 {
        let lc = cq(small_rational(&mut rng)).clone();
        let lc = if lc.is_zero() { cq(rat(3)) } else { lc };
        let mut d = Poly::constant(lc.clone());
        let mut oracle_s = PolyT::one();
        let mut oracle_n = Poly::constant(lc);
        for (p, special) in &pool {
            let mu = rng.gen_range(0..=4u32);
            let pm = p.pow(mu);
            d = &d * &pm;
            if *special {
                oracle_s = &oracle_s * &pm;
            } else {
                oracle_n = &oracle_n * &pm;
            }
        }
        let (d_n, d_s) = ctx.splitting_factorization(&d);
        assert_eq!(d_s, oracle_s, "case {i}");
        assert_eq!(d_n, oracle_n, "case {i}");
    }
    let z = RatFunZ::z();
    let q = Poly::from_coeffs(vec![RatFunZ::zero(), -&z, RatFunZ::zero(), cq(rat(4))]);
    let ctx = FieldCtx::from_q(q, true).unwrap();
    assert!(ctx.is_conditional());
    let four_t2_minus_z = Poly::from_coeffs(vec![-&z, RatFunZ::zero(), cq(rat(4))]);
    let d = &pt(&[0, 1]) * &four_t2_minus_z;
    let (d_n, d_s) = ctx.splitting_factorization(&d);
    assert_eq!(d_s, pt(&[0, 1]));
    assert_eq!(d_n, four_t2_minus_z);
}

fn c10_leading_factor() {
    let quartic = FieldCtx::from_q(pt(&[1, 0, 0, 0, 1]), false).unwrap();
    for ctx in [field(rat(0), rat(-4)), quartic] {
        let dq = ctx.deg_q();
        for lambda in 0..=6usize {
            let f = ctx.deriv(&with_tprime(Poly::monomial(cq(rat(1)), lambda)));
            let s = s_star(&f, &ctx).unwrap();
            assert_eq!(s.degree(), Some(lambda + dq - 1));
            // (lambda + deg q / 2) lc(q), computed independently
            let expected = cq(Q::new((2 * lambda + dq).into(), 2.into())) * ctx.lc_q().clone();
            assert_eq!(s.lc(), expected);
            assert_eq!(leading_factor(lambda, &ctx), expected);
        }
    }
}

fn c11_conditional_flag() {
    let z = RatFunZ::z();
    let q = Poly::from_coeffs(vec![RatFunZ::zero(), -&z, RatFunZ::zero(), cq(rat(4))]);
    assert_eq!(FieldCtx::from_q(q.clone(), false).unwrap_err(), Error::HypothesisNotAssured);
    let assumed = FieldCtx::from_q(q, true).unwrap();
    let verified = field(rat(0), rat(-4));
    for (ctx, cond) in [(&assumed, true), (&verified, false)] {
        for expr in ["p", "p^2", "p'", "1/p^2", "z*p^3 + p'/(p^2+1)", "(p+z)^-2"] {
            let f = parse_expr(expr, ctx).unwrap();
            let out = full_reduce(&f, ctx).unwrap();
            assert_eq!(out.conditional, cond, "{expr}");
        }
    }
}

type Check = fn();

fn main() {
    let criteria: [(&str, Check); 11] = [
        ("worked example integrates to (1+t')/t + z t'/(t+1)", c1_worked_example),
        ("integral of t^2 over three fields", c2_t_squared),
        ("integral of t^3: eta, necessary condition, zeta form", c3_t_cubed),
        ("integral of t^4 zeta form with exact differentiation", c4_t_fourth),
        ("t has no elementary integral", c5_t),
        ("power recurrence identity and two-path table", c6_recurrence),
        ("round trip of 200 random derivatives", c7_round_trip),
        ("remainder invariance for 50 random pairs", c8_remainder_invariance),
        ("splitting factorization oracle", c9_splitting),
        ("leading coefficient law for lambda = 0..6", c10_leading_factor),
        ("property-based substitute; assumed verdicts flagged conditional", c11_conditional_flag),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {name} ({ms} ms): {msg}", i + 1);
            }
        }
    }
    let _ = std::panic::take_hook();
    println!(
        "acceptance: {} passed, {failed} failed in {} ms",
        criteria.len() - failed,
        total.elapsed().as_millis()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
