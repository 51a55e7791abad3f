//! Exact reduction-based integration in Weierstrass-like differential fields.
//!
//! The base field is `k = Q(z)` with `d/dz`. Over it sits `K = k(t, t')` with
//! `(t')^2 = q(t)`. Every `f` in `K` is decomposed as
//! `f = g' + h + s + l + eta` where `h`, `s`, `l` and the positive-degree part
//! of `eta` are canonical remainders; `f` has an antiderivative in `K` exactly
//! when `h = s = l = 0` and `eta` is a derivative in `k`.

pub mod arith;
pub mod cli;
pub mod error;
pub mod field;
pub mod poly;
pub mod polyt;
pub mod reduce;

pub use arith::{Field, Q, RatFunZ};
pub use error::{Error, Result};
pub use field::{CanonicalRep, FieldCtx, HypothesisMode, KElem};
pub use poly::{Frac, Poly};
pub use polyt::{PolyT, RatFunT};
pub use reduce::{ReductionOutcome, Verdict};
