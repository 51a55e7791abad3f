//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | base ('^' '-'? integer)?
//! base   := rational | 'z' | VAR | VAR "'" | '(' expr ')'
//! ```
//!
//! `VAR` is `p` for elements of `K` and `t` for `q`-strings.

use num_bigint::BigInt;

use crate::arith::{Field, Q, RatFunZ};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, KElem};
use crate::poly::Frac;
use crate::polyt::{t, PolyT, RatFunT};

/// Largest accepted exponent magnitude.
const MAX_EXPONENT: u32 = 256;

trait Algebra {
    type V: Clone;
    const VAR: u8;
    const HAS_TPRIME: bool;
    fn rational(&self, c: Q) -> Self::V;
    fn z(&self) -> Self::V;
    fn var(&self) -> Self::V;
    fn tprime(&self) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn div(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn pow(&self, a: &Self::V, n: i32) -> Result<Self::V>;
}

struct KAlg<'a>(&'a FieldCtx);

impl Algebra for KAlg<'_> {
    type V = KElem;
    const VAR: u8 = b'p';
    const HAS_TPRIME: bool = true;
    fn rational(&self, c: Q) -> KElem {
        KElem::from_rational(c)
    }
    fn z(&self) -> KElem {
        KElem::from_base(RatFunZ::z())
    }
    fn var(&self) -> KElem {
        KElem::t()
    }
    fn tprime(&self) -> KElem {
        KElem::tprime()
    }
    fn add(&self, a: &KElem, b: &KElem) -> KElem {
        a + b
    }
    fn sub(&self, a: &KElem, b: &KElem) -> KElem {
        a - b
    }
    fn neg(&self, a: &KElem) -> KElem {
        -a
    }
    fn mul(&self, a: &KElem, b: &KElem) -> KElem {
        self.0.mul(a, b)
    }
    fn div(&self, a: &KElem, b: &KElem) -> Result<KElem> {
        self.0.div(a, b)
    }
    fn pow(&self, a: &KElem, n: i32) -> Result<KElem> {
        self.0.pow(a, n)
    }
}

struct TAlg;

impl Algebra for TAlg {
    type V = RatFunT;
    const VAR: u8 = b't';
    const HAS_TPRIME: bool = false;
    fn rational(&self, c: Q) -> RatFunT {
        RatFunT::from_rational(&c)
    }
    fn z(&self) -> RatFunT {
        Frac::from_poly(PolyT::constant(RatFunZ::z()))
    }
    fn var(&self) -> RatFunT {
        Frac::from_poly(t())
    }
    fn tprime(&self) -> RatFunT {
        unreachable!("q-strings have no derivative symbol")
    }
    fn add(&self, a: &RatFunT, b: &RatFunT) -> RatFunT {
        a + b
    }
    fn sub(&self, a: &RatFunT, b: &RatFunT) -> RatFunT {
        a - b
    }
    fn neg(&self, a: &RatFunT) -> RatFunT {
        -a
    }
    fn mul(&self, a: &RatFunT, b: &RatFunT) -> RatFunT {
        a * b
    }
    fn div(&self, a: &RatFunT, b: &RatFunT) -> Result<RatFunT> {
        a.checked_div(b)
    }
    fn pow(&self, a: &RatFunT, n: i32) -> Result<RatFunT> {
        a.pow(n)
    }
}

struct Parser<'s, A: Algebra> {
    src: &'s [u8],
    pos: usize,
    alg: A,
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl<'s, A: Algebra> Parser<'s, A> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(perr(self.pos, format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(perr(self.pos, format!("expected '{}', found end of input", c as char))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(perr(start, "expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits"))
    }

    fn expr(&mut self) -> Result<A::V> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.alg.add(&acc, &rhs);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.alg.sub(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::V> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self.alg.mul(&acc, &rhs);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.factor()?;
                    acc = self.alg.div(&acc, &rhs).map_err(|e| match e {
                        Error::DivisionByZero => Error::DivisionByZero,
                        other => perr(at, other.to_string()),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<A::V> {
        // unary minus binds looser than '^': -p^2 = -(p^2)
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let f = self.factor()?;
            return Ok(self.alg.neg(&f));
        }
        let b = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(b);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let n = self.integer()?;
        let n: u32 = u32::try_from(n)
            .ok()
            .filter(|n| *n <= MAX_EXPONENT)
            .ok_or_else(|| perr(at, format!("exponent exceeds {MAX_EXPONENT}")))?;
        let n = if negative { -(n as i32) } else { n as i32 };
        self.alg.pow(&b, n)
    }

    fn base(&mut self) -> Result<A::V> {
        let at = match self.peek() {
            None => return Err(perr(self.pos, "unexpected end of input")),
            Some(_) => self.pos,
        };
        let c = self.src[at];
        match c {
            b'0'..=b'9' => {
                let num = self.integer()?;
                // `n/d` binds as a single rational literal
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if matches!(self.peek(), Some(b'0'..=b'9')) {
                        let den = self.integer()?;
                        if den == BigInt::from(0) {
                            return Err(Error::DivisionByZero);
                        }
                        // reject implicit multiplication right after a literal
                        self.no_juxtaposition()?;
                        return Ok(self.alg.rational(Q::new(num, den)));
                    }
                }
                self.pos = save;
                self.no_juxtaposition()?;
                Ok(self.alg.rational(Q::from_integer(num)))
            }
            b'z' => {
                self.pos += 1;
                self.no_juxtaposition()?;
                Ok(self.alg.z())
            }
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                self.no_juxtaposition()?;
                Ok(e)
            }
            c if c == A::VAR => {
                self.pos += 1;
                if A::HAS_TPRIME && self.src.get(self.pos) == Some(&b'\'') {
                    self.pos += 1;
                    self.no_juxtaposition()?;
                    return Ok(self.alg.tprime());
                }
                self.no_juxtaposition()?;
                Ok(self.alg.var())
            }
            c => Err(perr(at, format!("unexpected character '{}'", c as char))),
        }
    }

    /// Rejects `2p`, `p z`, `(..)(..)` and similar.
    fn no_juxtaposition(&mut self) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'\'' => Err(perr(
                self.pos,
                "implicit multiplication is not supported; use '*'",
            )),
            _ => Ok(()),
        }
    }

    fn finish(mut self) -> Result<A::V> {
        let v = self.expr()?;
        match self.peek() {
            None => Ok(v),
            Some(c) => Err(perr(self.pos, format!("unexpected character '{}'", c as char))),
        }
    }
}

/// Parses an element of `K`; `p` is `t` and `p'` is `t'`.
pub fn parse_expr(text: &str, ctx: &FieldCtx) -> Result<KElem> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        alg: KAlg(ctx),
    }
    .finish()
}

/// Parses a polynomial `q` in `t` over `Q(z)`.
pub fn parse_q(text: &str) -> Result<PolyT> {
    let v = Parser {
        src: text.as_bytes(),
        pos: 0,
        alg: TAlg,
    }
    .finish()?;
    if !v.is_poly() {
        return Err(Error::InvalidField("q must be a polynomial in t".into()));
    }
    Ok(v.num().clone())
}

/// Parses a rational scalar such as `-4` or `3/2`.
pub fn parse_rational(text: &str) -> Result<Q> {
    let v = parse_q(text)?;
    if v.degree().unwrap_or(0) != 0 {
        return Err(perr(0, "expected a rational number"));
    }
    v.coeff(0)
        .as_rational()
        .ok_or_else(|| perr(0, "expected a rational number"))
}
