//! Text form of scalars.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'|'+'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | 'z' n ['^' int] | 'i' | 'q' ['^' (int | '{' int ['/' int] '}')]
//!         | 'sqrt(' ['-'] rational ')' | '(' expr ')' | '-' factor
//! ```
//!
//! `q` terms need the residue cardinality as context.

use super::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar {input:?} at byte {pos}: {msg}")]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
    q: Option<&'a BigRational>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError { input: self.src.to_string(), pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(BigInt::from_str(&self.src[start..self.pos]).unwrap())
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat(b'-');
        let v = self.digits()?;
        Ok(if neg { -v } else { v })
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let v = self.signed_int()?;
        match i64::try_from(v) {
            Ok(x) => Ok(x),
            Err(_) => self.err("integer out of range"),
        }
    }

    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.digits()?;
            if den == BigInt::from(0) {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_rational(self.rational()?)),
            Some(b'z') => {
                self.pos += 1;
                let n = self.small_int()?;
                if n <= 0 || n > 100_000 {
                    return self.err("root of unity order out of range");
                }
                let k = if self.eat(b'^') { self.exponent_int()? } else { 1 };
                Ok(Scalar::zeta(n as u32, k))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(Scalar::i())
            }
            Some(b'q') => {
                self.pos += 1;
                let Some(q) = self.q else {
                    return self.err("q-term without a residue cardinality in context");
                };
                let twice = if self.eat(b'^') {
                    if self.eat(b'{') {
                        let a = self.small_int()?;
                        let twice = if self.eat(b'/') {
                            let d = self.small_int()?;
                            match d {
                                1 => 2 * a,
                                2 => a,
                                _ => return self.err("q exponents must be half-integers"),
                            }
                        } else {
                            2 * a
                        };
                        if !self.eat(b'}') {
                            return self.err("expected '}'");
                        }
                        twice
                    } else {
                        2 * self.small_int()?
                    }
                } else {
                    2
                };
                match Scalar::q_half_power(q, twice) {
                    Some(v) => Ok(v),
                    None => self.err("square root of q is outside the supported tower"),
                }
            }
            Some(b's') => {
                if !self.src[self.pos..].starts_with("sqrt(") {
                    return self.err("unknown token");
                }
                self.pos += 5;
                let neg = self.eat(b'-');
                let mut r = self.rational()?;
                if neg {
                    r = -r;
                }
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                match Scalar::sqrt_rational(&r) {
                    Some(v) => Ok(v),
                    None => self.err("square root outside the supported tower"),
                }
            }
            _ => self.err("unexpected character"),
        }
    }

    fn exponent_int(&mut self) -> Result<i64, ParseError> {
        if self.eat(b'{') {
            let v = self.small_int()?;
            if !self.eat(b'}') {
                return self.err("expected '}'");
            }
            Ok(v)
        } else {
            self.small_int()
        }
    }
}

/// Parses a scalar; `q` supplies the value of the symbol `q` if present.
pub fn parse_scalar(src: &str, q: Option<&BigRational>) -> Result<Scalar, ParseError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, src, q };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a positive rational such as "3" or "9/4".
pub fn parse_rational(src: &str) -> Result<BigRational, ParseError> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, src, q: None };
    let neg = p.eat(b'-');
    let r = p.rational()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(if neg { -r } else { r })
}

impl FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Scalar, ParseError> {
        parse_scalar(s, None)
    }
}
