//! Recursive-descent parser for exact coefficient strings.
//!
//! Grammar (juxtaposition multiplies):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'/')? power)*
//! power  := atom ('^' ['-'] int)?
//! atom   := int | 'q' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::{Field, Scalar};
use crate::error::{Error, Result};

struct Parser<'a> {
    field: Field,
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

pub(super) fn parse_scalar(field: Field, s: &str) -> Result<Scalar> {
    let mut p = Parser { field, src: s, bytes: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in '{}'", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?.neg())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.power()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                Some(c) if c == b'(' || c == b'q' || c.is_ascii_digit() => {
                    acc = acc.checked_mul(&self.power()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.int()?;
            let e: i64 = i64::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(self.src[start..self.pos].parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                self.field.q()
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.int()?;
                Ok(self.field.from_bigint(v))
            }
            _ => Err(self.err("expected number, q or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        let f = Field::Rational;
        assert_eq!(parse_scalar(f, "-3/4").unwrap(), f.ratio(-3, 4).unwrap());
        assert_eq!(parse_scalar(f, "2 (1/2)").unwrap(), f.one());
        assert!(parse_scalar(f, "q").is_err());
    }

    #[test]
    fn parses_q_expressions() {
        let f = Field::RatFun;
        let a = parse_scalar(f, "1/(q-q^-1)").unwrap();
        let b = parse_scalar(f, "q/(q^2-1)").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_scalar(f, "q^2 q^-2").unwrap(), f.one());
        assert!(matches!(parse_scalar(f, "1/(q-q)"), Err(Error::DivisionByZero)));
    }
}
