//! Polynomial text syntax.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' integer]
//! atom   := integer | 'x' | 'y' | 'z' | '(' expr ')' | '-' factor
//! ```
//!
//! Division is only allowed by nonzero constants.

use alloc::format;
use alloc::string::ToString;

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Ambient, Polynomial};
use crate::error::{Error, Result};

/// Parses a polynomial in `x, y, z` over `field`.
pub fn parse_polynomial(text: &str, field: Field) -> Result<Polynomial> {
    parse_polynomial_in(text, field, Ambient::XYZ)
}

/// Parses a polynomial in the given ambient ring.
pub fn parse_polynomial_in(text: &str, field: Field, ambient: Ambient) -> Result<Polynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
        ambient,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: Field,
    ambient: Ambient,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat(b'-') {
            -&self.term()?
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.factor()?;
                let c = match d.total_degree() {
                    Some(0) => d.coefficient(&Monomial::ONE),
                    Some(_) => {
                        return Err(Error::Syntax {
                            position: at,
                            message: "division by a non-constant".to_string(),
                        })
                    }
                    None => return Err(Error::DivisionByZero),
                };
                let inv = c.inv().ok_or(Error::DivisionByZero)?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                position: start,
                message: "exponent out of range".to_string(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().map_err(|_| Error::Syntax {
                    position: start,
                    message: "bad integer".to_string(),
                })?;
                Ok(Polynomial::constant(self.field.big_int(&n), self.ambient))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name_start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[name_start..self.pos]).unwrap_or("");
                let index = match name {
                    "x" => 0,
                    "y" => 1,
                    "z" if self.ambient == Ambient::XYZ => 2,
                    _ => {
                        return Err(Error::UnknownVariable {
                            position: name_start,
                            name: name.to_string(),
                        })
                    }
                };
                Ok(Polynomial::monomial(
                    self.field,
                    self.ambient,
                    Monomial::variable(index, 1),
                ))
            }
            Some(c) => Err(Error::Syntax {
                position: start,
                message: format!("unexpected character `{}`", c as char),
            }),
        }
    }
}
