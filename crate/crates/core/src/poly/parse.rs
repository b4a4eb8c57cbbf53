//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ['^' integer]
//! atom   := integer ['/' integer] | name | '(' expr ')'
//! ```
//!
//! Names resolve to ring variables first, then to the field generator `t`
//! and its aliases (`i`, `theta`).

use std::sync::Arc;

use num_bigint::BigInt;

use super::context::VarContext;
use super::polynomial::Polynomial;
use crate::arith::{ExtElement, FieldDescriptor, Rational};
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 64;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ctx: &'a Arc<VarContext>,
    field: Option<&'a Arc<FieldDescriptor>>,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn expr(&mut self) -> Result<Polynomial<ExtElement>> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg()
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<ExtElement>> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<ExtElement>> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = u32::try_from(e)
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| syntax(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<ExtElement>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(syntax(self.pos, "expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let q = if self.eat(b'/') {
                    let at = self.pos;
                    let d = self.integer()?;
                    if d == BigInt::from(0) {
                        return Err(syntax(at, "zero denominator"));
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                Ok(Polynomial::constant(self.ctx, ExtElement::rational(q)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                self.resolve(name)
            }
            Some(c) => Err(syntax(self.pos, format!("unexpected character `{}`", c as char))),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }

    fn resolve(&self, name: &str) -> Result<Polynomial<ExtElement>> {
        if let Some(k) = self.ctx.index_of(name) {
            return Ok(Polynomial::var(self.ctx, k));
        }
        if let Some(field) = self.field {
            if name == field.generator_name() {
                return Ok(Polynomial::constant(self.ctx, ExtElement::generator(field)));
            }
            if let Some(e) = ExtElement::alias(field, name) {
                return Ok(Polynomial::constant(self.ctx, e));
            }
        }
        Err(Error::UnknownVariable(name.to_string()))
    }
}

/// Parses `text` into a polynomial over ℚ or over `field`.
pub fn parse(
    text: &str,
    ctx: &Arc<VarContext>,
    field: Option<&Arc<FieldDescriptor>>,
) -> Result<Polynomial<ExtElement>> {
    if let Some(p) = text.bytes().position(|b| !b.is_ascii()) {
        return Err(syntax(p, "non-ASCII input"));
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ctx,
        field,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos, "unexpected trailing input"));
    }
    Ok(out)
}

/// Parses a polynomial with rational coefficients.
pub fn parse_rational(text: &str, ctx: &Arc<VarContext>) -> Result<Polynomial<Rational>> {
    Ok(parse(text, ctx, None)?
        .to_rational()
        .expect("no field generator without a field"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn table_rows_parse() {
        let c = VarContext::projective(2);
        let f = parse_rational("x0^3+x1^3", &c).unwrap();
        assert_eq!(f.to_string(), "x0^3 + x1^3");
        let g = FieldDescriptor::gaussian();
        let h = parse("x0^2*(x1+i*x2)", &c, Some(&g)).unwrap();
        assert_eq!(h.len(), 2);
        let v = h
            .evaluate(&[
                ExtElement::rational(int(1)),
                ExtElement::alias(&g, "i").unwrap(),
                ExtElement::rational(int(1)),
            ])
            .unwrap();
        assert_eq!(v, ExtElement::alias(&g, "i").unwrap().add_ref_helper(2));
    }

    trait Twice {
        fn add_ref_helper(&self, k: i64) -> ExtElement;
    }
    impl Twice for ExtElement {
        fn add_ref_helper(&self, k: i64) -> ExtElement {
            self.clone() * ExtElement::rational(int(k))
        }
    }

    #[test]
    fn errors() {
        let c = VarContext::projective(3);
        assert_eq!(parse("x9", &c, None), Err(Error::UnknownVariable("x9".into())));
        assert!(matches!(parse("x0 x1", &c, None), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse("x0+", &c, None), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(x0", &c, None), Err(Error::Syntax { .. })));
        assert!(matches!(parse("i", &c, None), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn rationals_and_signs() {
        let c = VarContext::with_lambda(1);
        let f = parse_rational("-3/6*x0^2 - -L*x1", &c).unwrap();
        assert_eq!(f.to_string(), "-1/2*x0^2 + x1*L");
    }
}
