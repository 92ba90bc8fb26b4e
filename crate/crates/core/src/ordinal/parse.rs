//! Recursive-descent parser and canonical printer for ordinal notation.
//!
//! ```text
//! expr   := term ( '+' term )*
//! term   := factor ( '*' nat )?
//! factor := 'w' ( '^' factor )? | nat | '(' expr ')'
//! ```
//!
//! Input need not be in normal form; it is evaluated with ordinal arithmetic.

use num_bigint::BigUint;
use num_traits::One;

use super::Ordinal;
use crate::error::ParseError;

pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

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

    fn expr(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let rhs = self.term()?;
            acc = &acc + &rhs;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        let base = self.factor()?;
        if self.eat(b'*') {
            let k = self.nat()?;
            return Ok(base.mul_nat(&k));
        }
        Ok(base)
    }

    fn factor(&mut self) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                if self.eat(b'^') {
                    let e = self.factor()?;
                    Ok(Ordinal::omega_pow(&e))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn nat(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("nonempty digit string"))
    }
}

pub(super) fn print_ordinal(o: &Ordinal) -> String {
    if o.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in o.terms().iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        let e = t.exponent();
        let c = t.coefficient();
        if e.is_zero() {
            out.push_str(&c.to_string());
            continue;
        }
        out.push('w');
        if *e != Ordinal::one() {
            out.push('^');
            if needs_parens(e) {
                out.push('(');
                out.push_str(&print_ordinal(e));
                out.push(')');
            } else {
                out.push_str(&print_ordinal(e));
            }
        }
        if !c.is_one() {
            out.push('*');
            out.push_str(&c.to_string());
        }
    }
    out
}

/// An exponent is parenthesized iff it is a sum or an infinite term with a coefficient.
fn needs_parens(e: &Ordinal) -> bool {
    match e.terms() {
        [t] => !t.exponent().is_zero() && !t.coefficient().is_one(),
        _ => true,
    }
}
