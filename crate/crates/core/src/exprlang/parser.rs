//! Precedence-climbing parser with byte-accurate error offsets.

use super::ast::{Expr, ExprKind, Func, Var};
use super::ExprError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow::Pow, Zero};

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ExprError {
        ExprError::Syntax {
            offset: self.pos,
            message: message.to_string(),
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

    fn expr(&mut self, min_prec: u8) -> Result<Expr, ExprError> {
        let mut lhs = self.prefix()?;
        loop {
            let op = match self.peek() {
                Some(b'+') if min_prec <= 1 => b'+',
                Some(b'-') if min_prec <= 1 => b'-',
                Some(b'*') if min_prec <= 2 => b'*',
                Some(b'/') if min_prec <= 2 => b'/',
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let next_min = if op == b'+' || op == b'-' { 2 } else { 3 };
            let rhs = self.expr(next_min)?;
            let span = (lhs.span.0, rhs.span.1);
            let kind = match op {
                b'+' => ExprKind::Add(Box::new(lhs), Box::new(rhs)),
                b'-' => ExprKind::Sub(Box::new(lhs), Box::new(rhs)),
                b'*' => ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                _ => match (&lhs.kind, &rhs.kind) {
                    // fold a ratio of literals into one exact rational, so
                    // printed rationals like 41/5 reparse to the same node
                    (ExprKind::Num(a), ExprKind::Num(b)) if !b.is_zero() => ExprKind::Num(a / b),
                    _ => ExprKind::Div(Box::new(lhs), Box::new(rhs)),
                },
            };
            lhs = Expr { kind, span };
        }
    }

    fn prefix(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(b'-') {
            let start = self.pos;
            self.pos += 1;
            let inner = self.prefix()?;
            let span = (start, inner.span.1);
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.int_literal()?;
            let span = (base.span.0, self.pos);
            return Ok(Expr {
                kind: ExprKind::Pow(Box::new(base), e),
                span,
            });
        }
        Ok(base)
    }

    fn int_literal(&mut self) -> Result<i32, ExprError> {
        let mut sign = 1i64;
        if self.src.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        } else if self.src.get(self.pos) == Some(&b'(') {
            // allow a parenthesized negative integer: ^(−k)
            let save = self.pos;
            self.pos += 1;
            self.skip_ws();
            let v = self.int_literal()?;
            self.skip_ws();
            if self.src.get(self.pos) == Some(&b')') {
                self.pos += 1;
                return Ok(v);
            }
            self.pos = save;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("exponent must be an integer literal"));
        }
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(self.err("exponent must be an integer literal"));
        }
        let digits: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        i32::try_from(sign * digits).map_err(|_| self.err("exponent out of range"))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(b'(') => {
                let start = self.pos;
                self.pos += 1;
                let inner = self.expr(0)?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(Expr {
                    kind: inner.kind,
                    span: (start, self.pos),
                })
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.identifier(),
            Some(_) => Err(self.err("expected a number, name, or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let mut frac_digits = 0u32;
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            let fs = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            frac_digits = (self.pos - fs) as u32;
            if frac_digits == 0 {
                return Err(self.err("expected digits after '.'"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let digits: String = text.chars().filter(|c| *c != '.').collect();
        let numer: BigInt = digits.parse().map_err(|_| self.err("bad number"))?;
        let denom = BigInt::from(10u32).pow(frac_digits);
        Ok(Expr {
            kind: ExprKind::Num(BigRational::new(numer, denom)),
            span: (start, self.pos),
        })
    }

    fn identifier(&mut self) -> Result<Expr, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string();
        if name == "pi" {
            return Ok(Expr {
                kind: ExprKind::Pi,
                span: (start, self.pos),
            });
        }
        if let Some(func) = Func::from_name(&name) {
            if self.peek() != Some(b'(') {
                return Err(self.err("expected '(' after function name"));
            }
            self.pos += 1;
            let arg = self.expr(0)?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            return Ok(Expr {
                kind: ExprKind::Call(func, Box::new(arg)),
                span: (start, self.pos),
            });
        }
        if let Some(v) = Var::from_name(&name) {
            return Ok(Expr {
                kind: ExprKind::Var(v),
                span: (start, self.pos),
            });
        }
        Err(ExprError::UnknownIdent {
            offset: start,
            name,
        })
    }
}
