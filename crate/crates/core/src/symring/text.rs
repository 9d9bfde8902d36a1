//! Tiny parser for symbolic constants in tests and ledger tables,
//! e.g. `"56*T*A1/A - 18*T1"` or `"-(33*A^2 - 3*T^2 + Sig)"` after Σ expansion.
//!
//! Grammar: sums of products of powers of `A A1 A2 A3 T T1 T2 z` and integer
//! literals, with parentheses; `/` requires a z-free divisor.

use super::{Gen, RatExpr, SymError, ZPoly};

pub fn parse_ratexpr(src: &str) -> Result<RatExpr, SymError> {
    let z = parse_zpoly(src)?;
    match z.degree() {
        None => Ok(RatExpr::zero()),
        Some(0) => Ok(z.coeff(0)),
        Some(_) => Err(SymError::Parse(format!(
            "expected z-free expression: {src}"
        ))),
    }
}

pub fn parse_zpoly(src: &str) -> Result<ZPoly, SymError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(SymError::Parse(format!(
            "trailing input at byte {} in {src:?}",
            p.pos
        )));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
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

    fn expr(&mut self) -> Result<ZPoly, SymError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ZPoly, SymError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let c = match rhs.degree() {
                        None => return Err(SymError::DivisionByZero),
                        Some(0) => rhs.coeff(0),
                        Some(_) => {
                            return Err(SymError::Parse("division by z-dependent factor".into()))
                        }
                    };
                    acc = acc.scale(&c.recip()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ZPoly, SymError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let e = self.integer()?;
                    if e < 0 {
                        return Err(SymError::Parse("negative exponent".into()));
                    }
                    let mut out = ZPoly::one();
                    for _ in 0..e {
                        out = &out * &base;
                    }
                    Ok(out)
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<ZPoly, SymError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(SymError::Parse("expected ')'".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(ZPoly::constant(RatExpr::int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match name {
                    "A" => Ok(ZPoly::constant(RatExpr::gen(Gen::A))),
                    "A1" => Ok(ZPoly::constant(RatExpr::gen(Gen::A1))),
                    "A2" => Ok(ZPoly::constant(RatExpr::gen(Gen::A2))),
                    "A3" => Ok(ZPoly::constant(RatExpr::gen(Gen::A3))),
                    "T" => Ok(ZPoly::constant(RatExpr::gen(Gen::T))),
                    "T1" => Ok(ZPoly::constant(RatExpr::gen(Gen::T1))),
                    "T2" => Ok(ZPoly::constant(RatExpr::gen(Gen::T2))),
                    "z" => Ok(ZPoly::z()),
                    "X" => Ok(ZPoly::x()),
                    other => Err(SymError::Parse(format!("unknown symbol {other:?}"))),
                }
            }
            other => Err(SymError::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn integer(&mut self) -> Result<i64, SymError> {
        self.skip_ws();
        let mut sign = 1i64;
        if self.src.get(self.pos) == Some(&b'-') {
            sign = -1;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(SymError::Parse("expected integer".into()));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map(|v| sign * v)
            .map_err(|e| SymError::Parse(e.to_string()))
    }
}
