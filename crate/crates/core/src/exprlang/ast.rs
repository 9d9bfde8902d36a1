//! Expression trees with byte spans for error reporting.

use super::jet::Jet;
use super::ExprError;
use num_rational::BigRational;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    V,
    T,
    S,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::V => "v",
            Var::T => "t",
            Var::S => "s",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "u" => Some(Var::U),
            "v" => Some(Var::V),
            "t" => Some(Var::T),
            "s" => Some(Var::S),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Asin,
    Acos,
    Atan,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Asin => "asin",
            Func::Acos => "acos",
            Func::Atan => "atan",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        match s {
            "sin" => Some(Func::Sin),
            "cos" => Some(Func::Cos),
            "tan" => Some(Func::Tan),
            "exp" => Some(Func::Exp),
            "log" => Some(Func::Log),
            "sqrt" => Some(Func::Sqrt),
            "asin" => Some(Func::Asin),
            "acos" => Some(Func::Acos),
            "atan" => Some(Func::Atan),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub enum ExprKind {
    Num(BigRational),
    Pi,
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

/// AST node with the byte span it was parsed from.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: (usize, usize),
}

impl Expr {
    /// Free variables, in declaration order u, v, t, s.
    pub fn free_vars(&self) -> Vec<Var> {
        let mut present = [false; 4];
        self.collect_vars(&mut present);
        [Var::U, Var::V, Var::T, Var::S]
            .into_iter()
            .filter(|v| present[*v as usize])
            .collect()
    }

    fn collect_vars(&self, present: &mut [bool; 4]) {
        match &self.kind {
            ExprKind::Var(v) => present[*v as usize] = true,
            ExprKind::Neg(a) | ExprKind::Pow(a, _) | ExprKind::Call(_, a) => {
                a.collect_vars(present)
            }
            ExprKind::Add(a, b)
            | ExprKind::Sub(a, b)
            | ExprKind::Mul(a, b)
            | ExprKind::Div(a, b) => {
                a.collect_vars(present);
                b.collect_vars(present);
            }
            ExprKind::Num(_) | ExprKind::Pi => {}
        }
    }

    pub(super) fn eval_jet_inner(&self, point: &[(Var, f64)], order: u8) -> Result<Jet, ExprError> {
        let domain_err = |msg: &str| ExprError::Domain {
            span_start: self.span.0,
            span_end: self.span.1,
            message: msg.to_string(),
        };
        Ok(match &self.kind {
            ExprKind::Num(r) => Jet::constant(rational_to_f64(r), order),
            ExprKind::Pi => Jet::constant(std::f64::consts::PI, order),
            ExprKind::Var(v) => {
                let slot = point
                    .iter()
                    .position(|(w, _)| w == v)
                    .ok_or(ExprError::UnboundVariable { name: v.name() })?;
                Jet::variable(point[slot].1, slot, order)
            }
            ExprKind::Neg(a) => a.eval_jet_inner(point, order)?.neg(),
            ExprKind::Add(a, b) => a
                .eval_jet_inner(point, order)?
                .add(&b.eval_jet_inner(point, order)?),
            ExprKind::Sub(a, b) => a
                .eval_jet_inner(point, order)?
                .sub(&b.eval_jet_inner(point, order)?),
            ExprKind::Mul(a, b) => a
                .eval_jet_inner(point, order)?
                .mul(&b.eval_jet_inner(point, order)?),
            ExprKind::Div(a, b) => {
                let den = b.eval_jet_inner(point, order)?;
                if den.value() == 0.0 {
                    return Err(domain_err("division by zero"));
                }
                a.eval_jet_inner(point, order)?.div(&den)
            }
            ExprKind::Pow(a, e) => {
                let base = a.eval_jet_inner(point, order)?;
                if *e < 0 && base.value() == 0.0 {
                    return Err(domain_err("zero raised to a negative power"));
                }
                base.powi(*e)
            }
            ExprKind::Call(f, a) => {
                let x = a.eval_jet_inner(point, order)?;
                let v = x.value();
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Tan => {
                        if v.cos() == 0.0 {
                            return Err(domain_err("tangent at a pole"));
                        }
                        x.tan()
                    }
                    Func::Exp => x.exp(),
                    Func::Log => {
                        if v <= 0.0 {
                            return Err(domain_err("log of a non-positive value"));
                        }
                        x.ln()
                    }
                    Func::Sqrt => {
                        if v < 0.0 || (v == 0.0 && order > 0) {
                            return Err(domain_err("sqrt outside its smooth domain"));
                        }
                        x.sqrt()
                    }
                    Func::Asin => {
                        if v.abs() >= 1.0 {
                            return Err(domain_err("asin outside (-1, 1)"));
                        }
                        x.asin()
                    }
                    Func::Acos => {
                        if v.abs() >= 1.0 {
                            return Err(domain_err("acos outside (-1, 1)"));
                        }
                        x.acos()
                    }
                    Func::Atan => x.atan(),
                }
            }
        })
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) => 1,
            ExprKind::Mul(..) | ExprKind::Div(..) => 2,
            // a non-integer rational prints as p/q and must parenthesize
            // exactly like a division
            ExprKind::Num(r) if !r.is_integer() => 2,
            ExprKind::Neg(..) => 3,
            ExprKind::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min {
            write!(f, "(")?;
        }
        match &self.kind {
            ExprKind::Num(r) => write!(f, "{}", r)?,
            ExprKind::Pi => write!(f, "pi")?,
            ExprKind::Var(v) => write!(f, "{}", v.name())?,
            ExprKind::Neg(a) => {
                write!(f, "-")?;
                a.fmt_prec(f, 4)?;
            }
            ExprKind::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            ExprKind::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            ExprKind::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            ExprKind::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            ExprKind::Pow(a, e) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^{}", e)?;
            }
            ExprKind::Call(func, a) => {
                write!(f, "{}(", func.name())?;
                a.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if prec < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    num / den
}
