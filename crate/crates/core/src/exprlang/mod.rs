//! A small expression language for user-supplied scalar functions of one or
//! two variables, evaluated with forward-mode truncated-Taylor jets so that
//! derivatives up to total order 3 come out exact to machine precision.
//!
//! Grammar (precedence climbing): `+ -` < `* /` < unary `-` < `^` with an
//! integer-literal exponent. Variables `u v t s`, the constant `pi`, and the
//! functions `sin cos tan exp log sqrt asin acos atan`.

mod ast;
mod jet;
mod parser;

pub use ast::{Expr, ExprKind, Func, Var};
pub use jet::{Jet, MAX_ORDER};
pub use parser::parse;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier {name:?} at byte {offset}")]
    UnknownIdent { offset: usize, name: String },
    #[error("variable {name} is not bound at evaluation")]
    UnboundVariable { name: &'static str },
    #[error("domain error in subtree at bytes {span_start}..{span_end}: {message}")]
    Domain {
        span_start: usize,
        span_end: usize,
        message: String,
    },
    #[error("jet order {0} exceeds the supported maximum")]
    OrderTooHigh(u8),
}

/// Evaluate with forward-mode jets. The bindings list assigns each variable a
/// differentiation slot in order: the first bound variable is slot 0 (partials
/// `∂₀^i` in [`Jet::partial`]), the second is slot 1. At most two variables.
pub fn eval_jet(e: &Expr, point: &[(Var, f64)], order: u8) -> Result<Jet, ExprError> {
    if order > MAX_ORDER {
        return Err(ExprError::OrderTooHigh(order));
    }
    if point.len() > 2 {
        return Err(ExprError::Syntax {
            offset: 0,
            message: "at most two variables can be bound".into(),
        });
    }
    e.eval_jet_inner(point, order)
}

/// Plain evaluation (order-0 jet).
pub fn eval(e: &Expr, point: &[(Var, f64)]) -> Result<f64, ExprError> {
    Ok(eval_jet(e, point, 0)?.value())
}
