//! Exact symbolic arithmetic for the elimination pipelines.
//!
//! The coefficient ring is the fraction field of ℚ[A, A′, A″, A‴, τ, τ′, τ″]
//! (generators named `A, A1, A2, A3, T, T1, T2`), localized in practice at
//! powers of `A`. On top of it sit polynomials in `z = φ_u` ([`ZPoly`]) and
//! the radical extension by `s = X^{1/2}` with `X = A² − z²`, localized at
//! `X` ([`RadFrac`]). The derivation [`d_u_radfrac`] implements
//!
//! ```text
//! d(z) = τ·s + (A′/A)·z + cot·X          d(A) = A′, d(τ) = τ′, …
//! d(s) = (A′/A)·s − τ·z − cot·z·s
//! ```
//!
//! where `cot = cos φ / sin φ` is carried structurally in a [`CotPair`] and
//! never enters the ring itself.

pub mod consts;
mod deriv;
mod poly;
mod radfrac;
mod ratexpr;
mod text;
mod zpoly;

pub use deriv::{d_poly, d_ratexpr, d_u_radfrac, d_u_zpoly};
pub use poly::{Gen, Mono, Poly, GENS};
pub use radfrac::{CotPair, RadFrac};
pub use ratexpr::RatExpr;
pub use text::{parse_ratexpr, parse_zpoly};
pub use zpoly::ZPoly;

use thiserror::Error;

/// Errors surfaced by exact symbolic arithmetic.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SymError {
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("derivative of generator {0} exceeds the ring (order bound A‴/τ″)")]
    GeneratorOverflow(&'static str),
    #[error("exact division failed: {0} is not divisible by {1}")]
    NotDivisible(String, &'static str),
    #[error("syntax error in symbolic constant: {0}")]
    Parse(String),
}

/// Numeric assignment for the seven generators, used by the float shadows.
#[derive(Debug, Clone, Copy)]
pub struct GenValues {
    pub a: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub t: f64,
    pub t1: f64,
    pub t2: f64,
}

impl GenValues {
    pub fn get(&self, g: Gen) -> f64 {
        match g {
            Gen::A => self.a,
            Gen::A1 => self.a1,
            Gen::A2 => self.a2,
            Gen::A3 => self.a3,
            Gen::T => self.t,
            Gen::T1 => self.t1,
            Gen::T2 => self.t2,
        }
    }
}
