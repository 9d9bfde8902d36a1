//! Fractions of multivariate polynomials in normal form.

use super::poly::Poly;
use super::{GenValues, SymError};
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact fraction of polynomials over ℚ in the seven generators.
///
/// Invariants: the denominator is a nonzero polynomial; the pair carries no
/// common monomial factor or rational content, and the denominator's leading
/// coefficient is positive. The pipeline only ever divides by powers of `A`
/// (and rational constants), so the canonical form is unique there.
#[derive(Debug, Clone)]
pub struct RatExpr {
    num: Poly,
    den: Poly,
}

impl RatExpr {
    pub fn zero() -> RatExpr {
        RatExpr {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatExpr {
        RatExpr {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn int(n: i64) -> RatExpr {
        RatExpr {
            num: Poly::int(n),
            den: Poly::one(),
        }
    }

    pub fn rational(num: i64, den: i64) -> RatExpr {
        RatExpr::from_poly(Poly::int(num))
            .div(&RatExpr::from_poly(Poly::int(den)))
            .expect("nonzero")
    }

    pub fn gen(g: super::Gen) -> RatExpr {
        RatExpr::from_poly(Poly::gen(g))
    }

    pub fn from_poly(num: Poly) -> RatExpr {
        RatExpr {
            num,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly, den: Poly) -> Result<RatExpr, SymError> {
        if den.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        let (num, den) = Poly::normalize_pair(num, den);
        Ok(RatExpr { num, den })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &RatExpr::one()
    }

    /// `Some(c)` when the value is the rational constant `c`.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn div(&self, rhs: &RatExpr) -> Result<RatExpr, SymError> {
        if rhs.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        RatExpr::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<RatExpr, SymError> {
        RatExpr::one().div(self)
    }

    pub fn pow(&self, e: u32) -> RatExpr {
        let mut out = RatExpr::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The ring is localized at A only (X powers live one level up): true
    /// when the denominator is a rational multiple of a power of A.
    pub fn is_localized_at_a(&self) -> bool {
        self.den.num_terms() == 1
            && self
                .den
                .leading()
                .map(|(m, _)| m.exps()[1..].iter().all(|&e| e == 0))
                .unwrap_or(true)
    }

    /// Substitute τ = τ′ = τ″ = 0.
    pub fn subs_tau_zero(&self) -> RatExpr {
        let strip = |p: &Poly| {
            let mut out = Poly::zero();
            for (m, c) in p.terms() {
                use super::Gen::*;
                if m.exp(T) == 0 && m.exp(T1) == 0 && m.exp(T2) == 0 {
                    out.add_term(*m, c.clone());
                }
            }
            out
        };
        RatExpr::new(strip(&self.num), strip(&self.den))
            .expect("denominator cannot vanish under tau=0 (powers of A)")
    }

    pub fn eval_f64(&self, vals: &GenValues) -> f64 {
        self.num.eval_f64(vals) / self.den.eval_f64(vals)
    }

    /// Scale factor `self / other` when it is a nonzero rational constant.
    /// Works by cross-multiplication, so no polynomial gcd is needed.
    pub fn constant_ratio(&self, other: &RatExpr) -> Option<BigRational> {
        if other.is_zero() || self.is_zero() {
            return None;
        }
        let lhs = &self.num * &other.den;
        let rhs = &other.num * &self.den;
        let (lm, lc) = lhs.leading()?;
        let (rm, rc) = rhs.leading()?;
        if lm != rm {
            return None;
        }
        let c = lc / rc;
        if (&lhs - &rhs.scale(&c)).is_zero() {
            Some(c)
        } else {
            None
        }
    }
}

impl PartialEq for RatExpr {
    fn eq(&self, other: &Self) -> bool {
        // cross-multiplied equality is exact regardless of gcd completeness
        (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl Eq for RatExpr {}

impl Add for &RatExpr {
    type Output = RatExpr;
    fn add(self, rhs: &RatExpr) -> RatExpr {
        RatExpr::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominators")
    }
}

impl Sub for &RatExpr {
    type Output = RatExpr;
    fn sub(self, rhs: &RatExpr) -> RatExpr {
        self + &(-rhs)
    }
}

impl Neg for &RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        RatExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatExpr {
    type Output = RatExpr;
    fn mul(self, rhs: &RatExpr) -> RatExpr {
        RatExpr::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            return write!(f, "{}", self.num);
        }
        let num_simple = self.num.num_terms() <= 1;
        // a denominator like `2*A^2` must be parenthesized: `x/2*A^2` would
        // re-associate as `(x/2)*A^2`
        let den_simple = self.den.num_terms() == 1
            && self.den.leading().map(|(_, c)| c.is_one()).unwrap_or(false);
        match (num_simple, den_simple) {
            (true, true) => write!(f, "{}/{}", self.num, self.den),
            (false, true) => write!(f, "({})/{}", self.num, self.den),
            (true, false) => write!(f, "{}/({})", self.num, self.den),
            (false, false) => write!(f, "({})/({})", self.num, self.den),
        }
    }
}
