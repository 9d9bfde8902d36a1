//! The radical layer: elements (p + q·s)/X^k with s² = X = A² − z²,
//! localized at X, plus the cot-carrying pair produced by the derivation.

use super::{GenValues, RatExpr, ZPoly};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// (p + q·s)/X^k in normal form: s-degree at most one by construction, and k
/// minimal (X does not divide both p and q when k > 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadFrac {
    p: ZPoly,
    q: ZPoly,
    k: u32,
}

impl RadFrac {
    pub fn zero() -> RadFrac {
        RadFrac {
            p: ZPoly::zero(),
            q: ZPoly::zero(),
            k: 0,
        }
    }

    pub fn from_zpoly(p: ZPoly) -> RadFrac {
        RadFrac {
            p,
            q: ZPoly::zero(),
            k: 0,
        }
    }

    pub fn from_parts(p: ZPoly, q: ZPoly, k: u32) -> RadFrac {
        RadFrac { p, q, k }.normalized()
    }

    /// The radical s itself.
    pub fn s() -> RadFrac {
        RadFrac {
            p: ZPoly::zero(),
            q: ZPoly::one(),
            k: 0,
        }
    }

    /// Even part (the coefficientwise polynomial part).
    pub fn even(&self) -> &ZPoly {
        &self.p
    }

    /// Radical part (the coefficient of s).
    pub fn radical(&self) -> &ZPoly {
        &self.q
    }

    pub fn x_power(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn normalized(mut self) -> RadFrac {
        if self.p.is_zero() && self.q.is_zero() {
            self.k = 0;
            return self;
        }
        while self.k > 0 {
            let (dp, dq) = (self.p.div_x_exact(), self.q.div_x_exact());
            match (dp, dq) {
                (Ok(p), Ok(q)) => {
                    self.p = p;
                    self.q = q;
                    self.k -= 1;
                }
                _ => break,
            }
        }
        self
    }

    fn align(&self, other: &RadFrac) -> (ZPoly, ZPoly, ZPoly, ZPoly, u32) {
        let k = self.k.max(other.k);
        let lift = |f: &RadFrac| {
            let mut p = f.p.clone();
            let mut q = f.q.clone();
            for _ in f.k..k {
                p = &p * &ZPoly::x();
                q = &q * &ZPoly::x();
            }
            (p, q)
        };
        let (pa, qa) = lift(self);
        let (pb, qb) = lift(other);
        (pa, qa, pb, qb, k)
    }

    pub fn scale(&self, c: &RatExpr) -> RadFrac {
        RadFrac {
            p: self.p.scale(c),
            q: self.q.scale(c),
            k: self.k,
        }
        .normalized()
    }

    pub fn scale_zpoly(&self, c: &ZPoly) -> RadFrac {
        RadFrac {
            p: &self.p * c,
            q: &self.q * c,
            k: self.k,
        }
        .normalized()
    }

    /// Multiply by the radical s (uses s² = X).
    pub fn mul_s(&self) -> RadFrac {
        RadFrac {
            p: &self.q * &ZPoly::x(),
            q: self.p.clone(),
            k: self.k,
        }
        .normalized()
    }

    /// p² − q²·X over X^{2k}: the rational norm-like combination used to clear
    /// the radical (the even-square minus radical-square form).
    pub fn rationalized(&self) -> (ZPoly, u32) {
        let sq = &(&self.p * &self.p) - &(&(&self.q * &self.q) * &ZPoly::x());
        (sq, 2 * self.k)
    }

    pub fn subs_tau_zero(&self) -> RadFrac {
        RadFrac {
            p: self.p.subs_tau_zero(),
            q: self.q.subs_tau_zero(),
            k: self.k,
        }
        .normalized()
    }

    pub fn eval_f64(&self, vals: &GenValues, z: f64, s: f64) -> f64 {
        let x = vals.a * vals.a - z * z;
        (self.p.eval_f64(vals, z) + self.q.eval_f64(vals, z) * s) / x.powi(self.k as i32)
    }
}

impl Add for &RadFrac {
    type Output = RadFrac;
    fn add(self, rhs: &RadFrac) -> RadFrac {
        let (pa, qa, pb, qb, k) = self.align(rhs);
        RadFrac {
            p: &pa + &pb,
            q: &qa + &qb,
            k,
        }
        .normalized()
    }
}

impl Sub for &RadFrac {
    type Output = RadFrac;
    fn sub(self, rhs: &RadFrac) -> RadFrac {
        self + &(-rhs)
    }
}

impl Neg for &RadFrac {
    type Output = RadFrac;
    fn neg(self) -> RadFrac {
        RadFrac {
            p: -&self.p,
            q: -&self.q,
            k: self.k,
        }
    }
}

impl Mul for &RadFrac {
    type Output = RadFrac;
    fn mul(self, rhs: &RadFrac) -> RadFrac {
        // (p + q s)(p' + q' s) = (p p' + q q' X) + (p q' + q p') s
        let p = &(&self.p * &rhs.p) + &(&(&self.q * &rhs.q) * &ZPoly::x());
        let q = &(&self.p * &rhs.q) + &(&self.q * &rhs.p);
        RadFrac {
            p,
            q,
            k: self.k + rhs.k,
        }
        .normalized()
    }
}

impl fmt::Display for RadFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]*s", self.p, self.q)?;
        if self.k > 0 {
            write!(f, " over X^{}", self.k)?;
        }
        Ok(())
    }
}

/// reg + cot·(cos φ / sin φ): the shape produced by differentiating along u.
/// cot φ is transcendental over the ring and is only ever carried, never
/// multiplied against another cot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotPair {
    pub reg: RadFrac,
    pub cot: RadFrac,
}

impl CotPair {
    pub fn zero() -> CotPair {
        CotPair {
            reg: RadFrac::zero(),
            cot: RadFrac::zero(),
        }
    }

    pub fn from_reg(reg: RadFrac) -> CotPair {
        CotPair {
            reg,
            cot: RadFrac::zero(),
        }
    }

    pub fn scale_radfrac(&self, c: &RadFrac) -> CotPair {
        CotPair {
            reg: &self.reg * c,
            cot: &self.cot * c,
        }
    }

    pub fn mul_s(&self) -> CotPair {
        CotPair {
            reg: self.reg.mul_s(),
            cot: self.cot.mul_s(),
        }
    }

    pub fn subs_tau_zero(&self) -> CotPair {
        CotPair {
            reg: self.reg.subs_tau_zero(),
            cot: self.cot.subs_tau_zero(),
        }
    }

    pub fn eval_f64(&self, vals: &GenValues, z: f64, s: f64, cot: f64) -> f64 {
        self.reg.eval_f64(vals, z, s) + cot * self.cot.eval_f64(vals, z, s)
    }
}

impl Add for &CotPair {
    type Output = CotPair;
    fn add(self, rhs: &CotPair) -> CotPair {
        CotPair {
            reg: &self.reg + &rhs.reg,
            cot: &self.cot + &rhs.cot,
        }
    }
}

impl Sub for &CotPair {
    type Output = CotPair;
    fn sub(self, rhs: &CotPair) -> CotPair {
        CotPair {
            reg: &self.reg - &rhs.reg,
            cot: &self.cot - &rhs.cot,
        }
    }
}

impl Neg for &CotPair {
    type Output = CotPair;
    fn neg(self) -> CotPair {
        CotPair {
            reg: -&self.reg,
            cot: -&self.cot,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_squared_is_x() {
        let ss = &RadFrac::s() * &RadFrac::s();
        assert_eq!(ss, RadFrac::from_zpoly(ZPoly::x()));
    }

    #[test]
    fn localization_power_reduces() {
        // (s / X) * s = 1
        let s_over_x = RadFrac::from_parts(ZPoly::zero(), ZPoly::one(), 1);
        let prod = &s_over_x * &RadFrac::s();
        assert_eq!(prod, RadFrac::from_zpoly(ZPoly::one()));
        assert_eq!(prod.x_power(), 0);
    }

    #[test]
    fn normal_form_keeps_k_minimal() {
        // (X + X s)/X^1 normalizes to 1 + s
        let f = RadFrac::from_parts(ZPoly::x(), ZPoly::x(), 1);
        assert_eq!(f.x_power(), 0);
        assert_eq!(f.even(), &ZPoly::one());
        assert_eq!(f.radical(), &ZPoly::one());
    }

    #[test]
    fn rationalized_clears_radical() {
        // (p + qs)(p − qs) = p² − q²X
        let f = RadFrac::from_parts(ZPoly::z(), ZPoly::one(), 0);
        let (w, k) = f.rationalized();
        assert_eq!(k, 0);
        // z² − X = 2z² − A²
        let a2 = &RatExpr::gen(super::super::Gen::A) * &RatExpr::gen(super::super::Gen::A);
        let want = &ZPoly::term(RatExpr::int(2), 2) - &ZPoly::constant(a2);
        assert_eq!(w, want);
    }
}
