//! Polynomials in z = φ_u with `RatExpr` coefficients.

use super::poly::{Mono, Poly};
use super::{Gen, GenValues, RatExpr, SymError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Numerators over a common scalar·A^k denominator, for the fast product.
type Cleared = (Vec<(u32, Poly)>, BigInt, u32);

/// Finitely supported map degree → coefficient; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: BTreeMap<u32, RatExpr>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: RatExpr) -> ZPoly {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        ZPoly { coeffs }
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(RatExpr::one())
    }

    pub fn z() -> ZPoly {
        ZPoly::term(RatExpr::one(), 1)
    }

    /// X = A² − z², the square of the radical.
    pub fn x() -> ZPoly {
        let a2 = &RatExpr::gen(Gen::A) * &RatExpr::gen(Gen::A);
        &ZPoly::constant(a2) - &ZPoly::term(RatExpr::one(), 2)
    }

    pub fn term(c: RatExpr, k: u32) -> ZPoly {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        ZPoly { coeffs }
    }

    pub fn from_coeffs(pairs: Vec<(u32, RatExpr)>) -> ZPoly {
        let mut out = ZPoly::zero();
        for (k, c) in pairs {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of z^k; zero for any k above the degree.
    pub fn coeff(&self, k: u32) -> RatExpr {
        self.coeffs.get(&k).cloned().unwrap_or_else(RatExpr::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &RatExpr)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, k: u32, c: RatExpr) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatExpr) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut out = ZPoly::zero();
        for (k, v) in &self.coeffs {
            out.add_term(*k, v * c);
        }
        out
    }

    pub fn mul_zpow(&self, e: u32) -> ZPoly {
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k + e, v.clone()))
                .collect(),
        }
    }

    /// Exact division by z; error if the constant term is present.
    pub fn div_z_exact(&self) -> Result<ZPoly, SymError> {
        if self.coeffs.contains_key(&0) {
            return Err(SymError::NotDivisible(self.to_string(), "z"));
        }
        Ok(ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k - 1, v.clone()))
                .collect(),
        })
    }

    /// Exact division by X = A² − z²; error if a nonzero remainder appears.
    pub fn div_x_exact(&self) -> Result<ZPoly, SymError> {
        if self.is_zero() {
            return Ok(ZPoly::zero());
        }
        let deg = self.degree().unwrap();
        if deg < 2 {
            return Err(SymError::NotDivisible(self.to_string(), "X"));
        }
        // synthetic division from the top: X has leading coefficient -1 at z^2
        let a2 = &RatExpr::gen(Gen::A) * &RatExpr::gen(Gen::A);
        let mut rem = self.clone();
        let mut quot = ZPoly::zero();
        let mut k = deg;
        loop {
            let lead = rem.coeff(k);
            if !lead.is_zero() {
                let q = -&lead; // divide by the z² coefficient of X, which is −1
                quot.add_term(k - 2, q.clone());
                // rem -= q * (A² z^{k-2} − z^k)
                rem.add_term(k, -&lead);
                rem.add_term(k - 2, -&(&q * &a2));
            }
            if k == 2 {
                break;
            }
            k -= 1;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(SymError::NotDivisible(self.to_string(), "X"))
        }
    }

    pub fn divisible_by_x(&self) -> bool {
        self.div_x_exact().is_ok()
    }

    pub fn subs_tau_zero(&self) -> ZPoly {
        let mut out = ZPoly::zero();
        for (k, v) in &self.coeffs {
            out.add_term(*k, v.subs_tau_zero());
        }
        out
    }

    /// True when every exponent with a nonzero coefficient is even/odd.
    pub fn parity_even(&self) -> bool {
        self.coeffs.keys().all(|k| k % 2 == 0)
    }

    pub fn parity_odd(&self) -> bool {
        self.coeffs.keys().all(|k| k % 2 == 1)
    }

    pub fn eval_f64(&self, vals: &GenValues, z: f64) -> f64 {
        let mut acc = 0.0;
        for (k, c) in &self.coeffs {
            acc += c.eval_f64(vals) * z.powi(*k as i32);
        }
        acc
    }

    fn total_terms(&self) -> usize {
        self.coeffs.values().map(|c| c.num().num_terms()).sum()
    }

    /// Lift to numerators over one common denominator scalar·A^k; `None` when
    /// some denominator is not a monomial in A (never happens in the pipeline).
    fn clear_denominators(&self) -> Option<Cleared> {
        let mut parts: Vec<(u32, &RatExpr)> = Vec::with_capacity(self.coeffs.len());
        let mut scalar_lcm = BigInt::one();
        let mut a_max = 0u32;
        for (k, c) in &self.coeffs {
            let den = c.den();
            let (m, lc) = den.leading()?;
            if den.num_terms() != 1 || !lc.denom().is_one() {
                return None;
            }
            let exps = m.exps();
            if exps[1..].iter().any(|&e| e != 0) {
                return None;
            }
            a_max = a_max.max(exps[0] as u32);
            scalar_lcm = num_integer::lcm(scalar_lcm, lc.numer().clone());
            parts.push((*k, c));
        }
        let lifted = parts
            .into_iter()
            .map(|(k, c)| {
                let (m, lc) = c.den().leading().unwrap();
                let a_pow = m.exps()[0] as u32;
                let scale = BigRational::from_integer(&scalar_lcm / lc.numer());
                let mut exps = [0u8; 7];
                exps[0] = (a_max - a_pow) as u8;
                let lift = c.num().scale(&scale).mul_mono(Mono::from_exps(exps));
                (k, lift)
            })
            .collect();
        Some((lifted, scalar_lcm, a_max))
    }

    /// Convolution over a common denominator: clears all fractions first so
    /// the inner loop is pure integer polynomial arithmetic, then normalizes
    /// each output coefficient once. Falls back to the naive product when a
    /// denominator is not an A-monomial.
    pub fn mul_fast(&self, rhs: &ZPoly) -> ZPoly {
        let (la, lb) = match (self.clear_denominators(), rhs.clear_denominators()) {
            (Some(a), Some(b)) => (a, b),
            _ => return self.mul_naive(rhs),
        };
        let (ca, sa, ka) = la;
        let (cb, sb, kb) = lb;
        let mut acc: BTreeMap<u32, Poly> = BTreeMap::new();
        for (i, pa) in &ca {
            for (j, pb) in &cb {
                let prod = pa * pb;
                use std::collections::btree_map::Entry;
                match acc.entry(i + j) {
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() = e.get() + &prod;
                    }
                }
            }
        }
        let mut exps = [0u8; 7];
        exps[0] = (ka + kb) as u8;
        let den = Poly::monomial(Mono::from_exps(exps), BigRational::from_integer(&sa * &sb));
        let mut out = ZPoly::zero();
        for (k, num) in acc {
            out.add_term(
                k,
                RatExpr::new(num, den.clone()).expect("nonzero denominator"),
            );
        }
        out
    }

    fn mul_naive(&self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                out.add_term(ka + kb, ca * cb);
            }
        }
        out
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.total_terms().min(rhs.total_terms()) >= 16 {
            self.mul_fast(rhs)
        } else {
            self.mul_naive(rhs)
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*z", c)?,
                _ => write!(f, "({})*z^{}", c, k)?,
            }
        }
        Ok(())
    }
}
