//! Sparse multivariate polynomials over ℚ in the seven ring generators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The generators, in the declared variable order A < A1 < A2 < A3 < T < T1 < T2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    A1,
    A2,
    A3,
    T,
    T1,
    T2,
}

/// All generators in variable order.
pub const GENS: [Gen; 7] = [Gen::A, Gen::A1, Gen::A2, Gen::A3, Gen::T, Gen::T1, Gen::T2];

impl Gen {
    pub fn index(self) -> usize {
        match self {
            Gen::A => 0,
            Gen::A1 => 1,
            Gen::A2 => 2,
            Gen::A3 => 3,
            Gen::T => 4,
            Gen::T1 => 5,
            Gen::T2 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::A => "A",
            Gen::A1 => "A1",
            Gen::A2 => "A2",
            Gen::A3 => "A3",
            Gen::T => "T",
            Gen::T1 => "T1",
            Gen::T2 => "T2",
        }
    }
}

/// Packed monomial: byte 7 holds the total degree, bytes 6..0 the exponents of
/// A, A1, A2, A3, T, T1, T2. Comparing the packed word gives graded
/// lexicographic order with A most significant, the declared order of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn from_exps(exps: [u8; 7]) -> Mono {
        let deg: u64 = exps.iter().map(|&e| e as u64).sum();
        assert!(deg < 256, "monomial degree overflow");
        let mut packed = deg << 56;
        for (i, &e) in exps.iter().enumerate() {
            packed |= (e as u64) << (8 * (6 - i));
        }
        Mono(packed)
    }

    pub fn gen(g: Gen) -> Mono {
        let mut exps = [0u8; 7];
        exps[g.index()] = 1;
        Mono::from_exps(exps)
    }

    pub fn exp(self, g: Gen) -> u8 {
        ((self.0 >> (8 * (6 - g.index()))) & 0xff) as u8
    }

    pub fn exps(self) -> [u8; 7] {
        let mut out = [0u8; 7];
        for (i, e) in out.iter_mut().enumerate() {
            *e = ((self.0 >> (8 * (6 - i))) & 0xff) as u8;
        }
        out
    }

    pub fn degree(self) -> u8 {
        (self.0 >> 56) as u8
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Mono) -> Mono {
        debug_assert!(
            self.exps()
                .iter()
                .zip(other.exps())
                .all(|(&a, b)| (a as u16 + b as u16) < 256),
            "monomial exponent overflow"
        );
        Mono(self.0 + other.0)
    }

    /// Componentwise quotient; `None` if `other` does not divide `self`.
    pub fn checked_div(self, other: Mono) -> Option<Mono> {
        let a = self.exps();
        let b = other.exps();
        if a.iter().zip(b.iter()).any(|(x, y)| x < y) {
            return None;
        }
        Some(Mono(self.0 - other.0))
    }

    /// Componentwise minimum (monomial gcd).
    pub fn gcd(self, other: Mono) -> Mono {
        let a = self.exps();
        let b = other.exps();
        let mut out = [0u8; 7];
        for i in 0..7 {
            out[i] = a[i].min(b[i]);
        }
        Mono::from_exps(out)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Mono::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for g in GENS {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", g.name())?;
            } else {
                write!(f, "{}^{}", g.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored; the map iterates in ascending monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn gen(g: Gen) -> Poly {
        Poly::monomial(Mono::gen(g), BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    /// Exact division by a monomial; panics if not divisible (internal use
    /// after a gcd computation).
    fn div_mono(&self, m: Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.checked_div(m).expect("monomial division"), v.clone()))
                .collect(),
        }
    }

    /// Gcd of all monomials (componentwise minimum); `Mono::ONE` for zero.
    pub fn monomial_gcd(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, m| acc.gcd(*m))
    }

    pub fn eval_f64(&self, vals: &super::GenValues) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = rational_to_f64(c);
            for g in GENS {
                let e = m.exp(g);
                if e > 0 {
                    t *= vals.get(g).powi(e as i32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Normalize `(self, other)` jointly: cancel the common monomial factor,
    /// clear rational content so all coefficients are coprime integers, and
    /// make the leading coefficient of `other` positive. Used by `RatExpr`.
    pub(super) fn normalize_pair(num: Poly, den: Poly) -> (Poly, Poly) {
        if num.is_zero() {
            return (Poly::zero(), Poly::one());
        }
        let g = num.monomial_gcd().gcd(den.monomial_gcd());
        let (mut num, mut den) = if g == Mono::ONE {
            (num, den)
        } else {
            (num.div_mono(g), den.div_mono(g))
        };
        // common rational content across numerator and denominator
        let mut denom_lcm = BigInt::one();
        let mut numer_gcd = BigInt::zero();
        for c in num.terms.values().chain(den.terms.values()) {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
            numer_gcd = num_integer::gcd(numer_gcd, c.numer().clone());
        }
        let mut scale = BigRational::new(denom_lcm, numer_gcd);
        if den
            .leading()
            .map(|(_, c)| (c * &scale).is_negative())
            .unwrap_or(false)
        {
            scale = -scale;
        }
        if !scale.is_one() {
            num = num.scale(&scale);
            den = den.scale(&scale);
        }
        (num, den)
    }
}

pub(super) fn rational_to_f64(r: &BigRational) -> f64 {
    bigint_to_f64(r.numer()) / bigint_to_f64(r.denom())
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    // adequate for shadow tests; coefficients stay well inside f64 range there
    n.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        // accumulate through a hash map; rebuild the ordered map once
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc: std::collections::HashMap<u64, BigRational> =
            std::collections::HashMap::with_capacity(small.terms.len() * big.terms.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(*mb);
                let c = ca * cb;
                use std::collections::hash_map::Entry;
                match acc.entry(m.0) {
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        Poly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (Mono(m), c))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *m == Mono::ONE {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}
