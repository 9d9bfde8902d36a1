//! Truncated-Taylor jets in up to two variables, total order ≤ 3.

/// Highest total derivative order carried by a [`Jet`].
pub const MAX_ORDER: u8 = 3;

/// Index layout for the 10 Taylor coefficients (i, j) with i + j ≤ 3:
/// (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3).
const IDX: [(u8, u8); 10] = [
    (0, 0),
    (1, 0),
    (0, 1),
    (2, 0),
    (1, 1),
    (0, 2),
    (3, 0),
    (2, 1),
    (1, 2),
    (0, 3),
];

fn slot(i: u8, j: u8) -> usize {
    IDX.iter()
        .position(|&(a, b)| a == i && b == j)
        .expect("order within bounds")
}

const FACT: [f64; 4] = [1.0, 1.0, 2.0, 6.0];

/// Value plus partial derivatives up to total order 3 in at most two
/// variables, stored as Taylor coefficients (partial / (i!·j!)). A jet is an
/// immutable value; all operations are pure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    coeffs: [f64; 10],
    order: u8,
}

impl Jet {
    pub fn constant(v: f64, order: u8) -> Jet {
        let mut coeffs = [0.0; 10];
        coeffs[0] = v;
        Jet { coeffs, order }
    }

    /// The coordinate function of differentiation slot 0 or 1.
    pub fn variable(v: f64, var_slot: usize, order: u8) -> Jet {
        let mut j = Jet::constant(v, order);
        if order >= 1 {
            j.coeffs[1 + var_slot] = 1.0;
        }
        j
    }

    /// Build a jet directly from a table of partial derivatives
    /// `partials[i][j] = ∂₀^i ∂₁^j f` (entries above the order are ignored).
    pub fn from_partials(partials: &[[f64; 4]; 4], order: u8) -> Jet {
        let mut coeffs = [0.0; 10];
        for (k, &(i, j)) in IDX.iter().enumerate() {
            if i + j <= order {
                coeffs[k] =
                    partials[i as usize][j as usize] / (FACT[i as usize] * FACT[j as usize]);
            }
        }
        Jet { coeffs, order }
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Partial derivative ∂₀^i ∂₁^j; requires i + j ≤ order.
    pub fn partial(&self, i: u8, j: u8) -> f64 {
        assert!(
            i + j <= self.order,
            "partial ({i},{j}) beyond jet order {}",
            self.order
        );
        self.coeffs[slot(i, j)] * FACT[i as usize] * FACT[j as usize]
    }

    pub fn add(&self, rhs: &Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let mut coeffs = [0.0; 10];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeffs[k] + rhs.coeffs[k];
        }
        Jet { coeffs, order }
    }

    pub fn sub(&self, rhs: &Jet) -> Jet {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Jet {
        let mut coeffs = self.coeffs;
        for c in &mut coeffs {
            *c = -*c;
        }
        Jet {
            coeffs,
            order: self.order,
        }
    }

    pub fn scale(&self, c: f64) -> Jet {
        let mut coeffs = self.coeffs;
        for x in &mut coeffs {
            *x *= c;
        }
        Jet {
            coeffs,
            order: self.order,
        }
    }

    /// Truncated Taylor product.
    pub fn mul(&self, rhs: &Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let mut coeffs = [0.0; 10];
        for (ka, &(ia, ja)) in IDX.iter().enumerate() {
            if ia + ja > order || self.coeffs[ka] == 0.0 {
                continue;
            }
            for (kb, &(ib, jb)) in IDX.iter().enumerate() {
                let (i, j) = (ia + ib, ja + jb);
                if i + j > order {
                    continue;
                }
                coeffs[slot(i, j)] += self.coeffs[ka] * rhs.coeffs[kb];
            }
        }
        Jet { coeffs, order }
    }

    /// Compose a univariate function with this jet, given the function's value
    /// and derivatives at the jet's value: out = Σ fd\[k\]·(self − value)^k / k!.
    pub fn compose(&self, fd: [f64; 4]) -> Jet {
        let order = self.order;
        let mut h = *self;
        h.coeffs[0] = 0.0;
        let mut out = Jet::constant(fd[0], order);
        let mut hpow = Jet::constant(1.0, order);
        for (k, f) in fd.iter().enumerate().skip(1).take(order as usize) {
            hpow = hpow.mul(&h);
            out = out.add(&hpow.scale(f / FACT[k]));
        }
        out
    }

    /// Reciprocal; caller guarantees a nonzero value.
    pub fn recip(&self) -> Jet {
        let v = self.value();
        self.compose([
            1.0 / v,
            -1.0 / (v * v),
            2.0 / (v * v * v),
            -6.0 / (v * v * v * v),
        ])
    }

    pub fn div(&self, rhs: &Jet) -> Jet {
        self.mul(&rhs.recip())
    }

    pub fn powi(&self, e: i32) -> Jet {
        if e < 0 {
            return self.powi(-e).recip();
        }
        let mut out = Jet::constant(1.0, self.order);
        let mut base = *self;
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        out
    }

    pub fn sin(&self) -> Jet {
        let (s, c) = self.value().sin_cos();
        self.compose([s, c, -s, -c])
    }

    pub fn cos(&self) -> Jet {
        let (s, c) = self.value().sin_cos();
        self.compose([c, -s, -c, s])
    }

    pub fn tan(&self) -> Jet {
        let t = self.value().tan();
        let d1 = 1.0 + t * t;
        self.compose([t, d1, 2.0 * t * d1, d1 * (2.0 + 6.0 * t * t)])
    }

    pub fn exp(&self) -> Jet {
        let e = self.value().exp();
        self.compose([e, e, e, e])
    }

    /// Natural logarithm; caller guarantees a positive value.
    pub fn ln(&self) -> Jet {
        let v = self.value();
        self.compose([v.ln(), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v)])
    }

    /// Square root; caller guarantees a positive value.
    pub fn sqrt(&self) -> Jet {
        let r = self.value().sqrt();
        self.compose([r, 0.5 / r, -0.25 / (r * r * r), 0.375 / (r * r * r * r * r)])
    }

    /// Arc cosine; caller guarantees |value| < 1.
    pub fn acos(&self) -> Jet {
        let x = self.value();
        let w = 1.0 - x * x;
        let rw = w.sqrt();
        self.compose([
            x.acos(),
            -1.0 / rw,
            -x / (w * rw),
            -(1.0 + 2.0 * x * x) / (w * w * rw),
        ])
    }

    /// Arc sine; caller guarantees |value| < 1.
    pub fn asin(&self) -> Jet {
        let x = self.value();
        let w = 1.0 - x * x;
        let rw = w.sqrt();
        self.compose([
            x.asin(),
            1.0 / rw,
            x / (w * rw),
            (1.0 + 2.0 * x * x) / (w * w * rw),
        ])
    }

    pub fn atan(&self) -> Jet {
        let x = self.value();
        let w = 1.0 + x * x;
        self.compose([
            x.atan(),
            1.0 / w,
            -2.0 * x / (w * w),
            (6.0 * x * x - 2.0) / (w * w * w),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule_to_third_order() {
        // f = u² v, partials at (2, 3)
        let u = Jet::variable(2.0, 0, 3);
        let v = Jet::variable(3.0, 1, 3);
        let f = u.mul(&u).mul(&v);
        assert_eq!(f.value(), 12.0);
        assert_eq!(f.partial(1, 0), 12.0); // 2uv
        assert_eq!(f.partial(0, 1), 4.0); // u²
        assert_eq!(f.partial(2, 0), 6.0); // 2v
        assert_eq!(f.partial(1, 1), 4.0); // 2u
        assert_eq!(f.partial(2, 1), 2.0);
        assert_eq!(f.partial(3, 0), 0.0);
    }

    #[test]
    fn composition_matches_closed_forms() {
        // d³/du³ exp(2u) = 8 exp(2u)
        let u = Jet::variable(0.3, 0, 3);
        let f = u.scale(2.0).exp();
        let want = 8.0 * (0.6f64).exp();
        assert!((f.partial(3, 0) - want).abs() < 1e-12 * want.abs());

        // acos jet against the analytic second derivative
        let x = Jet::variable(0.4, 0, 2);
        let f = x.acos();
        let w: f64 = 1.0 - 0.16;
        assert!((f.partial(1, 0) + 1.0 / w.sqrt()).abs() < 1e-14);
        assert!((f.partial(2, 0) + 0.4 / w.powf(1.5)).abs() < 1e-14);
    }

    #[test]
    fn mixed_partials_single_storage() {
        // symmetry is structural: one coefficient per (i, j)
        let u = Jet::variable(1.2, 0, 3);
        let v = Jet::variable(-0.7, 1, 3);
        let f = u.mul(&v).sin();
        assert_eq!(f.partial(1, 1), f.partial(1, 1));
        // ∂u∂v sin(uv) = cos(uv) − uv sin(uv)
        let uv: f64 = 1.2 * -0.7;
        let want = uv.cos() - uv * uv.sin();
        assert!((f.partial(1, 1) - want).abs() < 1e-13);
    }
}
