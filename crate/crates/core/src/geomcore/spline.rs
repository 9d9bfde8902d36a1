//! Cubic interpolation: not-a-knot splines for sampled curves and monotone
//! Hermite cubics for inverting the arclength map.

/// Piecewise cubic y(x) on knots x_0 < … < x_{n−1}; each segment stores the
/// coefficients of y = c0 + c1·dx + c2·dx² + c3·dx³ with dx = x − x_i.
#[derive(Debug, Clone)]
pub struct PiecewiseCubic {
    xs: Vec<f64>,
    coeffs: Vec<[f64; 4]>,
}

impl PiecewiseCubic {
    fn segment(&self, x: f64) -> usize {
        let n = self.xs.len();
        match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(n - 2),
            Err(i) => i.saturating_sub(1).min(n - 2),
        }
    }

    /// Value and derivatives up to order 3. The third derivative of a cubic is
    /// piecewise constant; evaluation at a knot uses the left segment.
    pub fn eval(&self, x: f64) -> [f64; 4] {
        let i = self.segment(x);
        let dx = x - self.xs[i];
        let [c0, c1, c2, c3] = self.coeffs[i];
        [
            c0 + dx * (c1 + dx * (c2 + dx * c3)),
            c1 + dx * (2.0 * c2 + dx * 3.0 * c3),
            2.0 * c2 + 6.0 * c3 * dx,
            6.0 * c3,
        ]
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }
}

/// Not-a-knot cubic spline through (xs, ys). Needs at least 4 points for the
/// not-a-knot end conditions; 2–3 points degrade to the natural choice.
pub fn not_a_knot(xs: &[f64], ys: &[f64]) -> PiecewiseCubic {
    let n = xs.len();
    assert!(n >= 2 && n == ys.len());
    if n == 2 {
        let h = xs[1] - xs[0];
        let c1 = (ys[1] - ys[0]) / h;
        return PiecewiseCubic {
            xs: xs.to_vec(),
            coeffs: vec![[ys[0], c1, 0.0, 0.0]],
        };
    }
    // solve for second derivatives m_i with a dense-banded elimination
    let mut a = vec![vec![0.0; n]; n];
    let mut rhs = vec![0.0; n];
    for i in 1..n - 1 {
        let h0 = xs[i] - xs[i - 1];
        let h1 = xs[i + 1] - xs[i];
        a[i][i - 1] = h0;
        a[i][i] = 2.0 * (h0 + h1);
        a[i][i + 1] = h1;
        rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
    }
    if n >= 4 {
        // not-a-knot: third derivative continuous across the first and last
        // interior knots
        let h0 = xs[1] - xs[0];
        let h1 = xs[2] - xs[1];
        a[0][0] = h1;
        a[0][1] = -(h0 + h1);
        a[0][2] = h0;
        let hm = xs[n - 1] - xs[n - 2];
        let hm1 = xs[n - 2] - xs[n - 3];
        a[n - 1][n - 3] = hm;
        a[n - 1][n - 2] = -(hm + hm1);
        a[n - 1][n - 1] = hm1;
    } else {
        a[0][0] = 1.0;
        a[n - 1][n - 1] = 1.0;
    }
    let m = solve_dense(a, rhs);
    let mut coeffs = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let h = xs[i + 1] - xs[i];
        let c0 = ys[i];
        let c2 = m[i] / 2.0;
        let c3 = (m[i + 1] - m[i]) / (6.0 * h);
        let c1 = (ys[i + 1] - ys[i]) / h - h * (2.0 * m[i] + m[i + 1]) / 6.0;
        coeffs.push([c0, c1, c2, c3]);
    }
    PiecewiseCubic {
        xs: xs.to_vec(),
        coeffs,
    }
}

#[allow(clippy::needless_range_loop)]
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        let d = a[col][col];
        for row in 0..n {
            if row == col || a[row][col] == 0.0 {
                continue;
            }
            let f = a[row][col] / d;
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    (0..n).map(|i| b[i] / a[i][i]).collect()
}

/// Monotone cubic Hermite with caller-provided slopes, limited where they
/// would break monotonicity (Fritsch–Carlson condition). With exact analytic
/// slopes the interpolation error is O(h⁴), which the arclength inversion
/// relies on.
pub fn monotone_cubic_with_slopes(xs: &[f64], ys: &[f64], slopes: Vec<f64>) -> PiecewiseCubic {
    assert!(xs.len() >= 2 && xs.len() == ys.len() && xs.len() == slopes.len());
    monotone_hermite(xs, ys, slopes)
}

fn monotone_hermite(xs: &[f64], ys: &[f64], mut m: Vec<f64>) -> PiecewiseCubic {
    let n = xs.len();
    let h: Vec<f64> = (0..n - 1).map(|i| xs[i + 1] - xs[i]).collect();
    let d: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();
    for i in 0..n - 1 {
        if d[i] == 0.0 {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        let (al, be) = (m[i] / d[i], m[i + 1] / d[i]);
        let s = al * al + be * be;
        if s > 9.0 {
            let t = 3.0 / s.sqrt();
            m[i] = t * al * d[i];
            m[i + 1] = t * be * d[i];
        }
    }
    let mut coeffs = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let (hi, di) = (h[i], d[i]);
        let c2 = (3.0 * di - 2.0 * m[i] - m[i + 1]) / hi;
        let c3 = (m[i] + m[i + 1] - 2.0 * di) / (hi * hi);
        coeffs.push([ys[i], m[i], c2, c3]);
    }
    PiecewiseCubic {
        xs: xs.to_vec(),
        coeffs,
    }
}
