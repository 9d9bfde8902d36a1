//! Space curves with jets to order 3: analytic, sampled (splined), or
//! reparametrized by arclength.

use super::spline::{monotone_cubic_with_slopes, not_a_knot, PiecewiseCubic};
use super::{GeomConfig, GeomError};
use crate::exprlang::{self, Expr, Jet, Var};
use crate::fixtures::CurveJson;

#[derive(Debug, Clone)]
pub enum CurveData {
    Analytic {
        x: Expr,
        y: Expr,
        z: Expr,
        domain: (f64, f64),
    },
    Samples {
        splines: Box<[PiecewiseCubic; 3]>,
        domain: (f64, f64),
    },
    /// base composed with the inverse arclength map t(s)
    Reparam {
        base: Box<Curve>,
        t_of_s: PiecewiseCubic,
        domain: (f64, f64),
    },
}

/// A space curve with the flag recording whether its parameter is arclength.
#[derive(Debug, Clone)]
pub struct Curve {
    pub data: CurveData,
    pub arclength: bool,
}

impl Curve {
    pub fn from_json(json: &CurveJson) -> Result<Curve, GeomError> {
        match json {
            CurveJson::Analytic {
                x,
                y,
                z,
                domain,
                arclength,
            } => Ok(Curve {
                data: CurveData::Analytic {
                    x: exprlang::parse(x)?,
                    y: exprlang::parse(y)?,
                    z: exprlang::parse(z)?,
                    domain: (domain[0], domain[1]),
                },
                arclength: *arclength,
            }),
            CurveJson::Samples { points, arclength } => {
                if points.len() < 4 {
                    return Err(GeomError::TooFewSamples {
                        need: 4,
                        got: points.len(),
                    });
                }
                for i in 1..points.len() {
                    if points[i][0] <= points[i - 1][0] {
                        return Err(GeomError::UnsortedSamples { index: i });
                    }
                }
                let ts: Vec<f64> = points.iter().map(|p| p[0]).collect();
                let comp = |k: usize| {
                    let ys: Vec<f64> = points.iter().map(|p| p[k + 1]).collect();
                    not_a_knot(&ts, &ys)
                };
                Ok(Curve {
                    data: CurveData::Samples {
                        splines: Box::new([comp(0), comp(1), comp(2)]),
                        domain: (ts[0], *ts.last().unwrap()),
                    },
                    arclength: *arclength,
                })
            }
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        match &self.data {
            CurveData::Analytic { domain, .. }
            | CurveData::Samples { domain, .. }
            | CurveData::Reparam { domain, .. } => *domain,
        }
    }

    /// Jets of the three components at parameter value `t`, slot 0.
    pub fn jets(&self, t: f64, order: u8) -> Result<[Jet; 3], GeomError> {
        match &self.data {
            CurveData::Analytic { x, y, z, .. } => {
                let bind = |e: &Expr| -> Result<Jet, GeomError> {
                    // analytic components may be written in t or u
                    let var = e.free_vars().first().copied().unwrap_or(Var::T);
                    Ok(exprlang::eval_jet(e, &[(var, t)], order)?)
                };
                Ok([bind(x)?, bind(y)?, bind(z)?])
            }
            CurveData::Samples { splines, .. } => Ok([
                jet_from_derivs(splines[0].eval(t), order),
                jet_from_derivs(splines[1].eval(t), order),
                jet_from_derivs(splines[2].eval(t), order),
            ]),
            CurveData::Reparam { base, t_of_s, .. } => {
                let inner = jet_from_derivs(t_of_s.eval(t), order);
                let base_jets = base.jets(inner.value(), order)?;
                // compose: component ∘ t(s), as univariate jets
                Ok([
                    compose1(&base_jets[0], &inner, order),
                    compose1(&base_jets[1], &inner, order),
                    compose1(&base_jets[2], &inner, order),
                ])
            }
        }
    }

    pub fn point(&self, t: f64) -> Result<[f64; 3], GeomError> {
        let j = self.jets(t, 0)?;
        Ok([j[0].value(), j[1].value(), j[2].value()])
    }

    /// k-th derivative vector.
    pub fn derivative(&self, t: f64, k: u8) -> Result<[f64; 3], GeomError> {
        let j = self.jets(t, k)?;
        Ok([j[0].partial(k, 0), j[1].partial(k, 0), j[2].partial(k, 0)])
    }

    pub fn speed(&self, t: f64) -> Result<f64, GeomError> {
        let d = self.derivative(t, 1)?;
        Ok(super::vec3::norm(d))
    }

    /// Check |c′| = 1 within tolerance at a probe grid.
    pub fn verify_unit_speed(&self, tol: f64, probes: usize) -> Result<(), GeomError> {
        let (a, b) = self.domain();
        for i in 0..probes {
            let t = a + (b - a) * (i as f64 + 0.5) / probes as f64;
            let s = self.speed(t)?;
            if (s - 1.0).abs() > tol {
                return Err(GeomError::NotArclength { t, speed: s });
            }
        }
        Ok(())
    }
}

fn jet_from_derivs(d: [f64; 4], order: u8) -> Jet {
    let mut partials = [[0.0; 4]; 4];
    partials[0][0] = d[0];
    partials[1][0] = d[1];
    partials[2][0] = d[2];
    partials[3][0] = d[3];
    Jet::from_partials(&partials, order)
}

/// Univariate composition f(g(s)) via Faà di Bruno to order 3.
fn compose1(f: &Jet, g: &Jet, order: u8) -> Jet {
    let f1 = if order >= 1 { f.partial(1, 0) } else { 0.0 };
    let f2 = if order >= 2 { f.partial(2, 0) } else { 0.0 };
    let f3 = if order >= 3 { f.partial(3, 0) } else { 0.0 };
    let g1 = if order >= 1 { g.partial(1, 0) } else { 0.0 };
    let g2 = if order >= 2 { g.partial(2, 0) } else { 0.0 };
    let g3 = if order >= 3 { g.partial(3, 0) } else { 0.0 };
    let mut partials = [[0.0; 4]; 4];
    partials[0][0] = f.value();
    partials[1][0] = f1 * g1;
    partials[2][0] = f2 * g1 * g1 + f1 * g2;
    partials[3][0] = f3 * g1 * g1 * g1 + 3.0 * f2 * g1 * g2 + f1 * g3;
    Jet::from_partials(&partials, order)
}

/// Reparametrize by arclength: integrate |c′| with composite Gauss–Legendre
/// quadrature, then invert s(t) with a monotone cubic whose knot slopes
/// dt/ds = 1/|c′| are exact; the post-condition |α′| = 1 within tol is
/// verified before returning. The result's parameter runs over
/// [0, total length].
pub fn arclength_reparam(c: &Curve, tol: f64, cfg: &GeomConfig) -> Result<Curve, GeomError> {
    let (a, b) = c.domain();
    let n = 2048;
    // 4-point Gauss–Legendre nodes on [-1, 1]
    const GL_X: [f64; 4] = [
        -0.861136311594053,
        -0.339981043584856,
        0.339981043584856,
        0.861136311594053,
    ];
    const GL_W: [f64; 4] = [
        0.347854845137454,
        0.652145154862546,
        0.652145154862546,
        0.347854845137454,
    ];
    let h = (b - a) / n as f64;
    let mut ts = Vec::with_capacity(n + 1);
    let mut ss = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    ts.push(a);
    ss.push(0.0);
    for i in 0..n {
        let lo = a + i as f64 * h;
        for k in 0..4 {
            let t = lo + h * 0.5 * (GL_X[k] + 1.0);
            let sp = c.speed(t)?;
            if sp < tol.max(cfg.curvature_floor) {
                return Err(GeomError::DegenerateCurve { t, speed: sp, tol });
            }
            acc += 0.5 * h * GL_W[k] * sp;
        }
        ts.push(lo + h);
        ss.push(acc);
    }
    // endpoint speed check (quadrature nodes never hit the endpoints)
    for &t in &[a, b] {
        let sp = c.speed(t)?;
        if sp < tol.max(cfg.curvature_floor) {
            return Err(GeomError::DegenerateCurve { t, speed: sp, tol });
        }
    }
    let mut slopes = Vec::with_capacity(ts.len());
    for &t in &ts {
        slopes.push(1.0 / c.speed(t)?);
    }
    let t_of_s = monotone_cubic_with_slopes(&ss, &ts, slopes);
    let out = Curve {
        data: CurveData::Reparam {
            base: Box::new(c.clone()),
            t_of_s,
            domain: (0.0, acc),
        },
        arclength: true,
    };
    out.verify_unit_speed(tol.max(1e-10), 64)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, Params};

    fn curve(name: &str, params: &[(&str, f64)]) -> Curve {
        let p: Params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        Curve::from_json(&fixture(name, &p).unwrap()).unwrap()
    }

    #[test]
    fn circle_fixture_is_unit_speed() {
        let c = curve("circle", &[("r", 2.0)]);
        c.verify_unit_speed(1e-12, 16).unwrap();
    }

    #[test]
    fn angle_parametrized_circle_reparametrizes_to_s_equals_2_theta() {
        // circle of radius 2 parametrized by angle: speed 2, so s = 2θ
        let json = CurveJson::Analytic {
            x: "2*cos(t)".into(),
            y: "2*sin(t)".into(),
            z: "0".into(),
            domain: [0.0, std::f64::consts::PI],
            arclength: false,
        };
        let c = Curve::from_json(&json).unwrap();
        let r = arclength_reparam(&c, 1e-9, &GeomConfig::default()).unwrap();
        let (lo, hi) = r.domain();
        assert_eq!(lo, 0.0);
        assert!((hi - 2.0 * std::f64::consts::PI).abs() < 1e-9);
        r.verify_unit_speed(1e-6, 20).unwrap();
        // the point at s should be the base point at θ = s/2
        let p = r.point(1.0).unwrap();
        assert!((p[0] - 2.0 * (0.5f64).cos()).abs() < 1e-7);
        assert!((p[1] - 2.0 * (0.5f64).sin()).abs() < 1e-7);
    }

    #[test]
    fn already_unit_speed_line_is_unchanged_up_to_tolerance() {
        let c = curve("line", &[]);
        let r = arclength_reparam(&c, 1e-9, &GeomConfig::default()).unwrap();
        let (lo, hi) = r.domain();
        assert!((hi - lo - 6.0).abs() < 1e-9);
        for i in 0..10 {
            let s = lo + (hi - lo) * i as f64 / 9.0;
            let p = r.point(s).unwrap();
            let q = c.point(c.domain().0 + s).unwrap();
            for k in 0..3 {
                assert!((p[k] - q[k]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn degenerate_curve_is_rejected() {
        let json = CurveJson::Analytic {
            x: "t^3".into(),
            y: "0".into(),
            z: "0".into(),
            domain: [-1.0, 1.0],
            arclength: false,
        };
        let c = Curve::from_json(&json).unwrap();
        assert!(matches!(
            arclength_reparam(&c, 1e-6, &GeomConfig::default()),
            Err(GeomError::DegenerateCurve { .. })
        ));
    }

    #[test]
    fn sampled_curve_jets_through_the_spline() {
        let pts: Vec<[f64; 4]> = (0..40)
            .map(|i| {
                let t = i as f64 * 0.1;
                [t, t.cos(), t.sin(), 0.3 * t]
            })
            .collect();
        let c = Curve::from_json(&CurveJson::Samples {
            points: pts,
            arclength: false,
        })
        .unwrap();
        let d1 = c.derivative(1.7, 1).unwrap();
        assert!((d1[0] + (1.7f64).sin()).abs() < 1e-4);
        assert!((d1[2] - 0.3).abs() < 1e-6);
    }
}
