//! Realizability residuals, the circle-generator probe, and the empirical
//! cylindricity classifier.

use crate::exprlang::{self, Expr, Var};
use crate::geomcore::vec3::{self, Vec3};
use crate::geomcore::{
    form_coefficients, gauss_curvature_forms, Curve, GeomConfig, GeomError, SurfacePatch,
};
use serde::Serialize;

/// Uniform probe grid over a rectangle (cell midpoints).
#[derive(Debug, Clone, Copy)]
pub struct Grid {
    pub nu: usize,
    pub nv: usize,
}

impl Grid {
    pub fn new(nu: usize, nv: usize) -> Grid {
        assert!(nu >= 2 && nv >= 2, "grid must be at least 2x2");
        Grid { nu, nv }
    }

    pub fn points(
        &self,
        (ulo, uhi): (f64, f64),
        (vlo, vhi): (f64, f64),
    ) -> impl Iterator<Item = (f64, f64)> + '_ {
        let (nu, nv) = (self.nu, self.nv);
        (0..nu).flat_map(move |i| {
            (0..nv).map(move |j| {
                (
                    ulo + (uhi - ulo) * (i as f64 + 0.5) / nu as f64,
                    vlo + (vhi - vlo) * (j as f64 + 0.5) / nv as f64,
                )
            })
        })
    }

    pub fn u_values(&self, (lo, hi): (f64, f64)) -> Vec<f64> {
        (0..self.nu)
            .map(|i| lo + (hi - lo) * (i as f64 + 0.5) / self.nu as f64)
            .collect()
    }

    pub fn v_values(&self, (lo, hi): (f64, f64)) -> Vec<f64> {
        (0..self.nv)
            .map(|j| lo + (hi - lo) * (j as f64 + 0.5) / self.nv as f64)
            .collect()
    }
}

/// Conservation of A(u) = √(L² + φ_u²) across v (and B(v) across u): both are
/// exact one-variable functions on any genuine translation surface.
#[derive(Debug, Clone, Serialize)]
pub struct ConservationReport {
    pub a_mean_by_u: Vec<f64>,
    pub b_mean_by_v: Vec<f64>,
    pub spread_a: f64,
    pub spread_b: f64,
}

/// Raw A/B samples over the grid, exposed so controls can perturb them and
/// recompute the spread.
pub struct ConservationSamples {
    /// `a[i][j]` = √(L² + φ_u²) at (u_i, v_j)
    pub a: Vec<Vec<f64>>,
    /// `b[j][i]` = √(N² + φ_v²) at (u_i, v_j)
    pub b: Vec<Vec<f64>>,
}

pub fn conservation_samples(
    s: &SurfacePatch,
    grid: Grid,
    cfg: &GeomConfig,
) -> Result<ConservationSamples, GeomError> {
    let us = grid.u_values(s.domain.0);
    let vs = grid.v_values(s.domain.1);
    let mut a = vec![vec![0.0; vs.len()]; us.len()];
    let mut b = vec![vec![0.0; us.len()]; vs.len()];
    for (i, &u) in us.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate() {
            let fc = form_coefficients(s, u, v, cfg)?;
            a[i][j] = (fc.l * fc.l + fc.phi_u * fc.phi_u).sqrt();
            b[j][i] = (fc.n * fc.n + fc.phi_v * fc.phi_v).sqrt();
        }
    }
    Ok(ConservationSamples { a, b })
}

/// Maximum over rows of (max − min) within the row.
pub fn spread_from_table(table: &[Vec<f64>]) -> f64 {
    table
        .iter()
        .map(|row| {
            let mx = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let mn = row.iter().cloned().fold(f64::INFINITY, f64::min);
            mx - mn
        })
        .fold(0.0, f64::max)
}

pub fn conservation_ab(
    s: &SurfacePatch,
    grid: Grid,
    cfg: &GeomConfig,
) -> Result<ConservationReport, GeomError> {
    let samples = conservation_samples(s, grid, cfg)?;
    let mean = |row: &Vec<f64>| row.iter().sum::<f64>() / row.len() as f64;
    Ok(ConservationReport {
        a_mean_by_u: samples.a.iter().map(mean).collect(),
        b_mean_by_v: samples.b.iter().map(mean).collect(),
        spread_a: spread_from_table(&samples.a),
        spread_b: spread_from_table(&samples.b),
    })
}

/// Candidate metric data: angle φ(u,v), curvature profiles A(u), B(v), the
/// constant curvature K, and the signs ε₁ = sign L, ε₂ = sign N.
pub struct RealizabilityInput {
    pub phi: Expr,
    pub a: Expr,
    pub b: Expr,
    pub k: f64,
    pub eps1: i8,
    pub eps2: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct RealizabilityReport {
    /// max |(A²−φ_u²)(B²−φ_v²) − K²sin⁴φ|
    pub metric_residual_max: f64,
    /// max |LN/sin²φ − K| for the constructed L, N
    pub gauss_residual_max: f64,
    /// max |L_v − Nφ_u/sinφ| and |N_u − Lφ_v/sinφ| (analytic derivatives)
    pub codazzi_residual_max: [f64; 2],
    /// max |φ_uv + K sinφ|; nonzero means the angle does not actually carry
    /// curvature K
    pub egregium_residual_max: f64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RealizabilityOutcome {
    /// K = 0 inputs belong to the cylindrical branch; no residuals computed.
    KZeroBranch {
        message: String,
    },
    Residuals(RealizabilityReport),
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum RealizerError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Expr(#[from] exprlang::ExprError),
    #[error("strictness violation at (u, v) = ({u}, {v}): {what}")]
    Strictness { u: f64, v: f64, what: String },
    #[error("sign mismatch: eps1*eps2 must equal sign(K)")]
    SignMismatch,
}

/// Evaluate the realizability residuals of a candidate (φ, A, B, K) over the
/// given parameter rectangle.
pub fn realizability_check(
    inp: &RealizabilityInput,
    domain_u: (f64, f64),
    domain_v: (f64, f64),
    grid: Grid,
) -> Result<RealizabilityOutcome, RealizerError> {
    if inp.k == 0.0 {
        return Ok(RealizabilityOutcome::KZeroBranch {
            message: "K = 0 is the cylindrical branch: flat metrics of this form are \
realized by cylinders; the residual machinery applies only to K != 0"
                .into(),
        });
    }
    if (inp.eps1 * inp.eps2) as f64 != inp.k.signum() {
        return Err(RealizerError::SignMismatch);
    }
    let mut metric_max: f64 = 0.0;
    let mut gauss_max: f64 = 0.0;
    let mut codazzi_max = [0.0f64; 2];
    let mut egregium_max: f64 = 0.0;
    for (u, v) in grid.points(domain_u, domain_v) {
        let phi = exprlang::eval_jet(&inp.phi, &[(Var::U, u), (Var::V, v)], 2)?;
        let a = exprlang::eval_jet(&inp.a, &[(Var::U, u)], 1)?;
        let b = exprlang::eval_jet(&inp.b, &[(Var::V, v)], 1)?;
        let (phi0, phi_u, phi_v, phi_uv) = (
            phi.value(),
            phi.partial(1, 0),
            phi.partial(0, 1),
            phi.partial(1, 1),
        );
        if !(0.0 < phi0 && phi0 < std::f64::consts::PI) {
            return Err(RealizerError::Strictness {
                u,
                v,
                what: format!("phi = {phi0} outside (0, pi)"),
            });
        }
        let la2 = a.value() * a.value() - phi_u * phi_u;
        let nb2 = b.value() * b.value() - phi_v * phi_v;
        if la2 <= 0.0 {
            return Err(RealizerError::Strictness {
                u,
                v,
                what: "A^2 must exceed phi_u^2 strictly".into(),
            });
        }
        if nb2 <= 0.0 {
            return Err(RealizerError::Strictness {
                u,
                v,
                what: "B^2 must exceed phi_v^2 strictly".into(),
            });
        }
        let sp = phi0.sin();
        metric_max = metric_max.max((la2 * nb2 - inp.k * inp.k * sp.powi(4)).abs());
        let l = inp.eps1 as f64 * la2.sqrt();
        let n = inp.eps2 as f64 * nb2.sqrt();
        gauss_max = gauss_max.max((l * n / (sp * sp) - inp.k).abs());
        // analytic cross derivatives: A depends on u only, B on v only
        let l_v = inp.eps1 as f64 * (-phi_u * phi_uv) / la2.sqrt();
        let n_u = inp.eps2 as f64 * (-phi_v * phi_uv) / nb2.sqrt();
        codazzi_max[0] = codazzi_max[0].max((l_v - n * phi_u / sp).abs());
        codazzi_max[1] = codazzi_max[1].max((n_u - l * phi_v / sp).abs());
        egregium_max = egregium_max.max((phi_uv + inp.k * sp).abs());
    }
    Ok(RealizabilityOutcome::Residuals(RealizabilityReport {
        metric_residual_max: metric_max,
        gauss_residual_max: gauss_max,
        codazzi_residual_max: codazzi_max,
        egregium_residual_max: egregium_max,
    }))
}

/// Pointwise residual of (A²−φ_u²)(B²−φ_v²) = K²sin⁴φ with A, B, K all read
/// off the surface itself; zero to round-off on genuine patches.
pub fn metric_identity_residual(
    s: &SurfacePatch,
    grid: Grid,
    cfg: &GeomConfig,
) -> Result<f64, GeomError> {
    let mut worst: f64 = 0.0;
    for (u, v) in grid.points(s.domain.0, s.domain.1) {
        let fc = form_coefficients(s, u, v, cfg)?;
        let k = gauss_curvature_forms(&fc);
        let a2 = fc.l * fc.l + fc.phi_u * fc.phi_u;
        let b2 = fc.n * fc.n + fc.phi_v * fc.phi_v;
        let sp = fc.phi.sin();
        let lhs = (a2 - fc.phi_u * fc.phi_u) * (b2 - fc.phi_v * fc.phi_v);
        worst = worst.max((lhs - k * k * sp.powi(4)).abs());
    }
    Ok(worst)
}

/// Outcome of probing a generating curve against the circle-generator
/// relations β₃′(β₂′β₃″ − β₂″β₃′) = β₃′(β₁′β₃″ − β₁″β₃′) = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CircleCaseClass {
    /// β₃′ ≡ 0: β stays in a horizontal plane.
    Plane,
    /// relations hold with β₃′ ≠ 0 somewhere: β is a straight line and the
    /// surface is cylindrical.
    Line,
    /// a relation fails: no constant-curvature surface with a circle
    /// generator contains this β.
    Violation,
}

#[derive(Debug, Clone, Serialize)]
pub struct CircleCaseReport {
    pub class: CircleCaseClass,
    pub max_b3_prime: f64,
    pub max_bracket_residual: f64,
    pub radius: f64,
}

/// Probe the circle-generator relations along β at `n` samples.
pub fn circle_case_probe(
    beta: &Curve,
    radius: f64,
    n: usize,
    tol: f64,
) -> Result<CircleCaseReport, GeomError> {
    let (lo, hi) = beta.domain();
    let mut max_b3p: f64 = 0.0;
    let mut max_resid: f64 = 0.0;
    for i in 0..n {
        let t = lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
        let d1 = beta.derivative(t, 1)?;
        let d2 = beta.derivative(t, 2)?;
        let b3p = d1[2];
        max_b3p = max_b3p.max(b3p.abs());
        let bracket1 = d1[1] * d2[2] - d2[1] * d1[2];
        let bracket2 = d1[0] * d2[2] - d2[0] * d1[2];
        max_resid = max_resid.max((b3p * bracket1).abs().max((b3p * bracket2).abs()));
    }
    let class = if max_b3p < tol {
        CircleCaseClass::Plane
    } else if max_resid < tol {
        CircleCaseClass::Line
    } else {
        CircleCaseClass::Violation
    };
    Ok(CircleCaseReport {
        class,
        max_b3_prime: max_b3p,
        max_bracket_residual: max_resid,
        radius,
    })
}

/// Cylindricity verdict with the supporting deviation measurement.
#[derive(Debug, Clone, Serialize)]
pub struct CylindricityReport {
    pub is_cylindrical: bool,
    pub ruling_direction: Option<Vec3>,
    /// smaller of the two tangent-direction spreads (radians)
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct KStats {
    pub k_mean: f64,
    pub k_var: f64,
    pub skipped_points: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub cylindricity: CylindricityReport,
    pub stats: KStats,
    /// variance(K) < tolK must imply |mean K| < tolK and cylindricity; a
    /// false value here would contradict the classification.
    pub theorem_consistent: bool,
}

/// Classify a patch: K statistics over the grid plus cylindricity by tangent
/// spread of the generating curves. Points under the regularity floor are
/// counted and skipped rather than extrapolated.
pub fn classify_surface(
    s: &SurfacePatch,
    grid: Grid,
    tol_k: f64,
    tol_c: f64,
    cfg: &GeomConfig,
) -> Result<ClassifyReport, GeomError> {
    let mut ks = Vec::with_capacity(grid.nu * grid.nv);
    let mut skipped = 0usize;
    for (u, v) in grid.points(s.domain.0, s.domain.1) {
        match form_coefficients(s, u, v, cfg) {
            Ok(fc) => ks.push(gauss_curvature_forms(&fc)),
            Err(GeomError::RegularityViolation { .. }) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    let nk = ks.len().max(1) as f64;
    let k_mean = ks.iter().sum::<f64>() / nk;
    let k_var = ks.iter().map(|k| (k - k_mean) * (k - k_mean)).sum::<f64>() / nk;

    let tangent_spread = |c: &Curve, n: usize| -> Result<(f64, Vec3), GeomError> {
        let (lo, hi) = c.domain();
        let t0 = c.derivative(lo + (hi - lo) * 0.5 / n as f64, 1)?;
        let mut worst: f64 = 0.0;
        for i in 1..n {
            let t = lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
            let ti = c.derivative(t, 1)?;
            worst = worst.max(vec3::angle_between(t0, ti));
        }
        Ok((worst, vec3::normalize(t0)))
    };
    let (spread_a, dir_a) = tangent_spread(&s.alpha, grid.nu)?;
    let (spread_b, dir_b) = tangent_spread(&s.beta, grid.nv)?;
    let (max_deviation, dir) = if spread_a <= spread_b {
        (spread_a, dir_a)
    } else {
        (spread_b, dir_b)
    };
    let is_cylindrical = max_deviation < tol_c;
    let cylindricity = CylindricityReport {
        is_cylindrical,
        ruling_direction: is_cylindrical.then_some(dir),
        max_deviation,
    };
    let theorem_consistent = if k_var < tol_k {
        k_mean.abs() < tol_k && is_cylindrical
    } else {
        true
    };
    Ok(ClassifyReport {
        cylindricity,
        stats: KStats {
            k_mean,
            k_var,
            skipped_points: skipped,
        },
        theorem_consistent,
    })
}
