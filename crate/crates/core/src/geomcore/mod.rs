//! Numeric differential geometry of curves and translation surfaces: Frenet
//! apparatus, fundamental forms, Gaussian curvature by two independent routes,
//! Christoffel symbols and Codazzi residuals.

mod curve;
mod frenet;
mod spline;
mod surface;
pub mod vec3;

pub use curve::{arclength_reparam, Curve, CurveData};
pub use frenet::{frenet, torsion, FrenetData};
pub use surface::{
    christoffel, codazzi_residual, form_coefficients, gauss_curvature_angle, gauss_curvature_forms,
    parametric_torsion_surface, FormCoefficients, SurfacePatch,
};

use crate::exprlang::ExprError;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum GeomError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("degenerate curve: |c'| = {speed:.3e} < {tol:.1e} at t = {t}")]
    DegenerateCurve { t: f64, speed: f64, tol: f64 },
    #[error("curve is not arclength-parametrized: |c'| = {speed} at t = {t}")]
    NotArclength { t: f64, speed: f64 },
    #[error("regularity violation at (u, v) = ({u}, {v}): sin(phi) = {sin_phi:.3e}")]
    RegularityViolation { u: f64, v: f64, sin_phi: f64 },
    #[error("zero curvature at s = {s}: torsion undefined")]
    ZeroCurvature { s: f64 },
    #[error("zero denominator in the surface-torsion formula at u = {u}")]
    ZeroTorsionDenominator { u: f64 },
    #[error("sampled curve needs at least {need} points, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("samples must be strictly increasing in t (violated at index {index})")]
    UnsortedSamples { index: usize },
}

/// Numeric tolerances shared by the geometry operations.
#[derive(Debug, Clone, Copy)]
pub struct GeomConfig {
    /// Regularity floor on sin φ.
    pub sin_floor: f64,
    /// Curvature floor below which torsion is refused and frames are
    /// completed arbitrarily.
    pub curvature_floor: f64,
    /// Central-difference step for the quantities the theory does not give in
    /// closed form (L_v, N_u).
    pub fd_step: f64,
    /// Unit-speed verification tolerance; multiplied by 10 for sampled curves
    /// (spline third derivatives are piecewise constant).
    pub unit_speed_tol: f64,
}

impl Default for GeomConfig {
    fn default() -> Self {
        GeomConfig {
            sin_floor: 1e-6,
            curvature_floor: 1e-8,
            fd_step: 1e-4,
            unit_speed_tol: 1e-6,
        }
    }
}
