//! Deterministic JSON/CSV report emission for the CLI.
//!
//! Floats are formatted with Rust's shortest round-trip representation, so a
//! fixed configuration yields byte-identical reports.

use crate::geomcore::vec3::Vec3;
use crate::realizer::{ClassifyReport, ConservationReport};
use serde::Serialize;
use std::fmt::Write as _;

/// Summary written by `analyze`.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub k_mean: f64,
    pub k_var: f64,
    pub cylindrical: bool,
    pub ruling: Option<Vec3>,
    pub residuals: AnalyzeResiduals,
    pub skipped_points: usize,
    pub theorem_consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeResiduals {
    /// worst |K_forms − K_angle| over the grid
    pub curvature_route_agreement_max: f64,
    /// worst |φ_uv + K sinφ|
    pub egregium_max: f64,
    /// worst Codazzi residual pair at the configured step
    pub codazzi_max: [f64; 2],
    pub conservation_spread_a: f64,
    pub conservation_spread_b: f64,
}

impl AnalyzeReport {
    pub fn new(
        classify: &ClassifyReport,
        conservation: &ConservationReport,
        route_max: f64,
        egregium_max: f64,
        codazzi_max: [f64; 2],
    ) -> AnalyzeReport {
        AnalyzeReport {
            k_mean: classify.stats.k_mean,
            k_var: classify.stats.k_var,
            cylindrical: classify.cylindricity.is_cylindrical,
            ruling: classify.cylindricity.ruling_direction,
            residuals: AnalyzeResiduals {
                curvature_route_agreement_max: route_max,
                egregium_max,
                codazzi_max,
                conservation_spread_a: conservation.spread_a,
                conservation_spread_b: conservation.spread_b,
            },
            skipped_points: classify.stats.skipped_points,
            theorem_consistent: classify.theorem_consistent,
        }
    }
}

/// One grid row of `analyze`'s CSV output.
#[derive(Debug, Clone, Copy)]
pub struct GridRow {
    pub u: f64,
    pub v: f64,
    pub phi: f64,
    pub l: f64,
    pub n: f64,
    pub k: f64,
}

/// Fixed column order: u, v, phi, L, N, K.
pub fn grid_csv(rows: &[GridRow]) -> String {
    let mut out = String::from("u,v,phi,L,N,K\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.u, r.v, r.phi, r.l, r.n, r.k);
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
