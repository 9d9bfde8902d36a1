//! Numeric differential geometry of translation surfaces Ψ(u,v) = α(u) + β(v),
//! plus an exact symbolic replay of the elimination argument showing that the
//! only translation surfaces in R³ with constant Gaussian curvature are
//! cylinders (K = 0).
//!
//! The crate splits into:
//! - [`exprlang`]: a small expression language with forward-mode jets
//!   (derivatives to order 3) used by all numeric modules,
//! - [`geomcore`]: Frenet apparatus, fundamental forms, curvature by two
//!   routes, Christoffel symbols and Codazzi residuals,
//! - [`realizer`]: realizability residuals, the circle-generator probe and the
//!   empirical cylindricity classifier,
//! - [`symring`]: exact rational arithmetic in the differential ring generated
//!   by A, A′, A″, A‴, τ, τ′, τ″ together with z = φ_u and the radical
//!   s = X^{1/2}, X = A² − z²,
//! - [`proofpipe`]: the two elimination pipelines (planar and general) and the
//!   coefficient ledger they produce,
//! - [`fixtures`] and [`report`]: curve fixtures and deterministic JSON/CSV
//!   emission for the CLI.

pub mod exprlang;
pub mod fixtures;
pub mod geomcore;
pub mod proofpipe;
pub mod realizer;
pub mod report;
pub mod symring;
