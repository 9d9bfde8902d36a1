//! Fundamental forms and curvature of translation surfaces Ψ(u,v) = α(u) + β(v).

use super::frenet::frenet;
use super::vec3::{cross, dot, norm, Vec3};
use super::{Curve, GeomConfig, GeomError};
use crate::exprlang::Jet;

/// A translation-surface patch with its parameter rectangle.
#[derive(Debug, Clone)]
pub struct SurfacePatch {
    pub alpha: Curve,
    pub beta: Curve,
    pub domain: ((f64, f64), (f64, f64)),
}

impl SurfacePatch {
    /// Build a patch from two unit-speed curves; verifies the arclength flag
    /// and unit speed at probe points.
    pub fn new(alpha: Curve, beta: Curve, cfg: &GeomConfig) -> Result<SurfacePatch, GeomError> {
        let tol = cfg.unit_speed_tol
            * if matches!(alpha.data, super::CurveData::Analytic { .. })
                && matches!(beta.data, super::CurveData::Analytic { .. })
            {
                1.0
            } else {
                10.0
            };
        alpha.verify_unit_speed(tol, 24)?;
        beta.verify_unit_speed(tol, 24)?;
        let domain = (alpha.domain(), beta.domain());
        Ok(SurfacePatch {
            alpha,
            beta,
            domain,
        })
    }

    pub fn position(&self, u: f64, v: f64) -> Result<Vec3, GeomError> {
        let a = self.alpha.point(u)?;
        let b = self.beta.point(v)?;
        Ok(super::vec3::add(a, b))
    }
}

/// First- and second-form data at one point, with the angle φ and its partials
/// from jets. For translation surfaces E = G = 1 and M = 0 identically.
#[derive(Debug, Clone, Copy)]
pub struct FormCoefficients {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
    pub phi: f64,
    pub phi_u: f64,
    pub phi_v: f64,
    pub phi_uu: f64,
    pub phi_uv: f64,
    pub phi_vv: f64,
}

/// Fundamental forms at (u, v): φ = ∠(t_α, t_β) ∈ (0, π) with analytic partials
/// via jets of ⟨t_α(u), t_β(v)⟩, L = −(k_α/sinφ)·⟨b_α, t_β⟩,
/// N = (k_β/sinφ)·⟨t_α, b_β⟩.
pub fn form_coefficients(
    s: &SurfacePatch,
    u: f64,
    v: f64,
    cfg: &GeomConfig,
) -> Result<FormCoefficients, GeomError> {
    let a_jets = s.alpha.jets(u, 3)?;
    let b_jets = s.beta.jets(v, 3)?;
    // w(u, v) = Σ αᵢ′(u)·βᵢ′(v), as a two-variable jet of order 2
    let mut partials = [[0.0; 4]; 4];
    for i in 0..=2u8 {
        for j in 0..=2u8 {
            if i + j > 2 {
                continue;
            }
            let mut acc = 0.0;
            for comp in 0..3 {
                acc += a_jets[comp].partial(i + 1, 0) * b_jets[comp].partial(j + 1, 0);
            }
            partials[i as usize][j as usize] = acc;
        }
    }
    let w = Jet::from_partials(&partials, 2);
    let t_a: Vec3 = [
        a_jets[0].partial(1, 0),
        a_jets[1].partial(1, 0),
        a_jets[2].partial(1, 0),
    ];
    let t_b: Vec3 = [
        b_jets[0].partial(1, 0),
        b_jets[1].partial(1, 0),
        b_jets[2].partial(1, 0),
    ];
    let sin_phi = norm(cross(t_a, t_b));
    if sin_phi < cfg.sin_floor {
        return Err(GeomError::RegularityViolation { u, v, sin_phi });
    }
    let phi_jet = w.acos();

    let fa = frenet(&s.alpha, u, cfg)?;
    let fb = frenet(&s.beta, v, cfg)?;
    let l = if fa.curvature < cfg.curvature_floor {
        0.0
    } else {
        -(fa.curvature / sin_phi) * dot(fa.binormal, t_b)
    };
    let n = if fb.curvature < cfg.curvature_floor {
        0.0
    } else {
        (fb.curvature / sin_phi) * dot(t_a, fb.binormal)
    };

    Ok(FormCoefficients {
        e: 1.0,
        f: w.value(),
        g: 1.0,
        l,
        m: 0.0,
        n,
        phi: phi_jet.value(),
        phi_u: phi_jet.partial(1, 0),
        phi_v: phi_jet.partial(0, 1),
        phi_uu: phi_jet.partial(2, 0),
        phi_uv: phi_jet.partial(1, 1),
        phi_vv: phi_jet.partial(0, 2),
    })
}

/// Gaussian curvature from the shape coefficients: K = LN / sin²φ.
pub fn gauss_curvature_forms(fc: &FormCoefficients) -> f64 {
    let s = fc.phi.sin();
    fc.l * fc.n / (s * s)
}

/// Gaussian curvature from the metric alone: K = −φ_uv / sinφ.
pub fn gauss_curvature_angle(fc: &FormCoefficients) -> f64 {
    -fc.phi_uv / fc.phi.sin()
}

/// Christoffel symbols (Γ¹₁₁, Γ²₁₁, Γ¹₁₂, Γ²₁₂, Γ¹₂₂, Γ²₂₂) of the metric
/// du² + 2cosφ dudv + dv².
pub fn christoffel(fc: &FormCoefficients) -> [f64; 6] {
    let s = fc.phi.sin();
    let cot = fc.phi.cos() / s;
    [
        cot * fc.phi_u,
        -fc.phi_u / s,
        0.0,
        0.0,
        -fc.phi_v / s,
        cot * fc.phi_v,
    ]
}

/// Codazzi residuals |L_v − Nφ_u/sinφ| and |N_u − Lφ_v/sinφ|, with L_v and
/// N_u by central differences of the form coefficients at step h.
pub fn codazzi_residual(
    s: &SurfacePatch,
    u: f64,
    v: f64,
    h: f64,
    cfg: &GeomConfig,
) -> Result<(f64, f64), GeomError> {
    let fc = form_coefficients(s, u, v, cfg)?;
    let l_v = (form_coefficients(s, u, v + h, cfg)?.l - form_coefficients(s, u, v - h, cfg)?.l)
        / (2.0 * h);
    let n_u = (form_coefficients(s, u + h, v, cfg)?.n - form_coefficients(s, u - h, v, cfg)?.n)
        / (2.0 * h);
    let sp = fc.phi.sin();
    Ok((
        (l_v - fc.n * fc.phi_u / sp).abs(),
        (n_u - fc.l * fc.phi_v / sp).abs(),
    ))
}

/// Torsion of the u-parametric curve from surface data only:
///
/// τ = (L·φ_uu − (L·cosφ/sinφ)(L² + φ_u²) − L_u·φ_u) / (L² + φ_u²)
///
/// with L_u eliminated through A·A′ = L·L_u + φ_u·φ_uu (so no finite
/// differences enter a third-derivative-sensitive quantity); when |L| is under
/// the floor, L_u falls back to a central difference along the given u-line.
pub fn parametric_torsion_surface(
    line: impl Fn(f64) -> Result<FormCoefficients, GeomError>,
    u: f64,
    a: f64,
    a_prime: f64,
    cfg: &GeomConfig,
) -> Result<f64, GeomError> {
    let fc = line(u)?;
    let denom = fc.l * fc.l + fc.phi_u * fc.phi_u;
    if denom < cfg.curvature_floor {
        return Err(GeomError::ZeroTorsionDenominator { u });
    }
    let l_u = if fc.l.abs() > 1e-7 {
        (a * a_prime - fc.phi_u * fc.phi_uu) / fc.l
    } else {
        let h = cfg.fd_step;
        (line(u + h)?.l - line(u - h)?.l) / (2.0 * h)
    };
    let cot = fc.phi.cos() / fc.phi.sin();
    Ok((fc.l * fc.phi_uu - fc.l * cot * denom - l_u * fc.phi_u) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, Params};
    use crate::geomcore::vec3;

    fn curve(name: &str, params: &[(&str, f64)]) -> Curve {
        let p: Params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        Curve::from_json(&fixture(name, &p).unwrap()).unwrap()
    }

    fn cylinder() -> SurfacePatch {
        SurfacePatch::new(
            curve("circle", &[("r", 1.0)]),
            curve("line", &[]),
            &GeomConfig::default(),
        )
        .unwrap()
    }

    fn circle_helix() -> SurfacePatch {
        SurfacePatch::new(
            curve("circle", &[("r", 1.0)]),
            curve("helix", &[("a", 1.0), ("b", 1.0)]),
            &GeomConfig::default(),
        )
        .unwrap()
    }

    #[test]
    fn cylinder_forms_match_hand_computation() {
        // unit circle + vertical line: φ = π/2, L = −k_α·⟨b_α, t_β⟩ = −1, N = 0
        let s = cylinder();
        let cfg = GeomConfig::default();
        let fc = form_coefficients(&s, 0.9, 1.3, &cfg).unwrap();
        assert!((fc.phi - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!((fc.l + 1.0).abs() < 1e-12);
        assert!(fc.n.abs() < 1e-12);
        assert_eq!(fc.m, 0.0);
        assert!(gauss_curvature_forms(&fc).abs() < 1e-12);
        assert!(gauss_curvature_angle(&fc).abs() < 1e-12);
    }

    #[test]
    fn curvature_unit_case() {
        // L = N = sinφ = 1 gives K = 1 by the shape route
        let fc = FormCoefficients {
            e: 1.0,
            f: 0.0,
            g: 1.0,
            l: 1.0,
            m: 0.0,
            n: 1.0,
            phi: std::f64::consts::FRAC_PI_2,
            phi_u: 0.0,
            phi_v: 0.0,
            phi_uu: 0.0,
            phi_uv: 0.0,
            phi_vv: 0.0,
        };
        assert_eq!(gauss_curvature_forms(&fc), 1.0);
        // constant angle: the metric route reports zero
        assert_eq!(gauss_curvature_angle(&fc), 0.0);
    }

    #[test]
    fn two_orthogonal_lines_give_a_flat_plane() {
        let x_line = crate::fixtures::CurveJson::Analytic {
            x: "t".into(),
            y: "0".into(),
            z: "0".into(),
            domain: [-1.0, 1.0],
            arclength: true,
        };
        let s = SurfacePatch::new(
            Curve::from_json(&x_line).unwrap(),
            curve("line", &[]),
            &GeomConfig::default(),
        )
        .unwrap();
        let fc = form_coefficients(&s, 0.2, -0.3, &GeomConfig::default()).unwrap();
        assert_eq!(fc.l, 0.0);
        assert_eq!(fc.n, 0.0);
    }

    #[test]
    fn curvature_routes_agree_on_circle_helix() {
        let s = circle_helix();
        let cfg = GeomConfig::default();
        for (u, v) in [(0.3, 0.8), (1.1, 2.0), (2.4, 4.1)] {
            let fc = form_coefficients(&s, u, v, &cfg).unwrap();
            let k1 = gauss_curvature_forms(&fc);
            let k2 = gauss_curvature_angle(&fc);
            assert!(
                (k1 - k2).abs() < 1e-6,
                "
routes differ: {k1} vs {k2}"
            );
            // closed form: K = (cosθ/4)/(1 − cos²θ/2)², θ = u − v/√2
            let theta = u - v / 2f64.sqrt();
            let k_ref = 0.25 * theta.cos() / (1.0 - 0.5 * theta.cos() * theta.cos()).powi(2);
            assert!((k1 - k_ref).abs() < 1e-9, "{k1} vs closed form {k_ref}");
        }
    }

    #[test]
    fn christoffel_table_and_gauss_formula_residual() {
        let cfg = GeomConfig::default();
        // φ = π/2 constant: all six vanish
        let s = cylinder();
        let fc = form_coefficients(&s, 0.4, 0.0, &cfg).unwrap();
        for g in christoffel(&fc) {
            assert!(g.abs() < 1e-12);
        }
        // direct substitution: φ_u = 1 at φ = π/2 gives Γ²₁₁ = −1, Γ¹₁₁ = 0
        let mut fc2 = fc;
        fc2.phi_u = 1.0;
        let g = christoffel(&fc2);
        assert!((g[1] + 1.0).abs() < 1e-12 && g[0].abs() < 1e-12);

        // vector identity Ψ_uu = Γ¹₁₁Ψ_u + Γ²₁₁Ψ_v + L·N at a generic point
        let s = circle_helix();
        let (u, v) = (0.7, 1.9);
        let fc = form_coefficients(&s, u, v, &cfg).unwrap();
        let g = christoffel(&fc);
        let psi_u = s.alpha.derivative(u, 1).unwrap();
        let psi_uu = s.alpha.derivative(u, 2).unwrap();
        let psi_v = s.beta.derivative(v, 1).unwrap();
        let normal = vec3::scale(vec3::cross(psi_u, psi_v), 1.0 / fc.phi.sin());
        let mut resid = vec3::sub(
            psi_uu,
            vec3::add(
                vec3::add(vec3::scale(psi_u, g[0]), vec3::scale(psi_v, g[1])),
                vec3::scale(normal, fc.l),
            ),
        );
        for r in &mut resid {
            assert!(r.abs() < 1e-6, "gauss formula residual {resid:?}");
        }
    }

    #[test]
    fn codazzi_residuals_small_on_genuine_surfaces() {
        let cfg = GeomConfig::default();
        let s = circle_helix();
        for (u, v) in [(0.3, 0.8), (1.7, 3.0)] {
            let (r1, r2) = codazzi_residual(&s, u, v, 1e-4, &cfg).unwrap();
            assert!(r1 < 1e-5 && r2 < 1e-5, "codazzi {r1} {r2}");
        }
        let s = cylinder();
        let (r1, r2) = codazzi_residual(&s, 0.5, 0.5, 1e-4, &cfg).unwrap();
        assert!(r1 < 1e-8 && r2 < 1e-8);
    }

    #[test]
    fn codazzi_negative_control_fires() {
        // a v-dependent perturbation of L breaks the first equation; a
        // constant shift breaks the second through the Lφ_v/sinφ term
        let cfg = GeomConfig::default();
        let s = circle_helix();
        let (u, v) = (0.4, 1.2);
        let h = 1e-4;
        let fc = form_coefficients(&s, u, v, &cfg).unwrap();
        let sp = fc.phi.sin();
        let perturbed = |uu: f64, vv: f64| -> f64 {
            form_coefficients(&s, uu, vv, &cfg).unwrap().l + 0.1 * (3.0 * uu + 2.0 * vv).sin()
        };
        let l_v = (perturbed(u, v + h) - perturbed(u, v - h)) / (2.0 * h);
        let r1 = (l_v - fc.n * fc.phi_u / sp).abs();
        assert!(r1 > 1e-3, "first residual should fire, got {r1}");

        let n_u = (form_coefficients(&s, u + h, v, &cfg).unwrap().n
            - form_coefficients(&s, u - h, v, &cfg).unwrap().n)
            / (2.0 * h);
        let r2 = (n_u - (fc.l + 0.1) * fc.phi_v / sp).abs();
        assert!(
            r2 > 1e-3,
            "second residual should fire under L+0.1, got {r2}"
        );
    }

    #[test]
    fn surface_torsion_matches_frenet_torsion() {
        let cfg = GeomConfig::default();
        // swap roles: α = helix so the u-curves twist
        let s = SurfacePatch::new(
            curve("helix", &[("a", 1.0), ("b", 1.0)]),
            curve("circle", &[("r", 1.0)]),
            &cfg,
        )
        .unwrap();
        let v0 = 0.3;
        let line = |u: f64| form_coefficients(&s, u, v0, &cfg);
        // A = k_α = 1/2 constant for the helix, A′ = 0
        let tau = parametric_torsion_surface(line, 0.8, 0.5, 0.0, &cfg).unwrap();
        assert!((tau - 0.5).abs() < 1e-9, "surface torsion {tau}");

        // planar u-curves have zero torsion
        let s = SurfacePatch::new(
            curve("circle", &[("r", 1.0)]),
            curve("helix", &[("a", 1.0), ("b", 1.0)]),
            &cfg,
        )
        .unwrap();
        let line = |u: f64| form_coefficients(&s, u, 0.7, &cfg);
        let tau = parametric_torsion_surface(line, 0.8, 1.0, 0.0, &cfg).unwrap();
        assert!(tau.abs() < 1e-6, "planar torsion {tau}");
    }

    #[test]
    fn torsion_rearrangement_residual() {
        // φ_uu = τL + (cosφ/sinφ)L² + (A′/A)φ_u on a K ≠ 0 patch
        let cfg = GeomConfig::default();
        let s = SurfacePatch::new(
            curve("helix", &[("a", 1.0), ("b", 1.0)]),
            curve("circle", &[("r", 1.0)]),
            &cfg,
        )
        .unwrap();
        let v0 = 1.1;
        let (a, a1) = (0.5, 0.0);
        for u in [0.4, 1.9] {
            let fc = form_coefficients(&s, u, v0, &cfg).unwrap();
            let k = gauss_curvature_forms(&fc);
            if k.abs() < 1e-3 {
                continue;
            }
            let line = |x: f64| form_coefficients(&s, x, v0, &cfg);
            let tau = parametric_torsion_surface(line, u, a, a1, &cfg).unwrap();
            let cot = fc.phi.cos() / fc.phi.sin();
            let resid = fc.phi_uu - tau * fc.l - cot * fc.l * fc.l - (a1 / a) * fc.phi_u;
            assert!(
                resid.abs() < 1e-5,
                "rearranged torsion relation residual {resid}"
            );
        }
    }

    #[test]
    fn regularity_violation_is_reported_with_location() {
        // two identical lines are everywhere parallel
        let s = SurfacePatch {
            alpha: curve("line", &[]),
            beta: curve("line", &[]),
            domain: ((-3.0, 3.0), (-3.0, 3.0)),
        };
        match form_coefficients(&s, 0.1, 0.2, &GeomConfig::default()) {
            Err(GeomError::RegularityViolation { u, v, .. }) => {
                assert_eq!((u, v), (0.1, 0.2));
            }
            other => panic!("expected regularity violation, got {other:?}"),
        }
    }
}
