//! Frenet apparatus of unit-speed curves.

use super::vec3::{any_orthonormal, cross, dot, mixed, norm, scale, Vec3};
use super::{Curve, GeomConfig, GeomError};

/// Frenet frame with curvature and torsion at one parameter value.
///
/// The frame is orthonormal by construction; below the curvature floor the
/// normal and binormal are an arbitrary orthonormal completion of the tangent
/// and the torsion is absent.
#[derive(Debug, Clone, Copy)]
pub struct FrenetData {
    pub tangent: Vec3,
    pub normal: Vec3,
    pub binormal: Vec3,
    pub curvature: f64,
    pub torsion: Option<f64>,
}

/// Frenet data of a unit-speed curve: k = |α″|, frame t, n = α″/k, b = t × n,
/// torsion by the mixed-product formula (α′, α″, α‴)/|α′ × α″|².
pub fn frenet(c: &Curve, s: f64, cfg: &GeomConfig) -> Result<FrenetData, GeomError> {
    let jets = c.jets(s, 3)?;
    let d1: Vec3 = [
        jets[0].partial(1, 0),
        jets[1].partial(1, 0),
        jets[2].partial(1, 0),
    ];
    let d2: Vec3 = [
        jets[0].partial(2, 0),
        jets[1].partial(2, 0),
        jets[2].partial(2, 0),
    ];
    let d3: Vec3 = [
        jets[0].partial(3, 0),
        jets[1].partial(3, 0),
        jets[2].partial(3, 0),
    ];
    let k = norm(d2);
    let tangent = d1;
    if k < cfg.curvature_floor {
        let normal = any_orthonormal(tangent);
        let binormal = cross(tangent, normal);
        return Ok(FrenetData {
            tangent,
            normal,
            binormal,
            curvature: k,
            torsion: None,
        });
    }
    let normal = scale(d2, 1.0 / k);
    let binormal = cross(tangent, normal);
    let cr = cross(d1, d2);
    let torsion = mixed(d1, d2, d3) / dot(cr, cr);
    Ok(FrenetData {
        tangent,
        normal,
        binormal,
        curvature: k,
        torsion: Some(torsion),
    })
}

/// Torsion, failing with a zero-curvature error where the frame degenerates.
pub fn torsion(c: &Curve, s: f64, cfg: &GeomConfig) -> Result<f64, GeomError> {
    frenet(c, s, cfg)?
        .torsion
        .ok_or(GeomError::ZeroCurvature { s })
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
    fn unit_speed_circle_has_k_equals_one_over_r_and_no_twist() {
        let c = curve("circle", &[("r", 2.0)]);
        let f = frenet(&c, 1.3, &GeomConfig::default()).unwrap();
        assert!((f.curvature - 0.5).abs() < 1e-12);
        assert!(f.torsion.unwrap().abs() < 1e-12);
    }

    #[test]
    fn helix_curvature_and_torsion_closed_form() {
        // unit-speed helix (a cos, a sin, b·): k = a/(a²+b²), τ = b/(a²+b²)
        let (a, b) = (1.0, 1.0);
        let c = curve("helix", &[("a", a), ("b", b)]);
        let f = frenet(&c, 2.1, &GeomConfig::default()).unwrap();
        let denom = a * a + b * b;
        assert!((f.curvature - a / denom).abs() < 1e-12);
        assert!((f.torsion.unwrap() - b / denom).abs() < 1e-12);

        let c = curve("helix", &[("a", 2.0), ("b", 0.5)]);
        let f = frenet(&c, 0.4, &GeomConfig::default()).unwrap();
        assert!((f.curvature - 2.0 / 4.25).abs() < 1e-12);
        assert!((f.torsion.unwrap() - 0.5 / 4.25).abs() < 1e-12);
    }

    #[test]
    fn straight_line_refuses_torsion() {
        let c = curve("line", &[]);
        assert!(matches!(
            torsion(&c, 0.2, &GeomConfig::default()),
            Err(GeomError::ZeroCurvature { .. })
        ));
        // but the frame is still a usable orthonormal triple
        let f = frenet(&c, 0.2, &GeomConfig::default()).unwrap();
        assert!(dot(f.tangent, f.normal).abs() < 1e-12);
        assert!((norm(f.binormal) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn frame_is_orthonormal_within_1e9() {
        let c = curve("helix", &[("a", 1.3), ("b", 0.7)]);
        for i in 0..8 {
            let s = 0.3 + i as f64;
            let f = frenet(&c, s, &GeomConfig::default()).unwrap();
            assert!((norm(f.tangent) - 1.0).abs() < 1e-9);
            assert!((norm(f.normal) - 1.0).abs() < 1e-9);
            assert!(dot(f.tangent, f.normal).abs() < 1e-9);
            assert!(dot(f.tangent, f.binormal).abs() < 1e-9);
            assert!(dot(f.normal, f.binormal).abs() < 1e-9);
        }
    }
}
