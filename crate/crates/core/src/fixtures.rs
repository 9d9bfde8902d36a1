//! Built-in curve fixtures and the curve JSON schema.

use serde::{Deserialize, Serialize};

/// On-disk curve description.
///
/// Analytic curves give the three components as expressions in `t`; sampled
/// curves give ordered `(t, x, y, z)` rows. `arclength` declares that the
/// parametrization is unit speed.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CurveJson {
    Analytic {
        x: String,
        y: String,
        z: String,
        domain: [f64; 2],
        #[serde(default)]
        arclength: bool,
    },
    Samples {
        points: Vec<[f64; 4]>,
        #[serde(default)]
        arclength: bool,
    },
}

/// Parameters for a named fixture.
pub type Params = std::collections::BTreeMap<String, f64>;

fn get(params: &Params, key: &str, default: f64) -> f64 {
    params.get(key).copied().unwrap_or(default)
}

/// Produce a named fixture. Known names: `line`, `circle` (r), `helix` (a, b),
/// `fourier` (a1, b2), `scherk-slice`.
pub fn fixture(name: &str, params: &Params) -> Option<CurveJson> {
    match name {
        "line" => Some(CurveJson::Analytic {
            x: "0".into(),
            y: "0".into(),
            z: "t".into(),
            domain: [-3.0, 3.0],
            arclength: true,
        }),
        "circle" => {
            let r = get(params, "r", 1.0);
            if r <= 0.0 {
                return None;
            }
            // unit-speed circle of radius r in the xy-plane
            Some(CurveJson::Analytic {
                x: format!("{r}*cos(t/{r})"),
                y: format!("{r}*sin(t/{r})"),
                z: "0".into(),
                domain: [0.0, 2.0 * std::f64::consts::PI * r],
                arclength: true,
            })
        }
        "helix" => {
            let a = get(params, "a", 1.0);
            let b = get(params, "b", 1.0);
            if a <= 0.0 {
                return None;
            }
            let c = a.hypot(b);
            Some(CurveJson::Analytic {
                x: format!("{a}*cos(t/{c})"),
                y: format!("{a}*sin(t/{c})"),
                z: format!("{b}*t/{c}"),
                domain: [0.0, 2.0 * std::f64::consts::PI * c],
                arclength: true,
            })
        }
        "fourier" => {
            // low-frequency plane-ish wave, not unit speed
            let a1 = get(params, "a1", 0.3);
            let b2 = get(params, "b2", 0.1);
            Some(CurveJson::Analytic {
                x: "t".into(),
                y: format!("{a1}*sin(t)"),
                z: format!("{b2}*cos(2*t)"),
                domain: [0.0, 6.0],
                arclength: false,
            })
        }
        "scherk-slice" => Some(CurveJson::Analytic {
            x: "t".into(),
            y: "0".into(),
            z: "log(cos(t))".into(),
            domain: [-1.3, 1.3],
            arclength: false,
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_fixtures_serialize_to_the_schema() {
        let c = fixture("circle", &Params::from([("r".to_string(), 1.0)])).unwrap();
        let j = serde_json::to_value(&c).unwrap();
        assert_eq!(j["kind"], "analytic");
        assert_eq!(j["domain"][0], 0.0);
        assert!(fixture("klein-bottle", &Params::new()).is_none());
    }
}
