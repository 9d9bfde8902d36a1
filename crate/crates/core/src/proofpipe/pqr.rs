//! Construction of the trigonometric relation P·sin2φ + Q·cos2φ + R = 0 for
//! the two elimination cases.

use crate::symring::consts::{a_ratio, sigma};
use crate::symring::{Gen, RadFrac, RatExpr, SymError, ZPoly};

/// Which elimination is being replayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// Both generating curves non-planar (torsion carried formally).
    General,
    /// The u-curves are planar: torsion ≡ 0 and no radical part.
    Planar,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::General => "general",
            Case::Planar => "planar",
        }
    }
}

/// The relation P·sin2φ + Q·cos2φ + R = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqrTriple {
    pub p: RadFrac,
    pub q: RadFrac,
    pub r: RadFrac,
}

fn re(n: i64, d: i64) -> RatExpr {
    RatExpr::rational(n, d)
}

fn gen(g: Gen) -> RatExpr {
    RatExpr::gen(g)
}

/// General case. Derived by differentiating the φ_v relation along u with the
/// torsion rewrite for φ_uu and the curvature identity for φ_uv, then
/// converting to the double angle 2φ. The double-angle conversion keeps the
/// τ²·X·sin²φ contribution:
///
/// ```text
/// P = (2τA² + 4τz²)·s − 4AA′z + (4A′/A)z³
/// Q = (2τA′/A − τ′/2)z·s + (3/2)A⁴ − ΣA²/2 − τ²A²/2
///       + ((9/2)A² − τ² + Σ/2)z² − 6z⁴
/// R = −(2τA′/A − τ′/2)z·s + (5/2)A⁴ + ΣA²/2 + τ²A²/2
///       + (−A²/2 + τ² − Σ/2)z² − 2z⁴
/// ```
pub fn build_pqr_general() -> PqrTriple {
    let a = gen(Gen::A);
    let a1 = gen(Gen::A1);
    let t = gen(Gen::T);
    let t1 = gen(Gen::T1);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let t2 = &t * &t;
    let sig = sigma();

    let p_rad = ZPoly::from_coeffs(vec![(0, &re(2, 1) * &(&t * &a2)), (2, &re(4, 1) * &t)]);
    let p_even = ZPoly::from_coeffs(vec![
        (1, &re(-4, 1) * &(&a * &a1)),
        (3, &re(4, 1) * &a_ratio()),
    ]);

    let q1_coeff = &(&re(2, 1) * &(&t * &a_ratio())) - &(&re(1, 2) * &t1);
    let q_rad = ZPoly::term(q1_coeff.clone(), 1);
    let q_even = ZPoly::from_coeffs(vec![
        (
            0,
            &(&(&re(3, 2) * &a4) - &(&re(1, 2) * &(&sig * &a2))) - &(&re(1, 2) * &(&t2 * &a2)),
        ),
        (2, &(&(&re(9, 2) * &a2) - &t2) + &(&re(1, 2) * &sig)),
        (4, re(-6, 1)),
    ]);

    let r_rad = ZPoly::term(-&q1_coeff, 1);
    let r_even = ZPoly::from_coeffs(vec![
        (
            0,
            &(&(&re(5, 2) * &a4) + &(&re(1, 2) * &(&sig * &a2))) + &(&re(1, 2) * &(&t2 * &a2)),
        ),
        (2, &(&(&re(-1, 2) * &a2) + &t2) - &(&re(1, 2) * &sig)),
        (4, re(-2, 1)),
    ]);

    PqrTriple {
        p: RadFrac::from_parts(p_even, p_rad, 0),
        q: RadFrac::from_parts(q_even, q_rad, 0),
        r: RadFrac::from_parts(r_even, r_rad, 0),
    }
}

/// Planar case (τ ≡ 0, no radical):
///
/// ```text
/// P = −4(A′/A)z
/// Q = (3/2)X + (15/2)z² − Σ/2
/// R = (5/2)X + (9/2)z² + Σ/2
/// ```
pub fn build_pqr_planar() -> PqrTriple {
    let sig = sigma();
    let p = ZPoly::term(&re(-4, 1) * &a_ratio(), 1);
    let q = &ZPoly::x().scale(&re(3, 2))
        + &(&ZPoly::term(re(15, 2), 2) - &ZPoly::constant(&re(1, 2) * &sig));
    let r = &ZPoly::x().scale(&re(5, 2))
        + &(&ZPoly::term(re(9, 2), 2) + &ZPoly::constant(&re(1, 2) * &sig));
    PqrTriple {
        p: RadFrac::from_zpoly(p),
        q: RadFrac::from_zpoly(q),
        r: RadFrac::from_zpoly(r),
    }
}

/// Specialize the general triple to τ ≡ 0 and divide the common factor X out,
/// which lands exactly on the planar triple. Exposed for the specialization
/// consistency check.
pub fn specialize_general_to_planar(t: &PqrTriple) -> Result<PqrTriple, SymError> {
    let strip = |f: &RadFrac| -> Result<RadFrac, SymError> {
        let g = f.subs_tau_zero();
        if !g.radical().is_zero() {
            return Err(SymError::NotDivisible(
                "radical part survives tau = 0".into(),
                "s",
            ));
        }
        Ok(RadFrac::from_zpoly(g.even().div_x_exact()?))
    };
    Ok(PqrTriple {
        p: strip(&t.p)?,
        q: strip(&t.q)?,
        r: strip(&t.r)?,
    })
}
