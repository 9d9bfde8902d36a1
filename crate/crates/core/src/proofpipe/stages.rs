//! The elimination stages: differentiate the trig relation, eliminate
//! cot φ and sin2φ, square, and form the eliminant of the two quadratics.

use super::pqr::{Case, PqrTriple};
use crate::symring::{d_u_radfrac, CotPair, RadFrac, RatExpr, SymError, ZPoly};

/// The differentiated relation (P′−2Qφ_u)·sin2φ + (Q′+2Pφ_u)·cos2φ + R′ = 0,
/// each slot split into reg + cot·(cosφ/sinφ) parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedRelation {
    pub alpha: CotPair,
    pub beta: CotPair,
    pub gamma: CotPair,
}

/// b₂·cos²2φ + b₁·cos2φ + b₀ = 0 (and the same shape for the c-quadratic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigQuadratic {
    pub b2: RadFrac,
    pub b1: RadFrac,
    pub b0: RadFrac,
}

/// κ = b₂c₀−b₀c₂, λ = b₀c₁−b₁c₀, μ = b₁c₂−b₂c₁ and the eliminant κ²−λμ.
#[derive(Debug, Clone)]
pub struct EliminantParts {
    pub kappa: RadFrac,
    pub lambda: RadFrac,
    pub mu: RadFrac,
    pub value: RadFrac,
}

/// Differentiate the relation along u. In the planar case the torsion symbols
/// are substituted away afterwards, which coincides with running the
/// torsion-free rewrite throughout.
pub fn derive_relation(t: &PqrTriple, case: Case) -> Result<DerivedRelation, SymError> {
    let two_z = RadFrac::from_zpoly(ZPoly::term(RatExpr::int(2), 1));
    let dp = d_u_radfrac(&t.p)?;
    let dq = d_u_radfrac(&t.q)?;
    let dr = d_u_radfrac(&t.r)?;
    let rel = DerivedRelation {
        alpha: CotPair {
            reg: &dp.reg - &(&two_z * &t.q),
            cot: dp.cot,
        },
        beta: CotPair {
            reg: &dq.reg + &(&two_z * &t.p),
            cot: dq.cot,
        },
        gamma: dr,
    };
    Ok(match case {
        Case::General => rel,
        Case::Planar => DerivedRelation {
            alpha: rel.alpha.subs_tau_zero(),
            beta: rel.beta.subs_tau_zero(),
            gamma: rel.gamma.subs_tau_zero(),
        },
    })
}

/// Substitute cosφ/sinφ = sin2φ/(1−cos2φ) into the derived relation, multiply
/// by P and insert P·sin2φ = −Q·cos2φ − R. The result is the b-quadratic in
/// cos2φ. In the planar case the relation carries the factor −z (P itself is
/// −4(A′/A)·z there); it is divided out exactly, matching the published route
/// of multiplying by 4A′/A instead of P.
pub fn eliminate_trig(
    t: &PqrTriple,
    d: &DerivedRelation,
    case: Case,
) -> Result<TrigQuadratic, SymError> {
    let (p, q, r) = (&t.p, &t.q, &t.r);
    let (cot_a, reg_a) = (&d.alpha.cot, &d.alpha.reg);
    let (cot_b, reg_b) = (&d.beta.cot, &d.beta.reg);
    let (cot_g, reg_g) = (&d.gamma.cot, &d.gamma.reg);

    let b2 = &(-&(p * &(cot_a + reg_b))) - &(q * &(cot_b - reg_a));
    let b1 = &(&(p * &(reg_b - reg_g)) - &(q * &(reg_a + cot_g))) - &(r * &(cot_b - reg_a));
    let b0 = &(p * &(cot_a + reg_g)) - &(r * &(reg_a + cot_g));

    match case {
        Case::General => Ok(TrigQuadratic { b2, b1, b0 }),
        Case::Planar => {
            let div = |f: RadFrac| -> Result<RadFrac, SymError> {
                if !f.radical().is_zero() || f.x_power() != 0 {
                    return Err(SymError::NotDivisible(
                        "planar quadratic has a radical part".into(),
                        "s",
                    ));
                }
                Ok(RadFrac::from_zpoly(-&f.even().div_z_exact()?))
            };
            Ok(TrigQuadratic {
                b2: div(b2)?,
                b1: div(b1)?,
                b0: div(b0)?,
            })
        }
    }
}

/// Square the relation: (P²+Q²)·cos²2φ + 2QR·cos2φ + (R²−P²) = 0.
pub fn square_relation(t: &PqrTriple) -> TrigQuadratic {
    TrigQuadratic {
        b2: &(&t.p * &t.p) + &(&t.q * &t.q),
        b1: (&t.q * &t.r).scale(&RatExpr::int(2)),
        b0: &(&t.r * &t.r) - &(&t.p * &t.p),
    }
}

/// Resultant-style eliminant of the two quadratics sharing the root cos2φ.
pub fn eliminant(b: &TrigQuadratic, c: &TrigQuadratic) -> EliminantParts {
    let kappa = &(&b.b2 * &c.b0) - &(&b.b0 * &c.b2);
    let lambda = &(&b.b0 * &c.b1) - &(&b.b1 * &c.b0);
    let mu = &(&b.b1 * &c.b2) - &(&b.b2 * &c.b1);
    let value = &(&kappa * &kappa) - &(&lambda * &mu);
    EliminantParts {
        kappa,
        lambda,
        mu,
        value,
    }
}

/// Clear the radical by the even/odd square: (p + q·s) ↦ p² − q²·X, a pure
/// polynomial in z. The pipeline produces k = 0 here; anything else is a
/// shape error.
pub fn rationalize(f: &RadFrac) -> Result<ZPoly, SymError> {
    if f.x_power() != 0 {
        return Err(SymError::NotDivisible(
            "eliminant carries an X power".into(),
            "X^0",
        ));
    }
    let even = f.even();
    let rad = f.radical();
    Ok(&even.mul_fast(even) - &rad.mul_fast(rad).mul_fast(&ZPoly::x()))
}
