//! The derivation d/du on the coefficient field and on the radical layer.
//!
//! On generators: A → A′ → A″ → A‴ and τ → τ′ → τ″; one more derivative is a
//! `GeneratorOverflow` error (the pipelines never need it). On the radical
//! layer the rewrite rules of the torsion relation apply:
//!
//! ```text
//! d(z) = τ·s + (A′/A)·z + cot·X
//! d(s) = (A′/A)·s − τ·z − cot·z·s
//! d(X) = 2AA′ − 2(A′/A)z² − 2τ·z·s − cot·2Xz
//! ```

use super::poly::{Gen, Mono, Poly, GENS};
use super::{CotPair, RadFrac, RatExpr, SymError, ZPoly};
use num_rational::BigRational;

fn d_gen(g: Gen) -> Result<Gen, SymError> {
    match g {
        Gen::A => Ok(Gen::A1),
        Gen::A1 => Ok(Gen::A2),
        Gen::A2 => Ok(Gen::A3),
        Gen::A3 => Err(SymError::GeneratorOverflow("A3")),
        Gen::T => Ok(Gen::T1),
        Gen::T1 => Ok(Gen::T2),
        Gen::T2 => Err(SymError::GeneratorOverflow("T2")),
    }
}

/// Derivative of a coefficient polynomial (formal, term by term).
pub fn d_poly(p: &Poly) -> Result<Poly, SymError> {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        for g in GENS {
            let e = m.exp(g);
            if e == 0 {
                continue;
            }
            let dg = d_gen(g)?;
            let mut exps = m.exps();
            exps[g.index()] -= 1;
            exps[dg.index()] += 1;
            out.add_term(
                Mono::from_exps(exps),
                c * &BigRational::from_integer(e.into()),
            );
        }
    }
    Ok(out)
}

/// Quotient rule on fractions of coefficient polynomials.
pub fn d_ratexpr(x: &RatExpr) -> Result<RatExpr, SymError> {
    let dn = d_poly(x.num())?;
    let dd = d_poly(x.den())?;
    RatExpr::new(&(&dn * x.den()) - &(x.num() * &dd), x.den() * x.den())
}

fn aoa() -> RatExpr {
    RatExpr::gen(Gen::A1)
        .div(&RatExpr::gen(Gen::A))
        .expect("A is nonzero")
}

/// d(z) as a cot pair: reg = τ·s + (A′/A)z, cot = X.
fn dz() -> CotPair {
    CotPair {
        reg: RadFrac::from_parts(
            ZPoly::term(aoa(), 1),
            ZPoly::constant(RatExpr::gen(Gen::T)),
            0,
        ),
        cot: RadFrac::from_zpoly(ZPoly::x()),
    }
}

/// d(s) as a cot pair: reg = (A′/A)s − τz, cot = −z·s.
fn ds() -> CotPair {
    CotPair {
        reg: RadFrac::from_parts(
            ZPoly::term(-&RatExpr::gen(Gen::T), 1),
            ZPoly::constant(aoa()),
            0,
        ),
        cot: RadFrac::from_parts(ZPoly::zero(), ZPoly::term(-&RatExpr::one(), 1), 0),
    }
}

/// d(X) = 2AA′ − 2(A′/A)z² − 2τzs + cot·(−2Xz).
fn dx() -> CotPair {
    let two_aa1 = &(&RatExpr::int(2) * &RatExpr::gen(Gen::A)) * &RatExpr::gen(Gen::A1);
    CotPair {
        reg: RadFrac::from_parts(
            &ZPoly::constant(two_aa1) - &ZPoly::term(&RatExpr::int(2) * &aoa(), 2),
            ZPoly::term(&RatExpr::int(-2) * &RatExpr::gen(Gen::T), 1),
            0,
        ),
        cot: RadFrac::from_zpoly(&ZPoly::term(RatExpr::int(-2), 1) * &ZPoly::x()),
    }
}

/// Derivative of a polynomial in z: coefficient derivatives plus the chain
/// rule through d(z).
pub fn d_u_zpoly(f: &ZPoly) -> Result<CotPair, SymError> {
    let mut coeff_part = ZPoly::zero();
    let mut fz = ZPoly::zero(); // ∂f/∂z
    for (k, c) in f.coeffs() {
        coeff_part.add_term(*k, d_ratexpr(c)?);
        if *k > 0 {
            fz.add_term(k - 1, &RatExpr::int(*k as i64) * c);
        }
    }
    let fz = RadFrac::from_zpoly(fz);
    let mut out = dz().scale_radfrac(&fz);
    out.reg = &out.reg + &RadFrac::from_zpoly(coeff_part);
    Ok(out)
}

/// Derivative of (p + q·s)/X^k by Leibniz and the quotient rule.
pub fn d_u_radfrac(f: &RadFrac) -> Result<CotPair, SymError> {
    let dp = d_u_zpoly(f.even())?;
    let dq = d_u_zpoly(f.radical())?;
    let q = RadFrac::from_zpoly(f.radical().clone());
    // d(p + q s) = dp + dq·s + q·d(s)
    let mut dnum = &(&dp + &dq.mul_s()) + &ds().scale_radfrac(&q);
    let k = f.x_power();
    if k == 0 {
        return Ok(dnum);
    }
    // d(F/X^k) = dF/X^k − k·F·dX/X^{k+1}
    let x_k = RadFrac::from_parts(ZPoly::one(), ZPoly::zero(), k);
    dnum = dnum.scale_radfrac(&x_k);
    let front = RadFrac::from_parts(f.even().clone(), f.radical().clone(), k + 1)
        .scale(&RatExpr::int(-(k as i64)));
    Ok(&dnum + &dx().scale_radfrac(&front))
}
