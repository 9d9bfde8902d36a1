//! Property suites: ring axioms and the Leibniz rule on randomized radical
//! fractions (exact equality), numeric shadows of exact identities, and exact
//! jets on a rational polynomial corpus.

use num_rational::BigRational;
use proptest::prelude::*;
use transurf::exprlang::{self, Var};
use transurf::symring::{d_u_radfrac, CotPair, Gen, GenValues, Poly, RadFrac, RatExpr, ZPoly};

fn shadow_vals() -> GenValues {
    GenValues {
        a: 1.3,
        a1: 0.7,
        a2: -0.4,
        a3: 0.9,
        t: 0.6,
        t1: -1.1,
        t2: 0.8,
    }
}

const SHADOW_Z: f64 = 0.7;

fn shadow_s(vals: &GenValues) -> f64 {
    (vals.a * vals.a - SHADOW_Z * SHADOW_Z).sqrt()
}

/// Generators kept one derivative below the order bound so Leibniz tests can
/// differentiate freely.
fn arb_gen() -> impl Strategy<Value = Gen> {
    prop_oneof![
        Just(Gen::A),
        Just(Gen::A1),
        Just(Gen::A2),
        Just(Gen::T),
        Just(Gen::T1),
    ]
}

fn arb_ratexpr() -> impl Strategy<Value = RatExpr> {
    // up to three small monomial terms over a denominator A^k
    let term = (arb_gen(), 1u8..=2, -4i64..=4);
    (proptest::collection::vec(term, 1..=3), 0u32..=2).prop_map(|(terms, apow)| {
        let mut num = Poly::zero();
        for (g, e, c) in terms {
            if c == 0 {
                continue;
            }
            let mut p = Poly::int(c);
            for _ in 0..e {
                p = &p * &Poly::gen(g);
            }
            num = &num + &p;
        }
        let mut den = Poly::one();
        for _ in 0..apow {
            den = &den * &Poly::gen(Gen::A);
        }
        RatExpr::new(num, den).unwrap()
    })
}

fn arb_zpoly() -> impl Strategy<Value = ZPoly> {
    proptest::collection::vec((0u32..=3, arb_ratexpr()), 1..=2).prop_map(ZPoly::from_coeffs)
}

fn arb_radfrac() -> impl Strategy<Value = RadFrac> {
    (arb_zpoly(), arb_zpoly(), 0u32..=2).prop_map(|(p, q, k)| RadFrac::from_parts(p, q, k))
}

fn assert_shadow_zero(x: &RadFrac) {
    let vals = shadow_vals();
    let v = x.eval_f64(&vals, SHADOW_Z, shadow_s(&vals));
    assert!(
        v.abs() < 1e-10,
        "numeric shadow of a symbolically-zero value: {v}"
    );
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, .. ProptestConfig::default() })]

    #[test]
    fn radfrac_addition_is_associative_and_commutative(
        a in arb_radfrac(), b in arb_radfrac(), c in arb_radfrac()
    ) {
        let l = &(&a + &b) + &c;
        let r = &a + &(&b + &c);
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(&(&a + &b), &(&b + &a));
        assert_shadow_zero(&(&l - &r));
    }

    #[test]
    fn radfrac_multiplication_is_commutative_and_associative(
        a in arb_radfrac(), b in arb_radfrac(), c in arb_radfrac()
    ) {
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        let l = &(&a * &b) * &c;
        let r = &a * &(&b * &c);
        prop_assert_eq!(&l, &r);
        assert_shadow_zero(&(&l - &r));
    }

    #[test]
    fn radfrac_multiplication_distributes(
        a in arb_radfrac(), b in arb_radfrac(), c in arb_radfrac()
    ) {
        let l = &a * &(&b + &c);
        let r = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(&l, &r);
        assert_shadow_zero(&(&l - &r));
    }

    #[test]
    fn normal_form_is_idempotent(a in arb_radfrac()) {
        let renorm = RadFrac::from_parts(a.even().clone(), a.radical().clone(), a.x_power());
        prop_assert_eq!(&a, &renorm);
        prop_assert_eq!(a.even(), renorm.even());
        prop_assert_eq!(a.radical(), renorm.radical());
        prop_assert_eq!(a.x_power(), renorm.x_power());
    }

    #[test]
    fn leibniz_rule_on_the_radical_layer(a in arb_radfrac(), b in arb_radfrac()) {
        let prod = &a * &b;
        let d_prod = d_u_radfrac(&prod).unwrap();
        let da = d_u_radfrac(&a).unwrap();
        let db = d_u_radfrac(&b).unwrap();
        let want = &da.scale_radfrac(&b) + &db.scale_radfrac(&a);
        prop_assert_eq!(&d_prod, &want);
        // the cot-carrying pair also shadows numerically
        let diff = &d_prod - &want;
        let vals = shadow_vals();
        let v = diff.eval_f64(&vals, SHADOW_Z, shadow_s(&vals), 0.9);
        prop_assert!(v.abs() < 1e-10);
    }

    #[test]
    fn tau_substitution_commutes_with_arithmetic(a in arb_radfrac(), b in arb_radfrac()) {
        let l = (&a * &b).subs_tau_zero();
        let r = &a.subs_tau_zero() * &b.subs_tau_zero();
        prop_assert_eq!(l, r);
    }
}

/// All domain values are immutable and freely shareable across threads, as
/// the concurrency contracts state.
#[test]
fn value_types_are_send_and_sync() {
    fn ok<T: Send + Sync>() {}
    ok::<transurf::exprlang::Expr>();
    ok::<transurf::exprlang::Jet>();
    ok::<RatExpr>();
    ok::<ZPoly>();
    ok::<RadFrac>();
    ok::<CotPair>();
    ok::<transurf::geomcore::Curve>();
    ok::<transurf::geomcore::SurfacePatch>();
    ok::<transurf::geomcore::FormCoefficients>();
    ok::<transurf::proofpipe::Ledger>();
}

/// CotPair equality used by the Leibniz test above relies on RadFrac equality;
/// pin the bilinearity of the cot part explicitly on one structured case.
#[test]
fn cot_part_bilinearity_pinned() {
    let z = RadFrac::from_zpoly(ZPoly::z());
    let s = RadFrac::s();
    let d_zs = d_u_radfrac(&(&z * &s)).unwrap();
    let dz = d_u_radfrac(&z).unwrap();
    let ds = d_u_radfrac(&s).unwrap();
    let want = &dz.scale_radfrac(&s) + &ds.scale_radfrac(&z);
    assert_eq!(d_zs, want);
    assert!(!d_zs.cot.is_zero());
}

#[test]
fn derivation_is_linear() {
    let x = RadFrac::from_parts(ZPoly::z(), ZPoly::one(), 1);
    let y = RadFrac::from_zpoly(ZPoly::x());
    let l = d_u_radfrac(&(&x + &y)).unwrap();
    let r = &d_u_radfrac(&x).unwrap() + &d_u_radfrac(&y).unwrap();
    assert_eq!(l, r);
    let _ = CotPair::zero();
}

// ---- print/parse round-trip on random expression trees ----

fn arb_expr() -> impl Strategy<Value = String> {
    // build random source text recursively; the parser defines the tree
    let leaf = prop_oneof![
        Just("u".to_string()),
        Just("v".to_string()),
        Just("pi".to_string()),
        (1i64..=9).prop_map(|n| n.to_string()),
        (1i64..=9, 1u32..=2).prop_map(|(n, d)| format!("{n}.{d}")),
    ];
    leaf.prop_recursive(4, 64, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) + ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) - ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) * ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) / (4 + ({b})^2)")),
            inner.clone().prop_map(|a| format!("-({a})")),
            (inner.clone(), 1i32..=3).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.clone().prop_map(|a| format!("sin({a})")),
            inner.clone().prop_map(|a| format!("cos({a})")),
            inner.clone().prop_map(|a| format!("exp(({a})/8)")),
            inner.prop_map(|a| format!("atan({a})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, .. ProptestConfig::default() })]

    /// parse(print(e)) evaluates identically to e (bit-for-bit: printing
    /// preserves the tree shape, so the evaluation order is unchanged).
    #[test]
    fn print_parse_roundtrip_random_trees(src in arb_expr()) {
        let Ok(e) = exprlang::parse(&src) else { return Ok(()) };
        let printed = e.to_string();
        let e2 = exprlang::parse(&printed)
            .unwrap_or_else(|err| panic!("reparse of {printed:?}: {err}"));
        for &(u, v) in &[(0.3, 0.7), (-1.1, 0.4), (2.0, -0.9)] {
            let a = exprlang::eval(&e, &[(Var::U, u), (Var::V, v)]);
            let b = exprlang::eval(&e2, &[(Var::U, u), (Var::V, v)]);
            match (a, b) {
                (Ok(x), Ok(y)) => prop_assert!(
                    x == y || (x.is_nan() && y.is_nan()),
                    "{src} vs {printed}: {x} != {y}"
                ),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "divergent domain outcome: {a:?} vs {b:?}"),
            }
        }
    }
}

// ---- exact jets on a rational polynomial corpus ----

#[derive(Debug, Clone)]
struct RatPoly {
    // coefficients[i][j] multiplies u^i v^j
    coeffs: Vec<Vec<i64>>,
}

impl RatPoly {
    fn to_source(&self) -> String {
        let mut terms = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut t = format!("{c}");
                if i > 0 {
                    t.push_str(&format!("*u^{i}"));
                }
                if j > 0 {
                    t.push_str(&format!("*v^{j}"));
                }
                terms.push(t);
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Exact partial ∂u^p ∂v^q at a dyadic point, in rational arithmetic.
    fn partial_exact(&self, p: u32, q: u32, u: &BigRational, v: &BigRational) -> BigRational {
        let mut acc = BigRational::from_integer(0.into());
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                let (i, j) = (i as u32, j as u32);
                if i < p || j < q || c == 0 {
                    continue;
                }
                let mut factor = BigRational::from_integer(c.into());
                for k in 0..p {
                    factor *= BigRational::from_integer((i - k).into());
                }
                for k in 0..q {
                    factor *= BigRational::from_integer((j - k).into());
                }
                let mut term = factor;
                for _ in 0..(i - p) {
                    term *= u;
                }
                for _ in 0..(j - q) {
                    term *= v;
                }
                acc += term;
            }
        }
        acc
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap();
    let d: f64 = r.denom().to_string().parse().unwrap();
    n / d
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, .. ProptestConfig::default() })]

    /// Degree ≤ 4 polynomials with small integer coefficients at dyadic
    /// points: every jet partial equals the rationally-expanded derivative
    /// exactly (all f64 intermediates are exact dyadics well inside 2^53).
    #[test]
    fn polynomial_jets_are_exact(
        coeffs in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 3),
        un in -4i64..=4, vn in -4i64..=4,
    ) {
        let p = RatPoly { coeffs };
        let src = p.to_source();
        let expr = exprlang::parse(&src).unwrap();
        let u = BigRational::new(un.into(), 2.into());
        let v = BigRational::new(vn.into(), 2.into());
        let uf = rational_to_f64(&u);
        let vf = rational_to_f64(&v);
        let jet = exprlang::eval_jet(&expr, &[(Var::U, uf), (Var::V, vf)], 3).unwrap();
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                if i + j > 3 {
                    continue;
                }
                let want = rational_to_f64(&p.partial_exact(i, j, &u, &v));
                let got = jet.partial(i as u8, j as u8);
                prop_assert_eq!(got, want, "partial ({}, {}) of {}", i, j, src);
            }
        }
    }
}
