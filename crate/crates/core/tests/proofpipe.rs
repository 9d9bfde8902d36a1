//! Integration tests for the elimination pipelines: frozen ledger constants,
//! numeric shadows of every transformation stage, the planar specialization,
//! and the eliminant-soundness property.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transurf::proofpipe::runner::{
    planar_z14_expected_factor, s1_expected_factor, s2_expected_factor,
};
use transurf::proofpipe::{
    build_pqr_general, build_pqr_planar, derive_relation, eliminant, eliminate_trig, rationalize,
    run_general_case, run_planar_case, specialize_general_to_planar, square_relation, Case, Status,
};
use transurf::symring::{parse_ratexpr, GenValues, RadFrac};

#[test]
fn general_ledger_reproduces_the_stated_table() {
    let run = run_general_case().unwrap();
    assert!(run.verified);
    assert!(run.ledger.mismatches().is_empty());
    let must_match = [
        "b216",
        "b229",
        "b227",
        "b116",
        "b129",
        "b016",
        "b029",
        "b027",
        "c215",
        "c228",
        "c226",
        "c115",
        "c128",
        "c126",
        "c015",
        "c028",
        "c026",
        "kappa114",
        "kappa215",
        "kappa217",
        "lambda114",
        "lambda217",
        "mu114",
        "mu217",
        "E34",
        "w68",
        "w66",
        "w64_minus_S1sq_minus_S2sq",
    ];
    for name in must_match {
        let e = run
            .ledger
            .entry(name)
            .unwrap_or_else(|| panic!("missing entry {name}"));
        assert_eq!(
            e.status,
            Status::Match,
            "{name}: {:?} vs {:?}",
            e.symbolic,
            e.paper_value
        );
    }
    // the documented print slips stay visible
    for name in ["Q20", "Q22", "R20", "R22", "b127", "lambda215", "mu215"] {
        let e = run.ledger.entry(name).unwrap();
        assert_eq!(e.status, Status::MismatchPrint, "{name}");
    }
}

#[test]
fn general_conclusions_freeze_the_reduction_constants() {
    let run = run_general_case().unwrap();
    let text = run.ledger.conclusions.join("\n");
    // the grouped integers are hand-checkable from the stated κ/λ/μ values
    assert!(text.contains("S1 = 4718592*(tau^2 - (A'/A)^2)"), "{text}");
    assert!(text.contains("S2 = 9437184*tau*A'/A"), "{text}");
    // and exactly, through the canonical serialization round-trip
    let s1 = parse_ratexpr(&run.ledger.entry("S1").unwrap().symbolic).unwrap();
    let target1 = parse_ratexpr("T^2 - (A1/A)^2").unwrap();
    assert_eq!(s1.constant_ratio(&target1), Some(s1_expected_factor()));
    let s2 = parse_ratexpr(&run.ledger.entry("S2").unwrap().symbolic).unwrap();
    let target2 = parse_ratexpr("T*A1/A").unwrap();
    assert_eq!(s2.constant_ratio(&target2), Some(s2_expected_factor()));
    assert!(text.contains("tau^2 = (A'/A)^2"));
    assert!(text.contains("tau*A'/A = 0"));
    assert!(text.contains("tau = 0 contradiction: proven"));
    // degree bookkeeping is empirical: top surviving degree is 64
    assert_eq!(run.final_polynomial.degree(), Some(64));
}

#[test]
fn planar_ledger_and_final_polynomial() {
    let run = run_planar_case().unwrap();
    assert!(run.verified);
    for (name, expect) in [
        ("kappa8", Status::Match),
        ("kappa6", Status::Match),
        ("lambda8", Status::Match),
        ("lambda6", Status::Match),
        ("mu8", Status::Match),
        ("mu6", Status::Match),
        ("w16", Status::Match),
        ("w14", Status::MatchScaled),
        ("b2_2", Status::Match),
        ("b1_4", Status::Match),
        ("b0_2", Status::Match),
        ("c2_2", Status::Match),
    ] {
        let e = run
            .ledger
            .entry(name)
            .unwrap_or_else(|| panic!("missing entry {name}"));
        assert_eq!(
            e.status, expect,
            "{name}: {} vs {:?}",
            e.symbolic, e.paper_value
        );
    }
    // the stated −14 is matched up to the recorded scale, not suppressed
    let w14 = run.ledger.entry("w14").unwrap();
    assert_eq!(w14.scale.as_deref(), Some("2359296/7"));
    let z14 = parse_ratexpr(&w14.symbolic).unwrap();
    let target = parse_ratexpr("(A1/A)^2").unwrap();
    assert_eq!(
        z14.constant_ratio(&target),
        Some(planar_z14_expected_factor())
    );
    // and the two known print slips are reported
    assert_eq!(run.ledger.noted_print_slips(), 2);
    assert_eq!(run.final_polynomial.degree(), Some(14));
}

#[test]
fn planar_matches_the_tau_zero_specialization_entry_for_entry() {
    let general = build_pqr_general();
    let specialized = specialize_general_to_planar(&general).unwrap();
    let planar = build_pqr_planar();
    assert_eq!(specialized, planar);

    // the downstream stages agree entry for entry on the common triple
    let d_spec = derive_relation(&specialized, Case::Planar).unwrap();
    let d_plan = derive_relation(&planar, Case::Planar).unwrap();
    assert_eq!(d_spec, d_plan);
    let b_spec = eliminate_trig(&specialized, &d_spec, Case::Planar).unwrap();
    let b_plan = eliminate_trig(&planar, &d_plan, Case::Planar).unwrap();
    assert_eq!(b_spec.b2, b_plan.b2);
    assert_eq!(b_spec.b1, b_plan.b1);
    assert_eq!(b_spec.b0, b_plan.b0);
    let c_spec = square_relation(&specialized);
    let c_plan = square_relation(&planar);
    assert_eq!(c_spec.b2, c_plan.b2);
    assert_eq!(c_spec.b1, c_plan.b1);
    assert_eq!(c_spec.b0, c_plan.b0);
}

#[test]
fn planar_derivation_equals_general_derivation_with_tau_killed() {
    let t = build_pqr_planar();
    let with_tau = derive_relation(&t, Case::General).unwrap();
    let killed = derive_relation(&t, Case::Planar).unwrap();
    assert_eq!(with_tau.alpha.subs_tau_zero(), killed.alpha);
    assert_eq!(with_tau.beta.subs_tau_zero(), killed.beta);
    assert_eq!(with_tau.gamma.subs_tau_zero(), killed.gamma);
}

// ---- numeric shadows of the symbolic transformations ----

struct ShadowPoint {
    vals: GenValues,
    z: f64,
    s: f64,
    ct: f64,
    sin2: f64,
    cos2: f64,
}

fn random_point(rng: &mut ChaCha8Rng) -> ShadowPoint {
    let a: f64 = rng.gen_range(1.1..2.0);
    let z: f64 = rng.gen_range(-0.9..0.9);
    let vals = GenValues {
        a,
        a1: rng.gen_range(-1.0..1.0),
        a2: rng.gen_range(-1.0..1.0),
        a3: rng.gen_range(-1.0..1.0),
        t: rng.gen_range(-1.0..1.0),
        t1: rng.gen_range(-1.0..1.0),
        t2: rng.gen_range(-1.0..1.0),
    };
    let s = (a * a - z * z).sqrt() * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let ct: f64 = rng.gen_range(0.2..2.0);
    // the angle with cot φ = ct: sin2φ = 2ct/(1+ct²), cos2φ = (ct²−1)/(1+ct²)
    let sin2 = 2.0 * ct / (1.0 + ct * ct);
    let cos2 = (ct * ct - 1.0) / (1.0 + ct * ct);
    ShadowPoint {
        vals,
        z,
        s,
        ct,
        sin2,
        cos2,
    }
}

fn ev(f: &RadFrac, p: &ShadowPoint) -> f64 {
    f.eval_f64(&p.vals, p.z, p.s)
}

#[test]
fn numeric_shadow_of_each_pipeline_stage() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for case in [Case::General, Case::Planar] {
        let t = match case {
            Case::General => build_pqr_general(),
            Case::Planar => build_pqr_planar(),
        };
        let d = derive_relation(&t, case).unwrap();
        let b = eliminate_trig(&t, &d, Case::General).unwrap();
        let c = square_relation(&t);
        let e = eliminant(&b, &c);
        let w = rationalize(&e.value).unwrap();
        for _ in 0..40 {
            let p = random_point(&mut rng);
            let (pv, qv, rv) = (ev(&t.p, &p), ev(&t.q, &p), ev(&t.r, &p));
            let scale = (pv.abs() + qv.abs() + rv.abs()).max(1.0);

            // trig elimination: multiplying the cot-substituted derived
            // relation by P and inserting P sin2φ = −Q cos2φ − R is the ring
            // identity  P·G − M·(P sin2φ + Q cos2φ + R) = b₂cos²2φ + b₁cos2φ + b₀
            // with M = (cotB − regA)·cos2φ + (regA + cotG).
            let cot_a = ev(&d.alpha.cot, &p);
            let reg_a = ev(&d.alpha.reg, &p);
            let cot_b = ev(&d.beta.cot, &p);
            let reg_b = ev(&d.beta.reg, &p);
            let cot_g = ev(&d.gamma.cot, &p);
            let reg_g = ev(&d.gamma.reg, &p);
            let g = (1.0 - p.cos2)
                * ((reg_a + p.ct * cot_a) * p.sin2
                    + (reg_b + p.ct * cot_b) * p.cos2
                    + (reg_g + p.ct * cot_g));
            let v = pv * p.sin2 + qv * p.cos2 + rv;
            let m = (cot_b - reg_a) * p.cos2 + (reg_a + cot_g);
            let lhs = pv * g - m * v;
            let rhs = ev(&b.b2, &p) * p.cos2 * p.cos2 + ev(&b.b1, &p) * p.cos2 + ev(&b.b0, &p);
            let denom = scale * scale * scale.max(g.abs() + v.abs());
            assert!(
                ((lhs - rhs) / denom).abs() < 1e-9,
                "trig elimination shadow: {lhs} vs {rhs}"
            );

            // squared relation: (P²+Q²)cos² + 2QR cos + R²−P² = (Qcos+R)² − P²sin²
            let lhs = ev(&c.b2, &p) * p.cos2 * p.cos2 + ev(&c.b1, &p) * p.cos2 + ev(&c.b0, &p);
            let rhs = (qv * p.cos2 + rv).powi(2) - pv * pv * p.sin2 * p.sin2;
            assert!(((lhs - rhs) / (scale * scale)).abs() < 1e-9);

            // eliminant parts and the radical clearing
            let kv = ev(&e.kappa, &p);
            let lv = ev(&e.lambda, &p);
            let mv = ev(&e.mu, &p);
            let val = ev(&e.value, &p);
            let kscale = (kv * kv).abs().max((lv * mv).abs()).max(1.0);
            assert!(((val - (kv * kv - lv * mv)) / kscale).abs() < 1e-9);
            let even = e.value.even().eval_f64(&p.vals, p.z);
            let rad = e.value.radical().eval_f64(&p.vals, p.z);
            let wv = w.eval_f64(&p.vals, p.z);
            let x = p.vals.a * p.vals.a - p.z * p.z;
            let wscale = (even * even).abs().max((rad * rad * x).abs()).max(1.0);
            assert!(((wv - (even * even - rad * rad * x)) / wscale).abs() < 1e-9);
        }
    }
}

#[test]
fn eliminant_detects_shared_roots_of_quadratics() {
    // 1000 trials at 1e-9: quadratics with a common root make the expression
    // vanish; well-separated root sets keep it bounded away from zero
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let elim = |b: [f64; 3], c: [f64; 3]| {
        let (b2, b1, b0) = (b[0], b[1], b[2]);
        let (c2, c1, c0) = (c[0], c[1], c[2]);
        (b2 * c0 - b0 * c2).powi(2) - (b0 * c1 - b1 * c0) * (b1 * c2 - b2 * c1)
    };
    let from_roots = |lead: f64, r1: f64, r2: f64| [lead, -lead * (r1 + r2), lead * r1 * r2];
    let mut done = 0;
    while done < 1000 {
        let shared: f64 = rng.gen_range(-2.0..2.0);
        let x1: f64 = rng.gen_range(-2.0..2.0);
        let y1: f64 = rng.gen_range(-2.0..2.0);
        let free: f64 = rng.gen_range(-2.0..2.0);
        let sep = |a: f64, b: f64| (a - b).abs() > 0.5;
        if !(sep(shared, x1)
            && sep(shared, y1)
            && sep(x1, y1)
            && sep(free, shared)
            && sep(free, x1)
            && sep(free, y1))
        {
            continue;
        }
        done += 1;
        let lb: f64 = rng.gen_range(0.5..2.0);
        let lc: f64 = rng.gen_range(0.5..2.0);
        let b = from_roots(lb, shared, x1);
        let c = from_roots(lc, shared, y1);
        let scale: f64 = b.iter().map(|x| x.abs()).sum::<f64>().powi(2)
            * c.iter().map(|x| x.abs()).sum::<f64>().powi(2);
        assert!(
            elim(b, c).abs() <= 1e-9 * scale.max(1.0),
            "shared-root eliminant should vanish: {}",
            elim(b, c)
        );

        let c_disjoint = from_roots(lc, free, y1);
        // resultant = lb²·lc²·Π(root differences), all ≥ 0.5 here
        assert!(
            elim(b, c_disjoint).abs() > 1e-6,
            "disjoint-root eliminant unexpectedly small"
        );
    }
}

#[test]
fn ledger_serialization_is_canonical() {
    // golden rows: descending graded-lex monomials, content-free fractions,
    // positive leading denominator coefficient
    let run = run_general_case().unwrap();
    let csv = run.ledger.to_csv();
    for golden in [
        "b216,(-18*A*T1 + 56*A1*T)/A,(-18*A*T1 + 56*A1*T)/A,,match",
        "b229,72,72,,match",
        "kappa217,-1152,-1152,,match",
        "lambda217,384,384,,match",
        "mu217,3456,3456,,match",
        "c215,(6*A*T1 + 8*A1*T)/A,(6*A*T1 + 8*A1*T)/A,,match",
        "P10,2*A^2*T,2*A^2*T,,match",
        "alpha45,12,12,,match",
        "gamma25,8,8,,match",
        "E34,0,0,,match",
    ] {
        assert!(csv.contains(golden), "missing golden row: {golden}");
    }
    // a stated z-expansion entry whose printed source slipped stays visible
    assert!(csv
        .lines()
        .any(|l| l.starts_with("lambda215,") && l.ends_with("mismatch(print)")));
}

#[test]
fn planar_final_poly_has_even_structure_and_right_leading_terms() {
    let t = build_pqr_planar();
    let d = derive_relation(&t, Case::Planar).unwrap();
    let b = eliminate_trig(&t, &d, Case::Planar).unwrap();
    let c = square_relation(&t);
    let e = eliminant(&b, &c);
    assert!(e.value.radical().is_zero());
    let kappa = e.kappa.even();
    assert_eq!(
        kappa.coeff(8),
        transurf::symring::parse_ratexpr("1152").unwrap()
    );
    let k6 = kappa.coeff(6);
    let want =
        transurf::symring::parse_ratexpr("384*(6*A^2 + (A*A2 - A1^2)/A^2 - (A1/A)^2)").unwrap();
    assert_eq!(k6, want);
}
