//! C ABI for the translation-surface toolkit: opaque surface handles, JSON
//! string results, and integer status codes matching the CLI exit contract
//! (0 ok, 1 verification mismatch, 2 invalid input).
//!
//! Every returned `char*` is owned by this library and must be released with
//! [`ts_string_free`]. All functions are panic-safe across the boundary.

use std::ffi::{c_char, c_double, c_int, c_uint, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use transurf::exprlang;
use transurf::fixtures::{fixture, CurveJson, Params};
use transurf::geomcore::{arclength_reparam, Curve, GeomConfig, SurfacePatch};
use transurf::proofpipe::{run_general_case, run_planar_case};
use transurf::realizer::{
    classify_surface, conservation_ab, realizability_check, Grid, RealizabilityInput,
};
use transurf::report::to_json_pretty;

/// Status codes mirrored into the generated header.
pub const TS_OK: c_int = 0;
pub const TS_VERIFY_MISMATCH: c_int = 1;
pub const TS_INVALID_INPUT: c_int = 2;
pub const TS_PANIC: c_int = 3;

/// Opaque handle to a validated translation-surface patch.
pub struct TsSurface {
    patch: SurfacePatch,
    cfg: GeomConfig,
}

fn set_status(out: *mut c_int, code: c_int) {
    if !out.is_null() {
        // SAFETY: caller passed a valid pointer or null
        unsafe { *out = code };
    }
}

fn to_owned_cstr(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// # Safety
/// `p` must be null or a pointer previously returned by a `ts_*` function and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

unsafe fn cstr<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn load_curve(json: &str) -> Result<Curve, String> {
    let parsed: CurveJson = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let curve = Curve::from_json(&parsed).map_err(|e| e.to_string())?;
    if curve.arclength {
        Ok(curve)
    } else {
        arclength_reparam(&curve, 1e-6, &GeomConfig::default()).map_err(|e| e.to_string())
    }
}

/// Build a surface from two curve JSON documents (the schema of the
/// `fixtures` command). Returns null and sets `status_out` on failure.
///
/// # Safety
/// `alpha_json` and `beta_json` must be valid NUL-terminated UTF-8 strings;
/// `status_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn ts_surface_new(
    alpha_json: *const c_char,
    beta_json: *const c_char,
    status_out: *mut c_int,
) -> *mut TsSurface {
    let inputs = (cstr(alpha_json), cstr(beta_json));
    let result = catch_unwind(AssertUnwindSafe(|| {
        let (Some(a), Some(b)) = inputs else {
            return Err(());
        };
        let cfg = GeomConfig::default();
        let alpha = load_curve(a).map_err(|_| ())?;
        let beta = load_curve(b).map_err(|_| ())?;
        let patch = SurfacePatch::new(alpha, beta, &cfg).map_err(|_| ())?;
        Ok(TsSurface { patch, cfg })
    }));
    match result {
        Ok(Ok(s)) => {
            set_status(status_out, TS_OK);
            Box::into_raw(Box::new(s))
        }
        Ok(Err(())) => {
            set_status(status_out, TS_INVALID_INPUT);
            ptr::null_mut()
        }
        Err(_) => {
            set_status(status_out, TS_PANIC);
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be null or a handle from [`ts_surface_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ts_surface_free(s: *mut TsSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Analyze the surface over an `nu` × `nv` grid; returns the JSON report
/// (K statistics, cylindricity, conservation spreads).
///
/// # Safety
/// `s` must be a live handle from [`ts_surface_new`]; `status_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn ts_surface_analyze(
    s: *const TsSurface,
    nu: c_uint,
    nv: c_uint,
    status_out: *mut c_int,
) -> *mut c_char {
    if s.is_null() || nu < 2 || nv < 2 {
        set_status(status_out, TS_INVALID_INPUT);
        return ptr::null_mut();
    }
    let surface = &*s;
    let result = catch_unwind(AssertUnwindSafe(|| {
        let grid = Grid::new(nu as usize, nv as usize);
        let classify = classify_surface(&surface.patch, grid, 1e-8, 1e-7, &surface.cfg)
            .map_err(|e| e.to_string())?;
        let conservation =
            conservation_ab(&surface.patch, grid, &surface.cfg).map_err(|e| e.to_string())?;
        #[derive(serde::Serialize)]
        struct Out<'a> {
            classify: &'a transurf::realizer::ClassifyReport,
            conservation: &'a transurf::realizer::ConservationReport,
        }
        Ok::<String, String>(to_json_pretty(&Out {
            classify: &classify,
            conservation: &conservation,
        }))
    }));
    match result {
        Ok(Ok(json)) => {
            set_status(status_out, TS_OK);
            to_owned_cstr(json)
        }
        Ok(Err(_)) => {
            set_status(status_out, TS_INVALID_INPUT);
            ptr::null_mut()
        }
        Err(_) => {
            set_status(status_out, TS_PANIC);
            ptr::null_mut()
        }
    }
}

fn run_case(case: &str) -> Option<transurf::proofpipe::ProofRun> {
    match case {
        "general" => run_general_case().ok(),
        "planar" => run_planar_case().ok(),
        _ => None,
    }
}

/// Replay an elimination case (`"general"` or `"planar"`); returns the JSON
/// summary. Status is `TS_VERIFY_MISMATCH` when a stated value fails.
///
/// # Safety
/// `case_name` must be a valid NUL-terminated string; `status_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn ts_verify_proof(
    case_name: *const c_char,
    status_out: *mut c_int,
) -> *mut c_char {
    let Some(case) = cstr(case_name) else {
        set_status(status_out, TS_INVALID_INPUT);
        return ptr::null_mut();
    };
    let result = catch_unwind(AssertUnwindSafe(|| run_case(case)));
    match result {
        Ok(Some(run)) => {
            #[derive(serde::Serialize)]
            struct Summary<'a> {
                case: &'a str,
                entries: usize,
                mismatches: usize,
                print_slips: usize,
                verified: bool,
                conclusion: &'a [String],
            }
            let json = to_json_pretty(&Summary {
                case: run.ledger.case,
                entries: run.ledger.entries.len(),
                mismatches: run.ledger.mismatches().len(),
                print_slips: run.ledger.noted_print_slips(),
                verified: run.verified,
                conclusion: &run.ledger.conclusions,
            });
            set_status(
                status_out,
                if run.verified {
                    TS_OK
                } else {
                    TS_VERIFY_MISMATCH
                },
            );
            to_owned_cstr(json)
        }
        Ok(None) => {
            set_status(status_out, TS_INVALID_INPUT);
            ptr::null_mut()
        }
        Err(_) => {
            set_status(status_out, TS_PANIC);
            ptr::null_mut()
        }
    }
}

/// Full coefficient ledger of a case as CSV (name, symbolic, paper_value,
/// scale, status).
///
/// # Safety
/// `case_name` must be a valid NUL-terminated string; `status_out` may be null.
#[no_mangle]
pub unsafe extern "C" fn ts_proof_ledger_csv(
    case_name: *const c_char,
    status_out: *mut c_int,
) -> *mut c_char {
    let Some(case) = cstr(case_name) else {
        set_status(status_out, TS_INVALID_INPUT);
        return ptr::null_mut();
    };
    match catch_unwind(AssertUnwindSafe(|| run_case(case))) {
        Ok(Some(run)) => {
            set_status(status_out, TS_OK);
            to_owned_cstr(run.ledger.to_csv())
        }
        Ok(None) => {
            set_status(status_out, TS_INVALID_INPUT);
            ptr::null_mut()
        }
        Err(_) => {
            set_status(status_out, TS_PANIC);
            ptr::null_mut()
        }
    }
}

/// Realizability residuals for a candidate (phi, A, B, K) over a 16×16 grid
/// on the unit square; returns the JSON residual report.
///
/// # Safety
/// Expression pointers must be valid NUL-terminated strings; `status_out` may
/// be null.
#[no_mangle]
pub unsafe extern "C" fn ts_realize(
    phi: *const c_char,
    a: *const c_char,
    b: *const c_char,
    k: c_double,
    eps1: c_int,
    eps2: c_int,
    status_out: *mut c_int,
) -> *mut c_char {
    let (Some(phi), Some(a), Some(b)) = (cstr(phi), cstr(a), cstr(b)) else {
        set_status(status_out, TS_INVALID_INPUT);
        return ptr::null_mut();
    };
    let result = catch_unwind(AssertUnwindSafe(|| {
        let inp = RealizabilityInput {
            phi: exprlang::parse(phi).map_err(|e| e.to_string())?,
            a: exprlang::parse(a).map_err(|e| e.to_string())?,
            b: exprlang::parse(b).map_err(|e| e.to_string())?,
            k,
            eps1: eps1 as i8,
            eps2: eps2 as i8,
        };
        let outcome = realizability_check(&inp, (0.0, 1.0), (0.0, 1.0), Grid::new(16, 16))
            .map_err(|e| e.to_string())?;
        Ok::<String, String>(to_json_pretty(&outcome))
    }));
    match result {
        Ok(Ok(json)) => {
            set_status(status_out, TS_OK);
            to_owned_cstr(json)
        }
        Ok(Err(_)) => {
            set_status(status_out, TS_INVALID_INPUT);
            ptr::null_mut()
        }
        Err(_) => {
            set_status(status_out, TS_PANIC);
            ptr::null_mut()
        }
    }
}

/// Emit a named fixture (`line`, `circle`, `helix`, `fourier`,
/// `scherk-slice`) with parameters given as a JSON object, e.g. `{"r": 1.0}`.
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `params_json` may be null.
#[no_mangle]
pub unsafe extern "C" fn ts_fixture(
    name: *const c_char,
    params_json: *const c_char,
    status_out: *mut c_int,
) -> *mut c_char {
    let Some(name) = cstr(name) else {
        set_status(status_out, TS_INVALID_INPUT);
        return ptr::null_mut();
    };
    let params: Params = match cstr(params_json) {
        None => Params::new(),
        Some(s) => match serde_json::from_str(s) {
            Ok(p) => p,
            Err(_) => {
                set_status(status_out, TS_INVALID_INPUT);
                return ptr::null_mut();
            }
        },
    };
    match fixture(name, &params) {
        Some(fx) => {
            set_status(status_out, TS_OK);
            to_owned_cstr(to_json_pretty(&fx))
        }
        None => {
            set_status(status_out, TS_INVALID_INPUT);
            ptr::null_mut()
        }
    }
}
