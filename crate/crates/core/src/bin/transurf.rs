//! Command-line front end: surface analysis, proof verification,
//! realizability residuals, and fixture generation.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error.

use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use transurf::exprlang;
use transurf::fixtures::{fixture, CurveJson, Params};
use transurf::geomcore::{
    arclength_reparam, codazzi_residual, form_coefficients, gauss_curvature_angle,
    gauss_curvature_forms, Curve, GeomConfig, SurfacePatch,
};
use transurf::proofpipe::{run_general_case, run_planar_case, ProofRun};
use transurf::realizer::{
    classify_surface, conservation_ab, realizability_check, Grid, RealizabilityInput,
};
use transurf::report::{grid_csv, to_json_pretty, AnalyzeReport, GridRow};

#[derive(Parser)]
#[command(
    name = "transurf",
    version,
    about = "Translation-surface geometry and proof replay"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a translation surface built from two curve files
    Analyze(AnalyzeArgs),
    /// Replay an elimination case and verify the coefficient ledger
    VerifyProof(VerifyArgs),
    /// Evaluate realizability residuals for a candidate (phi, A, B, K)
    Realize(RealizeArgs),
    /// Emit a named curve fixture as JSON
    Fixtures(FixturesArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// JSON file for the u-generator curve α
    alpha: PathBuf,
    /// JSON file for the v-generator curve β
    beta: PathBuf,
    /// Probe grid, e.g. 64x64
    #[arg(long, default_value = "64x64")]
    grid: String,
    /// Base numeric tolerance
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Directory for report.json and grid.csv
    #[arg(long)]
    out: Option<PathBuf>,
    /// What to print on stdout
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which elimination to replay
    #[arg(long, value_parser = ["general", "planar"])]
    case: String,
    /// Directory for ledger.csv and summary.json
    #[arg(long)]
    out: Option<PathBuf>,
    /// What to print on stdout
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct RealizeArgs {
    /// Angle phi(u,v), 0 < phi < pi on the grid
    #[arg(long)]
    phi: String,
    /// Curvature profile A(u)
    #[arg(long)]
    a: String,
    /// Curvature profile B(v)
    #[arg(long)]
    b: String,
    /// Constant Gaussian curvature K
    #[arg(long, allow_hyphen_values = true)]
    k: f64,
    /// Sign of L
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps1: i8,
    /// Sign of N
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    eps2: i8,
    #[arg(long, default_value = "16x16")]
    grid: String,
    /// u-domain as lo:hi
    #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
    domain_u: String,
    /// v-domain as lo:hi
    #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
    domain_v: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FixturesArgs {
    /// Fixture name: line, circle, helix, fourier, scherk-slice
    name: String,
    /// Fixture parameters as key=value (repeatable), e.g. --param r=1
    #[arg(long = "param")]
    params: Vec<String>,
    /// Output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::VerifyProof(a) => cmd_verify(a),
        Command::Realize(a) => cmd_realize(a),
        Command::Fixtures(a) => cmd_fixtures(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let (a, b) = s
        .split_once('x')
        .ok_or_else(|| format!("bad grid {s:?}, expected NxM"))?;
    let nu: usize = a.parse().map_err(|_| format!("bad grid {s:?}"))?;
    let nv: usize = b.parse().map_err(|_| format!("bad grid {s:?}"))?;
    if nu < 2 || nv < 2 {
        return Err("grid must be at least 2x2".into());
    }
    Ok(Grid::new(nu, nv))
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("bad range {s:?}, expected lo:hi"))?;
    let lo: f64 = a.parse().map_err(|_| format!("bad range {s:?}"))?;
    let hi: f64 = b.parse().map_err(|_| format!("bad range {s:?}"))?;
    // written with a negation so NaN endpoints are rejected too
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(lo < hi) {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

fn load_curve(path: &Path, tol: f64, cfg: &GeomConfig) -> Result<Curve, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let json: CurveJson = serde_json::from_str(&text)
        .map_err(|e| format!("bad curve JSON in {}: {e}", path.display()))?;
    let curve = Curve::from_json(&json).map_err(|e| format!("{}: {e}", path.display()))?;
    if curve.arclength {
        Ok(curve)
    } else {
        arclength_reparam(&curve, tol.min(1e-6), cfg)
            .map_err(|e| format!("reparametrizing {}: {e}", path.display()))
    }
}

/// Print to stdout, tolerating a closed pipe (e.g. piping into `head`).
fn emit(content: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(content.as_bytes());
}

fn write_out(dir: &Option<PathBuf>, name: &str, content: &str) -> Result<(), String> {
    let Some(dir) = dir else { return Ok(()) };
    std::fs::create_dir_all(dir).map_err(|e| format!("creating {}: {e}", dir.display()))?;
    let path = dir.join(name);
    std::fs::write(&path, content).map_err(|e| format!("writing {}: {e}", path.display()))
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, String> {
    let grid = parse_grid(&args.grid)?;
    if args.tol <= 0.0 {
        return Err("tolerance must be positive".into());
    }
    let cfg = GeomConfig::default();
    let alpha = load_curve(&args.alpha, args.tol, &cfg)?;
    let beta = load_curve(&args.beta, args.tol, &cfg)?;
    let patch = SurfacePatch::new(alpha, beta, &cfg).map_err(|e| e.to_string())?;

    let mut rows = Vec::with_capacity(grid.nu * grid.nv);
    let mut route_max: f64 = 0.0;
    let mut egregium_max: f64 = 0.0;
    let mut codazzi_max = [0.0f64; 2];
    let mut usable = 0usize;
    for (u, v) in grid.points(patch.domain.0, patch.domain.1) {
        let fc = match form_coefficients(&patch, u, v, &cfg) {
            Ok(fc) => fc,
            Err(transurf::geomcore::GeomError::RegularityViolation { .. }) => continue,
            Err(e) => return Err(e.to_string()),
        };
        usable += 1;
        let k_forms = gauss_curvature_forms(&fc);
        let k_angle = gauss_curvature_angle(&fc);
        route_max = route_max.max((k_forms - k_angle).abs());
        egregium_max = egregium_max.max((fc.phi_uv + k_forms * fc.phi.sin()).abs());
        if let Ok((r1, r2)) = codazzi_residual(&patch, u, v, cfg.fd_step, &cfg) {
            codazzi_max[0] = codazzi_max[0].max(r1);
            codazzi_max[1] = codazzi_max[1].max(r2);
        }
        rows.push(GridRow {
            u,
            v,
            phi: fc.phi,
            l: fc.l,
            n: fc.n,
            k: k_forms,
        });
    }
    if usable == 0 {
        return Err("no regular grid points: the two tangent fields are parallel".into());
    }
    let classify = classify_surface(&patch, grid, 1e-8, 1e-7, &cfg).map_err(|e| e.to_string())?;
    let conservation = conservation_ab(&patch, grid, &cfg).map_err(|e| e.to_string())?;
    let report = AnalyzeReport::new(
        &classify,
        &conservation,
        route_max,
        egregium_max,
        codazzi_max,
    );

    let json = to_json_pretty(&report);
    let csv = grid_csv(&rows);
    write_out(&args.out, "report.json", &json)?;
    write_out(&args.out, "grid.csv", &csv)?;
    match args.format {
        Format::Json => emit(&json),
        Format::Csv => emit(&csv),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(serde::Serialize)]
struct VerifySummary {
    case: &'static str,
    entries: usize,
    mismatches: usize,
    print_slips: usize,
    verified: bool,
    conclusion: Vec<String>,
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let run: ProofRun = match args.case.as_str() {
        "general" => run_general_case(),
        "planar" => run_planar_case(),
        other => return Err(format!("unknown case {other:?}")),
    }
    .map_err(|e| format!("pipeline failure: {e}"))?;

    let summary = VerifySummary {
        case: run.ledger.case,
        entries: run.ledger.entries.len(),
        mismatches: run.ledger.mismatches().len(),
        print_slips: run.ledger.noted_print_slips(),
        verified: run.verified,
        conclusion: run.ledger.conclusions.clone(),
    };
    let json = to_json_pretty(&summary);
    let csv = run.ledger.to_csv();
    write_out(&args.out, "ledger.csv", &csv)?;
    write_out(&args.out, "summary.json", &json)?;
    match args.format {
        Format::Json => emit(&json),
        Format::Csv => emit(&csv),
    }
    if run.verified {
        Ok(ExitCode::SUCCESS)
    } else {
        if let Some(first) = run.ledger.mismatches().first() {
            eprintln!(
                "mismatch at {}: engine {} vs stated {}",
                first.name,
                first.symbolic,
                first.paper_value.as_deref().unwrap_or("-")
            );
        } else {
            eprintln!("verification failed: {:?}", run.ledger.conclusions);
        }
        Ok(ExitCode::from(1))
    }
}

fn cmd_realize(args: RealizeArgs) -> Result<ExitCode, String> {
    let grid = parse_grid(&args.grid)?;
    let parse = |name: &str, src: &str| {
        exprlang::parse(src).map_err(|e| format!("bad --{name} expression: {e}"))
    };
    let inp = RealizabilityInput {
        phi: parse("phi", &args.phi)?,
        a: parse("a", &args.a)?,
        b: parse("b", &args.b)?,
        k: args.k,
        eps1: args.eps1,
        eps2: args.eps2,
    };
    let du = parse_range(&args.domain_u)?;
    let dv = parse_range(&args.domain_v)?;
    let outcome = realizability_check(&inp, du, dv, grid).map_err(|e| e.to_string())?;
    let json = to_json_pretty(&outcome);
    write_out(&args.out, "realize.json", &json)?;
    emit(&json);
    Ok(ExitCode::SUCCESS)
}

fn cmd_fixtures(args: FixturesArgs) -> Result<ExitCode, String> {
    let mut params = Params::new();
    for p in &args.params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| format!("bad --param {p:?}, expected key=value"))?;
        let val: f64 = v
            .parse()
            .map_err(|_| format!("bad value in --param {p:?}"))?;
        params.insert(k.to_string(), val);
    }
    let fx =
        fixture(&args.name, &params).ok_or_else(|| format!("unknown fixture {:?}", args.name))?;
    let json = to_json_pretty(&fx);
    std::fs::write(&args.out, &json).map_err(|e| format!("writing {}: {e}", args.out.display()))?;
    println!("wrote {}", args.out.display());
    Ok(ExitCode::SUCCESS)
}
