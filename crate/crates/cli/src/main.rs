//! `ybe`: verification runs, sweeps and matrix exports for the qutrit
//! Yang-Baxter toolkit.
//!
//! Exit codes: 0 success, 1 a check failed (or a Berry run did not
//! converge), 2 bad configuration, 3 degenerate input (`sin θ = 0`).

use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ybe_core::algebra::QutritBasisMap;
use ybe_core::dynamics::{
    band_index, block_basis, block_diagonalize, block_eigensystem, block_pattern_residual, build_h,
    closed_form_spectrum, Band, HamiltonianSpec,
};
use ybe_core::geometric::{berry_numeric, LoopSpec};
use ybe_core::report::{CheckKind, CheckRecord};
use ybe_core::verify::{all_pass, run_checks, VerifyConfig};
use ybe_core::yangbaxter::{act_on_basis, build_r, negativity, negativity_closed, RParams};
use ybe_core::{Complex64, ComplexMatrix, Error};

#[derive(Parser)]
#[command(
    name = "ybe",
    version,
    about = "Qutrit Yang-Baxter matrices, negativity and Berry phases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check suite and print one record per check.
    Verify(VerifyArgs),
    /// Export the 9x9 matrix R(θ, φ1, φ2).
    Rmatrix(RmatrixArgs),
    /// Closed-form and numeric negativity of R|11> over θ in [0, π].
    NegativitySweep(SweepArgs),
    /// Subsystem eigenvalues of H(t) against the closed form.
    Spectrum(HamArgs),
    /// Numeric Berry phase of one band of one subsystem.
    Berry(BerryArgs),
    /// O H Oᵀ and the three subsystem blocks of H(t).
    Blocks(BlocksArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    /// Display order |11>,|10>,|01>,|1-1>,|00>,|-11>,|0-1>,|-10>,|-1-1>.
    #[value(name = "paper", alias = "display")]
    Display,
    /// Kronecker order with labels 1, 0, -1.
    Lex,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Perturb F(xy) in the YBE check; the run must then fail.
    #[arg(long)]
    self_test_negative: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct RmatrixArgs {
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    phi1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    phi2: f64,
    #[arg(long, value_enum, default_value_t = Order::Display)]
    order: Order,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    /// Number of grid points, including both ends.
    #[arg(long, default_value_t = 61)]
    steps: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    phi1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    phi2: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct HamParams {
    #[arg(long, allow_hyphen_values = true)]
    theta: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    omega1: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    omega2: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    hbar: f64,
}

impl HamParams {
    fn spec(&self) -> HamiltonianSpec {
        HamiltonianSpec::new(self.theta, self.omega1, self.omega2).with_hbar(self.hbar)
    }
}

#[derive(Args)]
struct HamArgs {
    #[command(flatten)]
    params: HamParams,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t: f64,
    /// Restrict to one subsystem (1, 2 or 3).
    #[arg(long)]
    subsystem: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BerryArgs {
    #[command(flatten)]
    params: HamParams,
    #[arg(long, default_value_t = 1)]
    subsystem: usize,
    /// `+`, `0` or `-` (also `plus`, `zero`, `minus`).
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    band: String,
    /// Starting loop discretization; doubled until converged.
    #[arg(long, default_value_t = 2048)]
    steps: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BlocksArgs {
    #[command(flatten)]
    params: HamParams,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t: f64,
    #[command(flatten)]
    output: Output,
}

/// Why a command stopped; maps onto the exit code.
enum Failure {
    Checks,
    Config(String),
    Degenerate(String),
    NotConverged(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateSpectrum { .. } => Failure::Degenerate(e.to_string()),
            Error::NotConverged { .. } => Failure::NotConverged(e.to_string()),
            other => Failure::Config(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Rmatrix(a) => cmd_rmatrix(a),
        Command::NegativitySweep(a) => cmd_sweep(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Berry(a) => cmd_berry(a),
        Command::Blocks(a) => cmd_blocks(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::NotConverged(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Degenerate(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(out: &Output, text: &str) -> CmdResult {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Io(e.to_string()))
}

fn finite(name: &str, v: f64) -> CmdResult {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Failure::Config(format!("--{name} must be finite")))
    }
}

fn matrix_json(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

/// Shortest round-trip form, exponent notation for very small or large values.
fn num(x: f64) -> String {
    format!("{x:?}")
}

fn complex_cells(z: Complex64) -> [String; 2] {
    [num(z.re), num(z.im)]
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    seed: u64,
    trials: usize,
    tol: f64,
    self_test_negative: bool,
    total: usize,
    failed: usize,
    informational_mismatches: usize,
    pass: bool,
    records: &'a [CheckRecord],
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    if !(a.tol > 0.0 && a.tol.is_finite()) {
        return Err(Failure::Config("--tol must be positive".into()));
    }
    let cfg = VerifyConfig {
        seed: a.seed,
        trials: a.trials,
        tol: a.tol,
        self_test_negative: a.self_test_negative,
        ..VerifyConfig::default()
    };
    let records = run_checks(&cfg);
    let pass = all_pass(&records);
    let text = match a.output.format {
        Format::Json => json(&VerifyReport {
            seed: cfg.seed,
            trials: cfg.trials,
            tol: cfg.tol,
            self_test_negative: cfg.self_test_negative,
            total: records.len(),
            failed: records.iter().filter(|r| !r.ok()).count(),
            informational_mismatches: records
                .iter()
                .filter(|r| r.kind == CheckKind::Informational && !r.pass)
                .count(),
            pass,
            records: &records,
        })?,
        Format::Csv => csv_text(
            &["name", "kind", "pass", "residual", "tolerance", "paper_anchor", "note"],
            records
                .iter()
                .map(|r| {
                    vec![
                        r.name.clone(),
                        match r.kind {
                            CheckKind::Assertion => "assertion".into(),
                            CheckKind::Informational => "informational".into(),
                        },
                        r.pass.to_string(),
                        num(r.residual),
                        num(r.tolerance),
                        r.paper_anchor.clone(),
                        r.note.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        )?,
    };
    emit(&a.output, &text)?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

#[derive(Serialize)]
struct MatrixExport {
    theta: f64,
    phi1: f64,
    phi2: f64,
    order: &'static str,
    basis: Vec<String>,
    matrix: Vec<Vec<[f64; 2]>>,
}

fn cmd_rmatrix(a: RmatrixArgs) -> CmdResult {
    for (n, v) in [("theta", a.theta), ("phi1", a.phi1), ("phi2", a.phi2)] {
        finite(n, v)?;
    }
    let lex = build_r(&RParams::new(a.theta, a.phi1, a.phi2));
    let (m, order, basis): (ComplexMatrix, _, Vec<usize>) = match a.order {
        Order::Display => (
            QutritBasisMap::to_display(&lex),
            "paper",
            QutritBasisMap::DISPLAY_TO_LEX.to_vec(),
        ),
        Order::Lex => (lex, "lex", (0..9).collect()),
    };
    let names: Vec<String> = basis.iter().map(|&i| QutritBasisMap::ket_name(i)).collect();
    let text = match a.output.format {
        Format::Json => json(&MatrixExport {
            theta: a.theta,
            phi1: a.phi1,
            phi2: a.phi2,
            order,
            basis: names,
            matrix: matrix_json(&m),
        })?,
        Format::Csv => {
            let mut rows = Vec::new();
            for i in 0..9 {
                for j in 0..9 {
                    let [re, im] = complex_cells(m[(i, j)]);
                    rows.push(vec![
                        i.to_string(),
                        j.to_string(),
                        names[i].clone(),
                        names[j].clone(),
                        re,
                        im,
                    ]);
                }
            }
            csv_text(&["row", "col", "row_ket", "col_ket", "re", "im"], rows)?
        }
    };
    emit(&a.output, &text)
}

#[derive(Serialize)]
struct SweepRow {
    theta: f64,
    n_closed: f64,
    n_numeric: f64,
    abs_diff: f64,
}

fn cmd_sweep(a: SweepArgs) -> CmdResult {
    if a.steps < 2 {
        return Err(Failure::Config("--steps must be at least 2".into()));
    }
    finite("phi1", a.phi1)?;
    finite("phi2", a.phi2)?;
    let rows = (0..a.steps)
        .map(|i| {
            let theta = PI * i as f64 / (a.steps - 1) as f64;
            let state = act_on_basis(&RParams::new(theta, a.phi1, a.phi2), 1, 1)?;
            let numeric = negativity(&state)?;
            let closed = negativity_closed(theta);
            Ok(SweepRow {
                theta,
                n_closed: closed,
                n_numeric: numeric,
                abs_diff: (closed - numeric).abs(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = match a.output.format {
        Format::Json => json(&rows)?,
        Format::Csv => csv_text(
            &["theta", "n_closed", "n_numeric", "abs_diff"],
            rows.iter()
                .map(|r| vec![num(r.theta), num(r.n_closed), num(r.n_numeric), num(r.abs_diff)])
                .collect(),
        )?,
    };
    emit(&a.output, &text)
}

#[derive(Serialize)]
struct SpectrumRow {
    subsystem: usize,
    band: Band,
    numeric: f64,
    closed_form: f64,
    abs_diff: f64,
}

fn cmd_spectrum(a: HamArgs) -> CmdResult {
    let spec = a.params.spec();
    spec.validate()?;
    finite("t", a.t)?;
    let ks: Vec<usize> = match a.subsystem {
        Some(k) => {
            block_basis(k)?;
            vec![k]
        }
        None => vec![1, 2, 3],
    };
    let mut rows = Vec::new();
    for k in ks {
        let numeric = block_eigensystem(&spec, k, a.t)?.values;
        let closed = closed_form_spectrum(&spec, k)?;
        for (band, e) in [
            (Band::Plus, closed[2]),
            (Band::Zero, closed[1]),
            (Band::Minus, closed[0]),
        ] {
            let x = numeric[band_index(&spec, k, band)?];
            rows.push(SpectrumRow {
                subsystem: k,
                band,
                numeric: x,
                closed_form: e,
                abs_diff: (x - e).abs(),
            });
        }
    }
    let text = match a.output.format {
        Format::Json => json(&rows)?,
        Format::Csv => csv_text(
            &["subsystem", "band", "numeric", "closed_form", "abs_diff"],
            rows.iter()
                .map(|r| {
                    vec![
                        r.subsystem.to_string(),
                        r.band.symbol().to_string(),
                        num(r.numeric),
                        num(r.closed_form),
                        num(r.abs_diff),
                    ]
                })
                .collect(),
        )?,
    };
    emit(&a.output, &text)
}

fn cmd_berry(a: BerryArgs) -> CmdResult {
    let spec = a.params.spec();
    spec.validate()?;
    let band: Band = a.band.parse()?;
    let r = berry_numeric(&LoopSpec::new(spec, a.subsystem, band, a.steps))?;
    let text = match a.output.format {
        Format::Json => json(&r)?,
        Format::Csv => csv_text(
            &[
                "subsystem",
                "band",
                "theta",
                "omega1",
                "omega2",
                "steps",
                "numeric_phase",
                "analytic_phase",
                "richardson_estimate",
            ],
            vec![vec![
                r.subsystem.to_string(),
                r.band.symbol().to_string(),
                num(r.theta),
                num(r.omega1),
                num(r.omega2),
                r.steps.to_string(),
                num(r.numeric_phase),
                num(r.analytic_phase),
                num(r.richardson_estimate),
            ]],
        )?,
    };
    emit(&a.output, &text)
}

#[derive(Serialize)]
struct BlockExport {
    subsystem: usize,
    basis: Vec<String>,
    eigenvalues: Vec<f64>,
    matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct BlocksReport {
    theta: f64,
    omega1: f64,
    omega2: f64,
    hbar: f64,
    t: f64,
    pattern_residual: f64,
    h_tilde: Vec<Vec<[f64; 2]>>,
    blocks: Vec<BlockExport>,
}

fn cmd_blocks(a: BlocksArgs) -> CmdResult {
    let spec = a.params.spec();
    spec.validate()?;
    finite("t", a.t)?;
    let h = build_h(&spec, a.t);
    let ht = block_diagonalize(&h)?;
    let mut blocks = Vec::new();
    for k in 1..=3 {
        let basis = block_basis(k)?;
        let b = h.submatrix(&basis);
        blocks.push(BlockExport {
            subsystem: k,
            basis: basis.iter().map(|&i| QutritBasisMap::ket_name(i)).collect(),
            eigenvalues: block_eigensystem(&spec, k, a.t)?.values,
            matrix: matrix_json(&b),
        });
    }
    let text = match a.output.format {
        Format::Json => json(&BlocksReport {
            theta: spec.theta,
            omega1: spec.omega1,
            omega2: spec.omega2,
            hbar: spec.hbar,
            t: a.t,
            pattern_residual: block_pattern_residual(&ht),
            h_tilde: matrix_json(&ht),
            blocks,
        })?,
        Format::Csv => {
            let mut rows = Vec::new();
            for i in 0..9 {
                for j in 0..9 {
                    let [re, im] = complex_cells(ht[(i, j)]);
                    rows.push(vec!["h_tilde".into(), i.to_string(), j.to_string(), re, im]);
                }
            }
            for b in &blocks {
                for (i, row) in b.matrix.iter().enumerate() {
                    for (j, z) in row.iter().enumerate() {
                        rows.push(vec![
                            format!("subsystem{}", b.subsystem),
                            i.to_string(),
                            j.to_string(),
                            num(z[0]),
                            num(z[1]),
                        ]);
                    }
                }
            }
            csv_text(&["matrix", "row", "col", "re", "im"], rows)?
        }
    };
    emit(&a.output, &text)
}
