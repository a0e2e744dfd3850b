//! Command-line front end.
//!
//! Subcommands:
//!
//! - `k-table` — the five `K` routes side by side over a modulus grid,
//! - `eval` — `phi`, `s6`, `c6` over a `u` grid (with `K`-relative
//!   range syntax such as `-K:K:101`),
//! - `verify-identity` — the sextic-map identity sweep,
//! - `verify-bbg` — the rational-parametrization sweeps,
//! - `roots` — Weierstrass invariants, roots, and half-period,
//! - `self-test` — the full acceptance-criteria suite.
//!
//! Exit codes: 0 on success, 1 when a requested verification fails its
//! threshold (the worst offender is printed to stderr), 2 on bad usage
//! or an evaluation error. Output is CSV (default) or JSON, to stdout
//! or to `--output PATH`, and is byte-identical across repeated runs
//! with the same flags.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::functions::{self, Sig6Context};
use crate::grid::linspace;
use crate::hypergeom::SeriesSpec;
use crate::identities::{self, BbgParametrization, IdentityReport};
use crate::modulus::Modulus;
use crate::quadrature::QuadratureSpec;
use crate::selftest;
use crate::weierstrass;

const EXIT_PASS: i32 = 0;
const EXIT_VERIFICATION_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "sig6",
    version,
    about = "Signature-six toolkit: complete-integral tables, function evaluation, identity verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate the five K routes over a modulus grid.
    KTable(KTableArgs),
    /// Evaluate phi, s6, c6 over a u grid.
    Eval(EvalArgs),
    /// Verify the sextic-map identity over an x grid.
    VerifyIdentity(VerifyIdentityArgs),
    /// Verify a rational parametrization of the identity over a p grid.
    VerifyBbg(VerifyBbgArgs),
    /// Tabulate Weierstrass invariants, roots, and half-period.
    Roots(RootsArgs),
    /// Run the acceptance-criteria suite.
    SelfTest(SelfTestArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KTableArgs {
    /// Single modulus kk (mutually exclusive with --kk-grid).
    #[arg(long)]
    kk: Option<f64>,
    /// Modulus grid START:STOP:COUNT (mutually exclusive with --kk).
    #[arg(long, value_name = "GRID")]
    kk_grid: Option<String>,
    /// Pass threshold on the max pairwise relative difference.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Modulus kk.
    #[arg(long)]
    kk: f64,
    /// Argument grid START:STOP:COUNT; START and STOP may use K, e.g. -K:2K:101.
    #[arg(long, value_name = "RANGE", allow_hyphen_values = true)]
    u_range: String,
    /// Pass threshold on |s6^2 + c6^2 - 1|.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyIdentityArgs {
    /// Modulus-parameter grid START:STOP:COUNT with 0 < START, STOP < 1.
    #[arg(long, value_name = "GRID")]
    x_grid: String,
    /// Pass threshold on the relative residual.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Theorem,
    Corollary,
}

#[derive(Args, Debug)]
struct VerifyBbgArgs {
    /// Parameter grid START:STOP:COUNT with 0 < START, STOP < 1.
    #[arg(long, value_name = "GRID")]
    p_grid: String,
    /// Which parametrization to verify.
    #[arg(long, value_enum, default_value = "theorem")]
    which: Which,
    /// Pass threshold on the relative residual.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct RootsArgs {
    /// Single modulus kk (mutually exclusive with --kk-grid).
    #[arg(long)]
    kk: Option<f64>,
    /// Modulus grid START:STOP:COUNT (mutually exclusive with --kk).
    #[arg(long, value_name = "GRID")]
    kk_grid: Option<String>,
    /// Pass threshold on the root-sum and midpoint residuals.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct SelfTestArgs {
    #[command(flatten)]
    out: OutputArgs,
}

/// Parses the process arguments and runs the selected subcommand,
/// returning the process exit code. Argument errors are reported by
/// the parser itself with exit code 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    execute(cli)
}

fn execute(cli: Cli) -> i32 {
    match cli.command {
        Command::KTable(args) => cmd_k_table(args),
        Command::Eval(args) => cmd_eval(args),
        Command::VerifyIdentity(args) => cmd_verify_identity(args),
        Command::VerifyBbg(args) => cmd_verify_bbg(args),
        Command::Roots(args) => cmd_roots(args),
        Command::SelfTest(args) => cmd_self_test(args),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn eval_error(what: &str, e: crate::Error) -> i32 {
    eprintln!("error: {what}: {e}");
    EXIT_USAGE
}

/// Resolves the `--kk`/`--kk-grid` pair into a list of moduli.
fn resolve_kk_list(kk: Option<f64>, kk_grid: &Option<String>) -> Result<Vec<f64>, String> {
    match (kk, kk_grid) {
        (Some(v), None) => Ok(vec![v]),
        (None, Some(expr)) => {
            let (start, stop, count) = parse_grid_expr(expr)?;
            Ok(linspace(start, stop, count))
        }
        (Some(_), Some(_)) => Err("--kk and --kk-grid are mutually exclusive".to_string()),
        (None, None) => Err("one of --kk or --kk-grid is required".to_string()),
    }
}

/// Parses `START:STOP:COUNT` with plain numeric endpoints.
fn parse_grid_expr(expr: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = expr.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{expr}' must have the form START:STOP:COUNT"));
    }
    let start: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("grid start '{}' is not a number", parts[0]))?;
    let stop: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("grid stop '{}' is not a number", parts[1]))?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("grid count '{}' is not a positive integer", parts[2]))?;
    validate_grid(start, stop, count)?;
    Ok((start, stop, count))
}

/// Parses `START:STOP:COUNT` where START and STOP may be multiples of
/// the quarter length `K`: accepted endpoint forms are plain numbers
/// and `K`, `-K`, `2K`, `-1.5K`, ...
fn parse_u_range(expr: &str, k: f64) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = expr.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("range '{expr}' must have the form START:STOP:COUNT"));
    }
    let start = parse_k_token(parts[0], k)?;
    let stop = parse_k_token(parts[1], k)?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("range count '{}' is not a positive integer", parts[2]))?;
    validate_grid(start, stop, count)?;
    Ok((start, stop, count))
}

fn validate_grid(start: f64, stop: f64, count: usize) -> Result<(), String> {
    if !start.is_finite() || !stop.is_finite() {
        return Err("grid endpoints must be finite".to_string());
    }
    if count == 0 {
        return Err("grid count must be at least 1".to_string());
    }
    if count > 1 && start >= stop {
        return Err("grid start must be less than stop".to_string());
    }
    Ok(())
}

/// Parses one endpoint token: a plain number, or a multiple of `K`
/// (`K`, `-K`, `2K`, `0.5K`).
fn parse_k_token(token: &str, k: f64) -> Result<f64, String> {
    let t = token.trim();
    if let Some(coeff) = t.strip_suffix(['K', 'k']) {
        let factor: f64 = match coeff {
            "" => 1.0,
            "-" => -1.0,
            "+" => 1.0,
            other => other
                .parse()
                .map_err(|_| format!("endpoint '{t}' is not a number or multiple of K"))?,
        };
        if !factor.is_finite() {
            return Err(format!("endpoint '{t}' is not finite"));
        }
        Ok(factor * k)
    } else {
        t.parse::<f64>()
            .map_err(|_| format!("endpoint '{t}' is not a number or multiple of K"))
    }
}

/// Formats a float with 17 significant digits, the fixed table format.
fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the finished document to `--output` or stdout.
fn emit(out: &OutputArgs, content: &str) -> Result<(), String> {
    match &out.output {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

/// Renders a table as CSV (header plus one line per row) or as the
/// JSON document {"config", "rows", "max_residual", "pass"}.
fn render(
    out: &OutputArgs,
    config: serde_json::Value,
    header: &[&str],
    rows: &[Vec<serde_json::Value>],
    max_residual: f64,
    pass: bool,
) -> String {
    match out.format {
        Format::Csv => {
            let mut doc = String::new();
            doc.push_str(&header.join(","));
            doc.push('\n');
            for row in rows {
                let line: Vec<String> = row
                    .iter()
                    .map(|cell| match cell {
                        serde_json::Value::String(s) => s.clone(),
                        serde_json::Value::Bool(b) => b.to_string(),
                        serde_json::Value::Number(n) => {
                            // Integers print plainly; floats in the fixed format.
                            if let Some(i) = n.as_i64() {
                                i.to_string()
                            } else {
                                fmt(n.as_f64().unwrap_or(f64::NAN))
                            }
                        }
                        other => other.to_string(),
                    })
                    .collect();
                let _ = writeln!(doc, "{}", line.join(","));
            }
            doc
        }
        Format::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let obj: serde_json::Map<String, serde_json::Value> = header
                        .iter()
                        .zip(row.iter())
                        .map(|(name, cell)| (name.to_string(), cell.clone()))
                        .collect();
                    serde_json::Value::Object(obj)
                })
                .collect();
            let doc = serde_json::json!({
                "config": config,
                "rows": rows_json,
                "max_residual": max_residual,
                "pass": pass,
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("JSON serialization");
            text.push('\n');
            text
        }
    }
}

fn number(v: f64) -> serde_json::Value {
    serde_json::json!(v)
}

/// Shared tail: emit the document and map `pass` to the exit code.
fn finish(out: &OutputArgs, content: &str, pass: bool, failure_note: &str) -> i32 {
    if let Err(msg) = emit(out, content) {
        return usage_error(&msg);
    }
    if pass {
        EXIT_PASS
    } else {
        eprintln!("verification failed: {failure_note}");
        EXIT_VERIFICATION_FAILURE
    }
}

fn cmd_k_table(args: KTableArgs) -> i32 {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return usage_error("--tol must be positive and finite");
    }
    let kks = match resolve_kk_list(args.kk, &args.kk_grid) {
        Ok(v) => v,
        Err(msg) => return usage_error(&msg),
    };
    let series_spec = SeriesSpec::default();
    let quad_spec = QuadratureSpec::default();
    let header = [
        "kk",
        "K_series",
        "K_quad",
        "K_psi",
        "K_cubic",
        "K_agm",
        "max_pairwise_relative_diff",
    ];
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    let mut worst_kk = f64::NAN;
    for kk in kks.iter().copied() {
        let modulus = match Modulus::new(kk) {
            Ok(m) => m,
            Err(e) => return usage_error(&format!("--kk {kk}: {e}")),
        };
        let series = match functions::complete_k_series(modulus, series_spec) {
            Ok(v) => v,
            Err(e) => return eval_error("K series route", e),
        };
        let quad = match functions::complete_k_quadrature(modulus, quad_spec) {
            Ok(v) => v,
            Err(e) => return eval_error("K quadrature route", e),
        };
        let psi = match functions::complete_k_psi_integral(modulus, quad_spec) {
            Ok(v) => v,
            Err(e) => return eval_error("K psi-integral route", e),
        };
        let cubic = match functions::complete_k_cubic_integral(modulus, quad_spec) {
            Ok(v) => v,
            Err(e) => return eval_error("K cubic-integral route", e),
        };
        let agm = 1.5f64.sqrt() * weierstrass::build(modulus).omega;
        let values = [series, quad, psi, cubic, agm];
        let mut diff = 0.0f64;
        for i in 0..values.len() {
            for j in (i + 1)..values.len() {
                diff = diff.max((values[i] - values[j]).abs() / series);
            }
        }
        if diff > worst {
            worst = diff;
            worst_kk = kk;
        }
        rows.push(vec![
            number(kk),
            number(series),
            number(quad),
            number(psi),
            number(cubic),
            number(agm),
            number(diff),
        ]);
    }
    let pass = worst <= args.tol;
    let config = serde_json::json!({
        "command": "k-table",
        "kk": kks,
        "tol": args.tol,
    });
    let content = render(&args.out, config, &header, &rows, worst, pass);
    finish(
        &args.out,
        &content,
        pass,
        &format!("max pairwise relative diff {worst:.3e} at kk = {worst_kk} exceeds tol {:.3e}", args.tol),
    )
}

fn cmd_eval(args: EvalArgs) -> i32 {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return usage_error("--tol must be positive and finite");
    }
    let modulus = match Modulus::new(args.kk) {
        Ok(m) => m,
        Err(e) => return usage_error(&format!("--kk {}: {e}", args.kk)),
    };
    let ctx = match Sig6Context::new(modulus) {
        Ok(c) => c,
        Err(e) => return eval_error("context construction", e),
    };
    let (start, stop, count) = match parse_u_range(&args.u_range, ctx.k()) {
        Ok(v) => v,
        Err(msg) => return usage_error(&format!("--u-range: {msg}")),
    };
    let header = ["u", "phi", "s6", "c6", "pythagorean_residual"];
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    let mut worst_u = f64::NAN;
    for u in linspace(start, stop, count) {
        let t = match functions::phi(&ctx, u) {
            Ok(v) => v,
            Err(e) => return eval_error(&format!("phi(u = {u})"), e),
        };
        // s6 and c6 are by definition the sine and cosine of phi, so a
        // single inversion serves all three columns.
        let s = t.sin();
        let c = t.cos();
        let residual = s * s + c * c - 1.0;
        if residual.abs() > worst {
            worst = residual.abs();
            worst_u = u;
        }
        rows.push(vec![
            number(u),
            number(t),
            number(s),
            number(c),
            number(residual),
        ]);
    }
    let pass = worst <= args.tol;
    let config = serde_json::json!({
        "command": "eval",
        "kk": args.kk,
        "u_range": args.u_range,
        "K": ctx.k(),
        "tol": args.tol,
    });
    let content = render(&args.out, config, &header, &rows, worst, pass);
    finish(
        &args.out,
        &content,
        pass,
        &format!("|s6^2 + c6^2 - 1| = {worst:.3e} at u = {worst_u} exceeds tol {:.3e}", args.tol),
    )
}

/// Renders an identity report in the shared row layout. `p_column`
/// prepends the sweep parameter when the grid is over p rather than x.
fn render_identity_report(
    out: &OutputArgs,
    config: serde_json::Value,
    report: &IdentityReport,
    p_grid: Option<&[f64]>,
) -> (String, bool, String) {
    let mut header: Vec<&str> = vec!["x", "xi", "lhs", "rhs", "residual"];
    if p_grid.is_some() {
        header.insert(0, "p");
    }
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    let mut worst_at = f64::NAN;
    for (i, point) in report.points.iter().enumerate() {
        let mut row = Vec::new();
        if let Some(ps) = p_grid {
            row.push(number(ps[i]));
        }
        row.extend([
            number(point.x),
            number(point.xi),
            number(point.lhs),
            number(point.rhs),
            number(point.residual),
        ]);
        if point.residual.abs() > worst {
            worst = point.residual.abs();
            worst_at = point.x;
        }
        rows.push(row);
    }
    let content = render(
        out,
        config,
        &header,
        &rows,
        report.max_relative_residual,
        report.pass,
    );
    let note = format!(
        "worst relative residual {worst:.3e} at x = {worst_at}"
    );
    (content, report.pass, note)
}

fn cmd_verify_identity(args: VerifyIdentityArgs) -> i32 {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return usage_error("--tol must be positive and finite");
    }
    let (start, stop, count) = match parse_grid_expr(&args.x_grid) {
        Ok(v) => v,
        Err(msg) => return usage_error(&format!("--x-grid: {msg}")),
    };
    let grid = linspace(start, stop, count);
    let report = match identities::verify_sextic_identity(&grid, SeriesSpec::default(), args.tol)
    {
        Ok(r) => r,
        Err(crate::Error::Domain { what, value, expected }) => {
            return usage_error(&format!(
                "--x-grid: {what} = {value} outside {expected}"
            ))
        }
        Err(e) => return eval_error("identity sweep", e),
    };
    let config = serde_json::json!({
        "command": "verify-identity",
        "x_grid": args.x_grid,
        "tol": args.tol,
    });
    let (content, pass, note) = render_identity_report(&args.out, config, &report, None);
    finish(&args.out, &content, pass, &note)
}

fn cmd_verify_bbg(args: VerifyBbgArgs) -> i32 {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return usage_error("--tol must be positive and finite");
    }
    let (start, stop, count) = match parse_grid_expr(&args.p_grid) {
        Ok(v) => v,
        Err(msg) => return usage_error(&format!("--p-grid: {msg}")),
    };
    let grid = linspace(start, stop, count);
    let which = match args.which {
        Which::Theorem => BbgParametrization::Theorem,
        Which::Corollary => BbgParametrization::Corollary,
    };
    let report = match identities::verify_bbg(&grid, which, SeriesSpec::default(), args.tol) {
        Ok(r) => r,
        Err(crate::Error::Domain { what, value, expected }) => {
            return usage_error(&format!(
                "--p-grid: {what} = {value} outside {expected}"
            ))
        }
        Err(e) => return eval_error("parametrization sweep", e),
    };
    let config = serde_json::json!({
        "command": "verify-bbg",
        "p_grid": args.p_grid,
        "which": match which {
            BbgParametrization::Theorem => "theorem",
            BbgParametrization::Corollary => "corollary",
        },
        "tol": args.tol,
    });
    let (content, pass, note) =
        render_identity_report(&args.out, config, &report, Some(&grid));
    finish(&args.out, &content, pass, &note)
}

fn cmd_roots(args: RootsArgs) -> i32 {
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return usage_error("--tol must be positive and finite");
    }
    let kks = match resolve_kk_list(args.kk, &args.kk_grid) {
        Ok(v) => v,
        Err(msg) => return usage_error(&msg),
    };
    let header = [
        "kk",
        "g2",
        "g3",
        "delta",
        "e1",
        "e2",
        "e3",
        "omega",
        "root_sum_residual",
        "midpoint_residual",
    ];
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    let mut worst_kk = f64::NAN;
    for kk in kks.iter().copied() {
        let modulus = match Modulus::new(kk) {
            Ok(m) => m,
            Err(e) => return usage_error(&format!("--kk {kk}: {e}")),
        };
        let data = weierstrass::build(modulus);
        let root_sum = (data.e1 + data.e2 + data.e3).abs();
        let midpoint = weierstrass::midpoint_relation_check(&data);
        let row_worst = root_sum.max(midpoint);
        if row_worst > worst {
            worst = row_worst;
            worst_kk = kk;
        }
        rows.push(vec![
            number(kk),
            number(data.g2),
            number(data.g3),
            number(data.delta),
            number(data.e1),
            number(data.e2),
            number(data.e3),
            number(data.omega),
            number(root_sum),
            number(midpoint),
        ]);
    }
    let pass = worst <= args.tol;
    let config = serde_json::json!({
        "command": "roots",
        "kk": kks,
        "tol": args.tol,
    });
    let content = render(&args.out, config, &header, &rows, worst, pass);
    finish(
        &args.out,
        &content,
        pass,
        &format!("max structural residual {worst:.3e} at kk = {worst_kk} exceeds tol {:.3e}", args.tol),
    )
}

fn cmd_self_test(args: SelfTestArgs) -> i32 {
    let results = selftest::run_all();
    let header = ["id", "name", "worst_ratio", "pass"];
    let mut rows = Vec::new();
    let mut worst = 0.0f64;
    let mut worst_name = "";
    let mut worst_detail = String::new();
    let mut pass = true;
    for r in &results {
        if r.worst_ratio > worst || !r.worst_ratio.is_finite() {
            worst = r.worst_ratio;
            worst_name = r.name;
            worst_detail = r.detail.clone();
        }
        pass &= r.pass;
        let mut row = vec![
            serde_json::json!(r.id),
            serde_json::json!(r.name),
            number(r.worst_ratio),
            serde_json::json!(r.pass),
        ];
        if args.out.format == Format::Json {
            row.push(serde_json::json!(r.detail));
        }
        rows.push(row);
    }
    let header_json = ["id", "name", "worst_ratio", "pass", "detail"];
    let config = serde_json::json!({ "command": "self-test" });
    let content = match args.out.format {
        Format::Csv => render(&args.out, config, &header, &rows, worst, pass),
        Format::Json => render(&args.out, config, &header_json, &rows, worst, pass),
    };
    finish(
        &args.out,
        &content,
        pass,
        &format!("criterion '{worst_name}' at ratio {worst:.3e}: {worst_detail}"),
    )
}
