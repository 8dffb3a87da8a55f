//! Command-line front end behind the `trisect` binary.
//!
//! Exit codes: 0 on success, 1 when a checked property fails or a run
//! errors out, 2 on usage errors (bad flags, unknown presets, bad grids).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bodies::{validate, BodySpec, SymmetricBody};
use crate::error::{Error, Result};
use crate::render::{render_svg, Figure};
use crate::search::{
    antipodal_gap, candidate_pool, functional_quotient, h_eps_csv, lemma_floor_checks, sweep_h_eps,
    sweep_segment_trisections, verify_h_tilde_optimal, SweepGrid,
};
use crate::trisection::{
    closed_form_dm_standard, h_eps_dm, inscribed_ball_radius, max_relative_diameter_with, solve_a0,
    standard_trisection,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "trisect", version, about = "Standard trisections and the maximum relative diameter")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Seed for random bodies and jitter.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Body,
    Standard,
    Triangle,
    SweepArgmin,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// ρ, R, d(v1,v2), d_M of the standard trisection and the quotient.
    Dm {
        /// Preset name or profile file (`*.json`).
        #[arg(long)]
        body: BodySpec,
        /// Boundary samples per region for the geometric d_M.
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// Brute-force minimality sweep over segment or polyline trisections.
    Sweep {
        #[arg(long)]
        body: BodySpec,
        #[arg(long, default_value_t = 50)]
        grid_c: usize,
        #[arg(long, default_value_t = 120)]
        grid_theta: usize,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
        /// Jitter polyline mid-vertices by up to this much.
        #[arg(long)]
        perturb: Option<f64>,
    },
    /// Quotient optimality, antipodal bound and d_M floors over a body pool.
    Verify {
        /// Extra bodies to add to the pool (validated first).
        #[arg(long)]
        body: Vec<BodySpec>,
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 40)]
        h_eps: usize,
        #[arg(long, default_value_t = 1024)]
        directions: usize,
    },
    /// CSV table of the H_ε distances plus `a0=` and `dm_min=` footers.
    Heps {
        #[arg(long, visible_alias = "samples", default_value_t = 64)]
        count: usize,
    },
    /// SVG figure of a body.
    Render {
        #[arg(long)]
        body: BodySpec,
        #[arg(long, value_enum, default_value_t = What::Standard)]
        what: What,
        #[arg(long, default_value_t = 20)]
        grid_c: usize,
        #[arg(long, default_value_t = 24)]
        grid_theta: usize,
    },
    /// Constants for the named bodies.
    Table {
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
}

/// What `dm` reports for one body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DmSummary {
    pub label: String,
    pub area: f64,
    pub rho: f64,
    pub max_radius: f64,
    pub d_v1_v2: f64,
    pub dm_closed_form: f64,
    pub dm_geometric: f64,
    pub quotient: f64,
}

pub fn dm_summary(body: &SymmetricBody, samples: usize) -> Result<DmSummary> {
    let standard = standard_trisection(body)?;
    let ends = standard.endpoints();
    Ok(DmSummary {
        label: body.label().to_string(),
        area: body.area(),
        rho: inscribed_ball_radius(body),
        max_radius: body.max_radius(),
        d_v1_v2: ends[0].dist(ends[1]),
        dm_closed_form: closed_form_dm_standard(body),
        dm_geometric: max_relative_diameter_with(body, &standard, samples)?,
        quotient: functional_quotient(body),
    })
}

impl DmSummary {
    const HEADER: [&'static str; 8] =
        ["label", "area", "rho", "R", "d_v1_v2", "dm_closed_form", "dm_geometric", "quotient"];

    fn values(&self) -> [f64; 7] {
        [
            self.area,
            self.rho,
            self.max_radius,
            self.d_v1_v2,
            self.dm_closed_form,
            self.dm_geometric,
            self.quotient,
        ]
    }

    fn text(&self) -> String {
        let mut s = format!("body: {}\n", self.label);
        for (name, v) in Self::HEADER[1..].iter().zip(self.values()) {
            s.push_str(&format!("{name}: {v:.6}\n"));
        }
        s
    }
}

fn summaries_csv(rows: &[DmSummary]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Format(e.to_string());
    w.write_record(DmSummary::HEADER).map_err(io)?;
    for r in rows {
        let mut rec = vec![r.label.clone()];
        rec.extend(r.values().iter().map(|v| format!("{v:.6}")));
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Sets the rayon pool width from `TRISECT_THREADS`, if present.
pub fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("TRISECT_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("TRISECT_THREADS must be a positive integer, got {v:?}")))?;
        if n == 0 {
            return Err(Error::InvalidParameter("TRISECT_THREADS must be positive".into()));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParameter(_) | Error::Format(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn reject_format(cli: &Cli, allowed: &[Format]) -> Result<()> {
    match cli.format {
        Some(f) if !allowed.contains(&f) => Err(Error::InvalidParameter(format!(
            "format {f:?} is not available here; use one of {allowed:?}"
        ))),
        _ => Ok(()),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Dm { body, samples } => {
            reject_format(cli, &[Format::Text, Format::Json, Format::Csv])?;
            let summary = dm_summary(&body.build()?, *samples)?;
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => json(&summary)?,
                Format::Csv => summaries_csv(std::slice::from_ref(&summary))?,
                _ => summary.text(),
            };
            emit(cli, &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Sweep { body, grid_c, grid_theta, samples, perturb } => {
            reject_format(cli, &[Format::Json, Format::Text])?;
            let body = body.build()?;
            let mut grid = SweepGrid::default_for(&body, *grid_c, *grid_theta)?;
            grid.region_samples = *samples;
            grid.seed = cli.seed;
            if let Some(mag) = perturb {
                grid = grid.perturbed(*mag, cli.seed);
            }
            let report = sweep_segment_trisections(&body, &grid)?;
            let summary = format!(
                "{}: {} evaluated, {} infeasible, min d_M {:.6} (standard {:.6}), {} violations, {} floor violations\n",
                report.body_label,
                report.evaluated,
                report.infeasible,
                report.min_dm,
                report.dm_standard,
                report.violations.len(),
                report.floor_violations.len()
            );
            if cli.format == Some(Format::Text) {
                emit(cli, &summary, stdout)?;
            } else {
                emit(cli, &json(&report)?, stdout)?;
                if cli.out.is_some() {
                    stdout.write_all(summary.as_bytes())?;
                }
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Verify { body, random, h_eps, directions } => {
            reject_format(cli, &[Format::Text])?;
            verify(cli, body, *random, *h_eps, *directions, stdout, stderr)
        }
        Command::Heps { count } => {
            reject_format(cli, &[Format::Csv])?;
            let rows = sweep_h_eps(*count)?;
            let a0 = solve_a0()?;
            let mut text = h_eps_csv(&rows)?;
            text.push_str(&format!("a0={a0:.6}\ndm_min={:.6}\n", h_eps_dm(a0)?));
            emit(cli, &text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Render { body, what, grid_c, grid_theta } => {
            reject_format(cli, &[Format::Svg])?;
            let body = body.build()?;
            let svg = match what {
                What::Body => render_svg(&body, Figure::Body)?,
                What::Triangle => render_svg(&body, Figure::Triangle)?,
                What::Standard => render_svg(&body, Figure::Standard)?,
                What::SweepArgmin => {
                    let mut grid = SweepGrid::default_for(&body, *grid_c, *grid_theta)?;
                    grid.seed = cli.seed;
                    let report = sweep_segment_trisections(&body, &grid)?;
                    render_svg(&body, Figure::Trisection(&report.argmin))?
                }
            };
            emit(cli, &svg, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Table { samples } => {
            reject_format(cli, &[Format::Text, Format::Json, Format::Csv])?;
            let rows = ["triangle", "hexagon", "enneagon", "dodecagon", "reuleaux", "h_tilde"]
                .iter()
                .map(|name| dm_summary(&name.parse::<BodySpec>()?.build()?, *samples))
                .collect::<Result<Vec<_>>>()?;
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => json(&rows)?,
                Format::Csv => summaries_csv(&rows)?,
                _ => {
                    let a0 = solve_a0()?;
                    let mut s = String::new();
                    for r in &rows {
                        s.push_str(&format!(
                            "{:<10} rho {:.6}  R {:.6}  d_M {:.6}  quotient {:.6}\n",
                            r.label, r.rho, r.max_radius, r.dm_closed_form, r.quotient
                        ));
                    }
                    s.push_str(&format!("a0 {a0:.6}  min_a d_M(H_a) {:.6}\n", h_eps_dm(a0)?));
                    s
                }
            };
            emit(cli, &text, stdout)?;
            Ok(EXIT_OK)
        }
    }
}

fn verify(
    cli: &Cli,
    extra: &[BodySpec],
    random: usize,
    h_eps: usize,
    directions: usize,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let mut report = String::new();
    let mut failed = false;

    let mut pool = candidate_pool(cli.seed, h_eps, random)?;
    for spec in extra {
        let body = spec.build()?;
        let validation = validate(&body);
        let ok = validation.is_clean();
        report.push_str(&format!("{} validation: {validation}\n", if ok { "PASS" } else { "FAIL" }));
        if !ok {
            failed = true;
            writeln!(stderr, "{}", json(&validation)?.trim_end())?;
        }
        pool.push(body);
    }

    let optimality = verify_h_tilde_optimal(&pool);
    let ok = optimality.passed();
    report.push_str(&format!(
        "{} quotient >= {:.6} over {} bodies, equality only at h_tilde\n",
        if ok { "PASS" } else { "FAIL" },
        optimality.bound,
        optimality.entries.len()
    ));
    if !ok {
        failed = true;
        for entry in optimality.failures() {
            writeln!(stderr, "{}", serde_json::to_string(entry)?)?;
        }
    }

    let mut worst_gap = f64::INFINITY;
    let mut gap_failures = Vec::new();
    for body in &pool {
        let gap = antipodal_gap(body, directions)?;
        worst_gap = worst_gap.min(gap);
        if gap < -1e-6 {
            gap_failures.push((body.label().to_string(), gap));
        }
    }
    report.push_str(&format!(
        "{} antipodal gap >= -1e-6 at {directions} directions (worst {worst_gap:.6})\n",
        if gap_failures.is_empty() { "PASS" } else { "FAIL" }
    ));
    if !gap_failures.is_empty() {
        failed = true;
        writeln!(stderr, "{}", serde_json::to_string(&gap_failures)?)?;
    }

    let mut floor_failures = Vec::new();
    for body in &pool {
        let standard = standard_trisection(body)?;
        let (far, ends) = lemma_floor_checks(body, &standard)?;
        if !(far && ends) {
            floor_failures.push(body.label().to_string());
        }
    }
    report.push_str(&format!(
        "{} standard d_M >= max(R, sqrt3 rho) - 1e-6 over {} bodies\n",
        if floor_failures.is_empty() { "PASS" } else { "FAIL" },
        pool.len()
    ));
    if !floor_failures.is_empty() {
        failed = true;
        writeln!(stderr, "{}", serde_json::to_string(&floor_failures)?)?;
    }

    emit(cli, &report, stdout)?;
    Ok(if failed { EXIT_FAILURE } else { EXIT_OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("trisect").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dm_triangle_text() {
        let (code, out, _) = run_capture(&["dm", "--body", "triangle"]);
        assert_eq!(code, 0);
        assert!(out.contains("dm_closed_form: 0.877383"), "{out}");
    }

    #[test]
    fn unknown_preset_is_usage_error() {
        let (code, _, err) = run_capture(&["dm", "--body", "pentagon"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("pentagon"));
    }

    #[test]
    fn zero_angle_grid_is_usage_error() {
        let (code, _, _) = run_capture(&["sweep", "--body", "hexagon", "--grid-theta", "0"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn heps_footer() {
        let (code, out, _) = run_capture(&["heps", "--count", "16"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("a,dpx,dv12,dm\n0.000000,"));
        assert!(out.contains("a0=0.141227\n") && out.ends_with("dm_min=0.769616\n"), "{out}");
    }
}
