//! Command-line interface: argument parsing, command dispatch and CSV
//! output.
//!
//! Exit statuses: 0 on success, 1 when a computation fails or a verify
//! tolerance is breached, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{QrError, Result};
use crate::lindblad::{evolve, steady_state};
use crate::metrics::{
    negativity, sweep_phase_diagram, witness_threshold, witness_w, SweepGrid, SweepRow,
};
use crate::protocol::{run_protocol, ProtocolConfig};
use crate::reservoir::{dressed_populations, engineered_liouvillian, ReservoirSpec};
use crate::state::{trace_distance, DensityMatrix};

/// Header of every phase-diagram CSV.
pub const SWEEP_CSV_HEADER: &str = "T,g,q0,q1,q2,q3,negativity,witness,witness_violated";

/// Number of samples written by the `evolve` command (t = 0 included).
const EVOLVE_SAMPLES: usize = 101;

/// Finite-temperature reservoir engineering simulator for two qubits.
#[derive(Debug, Parser)]
#[command(name = "qreservoir", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stationary state of the engineered reservoir: dressed populations,
    /// negativity and the collective-spin witness.
    Steady(PointArgs),
    /// Time evolution from |00><00| under the engineered reservoir,
    /// written as a CSV time series.
    Evolve(EvolveArgs),
    /// One gate-level protocol cycle, reported against the Lindblad
    /// evolution it reproduces.
    Protocol(ProtocolArgs),
    /// Phase diagram of the dressed Gibbs state over a (T, g) grid.
    Sweep(SweepArgs),
    /// Re-run the oracle-equivalence suite and report max deviations.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Qubit frequency omega0 (units with hbar = k_B = 1).
    #[arg(long, default_value_t = 1.0)]
    pub omega0: f64,
    /// Reservoir coupling rate Gamma.
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Reservoir temperature T.
    #[arg(long)]
    pub temperature: f64,
    /// Dressing coupling g.
    #[arg(long)]
    pub g: f64,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Evolution time.
    #[arg(long)]
    pub time: f64,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProtocolArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Effective Lindblad evolution time the cycle reproduces.
    #[arg(long)]
    pub time: f64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Qubit frequency omega0.
    #[arg(long, default_value_t = 1.0)]
    pub omega0: f64,
    /// Reservoir coupling rate Gamma.
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Temperature axis as min:max:count (inclusive endpoints).
    #[arg(long = "grid-T", value_parser = parse_axis)]
    pub grid_t: GridAxis,
    /// Coupling axis as min:max:count (inclusive endpoints).
    #[arg(long = "grid-g", value_parser = parse_axis)]
    pub grid_g: GridAxis,
    /// Output CSV path.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Tolerance override applied to every verification check.
    #[arg(long)]
    pub tol: Option<f64>,
}

/// One axis of a sweep grid.
#[derive(Debug, Clone, Copy)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

fn parse_axis(raw: &str) -> std::result::Result<GridAxis, String> {
    let parts: Vec<&str> = raw.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected min:max:count, got '{raw}'"));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| format!("malformed number '{}'", parts[0]))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| format!("malformed number '{}'", parts[1]))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| format!("malformed count '{}'", parts[2]))?;
    if !min.is_finite() || !max.is_finite() || min > max || count == 0 {
        return Err(format!("invalid axis '{raw}'"));
    }
    Ok(GridAxis { min, max, count })
}

/// Parse an argv-style list into a run configuration.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    RunConfig::try_parse_from(argv)
}

impl PointArgs {
    fn spec(&self) -> Result<ReservoirSpec> {
        ReservoirSpec::new(self.omega0, self.g, self.gamma, self.temperature)
    }
}

/// Render a number with 12 significant digits, deterministically.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Serialize sweep rows to the documented CSV layout.
pub fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            sig12(row.temperature),
            sig12(row.g),
            sig12(row.populations[0]),
            sig12(row.populations[1]),
            sig12(row.populations[2]),
            sig12(row.populations[3]),
            sig12(row.negativity),
            sig12(row.witness),
            u8::from(row.witness_violated),
        );
    }
    out
}

/// Parse a phase-diagram CSV back into rows.
pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>> {
    let bad = |line: &str| QrError::Io {
        path: format!("csv line '{line}'"),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, "parse failure"),
    };
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == SWEEP_CSV_HEADER => {}
        other => return Err(bad(other.unwrap_or(""))),
    }
    let mut rows = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 9 {
            return Err(bad(line));
        }
        let num = |s: &str| s.parse::<f64>().map_err(|_| bad(line));
        rows.push(SweepRow {
            temperature: num(fields[0])?,
            g: num(fields[1])?,
            populations: [
                num(fields[2])?,
                num(fields[3])?,
                num(fields[4])?,
                num(fields[5])?,
            ],
            negativity: num(fields[6])?,
            witness: num(fields[7])?,
            witness_violated: fields[8] == "1",
        });
    }
    Ok(rows)
}

fn write_text(path: &PathBuf, text: &str) -> Result<()> {
    let wrap = |source: std::io::Error| QrError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut file = std::fs::File::create(path).map_err(wrap)?;
    file.write_all(text.as_bytes()).map_err(wrap)?;
    Ok(())
}

/// Write sweep rows as CSV to the given path.
pub fn write_csv(rows: &[SweepRow], path: &PathBuf) -> Result<()> {
    write_text(path, &render_csv(rows))
}

fn evolve_series(spec: &ReservoirSpec, time: f64) -> Result<String> {
    let liouvillian = engineered_liouvillian(spec)?;
    let rho0 = DensityMatrix::basis(&[2, 2], 0);
    let mut out = String::new();
    out.push_str("t,q0,q1,q2,q3,negativity,witness\n");
    for k in 0..EVOLVE_SAMPLES {
        let t = time * k as f64 / (EVOLVE_SAMPLES - 1) as f64;
        let rho = evolve(&rho0, &liouvillian, t)?;
        let q = dressed_populations(&rho);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            sig12(t),
            sig12(q[0]),
            sig12(q[1]),
            sig12(q[2]),
            sig12(q[3]),
            sig12(negativity(&rho)?),
            sig12(witness_w(&rho, 2)?),
        );
    }
    Ok(out)
}

fn report_state(label: &str, rho: &DensityMatrix) -> Result<String> {
    let q = dressed_populations(rho);
    let neg = negativity(rho)?;
    let wit = witness_w(rho, 2)?;
    let mut out = String::new();
    let _ = writeln!(out, "{label}");
    let _ = writeln!(
        out,
        "  dressed populations: ({:.6}, {:.6}, {:.6}, {:.6})",
        q[0], q[1], q[2], q[3]
    );
    let _ = writeln!(out, "  negativity:          {neg:.6}");
    let _ = writeln!(
        out,
        "  witness W:           {wit:.6} (separable threshold {}, violated: {})",
        witness_threshold(2),
        wit < witness_threshold(2)
    );
    Ok(out)
}

/// Execute a parsed command. Returns the process exit status.
pub fn run_command(config: &RunConfig) -> Result<i32> {
    match &config.command {
        Command::Steady(args) => {
            let spec = args.spec()?;
            let steady = steady_state(&engineered_liouvillian(&spec)?)?;
            print!(
                "{}",
                report_state(
                    &format!(
                        "steady state at omega0={}, g={}, Gamma={}, T={}",
                        spec.omega0, spec.g, spec.gamma, spec.temperature
                    ),
                    &steady,
                )?
            );
            Ok(0)
        }
        Command::Evolve(args) => {
            let spec = args.point.spec()?;
            if !(args.time.is_finite() && args.time > 0.0) {
                return Err(QrError::ParameterOutOfRange {
                    name: "time",
                    value: args.time,
                });
            }
            let csv = evolve_series(&spec, args.time)?;
            match &args.out {
                Some(path) => write_text(path, &csv)?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
        Command::Protocol(args) => {
            let spec = args.point.spec()?;
            let cfg = ProtocolConfig::new(spec, args.time)?;
            let rho0 = DensityMatrix::basis(&[2, 2], 0);
            let via_protocol = run_protocol(&rho0, &cfg)?;
            let via_lindblad = evolve(&rho0, &engineered_liouvillian(&spec)?, args.time)?;
            let distance = trace_distance(&via_protocol, &via_lindblad)?;
            print!(
                "{}",
                report_state(
                    &format!("protocol output from |00> after t={}", args.time),
                    &via_protocol,
                )?
            );
            println!("  trace distance to Lindblad evolution: {distance:.3e}");
            Ok(0)
        }
        Command::Sweep(args) => {
            let spec = ReservoirSpec::new(args.omega0, 0.0, args.gamma, 0.0)?;
            let grid = SweepGrid::new(
                args.grid_t.min,
                args.grid_t.max,
                args.grid_t.count,
                args.grid_g.min,
                args.grid_g.max,
                args.grid_g.count,
            )?;
            let rows = sweep_phase_diagram(&grid, &spec)?;
            write_csv(&rows, &args.out)?;
            println!(
                "wrote {} rows to {} ({} x {} grid)",
                rows.len(),
                args.out.display(),
                grid.n_t,
                grid.n_g
            );
            Ok(0)
        }
        Command::Verify(args) => {
            if let Some(tol) = args.tol {
                if !(tol.is_finite() && tol > 0.0) {
                    return Err(QrError::ParameterOutOfRange {
                        name: "tol",
                        value: tol,
                    });
                }
            }
            let reports = crate::verify::run_all(args.tol)?;
            let mut all_passed = true;
            for report in &reports {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                all_passed &= report.passed();
                println!(
                    "[{status}] {:<55} max deviation {:.3e} (tolerance {:.1e})",
                    report.name, report.max_deviation, report.tolerance
                );
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}
