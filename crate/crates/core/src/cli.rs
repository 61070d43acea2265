//! `derive`, `solve` and `verify` subcommands. Output goes to the supplied
//! writers so the commands can be driven from tests.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::config::{ConfigDocument, OutputFormat};
use crate::equation::{Equation, IntegerSolution, Solution};
use crate::identity::evaluate_identity;
use crate::pipeline::{derive_curves, run, EmittedSolution, PipelineReport, SolutionSource};

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const CONFIG: i32 = 2;
    pub const CURVE: i32 = 3;
    pub const NO_SOLUTIONS: i32 = 4;
    pub const VERIFY_FAILED: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "quintic-cubic", version, about = "Integer identities between sums of fifth powers and cubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the quartic, any translation, and the Weierstrass models.
    Derive {
        config: PathBuf,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Generate verified integer solutions.
    Solve {
        config: PathBuf,
        /// Multiples n = 1..=N of each seed.
        #[arg(long)]
        family_size: Option<u32>,
        /// Height bound for the rational point search.
        #[arg(long)]
        height: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Re-check identities (solve output in either format, or plain lines).
    Verify { file: PathBuf },
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli.command, out, err),
        Err(e) => {
            let code = if e.use_stderr() { exit::CONFIG } else { exit::OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            code
        }
    }
}

pub fn run_command(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Derive { config, format } => cmd_derive(config, *format, out, err),
        Command::Solve { config, family_size, height, format } => {
            cmd_solve(config, *family_size, *height, *format, out, err)
        }
        Command::Verify { file } => cmd_verify(file, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        exit::IO
    })
}

fn load_config(path: &Path, err: &mut dyn Write) -> io::Result<Option<ConfigDocument>> {
    match ConfigDocument::load(path) {
        Ok(doc) => Ok(Some(doc)),
        Err(e) => {
            writeln!(err, "error: {}: {e}", path.display())?;
            writeln!(err, "usage: quintic-cubic solve <config.toml>; see --help")?;
            Ok(None)
        }
    }
}

#[derive(Serialize)]
struct DeriveRecord<'a> {
    quartic: [String; 5],
    search_points: Option<Vec<[String; 2]>>,
    shift: Option<String>,
    working_quartic: [String; 5],
    q: Option<String>,
    cubic: Option<[String; 5]>,
    completed: Option<[String; 5]>,
    discriminant: Option<String>,
    error: Option<&'a str>,
}

fn strings<const N: usize, T: ToString>(xs: [&T; N]) -> [String; N] {
    xs.map(ToString::to_string)
}

pub fn cmd_derive(
    path: &Path,
    format: Option<OutputFormat>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let Some(doc) = load_config(path, err)? else { return Ok(exit::CONFIG) };
    let config = match doc.pipeline_config() {
        Ok(c) => c,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(exit::CONFIG);
        }
    };
    let stages = match derive_curves(&config) {
        Ok(s) => s,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(exit::CONFIG);
        }
    };
    let bridge = stages.bridge.as_ref().ok();
    let completed = stages.completion().map(|c| c.target);
    let failure = stages.bridge.as_ref().err().map(ToString::to_string);

    match format.unwrap_or(doc.format) {
        OutputFormat::Records => {
            let record = DeriveRecord {
                quartic: strings(stages.quartic.coefficients()),
                search_points: stages
                    .search
                    .as_ref()
                    .map(|s| s.points.iter().map(|p| [p.t.to_string(), p.v.to_string()]).collect()),
                shift: stages.shift.as_ref().map(ToString::to_string),
                working_quartic: strings(stages.working_quartic.coefficients()),
                q: bridge.map(|b| b.q().to_string()),
                cubic: bridge.map(|b| strings(b.cubic().coefficients())),
                completed: completed.as_ref().map(|c| strings(c.coefficients())),
                discriminant: bridge.map(|b| b.cubic().discriminant().to_string()),
                error: failure.as_deref(),
            };
            writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))?;
        }
        OutputFormat::Human => {
            writeln!(out, "quartic:      {}", stages.quartic)?;
            if let Some(search) = &stages.search {
                let pts: Vec<String> = search.points.iter().map(ToString::to_string).collect();
                writeln!(out, "points (height <= {}): {}", search.height, pts.join(" "))?;
            }
            match &stages.shift {
                Some(s) => {
                    writeln!(out, "translation:  t = T + {s}")?;
                    writeln!(out, "translated:   {}", stages.working_quartic)?;
                }
                None => writeln!(out, "translation:  none")?,
            }
            if let Some(b) = bridge {
                writeln!(out, "q:            {}", b.q())?;
                writeln!(out, "cubic:        {}", b.cubic())?;
                writeln!(out, "completed:    {}", completed.as_ref().expect("bridge present"))?;
                writeln!(out, "discriminant: {}", b.cubic().discriminant())?;
            }
        }
    }
    if let Err(e) = &stages.bridge {
        writeln!(err, "error: {e}")?;
        return Ok(exit::CURVE);
    }
    Ok(exit::OK)
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(|_| D::Error::custom(format!("not an integer: {x:?}"))))
            .collect()
    }
}

/// One line of `solve --format records` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub kind: String,
    pub equation: Equation,
    #[serde(with = "decimal")]
    pub quintic_values: Vec<BigInt>,
    #[serde(with = "decimal")]
    pub cubic_values: Vec<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default)]
    pub t: String,
    #[serde(default)]
    pub v: String,
    #[serde(default)]
    pub mu: String,
    #[serde(default)]
    pub mu_minimal: bool,
    #[serde(default)]
    pub identity: String,
}

impl SolutionRecord {
    pub fn new(s: &EmittedSolution) -> Self {
        let (seed, n) = match s.source {
            SolutionSource::Multiple { seed, n } => (Some(seed), Some(n)),
            SolutionSource::Search => (None, None),
        };
        SolutionRecord {
            kind: "solution".into(),
            equation: s.solution.equation.clone(),
            quintic_values: s.solution.quintic_values.clone(),
            cubic_values: s.solution.cubic_values.clone(),
            seed,
            n,
            t: s.t.to_string(),
            v: s.v.to_string(),
            mu: s.mu.to_string(),
            mu_minimal: s.mu_minimal,
            identity: s.solution.to_string(),
        }
    }

    pub fn solution(&self) -> IntegerSolution {
        Solution::checked(self.quintic_values.clone(), self.cubic_values.clone(), self.equation.clone())
    }
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    kind: &'static str,
    solutions: usize,
    seeds: usize,
    diagnostics: usize,
    halt: Option<&'a str>,
}

fn describe_source(s: &EmittedSolution) -> String {
    let mu = if s.mu_minimal { s.mu.to_string() } else { format!("{} (not minimal)", s.mu) };
    let head = match &s.source {
        SolutionSource::Multiple { seed, n } => format!("seed {seed}, n = {n}"),
        SolutionSource::Search => "search point".to_string(),
    };
    format!("# {head}: t = {}, v = {}, mu = {mu}", s.t, s.v)
}

fn print_report(report: &PipelineReport, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    let halt = report.halt.as_ref().map(ToString::to_string);
    match format {
        OutputFormat::Records => {
            for s in &report.solutions {
                writeln!(out, "{}", serde_json::to_string(&SolutionRecord::new(s)).expect("serializable"))?;
            }
            let summary = SummaryRecord {
                kind: "summary",
                solutions: report.solutions.len(),
                seeds: report.seeds.len(),
                diagnostics: report.diagnostics.len(),
                halt: halt.as_deref(),
            };
            writeln!(out, "{}", serde_json::to_string(&summary).expect("serializable"))?;
        }
        OutputFormat::Human => {
            writeln!(out, "# quartic: {}", report.quartic)?;
            if let Some(shift) = &report.shift {
                writeln!(out, "# translation: t = T + {shift}")?;
            }
            if let Some(b) = &report.bridge {
                writeln!(out, "# cubic: {}", b.cubic())?;
            }
            for (i, seed) in report.seeds.iter().enumerate() {
                writeln!(out, "# seed {i}: {} -> {}", seed.origin, seed.point)?;
            }
            for s in &report.solutions {
                writeln!(out, "{}", describe_source(s))?;
                writeln!(out, "{}", s.solution)?;
            }
            writeln!(
                out,
                "# {} solutions from {} seeds, {} diagnostics",
                report.solutions.len(),
                report.seeds.len(),
                report.diagnostics.len()
            )?;
        }
    }
    Ok(())
}

pub fn cmd_solve(
    path: &Path,
    family_size: Option<u32>,
    height: Option<u64>,
    format: Option<OutputFormat>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let Some(mut doc) = load_config(path, err)? else { return Ok(exit::CONFIG) };
    if let Some(n) = family_size {
        doc.family_size = n;
    }
    if let Some(h) = height {
        doc.search_height = h;
    }
    let format = format.unwrap_or(doc.format);
    let report = match doc.pipeline_config().map_err(|e| e.to_string()).and_then(|c| run(&c).map_err(|e| e.to_string())) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(exit::CONFIG);
        }
    };
    print_report(&report, format, out)?;
    for d in &report.diagnostics {
        writeln!(err, "warning: {d}")?;
    }
    if let Some(halt) = &report.halt {
        writeln!(err, "error: {halt}")?;
    }
    if report.solutions.iter().any(|s| !s.solution.is_verified()) {
        return Ok(exit::VERIFY_FAILED);
    }
    Ok(match &report.halt {
        _ if !report.solutions.is_empty() => exit::OK,
        Some(h) if h.is_curve_construction() => exit::CURVE,
        _ => exit::NO_SOLUTIONS,
    })
}

enum LineCheck {
    Holds(Rational),
    Differs(Rational, Rational),
    Malformed(String),
    Skipped,
}

fn compare(lhs: Rational, rhs: Rational) -> LineCheck {
    if lhs == rhs {
        LineCheck::Holds(lhs)
    } else {
        LineCheck::Differs(lhs, rhs)
    }
}

fn check_line(line: &str) -> LineCheck {
    if line.starts_with('{') {
        let value: serde_json::Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => return LineCheck::Malformed(format!("malformed record: {e}")),
        };
        if value.get("kind").and_then(|k| k.as_str()) == Some("summary") {
            return LineCheck::Skipped;
        }
        let record: SolutionRecord = match serde_json::from_value(value) {
            Ok(r) => r,
            Err(e) => return LineCheck::Malformed(format!("malformed record: {e}")),
        };
        return match record.solution().sides() {
            Ok((l, r)) => compare(l, r),
            Err(e) => LineCheck::Malformed(e.to_string()),
        };
    }
    match evaluate_identity(line) {
        Ok((l, r)) => compare(l, r),
        Err(e) => LineCheck::Malformed(format!("cannot parse identity: {e}")),
    }
}

/// Checks every identity in a file: JSON records from `solve --format
/// records`, or printed identities; blank lines and `#` comments are skipped.
pub fn cmd_verify(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            return Ok(exit::CONFIG);
        }
    };
    let (mut passed, mut failed, mut malformed) = (0usize, 0usize, 0usize);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let n = i + 1;
        match check_line(line) {
            LineCheck::Skipped => {}
            LineCheck::Holds(v) => {
                passed += 1;
                writeln!(out, "line {n}: pass  lhs = rhs = {v}")?;
            }
            LineCheck::Differs(l, r) => {
                failed += 1;
                writeln!(out, "line {n}: FAIL  lhs = {l}, rhs = {r}")?;
            }
            LineCheck::Malformed(why) => {
                malformed += 1;
                writeln!(out, "line {n}: ERROR {why}")?;
            }
        }
    }
    if passed + failed + malformed == 0 {
        writeln!(err, "warning: {} contains no identities", path.display())?;
    }
    writeln!(out, "{passed} passed, {failed} failed, {malformed} unreadable")?;
    Ok(if failed > 0 {
        exit::VERIFY_FAILED
    } else if malformed > 0 {
        exit::CONFIG
    } else {
        exit::OK
    })
}
