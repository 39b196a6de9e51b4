//! Command-line front end used by the `gbit` binary.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::oracle::{max_gbits, set_max_gbits};
use crate::question::{build_lattice, enumerate_complete_set};
use crate::sim::{validate_axioms, Scenario};
use crate::system::{GbitKind, SystemKind};
use crate::verify::{run_verification, DENSE_STATE_MAX_GBITS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest system `enumerate` will list.
pub const ENUMERATE_MAX_GBITS: usize = 12;
/// Largest system `lattice` will render; triangle search is cubic in the set size.
pub const LATTICE_MAX_GBITS: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "gbit", version, about = "Question algebra, states and interrogation of qubit and rebit systems")]
pub struct Cli {
    /// Cap on gbits for dense matrix computations.
    #[arg(long, global = true, env = "GBIT_ORACLE_MAX_N")]
    pub oracle_max_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    #[arg(long, default_value = "qubit")]
    pub kind: GbitKind,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

impl SystemArgs {
    fn system(&self) -> SystemKind {
        SystemKind::new(self.kind, self.n as usize).expect("n >= 1 enforced by the parser")
    }
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the informationally complete question set.
    Enumerate {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export the compatibility lattice with parity-colored triangles.
    Lattice {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross-check the symbolic rules against the matrix oracle.
    Verify {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Shots per statistical axiom check.
        #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(1..))]
        shots: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run an interrogation scenario file.
    Simulate {
        #[arg(long)]
        scenario: PathBuf,
        /// Overrides the scenario seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the scenario shot count.
        #[arg(long)]
        shots: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

struct Usage(String);

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

fn emit(output: &OutputArgs, text: &str, out: &mut dyn Write) -> Result<(), Usage> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| usage(e.to_string())),
    }
}

fn reject_format(cmd: &str, format: Format) -> Usage {
    usage(format!("{cmd} does not support --format {}", format.to_possible_value().unwrap().get_name()))
}

fn enumerate(sys: SystemKind, output: &OutputArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    if sys.n > ENUMERATE_MAX_GBITS {
        return Err(usage(format!("enumerate supports n <= {ENUMERATE_MAX_GBITS}")));
    }
    let set = enumerate_complete_set(sys);
    let text = match output.format.unwrap_or(Format::Table) {
        Format::Table => {
            let mut text = format!("# count: {}\n", set.len());
            for q in &set {
                let _ = writeln!(text, "{q}");
            }
            text
        }
        Format::Json => serde_json::to_string_pretty(&set.to_json()).unwrap() + "\n",
        f => return Err(reject_format("enumerate", f)),
    };
    emit(output, &text, out)?;
    Ok(EXIT_OK)
}

fn lattice(sys: SystemKind, output: &OutputArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    if sys.n > LATTICE_MAX_GBITS {
        return Err(usage(format!("lattice rendering supports n <= {LATTICE_MAX_GBITS}")));
    }
    let g = build_lattice(sys);
    let text = match output.format.unwrap_or(Format::Dot) {
        Format::Dot => g.to_dot(),
        Format::Json => serde_json::to_string_pretty(&g.to_json()).unwrap() + "\n",
        Format::Table => {
            let mut text = format!("# vertices: {} edges: {} triangles: {}\n", g.vertices().len(), g.edges().len(), g.triangles().len());
            for t in g.triangles() {
                let [a, b, c] = t.vertices.map(|v| g.vertices()[v].to_string());
                let _ = writeln!(text, "{a:<8} {b:<8} {c:<8} {}", t.parity.color());
            }
            text
        }
    };
    emit(output, &text, out)?;
    Ok(EXIT_OK)
}

fn verify(sys: SystemKind, seed: u64, shots: u64, output: &OutputArgs, out: &mut dyn Write) -> Result<i32, Usage> {
    let report = run_verification(sys, seed).map_err(|e| usage(e.to_string()))?;
    let axioms = if sys.n <= DENSE_STATE_MAX_GBITS {
        Some(validate_axioms(sys, shots, seed).map_err(|e| usage(e.to_string()))?)
    } else {
        None
    };
    let passed = report.all_passed() && axioms.as_ref().is_none_or(|a| a.all_passed());
    let text = match output.format.unwrap_or(Format::Table) {
        Format::Table => format!(
            "# {sys}, seed {seed}\n{}\n{}\noverall: {}\n",
            report.to_table(),
            match &axioms {
                Some(a) => a.to_table(),
                None => format!("axiom and state checks skipped above {DENSE_STATE_MAX_GBITS} gbits\n"),
            },
            if passed { "pass" } else { "FAIL" }
        ),
        Format::Json => {
            let value = serde_json::json!({ "passed": passed, "oracle": report, "axioms": axioms });
            serde_json::to_string_pretty(&value).unwrap() + "\n"
        }
        f => return Err(reject_format("verify", f)),
    };
    emit(output, &text, out)?;
    Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn simulate(
    path: &PathBuf,
    seed: Option<u64>,
    shots: Option<u64>,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> Result<i32, Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut scenario =
        Scenario::from_json(&text).map_err(|e| usage(format!("malformed scenario {}: {e}", path.display())))?;
    if let Some(seed) = seed {
        scenario.seed = seed;
    }
    if let Some(shots) = shots {
        scenario.shots = shots;
        if let Some(t) = scenario.tomography.as_mut() {
            t.shots_per_question = shots;
        }
    }
    let sys = scenario.system().map_err(|e| usage(e.to_string()))?;
    if sys.n > max_gbits() {
        return Err(usage(format!("{} gbits exceeds the dense-matrix cap of {}", sys.n, max_gbits())));
    }
    let outcome = scenario.run().map_err(|e| usage(format!("scenario {}: {e}", path.display())))?;

    let mut lines = String::new();
    for t in &outcome.transcripts {
        lines += &(serde_json::to_string(t).unwrap() + "\n");
    }
    if let Some(report) = &outcome.tomography {
        lines += &report.to_json_lines();
    }

    let mut summary = String::new();
    if !outcome.transcripts.is_empty() {
        let _ = writeln!(summary, "# {} shots, seed {}", outcome.transcripts.len(), scenario.seed);
        let _ = writeln!(summary, "{:<6} {:<12} {:>10} {:>10}", "step", "question", "yes", "no");
        for (step, q) in scenario.script.iter().enumerate() {
            let yes = outcome.transcripts.iter().filter(|t| t.records[step].answer).count();
            let _ = writeln!(summary, "{:<6} {:<12} {:>10} {:>10}", step, q, yes, outcome.transcripts.len() - yes);
        }
    }
    if let Some(report) = &outcome.tomography {
        summary += &report.to_table();
    }

    match (output.format.unwrap_or(Format::Json), &output.out) {
        (Format::Json, Some(_)) => {
            emit(output, &lines, out)?;
            out.write_all(summary.as_bytes()).map_err(|e| usage(e.to_string()))?;
        }
        (Format::Json, None) => emit(output, &lines, out)?,
        (Format::Table, _) => emit(output, &summary, out)?,
        (f, _) => return Err(reject_format("simulate", f)),
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if let Some(cap) = cli.oracle_max_n {
        set_max_gbits(cap);
    }
    let result = match &cli.command {
        Command::Enumerate { sys, output } => enumerate(sys.system(), output, out),
        Command::Lattice { sys, output } => lattice(sys.system(), output, out),
        Command::Verify { sys, seed, shots, output } => verify(sys.system(), *seed, *shots, output, out),
        Command::Simulate { scenario, seed, shots, output } => simulate(scenario, *seed, *shots, output, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
