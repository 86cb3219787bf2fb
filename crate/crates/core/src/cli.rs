//! The `tsynth` command line, callable in-process.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::op_order;
use crate::combinatorial::{
    backtrack_run, greedy_run, BacktrackConfig, DegreeInterval, SuccessorTable,
};
use crate::dnf::Dnf;
use crate::harness::{self, Algorithm, ExperimentConfig};
use crate::lp::{synthesize_lp, weight_program};
use crate::lpb::Lpb;
use crate::oracle::{TruthTable, DEFAULT_ORACLE_CAP};
use crate::point::Point;
use crate::synthesis::SynthesisResult;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tsynth",
    version,
    about = "Threshold synthesis for positive DNFs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Synthesize an LPB for a DNF file
    Synth(SynthArgs),
    /// Write random threshold instances as paired .lpb/.dnf files
    Gen(GenArgs),
    /// Run engines on random instances and write a CSV
    Experiment(ExperimentArgs),
    /// Compare a DNF and an LPB on all points
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Lp,
    Greedy,
    Backtrack,
}

#[derive(Args, Debug)]
struct SynthArgs {
    #[arg(long, value_enum, default_value = "lp")]
    algo: Algo,
    /// Check the result against the truth table
    #[arg(long)]
    verify: bool,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Successor table with intervals as CSV
    #[arg(long, value_name = "PATH")]
    dump_table: Option<PathBuf>,
    /// Successor table as Graphviz
    #[arg(long, value_name = "PATH")]
    dump_dot: Option<PathBuf>,
    /// Weight program, one row per line
    #[arg(long, value_name = "PATH")]
    dump_lp: Option<PathBuf>,
    /// Backtracking step budget
    #[arg(long, default_value_t = BacktrackConfig::default().max_steps)]
    max_steps: u64,
    /// Backtracking candidate cap factor (default: number of variables)
    #[arg(long)]
    bound_factor: Option<u64>,
    file: PathBuf,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    vars: usize,
    #[arg(long)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_coeff: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// Dimension or inclusive range such as `3..8`
    #[arg(long, value_parser = parse_range)]
    vars: (usize, usize),
    #[arg(long, default_value_t = 100)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',', default_value = "lp,greedy,backtrack")]
    algos: Vec<Algorithm>,
    #[arg(long)]
    max_coeff: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Record elapsed time (makes the CSV run-dependent)
    #[arg(long)]
    timing: bool,
    /// CSV destination; `-` for standard output
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct CheckArgs {
    dnf: PathBuf,
    lpb: PathBuf,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a == 0 || a > b {
        return Err(format!("invalid range `{s}`"));
    }
    Ok((a, b))
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult = Result<i32, Failure>;

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_SUCCESS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_ERROR
                }
            };
        }
    };
    let result = match cli.command {
        Command::Synth(a) => synth(a, out, err),
        Command::Gen(a) => gen(a, out),
        Command::Experiment(a) => experiment(a, out),
        Command::Check(a) => check(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn synth(a: SynthArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let dnf = Dnf::parse(&read(&a.file)?)?;
    let mut table: Option<SuccessorTable> = None;
    let mut intervals: Vec<Option<DegreeInterval>> = Vec::new();
    let result = match a.algo {
        Algo::Lp => synthesize_lp(&dnf)?,
        Algo::Greedy => {
            let run = greedy_run(&dnf)?;
            table = run.table;
            intervals = run.intervals;
            run.result
        }
        Algo::Backtrack => {
            let cfg = BacktrackConfig {
                bound_factor: a.bound_factor,
                max_steps: a.max_steps,
            };
            let run = backtrack_run(&dnf, &cfg)?;
            table = run.table;
            intervals = run.intervals;
            run.result
        }
    };

    if a.dump_table.is_some() || a.dump_dot.is_some() {
        let normalized = dnf.normalize();
        let table = table
            .unwrap_or_else(|| SuccessorTable::build(&op_order(&normalized).renumber(&normalized)));
        let iv = (intervals.len() == table.len()).then_some(intervals.as_slice());
        if let Some(p) = &a.dump_table {
            write_file(p, &table.to_csv(iv))?;
        }
        if let Some(p) = &a.dump_dot {
            write_file(p, &table.to_dot(iv))?;
        }
    }
    if let Some(p) = &a.dump_lp {
        match weight_program(&dnf) {
            Some(lp) => write_file(p, &lp.to_string())?,
            None => writeln!(err, "warning: no weight program, the input is not regular")?,
        }
    }

    match result {
        SynthesisResult::Success(s) => {
            writeln!(out, "{}", s.lpb)?;
            if let Some(i) = s.interval {
                writeln!(out, "interval {i}")?;
            }
            if a.verify {
                if dnf.num_vars() > a.oracle_cap {
                    writeln!(
                        err,
                        "warning: verification skipped, {} variables exceed the oracle cap {}",
                        dnf.num_vars(),
                        a.oracle_cap
                    )?;
                } else if let Some(p) = difference(&dnf, &s.lpb, a.oracle_cap)? {
                    writeln!(err, "error: verification failed at {p}")?;
                    return Ok(EXIT_ERROR);
                } else {
                    writeln!(out, "verified")?;
                }
            }
            Ok(EXIT_SUCCESS)
        }
        SynthesisResult::NotThreshold(reason) => {
            writeln!(out, "not a threshold function ({reason})")?;
            Ok(EXIT_REJECTED)
        }
        SynthesisResult::Unknown(d) => {
            writeln!(out, "unknown: {d}")?;
            Ok(EXIT_UNKNOWN)
        }
    }
}

fn difference(dnf: &Dnf, lpb: &Lpb, cap: usize) -> Result<Option<Point>, Failure> {
    if dnf.num_vars() != lpb.num_vars() {
        return Err(Failure(format!(
            "dimension mismatch: DNF has {} variables, LPB has {}",
            dnf.num_vars(),
            lpb.num_vars()
        )));
    }
    let lhs = TruthTable::of_dnf(dnf, cap)?;
    let rhs = TruthTable::of_lpb(lpb, cap)?;
    Ok(lhs
        .first_difference(&rhs)
        .map(|m| Point::from_mask(m, dnf.num_vars())))
}

fn gen(a: GenArgs, out: &mut dyn Write) -> CliResult {
    if a.vars == 0 {
        return Err(Failure("--vars must be at least 1".into()));
    }
    fs::create_dir_all(&a.out).map_err(|e| Failure(format!("{}: {e}", a.out.display())))?;
    let max_coeff = a
        .max_coeff
        .unwrap_or_else(|| harness::default_max_coeff(a.vars));
    for i in 0..a.count {
        let seed = harness::instance_seed(a.seed, a.vars, i);
        let (lpb, dnf) = harness::random_instance(a.vars, seed, max_coeff)?;
        let stem = a.out.join(format!("m{:02}_{i:05}", a.vars));
        write_file(&stem.with_extension("lpb"), &format!("{lpb}\n"))?;
        write_file(&stem.with_extension("dnf"), &dnf.to_string())?;
    }
    writeln!(
        out,
        "wrote {} instance pairs to {}",
        a.count,
        a.out.display()
    )?;
    Ok(EXIT_SUCCESS)
}

fn experiment(a: ExperimentArgs, out: &mut dyn Write) -> CliResult {
    let cfg = ExperimentConfig {
        vars: a.vars.0..=a.vars.1,
        count: a.count,
        seed: a.seed,
        algorithms: a.algos,
        max_coeff: a.max_coeff,
        oracle_cap: a.oracle_cap,
        timing: a.timing,
        ..Default::default()
    };
    let records = harness::run_experiment(&cfg);
    if a.out.as_os_str() == "-" {
        harness::write_csv(&records, &mut *out)?;
    } else {
        let file =
            fs::File::create(&a.out).map_err(|e| Failure(format!("{}: {e}", a.out.display())))?;
        harness::write_csv(&records, std::io::BufWriter::new(file))?;
        for s in harness::summarize(&records) {
            writeln!(out, "{s}")?;
        }
    }
    Ok(EXIT_SUCCESS)
}

fn check(a: CheckArgs, out: &mut dyn Write) -> CliResult {
    let dnf = Dnf::parse(&read(&a.dnf)?)?;
    let lpb: Lpb = read(&a.lpb)?.parse()?;
    match difference(&dnf, &lpb, a.oracle_cap)? {
        None => {
            writeln!(out, "equivalent")?;
            Ok(EXIT_SUCCESS)
        }
        Some(p) => {
            writeln!(out, "not equivalent: differ at {p}")?;
            Ok(EXIT_REJECTED)
        }
    }
}
