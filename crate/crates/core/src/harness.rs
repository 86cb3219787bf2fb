//! Random threshold instances and cross-engine experiments.

use std::fmt;
use std::io;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorial::{backtrack_run, greedy_run, BacktrackConfig};
use crate::dnf::Dnf;
use crate::error::Result;
use crate::lp::synthesize_lp;
use crate::lpb::{Lpb, DEFAULT_CLAUSE_CAP};
use crate::oracle::{equivalent, DEFAULT_ORACLE_CAP};
use crate::synthesis::SynthesisResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Lp,
    Greedy,
    Backtrack,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Lp, Algorithm::Greedy, Algorithm::Backtrack];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Lp => "lp",
            Algorithm::Greedy => "greedy",
            Algorithm::Backtrack => "backtrack",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lp" => Ok(Algorithm::Lp),
            "greedy" => Ok(Algorithm::Greedy),
            "backtrack" => Ok(Algorithm::Backtrack),
            _ => Err(format!(
                "unknown algorithm `{s}` (expected lp, greedy or backtrack)"
            )),
        }
    }
}

/// `min(2^m, 1000)`.
pub fn default_max_coeff(m: usize) -> u64 {
    if m >= 10 {
        1000
    } else {
        (1u64 << m).min(1000)
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of instance `index` at dimension `m`, independent of run order.
pub fn instance_seed(seed: u64, m: usize, index: u64) -> u64 {
    splitmix(splitmix(splitmix(seed) ^ m as u64) ^ index)
}

/// Coefficients uniform in `1..=max_coeff`, sorted descending, and a
/// degree uniform in `1..=sum`, so the function is never constant.
pub fn random_lpb(m: usize, seed: u64, max_coeff: u64) -> Lpb {
    assert!(m >= 1 && max_coeff >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coefficients: Vec<u64> = (0..m).map(|_| rng.random_range(1..=max_coeff)).collect();
    coefficients.sort_unstable_by(|a, b| b.cmp(a));
    let sum: u64 = coefficients.iter().sum();
    let degree = rng.random_range(1..=sum) as i64;
    Lpb::new(coefficients, degree).expect("dimension within limits")
}

/// A random threshold DNF with its generating LPB.
pub fn random_instance(m: usize, seed: u64, max_coeff: u64) -> Result<(Lpb, Dnf)> {
    let lpb = random_lpb(m, seed, max_coeff);
    let dnf = lpb.to_dnf_capped(DEFAULT_CLAUSE_CAP)?;
    Ok((lpb, dnf))
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub vars: RangeInclusive<usize>,
    pub count: u64,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// `None` means [`default_max_coeff`].
    pub max_coeff: Option<u64>,
    pub oracle_cap: usize,
    pub clause_cap: usize,
    pub backtrack: BacktrackConfig,
    /// Record wall-clock time per run; off keeps the output reproducible.
    pub timing: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            vars: 3..=8,
            count: 100,
            seed: 0,
            algorithms: Algorithm::ALL.to_vec(),
            max_coeff: None,
            oracle_cap: DEFAULT_ORACLE_CAP,
            clause_cap: DEFAULT_CLAUSE_CAP,
            backtrack: BacktrackConfig::default(),
            timing: false,
        }
    }
}

/// Verdict column of a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordOutcome {
    Success,
    NotThreshold,
    Unknown,
    /// The instance or the engine failed with an error.
    Error,
}

impl From<&SynthesisResult> for RecordOutcome {
    fn from(r: &SynthesisResult) -> Self {
        match r {
            SynthesisResult::Success(_) => RecordOutcome::Success,
            SynthesisResult::NotThreshold(_) => RecordOutcome::NotThreshold,
            SynthesisResult::Unknown(_) => RecordOutcome::Unknown,
        }
    }
}

/// One row of the experiment CSV.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentRecord {
    pub id: u64,
    pub m: usize,
    pub seed: u64,
    #[serde(serialize_with = "algo_name")]
    pub algo: Algorithm,
    pub outcome: RecordOutcome,
    /// Success confirmed by the truth-table oracle; empty above the cap.
    pub verified: Option<bool>,
    pub final_nodes: Option<usize>,
    pub elapsed_us: u64,
    pub backtrack_steps: Option<u64>,
}

fn algo_name<S: serde::Serializer>(a: &Algorithm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(a.as_str())
}

struct Run {
    result: SynthesisResult,
    final_nodes: Option<usize>,
    backtracks: Option<u64>,
}

fn run_algorithm(algo: Algorithm, dnf: &Dnf, cfg: &ExperimentConfig) -> Result<Run> {
    Ok(match algo {
        Algorithm::Lp => Run {
            result: synthesize_lp(dnf)?,
            final_nodes: None,
            backtracks: None,
        },
        Algorithm::Greedy => {
            let r = greedy_run(dnf)?;
            Run {
                final_nodes: r.table.as_ref().map(|t| t.final_node_count()),
                result: r.result,
                backtracks: None,
            }
        }
        Algorithm::Backtrack => {
            let r = backtrack_run(dnf, &cfg.backtrack)?;
            Run {
                final_nodes: r.table.as_ref().map(|t| t.final_node_count()),
                result: r.result,
                backtracks: Some(r.backtracks),
            }
        }
    })
}

fn run_instance(cfg: &ExperimentConfig, m: usize, index: u64) -> Vec<ExperimentRecord> {
    let seed = instance_seed(cfg.seed, m, index);
    let max_coeff = cfg.max_coeff.unwrap_or_else(|| default_max_coeff(m));
    let record =
        |algo, outcome, verified, final_nodes, elapsed_us, backtrack_steps| ExperimentRecord {
            id: index,
            m,
            seed,
            algo,
            outcome,
            verified,
            final_nodes,
            elapsed_us,
            backtrack_steps,
        };
    let lpb = random_lpb(m, seed, max_coeff);
    let dnf = match lpb.to_dnf_capped(cfg.clause_cap) {
        Ok(d) => d,
        Err(_) => {
            return cfg
                .algorithms
                .iter()
                .map(|&a| record(a, RecordOutcome::Error, None, None, 0, None))
                .collect()
        }
    };
    cfg.algorithms
        .iter()
        .map(|&algo| {
            let start = Instant::now();
            let run = run_algorithm(algo, &dnf, cfg);
            let elapsed_us = if cfg.timing {
                start.elapsed().as_micros() as u64
            } else {
                0
            };
            match run {
                Err(_) => record(algo, RecordOutcome::Error, None, None, elapsed_us, None),
                Ok(run) => {
                    let verified = (m <= cfg.oracle_cap).then(|| {
                        run.result
                            .lpb()
                            .is_some_and(|l| equivalent(&dnf, l, cfg.oracle_cap).unwrap_or(false))
                    });
                    record(
                        algo,
                        RecordOutcome::from(&run.result),
                        verified,
                        run.final_nodes,
                        elapsed_us,
                        run.backtracks,
                    )
                }
            }
        })
        .collect()
}

/// Runs every selected algorithm on `count` random instances per dimension.
/// Instances run in parallel; records come back ordered by `(m, id, algo)`
/// as listed in the config.
pub fn run_experiment(cfg: &ExperimentConfig) -> Vec<ExperimentRecord> {
    let jobs: Vec<(usize, u64)> = cfg
        .vars
        .clone()
        .flat_map(|m| (0..cfg.count).map(move |i| (m, i)))
        .collect();
    jobs.par_iter()
        .map(|&(m, i)| run_instance(cfg, m, i))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn write_csv<W: io::Write>(records: &[ExperimentRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    if records.is_empty() {
        w.write_record([
            "id",
            "m",
            "seed",
            "algo",
            "outcome",
            "verified",
            "final_nodes",
            "elapsed_us",
            "backtrack_steps",
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Per-dimension, per-algorithm counts.
#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub m: usize,
    pub algo: Algorithm,
    pub runs: usize,
    pub success: usize,
    pub not_threshold: usize,
    pub unknown: usize,
    pub errors: usize,
    pub verified: usize,
    /// Mean final-node count over runs that built a table.
    pub mean_final_nodes: Option<f64>,
}

impl Summary {
    pub fn unknown_rate(&self) -> f64 {
        if self.runs == 0 {
            0.0
        } else {
            self.unknown as f64 / self.runs as f64
        }
    }
}

pub fn summarize(records: &[ExperimentRecord]) -> Vec<Summary> {
    let mut keys: Vec<(usize, Algorithm)> = records.iter().map(|r| (r.m, r.algo)).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|(m, algo)| {
            let rs: Vec<&ExperimentRecord> = records
                .iter()
                .filter(|r| r.m == m && r.algo == algo)
                .collect();
            let count = |o: RecordOutcome| rs.iter().filter(|r| r.outcome == o).count();
            let nodes: Vec<usize> = rs.iter().filter_map(|r| r.final_nodes).collect();
            Summary {
                m,
                algo,
                runs: rs.len(),
                success: count(RecordOutcome::Success),
                not_threshold: count(RecordOutcome::NotThreshold),
                unknown: count(RecordOutcome::Unknown),
                errors: count(RecordOutcome::Error),
                verified: rs.iter().filter(|r| r.verified == Some(true)).count(),
                mean_final_nodes: (!nodes.is_empty())
                    .then(|| nodes.iter().sum::<usize>() as f64 / nodes.len() as f64),
            }
        })
        .collect()
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m={:<2} {:<9} runs={} success={} not_threshold={} unknown={} errors={} verified={}",
            self.m,
            self.algo,
            self.runs,
            self.success,
            self.not_threshold,
            self.unknown,
            self.errors,
            self.verified
        )?;
        if let Some(n) = self.mean_final_nodes {
            write!(f, " mean_final_nodes={n:.1}")?;
        }
        Ok(())
    }
}
