//! A small reproducible experiment: random threshold DNFs from random
//! LPBs, every engine on each, summaries and CSV.

use std::io::{self, Write};

use threshold_synth::harness::{run_experiment, summarize, write_csv, Algorithm, ExperimentConfig};

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    let cfg = ExperimentConfig {
        vars: 4..=8,
        count: 40,
        seed: 2024,
        algorithms: Algorithm::ALL.to_vec(),
        ..Default::default()
    };
    let records = run_experiment(&cfg);
    for s in summarize(&records) {
        writeln!(out, "{s}")?;
    }
    let mut csv = Vec::new();
    write_csv(&records[..6], &mut csv)?;
    out.write_all(&csv)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
