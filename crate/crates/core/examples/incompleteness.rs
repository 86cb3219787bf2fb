//! Smallest-first choices can paint the greedy engine into a corner;
//! backtracking over larger candidates gets out of it.

use std::io::{self, Write};

use threshold_synth::combinatorial::{backtrack_run, greedy_run};
use threshold_synth::{equivalent, synthesize_lp, BacktrackConfig, Dnf, SynthesisResult};

pub fn dead_end() -> Dnf {
    Dnf::from_clauses(
        6,
        &[
            &[1, 2][..],
            &[1, 3],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 4, 5],
            &[3, 4, 5, 6],
        ],
    )
    .unwrap()
}

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    let d = dead_end();
    writeln!(out, "{}", d.formula())?;

    let greedy = greedy_run(&d).unwrap();
    for s in &greedy.steps {
        writeln!(out, "  greedy a{} = {}", s.index, s.value)?;
    }
    if let SynthesisResult::Unknown(dead) = &greedy.result {
        writeln!(out, "  greedy stops: {dead}")?;
    }

    let back = backtrack_run(&d, &BacktrackConfig::default()).unwrap();
    let lpb = back.result.lpb().expect("backtracking succeeds here");
    writeln!(
        out,
        "  backtracking: {lpb} after {} assignments, {} backtracks, equivalent: {}",
        back.steps,
        back.backtracks,
        equivalent(&d, lpb, 20).unwrap()
    )?;

    let lp = synthesize_lp(&d).unwrap();
    writeln!(out, "  lp: {}", lp.lpb().unwrap())?;

    // a budget that is too small turns the answer back into unknown
    let tight = BacktrackConfig {
        max_steps: 4,
        ..Default::default()
    };
    if let SynthesisResult::Unknown(dead) = backtrack_run(&d, &tight).unwrap().result {
        writeln!(out, "  max_steps 4: {dead}")?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
