//! Three small functions through all three engines.

use std::io::{self, Write};

use threshold_synth::{
    backtrack_synthesize, equivalent, greedy_synthesize, synthesize_lp, BacktrackConfig, Dnf,
    SynthesisResult,
};

fn dnf(m: usize, clauses: &[&[usize]]) -> Dnf {
    Dnf::from_clauses(m, clauses).unwrap()
}

pub fn cases() -> Vec<(&'static str, Dnf)> {
    vec![
        (
            "single block",
            dnf(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]]),
        ),
        ("equidistant", dnf(4, &[&[1, 2], &[1, 3, 4], &[2, 3, 4]])),
        (
            "five variables",
            dnf(
                5,
                &[
                    &[1, 2],
                    &[1, 3],
                    &[1, 4],
                    &[1, 5],
                    &[2, 3],
                    &[2, 4],
                    &[3, 4, 5],
                ],
            ),
        ),
    ]
}

fn describe(dnf: &Dnf, r: &SynthesisResult) -> String {
    match r {
        SynthesisResult::Success(s) => {
            let mut line = s.lpb.to_string();
            if let Some(i) = s.interval {
                line += &format!("  degrees {i}");
            }
            if !equivalent(dnf, &s.lpb, 20).unwrap() {
                line += "  (NOT EQUIVALENT)";
            }
            line
        }
        SynthesisResult::NotThreshold(why) => format!("not threshold ({why})"),
        SynthesisResult::Unknown(d) => format!("unknown: {d}"),
    }
}

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    for (name, d) in cases() {
        writeln!(out, "{name}: {}", d.formula())?;
        let lp = synthesize_lp(&d).unwrap();
        let greedy = greedy_synthesize(&d).unwrap();
        let back = backtrack_synthesize(&d, &BacktrackConfig::default()).unwrap();
        writeln!(out, "  lp         {}", describe(&d, &lp))?;
        writeln!(out, "  greedy     {}", describe(&d, &greedy))?;
        writeln!(out, "  backtrack  {}", describe(&d, &back))?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
