//! Parse a DNF, synthesize an LPB, and check it against the truth table.
//!
//! ```text
//! cargo run --example quickstart
//! ```

use std::io::{self, Write};

use threshold_synth::{equivalent, synthesize_lp, Dnf, Lpb, SynthesisResult};

const INPUT: &str = "\
# x1x2 | x1x3 | x1x4 | x2x3x4
p dnf 4
1 2 0
1 3 0
1 4 0
2 3 4 0
";

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    let dnf: Dnf = INPUT.parse().expect("valid DNF");
    writeln!(out, "input:  {}", dnf.formula())?;

    match synthesize_lp(&dnf).expect("small input") {
        SynthesisResult::Success(s) => {
            writeln!(out, "lpb:    {}", s.lpb)?;
            let ok = equivalent(&dnf, &s.lpb, 20).unwrap();
            writeln!(out, "equivalent: {ok}")?;
        }
        other => writeln!(out, "no lpb: {:?}", other.outcome())?,
    }

    // the other direction: an LPB expands to its prime irredundant DNF
    let lpb: Lpb = "3 2 2 1 >= 4".parse().unwrap();
    let back = lpb.to_dnf().unwrap();
    writeln!(out, "{lpb}  =  {}", back.formula())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
