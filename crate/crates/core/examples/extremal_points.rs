//! Minimal true points, maximal false points, and the weight program
//! built from them.

use std::io::{self, Write};

use threshold_synth::extremal::{brute_force_extremal, extremal_sets};
use threshold_synth::lp::{build_lp, rationals_to_integer_lpb, solve_lp, LpOutcome};
use threshold_synth::{op_order, Dnf};

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    let d = Dnf::from_clauses(4, &[&[1, 2][..], &[1, 3, 4], &[2, 3, 4]]).unwrap();
    let order = op_order(&d);
    let r = order.renumber(&d);
    writeln!(out, "{}  (order {:?})", r.formula(), order.sequence())?;

    let sets = extremal_sets(&r).expect("regular in pattern order");
    assert_eq!(sets, brute_force_extremal(&r, 20).unwrap());
    for p in &sets.mtps {
        writeln!(out, "  true  {p}")?;
    }
    for p in &sets.mfps {
        writeln!(out, "  false {p}")?;
    }

    let lp = build_lp(&sets.mtps, &sets.mfps, r.num_vars());
    write!(out, "{lp}")?;
    if let LpOutcome::Feasible(x) = solve_lp(&lp) {
        let shown: Vec<String> = x.iter().map(|v| v.to_string()).collect();
        writeln!(out, "  solution a1..a4, d = {}", shown.join(", "))?;
        writeln!(
            out,
            "  as integers: {}",
            rationals_to_integer_lpb(&x, r.num_vars()).unwrap()
        )?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
