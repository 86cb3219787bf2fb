//! Non-threshold inputs: the regularity pre-check and the infeasible
//! weight program.

use std::io::{self, Write};

use threshold_synth::{greedy_synthesize, synthesize_lp, Clause, Dnf, Outcome};

fn monotone_functions(m: usize) -> impl Iterator<Item = Dnf> {
    let points = 1u64 << m;
    (0..1u64 << points)
        .filter(move |&t| {
            (0..points).all(|p| (0..m).all(|b| t >> p & 1 == 0 || t >> (p | 1 << b) & 1 == 1))
        })
        .map(move |t| {
            let clauses = (0..points)
                .filter(|&p| t >> p & 1 == 1)
                .map(Clause::from_mask)
                .collect();
            Dnf::new(m, clauses).unwrap().normalize()
        })
}

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    let pairs = Dnf::from_clauses(4, &[&[1, 2], &[3, 4]]).unwrap();
    writeln!(out, "{}", pairs.formula())?;
    writeln!(out, "  lp:     {:?}", synthesize_lp(&pairs).unwrap())?;
    writeln!(
        out,
        "  greedy: {:?}",
        greedy_synthesize(&pairs).unwrap().outcome()
    )?;

    let mut rejected = Vec::new();
    let mut total = 0;
    for f in monotone_functions(4) {
        total += 1;
        if synthesize_lp(&f).unwrap().outcome() == Outcome::NotThreshold {
            rejected.push(f);
        }
    }
    writeln!(
        out,
        "{} of {total} monotone functions of 4 variables are not threshold",
        rejected.len()
    )?;
    for f in &rejected {
        writeln!(out, "  {}", f.formula())?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
