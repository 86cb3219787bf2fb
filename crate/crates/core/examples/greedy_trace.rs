//! Right-to-left coefficient choices of the greedy engine, with the
//! bounds each choice had to respect.

use std::io::{self, Write};

use threshold_synth::combinatorial::greedy_run;
use threshold_synth::{Dnf, SynthesisResult};

pub fn run(out: &mut dyn Write) -> io::Result<()> {
    let d = Dnf::from_clauses(
        5,
        &[
            &[1, 2][..],
            &[1, 3],
            &[1, 4],
            &[1, 5],
            &[2, 3],
            &[2, 4],
            &[3, 4, 5],
        ],
    )
    .unwrap();
    let r = greedy_run(&d).unwrap();
    writeln!(out, "{}", d.formula())?;
    for s in &r.steps {
        let note = if s.doubled { "  (doubled first)" } else { "" };
        writeln!(
            out,
            "  {} < a{} < {}  ->  a{} = {}{note}",
            s.lower, s.index, s.upper, s.index, s.value
        )?;
    }
    if let SynthesisResult::Success(s) = &r.result {
        writeln!(out, "result {}  degrees {}", s.lpb, s.interval.unwrap())?;
    }

    let table = r.table.as_ref().unwrap();
    writeln!(
        out,
        "{} nodes, {} final",
        table.len(),
        table.final_node_count()
    )?;
    for (id, node) in table.nodes().iter().enumerate() {
        let iv = r.intervals[id].map(|i| i.to_string()).unwrap_or_default();
        writeln!(
            out,
            "  col {} {:<4} {:<30} {iv}",
            node.column,
            node.kind.as_str(),
            node.formula.formula()
        )?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
