//! The successor table as CSV and Graphviz.
//!
//! ```text
//! cargo run --example successor_table > table.txt
//! ```

use std::io::{self, Write};

use threshold_synth::combinatorial::{greedy_run, SuccessorTable};
use threshold_synth::{op_order, Dnf};

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
    let table = SuccessorTable::build(&op_order(&d).renumber(&d));
    writeln!(
        out,
        "{} nodes, {} final (of {} points), size {} < {}",
        table.len(),
        table.final_node_count(),
        1 << d.num_vars(),
        table.size(),
        d.literal_count() * (d.num_vars() + 1)
    )?;
    for k in 0..=d.num_vars() {
        writeln!(out, "  column {k}: {} nodes", table.column(k).len())?;
    }

    let run = greedy_run(&d).unwrap();
    write!(out, "{}", table.to_csv(Some(&run.intervals)))?;
    write!(out, "{}", table.to_dot(Some(&run.intervals)))?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> io::Result<()> {
    run(&mut io::stdout().lock())
}
