use crate::dnf::Dnf;
use crate::error::Result;
use crate::synthesis::SynthesisResult;

use super::interval::{DegreeInterval, ExtInt};
use super::solve::{classify, dead_end, prepare, success, Choice, Engine, Step};
use super::table::SuccessorTable;

/// Everything a greedy run produced, for inspection and dumps.
#[derive(Clone, Debug)]
pub struct GreedyRun {
    pub result: SynthesisResult,
    /// Absent when the regularity check rejected the input.
    pub table: Option<SuccessorTable>,
    /// Interval per table node; nodes left of a dead end have none.
    pub intervals: Vec<Option<DegreeInterval>>,
    /// Decisions from `a_m` leftwards.
    pub steps: Vec<Step>,
}

/// Smallest admissible natural number for every coefficient, right to left.
pub fn greedy_synthesize(dnf: &Dnf) -> Result<SynthesisResult> {
    greedy_run(dnf).map(|r| r.result)
}

pub fn greedy_run(dnf: &Dnf) -> Result<GreedyRun> {
    let prepared = match prepare(dnf) {
        Ok(p) => p,
        Err(reason) => {
            return Ok(GreedyRun {
                result: SynthesisResult::NotThreshold(reason),
                table: None,
                intervals: Vec::new(),
                steps: Vec::new(),
            })
        }
    };
    let table = SuccessorTable::build(&prepared.renumbered);
    let engine = Engine { table: &table };
    let mut state = engine.initial_state();
    let mut steps = Vec::new();
    for k in (0..table.num_vars()).rev() {
        let (lo, hi) = engine.bounds(&mut state, k)?;
        let (value, doubled) = match classify(lo, hi) {
            Choice::Range { first, .. } => (first, false),
            Choice::Double => {
                engine.double(&mut state)?;
                let ExtInt::Fin(l) = lo else {
                    unreachable!("doubling needs a finite lower bound")
                };
                (2 * l + 1, true)
            }
            Choice::Empty => {
                let result = SynthesisResult::Unknown(dead_end(&state, k, lo, hi));
                return Ok(GreedyRun {
                    result,
                    intervals: state.intervals,
                    table: Some(table),
                    steps,
                });
            }
        };
        engine.apply(&mut state, k, value)?;
        steps.push(Step {
            index: k + 1,
            lower: if doubled {
                lo.scale(2).unwrap_or(lo)
            } else {
                lo
            },
            upper: if doubled {
                hi.scale(2).unwrap_or(hi)
            } else {
                hi
            },
            value,
            doubled,
        });
    }
    let (lpb, interval) = engine.finish(&mut state)?;
    Ok(GreedyRun {
        result: success(&prepared.order, lpb, interval),
        intervals: state.intervals,
        table: Some(table),
        steps,
    })
}
