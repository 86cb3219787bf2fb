use crate::dnf::Dnf;
use crate::error::Result;
use crate::synthesis::{DeadEnd, SynthesisResult};

use super::interval::{DegreeInterval, ExtInt};
use super::solve::{classify, dead_end, prepare, success, Choice, Engine, State};
use super::table::SuccessorTable;

/// Search limits for [`backtrack_synthesize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BacktrackConfig {
    /// Candidates for `a_{k+1}` stop at `factor * a_{k+2}` and at `factor`
    /// for the rightmost coefficient. `None` uses the number of variables.
    pub bound_factor: Option<u64>,
    /// Maximum number of coefficient assignments tried.
    pub max_steps: u64,
}

impl Default for BacktrackConfig {
    fn default() -> Self {
        Self {
            bound_factor: None,
            max_steps: 100_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BacktrackRun {
    pub result: SynthesisResult,
    pub table: Option<SuccessorTable>,
    pub intervals: Vec<Option<DegreeInterval>>,
    /// Coefficient assignments tried.
    pub steps: u64,
    /// Assignments that replaced an earlier choice.
    pub backtracks: u64,
}

struct Frame {
    k: usize,
    saved: State,
    next: i64,
    last: i64,
}

/// Depth-first variant of the greedy pass: candidates for each coefficient
/// are tried in ascending order, so the first branch is the greedy one.
pub fn backtrack_synthesize(dnf: &Dnf, config: &BacktrackConfig) -> Result<SynthesisResult> {
    backtrack_run(dnf, config).map(|r| r.result)
}

pub fn backtrack_run(dnf: &Dnf, config: &BacktrackConfig) -> Result<BacktrackRun> {
    let prepared = match prepare(dnf) {
        Ok(p) => p,
        Err(reason) => {
            return Ok(BacktrackRun {
                result: SynthesisResult::NotThreshold(reason),
                table: None,
                intervals: Vec::new(),
                steps: 0,
                backtracks: 0,
            })
        }
    };
    let table = SuccessorTable::build(&prepared.renumbered);
    let engine = Engine { table: &table };
    let m = table.num_vars();
    let factor = config.bound_factor.unwrap_or(m as u64).max(1);
    let factor = i64::try_from(factor).unwrap_or(i64::MAX);

    let mut state = engine.initial_state();
    let mut frames: Vec<Frame> = Vec::new();
    let mut steps = 0u64;
    let mut backtracks = 0u64;
    let mut last_dead: Option<DeadEnd> = None;
    let mut k = m;

    let unknown = |dead: Option<DeadEnd>, exhausted: bool| {
        let mut d = dead.unwrap_or(DeadEnd {
            column: 0,
            lower: ExtInt::NegInf,
            upper: ExtInt::PosInf,
            chosen: Vec::new(),
            budget_exhausted: false,
        });
        d.budget_exhausted = exhausted;
        SynthesisResult::Unknown(d)
    };

    while k > 0 {
        let col = k - 1;
        if steps >= config.max_steps {
            let result = unknown(last_dead, true);
            return Ok(BacktrackRun {
                result,
                intervals: state.intervals,
                table: Some(table),
                steps,
                backtracks,
            });
        }
        let (lo, hi) = engine.bounds(&mut state, col)?;
        let candidates = match classify(lo, hi) {
            Choice::Range { first, last } => {
                let prev = if col + 1 < m {
                    state.coefficients[col + 1].max(1)
                } else {
                    1
                };
                let cap = factor.saturating_mul(prev).max(first);
                Some((first, last.map_or(cap, |l| l.min(cap))))
            }
            Choice::Double => {
                engine.double(&mut state)?;
                let ExtInt::Fin(l) = lo else {
                    unreachable!("doubling needs a finite lower bound")
                };
                Some((2 * l + 1, 2 * l + 1))
            }
            Choice::Empty => None,
        };
        match candidates {
            Some((first, last)) => {
                frames.push(Frame {
                    k: col,
                    saved: state.clone(),
                    next: first + 1,
                    last,
                });
                engine.apply(&mut state, col, first)?;
                steps += 1;
                k = col;
            }
            None => {
                last_dead = Some(dead_end(&state, col, lo, hi));
                // resume at the deepest frame with an untried candidate
                loop {
                    let Some(frame) = frames.last_mut() else {
                        let result = unknown(last_dead, false);
                        return Ok(BacktrackRun {
                            result,
                            intervals: state.intervals,
                            table: Some(table),
                            steps,
                            backtracks,
                        });
                    };
                    if frame.next <= frame.last {
                        let a = frame.next;
                        frame.next += 1;
                        state = frame.saved.clone();
                        let fk = frame.k;
                        engine.apply(&mut state, fk, a)?;
                        steps += 1;
                        backtracks += 1;
                        k = fk;
                        break;
                    }
                    frames.pop();
                }
            }
        }
    }
    let (lpb, interval) = engine.finish(&mut state)?;
    Ok(BacktrackRun {
        result: success(&prepared.order, lpb, interval),
        intervals: state.intervals,
        table: Some(table),
        steps,
        backtracks,
    })
}
