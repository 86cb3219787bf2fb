//! Right-to-left coefficient selection over a successor table.

use crate::analysis::{op_order, regularity_check, VariableOrder};
use crate::dnf::Dnf;
use crate::error::{Error, Result};
use crate::extremal::minimal_true_points;
use crate::lpb::Lpb;
use crate::synthesis::{DeadEnd, Rejection, SynthesisResult, Synthesized};

use super::interval::{DegreeInterval, ExtInt};
use super::table::SuccessorTable;

/// Interval of a final node in column `column`: `(-inf, 0]` for true and
/// `(sum of the coefficients after column, inf)` for false.
/// `coefficients[i]` is `a_{i+1}`; only the entries after `column` are read.
pub fn base_interval(is_true: bool, column: usize, coefficients: &[i64]) -> Result<DegreeInterval> {
    if is_true {
        return Ok(DegreeInterval::new(ExtInt::NegInf, ExtInt::Fin(0)));
    }
    let sum = coefficients[column..]
        .iter()
        .try_fold(0i64, |acc, &a| acc.checked_add(a))
        .ok_or_else(|| Error::Overflow("coefficient sum".into()))?;
    Ok(DegreeInterval::new(ExtInt::Fin(sum), ExtInt::PosInf))
}

/// Open bounds on the next coefficient from the children of the given nodes:
/// `max(s_0 - b_1) < a < min(b_0 - s_1)`. Without pairs the bounds are infinite.
pub fn coefficient_bounds(
    pairs: impl IntoIterator<Item = (DegreeInterval, DegreeInterval)>,
) -> (ExtInt, ExtInt) {
    let mut lo = ExtInt::NegInf;
    let mut hi = ExtInt::PosInf;
    for (zero, one) in pairs {
        let l = zero
            .lower
            .checked_sub(one.upper)
            .expect("lower ends are never +inf and upper ends never -inf");
        let h = zero
            .upper
            .checked_sub(one.lower)
            .expect("lower ends are never +inf and upper ends never -inf");
        lo = lo.max(l);
        hi = hi.min(h);
    }
    (lo, hi)
}

/// Interval of a non-final node from its children: `(max(s_0, s_1 + a), min(b_0, b_1 + a)]`.
pub fn propagate_interval(
    zero: DegreeInterval,
    one: DegreeInterval,
    a: i64,
) -> Result<DegreeInterval> {
    let shift = |v: ExtInt| {
        v.checked_add(a)
            .ok_or_else(|| Error::Overflow("degree bound".into()))
    };
    let iv = DegreeInterval::new(
        zero.lower.max(shift(one.lower)?),
        zero.upper.min(shift(one.upper)?),
    );
    assert!(
        !iv.is_empty(),
        "propagation produced the empty interval {iv} from {zero} and {one} with a = {a}"
    );
    Ok(iv)
}

/// How the next coefficient can be chosen from open bounds `(lo, hi)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Choice {
    /// Natural numbers from `first` up to `last` (inclusive, `None` = unbounded).
    Range { first: i64, last: Option<i64> },
    /// No integer fits, but doubling everything makes `2 lo + 1` admissible.
    Double,
    /// No natural number fits.
    Empty,
}

pub fn classify(lo: ExtInt, hi: ExtInt) -> Choice {
    if hi <= ExtInt::Fin(0) || lo >= hi {
        return Choice::Empty;
    }
    let first = match lo {
        ExtInt::Fin(l) if l >= 0 => l + 1,
        _ => 0,
    };
    match hi {
        ExtInt::Fin(h) if first >= h => Choice::Double,
        ExtInt::Fin(h) => Choice::Range {
            first,
            last: Some(h - 1),
        },
        _ => Choice::Range { first, last: None },
    }
}

/// Coefficients and node intervals after processing the columns right of `next`.
#[derive(Clone, Debug)]
pub(crate) struct State {
    pub coefficients: Vec<i64>,
    pub intervals: Vec<Option<DegreeInterval>>,
}

/// One coefficient decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    /// 1-based coefficient index in the internal order.
    pub index: usize,
    pub lower: ExtInt,
    pub upper: ExtInt,
    pub value: i64,
    /// The system was doubled before choosing.
    pub doubled: bool,
}

pub(crate) struct Engine<'t> {
    pub table: &'t SuccessorTable,
}

impl<'t> Engine<'t> {
    pub fn initial_state(&self) -> State {
        let m = self.table.num_vars();
        State {
            coefficients: vec![0; m],
            intervals: vec![None; self.table.len()],
        }
    }

    /// Fills the final nodes of column `k + 1` and returns the bounds on `a_{k+1}`.
    pub fn bounds(&self, state: &mut State, k: usize) -> Result<(ExtInt, ExtInt)> {
        for &id in self.table.column(k + 1) {
            let node = self.table.node(id);
            if node.is_final {
                state.intervals[id] = Some(base_interval(
                    node.formula.is_true(),
                    k + 1,
                    &state.coefficients,
                )?);
            }
        }
        let pairs = self.table.column(k).iter().filter_map(|&id| {
            self.table.node(id).children.map(|(z, o)| {
                (
                    state.intervals[z].expect("zero child carries an interval"),
                    state.intervals[o].expect("one child carries an interval"),
                )
            })
        });
        Ok(coefficient_bounds(pairs))
    }

    /// Fixes `a_{k+1} = a` and propagates to the non-final nodes of column `k`.
    pub fn apply(&self, state: &mut State, k: usize, a: i64) -> Result<()> {
        state.coefficients[k] = a;
        for &id in self.table.column(k) {
            if let Some((z, o)) = self.table.node(id).children {
                let iv = propagate_interval(
                    state.intervals[z].expect("zero child carries an interval"),
                    state.intervals[o].expect("one child carries an interval"),
                    a,
                )?;
                state.intervals[id] = Some(iv);
            }
        }
        Ok(())
    }

    /// Multiplies every chosen coefficient and every interval by 2.
    pub fn double(&self, state: &mut State) -> Result<()> {
        let overflow = || Error::Overflow("doubling the system".into());
        for a in state.coefficients.iter_mut() {
            *a = a.checked_mul(2).ok_or_else(overflow)?;
        }
        for iv in state.intervals.iter_mut().flatten() {
            *iv = iv.scale(2).ok_or_else(overflow)?;
        }
        Ok(())
    }

    /// Root interval and the resulting LPB over internal positions.
    pub fn finish(&self, state: &mut State) -> Result<(Lpb, DegreeInterval)> {
        let root = self.table.root();
        if self.table.node(root).is_final {
            let is_true = self.table.node(root).formula.is_true();
            state.intervals[root] = Some(base_interval(is_true, 0, &state.coefficients)?);
        }
        let interval = state.intervals[root].expect("root carries an interval");
        let degree = interval
            .least_degree()
            .expect("root interval has an integer");
        let coefficients = state
            .coefficients
            .iter()
            .map(|&a| u64::try_from(a).expect("coefficients are natural numbers"))
            .collect();
        Ok((Lpb::new(coefficients, degree)?, interval))
    }
}

/// Normalized input in occurrence-pattern order, or the regularity verdict.
pub(crate) struct Prepared {
    pub order: VariableOrder,
    pub renumbered: Dnf,
}

pub(crate) fn prepare(dnf: &Dnf) -> std::result::Result<Prepared, Rejection> {
    let normalized = dnf.normalize();
    let order = op_order(&normalized);
    let renumbered = order.renumber(&normalized);
    let mtps = minimal_true_points(&renumbered);
    if !regularity_check(
        &renumbered,
        &VariableOrder::identity(renumbered.num_vars()),
        &mtps,
    ) {
        return Err(Rejection::Regularity);
    }
    Ok(Prepared { order, renumbered })
}

pub(crate) fn success(
    order: &VariableOrder,
    lpb: Lpb,
    interval: DegreeInterval,
) -> SynthesisResult {
    SynthesisResult::Success(Synthesized {
        lpb: order.restore(&lpb),
        interval: Some(interval),
        order: order.clone(),
    })
}

pub(crate) fn chosen(state: &State, k: usize) -> Vec<(usize, i64)> {
    (k + 1..state.coefficients.len())
        .rev()
        .map(|i| (i + 1, state.coefficients[i]))
        .collect()
}

pub(crate) fn dead_end(state: &State, k: usize, lo: ExtInt, hi: ExtInt) -> DeadEnd {
    DeadEnd {
        column: k + 1,
        lower: lo,
        upper: hi,
        chosen: chosen(state, k),
        budget_exhausted: false,
    }
}
