use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{build_lp, solve_lp, LpOutcome, Rational};
use crate::analysis::{op_order, regularity_check};
use crate::dnf::Dnf;
use crate::error::{Error, Result};
use crate::extremal::{maximal_false_points, minimal_true_points};
use crate::lpb::Lpb;
use crate::synthesis::{Rejection, SynthesisResult, Synthesized};

/// Scales `a_1..a_m, d` to coprime integers.
///
/// Multiplying by the lcm of the denominators keeps every inequality of
/// the weight program (the right-hand side -1 becomes more negative), and
/// dividing by the common gcd of all values including `d` keeps the
/// integer gap between true and false points.
pub fn rationals_to_integer_lpb(values: &[Rational], num_vars: usize) -> Result<Lpb> {
    if values.len() != num_vars + 1 {
        return Err(Error::DimensionMismatch {
            expected: num_vars + 1,
            found: values.len(),
        });
    }
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !gcd.is_zero() && !gcd.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &gcd;
        }
    }
    let degree = ints[num_vars]
        .to_i64()
        .ok_or_else(|| Error::Overflow(format!("degree {}", ints[num_vars])))?;
    let coefficients = ints[..num_vars]
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if v.is_negative() {
                return Err(Error::NegativeCoefficient {
                    var: i + 1,
                    value: v.to_string(),
                });
            }
            v.to_u64()
                .ok_or_else(|| Error::Overflow(format!("coefficient of x{}: {v}", i + 1)))
        })
        .collect::<Result<Vec<u64>>>()?;
    Lpb::new(coefficients, degree)
}

/// Complete synthesis: decides thresholdness and returns an LPB when one
/// exists. Regularity in the occurrence-pattern order is checked first;
/// threshold functions always pass it.
pub fn synthesize_lp(dnf: &Dnf) -> Result<SynthesisResult> {
    let normalized = dnf.normalize();
    let m = normalized.num_vars();
    let order = op_order(&normalized);
    let renumbered = order.renumber(&normalized);
    let identity = crate::analysis::VariableOrder::identity(m);
    let mtps = minimal_true_points(&renumbered);
    if !regularity_check(&renumbered, &identity, &mtps) {
        return Ok(SynthesisResult::NotThreshold(Rejection::Regularity));
    }
    let mfps = maximal_false_points(&renumbered, &mtps)
        .expect("candidate family is complete for regular functions");
    let lp = build_lp(&mtps, &mfps, m);
    match solve_lp(&lp) {
        LpOutcome::Infeasible => Ok(SynthesisResult::NotThreshold(Rejection::Infeasible)),
        LpOutcome::Feasible(values) => {
            let lpb = rationals_to_integer_lpb(&values, m)?;
            Ok(SynthesisResult::Success(Synthesized {
                lpb: order.restore(&lpb),
                interval: None,
                order,
            }))
        }
    }
}

/// The weight program of a DNF in its occurrence-pattern order, for
/// inspection. `None` when the function is not regular in that order.
pub fn weight_program(dnf: &Dnf) -> Option<super::LinearProgram> {
    let normalized = dnf.normalize();
    let order = op_order(&normalized);
    let renumbered = order.renumber(&normalized);
    let mtps = minimal_true_points(&renumbered);
    let mfps = maximal_false_points(&renumbered, &mtps).ok()?;
    Some(build_lp(&mtps, &mfps, normalized.num_vars()))
}
