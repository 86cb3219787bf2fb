//! The complete decision procedure: extremal points, a feasibility linear
//! program over the weights and the degree, and an exact rational solver.

mod simplex;
mod synth;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::point::Point;

pub use simplex::solve_lp;
pub use synth::{rationals_to_integer_lpb, synthesize_lp, weight_program};

/// Arbitrary-precision rational in lowest terms.
pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
        })
    }
}

/// `coefficients . v  (>= | <=)  rhs`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Row {
    pub fn new(coefficients: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Self {
            coefficients,
            relation,
            rhs,
        }
    }

    pub fn from_ints(coefficients: &[i64], relation: Relation, rhs: i64) -> Self {
        Self::new(
            coefficients.iter().map(|&c| int(c)).collect(),
            relation,
            int(rhs),
        )
    }

    pub fn lhs(&self, values: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(values)
            .filter(|(c, _)| !c.is_zero())
            .fold(Rational::zero(), |acc, (c, v)| acc + c * v)
    }

    pub fn satisfied_by(&self, values: &[Rational]) -> bool {
        let lhs = self.lhs(values);
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Le => lhs <= self.rhs,
        }
    }
}

/// A linear program over free variables; sign constraints are ordinary rows
/// and every relation is non-strict. The objective is minimized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub rows: Vec<Row>,
    pub objective: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(num_vars: usize, rows: Vec<Row>, objective: Vec<Rational>) -> Self {
        assert!(rows.iter().all(|r| r.coefficients.len() == num_vars));
        assert_eq!(objective.len(), num_vars);
        Self {
            num_vars,
            rows,
            objective,
        }
    }

    /// Feasibility problem with a zero objective.
    pub fn feasibility(num_vars: usize, rows: Vec<Row>) -> Self {
        Self::new(num_vars, rows, vec![Rational::zero(); num_vars])
    }

    pub fn is_satisfied_by(&self, values: &[Rational]) -> bool {
        values.len() == self.num_vars && self.rows.iter().all(|r| r.satisfied_by(values))
    }

    /// Same program with every coefficient and right-hand side multiplied by `factor`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(factor.is_positive());
        Self {
            num_vars: self.num_vars,
            rows: self
                .rows
                .iter()
                .map(|r| Row {
                    coefficients: r.coefficients.iter().map(|c| c * factor).collect(),
                    relation: r.relation,
                    rhs: &r.rhs * factor,
                })
                .collect(),
            objective: self.objective.clone(),
        }
    }
}

/// One row per line: `c_1 ... c_n {<=|>=} rhs`.
impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for c in &row.coefficients {
                write!(f, "{c} ")?;
            }
            writeln!(f, "{} {}", row.relation, row.rhs)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// An exact solution, one value per variable.
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Weight program for the given extremal points. Variables are
/// `a_1..a_m` followed by the degree `d`:
/// `sum a_i x_i - d >= 0` per minimal true point,
/// `sum a_i y_i - d <= -1` per maximal false point, `a_i >= 0`.
/// The objective `d + sum a_i` favours small certificates.
pub fn build_lp(mtps: &[Point], mfps: &[Point], num_vars: usize) -> LinearProgram {
    let point_row = |p: &Point, relation, rhs| {
        let mut coefficients: Vec<Rational> = (1..=num_vars)
            .map(|v| {
                if p.get(v) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        coefficients.push(-Rational::one());
        Row::new(coefficients, relation, int(rhs))
    };
    let mut rows: Vec<Row> = mtps.iter().map(|p| point_row(p, Relation::Ge, 0)).collect();
    rows.extend(mfps.iter().map(|p| point_row(p, Relation::Le, -1)));
    for i in 0..num_vars {
        let mut coefficients = vec![Rational::zero(); num_vars + 1];
        coefficients[i] = Rational::one();
        rows.push(Row::new(coefficients, Relation::Ge, Rational::zero()));
    }
    LinearProgram::new(num_vars + 1, rows, vec![Rational::one(); num_vars + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dnf::Dnf;
    use crate::extremal::extremal_sets;

    #[test]
    fn rows_for_x1_or_x2x3() {
        let d = Dnf::from_clauses(3, &[&[1][..], &[2, 3]]).unwrap();
        let e = extremal_sets(&d).unwrap();
        let lp = build_lp(&e.mtps, &e.mfps, 3);
        let expected = vec![
            // mtps in mask order: (1,0,0), (0,1,1)
            Row::from_ints(&[1, 0, 0, -1], Relation::Ge, 0),
            Row::from_ints(&[0, 1, 1, -1], Relation::Ge, 0),
            // mfps: (0,1,0), (0,0,1)
            Row::from_ints(&[0, 1, 0, -1], Relation::Le, -1),
            Row::from_ints(&[0, 0, 1, -1], Relation::Le, -1),
            Row::from_ints(&[1, 0, 0, 0], Relation::Ge, 0),
            Row::from_ints(&[0, 1, 0, 0], Relation::Ge, 0),
            Row::from_ints(&[0, 0, 1, 0], Relation::Ge, 0),
        ];
        assert_eq!(lp.rows, expected);
        assert_eq!(lp.num_vars, 4);
    }

    #[test]
    fn constant_true_program() {
        let lp = build_lp(&[Point::zeros(2)], &[], 2);
        assert_eq!(lp.rows[0], Row::from_ints(&[0, 0, -1], Relation::Ge, 0));
        assert_eq!(lp.rows.len(), 3);
    }

    #[test]
    fn ex2_row_counts() {
        let d = Dnf::from_clauses(4, &[&[1, 2][..], &[1, 3], &[1, 4], &[2, 3, 4]]).unwrap();
        let e = extremal_sets(&d).unwrap();
        let lp = build_lp(&e.mtps, &e.mfps, 4);
        let count = |rel: Relation, rhs: i64| {
            lp.rows
                .iter()
                .filter(|r| r.relation == rel && r.rhs == int(rhs))
                .count()
        };
        assert_eq!(count(Relation::Ge, 0), 4 + 4);
        assert_eq!(count(Relation::Le, -1), 4);
    }

    #[test]
    fn dump_format() {
        let lp = LinearProgram::feasibility(
            2,
            vec![Row::new(
                vec![int(1), Rational::new(1.into(), 2.into())],
                Relation::Le,
                int(-1),
            )],
        );
        assert_eq!(lp.to_string(), "1 1/2 <= -1\n");
    }
}
