//! Exact two-phase simplex.
//!
//! The program `min c.x  s.t.  G x >= h` (x free) is solved through its
//! dual `max h.y  s.t.  G^T y = c, y >= 0`, which is in standard form. A
//! primal point is read off the dual tableau's simplex multipliers.

use num_traits::{Signed, Zero};

use super::{LinearProgram, LpOutcome, Rational, Relation};

struct Tableau {
    /// Constraint rows; the last entry of each is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry is minus the objective value.
    costs: Vec<Rational>,
    basis: Vec<usize>,
}

struct Unbounded;

const DEGENERATE_LIMIT: usize = 50;

impl Tableau {
    fn width(&self) -> usize {
        self.costs.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let support: Vec<usize> = (0..pivot_row.len())
            .filter(|&k| !pivot_row[k].is_zero())
            .collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[c].clone();
            if factor.is_zero() {
                return;
            }
            for &k in &support {
                let delta = &factor * &pivot_row[k];
                row[k] -= delta;
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.costs);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Minimizes over the columns accepted by `allowed`.
    ///
    /// Entering columns follow the most negative reduced cost; after a run of
    /// degenerate pivots the choice switches to Bland's rule (lowest index)
    /// until the objective moves again, which rules out cycling.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> Result<(), Unbounded> {
        let width = self.width();
        let mut degenerate = 0usize;
        loop {
            let bland = degenerate >= DEGENERATE_LIMIT;
            let mut enter: Option<usize> = None;
            for j in (0..width).filter(|&j| allowed(j) && self.costs[j].is_negative()) {
                match enter {
                    None => enter = Some(j),
                    Some(e) if !bland && self.costs[j] < self.costs[e] => enter = Some(j),
                    _ => {}
                }
                if bland {
                    break;
                }
            }
            let Some(enter) = enter else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, ratio)) => {
                    if ratio.is_zero() {
                        degenerate += 1;
                    } else {
                        degenerate = 0;
                    }
                    self.pivot(r, enter);
                }
                None => return Err(Unbounded),
            }
        }
    }

    fn value(&self) -> Rational {
        -self.costs[self.width()].clone()
    }
}

enum DualResult {
    /// Multipliers of the equality rows at a dual optimum.
    Optimal(Vec<Rational>),
    DualInfeasible,
    DualUnbounded,
}

/// `g` holds the primal rows in `>=` form, `h` their right-hand sides.
fn solve_dual(g: &[Vec<Rational>], h: &[Rational], c: &[Rational]) -> DualResult {
    let n = c.len();
    let cols = g.len();
    let width = cols + n;
    // row i reads sigma_i * (sum_r g[r][i] y_r) + a_i = sigma_i * c_i
    let sigma: Vec<bool> = c.iter().map(|v| v.is_negative()).collect();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![Rational::zero(); width + 1];
        for (r, gr) in g.iter().enumerate() {
            row[r] = if sigma[i] {
                -gr[i].clone()
            } else {
                gr[i].clone()
            };
        }
        row[cols + i] = Rational::from_integer(1.into());
        row[width] = c[i].abs();
        rows.push(row);
    }

    // phase 1: minimize the sum of artificials
    let mut costs = vec![Rational::zero(); width + 1];
    for row in &rows {
        for j in 0..cols {
            costs[j] -= &row[j];
        }
        costs[width] -= &row[width];
    }
    let mut t = Tableau {
        rows,
        costs,
        basis: (cols..width).collect(),
    };
    if t.run(|_| true).is_err() {
        unreachable!("phase 1 objective is bounded below by zero");
    }
    if t.value().is_positive() {
        return DualResult::DualInfeasible;
    }
    for i in 0..n {
        if t.basis[i] >= cols {
            if let Some(j) = (0..cols).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }

    // phase 2: minimize -h.y with artificials barred from entering
    let price = |j: usize| {
        if j < cols {
            -h[j].clone()
        } else {
            Rational::zero()
        }
    };
    let mut costs: Vec<Rational> = (0..width).map(price).collect();
    costs.push(Rational::zero());
    for (i, row) in t.rows.iter().enumerate() {
        let cb = price(t.basis[i]);
        if cb.is_zero() {
            continue;
        }
        for (k, v) in row.iter().enumerate() {
            if !v.is_zero() {
                costs[k] -= &cb * v;
            }
        }
    }
    t.costs = costs;
    if t.run(|j| j < cols).is_err() {
        return DualResult::DualUnbounded;
    }
    // multiplier of row i is minus the reduced cost of its artificial;
    // undo the row sign flip
    DualResult::Optimal(
        (0..n)
            .map(|i| {
                let pi = -t.costs[cols + i].clone();
                if sigma[i] {
                    -pi
                } else {
                    pi
                }
            })
            .collect(),
    )
}

/// Exact solution of `lp`, minimizing its objective when it is feasible.
///
/// Returned points satisfy every row exactly; this is asserted.
pub fn solve_lp(lp: &LinearProgram) -> LpOutcome {
    let mut g = Vec::with_capacity(lp.rows.len());
    let mut h = Vec::with_capacity(lp.rows.len());
    for row in &lp.rows {
        match row.relation {
            Relation::Ge => {
                g.push(row.coefficients.clone());
                h.push(row.rhs.clone());
            }
            Relation::Le => {
                g.push(row.coefficients.iter().map(|v| -v.clone()).collect());
                h.push(-row.rhs.clone());
            }
        }
    }
    // primal x equals minus the dual multipliers of G^T y = c
    let primal =
        |multipliers: Vec<Rational>| multipliers.into_iter().map(|v| -v).collect::<Vec<_>>();
    let x = match solve_dual(&g, &h, &lp.objective) {
        DualResult::Optimal(m) => primal(m),
        DualResult::DualUnbounded => return LpOutcome::Infeasible,
        DualResult::DualInfeasible => {
            // primal is infeasible or unbounded; the zero objective separates them
            let zero = vec![Rational::zero(); lp.num_vars];
            match solve_dual(&g, &h, &zero) {
                DualResult::Optimal(m) => primal(m),
                DualResult::DualUnbounded => return LpOutcome::Infeasible,
                DualResult::DualInfeasible => unreachable!("y = 0 is dual feasible for c = 0"),
            }
        }
    };
    assert!(
        lp.is_satisfied_by(&x),
        "simplex returned a point violating the program"
    );
    LpOutcome::Feasible(x)
}
