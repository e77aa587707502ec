//! Exact rational linear programming: primal simplex with Bland's rule,
//! two phases, free variables split into differences of nonnegatives.
//! Deterministic by construction, so identical inputs give identical
//! optimal points.

use std::sync::Arc;

use crate::ground::GroundSet;
use crate::num::Rational;
use crate::vector::QVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

/// Outcome of an LP solve; `point` and `value` are present iff optimal.
#[derive(Clone, Debug)]
pub struct LpResult {
    pub status: LpStatus,
    pub point: Option<QVector>,
    pub value: Option<Rational>,
}

impl LpResult {
    fn infeasible() -> Self {
        LpResult {
            status: LpStatus::Infeasible,
            point: None,
            value: None,
        }
    }

    fn unbounded() -> Self {
        LpResult {
            status: LpStatus::Unbounded,
            point: None,
            value: None,
        }
    }
}

/// Solve `sense ⟨objective, x⟩` subject to `⟨a, x⟩ ≥ b` for every
/// constraint pair, over free rational variables.
pub fn lp_solve(
    constraints: &[(QVector, Rational)],
    objective: &QVector,
    sense: Sense,
) -> LpResult {
    lp_solve_full(constraints, &[], objective, sense)
}

/// As `lp_solve`, with additional equality constraints `⟨a, x⟩ = b`.
pub fn lp_solve_full(
    inequalities: &[(QVector, Rational)],
    equalities: &[(QVector, Rational)],
    objective: &QVector,
    sense: Sense,
) -> LpResult {
    let ground = objective.ground().clone();
    for (a, _) in inequalities.iter().chain(equalities) {
        assert!(
            a.ground() == &ground,
            "constraint ground set differs from objective"
        );
    }
    let min_objective = match sense {
        Sense::Min => objective.clone(),
        Sense::Max => objective.neg(),
    };
    let res = simplex(inequalities, equalities, &min_objective, &ground);
    match sense {
        Sense::Min => res,
        Sense::Max => LpResult {
            value: res.value.map(|v| -v),
            ..res
        },
    }
}

/// A rational point satisfying all constraints, if one exists.
pub fn feasible_point(
    inequalities: &[(QVector, Rational)],
    equalities: &[(QVector, Rational)],
    ground: &Arc<GroundSet>,
) -> Option<QVector> {
    let zero = QVector::zeros(ground.clone());
    let res = lp_solve_full(inequalities, equalities, &zero, Sense::Min);
    res.point
}

struct Tableau {
    // rows[r][0..ncols] coefficients, rows[r][ncols] = rhs
    rows: Vec<Vec<Rational>>,
    cost: Vec<Rational>, // reduced costs, last entry = -objective value
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..=self.ncols {
                let t = &self.rows[r][j] * &f;
                self.rows[i][j] -= &t;
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for j in 0..=self.ncols {
                let t = &self.rows[r][j] * &f;
                self.cost[j] -= &t;
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: entering column is the lowest-index negative reduced
    /// cost; leaving row has the minimum ratio, ties broken by lowest
    /// basic variable index.  Returns false on unboundedness.
    fn run(&mut self, allowed: usize) -> bool {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rational> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][enter].is_positive() {
                    let ratio = &self.rows[r][self.ncols] / &self.rows[r][enter];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[r] < self.basis[leave.expect("set with best")])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(r);
                    }
                }
            }
            match leave {
                None => return false,
                Some(r) => self.pivot(r, enter),
            }
        }
    }
}

/// Column layout: n plus-parts, n minus-parts, one slack per inequality,
/// one artificial per row.
fn simplex(
    inequalities: &[(QVector, Rational)],
    equalities: &[(QVector, Rational)],
    objective: &QVector,
    ground: &Arc<GroundSet>,
) -> LpResult {
    let n = ground.len();
    let m = inequalities.len() + equalities.len();
    if m == 0 {
        return if objective.is_zero() {
            LpResult {
                status: LpStatus::Optimal,
                point: Some(QVector::zeros(ground.clone())),
                value: Some(Rational::zero()),
            }
        } else {
            LpResult::unbounded()
        };
    }
    let n_slack = inequalities.len();
    let struct_cols = 2 * n + n_slack;
    let ncols = struct_cols + m;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (idx, (a, b)) in inequalities.iter().chain(equalities.iter()).enumerate() {
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, c) in a.coords().iter().enumerate() {
            row[j] = c.clone();
            row[n + j] = -c;
        }
        if idx < n_slack {
            row[2 * n + idx] = -Rational::one();
        }
        row[ncols] = b.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        row[struct_cols + idx] = Rational::one();
        basis.push(struct_cols + idx);
        rows.push(row);
    }

    // Phase 1: minimize the sum of artificials.
    let mut cost = vec![Rational::zero(); ncols + 1];
    for row in &rows {
        for j in 0..=ncols {
            if j < struct_cols || j == ncols {
                cost[j] -= &row[j];
            }
        }
    }
    let mut t = Tableau {
        rows,
        cost,
        basis,
        ncols,
    };
    if !t.run(struct_cols) {
        unreachable!("phase 1 objective is bounded below by zero");
    }
    // -cost[ncols] is the phase-1 optimum
    if !t.cost[t.ncols].is_zero() {
        return LpResult::infeasible();
    }
    // Drive basic artificials out or drop their (redundant) rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= struct_cols {
            if let Some(c) = (0..struct_cols).find(|&c| !t.rows[r][c].is_zero()) {
                t.pivot(r, c);
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
                continue;
            }
        }
        r += 1;
    }

    // Phase 2: real objective over plus/minus parts.
    let mut cost = vec![Rational::zero(); ncols + 1];
    for (j, c) in objective.coords().iter().enumerate() {
        cost[j] = c.clone();
        cost[n + j] = -c;
    }
    // Reduce against the current basis.
    for r in 0..t.rows.len() {
        let b = t.basis[r];
        if !cost[b].is_zero() {
            let f = cost[b].clone();
            for j in 0..=ncols {
                let v = &t.rows[r][j] * &f;
                cost[j] -= &v;
            }
        }
    }
    t.cost = cost;
    if !t.run(struct_cols) {
        return LpResult::unbounded();
    }

    let mut coords = vec![Rational::zero(); n];
    for (r, &b) in t.basis.iter().enumerate() {
        let v = t.rows[r][t.ncols].clone();
        if b < n {
            coords[b] = &coords[b] + &v;
        } else if b < 2 * n {
            coords[b - n] = &coords[b - n] - &v;
        }
    }
    let point = QVector::from_coords(ground.clone(), coords);
    let value = objective.dot(&point);
    debug_assert_eq!(value, -&t.cost[t.ncols] + Rational::zero());
    LpResult {
        status: LpStatus::Optimal,
        point: Some(point),
        value: Some(value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> Arc<GroundSet> {
        GroundSet::new(["x"]).unwrap()
    }

    #[test]
    fn minimize_over_halfline() {
        let g = g1();
        let x = QVector::unit(g.clone(), "x").unwrap();
        // minimize x over {x >= 3}
        let r = lp_solve(&[(x.clone(), Rational::from_int(3))], &x, Sense::Min);
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value.unwrap(), Rational::from_int(3));
        assert_eq!(r.point.unwrap().get("x").unwrap(), &Rational::from_int(3));
    }

    #[test]
    fn unbounded_below() {
        let g = g1();
        let x = QVector::unit(g.clone(), "x").unwrap();
        // minimize x over {x <= 3}, i.e. {-x >= -3}
        let r = lp_solve(&[(x.neg(), Rational::from_int(-3))], &x, Sense::Min);
        assert_eq!(r.status, LpStatus::Unbounded);
    }

    #[test]
    fn two_variable_cover() {
        let g = GroundSet::new(["f1", "f2"]).unwrap();
        let f1 = QVector::unit(g.clone(), "f1").unwrap();
        let f2 = QVector::unit(g.clone(), "f2").unwrap();
        let sum = f1.add(&f2);
        // minimize f1+f2 over {f1+f2 >= 1, f1 >= 0, f2 >= 0}
        let r = lp_solve(
            &[
                (sum.clone(), Rational::one()),
                (f1, Rational::zero()),
                (f2, Rational::zero()),
            ],
            &sum,
            Sense::Min,
        );
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value.unwrap(), Rational::one());
    }

    #[test]
    fn infeasible_system() {
        let g = g1();
        let x = QVector::unit(g.clone(), "x").unwrap();
        let r = lp_solve(
            &[
                (x.clone(), Rational::from_int(2)),
                (x.neg(), Rational::from_int(-1)),
            ],
            &x,
            Sense::Min,
        );
        assert_eq!(r.status, LpStatus::Infeasible);
    }

    #[test]
    fn no_constraints() {
        let g = g1();
        let x = QVector::unit(g.clone(), "x").unwrap();
        assert_eq!(lp_solve(&[], &x, Sense::Min).status, LpStatus::Unbounded);
        let zero = QVector::zeros(g);
        assert_eq!(lp_solve(&[], &zero, Sense::Min).status, LpStatus::Optimal);
    }

    #[test]
    fn maximization_and_equalities() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        let x = QVector::unit(g.clone(), "x").unwrap();
        let y = QVector::unit(g.clone(), "y").unwrap();
        // max x s.t. x + y = 1, x >= 0, y >= 0
        let r = lp_solve_full(
            &[(x.clone(), Rational::zero()), (y.clone(), Rational::zero())],
            &[(x.add(&y), Rational::one())],
            &x,
            Sense::Max,
        );
        assert_eq!(r.status, LpStatus::Optimal);
        assert_eq!(r.value.unwrap(), Rational::one());
        let p = r.point.unwrap();
        assert_eq!(p.get("x").unwrap(), &Rational::one());
        assert_eq!(p.get("y").unwrap(), &Rational::zero());
    }
}
