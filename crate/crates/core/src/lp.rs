//! Exact rational linear programming.
//!
//! A dense two-phase simplex over arbitrary-precision rationals, meant for
//! desk-scale problems (tens of variables, a couple hundred rows). Bland's
//! smallest-index rule makes every solve terminating and deterministic;
//! there is no floating point anywhere, so feasibility and optimality are
//! decided exactly.
//!
//! Infeasible programs come back with a Farkas certificate: multipliers
//! over the program's [canonical rows](LinearProgram::canonical_rows) that
//! combine the constraints into `0 >= positive`, checkable by
//! [`verify_farkas`] with exact arithmetic.

use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rational;
use num_traits::{One, Signed, Zero};

/// Constraint sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `maximize c.x` subject to linear rows and optional per-variable bounds.
///
/// Variables are free unless bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    objective: Vec<Rational>,
    constraints: Vec<(Vec<Rational>, Relation, Rational)>,
    lower: Vec<Option<Rational>>,
    upper: Vec<Option<Rational>>,
}

/// One row of the canonical `>=`/`=` view used by Farkas certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalRow {
    pub coeffs: Vec<Rational>,
    /// `true` for an equality row; its multiplier may take either sign.
    pub equality: bool,
    pub rhs: Rational,
}

/// Row multipliers proving infeasibility, aligned with
/// [`LinearProgram::canonical_rows`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub multipliers: Vec<Rational>,
}

/// Result of a solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        solution: Vec<Rational>,
        value: Rational,
    },
    Infeasible {
        certificate: FarkasCertificate,
    },
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    DimensionMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// A solver self-check failed; never expected.
    Internal(&'static str),
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::DimensionMismatch {
                row,
                expected,
                found,
            } => write!(
                f,
                "constraint {row} has {found} coefficients, expected {expected}"
            ),
            LpError::Internal(what) => write!(f, "internal solver check failed: {what}"),
        }
    }
}

impl core::error::Error for LpError {}

impl LinearProgram {
    pub fn maximize(objective: Vec<Rational>) -> Self {
        let vars = objective.len();
        LinearProgram {
            objective,
            constraints: Vec::new(),
            lower: alloc::vec![None; vars],
            upper: alloc::vec![None; vars],
        }
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push((coeffs, relation, rhs));
    }

    pub fn set_lower(&mut self, var: usize, bound: Rational) {
        self.lower[var] = Some(bound);
    }

    pub fn set_upper(&mut self, var: usize, bound: Rational) {
        self.upper[var] = Some(bound);
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Every constraint and finite bound as a `>=` or `=` row, in a fixed
    /// order: constraints first, then lower bounds, then upper bounds.
    pub fn canonical_rows(&self) -> Vec<CanonicalRow> {
        let n = self.num_vars();
        let mut rows = Vec::new();
        for (coeffs, relation, rhs) in &self.constraints {
            let (coeffs, rhs) = match relation {
                Relation::Le => (coeffs.iter().map(|c| -c).collect(), -rhs),
                _ => (coeffs.clone(), rhs.clone()),
            };
            rows.push(CanonicalRow {
                coeffs,
                equality: *relation == Relation::Eq,
                rhs,
            });
        }
        for (j, bound) in self.lower.iter().enumerate() {
            if let Some(lo) = bound {
                let mut coeffs = alloc::vec![Rational::zero(); n];
                coeffs[j] = Rational::one();
                rows.push(CanonicalRow {
                    coeffs,
                    equality: false,
                    rhs: lo.clone(),
                });
            }
        }
        for (j, bound) in self.upper.iter().enumerate() {
            if let Some(up) = bound {
                let mut coeffs = alloc::vec![Rational::zero(); n];
                coeffs[j] = -Rational::one();
                rows.push(CanonicalRow {
                    coeffs,
                    equality: false,
                    rhs: -up,
                });
            }
        }
        rows
    }

    fn check_dimensions(&self) -> Result<(), LpError> {
        let expected = self.num_vars();
        for (row, (coeffs, _, _)) in self.constraints.iter().enumerate() {
            if coeffs.len() != expected {
                return Err(LpError::DimensionMismatch {
                    row,
                    expected,
                    found: coeffs.len(),
                });
            }
        }
        Ok(())
    }

    /// Exact re-substitution of a candidate solution.
    fn satisfies(&self, x: &[Rational]) -> bool {
        for (coeffs, relation, rhs) in &self.constraints {
            let lhs: Rational = coeffs.iter().zip(x).map(|(c, v)| c * v).sum();
            let ok = match relation {
                Relation::Le => lhs <= *rhs,
                Relation::Eq => lhs == *rhs,
                Relation::Ge => lhs >= *rhs,
            };
            if !ok {
                return false;
            }
        }
        for (j, v) in x.iter().enumerate() {
            if let Some(lo) = &self.lower[j]
                && v < lo
            {
                return false;
            }
            if let Some(up) = &self.upper[j]
                && v > up
            {
                return false;
            }
        }
        true
    }
}

/// Check a Farkas certificate against the program it claims infeasible:
/// inequality multipliers nonnegative, coefficients combining to zero,
/// right-hand sides combining to something positive.
pub fn verify_farkas(lp: &LinearProgram, certificate: &FarkasCertificate) -> bool {
    let rows = lp.canonical_rows();
    if rows.len() != certificate.multipliers.len() {
        return false;
    }
    let n = lp.num_vars();
    let mut combined = alloc::vec![Rational::zero(); n];
    let mut rhs = Rational::zero();
    for (row, y) in rows.iter().zip(&certificate.multipliers) {
        if !row.equality && y.is_negative() {
            return false;
        }
        for (acc, c) in combined.iter_mut().zip(&row.coeffs) {
            *acc += y * c;
        }
        rhs += y * &row.rhs;
    }
    combined.iter().all(Zero::is_zero) && rhs.is_positive()
}

/// Dense simplex tableau over the standard-form columns.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let divisor = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &divisor;
        }
        self.rhs[row] /= &divisor;
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            for j in 0..self.rows[i].len() {
                let delta = &factor * &self.rows[row][j];
                self.rows[i][j] -= delta;
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[i] -= delta;
        }
        self.basis[row] = col;
    }

    /// Maximize `costs . x` with Bland's rule. `enterable` bounds the
    /// columns that may enter the basis.
    fn simplex(&mut self, costs: &[Rational], enterable: usize) -> Step {
        loop {
            let cb: Vec<&Rational> = self.basis.iter().map(|&b| &costs[b]).collect();
            let mut entering = None;
            for (j, cost) in costs.iter().enumerate().take(enterable) {
                let mut reduced = cost.clone();
                for (i, cbi) in cb.iter().enumerate() {
                    if !cbi.is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= *cbi * &self.rows[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return Step::Optimal;
            };

            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][col];
                let better = match &leaving {
                    None => true,
                    Some((best_row, best)) => {
                        ratio < *best
                            || (ratio == *best && self.basis[i] < self.basis[*best_row])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return Step::Unbounded;
            };
            self.pivot(row, col);
        }
    }
}

/// Solve the program: exact status, basic solutions, Farkas certificates.
///
/// Identical inputs produce identical outcomes.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    lp.check_dimensions()?;

    let n = lp.num_vars();
    let rows = lp.canonical_rows();
    let m = rows.len();

    // Standard form: each free variable x_j splits into columns 2j (plus
    // part) and 2j+1 (minus part); one surplus column per inequality row;
    // one artificial column per row.
    let mut surplus_col = alloc::vec![None; m];
    let mut next = 2 * n;
    for (i, row) in rows.iter().enumerate() {
        if !row.equality {
            surplus_col[i] = Some(next);
            next += 1;
        }
    }
    let art_start = next;
    let total = art_start + m;

    let mut flip = alloc::vec![false; m];
    let mut tableau = Tableau {
        rows: Vec::with_capacity(m),
        rhs: Vec::with_capacity(m),
        basis: (art_start..total).collect(),
    };
    for (i, row) in rows.iter().enumerate() {
        flip[i] = row.rhs.is_negative();
        let sign = if flip[i] { -Rational::one() } else { Rational::one() };
        let mut t = alloc::vec![Rational::zero(); total];
        for (j, c) in row.coeffs.iter().enumerate() {
            let v = &sign * c;
            t[2 * j + 1] = -&v;
            t[2 * j] = v;
        }
        if let Some(col) = surplus_col[i] {
            t[col] = -&sign;
        }
        t[art_start + i] = Rational::one();
        tableau.rows.push(t);
        tableau.rhs.push(&sign * &row.rhs);
    }

    // Phase 1: drive the artificial variables to zero.
    let mut phase1 = alloc::vec![Rational::zero(); total];
    for c in phase1.iter_mut().skip(art_start) {
        *c = -Rational::one();
    }
    match tableau.simplex(&phase1, art_start) {
        Step::Optimal => {}
        Step::Unbounded => return Err(LpError::Internal("phase 1 cannot be unbounded")),
    }

    let infeasibility: Rational = tableau
        .basis
        .iter()
        .zip(&tableau.rhs)
        .filter(|&(&b, _)| b >= art_start)
        .map(|(_, v)| v.clone())
        .sum();
    if !infeasibility.is_zero() {
        // Phase-1 duals read off the artificial columns (they carry the
        // basis inverse), mapped back through the row sign flips.
        let mut multipliers = Vec::with_capacity(m);
        for (i, &flipped) in flip.iter().enumerate() {
            let mut y = Rational::zero();
            for (k, &b) in tableau.basis.iter().enumerate() {
                if b >= art_start {
                    y -= &tableau.rows[k][art_start + i];
                }
            }
            multipliers.push(if flipped { y } else { -y });
        }
        let certificate = FarkasCertificate { multipliers };
        if !verify_farkas(lp, &certificate) {
            return Err(LpError::Internal("farkas certificate failed verification"));
        }
        return Ok(LpOutcome::Infeasible { certificate });
    }

    // Pivot leftover artificials out of the basis; a row that offers no
    // structural pivot is redundant and gets dropped.
    let mut row = 0;
    while row < tableau.rows.len() {
        if tableau.basis[row] >= art_start {
            let col = (0..art_start).find(|&j| !tableau.rows[row][j].is_zero());
            match col {
                Some(col) => tableau.pivot(row, col),
                None => {
                    tableau.rows.remove(row);
                    tableau.rhs.remove(row);
                    tableau.basis.remove(row);
                    continue;
                }
            }
        }
        row += 1;
    }
    for t in tableau.rows.iter_mut() {
        t.truncate(art_start);
    }

    // Phase 2: the real objective over the split columns.
    let mut phase2 = alloc::vec![Rational::zero(); art_start];
    for (j, c) in lp.objective.iter().enumerate() {
        phase2[2 * j] = c.clone();
        phase2[2 * j + 1] = -c;
    }
    match tableau.simplex(&phase2, art_start) {
        Step::Optimal => {}
        Step::Unbounded => return Ok(LpOutcome::Unbounded),
    }

    let mut split = alloc::vec![Rational::zero(); 2 * n];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < 2 * n {
            split[b] = tableau.rhs[i].clone();
        }
    }
    let solution: Vec<Rational> = (0..n).map(|j| &split[2 * j] - &split[2 * j + 1]).collect();
    if !lp.satisfies(&solution) {
        return Err(LpError::Internal("optimal solution failed re-substitution"));
    }
    let value = lp
        .objective
        .iter()
        .zip(&solution)
        .map(|(c, v)| c * v)
        .sum();
    Ok(LpOutcome::Optimal { solution, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn coeffs(values: &[i64]) -> Vec<Rational> {
        values.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn bounded_single_variable() {
        let mut lp = LinearProgram::maximize(coeffs(&[1]));
        lp.add_constraint(coeffs(&[1]), Relation::Le, rat(3));
        lp.set_lower(0, rat(0));
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { solution, value } => {
                assert_eq!(solution, coeffs(&[3]));
                assert_eq!(value, rat(3));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn contradictory_bounds_give_certificate() {
        let mut lp = LinearProgram::maximize(coeffs(&[1]));
        lp.add_constraint(coeffs(&[1]), Relation::Le, rat(1));
        lp.add_constraint(coeffs(&[1]), Relation::Ge, rat(2));
        match solve(&lp).unwrap() {
            LpOutcome::Infeasible { certificate } => {
                assert!(verify_farkas(&lp, &certificate));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    // Hand-checked: with d1 >= 1, d2 >= 1, -4 d1 + 6 d2 <= 0,
    // -2 d1 - d2 <= 0 and the cap d1 + d2 <= 10, the maximum of d1 + d2
    // is 10 (vertex enumeration over the two variables).
    #[test]
    fn two_variable_system_with_cap() {
        let mut lp = LinearProgram::maximize(coeffs(&[1, 1]));
        lp.add_constraint(coeffs(&[-4, 6]), Relation::Le, rat(0));
        lp.add_constraint(coeffs(&[-2, -1]), Relation::Le, rat(0));
        lp.add_constraint(coeffs(&[1, 1]), Relation::Le, rat(10));
        lp.set_lower(0, rat(1));
        lp.set_lower(1, rat(1));
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { solution, value } => {
                assert_eq!(value, rat(10));
                assert!(lp.satisfies(&solution));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn free_variable_unbounded() {
        let lp = LinearProgram::maximize(coeffs(&[1]));
        assert_eq!(solve(&lp).unwrap(), LpOutcome::Unbounded);

        let mut capped = LinearProgram::maximize(coeffs(&[-1]));
        capped.set_upper(0, rat(5));
        // Maximizing -x with x <= 5 and no lower bound is unbounded too.
        assert_eq!(solve(&capped).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_rows_and_fractions() {
        // max x + y with x + y = 3/2, x - y >= 0, y >= 1/4
        let mut lp = LinearProgram::maximize(coeffs(&[1, 1]));
        lp.add_constraint(coeffs(&[1, 1]), Relation::Eq, ratio(3, 2));
        lp.add_constraint(coeffs(&[1, -1]), Relation::Ge, rat(0));
        lp.set_lower(1, ratio(1, 4));
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, ratio(3, 2));
                assert!(lp.satisfies(&solution));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn zero_objective_returns_feasible_point() {
        let mut lp = LinearProgram::maximize(coeffs(&[0, 0]));
        lp.add_constraint(coeffs(&[1, 2]), Relation::Ge, rat(4));
        lp.set_lower(0, rat(0));
        lp.set_lower(1, rat(0));
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { solution, value } => {
                assert_eq!(value, rat(0));
                assert!(lp.satisfies(&solution));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        // x + y = 2 stated twice, maximize x with x, y >= 0.
        let mut lp = LinearProgram::maximize(coeffs(&[1, 0]));
        lp.add_constraint(coeffs(&[1, 1]), Relation::Eq, rat(2));
        lp.add_constraint(coeffs(&[2, 2]), Relation::Eq, rat(4));
        lp.set_lower(0, rat(0));
        lp.set_lower(1, rat(0));
        match solve(&lp).unwrap() {
            LpOutcome::Optimal { solution, value } => {
                assert_eq!(value, rat(2));
                assert!(lp.satisfies(&solution));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn zero_row_infeasibility() {
        let mut lp = LinearProgram::maximize(coeffs(&[0]));
        lp.add_constraint(coeffs(&[0]), Relation::Ge, rat(1));
        match solve(&lp).unwrap() {
            LpOutcome::Infeasible { certificate } => {
                assert!(verify_farkas(&lp, &certificate));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn dimension_mismatch_is_reported_before_solving() {
        let mut lp = LinearProgram::maximize(coeffs(&[1, 1]));
        lp.add_constraint(coeffs(&[1]), Relation::Le, rat(1));
        assert_eq!(
            solve(&lp),
            Err(LpError::DimensionMismatch {
                row: 0,
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn deterministic_outcomes() {
        let mut lp = LinearProgram::maximize(coeffs(&[3, 2, 1]));
        lp.add_constraint(coeffs(&[1, 1, 1]), Relation::Le, rat(7));
        lp.add_constraint(coeffs(&[2, 1, 0]), Relation::Le, rat(8));
        lp.add_constraint(coeffs(&[0, 1, 3]), Relation::Ge, rat(2));
        for j in 0..3 {
            lp.set_lower(j, rat(0));
        }
        let first = solve(&lp).unwrap();
        let second = solve(&lp).unwrap();
        assert_eq!(first, second);
    }
}
