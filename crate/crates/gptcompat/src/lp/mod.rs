//! Exact rational linear programming with verifiable certificates.
//!
//! Problems are stated over free variables with optional bounds, a row
//! matrix with per-row relations, and a maximization objective. [`solve`]
//! runs a two-phase primal simplex with Bland's anti-cycling rule entirely
//! over rationals, so there are no tolerances anywhere: an outcome is an
//! exact optimum, an exact Farkas infeasibility certificate, or an exact
//! unboundedness ray.
//!
//! Certificates are re-checkable without re-solving via
//! [`verify_certificate`], which only performs direct rational arithmetic
//! on the original problem data.

mod simplex;

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rational, Rational};

/// Row relation of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }

    /// Orientation used when folding a row into a `<=` combination.
    fn fold_sign(self) -> i32 {
        match self {
            Relation::Ge => -1,
            Relation::Le | Relation::Eq => 1,
        }
    }
}

/// A rational linear program: maximize `objective · x` subject to rows
/// `a_i · x (<=|=|>=) b_i` and optional per-variable bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    num_vars: usize,
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    relations: Vec<Relation>,
    rhs: Vec<Rational>,
    lower: Vec<Option<Rational>>,
    upper: Vec<Option<Rational>>,
}

impl LpProblem {
    /// A problem over `num_vars` free variables with a zero objective.
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            rows: Vec::new(),
            relations: Vec::new(),
            rhs: Vec::new(),
            lower: vec![None; num_vars],
            upper: vec![None; num_vars],
        }
    }

    /// Sets the maximization objective.
    pub fn set_objective(&mut self, objective: Vec<Rational>) -> Result<()> {
        if objective.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: objective.len(),
            });
        }
        self.objective = objective;
        Ok(())
    }

    /// Appends a constraint row.
    pub fn push_row(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: coeffs.len(),
            });
        }
        self.rows.push(coeffs);
        self.relations.push(relation);
        self.rhs.push(rhs);
        Ok(())
    }

    /// Sets both bounds of a variable (either side may stay free).
    pub fn set_bounds(&mut self, var: usize, lower: Option<Rational>, upper: Option<Rational>) -> Result<()> {
        if var >= self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: var,
            });
        }
        self.lower[var] = lower;
        self.upper[var] = upper;
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn row(&self, i: usize) -> (&[Rational], Relation, &Rational) {
        (&self.rows[i], self.relations[i], &self.rhs[i])
    }

    pub fn bounds(&self, var: usize) -> (Option<&Rational>, Option<&Rational>) {
        (self.lower[var].as_ref(), self.upper[var].as_ref())
    }

    /// Exact text dump, one constraint per line, for bug reports.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let term = |c: &Rational, j: usize| format!("{} x{}", format_rational(c), j);
        out.push_str("maximize ");
        out.push_str(
            &self
                .objective
                .iter()
                .enumerate()
                .map(|(j, c)| term(c, j))
                .collect::<Vec<_>>()
                .join(" + "),
        );
        out.push('\n');
        for i in 0..self.rows.len() {
            let lhs = self.rows[i]
                .iter()
                .enumerate()
                .map(|(j, c)| term(c, j))
                .collect::<Vec<_>>()
                .join(" + ");
            out.push_str(&format!(
                "{} {} {}\n",
                lhs,
                self.relations[i].symbol(),
                format_rational(&self.rhs[i])
            ));
        }
        for j in 0..self.num_vars {
            match (&self.lower[j], &self.upper[j]) {
                (None, None) => {}
                (lo, up) => {
                    let lo = lo.as_ref().map(format_rational).unwrap_or_else(|| "-inf".into());
                    let up = up.as_ref().map(format_rational).unwrap_or_else(|| "+inf".into());
                    out.push_str(&format!("{lo} <= x{j} <= {up}\n"));
                }
            }
        }
        out
    }

    fn row_satisfied(&self, i: usize, x: &[Rational]) -> bool {
        let lhs: Rational = self.rows[i]
            .iter()
            .zip(x)
            .map(|(a, v)| a * v)
            .sum();
        match self.relations[i] {
            Relation::Le => lhs <= self.rhs[i],
            Relation::Eq => lhs == self.rhs[i],
            Relation::Ge => lhs >= self.rhs[i],
        }
    }

    fn box_is_empty(&self) -> bool {
        (0..self.num_vars).any(|j| match (&self.lower[j], &self.upper[j]) {
            (Some(l), Some(u)) => l > u,
            _ => false,
        })
    }
}

impl fmt::Display for LpProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

/// Result of solving an [`LpProblem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// Exact optimum.
    Optimal { solution: Vec<Rational>, value: Rational },
    /// Farkas certificate: one multiplier per row, non-negative on
    /// inequality rows, combining the rows (with `>=` rows negated) into a
    /// contradiction once variable bounds are folded in.
    Infeasible { farkas: Vec<Rational> },
    /// Feasibility-preserving direction that strictly improves the objective.
    Unbounded { ray: Vec<Rational> },
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible { .. })
    }
}

/// Solves the program by two-phase primal simplex with Bland's rule.
///
/// Deterministic: identical problems produce bit-identical outcomes.
pub fn solve(problem: &LpProblem) -> Result<LpOutcome> {
    let outcome = simplex::solve(problem)?;
    debug_assert_eq!(verify_certificate(problem, &outcome), Ok(true));
    Ok(outcome)
}

/// Solves with a zero objective; `Optimal` means feasible.
pub fn check_feasibility(problem: &LpProblem) -> Result<LpOutcome> {
    let mut p = problem.clone();
    p.set_objective(vec![Rational::zero(); problem.num_vars()])?;
    solve(&p)
}

/// Re-checks an outcome against the problem by direct exact arithmetic,
/// without re-solving.
pub fn verify_certificate(problem: &LpProblem, outcome: &LpOutcome) -> Result<bool> {
    match outcome {
        LpOutcome::Optimal { solution, value } => {
            if solution.len() != problem.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: problem.num_vars,
                    got: solution.len(),
                });
            }
            for i in 0..problem.num_rows() {
                if !problem.row_satisfied(i, solution) {
                    return Ok(false);
                }
            }
            for j in 0..problem.num_vars {
                if let Some(l) = &problem.lower[j] {
                    if &solution[j] < l {
                        return Ok(false);
                    }
                }
                if let Some(u) = &problem.upper[j] {
                    if &solution[j] > u {
                        return Ok(false);
                    }
                }
            }
            let actual: Rational = problem
                .objective
                .iter()
                .zip(solution)
                .map(|(c, v)| c * v)
                .sum();
            Ok(&actual == value)
        }
        LpOutcome::Infeasible { farkas } => {
            if farkas.len() != problem.num_rows() {
                return Err(Error::DimensionMismatch {
                    expected: problem.num_rows(),
                    got: farkas.len(),
                });
            }
            // Multipliers on inequality rows must be non-negative; equality
            // rows may carry either sign.
            for (y, rel) in farkas.iter().zip(&problem.relations) {
                if !matches!(rel, Relation::Eq) && y.is_negative() {
                    return Ok(false);
                }
            }
            if problem.box_is_empty() {
                // Contradictory bounds: the feasible box is already empty.
                return Ok(true);
            }
            // Combined row (>= rows folded in with negated orientation).
            let mut combined = vec![Rational::zero(); problem.num_vars];
            let mut combined_rhs = Rational::zero();
            for i in 0..problem.num_rows() {
                if farkas[i].is_zero() {
                    continue;
                }
                let w = if problem.relations[i].fold_sign() < 0 {
                    -farkas[i].clone()
                } else {
                    farkas[i].clone()
                };
                for (c, a) in combined.iter_mut().zip(&problem.rows[i]) {
                    if !a.is_zero() {
                        *c += &w * a;
                    }
                }
                combined_rhs += &w * &problem.rhs[i];
            }
            // Minimum of the combined functional over the bound box. Every
            // feasible point satisfies `combined · x <= combined_rhs`, so a
            // box minimum exceeding the rhs is an exact contradiction.
            let mut box_min = Rational::zero();
            for j in 0..problem.num_vars {
                let c = &combined[j];
                if c.is_zero() {
                    continue;
                }
                let bound = if c.is_positive() {
                    &problem.lower[j]
                } else {
                    &problem.upper[j]
                };
                match bound {
                    Some(b) => box_min += c * b,
                    None => return Ok(false),
                }
            }
            Ok(box_min > combined_rhs)
        }
        LpOutcome::Unbounded { ray } => {
            if ray.len() != problem.num_vars {
                return Err(Error::DimensionMismatch {
                    expected: problem.num_vars,
                    got: ray.len(),
                });
            }
            for i in 0..problem.num_rows() {
                let along: Rational = problem.rows[i].iter().zip(ray).map(|(a, v)| a * v).sum();
                let ok = match problem.relations[i] {
                    Relation::Le => !along.is_positive(),
                    Relation::Eq => along.is_zero(),
                    Relation::Ge => !along.is_negative(),
                };
                if !ok {
                    return Ok(false);
                }
            }
            for j in 0..problem.num_vars {
                if problem.lower[j].is_some() && ray[j].is_negative() {
                    return Ok(false);
                }
                if problem.upper[j].is_some() && ray[j].is_positive() {
                    return Ok(false);
                }
            }
            let gain: Rational = problem.objective.iter().zip(ray).map(|(c, v)| c * v).sum();
            Ok(gain.is_positive())
        }
    }
}
