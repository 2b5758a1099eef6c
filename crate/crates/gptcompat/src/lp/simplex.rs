//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! The solver rewrites the user-facing problem (free/bounded variables,
//! mixed relations) into standard form with non-negative internal
//! variables, seeds the basis with slacks where possible and artificials
//! elsewhere, and pivots with Bland's anti-cycling rule. On phase-1
//! failure the simplex multipliers are read off the final objective row
//! and mapped back to Farkas multipliers over the original rows.

use num_traits::{One, Signed, Zero};

use super::{LpOutcome, LpProblem, Relation};
use crate::error::Result;
use crate::rat::Rational;

enum VarMap {
    /// x = lower + internal, internal >= 0
    Shift { col: usize, lower: Rational },
    /// x = upper - internal, internal >= 0
    Flip { col: usize, upper: Rational },
    /// x = pos - neg, both >= 0
    Split { pos: usize, neg: usize },
}

struct InternalRow {
    coeffs: Vec<Rational>,
    rhs: Rational,
    relation: Relation,
    /// Index of the originating user row; `None` for bound rows.
    origin: Option<usize>,
}

struct RowMeta {
    origin: Option<usize>,
    relation: Relation,
    negated: bool,
    slack_col: Option<usize>,
    /// Slack coefficient as written into the initial tableau (+1 or -1).
    slack_sign: i32,
    art_col: Option<usize>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    z: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let mut prow = std::mem::take(&mut self.rows[row]);
        let piv = prow[col].clone();
        if !piv.is_one() {
            for x in prow.iter_mut() {
                if !x.is_zero() {
                    *x /= &piv;
                }
            }
        }
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            let target = &mut self.rows[i];
            for (j, pv) in prow.iter().enumerate() {
                if !pv.is_zero() {
                    target[j] -= &factor * pv;
                }
            }
        }
        let zfactor = self.z[col].clone();
        if !zfactor.is_zero() {
            for (j, pv) in prow.iter().enumerate() {
                if !pv.is_zero() {
                    self.z[j] -= &zfactor * pv;
                }
            }
        }
        self.rows[row] = prow;
        self.basis[row] = col;
    }

}

pub(super) fn solve(problem: &LpProblem) -> Result<LpOutcome> {
    let n = problem.num_vars();
    let m = problem.num_rows();

    // Contradictory bounds make the feasible box empty; the all-zero
    // multiplier vector is then a valid (vacuous) certificate.
    if problem.box_is_empty() {
        return Ok(LpOutcome::Infeasible {
            farkas: vec![Rational::zero(); m],
        });
    }

    // Substitute variables so every internal variable is non-negative.
    let mut maps = Vec::with_capacity(n);
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new(); // (internal col, width)
    let mut next_col = 0usize;
    for j in 0..n {
        let (lo, up) = problem.bounds(j);
        match (lo, up) {
            (Some(l), Some(u)) => {
                bound_rows.push((next_col, u - l));
                maps.push(VarMap::Shift {
                    col: next_col,
                    lower: l.clone(),
                });
                next_col += 1;
            }
            (Some(l), None) => {
                maps.push(VarMap::Shift {
                    col: next_col,
                    lower: l.clone(),
                });
                next_col += 1;
            }
            (None, Some(u)) => {
                maps.push(VarMap::Flip {
                    col: next_col,
                    upper: u.clone(),
                });
                next_col += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split {
                    pos: next_col,
                    neg: next_col + 1,
                });
                next_col += 2;
            }
        }
    }
    let n_struct = next_col;

    let mut internal: Vec<InternalRow> = Vec::with_capacity(m + bound_rows.len());
    for i in 0..m {
        let (coeffs, relation, rhs) = problem.row(i);
        let mut row = vec![Rational::zero(); n_struct];
        let mut b = rhs.clone();
        for (j, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &maps[j] {
                VarMap::Shift { col, lower } => {
                    row[*col] = a.clone();
                    b -= a * lower;
                }
                VarMap::Flip { col, upper } => {
                    row[*col] = -a.clone();
                    b -= a * upper;
                }
                VarMap::Split { pos, neg } => {
                    row[*pos] = a.clone();
                    row[*neg] = -a.clone();
                }
            }
        }
        internal.push(InternalRow {
            coeffs: row,
            rhs: b,
            relation,
            origin: Some(i),
        });
    }
    for (col, width) in bound_rows {
        let mut row = vec![Rational::zero(); n_struct];
        row[col] = Rational::one();
        internal.push(InternalRow {
            coeffs: row,
            rhs: width,
            relation: Relation::Le,
            origin: None,
        });
    }

    // Slack columns for inequality rows, then rhs sign normalization, then
    // artificial columns wherever no slack can seed the basis.
    let m_int = internal.len();
    let mut slack_of = vec![None; m_int];
    let mut next = n_struct;
    for (i, row) in internal.iter().enumerate() {
        if !matches!(row.relation, Relation::Eq) {
            slack_of[i] = Some(next);
            next += 1;
        }
    }
    let n_with_slack = next;

    let mut meta = Vec::with_capacity(m_int);
    let mut art_of = vec![None; m_int];
    for (i, row) in internal.iter().enumerate() {
        let negated = row.rhs.is_negative();
        let tau = match row.relation {
            Relation::Le => 1,
            Relation::Ge => -1,
            Relation::Eq => 0,
        };
        let slack_sign = if negated { -tau } else { tau };
        if slack_sign != 1 {
            art_of[i] = Some(next);
            next += 1;
        }
        meta.push(RowMeta {
            origin: row.origin,
            relation: row.relation,
            negated,
            slack_col: slack_of[i],
            slack_sign,
            art_col: None,
        });
    }
    for (i, a) in art_of.iter().enumerate() {
        meta[i].art_col = *a;
    }
    let ncols = next;

    let mut tab = Tableau {
        rows: Vec::with_capacity(m_int),
        z: vec![Rational::zero(); ncols + 1],
        basis: Vec::with_capacity(m_int),
        ncols,
    };
    for (i, row) in internal.iter().enumerate() {
        let mut t = vec![Rational::zero(); ncols + 1];
        let flip = meta[i].negated;
        for (j, a) in row.coeffs.iter().enumerate() {
            if !a.is_zero() {
                t[j] = if flip { -a.clone() } else { a.clone() };
            }
        }
        if let Some(sc) = meta[i].slack_col {
            t[sc] = if meta[i].slack_sign == 1 {
                Rational::one()
            } else {
                -Rational::one()
            };
        }
        if let Some(ac) = meta[i].art_col {
            t[ac] = Rational::one();
        }
        t[ncols] = if flip { -row.rhs.clone() } else { row.rhs.clone() };
        let basic = meta[i].art_col.or(meta[i].slack_col).expect("row has a basis seed");
        tab.basis.push(basic);
        tab.rows.push(t);
    }

    let is_artificial = |j: usize| j >= n_with_slack;
    let has_artificials = ncols > n_with_slack;

    if has_artificials {
        // Phase 1: maximize minus the sum of artificials.
        for j in 0..=ncols {
            let mut zj = Rational::zero();
            for (i, row) in tab.rows.iter().enumerate() {
                if meta[i].art_col == Some(tab.basis[i]) && !row[j].is_zero() {
                    zj -= &row[j];
                }
            }
            if j < ncols && is_artificial(j) {
                zj += Rational::one(); // minus the cost of the column
            }
            tab.z[j] = zj;
        }
        run(&mut tab, |_| true);
        let value = tab.z[ncols].clone();
        if value.is_negative() {
            // Infeasible: read the simplex multipliers off the z-row.
            let mut farkas = vec![Rational::zero(); m];
            for info in meta.iter() {
                let origin = match info.origin {
                    Some(o) => o,
                    None => continue,
                };
                let pi = match (info.art_col, info.slack_col) {
                    (Some(ac), _) => tab.z[ac].clone() - Rational::one(),
                    (None, Some(sc)) => {
                        if info.slack_sign == 1 {
                            tab.z[sc].clone()
                        } else {
                            -tab.z[sc].clone()
                        }
                    }
                    (None, None) => unreachable!("equality rows always carry artificials"),
                };
                let mu = if info.negated { -pi } else { pi };
                farkas[origin] = match info.relation {
                    Relation::Ge => -mu,
                    Relation::Le | Relation::Eq => mu,
                };
            }
            return Ok(LpOutcome::Infeasible { farkas });
        }
        // Feasible: drive leftover artificials out of the basis; rows where
        // that is impossible are redundant and stay pinned at zero.
        for i in 0..tab.rows.len() {
            if !is_artificial(tab.basis[i]) {
                continue;
            }
            let col = (0..n_with_slack).find(|&j| !tab.rows[i][j].is_zero());
            if let Some(col) = col {
                tab.pivot(i, col);
            }
        }
    }

    // Phase 2 with the real objective mapped onto internal columns.
    let mut cost = vec![Rational::zero(); ncols];
    for (j, map) in maps.iter().enumerate() {
        let c = &problem.objective()[j];
        if c.is_zero() {
            continue;
        }
        match map {
            VarMap::Shift { col, .. } => cost[*col] = c.clone(),
            VarMap::Flip { col, .. } => cost[*col] = -c.clone(),
            VarMap::Split { pos, neg } => {
                cost[*pos] = c.clone();
                cost[*neg] = -c.clone();
            }
        }
    }
    for j in 0..=ncols {
        let mut zj = Rational::zero();
        for (i, row) in tab.rows.iter().enumerate() {
            let cb = &cost[tab.basis[i]];
            if !cb.is_zero() && !row[j].is_zero() {
                zj += cb * &row[j];
            }
        }
        if j < ncols {
            zj -= &cost[j];
        }
        tab.z[j] = zj;
    }
    if let Some(enter) = run(&mut tab, |j| !is_artificial(j)) {
        // Unbounded: assemble the improving ray in internal coordinates.
        let mut dir = vec![Rational::zero(); ncols];
        dir[enter] = Rational::one();
        for (i, row) in tab.rows.iter().enumerate() {
            if !row[enter].is_zero() {
                dir[tab.basis[i]] = -row[enter].clone();
            }
        }
        let ray = maps
            .iter()
            .map(|map| match map {
                VarMap::Shift { col, .. } => dir[*col].clone(),
                VarMap::Flip { col, .. } => -dir[*col].clone(),
                VarMap::Split { pos, neg } => &dir[*pos] - &dir[*neg],
            })
            .collect();
        return Ok(LpOutcome::Unbounded { ray });
    }

    let mut internal_solution = vec![Rational::zero(); ncols];
    for (i, &b) in tab.basis.iter().enumerate() {
        internal_solution[b] = tab.rhs(i).clone();
    }
    let solution: Vec<Rational> = maps
        .iter()
        .map(|map| match map {
            VarMap::Shift { col, lower } => lower + &internal_solution[*col],
            VarMap::Flip { col, upper } => upper - &internal_solution[*col],
            VarMap::Split { pos, neg } => &internal_solution[*pos] - &internal_solution[*neg],
        })
        .collect();
    let value = problem
        .objective()
        .iter()
        .zip(&solution)
        .map(|(c, x)| c * x)
        .sum();
    Ok(LpOutcome::Optimal { solution, value })
}

/// Runs Bland pivoting to optimality; returns the entering column if the
/// problem is unbounded along it.
fn run(tab: &mut Tableau, allowed: impl Fn(usize) -> bool) -> Option<usize> {
    // Bland's rule cannot cycle, so this loop terminates; the cap turns a
    // would-be hang into a loud failure.
    for _ in 0..2_000_000u64 {
        let enter = (0..tab.ncols).find(|&j| allowed(j) && tab.z[j].is_negative());
        let enter = match enter {
            Some(j) => j,
            None => return None,
        };
        let mut leave: Option<(Rational, usize)> = None;
        for i in 0..tab.rows.len() {
            let a = &tab.rows[i][enter];
            if !a.is_positive() {
                continue;
            }
            let ratio = tab.rhs(i) / a;
            let better = match &leave {
                None => true,
                Some((best, row)) => {
                    ratio < *best || (ratio == *best && tab.basis[i] < tab.basis[*row])
                }
            };
            if better {
                leave = Some((ratio, i));
            }
        }
        match leave {
            Some((_, row)) => tab.pivot(row, enter),
            None => return Some(enter),
        }
    }
    panic!("simplex exceeded the pivot cap; this indicates a solver bug");
}
