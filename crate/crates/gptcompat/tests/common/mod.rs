//! Shared test helpers: an LP oracle independent of the simplex path, and
//! deterministic random-problem generation.

use gptcompat::lp::{LpOutcome, LpProblem, Relation};
use gptcompat::rat::{int, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Solves `A x = b` by plain Gaussian elimination; `None` when singular.
fn gauss_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let div = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &div;
        }
        b[col] /= &div;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                let d = &f * &a[col][c];
                a[r][c] -= d;
            }
            let d = &f * &b[col];
            b[r] -= d;
        }
    }
    Some(b)
}

/// Brute-force optimum by enumerating every choice-of-basis vertex
/// candidate: each size-n subset of {rows as equalities} ∪ {active bounds}
/// is solved exactly and screened for feasibility. Correct for problems
/// whose variables all carry finite bounds. Returns `None` if no candidate
/// is feasible (infeasibility) and `Some(best)` otherwise.
pub fn brute_force_optimum(p: &LpProblem) -> Option<Rational> {
    let n = p.num_vars();
    // Hyperplane pool: every row plus every finite bound.
    let mut planes: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..p.num_rows() {
        let (coeffs, _, rhs) = p.row(i);
        planes.push((coeffs.to_vec(), rhs.clone()));
    }
    for j in 0..n {
        let (lo, up) = p.bounds(j);
        let mut unit = vec![Rational::zero(); n];
        unit[j] = int(1);
        if let Some(l) = lo {
            planes.push((unit.clone(), l.clone()));
        }
        if let Some(u) = up {
            planes.push((unit, u.clone()));
        }
    }

    let feasible = |x: &[Rational]| -> bool {
        for i in 0..p.num_rows() {
            let (coeffs, rel, rhs) = p.row(i);
            let lhs: Rational = coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
            let ok = match rel {
                Relation::Le => &lhs <= rhs,
                Relation::Eq => &lhs == rhs,
                Relation::Ge => &lhs >= rhs,
            };
            if !ok {
                return false;
            }
        }
        for j in 0..n {
            let (lo, up) = p.bounds(j);
            if let Some(l) = lo {
                if &x[j] < l {
                    return false;
                }
            }
            if let Some(u) = up {
                if &x[j] > u {
                    return false;
                }
            }
        }
        true
    };

    let mut best: Option<Rational> = None;
    let mut consider = |x: &[Rational]| {
        if feasible(x) {
            let value: Rational = p.objective().iter().zip(x).map(|(c, v)| c * v).sum();
            if best.as_ref().map_or(true, |b| value > *b) {
                best = Some(value);
            }
        }
    };

    if n == 0 {
        consider(&[]);
        return best;
    }

    let mut subset: Vec<usize> = (0..n).collect();
    loop {
        let a: Vec<Vec<Rational>> = subset.iter().map(|&k| planes[k].0.clone()).collect();
        let b: Vec<Rational> = subset.iter().map(|&k| planes[k].1.clone()).collect();
        if let Some(x) = gauss_solve(a, b) {
            consider(&x);
        }
        // Next lexicographic subset of size n.
        let mut i = n;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if subset[i] != i + planes.len() - n {
                break;
            }
        }
        if subset[i] == i + planes.len() - n {
            return best;
        }
        subset[i] += 1;
        for k in i + 1..n {
            subset[k] = subset[k - 1] + 1;
        }
    }
}

/// Deterministic random problem over a finite box, small enough for the
/// brute-force oracle.
pub fn random_boxed_problem(seed: u64) -> LpProblem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(0..=4);
    let mut p = LpProblem::new(n);
    let coeff = |rng: &mut ChaCha8Rng| int(rng.gen_range(-3..=3));
    let objective = (0..n).map(|_| coeff(&mut rng)).collect();
    p.set_objective(objective).unwrap();
    for _ in 0..m {
        let row: Vec<Rational> = (0..n).map(|_| coeff(&mut rng)).collect();
        let rel = match rng.gen_range(0..3) {
            0 => Relation::Le,
            1 => Relation::Eq,
            _ => Relation::Ge,
        };
        let rhs = int(rng.gen_range(-4..=4));
        p.push_row(row, rel, rhs).unwrap();
    }
    for j in 0..n {
        let lo = int(rng.gen_range(-2..=0));
        let up = int(rng.gen_range(0..=3));
        p.set_bounds(j, Some(lo), Some(up)).unwrap();
    }
    p
}

/// Checks one random problem against the oracle; panics with context on any
/// disagreement. Returns the solver outcome for further scrutiny.
pub fn check_against_oracle(p: &LpProblem) -> LpOutcome {
    let outcome = gptcompat::lp::solve(p).expect("well-formed problem");
    assert_eq!(
        gptcompat::lp::verify_certificate(p, &outcome),
        Ok(true),
        "certificate must verify\n{}",
        p.dump()
    );
    let oracle = brute_force_optimum(p);
    match (&outcome, oracle) {
        (LpOutcome::Optimal { value, .. }, Some(best)) => {
            assert_eq!(value, &best, "optimum mismatch\n{}", p.dump());
        }
        (LpOutcome::Infeasible { .. }, None) => {}
        (got, oracle) => panic!(
            "solver and oracle disagree: solver={got:?}, oracle={oracle:?}\n{}",
            p.dump()
        ),
    }
    outcome
}
