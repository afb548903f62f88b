//! Exact feasibility of `A x = b, x >= 0` by the Phase-I simplex method.
//!
//! The tableau is dense over [`Rational`]; Bland's rule (smallest entering
//! index, smallest leaving basic index on ratio ties) guarantees termination.

use num_traits::{Signed, Zero};

use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// A feasible `x` when one exists.
    pub solution: Option<Vec<Rational>>,
    pub pivots: usize,
}

/// Phase-I simplex on `A x = b, x >= 0`.
///
/// Panics if the rows of `a` do not all have the same length as each other or
/// if `b` has a different number of rows.
pub fn solve_feasibility(a: &[Vec<Rational>], b: &[Rational]) -> FeasibilityReport {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    let n = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == n), "ragged constraint matrix");

    // Columns 0..n are the structural variables, n..n+m the artificials.
    let width = n + m;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut t: Vec<Rational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        t.resize(width, Rational::zero());
        t[n + i] = Rational::from_integer(1.into());
        rows.push(t);
        rhs.push(if flip { -bi } else { bi.clone() });
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the Phase-I objective (sum of artificials).
    let mut cost = vec![Rational::zero(); width];
    let mut value = Rational::zero();
    for i in 0..m {
        for j in 0..n {
            cost[j] -= &rows[i][j];
        }
        value -= &rhs[i];
    }

    let mut pivots = 0;
    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !rows[i][enter].is_positive() {
                continue;
            }
            let r = &rhs[i] / &rows[i][enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => r < *best || (r == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, r));
            }
        }
        // Phase I is bounded below by zero, so an entering column always has a
        // positive entry.
        let (p, _) = leave.expect("phase-I objective is bounded");
        pivot(&mut rows, &mut rhs, &mut cost, &mut value, p, enter);
        basis[p] = enter;
        pivots += 1;
    }

    let feasible = value.is_zero();
    let solution = feasible.then(|| {
        let mut x = vec![Rational::zero(); n];
        for (i, &v) in basis.iter().enumerate() {
            if v < n {
                x[v] = rhs[i].clone();
            }
        }
        x
    });
    FeasibilityReport {
        feasible,
        solution,
        pivots,
    }
}

fn pivot(
    rows: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    value: &mut Rational,
    p: usize,
    q: usize,
) {
    let width = rows[p].len();
    let inv = rows[p][q].recip();
    for x in rows[p].iter_mut() {
        *x *= &inv;
    }
    rhs[p] *= &inv;
    let prow = rows[p].clone();
    let prhs = rhs[p].clone();
    for i in 0..rows.len() {
        if i == p || rows[i][q].is_zero() {
            continue;
        }
        let f = rows[i][q].clone();
        for j in 0..width {
            if !prow[j].is_zero() {
                let delta = &f * &prow[j];
                rows[i][j] -= delta;
            }
        }
        rhs[i] -= &f * &prhs;
    }
    if !cost[q].is_zero() {
        let f = cost[q].clone();
        for j in 0..width {
            if !prow[j].is_zero() {
                cost[j] -= &f * &prow[j];
            }
        }
        *value -= &f * &prhs;
    }
}
