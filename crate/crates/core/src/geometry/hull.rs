//! Common points of convex hulls: the exact LP route and the combinatorial
//! route for points on the moment curve.

use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::lp::solve_feasibility;
use super::predicates::check_dims;
use super::rational::{Rational, RationalPoint};

/// Whether the convex hulls of all `classes` share a common point.
///
/// Builds one block of barycentric weights per class (non-negative, summing
/// to one) and ties the combination of the first class to every other class
/// coordinate by coordinate, then decides feasibility exactly.
pub fn hulls_intersect(classes: &[Vec<RationalPoint>]) -> Result<bool> {
    common_point(classes).map(|p| p.is_some())
}

/// Like [`hulls_intersect`] but also returns a witness point.
pub fn common_point(classes: &[Vec<RationalPoint>]) -> Result<Option<RationalPoint>> {
    let Some(first) = classes.first() else {
        return Err(Error::invalid("at least one class is required"));
    };
    if classes.iter().any(Vec::is_empty) {
        return Err(Error::invalid("convex hull of an empty class"));
    }
    let d = first[0].dim();
    for class in classes {
        check_dims(class, d)?;
    }
    if classes.len() == 1 {
        return Ok(Some(first[0].clone()));
    }

    let k = classes.len();
    let offsets: Vec<usize> = classes
        .iter()
        .scan(0, |acc, c| {
            let o = *acc;
            *acc += c.len();
            Some(o)
        })
        .collect();
    let nvars: usize = classes.iter().map(Vec::len).sum();
    let mut a = Vec::with_capacity(k + (k - 1) * d);
    let mut b = Vec::with_capacity(a.capacity());

    for (c, class) in classes.iter().enumerate() {
        let mut row = vec![Rational::zero(); nvars];
        for j in 0..class.len() {
            row[offsets[c] + j] = Rational::one();
        }
        a.push(row);
        b.push(Rational::one());
    }
    for (c, class) in classes.iter().enumerate().skip(1) {
        for axis in 0..d {
            let mut row = vec![Rational::zero(); nvars];
            for (j, p) in first.iter().enumerate() {
                row[j] = p.coords[axis].clone();
            }
            for (j, p) in class.iter().enumerate() {
                row[offsets[c] + j] = -p.coords[axis].clone();
            }
            a.push(row);
            b.push(Rational::zero());
        }
    }

    let report = solve_feasibility(&a, &b);
    Ok(report.solution.map(|x| {
        let mut coords = vec![Rational::zero(); d];
        for (j, p) in first.iter().enumerate() {
            for axis in 0..d {
                coords[axis] += &x[j] * &p.coords[axis];
            }
        }
        RationalPoint::new(coords)
    }))
}

/// Number of maximal runs when the two parameter sets are merged in order
/// and labelled by origin: the longest alternating sequence along the curve.
pub fn merged_alternation(a: &[Rational], b: &[Rational]) -> Result<usize> {
    let mut tagged: Vec<(&Rational, bool)> = a
        .iter()
        .map(|t| (t, false))
        .chain(b.iter().map(|t| (t, true)))
        .collect();
    tagged.sort_by(|x, y| x.0.cmp(y.0));
    if let Some(w) = tagged.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Degenerate(format!("parameter {} appears twice", w[0].0)));
    }
    let mut runs = 0;
    let mut last = None;
    for (_, side) in tagged {
        if last != Some(side) {
            runs += 1;
            last = Some(side);
        }
    }
    Ok(runs)
}

/// Combinatorial intersection test for two point sets on the moment curve of
/// `R^d`, given by their parameters: the hulls meet iff the merged sequence
/// alternates at least `d + 2` times.
pub fn breen_intersect(a: &[Rational], b: &[Rational], d: usize) -> Result<bool> {
    if d == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    Ok(merged_alternation(a, b)? >= d + 2)
}
