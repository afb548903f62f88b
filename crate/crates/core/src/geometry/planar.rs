//! Planar helpers: turns, convex hulls, general-position checks and the
//! convex-position subset finder.

use std::cmp::Ordering;

use crate::error::{Error, Result};

use super::predicates::check_dims;
use super::rational::{sign, Rational, RationalPoint};

/// Sign of the cross product `(b - a) x (c - a)`: `+1` for a left turn.
pub fn turn(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> i8 {
    let (ax, ay) = (&a.coords[0], &a.coords[1]);
    let cross: Rational = (&b.coords[0] - ax) * (&c.coords[1] - ay) - (&b.coords[1] - ay) * (&c.coords[0] - ax);
    sign(&cross)
}

fn require_planar(points: &[RationalPoint]) -> Result<()> {
    check_dims(points, 2)
}

/// First collinear triple (by index), if any.
pub fn find_collinear_triple(points: &[RationalPoint]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if turn(&points[i], &points[j], &points[k]) == 0 {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Indices of the strict convex hull vertices in counter-clockwise order,
/// starting from the lowest-then-leftmost point (monotone chain).
pub fn convex_hull_indices(points: &[RationalPoint]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].coords.cmp(&points[b].coords));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && turn(
                &points[lower[lower.len() - 2]],
                &points[lower[lower.len() - 1]],
                &points[i],
            ) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && turn(
                &points[upper[upper.len() - 2]],
                &points[upper[upper.len() - 1]],
                &points[i],
            ) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Whether every point is a strict vertex of the convex hull.
pub fn is_convex_position(points: &[RationalPoint]) -> bool {
    points.len() <= 2 || convex_hull_indices(points).len() == points.len()
}

/// Finds `n` points in convex position among `points`, returned in
/// counter-clockwise order.
///
/// Rejects inputs with a collinear triple. For each anchor (the lowest point
/// of the polygon to be found) the candidates above it are sorted by angle
/// and a dynamic program over ordered pairs extends convex chains; the
/// longest closed chain wins, and any `n` of its vertices are in convex
/// position.
pub fn convex_position_subset_2d(points: &[RationalPoint], n: usize) -> Result<Option<Vec<RationalPoint>>> {
    require_planar(points)?;
    if let Some((i, j, k)) = find_collinear_triple(points) {
        return Err(Error::Degenerate(format!(
            "collinear triple {} {} {}",
            points[i], points[j], points[k]
        )));
    }
    if n > points.len() {
        return Ok(None);
    }
    if n <= 3 {
        let mut pick: Vec<usize> = (0..n).collect();
        if n == 3 && turn(&points[0], &points[1], &points[2]) < 0 {
            pick.swap(1, 2);
        }
        return Ok(Some(pick.into_iter().map(|i| points[i].clone()).collect()));
    }

    let mut best: Vec<usize> = Vec::new();
    for anchor in 0..points.len() {
        let chain = longest_convex_chain(points, anchor);
        if chain.len() > best.len() {
            best = chain;
        }
        if best.len() >= n {
            break;
        }
    }
    if best.len() < n {
        return Ok(None);
    }
    best.truncate(n);
    Ok(Some(best.into_iter().map(|i| points[i].clone()).collect()))
}

fn lower_left(a: &RationalPoint, b: &RationalPoint) -> Ordering {
    (&a.coords[1], &a.coords[0]).cmp(&(&b.coords[1], &b.coords[0]))
}

/// Largest convex polygon whose lowest vertex is `anchor`, as indices in
/// counter-clockwise order starting at `anchor`.
fn longest_convex_chain(points: &[RationalPoint], anchor: usize) -> Vec<usize> {
    let p = &points[anchor];
    let mut cand: Vec<usize> = (0..points.len())
        .filter(|&i| lower_left(&points[i], p) == Ordering::Greater)
        .collect();
    // Counter-clockwise angular order around the anchor; every candidate lies
    // in the half-plane above it, so a turn test is a total order.
    cand.sort_by(|&a, &b| match turn(p, &points[a], &points[b]) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    });
    let m = cand.len();
    if m < 2 {
        return vec![anchor];
    }
    // len[i][j]: vertices on the best chain anchor, ..., cand[i], cand[j]
    // (i < j); i == j encodes the chain anchor, cand[j].
    let mut len = vec![vec![0usize; m]; m];
    let mut parent = vec![vec![usize::MAX; m]; m];
    for j in 0..m {
        len[j][j] = 2;
    }
    for j in 0..m {
        for i in 0..j {
            // extend a chain ending with edge (k -> i) by i -> j
            let mut best = 0;
            let mut arg = usize::MAX;
            for k in 0..=i {
                if len[k][i] == 0 {
                    continue;
                }
                let prev = if k == i { p } else { &points[cand[k]] };
                if turn(prev, &points[cand[i]], &points[cand[j]]) > 0 && len[k][i] + 1 > best {
                    best = len[k][i] + 1;
                    arg = k;
                }
            }
            len[i][j] = best;
            parent[i][j] = arg;
        }
    }
    let mut top = (0usize, 0usize, 1usize);
    for j in 0..m {
        for i in 0..j {
            if len[i][j] > top.2 && turn(&points[cand[i]], &points[cand[j]], p) > 0 {
                top = (i, j, len[i][j]);
            }
        }
    }
    if top.2 < 3 {
        return vec![anchor, cand[0]];
    }
    let (mut i, mut j) = (top.0, top.1);
    let mut rev = vec![cand[j]];
    loop {
        rev.push(cand[i]);
        let k = parent[i][j];
        if k == i {
            break;
        }
        j = i;
        i = k;
    }
    rev.push(anchor);
    rev.reverse();
    rev
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> RationalPoint {
        RationalPoint::from_ints(&[x, y])
    }

    #[test]
    fn hull_of_square_with_centre() {
        let pts = vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 1)];
        assert_eq!(convex_hull_indices(&pts), vec![0, 1, 2, 3]);
        assert!(!is_convex_position(&pts));
        assert!(is_convex_position(&pts[..4]));
    }

    #[test]
    fn square_found() {
        let pts = vec![p(0, 0), p(4, 1), p(5, 5), p(1, 4)];
        let s = convex_position_subset_2d(&pts, 4).unwrap().unwrap();
        assert_eq!(s.len(), 4);
        assert!(is_convex_position(&s));
    }

    #[test]
    fn five_with_interior_point_has_no_pentagon() {
        let pts = vec![p(0, 0), p(10, 1), p(11, 10), p(1, 9), p(5, 4)];
        assert!(convex_position_subset_2d(&pts, 5).unwrap().is_none());
        assert!(convex_position_subset_2d(&pts, 4).unwrap().is_some());
    }

    #[test]
    fn collinear_rejected() {
        let pts = vec![p(0, 0), p(1, 1), p(2, 2), p(0, 5)];
        assert!(matches!(convex_position_subset_2d(&pts, 3), Err(Error::Degenerate(_))));
    }

    #[test]
    fn output_is_counter_clockwise() {
        let pts = vec![p(0, 0), p(7, 1), p(9, 6), p(4, 9), p(-1, 5), p(4, 4)];
        let s = convex_position_subset_2d(&pts, 5).unwrap().unwrap();
        for i in 0..5 {
            assert_eq!(turn(&s[i], &s[(i + 1) % 5], &s[(i + 2) % 5]), 1);
        }
    }
}
