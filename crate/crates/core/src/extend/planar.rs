use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::hull::hulls_intersect;
use crate::geometry::planar::{convex_hull_indices, find_collinear_triple, is_convex_position, turn};
use crate::geometry::rational::{Rational, RationalPoint};
use crate::nerve::ColoredConfig;

use super::{finish, Extension};

/// Oriented line through `a` and `b`; the closed positive side is where
/// `turn(a, b, x) >= 0`.
#[derive(Debug, Clone)]
struct Line {
    a: RationalPoint,
    b: RationalPoint,
}

impl Line {
    fn side(&self, x: &RationalPoint) -> i8 {
        turn(&self.a, &self.b, x)
    }

    fn flipped(&self) -> Line {
        Line {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

struct Planar<'a> {
    classes: Vec<Vec<RationalPoint>>,
    intersects: Vec<Vec<bool>>,
    /// Counter-clockwise hull of all original points with each point's
    /// position on it.
    hull: Vec<RationalPoint>,
    hull_pos: BTreeMap<&'a RationalPoint, usize>,
    extras: &'a [RationalPoint],
}

/// Extends the coloring of a planar configuration in convex position to
/// `config ∪ extras` without changing the nerve.
///
/// Works by induction on the number of colors: find a color `c` and a
/// supporting line of its hull that keeps every color class disjoint from
/// `c` strictly on the far side, give `c` all extras on the near (closed)
/// side, and recurse on the remaining colors with the far-side extras. Two
/// intersecting colors are the base case: every extra goes to the second.
pub fn extend_coloring_2d(config: &ColoredConfig, extras: &[RationalPoint]) -> Result<Extension> {
    if config.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: config.dim(),
        });
    }
    crate::geometry::predicates::check_dims(extras, 2)?;
    if !is_convex_position(config.points()) {
        return Err(Error::invalid("colored points are not in convex position"));
    }
    let mut all = config.points().to_vec();
    all.extend(extras.iter().cloned());
    if let Some((i, j, k)) = find_collinear_triple(&all) {
        return Err(Error::Degenerate(format!(
            "points {}, {} and {} are collinear",
            all[i], all[j], all[k]
        )));
    }

    let by_label = config.classes();
    let labels: Vec<&str> = by_label.keys().copied().collect();
    let classes: Vec<Vec<RationalPoint>> = by_label.into_values().collect();
    let k = classes.len();
    let mut intersects = vec![vec![true; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let meet = hulls_intersect(&[classes[i].clone(), classes[j].clone()])?;
            intersects[i][j] = meet;
            intersects[j][i] = meet;
        }
    }
    let hull: Vec<RationalPoint> = convex_hull_indices(config.points())
        .into_iter()
        .map(|i| config.points()[i].clone())
        .collect();
    let hull_pos = hull.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let planar = Planar {
        classes,
        intersects,
        hull: hull.clone(),
        hull_pos,
        extras,
    };

    let mut assigned = vec![usize::MAX; extras.len()];
    planar.assign((0..k).collect(), (0..extras.len()).collect(), &mut assigned)?;
    let colors = assigned.into_iter().map(|c| labels[c].to_string()).collect();
    finish(config, extras, colors)
}

impl Planar<'_> {
    fn assign(&self, active: Vec<usize>, pending: Vec<usize>, out: &mut [usize]) -> Result<()> {
        if pending.is_empty() {
            return Ok(());
        }
        match active.as_slice() {
            [] => return Err(Error::ExtensionFailed("no color left for the remaining points".into())),
            [only] => {
                for e in pending {
                    out[e] = *only;
                }
                return Ok(());
            }
            [_, second] if self.intersects[active[0]][*second] => {
                for e in pending {
                    out[e] = *second;
                }
                return Ok(());
            }
            _ => {}
        }

        for &i in &active {
            for line in self.candidate_lines(i) {
                let admissible = active
                    .iter()
                    .filter(|&&c| c != i && !self.intersects[i][c])
                    .all(|&c| self.classes[c].iter().all(|p| line.side(p) < 0));
                if !admissible {
                    continue;
                }
                let (near, far): (Vec<usize>, Vec<usize>) =
                    pending.iter().partition(|&&e| line.side(&self.extras[e]) >= 0);
                for e in near {
                    out[e] = i;
                }
                let rest = active.iter().copied().filter(|&c| c != i).collect();
                return self.assign(rest, far, out);
            }
        }
        Err(Error::ExtensionFailed("no admissible color and supporting line".into()))
    }

    /// Supporting lines of the class hull, oriented with the class on the
    /// closed positive side.
    fn candidate_lines(&self, class: usize) -> Vec<Line> {
        let pts = &self.classes[class];
        match pts.len() {
            1 => self.tangent_at(&pts[0]).into_iter().collect(),
            2 => {
                let l = Line {
                    a: pts[0].clone(),
                    b: pts[1].clone(),
                };
                vec![l.flipped(), l]
            }
            _ => {
                let hull = convex_hull_indices(pts);
                (0..hull.len())
                    .map(|e| Line {
                        a: pts[hull[e]].clone(),
                        b: pts[hull[(e + 1) % hull.len()]].clone(),
                    })
                    .collect()
            }
        }
    }

    /// Line through a single hull vertex `p` parallel to the chord joining
    /// its two hull neighbours, so every other original point lies strictly
    /// on the negative side.
    fn tangent_at(&self, p: &RationalPoint) -> Option<Line> {
        let n = self.hull.len();
        let at = *self.hull_pos.get(p)?;
        if n < 2 {
            return None;
        }
        let prev = &self.hull[(at + n - 1) % n];
        let next = &self.hull[(at + 1) % n];
        let delta = |a: &RationalPoint, b: &RationalPoint, k: usize| -> Rational { &b.coords[k] - &a.coords[k] };
        let (dx, dy) = if n == 2 {
            // perpendicular to the only other point
            (-delta(p, next, 1), delta(p, next, 0))
        } else {
            (delta(prev, next, 0), delta(prev, next, 1))
        };
        let b = RationalPoint::new(vec![&p.coords[0] + dx, &p.coords[1] + dy]);
        let line = Line { a: p.clone(), b };
        let other = if n == 2 { next } else { prev };
        Some(if line.side(other) < 0 { line } else { line.flipped() })
    }
}
