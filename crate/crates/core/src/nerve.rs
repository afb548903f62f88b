//! Colored point configurations, their nerves, and the word-to-geometry
//! pipeline on the moment curve.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::hull::hulls_intersect;
use crate::geometry::moment::{moment_point, MomentConfig};
use crate::geometry::rational::{int, Rational, RationalPoint};
use crate::graph::Graph;
use crate::word::Word;

/// Points of `R^d` with one color label each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredConfig {
    dim: usize,
    points: Vec<RationalPoint>,
    colors: Vec<String>,
}

impl ColoredConfig {
    /// Rejects empty input, mixed dimensions, empty labels and repeated points.
    pub fn new(dim: usize, points: Vec<RationalPoint>, colors: Vec<String>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if points.is_empty() {
            return Err(Error::invalid("a configuration needs at least one point"));
        }
        if points.len() != colors.len() {
            return Err(Error::invalid(format!(
                "{} points but {} colors",
                points.len(),
                colors.len()
            )));
        }
        if colors.iter().any(String::is_empty) {
            return Err(Error::EmptyLabel);
        }
        crate::geometry::predicates::check_dims(&points, dim)?;
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::Degenerate(format!("point {p} appears twice")));
            }
        }
        Ok(ColoredConfig { dim, points, colors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn labels(&self) -> BTreeSet<&str> {
        self.colors.iter().map(String::as_str).collect()
    }

    /// Color classes keyed by label, points in input order.
    pub fn classes(&self) -> BTreeMap<&str, Vec<RationalPoint>> {
        let mut out: BTreeMap<&str, Vec<RationalPoint>> = BTreeMap::new();
        for (p, c) in self.points.iter().zip(&self.colors) {
            out.entry(c.as_str()).or_default().push(p.clone());
        }
        out
    }

    /// The same configuration with points listed in the order `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..self.len()).collect::<Vec<_>>() {
            return Err(Error::invalid("not a permutation of the point indices"));
        }
        Ok(ColoredConfig {
            dim: self.dim,
            points: perm.iter().map(|&i| self.points[i].clone()).collect(),
            colors: perm.iter().map(|&i| self.colors[i].clone()).collect(),
        })
    }
}

/// Nerve of a colored configuration, exact up to faces of `max_dim_checked + 1` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveResult {
    pub complex: SimplicialComplex,
    pub max_dim_checked: usize,
}

/// Points `x(1), ..., x(|W|)` on the moment curve, point `i` colored `W(i)`.
pub fn realize_on_moment_curve(w: &Word, d: usize) -> Result<ColoredConfig> {
    let params: Vec<Rational> = (1..=w.len() as i64).map(int).collect();
    realize_with_params(w, d, &params)
}

/// Like [`realize_on_moment_curve`] with user-chosen increasing parameters.
pub fn realize_with_params(w: &Word, d: usize, params: &[Rational]) -> Result<ColoredConfig> {
    if w.is_empty() {
        return Err(Error::invalid("cannot realize the empty word"));
    }
    if params.len() != w.len() {
        return Err(Error::invalid(format!(
            "{} parameters for a word of length {}",
            params.len(),
            w.len()
        )));
    }
    let config = MomentConfig::new(d, params.to_vec())?;
    ColoredConfig::new(d, config.points(), w.letters().to_vec())
}

pub fn nerve(config: &ColoredConfig, max_dim: usize) -> Result<NerveResult> {
    nerve_with(config, max_dim, Exec::Sequential)
}

/// Faces are tested layer by layer. A candidate of `k + 1` labels is only
/// tested when all of its `k`-subsets are faces; the tests inside one layer
/// are independent and go through `exec`.
pub fn nerve_with(config: &ColoredConfig, max_dim: usize, exec: Exec) -> Result<NerveResult> {
    if max_dim == 0 {
        return Err(Error::invalid("max_dim must be at least 1"));
    }
    let classes = config.classes();
    let labels: Vec<&str> = classes.keys().copied().collect();
    let mut faces: BTreeSet<Face> = labels.iter().map(|l| vec![l.to_string()]).collect();
    let mut layer: Vec<Vec<usize>> = (0..labels.len()).map(|i| vec![i]).collect();

    for _ in 1..=max_dim {
        let known: BTreeSet<&Vec<usize>> = layer.iter().collect();
        let mut candidates = Vec::new();
        for f in &layer {
            let last = *f.last().expect("faces are nonempty");
            for next in last + 1..labels.len() {
                let mut cand = f.clone();
                cand.push(next);
                let closed = (0..cand.len()).all(|skip| {
                    let sub: Vec<usize> = cand
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &x)| x)
                        .collect();
                    known.contains(&sub)
                });
                if closed {
                    candidates.push(cand);
                }
            }
        }
        if candidates.is_empty() {
            break;
        }
        let verdicts = exec.map(&candidates, |cand| {
            let sets: Vec<Vec<RationalPoint>> = cand.iter().map(|&i| classes[labels[i]].clone()).collect();
            hulls_intersect(&sets)
        });
        let mut next_layer = Vec::new();
        for (cand, verdict) in candidates.into_iter().zip(verdicts) {
            if verdict? {
                faces.insert(cand.iter().map(|&i| labels[i].to_string()).collect());
                next_layer.push(cand);
            }
        }
        layer = next_layer;
    }

    Ok(NerveResult {
        complex: SimplicialComplex::new(labels.iter().copied(), faces)?,
        max_dim_checked: max_dim,
    })
}

/// Whether the moment-curve realization of `w` in `R^d` has `g` as the
/// 1-skeleton of its nerve and, for triangle-free `g`, no 2-faces.
pub fn verify_partition_induced(g: &Graph, w: &Word, d: usize) -> Result<bool> {
    let config = realize_on_moment_curve(w, d)?;
    let result = nerve(&config, 2)?;
    let skeleton_ok = result.complex.one_skeleton() == *g;
    let no_triangles = !g.is_triangle_free() || result.complex.faces_of_dim(2).is_empty();
    Ok(skeleton_ok && no_triangles)
}

/// Recovers the parameters of a configuration lying on the moment curve,
/// `None` if some point is off the curve or the order is not increasing.
pub fn moment_params(config: &ColoredConfig) -> Option<Vec<Rational>> {
    let params: Vec<Rational> = config.points().iter().map(|p| p.coords[0].clone()).collect();
    let on_curve = config
        .points()
        .iter()
        .zip(&params)
        .all(|(p, t)| *p == moment_point(t, config.dim()));
    let increasing = params.windows(2).all(|w| w[0] < w[1]);
    (on_curve && increasing).then_some(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::ratio;
    use crate::graph::families;

    #[test]
    fn crossing_segments() {
        let c = realize_on_moment_curve(&Word::from_compact("abab"), 2).unwrap();
        let n = nerve(&c, 2).unwrap();
        assert_eq!(
            n.complex.one_skeleton(),
            Graph::from_edge_list(&[("a", "b")], &[] as &[&str]).unwrap()
        );
        assert_eq!(n.max_dim_checked, 2);
    }

    #[test]
    fn observation_word() {
        let c = realize_on_moment_curve(&Word::from_compact("12121"), 3).unwrap();
        let n = nerve(&c, 1).unwrap();
        assert!(n.complex.contains_face(&["1".into(), "2".into()]));
        let c = realize_on_moment_curve(&Word::from_compact("11212"), 3).unwrap();
        assert!(nerve(&c, 1).unwrap().complex.faces_of_dim(1).is_empty());
    }

    #[test]
    fn three_crossing_segments_have_no_triangle() {
        let pts = [(0, 0), (6, 1), (1, -2), (3, 6), (5, -2), (2, 6)]
            .iter()
            .map(|&(x, y)| RationalPoint::from_ints(&[x, y]))
            .collect();
        let colors = ["a", "a", "b", "b", "c", "c"].iter().map(|s| s.to_string()).collect();
        let c = ColoredConfig::new(2, pts, colors).unwrap();
        let n = nerve(&c, 2).unwrap();
        assert_eq!(n.complex.faces_of_dim(1).len(), 3);
        assert!(n.complex.faces_of_dim(2).is_empty());
    }

    #[test]
    fn w5_pipeline() {
        let w = Word::from_compact("156216326436546");
        // W5 has triangles, so only the skeleton is claimed
        assert!(verify_partition_induced(&families::wheel(5), &w, 2).unwrap());
        let c = realize_on_moment_curve(&w, 2).unwrap();
        let n = nerve(&c, 1).unwrap();
        assert_eq!(n.complex.one_skeleton(), families::wheel(5));
    }

    #[test]
    fn p3_pipeline() {
        let g = Graph::from_edge_list(&[("a", "b"), ("b", "c")], &[] as &[&str]).unwrap();
        assert!(verify_partition_induced(&g, &Word::from_compact("ababcb"), 1).unwrap());
    }

    #[test]
    fn parallel_layers_agree() {
        let w = Word::from_compact("156216326436546");
        let c = realize_on_moment_curve(&w, 2).unwrap();
        assert_eq!(nerve_with(&c, 3, Exec::Parallel(4)).unwrap(), nerve(&c, 3).unwrap());
    }

    #[test]
    fn config_validation() {
        let p = RationalPoint::from_ints(&[1, 1]);
        assert!(ColoredConfig::new(2, vec![p.clone(), p.clone()], vec!["a".into(), "b".into()]).is_err());
        assert!(ColoredConfig::new(3, vec![p.clone()], vec!["a".into()]).is_err());
        assert!(ColoredConfig::new(2, vec![p], vec![String::new()]).is_err());
        assert!(nerve(&realize_on_moment_curve(&Word::from_compact("ab"), 2).unwrap(), 0).is_err());
    }

    #[test]
    fn params_round_trip() {
        let w = Word::from_compact("abc");
        let params = vec![ratio(-1, 2), int(0), ratio(7, 3)];
        let c = realize_with_params(&w, 3, &params).unwrap();
        assert_eq!(moment_params(&c), Some(params));
        assert!(realize_with_params(&w, 3, &[int(1), int(1), int(2)]).is_err());
    }
}
