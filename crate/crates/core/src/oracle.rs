//! Slow, independent reference implementations used to cross-check the fast
//! code paths. None of these share logic with the code they check.

use std::collections::BTreeSet;

use crate::geometry::moment::moment_point;
use crate::geometry::planar::turn;
use crate::geometry::predicates::orientation;
use crate::geometry::rational::{int, RationalPoint};
use crate::graph::Graph;
use crate::word::Word;

/// Longest alternating subsequence over `{x, y}`, by dynamic programming on
/// the last letter taken.
pub fn alternation_dp(w: &Word, x: &str, y: &str) -> usize {
    let (mut end_x, mut end_y) = (0usize, 0usize);
    for l in w.letters() {
        if l == x {
            end_x = end_x.max(end_y + 1);
        } else if l == y {
            end_y = end_y.max(end_x + 1);
        }
    }
    end_x.max(end_y)
}

/// Induced graph from [`alternation_dp`].
pub fn induced_graph_oracle(w: &Word, d: usize) -> Graph {
    let letters: Vec<&str> = w.alphabet().into_iter().collect();
    let mut g = Graph::new();
    for l in &letters {
        g.add_vertex(l).expect("word letters are nonempty");
    }
    for i in 0..letters.len() {
        for j in i + 1..letters.len() {
            if alternation_dp(w, letters[i], letters[j]) >= d + 2 {
                g.add_edge(letters[i], letters[j]).expect("distinct letters");
            }
        }
    }
    g
}

/// Facets of the cyclic polytope on `x(1), ..., x(r)` in `R^d`: the
/// `d`-subsets whose hyperplane leaves every other vertex strictly on one
/// side, decided by orientation signs.
pub fn facets_by_orientation(r: usize, d: usize) -> Vec<Vec<usize>> {
    let pts: Vec<RationalPoint> = (1..=r as i64).map(|t| moment_point(&int(t), d)).collect();
    let mut out = Vec::new();
    for s in index_subsets(r, d) {
        let base: Vec<RationalPoint> = s.iter().map(|&i| pts[i - 1].clone()).collect();
        let signs: BTreeSet<i8> = (1..=r)
            .filter(|i| !s.contains(i))
            .map(|i| {
                let mut tuple = base.clone();
                tuple.push(pts[i - 1].clone());
                orientation(&tuple).expect("d + 1 points of R^d")
            })
            .collect();
        if signs.len() == 1 && !signs.contains(&0) {
            out.push(s);
        }
    }
    out
}

/// `k`-subsets of `1..=n` via bitmasks, sorted lexicographically.
fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect())
        .collect();
    out.sort();
    out
}

/// Bipartiteness by trying every 2-coloring.
pub fn is_bipartite_brute(g: &Graph) -> bool {
    let vs: Vec<&str> = g.vertices().collect();
    assert!(vs.len() <= 20, "brute-force oracle limited to 20 vertices");
    (0u32..1 << vs.len()).any(|mask| {
        g.edges().all(|(a, b)| {
            let ia = vs.iter().position(|v| *v == a).unwrap();
            let ib = vs.iter().position(|v| *v == b).unwrap();
            (mask >> ia) & 1 != (mask >> ib) & 1
        })
    })
}

/// Whether the points, taken in order, form a strictly convex polygon
/// oriented counter-clockwise.
pub fn is_ccw_convex_polygon(points: &[RationalPoint]) -> bool {
    let n = points.len();
    if n < 3 {
        return true;
    }
    (0..n).all(|i| {
        let (a, b) = (&points[i], &points[(i + 1) % n]);
        (0..n)
            .filter(|&k| k != i && k != (i + 1) % n)
            .all(|k| turn(a, b, &points[k]) > 0)
    })
}

/// Every graph on the labels `1..=n` (`2^(n choose 2)` of them).
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(&str, &str)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &(i, j))| (labels[i].as_str(), labels[j].as_str()))
                .collect();
            Graph::from_edge_list(&edges, &labels).expect("valid labels")
        })
        .collect()
}
