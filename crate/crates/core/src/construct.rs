//! Encoders from graphs, chord diagrams and inscribed-polygon arrangements to
//! words.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::word::Word;

/// Alternating sequence `a b a b ...` of the given length.
fn alternating<'a>(first: &'a str, second: &'a str, len: usize) -> impl Iterator<Item = String> + 'a {
    (0..len).map(move |i| if i % 2 == 0 { first } else { second }.to_owned())
}

/// Encodes any graph as a general `d`-word-representant with `d = max(m - 1, 1)`.
///
/// One alternating factor of length `d + 2` per edge, edges in lexicographic
/// order, each factor starting with its smaller label; isolated vertices are
/// appended once at the end.
pub fn word_any_graph(g: &Graph) -> (Word, usize) {
    let m = g.edge_count();
    let d = m.saturating_sub(1).max(1);
    let mut letters: Vec<String> = Vec::with_capacity(m * (d + 2));
    for (a, b) in g.edges() {
        letters.extend(alternating(a, b, d + 2));
    }
    letters.extend(g.isolated_vertices().into_iter().map(str::to_owned));
    (Word::new(letters).expect("graph labels are non-empty"), d)
}

/// Word of a bipartite graph with its factor layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteWord {
    pub word: Word,
    pub d: usize,
    /// Larger side `u_1, ..., u_m`.
    pub u: Vec<String>,
    /// Smaller side `v_1, ..., v_d`.
    pub v: Vec<String>,
    /// `spans[i][j] = (start, len)` of the factor for `(v_{i+1}, u_{j+1})`,
    /// 0-based positions into `word`. Empty factors keep the position where
    /// they would sit.
    pub spans: Vec<Vec<(usize, usize)>>,
    /// Isolated vertices appended after the last block.
    pub trailing: Vec<String>,
}

impl BipartiteWord {
    /// End of the block `W_1 ... W_d` (start of the trailing letters).
    pub fn body_len(&self) -> usize {
        self.word.len() - self.trailing.len()
    }
}

/// Encodes a bipartite graph `G = (U + V, E)` with `d = |V| <= |U|`.
///
/// `W = W_1 ... W_d` where `W_i` concatenates the factors `F_i(u_j)` (an
/// alternating `v_i u_j ...` of length `d + 2` when `v_i u_j` is an edge,
/// empty otherwise) in ascending `j` for odd `i` and descending `j` for even
/// `i`. Vertices without edges are appended once at the end.
pub fn word_bipartite(g: &Graph) -> Result<BipartiteWord> {
    let (u_all, v_all) = g.bipartition().ok_or(Error::NotBipartite)?;
    let isolated: BTreeSet<&str> = g.isolated_vertices().into_iter().collect();
    let u: Vec<String> = u_all
        .iter()
        .filter(|x| !isolated.contains(x.as_str()))
        .cloned()
        .collect();
    let v: Vec<String> = v_all
        .iter()
        .filter(|x| !isolated.contains(x.as_str()))
        .cloned()
        .collect();
    let d = v.len().max(1);

    let mut letters: Vec<String> = Vec::new();
    let mut spans = vec![vec![(0, 0); u.len()]; v.len()];
    for (i, vi) in v.iter().enumerate() {
        // i is 0-based, so odd blocks in 1-based numbering have even i.
        let order: Vec<usize> = if i % 2 == 0 {
            (0..u.len()).collect()
        } else {
            (0..u.len()).rev().collect()
        };
        for j in order {
            let start = letters.len();
            if g.has_edge(vi, &u[j]) {
                letters.extend(alternating(vi, &u[j], d + 2));
            }
            spans[i][j] = (start, letters.len() - start);
        }
    }
    let trailing: Vec<String> = g
        .vertices()
        .filter(|x| isolated.contains(x))
        .map(str::to_owned)
        .collect();
    letters.extend(trailing.iter().cloned());
    Ok(BipartiteWord {
        word: Word::new(letters)?,
        d,
        u,
        v,
        spans,
        trailing,
    })
}

fn validate_slots(slots: &[String]) -> Result<()> {
    if slots.iter().any(String::is_empty) {
        return Err(Error::EmptyLabel);
    }
    Ok(())
}

/// Convex polygons inscribed in a circle: slot `i` (clockwise) is a vertex of
/// the polygon of color `slots[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonArrangement {
    pub slots: Vec<String>,
}

impl PolygonArrangement {
    pub fn new(slots: Vec<String>) -> Result<Self> {
        validate_slots(&slots)?;
        Ok(PolygonArrangement { slots })
    }

    pub fn colors(&self) -> BTreeSet<&str> {
        self.slots.iter().map(String::as_str).collect()
    }

    fn positions(&self) -> BTreeMap<&str, Vec<usize>> {
        let mut pos: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.slots.iter().enumerate() {
            pos.entry(c.as_str()).or_default().push(i);
        }
        pos
    }

    /// Intersection graph of the polygons. Two inscribed polygons with
    /// distinct vertices are disjoint iff one of them lies inside a single gap
    /// between consecutive vertices of the other.
    pub fn intersection_graph(&self) -> Graph {
        let pos = self.positions();
        let colors: Vec<&str> = pos.keys().copied().collect();
        let mut g = Graph::new();
        for c in &colors {
            g.add_vertex(c).expect("validated labels");
        }
        for i in 0..colors.len() {
            for j in i + 1..colors.len() {
                if !within_one_gap(&pos[colors[i]], &pos[colors[j]]) {
                    g.add_edge(colors[i], colors[j]).expect("distinct colors");
                }
            }
        }
        g
    }
}

/// Whether all of `inner` fits between two cyclically consecutive members of `outer`.
fn within_one_gap(outer: &[usize], inner: &[usize]) -> bool {
    let gap_of = |p: usize| outer.iter().filter(|&&q| q < p).count() % outer.len();
    let first = gap_of(inner[0]);
    inner.iter().all(|&p| gap_of(p) == first)
}

pub fn word_from_polygon_arrangement(p: &PolygonArrangement) -> Word {
    Word::new(p.slots.iter().cloned()).expect("validated labels")
}

pub fn polygon_arrangement_from_word(w: &Word) -> PolygonArrangement {
    PolygonArrangement {
        slots: w.letters().to_vec(),
    }
}

/// Chords of a circle: every label occupies exactly two of the cyclically
/// ordered endpoint slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordDiagram {
    pub slots: Vec<String>,
}

impl ChordDiagram {
    pub fn new(slots: Vec<String>) -> Result<Self> {
        validate_slots(&slots)?;
        let mut count: BTreeMap<&str, usize> = BTreeMap::new();
        for s in &slots {
            *count.entry(s).or_insert(0) += 1;
        }
        if let Some((label, c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::invalid(format!("chord `{label}` has {c} endpoints, expected 2")));
        }
        Ok(ChordDiagram { slots })
    }

    /// Chords `a` and `b` cross iff exactly one endpoint of `b` lies strictly
    /// between the endpoints of `a`.
    pub fn intersection_graph(&self) -> Graph {
        let mut ends: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for (i, s) in self.slots.iter().enumerate() {
            ends.entry(s).and_modify(|e| e.1 = i).or_insert((i, i));
        }
        let labels: Vec<&str> = ends.keys().copied().collect();
        let mut g = Graph::new();
        for l in &labels {
            g.add_vertex(l).expect("validated labels");
        }
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                let (a0, a1) = ends[labels[i]];
                let (b0, b1) = ends[labels[j]];
                let inside = |p: usize| a0 < p && p < a1;
                if inside(b0) != inside(b1) {
                    g.add_edge(labels[i], labels[j]).expect("distinct labels");
                }
            }
        }
        g
    }
}

/// Reads the chord labels around the circle; the result is 2-uniform.
pub fn word_from_chord_diagram(dgm: &ChordDiagram) -> Word {
    Word::new(dgm.slots.iter().cloned()).expect("validated labels")
}

/// Chord diagram of the cycle `1 - 2 - ... - n - 1` (`n >= 3`):
/// `1 n 2 1 3 2 ... n (n-1)`.
pub fn cycle_chord_diagram(n: usize) -> ChordDiagram {
    assert!(n >= 3);
    let mut slots = vec!["1".to_string(), n.to_string()];
    for k in 2..=n {
        slots.push(k.to_string());
        slots.push((k - 1).to_string());
    }
    ChordDiagram::new(slots).expect("each label twice")
}
