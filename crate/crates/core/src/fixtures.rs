//! Named inputs used across tests, the self-test and the benchmarks, plus
//! seeded random generators.

use rand::Rng;

use crate::construct::{cycle_chord_diagram, ChordDiagram};
use crate::geometry::rational::{int, Rational};
use crate::graph::{families, Graph};
use crate::nerve::{realize_with_params, ColoredConfig};
use crate::word::Word;

/// A general 2-word-representant of the wheel `W5` (rim `1..5`, hub `6`).
pub const W5_WORD: &str = "156216326436546";

pub fn w5_word() -> Word {
    Word::from_compact(W5_WORD)
}

pub fn w5() -> Graph {
    families::wheel(5)
}

/// At `d = 3` the first word induces an edge and its rotation does not.
pub const ROTATION_PAIR: (&str, &str) = ("12121", "11212");

/// Facets of the cyclic polytope with 5 vertices in `R^3`.
pub const CYCLIC_5_3_FACETS: [[usize; 3]; 6] = [[1, 2, 3], [1, 2, 5], [1, 3, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5]];

/// Nine points `x(1), ..., x(9)` of the moment curve in `R^3` colored
/// `b = {1, 2, 6}`, `r = {3, 5, 7}`, `g = {4, 8, 9}`.
pub fn three_color_moment_config() -> ColoredConfig {
    let word = Word::from_compact("bbrgrbrgg");
    let params: Vec<Rational> = (1..=9).map(int).collect();
    realize_with_params(&word, 3, &params).expect("fixed fixture")
}

pub fn c5_chord_diagram() -> ChordDiagram {
    cycle_chord_diagram(5)
}

/// Uniform random word over the letters `a, b, ...` (`alphabet <= 26`).
pub fn random_word<R: Rng>(rng: &mut R, alphabet: usize, len: usize) -> Word {
    assert!((1..=26).contains(&alphabet));
    Word::new((0..len).map(|_| ((b'a' + rng.gen_range(0..alphabet) as u8) as char).to_string()))
        .expect("nonempty letters")
}

/// `G(n, p)` on the labels `1..=n`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::from_edge_list(&edges, &labels).expect("valid labels")
}

/// Random bipartite graph with sides `v1..v{a}` and `u1..u{b}` and no
/// isolated vertices.
pub fn random_bipartite<R: Rng>(rng: &mut R, a: usize, b: usize, p: f64) -> Graph {
    assert!(a >= 1 && b >= 1);
    loop {
        let mut g = Graph::new();
        for i in 1..=a {
            for j in 1..=b {
                if rng.gen_bool(p) {
                    g.add_edge(&format!("v{i}"), &format!("u{j}")).expect("distinct labels");
                }
            }
        }
        if g.vertex_count() == a + b {
            return g;
        }
    }
}

/// Increasing rational parameters with random gaps.
pub fn random_params<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut t = Rational::new(rng.gen_range(-20..20).into(), rng.gen_range(1..8).into());
    (0..n)
        .map(|_| {
            t += Rational::new(rng.gen_range(1..30).into(), rng.gen_range(1..10).into());
            t.clone()
        })
        .collect()
}
