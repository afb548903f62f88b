//! Text and JSON file formats.
//!
//! * Graph files: either a JSON graph document (recognised by a leading
//!   `{`) or an edge list with one `u v` pair per line, a lone label for an
//!   isolated vertex, and `#` comments.
//! * Word files: one word per line, `#` comments. A line with a single token
//!   is read compactly (one letter per character); otherwise every
//!   whitespace-separated token is a letter.
//! * Point, configuration, verdict, facet and nerve documents are JSON with
//!   rationals written as `"p/q"` strings (integers are accepted on input).

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::construct::ChordDiagram;
use crate::error::{Error, Result};
use crate::geometry::rational::{RationalPoint, RationalText};
use crate::graph::{Graph, GraphDocument};
use crate::nerve::{ColoredConfig, NerveResult};
use crate::search::{SearchBudget, SearchVerdict};
use crate::word::Word;

/// Lines with comments stripped, paired with 1-based line numbers; blank
/// lines are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let doc: GraphDocument = serde_json::from_str(text)?;
        return Graph::from_document(&doc);
    }
    let mut g = Graph::new();
    for (line, body) in content_lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let added = match tokens.as_slice() {
            [v] => g.add_vertex(v),
            [a, b] => g.add_edge(a, b),
            _ => {
                return Err(Error::parse(
                    line,
                    format!("expected `u v` or a single vertex, got `{body}`"),
                ))
            }
        };
        added.map_err(|e| Error::parse(line, e.to_string()))?;
    }
    if g.vertex_count() == 0 {
        return Err(Error::invalid("graph file has no vertices"));
    }
    Ok(g)
}

pub fn graph_to_json(g: &Graph) -> Result<String> {
    Ok(serde_json::to_string_pretty(&g.to_document())? + "\n")
}

pub fn parse_words(text: &str) -> Result<Vec<Word>> {
    let mut words = Vec::new();
    for (line, body) in content_lines(text) {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let word = match tokens.as_slice() {
            [single] => Word::from_compact(single),
            _ => Word::new(tokens.iter().copied()).map_err(|e| Error::parse(line, e.to_string()))?,
        };
        words.push(word);
    }
    Ok(words)
}

/// Exactly one nonempty word.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut words = parse_words(text)?;
    match words.len() {
        0 => Err(Error::invalid("word file contains no letters")),
        1 => Ok(words.remove(0)),
        n => Err(Error::invalid(format!("expected one word, found {n}"))),
    }
}

/// Compact when every letter is a single character, space-separated otherwise.
pub fn format_word(w: &Word) -> String {
    let body = if w.letters().iter().all(|l| l.chars().count() == 1) {
        w.letters().concat()
    } else {
        w.letters().join(" ")
    };
    body + "\n"
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointDocument {
    pub dimension: usize,
    pub points: Vec<Vec<RationalText>>,
}

fn to_points(dimension: usize, raw: Vec<Vec<RationalText>>) -> Result<Vec<RationalPoint>> {
    raw.into_iter()
        .enumerate()
        .map(|(i, coords)| {
            if coords.len() != dimension {
                return Err(Error::parse(
                    0,
                    format!("point {} has {} coordinates, expected {dimension}", i + 1, coords.len()),
                ));
            }
            Ok(RationalPoint::new(coords.into_iter().map(|c| c.0).collect()))
        })
        .collect()
}

fn to_texts(points: &[RationalPoint]) -> Vec<Vec<RationalText>> {
    points
        .iter()
        .map(|p| p.coords.iter().cloned().map(RationalText).collect())
        .collect()
}

/// Returns the declared dimension and the points.
pub fn parse_points(text: &str) -> Result<(usize, Vec<RationalPoint>)> {
    let doc: PointDocument = serde_json::from_str(text)?;
    if doc.dimension == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    let dim = doc.dimension;
    Ok((dim, to_points(dim, doc.points)?))
}

pub fn points_to_json(dimension: usize, points: &[RationalPoint]) -> Result<String> {
    let doc = PointDocument {
        dimension,
        points: to_texts(points),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigDocument {
    pub dimension: usize,
    pub points: Vec<Vec<RationalText>>,
    pub colors: Vec<String>,
}

pub fn parse_config(text: &str) -> Result<ColoredConfig> {
    let doc: ConfigDocument = serde_json::from_str(text)?;
    let points = to_points(doc.dimension, doc.points)?;
    ColoredConfig::new(doc.dimension, points, doc.colors)
}

pub fn config_to_json(c: &ColoredConfig) -> Result<String> {
    let doc = ConfigDocument {
        dimension: c.dim(),
        points: to_texts(c.points()),
        colors: c.colors().to_vec(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

pub fn parse_chord_diagram(text: &str) -> Result<ChordDiagram> {
    #[derive(Deserialize)]
    struct Raw {
        slots: Vec<String>,
    }
    let raw: Raw = serde_json::from_str(text)?;
    ChordDiagram::new(raw.slots)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub d: usize,
    pub nodes_explored: u64,
    pub budget: SearchBudget,
    /// Only written when timing is requested, so that the default output is
    /// reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl<'de> Deserialize<'de> for SearchBudget {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            max_copies_per_letter: usize,
            max_total_length: usize,
            node_limit: u64,
        }
        let r = Raw::deserialize(d)?;
        SearchBudget::new(r.max_copies_per_letter, r.max_total_length, r.node_limit).map_err(serde::de::Error::custom)
    }
}

impl VerdictDocument {
    pub fn new(v: &SearchVerdict, wall_time_ms: Option<u64>) -> Self {
        VerdictDocument {
            outcome: v.outcome.name().to_string(),
            witness: v.outcome.witness().map(|w| format_word(w).trim_end().to_string()),
            d: v.d,
            nodes_explored: v.nodes_explored,
            budget: v.budget,
            wall_time_ms,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetDocument {
    pub r: usize,
    pub d: usize,
    pub facets: Vec<Vec<usize>>,
}

impl FacetDocument {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NerveDocument {
    pub vertices: Vec<String>,
    pub faces: Vec<Face>,
    pub max_dim_checked: usize,
}

impl NerveDocument {
    pub fn new(n: &NerveResult) -> Self {
        let doc = n.complex.to_document();
        NerveDocument {
            vertices: doc.vertices,
            faces: doc.faces,
            max_dim_checked: n.max_dim_checked,
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::new(self.vertices.iter().cloned(), self.faces.iter().cloned())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }
}
