//! Simple undirected graphs over opaque string labels.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph. Labels are ordered lexicographically and every
/// edge is stored once as `(smaller, larger)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: BTreeSet<String>,
    edges: BTreeSet<(String, String)>,
}

fn ordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list plus extra isolated vertices.
    /// Duplicate edges (in either orientation) collapse to one.
    pub fn from_edge_list<A, B, I>(pairs: &[(A, B)], isolated: &[I]) -> Result<Self>
    where
        A: AsRef<str>,
        B: AsRef<str>,
        I: AsRef<str>,
    {
        let mut g = Graph::new();
        for (a, b) in pairs {
            g.add_edge(a.as_ref(), b.as_ref())?;
        }
        for v in isolated {
            g.add_vertex(v.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: &str) -> Result<()> {
        if v.is_empty() {
            return Err(Error::EmptyLabel);
        }
        self.vertices.insert(v.to_owned());
        Ok(())
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if a == b {
            return Err(Error::SelfLoop(a.to_owned()));
        }
        self.vertices.insert(a.to_owned());
        self.vertices.insert(b.to_owned());
        self.edges.insert(ordered(a, b));
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn vertex_set(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        a != b && self.edges.contains(&ordered(a, b))
    }

    pub fn neighbors<'a>(&'a self, v: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.edges.iter().filter_map(move |(a, b)| {
            if a == v {
                Some(b.as_str())
            } else if b == v {
                Some(a.as_str())
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: &str) -> usize {
        self.neighbors(v).count()
    }

    pub fn isolated_vertices(&self) -> Vec<&str> {
        let touched: BTreeSet<&str> = self.edges().flat_map(|(a, b)| [a, b]).collect();
        self.vertices().filter(|v| !touched.contains(v)).collect()
    }

    /// Adjacency lists indexed by the position of each label in [`Graph::vertices`].
    pub fn adjacency_indices(&self) -> Vec<Vec<usize>> {
        let index: BTreeMap<&str, usize> = self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (a, b) in self.edges() {
            let (i, j) = (index[a], index[b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn is_triangle_free(&self) -> bool {
        let adj = self.adjacency_indices();
        let n = adj.len();
        let mut mat = vec![false; n * n];
        for (i, row) in adj.iter().enumerate() {
            for &j in row {
                mat[i * n + j] = true;
            }
        }
        for (i, row) in adj.iter().enumerate() {
            for &j in row.iter().filter(|&&j| j > i) {
                if row.iter().any(|&k| k > j && mat[j * n + k]) {
                    return false;
                }
            }
        }
        true
    }

    /// Returns `(U, V)` with `|V| <= |U|` when the graph is bipartite.
    ///
    /// Components are 2-colored by BFS in label order and the smaller side of
    /// every component goes to `V` (ties: the side without the component's
    /// smallest label), which keeps `|V|` minimal.
    pub fn bipartition(&self) -> Option<(Vec<String>, Vec<String>)> {
        let labels: Vec<&str> = self.vertices().collect();
        let adj = self.adjacency_indices();
        let mut side: Vec<Option<bool>> = vec![None; labels.len()];
        let (mut u, mut v) = (Vec::new(), Vec::new());
        for start in 0..labels.len() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut comp = [Vec::new(), Vec::new()];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let s = side[x].unwrap();
                comp[s as usize].push(x);
                for &y in &adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!s);
                            queue.push_back(y);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
            let [big, small] = comp;
            let (big, small) = if small.len() > big.len() {
                (small, big)
            } else {
                (big, small)
            };
            u.extend(big.into_iter().map(|i| labels[i].to_owned()));
            v.extend(small.into_iter().map(|i| labels[i].to_owned()));
        }
        u.sort();
        v.sort();
        Some((u, v))
    }

    /// Subgraph induced on `keep` (labels not in the graph are ignored).
    pub fn induced_subgraph(&self, keep: &BTreeSet<String>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .cloned()
                .collect(),
        }
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.vertices.iter().cloned().collect(),
            edges: self.edges.iter().map(|(a, b)| [a.clone(), b.clone()]).collect(),
        }
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let pairs: Vec<(&str, &str)> = doc.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Graph::from_edge_list(&pairs, &doc.vertices)
    }

    /// One line per vertex: `v: n1 n2 ...`.
    pub fn adjacency_summary(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            let ns: Vec<&str> = self.neighbors(v).collect();
            out.push_str(v);
            out.push(':');
            for n in ns {
                out.push(' ');
                out.push_str(n);
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<&str> = self.vertices().collect();
        let es: Vec<String> = self.edges().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "V={{{}}} E={{{}}}", vs.join(","), es.join(","))
    }
}

/// Structured graph document: `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

/// Named graph families used throughout tests and fixtures.
pub mod families {
    use super::Graph;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    pub fn path(n: usize) -> Graph {
        let l = labels(n);
        let pairs: Vec<_> = l.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Graph::from_edge_list(&pairs, &l).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let l = labels(n);
        let pairs: Vec<_> = (0..n).map(|i| (l[i].clone(), l[(i + 1) % n].clone())).collect();
        Graph::from_edge_list(&pairs, &l).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let l = labels(n);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((l[i].clone(), l[j].clone()));
            }
        }
        Graph::from_edge_list(&pairs, &l).expect("valid complete graph")
    }

    /// Rim `1..=n` as a cycle, hub `n+1` adjacent to every rim vertex.
    pub fn wheel(n: usize) -> Graph {
        let mut g = cycle(n);
        let hub = (n + 1).to_string();
        for i in 1..=n {
            g.add_edge(&i.to_string(), &hub).unwrap();
        }
        g
    }

    /// Parts `u1..ua` and `v1..vb`, all cross edges.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new();
        for i in 1..=a {
            g.add_vertex(&format!("u{i}")).unwrap();
            for j in 1..=b {
                g.add_edge(&format!("u{i}"), &format!("v{j}")).unwrap();
            }
        }
        for j in 1..=b {
            g.add_vertex(&format!("v{j}")).unwrap();
        }
        g
    }

    pub fn edgeless(names: &[&str]) -> Graph {
        let empty: [(&str, &str); 0] = [];
        Graph::from_edge_list(&empty, names).expect("valid labels")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn edge_list_construction() {
        let g = Graph::from_edge_list(&[("a", "b"), ("b", "c")], &[] as &[&str]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge("c", "b"));
        assert!(!g.has_edge("a", "c"));

        let single = Graph::from_edge_list(&[] as &[(&str, &str)], &["x"]).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        let dedup = Graph::from_edge_list(&[("a", "b"), ("b", "a")], &[] as &[&str]).unwrap();
        assert_eq!(dedup.edge_count(), 1);
        assert_eq!(dedup.edges().next(), Some(("a", "b")));
    }

    #[test]
    fn self_loop_rejected() {
        let err = Graph::from_edge_list(&[("a", "a")], &[] as &[&str]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop(v) if v == "a"));
        assert!(matches!(Graph::new().add_vertex(""), Err(Error::EmptyLabel)));
    }

    fn triangle_free_by_triples(g: &Graph) -> bool {
        let vs: Vec<&str> = g.vertices().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                for k in j + 1..vs.len() {
                    if g.has_edge(vs[i], vs[j]) && g.has_edge(vs[j], vs[k]) && g.has_edge(vs[i], vs[k]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn triangle_free_examples() {
        assert!(cycle(5).is_triangle_free());
        assert!(!complete(3).is_triangle_free());
        let w5 = wheel(5);
        assert!(!triangle_free_by_triples(&w5));
        assert!(!w5.is_triangle_free());
        for n in 4..8 {
            assert_eq!(cycle(n).is_triangle_free(), triangle_free_by_triples(&cycle(n)));
        }
    }

    #[test]
    fn bipartition_examples() {
        let (u, v) = cycle(4).bipartition().unwrap();
        assert_eq!(u, vec!["1", "3"]);
        assert_eq!(v, vec!["2", "4"]);
        assert!(complete(3).bipartition().is_none());
        let (u, v) = complete_bipartite(3, 2).bipartition().unwrap();
        assert_eq!((u.len(), v.len()), (3, 2));
        assert_eq!(v, vec!["v1", "v2"]);
    }

    #[test]
    fn bipartition_minimises_small_side_per_component() {
        // star with centre c plus a disjoint edge x-y
        let g = Graph::from_edge_list(&[("c", "a"), ("c", "b"), ("c", "d"), ("x", "y")], &[] as &[&str]).unwrap();
        let (u, v) = g.bipartition().unwrap();
        assert_eq!(v, vec!["c", "y"]);
        assert_eq!(u, vec!["a", "b", "d", "x"]);
    }

    #[test]
    fn document_round_trip() {
        let g = wheel(5);
        let doc = g.to_document();
        assert_eq!(Graph::from_document(&doc).unwrap(), g);
        let json = serde_json::to_string(&doc).unwrap();
        let back: GraphDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn isolated_vertices_listed() {
        let g = Graph::from_edge_list(&[("a", "b")], &["z"]).unwrap();
        assert_eq!(g.isolated_vertices(), vec!["z"]);
        assert_eq!(g.adjacency_summary(), "a: b\nb: a\nz:\n");
    }
}
