use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A face is a sorted, duplicate-free list of vertex labels.
pub type Face = Vec<String>;

/// Finite abstract simplicial complex over string labels.
///
/// Downward closure is checked on construction: every subset of a face is a
/// face, and every declared vertex is a 0-face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<String>,
    faces: BTreeSet<Face>,
}

fn normalize(face: &[String]) -> Face {
    let set: BTreeSet<&String> = face.iter().collect();
    set.into_iter().cloned().collect()
}

impl SimplicialComplex {
    /// Validates and builds a complex. The empty face is implicit and never stored.
    pub fn new<I, F>(vertices: I, faces: F) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<String>,
        F: IntoIterator<Item = Face>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        let mut set = BTreeSet::new();
        for f in faces {
            let f = normalize(&f);
            if f.is_empty() {
                continue;
            }
            if let Some(v) = f.iter().find(|v| !vertices.contains(*v)) {
                return Err(Error::UnknownVertex(v.clone()));
            }
            set.insert(f);
        }
        for v in &vertices {
            if !set.contains(&vec![v.clone()]) {
                return Err(Error::NotDownwardClosed(format!("vertex `{v}` is not a face")));
            }
        }
        let complex = SimplicialComplex { vertices, faces: set };
        if let Some(missing) = complex.first_missing_subface() {
            return Err(Error::NotDownwardClosed(format!(
                "subface {{{}}} missing",
                missing.join(",")
            )));
        }
        Ok(complex)
    }

    /// Builds the complex generated by the given maximal faces (all their subsets).
    pub fn from_generators<I>(vertices: I, generators: &[Face]) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut faces: BTreeSet<Face> = vertices.iter().map(|v| vec![v.clone()]).collect();
        for g in generators {
            let g = normalize(g);
            for mask in 1u64..(1u64 << g.len()) {
                faces.insert(
                    g.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| v.clone())
                        .collect(),
                );
            }
        }
        SimplicialComplex::new(vertices, faces)
    }

    /// Complex with faces = vertices and edges of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let faces = g
            .vertices()
            .map(|v| vec![v.to_owned()])
            .chain(g.edges().map(|(a, b)| vec![a.to_owned(), b.to_owned()]));
        SimplicialComplex::new(g.vertices().map(str::to_owned), faces).expect("graph complex is closed")
    }

    fn first_missing_subface(&self) -> Option<Face> {
        for f in &self.faces {
            if f.len() < 2 {
                continue;
            }
            for skip in 0..f.len() {
                let sub: Face = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, v)| v.clone())
                    .collect();
                if !self.faces.contains(&sub) {
                    return Some(sub);
                }
            }
        }
        None
    }

    pub fn is_downward_closed(&self) -> bool {
        self.vertices.iter().all(|v| self.faces.contains(&vec![v.clone()])) && self.first_missing_subface().is_none()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> + '_ {
        self.vertices.iter().map(String::as_str)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter()
    }

    pub fn contains_face(&self, face: &[String]) -> bool {
        let f = normalize(face);
        f.is_empty() || self.faces.contains(&f)
    }

    /// Faces of the given dimension (a `k`-face has `k + 1` vertices).
    pub fn faces_of_dim(&self, dim: usize) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.len() == dim + 1).collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len() - 1).max()
    }

    pub fn one_skeleton(&self) -> Graph {
        let pairs: Vec<(&str, &str)> = self
            .faces_of_dim(1)
            .into_iter()
            .map(|f| (f[0].as_str(), f[1].as_str()))
            .collect();
        Graph::from_edge_list(&pairs, &self.vertices.iter().collect::<Vec<_>>()).expect("labels come from a complex")
    }

    pub fn to_document(&self) -> ComplexDocument {
        ComplexDocument {
            vertices: self.vertices.iter().cloned().collect(),
            faces: self.faces.iter().cloned().collect(),
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut faces: Vec<&Face> = self.faces.iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let parts: Vec<String> = faces.iter().map(|f| format!("{{{}}}", f.join(","))).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub vertices: Vec<String>,
    pub faces: Vec<Face>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn face(xs: &[&str]) -> Face {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn full_triangle_skeleton_is_k3() {
        let k = SimplicialComplex::from_generators(["a", "b", "c"], &[face(&["a", "b", "c"])]).unwrap();
        assert_eq!(k.faces().count(), 7);
        assert_eq!(k.dimension(), Some(2));
        let sk = k.one_skeleton();
        assert_eq!(sk.edge_count(), 3);
        assert!(!sk.is_triangle_free());
    }

    #[test]
    fn vertices_only_gives_edgeless_skeleton() {
        let k = SimplicialComplex::new(["a", "b"], vec![face(&["a"]), face(&["b"])]).unwrap();
        let sk = k.one_skeleton();
        assert_eq!(sk.vertex_count(), 2);
        assert_eq!(sk.edge_count(), 0);
    }

    #[test]
    fn missing_subface_rejected() {
        let err = SimplicialComplex::new(
            ["a", "b", "c"],
            vec![face(&["a"]), face(&["b"]), face(&["c"]), face(&["a", "b", "c"])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotDownwardClosed(_)));
        let err = SimplicialComplex::new(["a", "b"], vec![face(&["a"])]).unwrap_err();
        assert!(matches!(err, Error::NotDownwardClosed(_)));
        let err = SimplicialComplex::new(["a"], vec![face(&["a"]), face(&["a", "q"])]).unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(_)));
    }

    #[test]
    fn skeleton_of_graph_complex_is_identity() {
        for g in [
            families::wheel(5),
            families::cycle(6),
            families::complete_bipartite(2, 3),
        ] {
            let k = SimplicialComplex::from_graph(&g);
            assert!(k.is_downward_closed());
            assert_eq!(k.one_skeleton(), g);
        }
    }
}
