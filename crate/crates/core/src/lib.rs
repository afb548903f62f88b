//! Graphs as words, words as colored point sets on the moment curve, and
//! colored point sets as nerve complexes.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] and [`complex`]: labelled simple graphs and simplicial complexes.
//! - [`word`]: alternation semantics (`max_alternation`, induced graphs).
//! - [`construct`]: encoders from graphs, chord diagrams and polygon
//!   arrangements to words.
//! - [`search`]: bounded search for general `d`-word-representants.
//! - [`geometry`]: exact rational predicates, Phase-I simplex feasibility,
//!   cyclic polytope facets and separating hyperplanes.
//! - [`nerve`] and [`extend`]: realizations on the moment curve, nerves, and
//!   nerve-preserving coloring extensions.
//!
//! All arithmetic on coordinates is exact. Data-parallel loops take an
//! [`Exec`] and give identical answers sequentially or on a rayon pool.

pub mod complex;
pub mod construct;
pub mod error;
pub mod exec;
pub mod extend;
pub mod fixtures;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod nerve;
pub mod oracle;
pub mod search;
pub mod selftest;
pub mod svg;
pub mod word;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::Graph;
pub use word::Word;
