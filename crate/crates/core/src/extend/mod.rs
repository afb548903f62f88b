//! Nerve-preserving extensions of a coloring to a superset of points.
//!
//! Both algorithms recompute the nerve of the extended configuration and
//! fail with [`Error::Invariant`] if it differs from the input nerve, so a
//! returned coloring is always checked rather than trusted.

mod bipartite;
mod planar;

pub use bipartite::extend_coloring_bipartite;
pub use planar::extend_coloring_2d;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::geometry::rational::RationalPoint;
use crate::nerve::{nerve, ColoredConfig};

/// Faces up to this dimension are compared before and after an extension.
pub const CHECK_DIM: usize = 2;

/// An extended configuration (original points first, then the extras in
/// input order) with the nerves compared to accept it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub config: ColoredConfig,
    pub before: SimplicialComplex,
    pub after: SimplicialComplex,
}

fn finish(original: &ColoredConfig, extras: &[RationalPoint], extra_colors: Vec<String>) -> Result<Extension> {
    let mut points = original.points().to_vec();
    points.extend(extras.iter().cloned());
    let mut colors = original.colors().to_vec();
    colors.extend(extra_colors);
    let config = ColoredConfig::new(original.dim(), points, colors)?;
    let before = nerve(original, CHECK_DIM)?.complex;
    let after = nerve(&config, CHECK_DIM)?.complex;
    if before != after {
        return Err(Error::Invariant(format!(
            "extension changed the nerve from {before} to {after}"
        )));
    }
    Ok(Extension { config, before, after })
}
