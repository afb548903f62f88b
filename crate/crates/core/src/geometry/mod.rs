//! Exact rational geometry on the moment curve and in the plane.

pub mod gale;
pub mod hull;
pub mod hyperplane;
pub mod linalg;
pub mod lp;
pub mod moment;
pub mod planar;
pub mod predicates;
pub mod rational;

pub use gale::gale_facets;
pub use hull::{breen_intersect, common_point, hulls_intersect};
pub use hyperplane::Hyperplane;
pub use moment::{moment_point, MomentConfig};
pub use planar::convex_position_subset_2d;
pub use predicates::orientation;
pub use rational::{parse_rational, Rational, RationalPoint};
