use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::linalg::determinant;
use super::moment::moment_point;
use super::predicates::check_dims;
use super::rational::{int, sign, Rational, RationalPoint};

/// Hyperplane `{q : normal . q = offset}` with the first non-zero entry of
/// `normal` positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Hyperplane {
    /// Hyperplane through `d` affinely independent points of `R^d`.
    ///
    /// The coefficients are the cofactors of the first row of
    /// `det [1 q; 1 p_1; ...; 1 p_d]`.
    pub fn through_points(points: &[RationalPoint]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::invalid("a hyperplane needs at least one point"));
        };
        let d = first.dim();
        if points.len() != d {
            return Err(Error::invalid(format!(
                "a hyperplane of R^{d} needs {d} points, got {}",
                points.len()
            )));
        }
        check_dims(points, d)?;
        let lifted: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| std::iter::once(int(1)).chain(p.coords.iter().cloned()).collect())
            .collect();
        let cofactor = |col: usize| {
            let minor: Vec<Vec<Rational>> = lifted
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != col)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let m = determinant(minor);
            if col % 2 == 0 {
                m
            } else {
                -m
            }
        };
        let constant = cofactor(0);
        let mut normal: Vec<Rational> = (1..=d).map(cofactor).collect();
        let mut offset = -constant;
        let Some(lead) = normal.iter().find(|x| !x.is_zero()) else {
            return Err(Error::Degenerate("points are affinely dependent".into()));
        };
        if lead.is_negative() {
            for x in &mut normal {
                *x = -x.clone();
            }
            offset = -offset;
        }
        Ok(Hyperplane { normal, offset })
    }

    /// Hyperplane through `x(t)` for `d` distinct parameters.
    pub fn through_moment_points(params: &[Rational], d: usize) -> Result<Self> {
        if params.len() != d || d == 0 {
            return Err(Error::invalid(format!("expected {d} parameters, got {}", params.len())));
        }
        let mut sorted = params.to_vec();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Degenerate("duplicate moment parameters".into()));
        }
        let pts: Vec<RationalPoint> = sorted.iter().map(|t| moment_point(t, d)).collect();
        Hyperplane::through_points(&pts)
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn evaluate(&self, q: &RationalPoint) -> Rational {
        let dot: Rational = self.normal.iter().zip(&q.coords).map(|(a, b)| a * b).sum();
        dot - &self.offset
    }

    /// `+1`, `-1` or `0` (on the hyperplane).
    pub fn side(&self, q: &RationalPoint) -> i8 {
        sign(&self.evaluate(q))
    }
}

/// Index of the open region of the parameter line cut by `params` that
/// contains `t`: the number of parameters below `t`. `None` if `t` is one of
/// them.
pub fn region_index(params: &[Rational], t: &Rational) -> Option<usize> {
    if params.contains(t) {
        return None;
    }
    Some(params.iter().filter(|p| *p < t).count())
}
