use crate::error::{Error, Result};

use super::linalg::determinant;
use super::rational::{int, sign, RationalPoint};

/// Sign of `det [1 p_0; 1 p_1; ...; 1 p_d]` for `d + 1` points of `R^d`.
pub fn orientation(points: &[RationalPoint]) -> Result<i8> {
    let Some(first) = points.first() else {
        return Err(Error::invalid("orientation needs d + 1 points"));
    };
    let d = first.dim();
    if points.len() != d + 1 {
        return Err(Error::invalid(format!(
            "orientation in R^{d} needs {} points, got {}",
            d + 1,
            points.len()
        )));
    }
    check_dims(points, d)?;
    let m = points
        .iter()
        .map(|p| std::iter::once(int(1)).chain(p.coords.iter().cloned()).collect())
        .collect();
    Ok(sign(&determinant(m)))
}

pub(crate) fn check_dims(points: &[RationalPoint], d: usize) -> Result<()> {
    match points.iter().find(|p| p.dim() != d) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: d,
            found: p.dim(),
        }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::moment::moment_point;
    use crate::geometry::rational::ratio;

    #[test]
    fn planar_examples() {
        let p = |x, y| RationalPoint::from_ints(&[x, y]);
        assert_eq!(orientation(&[p(0, 0), p(1, 0), p(0, 1)]).unwrap(), 1);
        assert_eq!(orientation(&[p(0, 0), p(0, 1), p(1, 0)]).unwrap(), -1);
        assert_eq!(orientation(&[p(0, 0), p(1, 1), p(2, 2)]).unwrap(), 0);
    }

    #[test]
    fn moment_points_are_positively_oriented() {
        for d in 1..=5 {
            let ts: Vec<_> = (0..=d as i64).map(|k| ratio(3 * k * k - 1, 2 + k)).collect();
            let mut sorted = ts.clone();
            sorted.sort();
            let pts: Vec<_> = sorted.iter().map(|t| moment_point(t, d)).collect();
            assert_eq!(orientation(&pts).unwrap(), 1, "d = {d}");
        }
    }

    #[test]
    fn wrong_counts_rejected() {
        let p = RationalPoint::from_ints(&[0, 0]);
        assert!(orientation(&[p.clone(), p.clone()]).is_err());
        assert!(matches!(
            orientation(&[p.clone(), p, RationalPoint::from_ints(&[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
