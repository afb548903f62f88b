use crate::error::{Error, Result};

use super::rational::{int, Rational, RationalPoint};

/// `(t, t^2, ..., t^d)`.
pub fn moment_point(t: &Rational, d: usize) -> RationalPoint {
    let mut coords = Vec::with_capacity(d);
    let mut power = t.clone();
    for _ in 0..d {
        coords.push(power.clone());
        power *= t;
    }
    RationalPoint::new(coords)
}

/// Points on the moment curve of `R^d` at strictly increasing parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentConfig {
    dim: usize,
    params: Vec<Rational>,
}

impl MomentConfig {
    pub fn new(dim: usize, params: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if params.is_empty() {
            return Err(Error::invalid("moment configuration needs at least one parameter"));
        }
        if let Some(w) = params.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "parameters must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(MomentConfig { dim, params })
    }

    /// Parameters `1, 2, ..., r`.
    pub fn integer(dim: usize, r: usize) -> Result<Self> {
        MomentConfig::new(dim, (1..=r as i64).map(int).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[Rational] {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn points(&self) -> Vec<RationalPoint> {
        self.params.iter().map(|t| moment_point(t, self.dim)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::ratio;

    #[test]
    fn moment_points() {
        assert_eq!(moment_point(&int(2), 3), RationalPoint::from_ints(&[2, 4, 8]));
        assert_eq!(moment_point(&int(0), 4), RationalPoint::from_ints(&[0, 0, 0, 0]));
        assert_eq!(
            moment_point(&ratio(1, 2), 2),
            RationalPoint::new(vec![ratio(1, 2), ratio(1, 4)])
        );
    }

    #[test]
    fn config_validation() {
        assert!(MomentConfig::new(2, vec![int(1), int(1)]).is_err());
        assert!(MomentConfig::new(2, vec![]).is_err());
        assert!(MomentConfig::new(0, vec![int(1)]).is_err());
        let c = MomentConfig::integer(3, 5).unwrap();
        assert_eq!(c.points()[4], RationalPoint::from_ints(&[5, 25, 125]));
    }
}
