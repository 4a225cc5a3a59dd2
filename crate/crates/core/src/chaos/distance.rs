//! Trajectory distances in the Bloch ball and on the parameter cylinder.

use crate::error::{Error, Result};
use crate::float::Real;
use crate::hilbert::BlochVector;
use crate::protocols::ReducedSeries;

/// Euclidean distance between two Bloch vectors.
pub fn bloch_distance<T: Real>(n: &BlochVector<T>, m: &BlochVector<T>) -> T {
    let dx = n.x - m.x;
    let dy = n.y - m.y;
    let dz = n.z - m.z;
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Euclidean distance on the cylinder B₃ × [c₁, c₂]: the Bloch coordinates
/// extended by one Hamiltonian-parameter axis, for detecting chaos with
/// respect to parameter changes rather than initial conditions.
pub fn cylinder_distance<T: Real>(
    n: &BlochVector<T>,
    c: T,
    m: &BlochVector<T>,
    c_prime: T,
) -> T {
    let dx = n.x - m.x;
    let dy = n.y - m.y;
    let dz = n.z - m.z;
    let dc = c - c_prime;
    (dx * dx + dy * dy + dz * dz + dc * dc).sqrt()
}

/// A sampled non-negative scalar series, optionally shifted by a uniform ε
/// (D_ε(t) = D(t) + ε, used when D(0) = 0 would break the log-ratio).
#[derive(Debug, Clone)]
pub struct DistanceSeries<T: Real> {
    pub times: Vec<T>,
    pub values: Vec<T>,
    pub epsilon_shift: T,
}

impl<T: Real> DistanceSeries<T> {
    pub fn new(times: Vec<T>, values: Vec<T>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::GridMismatch(format!(
                "{} times vs {} values",
                times.len(),
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("distance series contains non-finite values".into()));
        }
        Ok(Self {
            times,
            values,
            epsilon_shift: T::zero(),
        })
    }

    /// Uniformly shifted copy: values + ε, with the shift recorded.
    pub fn shifted(&self, eps: T) -> Result<Self> {
        if eps < T::zero() {
            return Err(Error::Domain(format!("epsilon shift {eps} must be ≥ 0")));
        }
        Ok(Self {
            times: self.times.clone(),
            values: self.values.iter().map(|&v| v + eps).collect(),
            epsilon_shift: self.epsilon_shift + eps,
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Pointwise distance between two reduced-state series: Bloch distance, or
/// cylinder distance when a parameter offset accompanies the trajectories.
pub fn trajectory_distance_series<T: Real>(
    run1: &ReducedSeries<T>,
    run2: &ReducedSeries<T>,
    parameter_offset: Option<T>,
) -> Result<DistanceSeries<T>> {
    run1.check_aligned(run2)?;
    let (b1, b2) = match (run1.blochs(), run2.blochs()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::UnsupportedDimension {
                expected: 2,
                found: run1.rhos().first().map(|r| r.dim()).unwrap_or(0),
            })
        }
    };
    let offset = parameter_offset.unwrap_or_else(T::zero);
    let values = b1
        .iter()
        .zip(b2)
        .map(|(n, m)| match parameter_offset {
            Some(_) => cylinder_distance(n, T::zero(), m, offset),
            None => bloch_distance(n, m),
        })
        .collect();
    DistanceSeries::new(run1.times().to_vec(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bloch_distance_basics() {
        let n = BlochVector::new(0.0, 0.0, 1.0);
        assert_eq!(bloch_distance(&n, &n), 0.0);
        let south = BlochVector::new(0.0, 0.0, -1.0);
        assert_abs_diff_eq!(bloch_distance(&n, &south), 2.0, epsilon = 1e-15);
        let e_x = BlochVector::new(1.0, 0.0, 0.0);
        let e_y = BlochVector::new(0.0, 1.0, 0.0);
        assert_abs_diff_eq!(bloch_distance(&e_x, &e_y), 2f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn cylinder_distance_basics() {
        let n = BlochVector::new(0.1, 0.2, 0.3);
        assert_eq!(cylinder_distance(&n, 2.0, &n, 2.0), 0.0);
        assert_abs_diff_eq!(cylinder_distance(&n, 2.0, &n, 2.001), 0.001, epsilon = 1e-15);
        let up = BlochVector::new(0.0, 0.0, 1.0);
        let origin = BlochVector::zero();
        assert_abs_diff_eq!(
            cylinder_distance(&up, 0.0, &origin, 0.001),
            (1.0 + 1e-6f64).sqrt(),
            epsilon = 1e-15
        );
        // Cylinder distance dominates the Bloch distance of its parts.
        assert!(cylinder_distance(&up, 0.0, &origin, 0.5) >= bloch_distance(&up, &origin));
    }

    #[test]
    fn shifted_series_records_epsilon() {
        let s = DistanceSeries::new(vec![0.0, 1.0], vec![0.0, 0.5]).unwrap();
        let sh = s.shifted(0.001).unwrap();
        assert_abs_diff_eq!(sh.values[0], 0.001, epsilon = 1e-15);
        assert_abs_diff_eq!(sh.values[1], 0.501, epsilon = 1e-15);
        assert_abs_diff_eq!(sh.epsilon_shift, 0.001, epsilon = 1e-15);
        assert!(s.shifted(-1.0).is_err());
    }

    #[test]
    fn length_mismatch_rejected() {
        assert!(DistanceSeries::new(vec![0.0], vec![0.0, 1.0]).is_err());
    }
}
