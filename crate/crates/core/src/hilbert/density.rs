//! Reduced density matrices obtained from global pure states.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::eig::hermitian_eigenvalues;

/// Hermitian, unit-trace, positive-semidefinite dim×dim matrix.
///
/// Instances are produced by the partial-trace operations (which guarantee
/// Hermiticity by construction); [`DensityMatrix::validate`] checks the
/// remaining invariants numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T: Real> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> DensityMatrix<T> {
    pub(crate) fn from_entries_unchecked(dim: usize, entries: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        Self { dim, entries }
    }

    /// Builds from a row-major buffer, checking Hermiticity as stored.
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Domain(format!(
                "entry buffer length {} does not fit a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        for i in 0..dim {
            for j in i..dim {
                let a = entries[i * dim + j];
                let b = entries[j * dim + i];
                if a.re != b.re || a.im != -b.im {
                    return Err(Error::NotHermitian { row: i, col: j });
                }
            }
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.dim + col]
    }

    /// Real diagonal ⟨k|ρ|k⟩.
    pub fn diag(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.entry(i, i).re).collect()
    }

    pub fn trace(&self) -> T {
        (0..self.dim).map(|i| self.entry(i, i).re).sum()
    }

    /// Purity Tr ρ² = Σ|ρ_ij|².
    pub fn purity(&self) -> T {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .fold(T::zero(), |s, x| s + x)
    }

    /// Smallest eigenvalue.
    pub fn min_eigenvalue(&self) -> T {
        hermitian_eigenvalues(self.dim, &self.entries)[0]
    }

    /// Checks trace = 1 and positive semidefiniteness within `tol`
    /// (Hermiticity holds exactly by construction).
    pub fn validate(&self, tol: T) -> Result<()> {
        let tr = self.trace();
        if (tr - T::one()).abs() > tol {
            return Err(Error::Domain(format!(
                "density matrix trace {} differs from 1 beyond tolerance",
                tr
            )));
        }
        let min = self.min_eigenvalue();
        if min < -tol {
            return Err(Error::Domain(format!(
                "density matrix has eigenvalue {} below -tolerance",
                min
            )));
        }
        Ok(())
    }

    /// Trace distance (1/2)·Tr|ρ − σ|.
    pub fn trace_distance(&self, other: &Self) -> Result<T> {
        if self.dim != other.dim {
            return Err(Error::UnsupportedDimension {
                expected: self.dim,
                found: other.dim,
            });
        }
        let diff: Vec<Complex<T>> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a - *b)
            .collect();
        let eigs = hermitian_eigenvalues(self.dim, &diff);
        Ok(eigs.iter().map(|e| e.abs()).fold(T::zero(), |s, x| s + x) * real(0.5))
    }

    /// Max entrywise modulus of ρ − σ.
    pub fn max_entry_distance(&self, other: &Self) -> Result<T> {
        if self.dim != other.dim {
            return Err(Error::UnsupportedDimension {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::state::{family_psi_x, StateVector};
    use approx::assert_abs_diff_eq;

    #[test]
    fn partial_trace_outputs_validate() {
        let rho = StateVector::<f64>::bell().partial_trace_b();
        rho.validate(1e-9).unwrap();
        assert_abs_diff_eq!(rho.purity(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn family_density_diagonal_and_trace() {
        let rho = family_psi_x(0.5).unwrap().partial_trace_b();
        let d = rho.diag();
        assert_abs_diff_eq!(d[0], 0.9, epsilon = 1e-12);
        assert_abs_diff_eq!(d[1], 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn trace_distance_of_orthogonal_pure_states_is_one() {
        let shape = crate::hilbert::shape::BipartiteShape::two_qubits();
        let r0 = StateVector::<f64>::basis(shape, 0, 0).unwrap().partial_trace_b();
        let r1 = StateVector::<f64>::basis(shape, 0, 1).unwrap().partial_trace_b();
        assert_abs_diff_eq!(r0.trace_distance(&r1).unwrap(), 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(r0.trace_distance(&r0).unwrap(), 0.0, epsilon = 1e-15);
    }
}
