//! Bloch-ball coordinates for qubit density matrices, and the concurrence.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::density::DensityMatrix;
use crate::hilbert::state::StateVector;

/// The Fano coordinates (n_x, n_y, n_z) of a qubit state, ‖n‖ ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> BlochVector<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn norm(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// Extracts the Bloch vector of a 2×2 density matrix:
/// n_x = 2·Re ρ₀₁, n_y = −2·Im ρ₀₁, n_z = 2·ρ₀₀ − 1.
pub fn bloch_vector<T: Real>(rho: &DensityMatrix<T>) -> Result<BlochVector<T>> {
    if rho.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            found: rho.dim(),
        });
    }
    let two = real::<T>(2.0);
    let off = rho.entry(0, 1);
    Ok(BlochVector::new(
        two * off.re,
        -(two * off.im),
        two * rho.entry(0, 0).re - T::one(),
    ))
}

/// Inverse Fano map: ρ = (1 + n·σ)/2.
pub fn fano_reconstruct<T: Real>(n: &BlochVector<T>) -> DensityMatrix<T> {
    let half = real::<T>(0.5);
    let entries = vec![
        Complex::new((T::one() + n.z) * half, T::zero()),
        Complex::new(n.x * half, -(n.y * half)),
        Complex::new(n.x * half, n.y * half),
        Complex::new((T::one() - n.z) * half, T::zero()),
    ];
    DensityMatrix::new(2, entries).expect("Fano form is Hermitian by construction")
}

/// Pure-state two-qubit concurrence √(2(1 − Tr ρ_B²)) = √(1 − ‖n‖²).
pub fn concurrence<T: Real>(state: &StateVector<T>) -> Result<T> {
    if !state.shape().is_two_qubit() {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            found: state.shape().dim_a().max(state.shape().dim_b()),
        });
    }
    let purity = state.partial_trace_b().purity();
    let arg = real::<T>(2.0) * (T::one() - purity);
    Ok(arg.max(T::zero()).sqrt().min(T::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::shape::BipartiteShape;
    use crate::hilbert::state::family_psi_x;
    use approx::assert_abs_diff_eq;

    type C64 = Complex<f64>;

    #[test]
    fn maximally_mixed_sits_at_the_origin() {
        let rho = StateVector::<f64>::bell().partial_trace_b();
        let n = bloch_vector(&rho).unwrap();
        assert_abs_diff_eq!(n.norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn poles_and_equator() {
        let shape = BipartiteShape::two_qubits();
        let up = StateVector::<f64>::basis(shape, 0, 0).unwrap().partial_trace_b();
        let n = bloch_vector(&up).unwrap();
        assert_abs_diff_eq!(n.z, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(n.x, 0.0, epsilon = 1e-15);

        // |0⟩ ⊗ |+⟩ puts Bob's state at (1, 0, 0).
        let inv = 1.0 / 2f64.sqrt();
        let amps = vec![
            C64::new(inv, 0.0),
            C64::new(inv, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ];
        let plus = StateVector::new(shape, amps).unwrap().partial_trace_b();
        let n = bloch_vector(&plus).unwrap();
        assert_abs_diff_eq!(n.x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(n.y, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(n.z, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn bloch_rejects_non_qubit_dimension() {
        let shape = BipartiteShape::new(2, 3).unwrap();
        let rho = StateVector::<f64>::basis(shape, 0, 0).unwrap().partial_trace_b();
        assert!(matches!(
            bloch_vector(&rho),
            Err(Error::UnsupportedDimension { found: 3, .. })
        ));
    }

    #[test]
    fn fano_round_trip() {
        let rho = family_psi_x(0.3).unwrap().partial_trace_b();
        let n = bloch_vector(&rho).unwrap();
        let back = fano_reconstruct(&n);
        assert!(rho.max_entry_distance(&back).unwrap() < 1e-12);
    }

    #[test]
    fn concurrence_examples() {
        assert_abs_diff_eq!(concurrence(&StateVector::<f64>::bell()).unwrap(), 1.0, epsilon = 1e-12);

        let shape = BipartiteShape::two_qubits();
        let sep = StateVector::<f64>::basis(shape, 0, 0).unwrap();
        assert_abs_diff_eq!(concurrence(&sep).unwrap(), 0.0, epsilon = 1e-12);

        // (1 − x²)/(1 + x²) at x = 1/2.
        let psi = family_psi_x(0.5).unwrap();
        assert_abs_diff_eq!(concurrence(&psi).unwrap(), 0.6, epsilon = 1e-12);
    }

    #[test]
    fn concurrence_rejects_non_qubit_shapes() {
        let shape = BipartiteShape::new(3, 2).unwrap();
        let psi = StateVector::<f64>::basis(shape, 0, 0).unwrap();
        assert!(concurrence(&psi).is_err());
    }
}
