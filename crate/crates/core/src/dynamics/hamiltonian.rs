//! Local Hamiltonians H_A ⊗ 1 + 1 ⊗ H_B.

use num_complex::Complex;

use crate::float::Real;
use crate::hilbert::{BipartiteShape, HermitianMatrix};

/// The pair (H_A, H_B); the global Hamiltonian is always H_A⊗1 + 1⊗H_B with
/// no interaction term, so every linear coupling stays local.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianPair<T: Real> {
    pub h_a: HermitianMatrix<T>,
    pub h_b: HermitianMatrix<T>,
}

impl<T: Real> HamiltonianPair<T> {
    pub fn new(h_a: HermitianMatrix<T>, h_b: HermitianMatrix<T>) -> Self {
        Self { h_a, h_b }
    }

    /// Both local Hamiltonians zero.
    pub fn free(dim_a: usize, dim_b: usize) -> Self {
        Self {
            h_a: HermitianMatrix::zero(dim_a),
            h_b: HermitianMatrix::zero(dim_b),
        }
    }

    pub fn shape(&self) -> BipartiteShape {
        BipartiteShape::new(self.h_a.dim(), self.h_b.dim()).expect("matrix dims are positive")
    }

    /// True when both factors are exactly diagonal in the preferred basis.
    pub fn is_diagonal(&self) -> bool {
        self.h_a.is_diagonal() && self.h_b.is_diagonal()
    }

    /// Diagonal element X_jk = a_j + b_k of the global Hamiltonian.
    pub fn diagonal_element(&self, j: usize, k: usize) -> T {
        self.h_a.entry(j, j).re + self.h_b.entry(k, k).re
    }

    /// Gauge companion: (H_A − s·1) ⊗ 1 + 1 ⊗ H_B = H − s·1.
    pub fn shifted(&self, s: T) -> Self {
        Self {
            h_a: self.h_a.shift_diagonal(s),
            h_b: self.h_b.clone(),
        }
    }
}

/// The eight real parameters of the two-qubit Gross–Pitaevskii system:
/// H_A = ((a1, c), (c̄, a2)), H_B = ((b1, d), (d̄, b2)), plus the coupling g.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitParams<T: Real> {
    pub a1: T,
    pub a2: T,
    pub b1: T,
    pub b2: T,
    pub c: Complex<T>,
    pub d: Complex<T>,
    pub g: T,
}

impl<T: Real> QubitParams<T> {
    /// All parameters zero.
    pub fn zero() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self {
            a1: T::zero(),
            a2: T::zero(),
            b1: T::zero(),
            b2: T::zero(),
            c: z,
            d: z,
            g: T::zero(),
        }
    }

    pub fn hamiltonians(&self) -> HamiltonianPair<T> {
        HamiltonianPair::new(
            HermitianMatrix::qubit(self.a1, self.a2, self.c),
            HermitianMatrix::qubit(self.b1, self.b2, self.d),
        )
    }

    pub fn nonlinearity(&self) -> crate::dynamics::NonlinearitySpec<T> {
        crate::dynamics::NonlinearitySpec::gross_pitaevskii(self.g)
    }

    /// Convenience split into the integrator's two inputs.
    pub fn system(&self) -> (HamiltonianPair<T>, crate::dynamics::NonlinearitySpec<T>) {
        (self.hamiltonians(), self.nonlinearity())
    }
}
