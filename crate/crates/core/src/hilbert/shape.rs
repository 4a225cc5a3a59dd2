//! Bipartite product-basis bookkeeping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions of a bipartite Hilbert space H_A ⊗ H_B.
///
/// Basis element |jk⟩ maps to the flat, row-major index `j·dim_b + k`, so the
/// four-component qubit-pair state orders as (α₀₀, α₀₁, α₁₀, α₁₁).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BipartiteShape {
    dim_a: usize,
    dim_b: usize,
}

impl BipartiteShape {
    /// New shape; both local dimensions must be at least 1.
    pub fn new(dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::Domain(format!(
                "local dimensions must be positive, got {dim_a}x{dim_b}"
            )));
        }
        Ok(Self { dim_a, dim_b })
    }

    /// The 2×2 two-qubit shape used throughout the signalling experiments.
    pub fn two_qubits() -> Self {
        Self { dim_a: 2, dim_b: 2 }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    /// Total dimension dim_a · dim_b.
    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }

    /// Flat index of |jk⟩.
    #[inline]
    pub fn flat(&self, j: usize, k: usize) -> usize {
        debug_assert!(j < self.dim_a && k < self.dim_b);
        j * self.dim_b + k
    }

    /// Inverse of [`Self::flat`].
    #[inline]
    pub fn unflat(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.total());
        (index / self.dim_b, index % self.dim_b)
    }

    /// True when this is the two-qubit shape.
    pub fn is_two_qubit(&self) -> bool {
        self.dim_a == 2 && self.dim_b == 2
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.total() {
            return Err(Error::LengthMismatch {
                dim_a: self.dim_a,
                dim_b: self.dim_b,
                len,
            });
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::ShapeMismatch {
                lhs_a: self.dim_a,
                lhs_b: self.dim_b,
                rhs_a: other.dim_a,
                rhs_b: other.dim_b,
            });
        }
        Ok(())
    }
}
