//! Validated orthogonal projectors for von Neumann measurements.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::HermitianMatrix;

/// Accepted deviation from P² = P (and from completeness/orthogonality of a
/// spectral family).
pub const PROJECTOR_TOL: f64 = 1e-12;

/// A Hermitian idempotent on one local factor.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector<T: Real> {
    matrix: HermitianMatrix<T>,
}

impl<T: Real> Projector<T> {
    /// Validates P† = P (exact, via [`HermitianMatrix`]) and P² = P within
    /// [`PROJECTOR_TOL`].
    pub fn new(matrix: HermitianMatrix<T>) -> Result<Self> {
        let d = matrix.dim();
        let sq = matrix.mul_mat(&matrix);
        let mut worst = T::zero();
        for i in 0..d {
            for j in 0..d {
                worst = worst.max((sq[i * d + j] - matrix.entry(i, j)).norm());
            }
        }
        if worst > real(PROJECTOR_TOL) {
            return Err(Error::NotProjector {
                reason: format!("max |P² − P| entry = {worst}"),
            });
        }
        Ok(Self { matrix })
    }

    /// Rank-one projector |φ⟩⟨φ| from an (unnormalized) ket.
    pub fn from_ket(ket: &[Complex<T>]) -> Result<Self> {
        let norm_sq: T = ket.iter().map(|a| a.norm_sqr()).fold(T::zero(), |s, x| s + x);
        if norm_sq < real(1e-300) {
            return Err(Error::NotProjector {
                reason: "cannot build a projector from the zero ket".into(),
            });
        }
        let d = ket.len();
        let inv = norm_sq.recip();
        let mut entries = vec![Complex::new(T::zero(), T::zero()); d * d];
        for i in 0..d {
            for j in i..d {
                let v = (ket[i] * ket[j].conj()).scale(inv);
                entries[i * d + j] = v;
                entries[j * d + i] = v.conj();
            }
        }
        for i in 0..d {
            entries[i * d + i] = Complex::new(entries[i * d + i].re, T::zero());
        }
        Ok(Self {
            matrix: HermitianMatrix::new(d, entries)?,
        })
    }

    /// |i⟩⟨i| on a dim-dimensional factor.
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::Domain(format!(
                "basis index {i} outside dimension {dim}"
            )));
        }
        let mut diag = vec![T::zero(); dim];
        diag[i] = T::one();
        Ok(Self {
            matrix: HermitianMatrix::diagonal(&diag),
        })
    }

    /// The qubit projector |+⟩⟨+|.
    pub fn plus() -> Self {
        let half = real::<T>(0.5);
        Self::from_ket(&[
            Complex::new(half.sqrt(), T::zero()),
            Complex::new(half.sqrt(), T::zero()),
        ])
        .expect("|+⟩ is a valid ket")
    }

    pub fn matrix(&self) -> &HermitianMatrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// 1 − P.
    pub fn complement(&self) -> Self {
        let d = self.dim();
        let mut entries = self.matrix.entries().to_vec();
        for (idx, e) in entries.iter_mut().enumerate() {
            let neg = Complex::new(-e.re, -e.im);
            *e = if idx % (d + 1) == 0 {
                Complex::new(T::one() + neg.re, neg.im)
            } else {
                neg
            };
        }
        Self {
            matrix: HermitianMatrix::new(d, entries).expect("complement stays Hermitian"),
        }
    }

    /// True when [P, Q] vanishes within `tol`.
    pub fn commutes_with(&self, other: &Self, tol: T) -> bool {
        self.dim() == other.dim() && self.matrix.commutator_norm(&other.matrix) <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type C64 = Complex<f64>;

    #[test]
    fn basis_and_ket_projectors_validate() {
        let p0 = Projector::<f64>::basis(2, 0).unwrap();
        assert_eq!(p0.matrix().entry(0, 0).re, 1.0);
        let plus = Projector::<f64>::plus();
        assert_abs_diff_eq!(plus.matrix().entry(0, 1).re, 0.5, epsilon = 1e-15);
        // Unnormalized kets are normalized on the way in.
        let p = Projector::from_ket(&[C64::new(3.0, 0.0), C64::new(0.0, 4.0)]).unwrap();
        assert_abs_diff_eq!(p.matrix().entry(0, 0).re, 0.36, epsilon = 1e-15);
        assert_abs_diff_eq!(p.matrix().entry(1, 1).re, 0.64, epsilon = 1e-15);
    }

    #[test]
    fn non_idempotent_matrix_is_rejected() {
        let m = HermitianMatrix::qubit(0.9, 0.2, C64::new(0.1, 0.0));
        assert!(matches!(
            Projector::new(m),
            Err(Error::NotProjector { .. })
        ));
    }

    #[test]
    fn complement_is_a_projector_and_sums_to_identity() {
        let p = Projector::<f64>::plus();
        let q = p.complement();
        Projector::new(q.matrix().clone()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s = p.matrix().entry(i, j) + q.matrix().entry(i, j);
                let id = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!((s - C64::new(id, 0.0)).norm(), 0.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn commutation_check() {
        let z = Projector::<f64>::basis(2, 0).unwrap();
        let plus = Projector::<f64>::plus();
        assert!(!z.commutes_with(&plus, 1e-12));
        assert!(z.commutes_with(&z.complement(), 1e-12));
    }
}
