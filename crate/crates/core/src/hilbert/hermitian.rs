//! Dense Hermitian matrices for local Hamiltonians, observables, projectors.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::Real;

/// A dim×dim complex matrix with exact stored Hermitian symmetry:
/// `entry(i,j) == conj(entry(j,i))` bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T: Real> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> HermitianMatrix<T> {
    /// Validates Hermitian symmetry of a row-major entry buffer.
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("matrix dimension must be positive".into()));
        }
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

    /// The zero matrix.
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    /// The identity.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Diagonal matrix from real eigenvalues.
    pub fn diagonal(diag: &[T]) -> Self {
        let dim = diag.len();
        let mut m = Self::zero(dim);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * dim + i] = Complex::new(d, T::zero());
        }
        m
    }

    /// The 2×2 form ((a1, c), (c̄, a2)) used for each local qubit Hamiltonian.
    pub fn qubit(a1: T, a2: T, c: Complex<T>) -> Self {
        Self {
            dim: 2,
            entries: vec![
                Complex::new(a1, T::zero()),
                c,
                c.conj(),
                Complex::new(a2, T::zero()),
            ],
        }
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

    /// Real diagonal as a vector.
    pub fn diag(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.entry(i, i).re).collect()
    }

    /// True when every off-diagonal entry is exactly zero.
    pub fn is_diagonal(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    let e = self.entries[i * self.dim + j];
                    if e.re != T::zero() || e.im != T::zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Matrix-vector product into a caller-provided buffer.
    pub(crate) fn mul_vec_into(&self, v: &[Complex<T>], out: &mut [Complex<T>]) {
        debug_assert_eq!(v.len(), self.dim);
        debug_assert_eq!(out.len(), self.dim);
        for i in 0..self.dim {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..self.dim {
                acc = acc + self.entries[i * self.dim + j] * v[j];
            }
            out[i] = acc;
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let mut out = vec![Complex::new(T::zero(), T::zero()); self.dim];
        self.mul_vec_into(v, &mut out);
        out
    }

    /// Matrix product self·other (generally not Hermitian; raw buffer).
    pub(crate) fn mul_mat(&self, other: &Self) -> Vec<Complex<T>> {
        debug_assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = vec![Complex::new(T::zero(), T::zero()); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                for j in 0..d {
                    out[i * d + j] = out[i * d + j] + a * other.entries[k * d + j];
                }
            }
        }
        out
    }

    /// Entrywise shift of the diagonal: self − s·1.
    pub fn shift_diagonal(&self, s: T) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            let e = m.entries[i * self.dim + i];
            m.entries[i * self.dim + i] = Complex::new(e.re - s, e.im);
        }
        m
    }

    /// Max entrywise modulus of self·other − other·self.
    pub fn commutator_norm(&self, other: &Self) -> T {
        let ab = self.mul_mat(other);
        let ba = other.mul_mat(self);
        ab.iter()
            .zip(&ba)
            .map(|(x, y)| (*x - *y).norm())
            .fold(T::zero(), T::max)
    }
}
