//! Right-hand side of i·dψ/dt = (H_A⊗1 + 1⊗H_B)ψ + K(ψ).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::Real;
use crate::hilbert::{BipartiteShape, StateVector};

use super::hamiltonian::HamiltonianPair;
use super::nonlinearity::NonlinearitySpec;

/// Validated (shape, Hamiltonians, nonlinearity) bundle with the raw stepping
/// kernels. Construction performs every dimension check once so the per-step
/// code can skip them.
#[derive(Debug, Clone)]
pub(crate) struct System<'a, T: Real> {
    pub shape: BipartiteShape,
    pub h: &'a HamiltonianPair<T>,
    pub nl: &'a NonlinearitySpec<T>,
}

impl<'a, T: Real> System<'a, T> {
    pub fn new(
        shape: BipartiteShape,
        h: &'a HamiltonianPair<T>,
        nl: &'a NonlinearitySpec<T>,
    ) -> Result<Self> {
        shape.check_same(&h.shape())?;
        nl.check_shape(&shape)?;
        Ok(Self { shape, h, nl })
    }

    /// K(ψ) added onto `out` (which must hold the Hamiltonian part already,
    /// or zeros for the bare self-potential).
    pub fn add_self_potential(&self, amps: &[Complex<T>], out: &mut [Complex<T>]) -> Result<()> {
        let (da, db) = (self.shape.dim_a(), self.shape.dim_b());
        let check = self.nl.needs_finite_check();
        match self.nl.field_ops() {
            None => {
                for j in 0..da {
                    for k in 0..db {
                        let idx = j * db + k;
                        let a = amps[idx];
                        let f = self.nl.eval(j, k, a.norm());
                        if check && !f.is_finite() {
                            return Err(Error::NonFiniteNonlinearity { j, k });
                        }
                        out[idx] = out[idx] + a.scale(f);
                    }
                }
            }
            Some(ops) => {
                // General field operators: the argument of f_jk is
                // |⟨ψ|A_jk|jk⟩| = |(A_jk ψ)_jk| since A_jk is Hermitian.
                for j in 0..da {
                    for k in 0..db {
                        let idx = j * db + k;
                        let op = &ops[idx];
                        let mut row = Complex::new(T::zero(), T::zero());
                        for (n, amp) in amps.iter().enumerate() {
                            row = row + op.entry(idx, n) * *amp;
                        }
                        let f = self.nl.eval(j, k, row.norm());
                        if check && !f.is_finite() {
                            return Err(Error::NonFiniteNonlinearity { j, k });
                        }
                        out[idx] = out[idx] + amps[idx].scale(f);
                    }
                }
            }
        }
        Ok(())
    }

    /// Writes dψ/dt = −i[(H_A⊗1 + 1⊗H_B)ψ + K(ψ)] into `out`.
    pub fn rhs_into(&self, amps: &[Complex<T>], out: &mut [Complex<T>]) -> Result<()> {
        let (da, db) = (self.shape.dim_a(), self.shape.dim_b());
        let ha = self.h.h_a.entries();
        let hb = self.h.h_b.entries();
        for j in 0..da {
            for k in 0..db {
                let mut acc = Complex::new(T::zero(), T::zero());
                for l in 0..da {
                    acc = acc + ha[j * da + l] * amps[l * db + k];
                }
                for m in 0..db {
                    acc = acc + hb[k * db + m] * amps[j * db + m];
                }
                out[j * db + k] = acc;
            }
        }
        self.add_self_potential(amps, out)?;
        for v in out.iter_mut() {
            // −i·z
            *v = Complex::new(v.im, -v.re);
        }
        Ok(())
    }
}

/// The self-potential K(ψ), component f_jk(|⟨ψ|A_jk|jk⟩|)·α_jk on |jk⟩.
pub fn self_potential<T: Real>(
    state: &StateVector<T>,
    nl: &NonlinearitySpec<T>,
) -> Result<Vec<Complex<T>>> {
    nl.check_shape(&state.shape())?;
    let mut out = vec![Complex::new(T::zero(), T::zero()); state.shape().total()];
    let h = HamiltonianPair::free(state.shape().dim_a(), state.shape().dim_b());
    let sys = System::new(state.shape(), &h, nl)?;
    sys.add_self_potential(state.amps(), &mut out)?;
    Ok(out)
}

/// dψ/dt = −i[(H_A⊗1 + 1⊗H_B)ψ + K(ψ)].
pub fn rhs<T: Real>(
    state: &StateVector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
) -> Result<Vec<Complex<T>>> {
    let sys = System::new(state.shape(), h, nl)?;
    let mut out = vec![Complex::new(T::zero(), T::zero()); state.shape().total()];
    sys.rhs_into(state.amps(), &mut out)?;
    Ok(out)
}
