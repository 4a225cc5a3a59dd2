//! Closed-form propagator for diagonal local Hamiltonians.
//!
//! When H_A and H_B are both diagonal in the preferred basis the coupled
//! system decouples: each modulus is a constant of motion and each phase
//! advances linearly, α_jk(t) = α_jk(0)·exp(−i·[X_jk + f_jk(|α_jk(0)|)]·t)
//! with X_jk = a_j + b_k. This is the independent oracle the integrator is
//! checked against.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::Real;
use crate::hilbert::StateVector;

use super::hamiltonian::HamiltonianPair;
use super::nonlinearity::NonlinearitySpec;

/// Evolves `psi0` to time `t` in closed form.
///
/// Preconditions: both local Hamiltonians exactly diagonal, and the
/// nonlinearity carries no field operators (A_jk = 1).
pub fn analytic_diagonal_evolve<T: Real>(
    psi0: &StateVector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    t: T,
) -> Result<StateVector<T>> {
    psi0.shape().check_same(&h.shape())?;
    nl.check_shape(&psi0.shape())?;
    if !h.is_diagonal() {
        return Err(Error::Precondition(
            "analytic_diagonal_evolve requires exactly diagonal local Hamiltonians".into(),
        ));
    }
    if nl.field_ops().is_some() {
        return Err(Error::Precondition(
            "analytic_diagonal_evolve requires identity field operators".into(),
        ));
    }
    let shape = psi0.shape();
    let needs_check = nl.needs_finite_check();
    let mut amps = Vec::with_capacity(shape.total());
    for j in 0..shape.dim_a() {
        for k in 0..shape.dim_b() {
            let a = psi0.amp(j, k);
            let f = nl.eval(j, k, a.norm());
            if needs_check && !f.is_finite() {
                return Err(Error::NonFiniteNonlinearity { j, k });
            }
            let phase = -((h.diagonal_element(j, k) + f) * t);
            amps.push(a * Complex::from_polar(T::one(), phase));
        }
    }
    Ok(StateVector::from_raw(shape, amps))
}
