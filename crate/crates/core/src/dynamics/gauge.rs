//! The U(1) gauge freedom of the dynamics.
//!
//! Multiplying the state by e^{iλ(t)} and shifting the Hamiltonian by
//! −λ'(t)·1 leaves the equation of motion (and every physical observable)
//! untouched: the self-potential argument |⟨ψ|A_jk|jk⟩| is phase-blind.

use num_complex::Complex;

use crate::float::Real;
use crate::hilbert::StateVector;

use super::integrate::Trajectory;

/// Applies the time-dependent global phase e^{iλ(t)} to every sample.
///
/// For λ with constant slope s, the result equals integrating the same
/// initial state under H − s·1 (see [`HamiltonianPair::shifted`]); constant λ
/// changes no inner-product modulus at all.
///
/// [`HamiltonianPair::shifted`]: super::HamiltonianPair::shifted
pub fn gauge_transform<T: Real, F>(traj: &Trajectory<T>, lambda: F) -> Trajectory<T>
where
    F: Fn(T) -> T,
{
    let states = traj
        .times()
        .iter()
        .zip(traj.states())
        .map(|(&t, s)| {
            let phase = Complex::from_polar(T::one(), lambda(t));
            let amps = s.amps().iter().map(|a| *a * phase).collect();
            StateVector::from_raw(s.shape(), amps)
        })
        .collect();
    Trajectory::new(traj.times().to_vec(), states, traj.norm_drift())
}
