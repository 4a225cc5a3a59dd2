//! Overlap of two independently integrated global states.

use crate::dynamics::{integrate, HamiltonianPair, NonlinearitySpec, TimeGrid};
use crate::error::Result;
use crate::float::Real;
use crate::hilbert::StateVector;

use super::distance::DistanceSeries;

/// d(t) = |⟨ψ(t)|φ(t)⟩| on the grid, from two independent integrations.
///
/// Unitary (g = 0) dynamics keeps it constant; the nonlinear dynamics does
/// not preserve scalar products and can drive initially close states apart.
pub fn overlap_series<T: Real>(
    psi0: &StateVector<T>,
    phi0: &StateVector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<DistanceSeries<T>> {
    psi0.shape().check_same(&phi0.shape())?;
    let t1 = integrate(psi0, h, nl, grid)?;
    let t2 = integrate(phi0, h, nl, grid)?;
    let values = t1
        .states()
        .iter()
        .zip(t2.states())
        .map(|(a, b)| Ok(a.inner(b)?.norm()))
        .collect::<Result<Vec<T>>>()?;
    DistanceSeries::new(t1.times().to_vec(), values)
}
