//! Bob's effective reduced-state time series.

use num_complex::Complex;

use crate::dynamics::{integrate, HamiltonianPair, NonlinearitySpec, TimeGrid, Trajectory};
use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::{bloch_vector, BlochVector, DensityMatrix};

use super::ensemble::BranchEnsemble;

/// ρ_B(t) on a sample grid, with Bloch coordinates alongside when Bob's
/// factor is a qubit.
#[derive(Debug, Clone)]
pub struct ReducedSeries<T: Real> {
    times: Vec<T>,
    rhos: Vec<DensityMatrix<T>>,
    blochs: Option<Vec<BlochVector<T>>>,
}

impl<T: Real> ReducedSeries<T> {
    pub(crate) fn from_rhos(times: Vec<T>, rhos: Vec<DensityMatrix<T>>) -> Self {
        debug_assert_eq!(times.len(), rhos.len());
        let blochs = if rhos.first().map(|r| r.dim()) == Some(2) {
            Some(
                rhos.iter()
                    .map(|r| bloch_vector(r).expect("dim checked above"))
                    .collect(),
            )
        } else {
            None
        };
        Self {
            times,
            rhos,
            blochs,
        }
    }

    /// Single-trajectory series: ρ_B(t) = Tr_A |ψ(t)⟩⟨ψ(t)|.
    pub fn from_trajectory(traj: &Trajectory<T>) -> Self {
        let rhos = traj.states().iter().map(|s| s.partial_trace_b()).collect();
        Self::from_rhos(traj.times().to_vec(), rhos)
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    pub fn rhos(&self) -> &[DensityMatrix<T>] {
        &self.rhos
    }

    /// Bloch samples; present iff dim_b = 2.
    pub fn blochs(&self) -> Option<&[BlochVector<T>]> {
        self.blochs.as_deref()
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Checks that two series share one sample grid.
    pub fn check_aligned(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::GridMismatch(format!(
                "lengths {} vs {}",
                self.len(),
                other.len()
            )));
        }
        let tol = real::<T>(1e-9);
        for (a, b) in self.times.iter().zip(&other.times) {
            if (*a - *b).abs() > tol * T::one().max(a.abs()) {
                return Err(Error::GridMismatch(format!("times {a} vs {b}")));
            }
        }
        Ok(())
    }
}

/// Integrates every branch independently and averages the reduced states:
/// ρ_B(t) = Σ_x p_x·Tr_A|ξ_x(t)⟩⟨ξ_x(t)|.
///
/// Branch weights are frozen at measurement time; the dynamics preserves each
/// branch's norm, so they never renormalize.
pub fn evolve_ensemble<T: Real>(
    ens: &BranchEnsemble<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<ReducedSeries<T>> {
    let shape = ens.shape();
    let db = shape.dim_b();
    let times = grid.times();
    let zero = Complex::new(T::zero(), T::zero());
    let mut acc: Vec<Vec<Complex<T>>> = vec![vec![zero; db * db]; times.len()];

    for (bi, branch) in ens.branches().iter().enumerate() {
        let traj = integrate(&branch.state, h, nl, grid).map_err(|e| match e {
            Error::Divergence { step, time } => Error::Precondition(format!(
                "branch {bi} diverged at step {step} (t = {time})"
            )),
            other => other,
        })?;
        debug_assert_eq!(traj.len(), times.len());
        for (i, state) in traj.states().iter().enumerate() {
            let rho = state.partial_trace_b();
            for (slot, e) in acc[i].iter_mut().zip(rho.entries()) {
                *slot = *slot + e.scale(branch.weight);
            }
        }
    }
    let rhos = acc
        .into_iter()
        .map(|entries| DensityMatrix::from_entries_unchecked(db, entries))
        .collect();
    Ok(ReducedSeries::from_rhos(times, rhos))
}
