//! The three superluminal-signalling protocols.
//!
//! Each runner returns Bob's effective ρ_B series for Alice's two choices.
//! Alice acts at t₀ = 0 throughout: acting at a later t₀ is the same protocol
//! with the source redefined as ψ(t₀), so nothing is lost.

use crate::dynamics::{integrate, HamiltonianPair, NonlinearitySpec, TimeGrid};
use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::StateVector;

use super::ensemble::measure_on_a;
use super::projector::Projector;
use super::series::{evolve_ensemble, ReducedSeries};

/// Alice measures X or X′ at t = 0; Bob watches ρ_B(t) vs ρ_B′(t).
///
/// Commuting projectors make the protocol vacuous (identical ensembles); that
/// case is accepted with a warning rather than refused.
pub fn protocol_observable_choice<T: Real>(
    source: &StateVector<T>,
    x: &Projector<T>,
    x_prime: &Projector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<(ReducedSeries<T>, ReducedSeries<T>)> {
    if x.commutes_with(x_prime, real(1e-12)) {
        log::warn!("observable-choice protocol: X and X' commute, the protocol is vacuous");
    }
    let ens_x = measure_on_a(source, x)?;
    let ens_xp = measure_on_a(source, x_prime)?;
    Ok((
        evolve_ensemble(&ens_x, h, nl, grid)?,
        evolve_ensemble(&ens_xp, h, nl, grid)?,
    ))
}

/// Alice either leaves the state alone or measures X at t = 0.
///
/// Returns (unmeasured series, measured series).
pub fn protocol_measure_or_not<T: Real>(
    source: &StateVector<T>,
    x: &Projector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<(ReducedSeries<T>, ReducedSeries<T>)> {
    let unmeasured = ReducedSeries::from_trajectory(&integrate(source, h, nl, grid)?);
    let ens = measure_on_a(source, x)?;
    let measured = evolve_ensemble(&ens, h, nl, grid)?;
    Ok((unmeasured, measured))
}

/// Alice switches her local Hamiltonian between H_A and H_A′ at t = 0 without
/// measuring anything; no collapse postulate enters.
///
/// Bob's Hamiltonian must be identical in both arms, otherwise the protocol
/// would confound Alice's intervention with a change on Bob's side.
pub fn protocol_intervention<T: Real>(
    source: &StateVector<T>,
    h: &HamiltonianPair<T>,
    h_prime: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<(ReducedSeries<T>, ReducedSeries<T>)> {
    if h.h_b != h_prime.h_b {
        return Err(Error::Precondition(
            "intervention protocol requires identical H_B in both arms".into(),
        ));
    }
    let arm = ReducedSeries::from_trajectory(&integrate(source, h, nl, grid)?);
    let arm_prime = ReducedSeries::from_trajectory(&integrate(source, h_prime, nl, grid)?);
    Ok((arm, arm_prime))
}

/// Re(Tr(P·ρ)): Bob's single-observable outcome probability.
pub fn expectation<T: Real>(
    observable: &Projector<T>,
    rho: &crate::hilbert::DensityMatrix<T>,
) -> Result<T> {
    let d = rho.dim();
    if observable.dim() != d {
        return Err(Error::UnsupportedDimension {
            expected: d,
            found: observable.dim(),
        });
    }
    let m = observable.matrix();
    let mut acc = T::zero();
    for i in 0..d {
        for j in 0..d {
            acc = acc + (m.entry(i, j) * rho.entry(j, i)).re;
        }
    }
    Ok(acc)
}

/// Per-time |Tr(P·ρ_B(t)) − Tr(P·ρ_B′(t))|: the statistical signal Bob sees
/// when he can measure only the one observable P.
pub fn distinguishability<T: Real>(
    s1: &ReducedSeries<T>,
    s2: &ReducedSeries<T>,
    observable: &Projector<T>,
) -> Result<Vec<T>> {
    s1.check_aligned(s2)?;
    s1.rhos()
        .iter()
        .zip(s2.rhos())
        .map(|(a, b)| Ok((expectation(observable, a)? - expectation(observable, b)?).abs()))
        .collect()
}

/// Max of [`distinguishability`] over the grid.
pub fn max_distinguishability<T: Real>(
    s1: &ReducedSeries<T>,
    s2: &ReducedSeries<T>,
    observable: &Projector<T>,
) -> Result<T> {
    Ok(distinguishability(s1, s2, observable)?
        .into_iter()
        .fold(T::zero(), T::max))
}

/// Per-time trace distance between the two series; the tomographically
/// complete summary, reported alongside the single-observable signal.
pub fn trace_distance_series<T: Real>(
    s1: &ReducedSeries<T>,
    s2: &ReducedSeries<T>,
) -> Result<Vec<T>> {
    s1.check_aligned(s2)?;
    s1.rhos()
        .iter()
        .zip(s2.rhos())
        .map(|(a, b)| a.trace_distance(b))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::QubitParams;
    use num_complex::Complex;

    type C64 = Complex<f64>;

    fn grid() -> TimeGrid<f64> {
        TimeGrid::new(3.0, 1e-3, 100).unwrap()
    }

    fn ket0() -> Projector<f64> {
        Projector::basis(2, 0).unwrap()
    }

    #[test]
    fn observable_choice_collapses_in_the_linear_limit() {
        let p = QubitParams {
            a1: 1.0,
            a2: 1.0,
            b1: 2.0,
            b2: 1.0,
            c: C64::new(1.0, 0.0),
            d: C64::new(2.0, 0.0),
            g: 0.0,
        };
        let (h, nl) = p.system();
        let (s1, s2) = protocol_observable_choice(
            &StateVector::bell(),
            &ket0(),
            &Projector::plus(),
            &h,
            &nl,
            &grid(),
        )
        .unwrap();
        assert!(max_distinguishability(&s1, &s2, &ket0()).unwrap() < 1e-8);
    }

    #[test]
    fn measure_or_not_is_invisible_on_an_eigenstate() {
        // |00⟩ is an eigenstate of |0⟩⟨0| ⊗ 1: the measurement does not
        // disturb, so both arms carry the very same state.
        let p = QubitParams {
            a1: 0.3,
            b1: 0.7,
            c: C64::new(0.2, 0.1),
            d: C64::new(0.4, -0.3),
            g: 2.0,
            ..QubitParams::zero()
        };
        let (h, nl) = p.system();
        let shape = crate::hilbert::BipartiteShape::two_qubits();
        let source = StateVector::basis(shape, 0, 0).unwrap();
        let (plain, measured) =
            protocol_measure_or_not(&source, &ket0(), &h, &nl, &grid()).unwrap();
        for (a, b) in plain.rhos().iter().zip(measured.rhos()) {
            assert!(a.max_entry_distance(b).unwrap() < 1e-12);
        }
    }

    #[test]
    fn intervention_with_equal_hamiltonians_is_trivial() {
        let p = QubitParams {
            a1: 0.3,
            a2: 0.1,
            b1: 0.1,
            b2: 0.1,
            c: C64::new(0.4, 0.0),
            d: C64::new(0.1, 0.0),
            g: 1.0,
        };
        let (h, nl) = p.system();
        let (s1, s2) =
            protocol_intervention(&StateVector::bell(), &h, &h.clone(), &nl, &grid()).unwrap();
        assert_eq!(max_distinguishability(&s1, &s2, &ket0()).unwrap(), 0.0);
    }

    #[test]
    fn intervention_rejects_a_changed_bob_hamiltonian() {
        let p = QubitParams {
            b1: 0.1,
            g: 1.0,
            ..QubitParams::zero()
        };
        let (h, nl) = p.system();
        let mut q = p;
        q.b1 = 0.2;
        let h_prime = q.hamiltonians();
        assert!(matches!(
            protocol_intervention(&StateVector::<f64>::bell(), &h, &h_prime, &nl, &grid()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn distinguishability_of_identical_series_is_zero() {
        let (h, nl) = QubitParams {
            g: 1.0,
            ..QubitParams::zero()
        }
        .system();
        let traj = integrate(&StateVector::bell(), &h, &nl, &grid()).unwrap();
        let s = ReducedSeries::from_trajectory(&traj);
        let d = distinguishability(&s, &s, &ket0()).unwrap();
        assert!(d.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn expectation_reproduces_a_direct_trace() {
        // s1 = diag(1, 0), s2 = diag(1/2, 1/2), P = |0⟩⟨0| → signal 1/2.
        let shape = crate::hilbert::BipartiteShape::two_qubits();
        let pure = StateVector::<f64>::basis(shape, 0, 0)
            .unwrap()
            .partial_trace_b();
        let mixed = StateVector::<f64>::bell().partial_trace_b();
        let p = ket0();
        let d = (expectation(&p, &pure).unwrap() - expectation(&p, &mixed).unwrap()).abs();
        approx::assert_abs_diff_eq!(d, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn grid_mismatch_is_detected() {
        let (h, nl) = QubitParams::zero().system();
        let g1 = TimeGrid::new(1.0, 1e-3, 100).unwrap();
        let g2 = TimeGrid::new(2.0, 1e-3, 100).unwrap();
        let s1 = ReducedSeries::from_trajectory(
            &integrate(&StateVector::bell(), &h, &nl, &g1).unwrap(),
        );
        let s2 = ReducedSeries::from_trajectory(
            &integrate(&StateVector::bell(), &h, &nl, &g2).unwrap(),
        );
        assert!(matches!(
            distinguishability(&s1, &s2, &ket0()),
            Err(Error::GridMismatch(_))
        ));
    }
}
