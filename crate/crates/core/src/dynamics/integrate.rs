//! Fixed-step fourth-order Runge–Kutta integration of the amplitude vector.
//!
//! No renormalization is applied between steps: norm drift is the quality
//! diagnostic that catches integrator bugs, and the acceptance battery bounds
//! it. A renormalized view of a finished trajectory is available separately.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::StateVector;

use super::hamiltonian::HamiltonianPair;
use super::nonlinearity::NonlinearitySpec;
use super::rhs::System;

/// Uniform integration grid: step `dt` up to `t_end`, storing every
/// `sample_every`-th step (plus the final one).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid<T: Real> {
    t_end: T,
    dt: T,
    sample_every: usize,
}

impl<T: Real> TimeGrid<T> {
    /// Default step 1e−3 with a sample every 100 steps (0.1 time units), which
    /// resolves the fastest phase scale of the studied parameter sets with
    /// margin.
    pub fn new(t_end: T, dt: T, sample_every: usize) -> Result<Self> {
        if !(dt > T::zero()) || !dt.is_finite() {
            return Err(Error::Domain(format!("dt must be positive, got {dt}")));
        }
        if t_end < T::zero() || !t_end.is_finite() {
            return Err(Error::Domain(format!(
                "t_end must be non-negative, got {t_end}"
            )));
        }
        if sample_every == 0 {
            return Err(Error::Domain("sample_every must be at least 1".into()));
        }
        Ok(Self {
            t_end,
            dt,
            sample_every,
        })
    }

    /// `t_end` with the default dt = 1e−3, sampling every 100 steps.
    pub fn default_for(t_end: T) -> Result<Self> {
        Self::new(t_end, real(1e-3), 100)
    }

    pub fn t_end(&self) -> T {
        self.t_end
    }

    pub fn dt(&self) -> T {
        self.dt
    }

    pub fn sample_every(&self) -> usize {
        self.sample_every
    }

    /// Number of steps; the final time n·dt lands within dt/2 of `t_end`.
    pub fn n_steps(&self) -> usize {
        (self.t_end / self.dt)
            .round()
            .to_usize()
            .expect("step count fits in usize")
    }

    /// The sampled times, including t = 0 and the final step.
    pub fn times(&self) -> Vec<T> {
        let n = self.n_steps();
        let mut times = Vec::with_capacity(n / self.sample_every + 2);
        times.push(T::zero());
        for step in 1..=n {
            if step % self.sample_every == 0 || step == n {
                times.push(self.dt * T::from_usize(step).expect("step fits scalar"));
            }
        }
        times
    }
}

/// A sampled solution of the nonlinear Schrödinger system.
#[derive(Debug, Clone)]
pub struct Trajectory<T: Real> {
    times: Vec<T>,
    states: Vec<StateVector<T>>,
    norm_drift: T,
}

impl<T: Real> Trajectory<T> {
    pub(crate) fn new(times: Vec<T>, states: Vec<StateVector<T>>, norm_drift: T) -> Self {
        debug_assert_eq!(times.len(), states.len());
        Self {
            times,
            states,
            norm_drift,
        }
    }

    pub fn times(&self) -> &[T] {
        &self.times
    }

    pub fn states(&self) -> &[StateVector<T>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn state(&self, i: usize) -> &StateVector<T> {
        &self.states[i]
    }

    pub fn time(&self, i: usize) -> T {
        self.times[i]
    }

    pub fn last_state(&self) -> &StateVector<T> {
        self.states.last().expect("trajectory holds at least t = 0")
    }

    /// Max |‖ψ‖ − 1| observed across every integration step (not just the
    /// sampled ones).
    pub fn norm_drift(&self) -> T {
        self.norm_drift
    }

    /// Post-hoc renormalized view of the samples.
    pub fn renormalized(&self) -> Result<Self> {
        let states = self
            .states
            .iter()
            .map(|s| s.renormalized())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            times: self.times.clone(),
            states,
            norm_drift: self.norm_drift,
        })
    }
}

/// Where and when an integration produced its first non-finite amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergencePoint {
    pub step: usize,
    pub time: f64,
}

impl DivergencePoint {
    pub fn to_error(self) -> Error {
        Error::Divergence {
            step: self.step,
            time: self.time,
        }
    }
}

/// Classic RK4 on the complex amplitude vector.
///
/// Fails on dimension mismatches; a non-finite amplitude mid-run yields
/// [`Error::Divergence`] with the offending step.
pub fn integrate<T: Real>(
    psi0: &StateVector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<Trajectory<T>> {
    let (traj, diverged) = integrate_partial(psi0, h, nl, grid)?;
    match diverged {
        None => Ok(traj),
        Some(point) => Err(point.to_error()),
    }
}

/// Like [`integrate`], but on divergence returns the samples collected so
/// far together with the divergence point, so callers can emit partial output.
pub fn integrate_partial<T: Real>(
    psi0: &StateVector<T>,
    h: &HamiltonianPair<T>,
    nl: &NonlinearitySpec<T>,
    grid: &TimeGrid<T>,
) -> Result<(Trajectory<T>, Option<DivergencePoint>)> {
    let sys = System::new(psi0.shape(), h, nl)?;
    let shape = psi0.shape();
    let n = shape.total();
    let n_steps = grid.n_steps();
    let dt = grid.dt();
    let half_dt = dt * real(0.5);
    let sixth_dt = dt / real(6.0);
    let two = real::<T>(2.0);

    let mut y = psi0.amps().to_vec();
    let zero = Complex::new(T::zero(), T::zero());
    let mut k1 = vec![zero; n];
    let mut k2 = vec![zero; n];
    let mut k3 = vec![zero; n];
    let mut k4 = vec![zero; n];
    let mut tmp = vec![zero; n];

    let mut times = Vec::with_capacity(n_steps / grid.sample_every() + 2);
    let mut states = Vec::with_capacity(n_steps / grid.sample_every() + 2);
    times.push(T::zero());
    states.push(psi0.clone());
    let mut drift = (norm_of(&y) - T::one()).abs();

    for step in 1..=n_steps {
        sys.rhs_into(&y, &mut k1)?;
        for i in 0..n {
            tmp[i] = y[i] + k1[i].scale(half_dt);
        }
        sys.rhs_into(&tmp, &mut k2)?;
        for i in 0..n {
            tmp[i] = y[i] + k2[i].scale(half_dt);
        }
        sys.rhs_into(&tmp, &mut k3)?;
        for i in 0..n {
            tmp[i] = y[i] + k3[i].scale(dt);
        }
        sys.rhs_into(&tmp, &mut k4)?;
        for i in 0..n {
            y[i] = y[i] + (k1[i] + (k2[i] + k3[i]).scale(two) + k4[i]).scale(sixth_dt);
        }

        let time = dt * T::from_usize(step).expect("step fits scalar");
        if y.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            let traj = Trajectory::new(times, states, drift);
            let point = DivergencePoint {
                step,
                time: time.to_f64().unwrap_or(f64::NAN),
            };
            return Ok((traj, Some(point)));
        }
        drift = drift.max((norm_of(&y) - T::one()).abs());
        if step % grid.sample_every() == 0 || step == n_steps {
            times.push(time);
            states.push(StateVector::from_raw(shape, y.clone()));
        }
    }
    Ok((Trajectory::new(times, states, drift), None))
}

fn norm_of<T: Real>(amps: &[Complex<T>]) -> T {
    amps.iter()
        .map(|a| a.norm_sqr())
        .fold(T::zero(), |s, x| s + x)
        .sqrt()
}
