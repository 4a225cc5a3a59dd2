//! Simulator for nonlocal nonlinear Schrödinger dynamics on finite-dimensional
//! bipartite Hilbert spaces.
//!
//! The dynamics is i·dψ/dt = (H_A⊗1 + 1⊗H_B)ψ + K(ψ), where the self-potential
//! K acts componentwise in a preferred product basis, e.g. the discrete
//! Gross–Pitaevskii form K_jk = g·|α_jk|²·α_jk. The crate provides:
//!
//! - [`hilbert`]: bipartite states, partial traces, Bloch/concurrence observables;
//! - [`dynamics`]: right-hand-side assembly, fixed-step RK4 integration, the
//!   closed-form propagator for diagonal Hamiltonians, gauge transforms;
//! - [`protocols`]: von Neumann measurement branching and the three
//!   superluminal-signalling protocols (observable choice, measure-or-not,
//!   local intervention);
//! - [`chaos`]: Bloch/cylinder trajectory distances, overlap series, and
//!   regression-based Lyapunov-exponent estimation;
//! - [`verify`]: an executable property suite for the no-signalling
//!   propositions, with sharpness controls.
//!
//! Core math is generic over the scalar type via [`float::Real`]; the
//! experiments all run in `f64` (chaotic trajectories shed digits fast), and
//! the aliases below fix that choice for downstream code.

pub mod chaos;
pub mod dynamics;
pub mod error;
pub mod float;
pub mod hilbert;
pub mod protocols;
pub mod verify;

pub use error::{Error, Result};
pub use float::Real;

/// Double-precision instantiations used by the CLI and the shipped experiments.
pub mod f64_types {
    pub type StateVector = crate::hilbert::StateVector<f64>;
    pub type BipartiteShape = crate::hilbert::BipartiteShape;
    pub type HermitianMatrix = crate::hilbert::HermitianMatrix<f64>;
    pub type DensityMatrix = crate::hilbert::DensityMatrix<f64>;
    pub type BlochVector = crate::hilbert::BlochVector<f64>;
    pub type NonlinearitySpec = crate::dynamics::NonlinearitySpec<f64>;
    pub type HamiltonianPair = crate::dynamics::HamiltonianPair<f64>;
    pub type QubitParams = crate::dynamics::QubitParams<f64>;
    pub type TimeGrid = crate::dynamics::TimeGrid<f64>;
    pub type Trajectory = crate::dynamics::Trajectory<f64>;
    pub type Projector = crate::protocols::Projector<f64>;
    pub type BranchEnsemble = crate::protocols::BranchEnsemble<f64>;
    pub type ReducedSeries = crate::protocols::ReducedSeries<f64>;
    pub type DistanceSeries = crate::chaos::DistanceSeries<f64>;
    pub type LyapunovEstimate = crate::chaos::LyapunovEstimate<f64>;
}
