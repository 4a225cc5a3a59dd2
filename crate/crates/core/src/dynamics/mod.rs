//! Assembly and time integration of the nonlinear Schrödinger system.

pub mod analytic;
pub mod gauge;
pub mod hamiltonian;
pub mod integrate;
pub mod nonlinearity;
pub mod rhs;

pub use analytic::analytic_diagonal_evolve;
pub use gauge::gauge_transform;
pub use hamiltonian::{HamiltonianPair, QubitParams};
pub use integrate::{integrate, integrate_partial, DivergencePoint, TimeGrid, Trajectory};
pub use nonlinearity::{IndexFn, NonlinearitySpec, LOG_CLAMP};
pub use rhs::{rhs, self_potential};
