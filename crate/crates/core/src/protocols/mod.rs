//! Von Neumann measurement branching and the three signalling protocols,
//! producing Bob's effective reduced-state time series for each of Alice's
//! choices.

pub mod ensemble;
pub mod projector;
pub mod runners;
pub mod series;

pub use ensemble::{measure_on_a, measure_spectral_on_a, Branch, BranchEnsemble, PRUNE_TOL};
pub use projector::{Projector, PROJECTOR_TOL};
pub use runners::{
    distinguishability, expectation, max_distinguishability, protocol_intervention,
    protocol_measure_or_not, protocol_observable_choice, trace_distance_series,
};
pub use series::{evolve_ensemble, ReducedSeries};
