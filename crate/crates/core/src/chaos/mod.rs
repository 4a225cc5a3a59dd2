//! Overlap/concurrence diagnostics and the Lyapunov-exponent estimation
//! pipeline over Bloch-ball and parameter-cylinder trajectories.

pub mod distance;
pub mod lyapunov;
pub mod overlap;

pub use distance::{
    bloch_distance, cylinder_distance, trajectory_distance_series, DistanceSeries,
};
pub use lyapunov::{estimate_lyapunov, suggest_window, LyapunovEstimate, MIN_WINDOW_POINTS};
pub use overlap::overlap_series;
