//! Finite-dimensional bipartite state algebra: states, Hermitian matrices,
//! partial traces, Bloch coordinates, and entanglement observables.

pub mod bloch;
pub mod density;
pub mod eig;
pub mod hermitian;
pub mod shape;
pub mod state;

pub use bloch::{bloch_vector, concurrence, fano_reconstruct, BlochVector};
pub use density::DensityMatrix;
pub use hermitian::HermitianMatrix;
pub use shape::BipartiteShape;
pub use state::{family_psi_x, overlap, sep_eps, StateVector, NORM_TOL};
