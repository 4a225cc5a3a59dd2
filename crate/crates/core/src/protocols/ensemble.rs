//! Von Neumann measurement branching on Alice's factor.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::{BipartiteShape, StateVector};

use super::projector::{Projector, PROJECTOR_TOL};

/// Branch probabilities below this are treated as exactly zero and pruned;
/// normalizing a near-null vector would only amplify integrator noise.
pub const PRUNE_TOL: f64 = 1e-12;

/// One post-measurement branch.
#[derive(Debug, Clone)]
pub struct Branch<T: Real> {
    pub weight: T,
    pub state: StateVector<T>,
}

/// A weighted set {(p_x, ξ_x)} of post-measurement pure states, evolved
/// jointly and averaged for Bob's effective state.
#[derive(Debug, Clone)]
pub struct BranchEnsemble<T: Real> {
    branches: Vec<Branch<T>>,
}

impl<T: Real> BranchEnsemble<T> {
    /// Validates weight normalization, state normalization, and a common shape.
    pub fn new(branches: Vec<Branch<T>>) -> Result<Self> {
        if branches.is_empty() {
            return Err(Error::Domain("ensemble needs at least one branch".into()));
        }
        let shape = branches[0].state.shape();
        let mut total = T::zero();
        for b in &branches {
            b.state.shape().check_same(&shape)?;
            if b.weight < T::zero() || b.weight > T::one() + real(1e-9) {
                return Err(Error::Domain(format!(
                    "branch weight {} outside [0, 1]",
                    b.weight
                )));
            }
            if (b.state.norm() - T::one()).abs() > real(1e-9) {
                return Err(Error::NotNormalized {
                    norm_sq: b.state.norm().powi(2).to_f64().unwrap_or(f64::NAN),
                });
            }
            total += b.weight;
        }
        if (total - T::one()).abs() > real(1e-9) {
            return Err(Error::Domain(format!(
                "branch weights sum to {total}, expected 1"
            )));
        }
        Ok(Self { branches })
    }

    /// The trivial ensemble: one branch of weight one.
    pub fn pure(state: StateVector<T>) -> Self {
        Self {
            branches: vec![Branch {
                weight: T::one(),
                state,
            }],
        }
    }

    pub fn branches(&self) -> &[Branch<T>] {
        &self.branches
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn shape(&self) -> BipartiteShape {
        self.branches[0].state.shape()
    }

    pub fn total_weight(&self) -> T {
        self.branches
            .iter()
            .map(|b| b.weight)
            .fold(T::zero(), |s, x| s + x)
    }
}

/// (X ⊗ 1)ψ for a projector X on H_A, written into a fresh buffer.
fn apply_on_a<T: Real>(state: &StateVector<T>, x: &Projector<T>) -> Vec<Complex<T>> {
    let shape = state.shape();
    let (da, db) = (shape.dim_a(), shape.dim_b());
    let m = x.matrix();
    let mut out = vec![Complex::new(T::zero(), T::zero()); shape.total()];
    for j in 0..da {
        for k in 0..db {
            let mut acc = Complex::new(T::zero(), T::zero());
            for l in 0..da {
                acc = acc + m.entry(j, l) * state.amp(l, k);
            }
            out[shape.flat(j, k)] = acc;
        }
    }
    out
}

fn branch_from_amps<T: Real>(
    shape: BipartiteShape,
    amps: Vec<Complex<T>>,
) -> Option<Branch<T>> {
    let p: T = amps.iter().map(|a| a.norm_sqr()).fold(T::zero(), |s, x| s + x);
    if p <= real(PRUNE_TOL) {
        return None;
    }
    let inv = p.sqrt().recip();
    let amps = amps.into_iter().map(|a| a.scale(inv)).collect();
    Some(Branch {
        weight: p,
        state: StateVector::from_raw(shape, amps),
    })
}

/// Projective measurement of X on Alice's side under the von Neumann update:
/// branches ((p₁, (X⊗1)ψ/√p₁), (p₀, ((1−X)⊗1)ψ/√p₀)) with p₁ = ⟨ψ|X⊗1|ψ⟩,
/// zero-probability branches omitted.
pub fn measure_on_a<T: Real>(
    state: &StateVector<T>,
    x: &Projector<T>,
) -> Result<BranchEnsemble<T>> {
    let shape = state.shape();
    if x.dim() != shape.dim_a() {
        return Err(Error::UnsupportedDimension {
            expected: shape.dim_a(),
            found: x.dim(),
        });
    }
    let hit = apply_on_a(state, x);
    // (1−X)⊗1 ψ = ψ − (X⊗1)ψ, exactly.
    let miss: Vec<Complex<T>> = state
        .amps()
        .iter()
        .zip(&hit)
        .map(|(a, h)| *a - *h)
        .collect();
    let mut branches = Vec::with_capacity(2);
    if let Some(b) = branch_from_amps(shape, hit) {
        branches.push(b);
    }
    if let Some(b) = branch_from_amps(shape, miss) {
        branches.push(b);
    }
    BranchEnsemble::new(branches)
}

/// Measurement of a full observable M = Σ_r m_r·P_r given its spectral
/// family. The projectors must be pairwise orthogonal and sum to the
/// identity on H_A.
pub fn measure_spectral_on_a<T: Real>(
    state: &StateVector<T>,
    family: &[Projector<T>],
) -> Result<BranchEnsemble<T>> {
    let shape = state.shape();
    let da = shape.dim_a();
    if family.is_empty() {
        return Err(Error::Domain("empty spectral family".into()));
    }
    for p in family {
        if p.dim() != da {
            return Err(Error::UnsupportedDimension {
                expected: da,
                found: p.dim(),
            });
        }
    }
    let tol = real::<T>(PROJECTOR_TOL);
    // Completeness: Σ P_r = 1.
    for i in 0..da {
        for j in 0..da {
            let sum = family
                .iter()
                .fold(Complex::new(T::zero(), T::zero()), |acc, p| {
                    acc + p.matrix().entry(i, j)
                });
            let id = if i == j { T::one() } else { T::zero() };
            if (sum - Complex::new(id, T::zero())).norm() > tol {
                return Err(Error::NotProjector {
                    reason: "spectral family does not sum to the identity".into(),
                });
            }
        }
    }
    // Orthogonality: P_r·P_s = 0 for r ≠ s.
    for (r, pr) in family.iter().enumerate() {
        for ps in family.iter().skip(r + 1) {
            let prod = pr.matrix().mul_mat(ps.matrix());
            let worst = prod.iter().map(|e| e.norm()).fold(T::zero(), T::max);
            if worst > tol {
                return Err(Error::NotProjector {
                    reason: "spectral family is not orthogonal".into(),
                });
            }
        }
    }
    let mut branches = Vec::with_capacity(family.len());
    for p in family {
        if let Some(b) = branch_from_amps(shape, apply_on_a(state, p)) {
            branches.push(b);
        }
    }
    BranchEnsemble::new(branches)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type C64 = Complex<f64>;

    #[test]
    fn schmidt_basis_measurement_on_bell() {
        let bell = StateVector::<f64>::bell();
        let x = Projector::basis(2, 0).unwrap();
        let ens = measure_on_a(&bell, &x).unwrap();
        assert_eq!(ens.len(), 2);
        let shape = bell.shape();
        let e00 = StateVector::basis(shape, 0, 0).unwrap();
        let e11 = StateVector::basis(shape, 1, 1).unwrap();
        for b in ens.branches() {
            assert_abs_diff_eq!(b.weight, 0.5, epsilon = 1e-12);
            let o0 = crate::hilbert::overlap(&b.state, &e00).unwrap();
            let o1 = crate::hilbert::overlap(&b.state, &e11).unwrap();
            assert!(o0 > 1.0 - 1e-12 || o1 > 1.0 - 1e-12);
        }
    }

    #[test]
    fn eigenstate_measurement_leaves_a_single_branch() {
        let shape = crate::hilbert::BipartiteShape::two_qubits();
        let psi = StateVector::<f64>::basis(shape, 0, 0).unwrap();
        let x = Projector::basis(2, 0).unwrap();
        let ens = measure_on_a(&psi, &x).unwrap();
        assert_eq!(ens.len(), 1);
        assert_abs_diff_eq!(ens.branches()[0].weight, 1.0, epsilon = 1e-12);
        assert_eq!(ens.branches()[0].state.amps(), psi.amps());
    }

    #[test]
    fn plus_measurement_on_bell_gives_plus_plus_and_minus_minus() {
        let bell = StateVector::<f64>::bell();
        let ens = measure_on_a(&bell, &Projector::plus()).unwrap();
        assert_eq!(ens.len(), 2);
        let inv = 0.5; // amplitudes of |±⟩|±⟩ in the product basis
        let plus_plus = [inv, inv, inv, inv];
        let minus_minus = [inv, -inv, -inv, inv];
        for b in ens.branches() {
            assert_abs_diff_eq!(b.weight, 0.5, epsilon = 1e-12);
            let a = b.state.amps();
            let is_pp = a
                .iter()
                .zip(&plus_plus)
                .all(|(x, w)| (x - C64::new(*w, 0.0)).norm() < 1e-12);
            let is_mm = a
                .iter()
                .zip(&minus_minus)
                .all(|(x, w)| (x - C64::new(*w, 0.0)).norm() < 1e-12);
            assert!(is_pp || is_mm, "unexpected branch state {a:?}");
        }
    }

    #[test]
    fn immediate_reduced_state_is_untouched_by_measurement() {
        // Σ p_x Tr_A|ξ_x⟩⟨ξ_x| = ρ_B at the measurement time itself.
        let psi = crate::hilbert::family_psi_x(0.23).unwrap();
        let before = psi.partial_trace_b();
        for proj in [Projector::basis(2, 0).unwrap(), Projector::plus()] {
            let ens = measure_on_a(&psi, &proj).unwrap();
            let mut entries = vec![C64::new(0.0, 0.0); 4];
            for b in ens.branches() {
                let rho = b.state.partial_trace_b();
                for (i, e) in entries.iter_mut().enumerate() {
                    *e += rho.entries()[i].scale(b.weight);
                }
            }
            for (i, e) in entries.iter().enumerate() {
                assert_abs_diff_eq!((e - before.entries()[i]).norm(), 0.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn spectral_family_measurement_validates_and_branches() {
        let bell = StateVector::<f64>::bell();
        let p0 = Projector::basis(2, 0).unwrap();
        let family = [p0.clone(), p0.complement()];
        let ens = measure_spectral_on_a(&bell, &family).unwrap();
        assert_eq!(ens.len(), 2);
        assert_abs_diff_eq!(ens.total_weight(), 1.0, epsilon = 1e-12);

        // A non-orthogonal family is rejected.
        let bad = [p0.clone(), Projector::plus()];
        assert!(measure_spectral_on_a(&bell, &bad).is_err());
        // An incomplete family is rejected.
        let incomplete = [p0];
        assert!(measure_spectral_on_a(&bell, &incomplete).is_err());
    }
}
