//! Pure states on a bipartite product basis.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::density::DensityMatrix;
use crate::hilbert::shape::BipartiteShape;

/// Tolerance on |Σ|α|² − 1| accepted at construction.
pub const NORM_TOL: f64 = 1e-9;

/// A normalized pure state Σ α_jk |jk⟩ stored as a flat amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Real> {
    shape: BipartiteShape,
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// Wraps an amplitude vector, requiring Σ|α|² = 1 within [`NORM_TOL`].
    pub fn new(shape: BipartiteShape, amps: Vec<Complex<T>>) -> Result<Self> {
        shape.check_len(amps.len())?;
        let norm_sq = norm_sq(&amps);
        if (norm_sq - T::one()).abs() > real(NORM_TOL) {
            return Err(Error::NotNormalized {
                norm_sq: norm_sq.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { shape, amps })
    }

    /// Wraps an amplitude vector, rescaling it to unit norm.
    ///
    /// Fails only for the (near-)zero vector.
    pub fn normalized(shape: BipartiteShape, amps: Vec<Complex<T>>) -> Result<Self> {
        shape.check_len(amps.len())?;
        let norm_sq = norm_sq(&amps);
        if norm_sq < real(1e-300) {
            return Err(Error::NotNormalized {
                norm_sq: norm_sq.to_f64().unwrap_or(f64::NAN),
            });
        }
        let scale = norm_sq.sqrt().recip();
        let amps = amps.into_iter().map(|a| a.scale(scale)).collect();
        Ok(Self { shape, amps })
    }

    /// Wraps amplitudes without any norm check.
    ///
    /// Used for integrator output, where norm drift is a measured diagnostic
    /// rather than a construction error.
    pub(crate) fn from_raw(shape: BipartiteShape, amps: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(shape.total(), amps.len());
        Self { shape, amps }
    }

    /// Basis state |jk⟩.
    pub fn basis(shape: BipartiteShape, j: usize, k: usize) -> Result<Self> {
        if j >= shape.dim_a() || k >= shape.dim_b() {
            return Err(Error::Domain(format!(
                "basis index ({j},{k}) outside shape {}x{}",
                shape.dim_a(),
                shape.dim_b()
            )));
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); shape.total()];
        amps[shape.flat(j, k)] = Complex::new(T::one(), T::zero());
        Ok(Self { shape, amps })
    }

    /// The two-qubit Bell state (|00⟩ + |11⟩)/√2.
    pub fn bell() -> Self {
        family_psi_x(T::zero()).expect("x = 0 is in range")
    }

    pub fn shape(&self) -> BipartiteShape {
        self.shape
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    /// Amplitude α_jk.
    pub fn amp(&self, j: usize, k: usize) -> Complex<T> {
        self.amps[self.shape.flat(j, k)]
    }

    /// √(Σ|α|²).
    pub fn norm(&self) -> T {
        norm_sq(&self.amps).sqrt()
    }

    /// Copy rescaled to unit norm.
    pub fn renormalized(&self) -> Result<Self> {
        Self::normalized(self.shape, self.amps.clone())
    }

    /// Inner product ⟨self|other⟩ (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        self.shape.check_same(&other.shape)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            }))
    }

    /// Bob's reduced state: ⟨k|ρ_B|k'⟩ = Σ_j α_jk · conj(α_jk').
    pub fn partial_trace_b(&self) -> DensityMatrix<T> {
        let (da, db) = (self.shape.dim_a(), self.shape.dim_b());
        let mut entries = vec![Complex::new(T::zero(), T::zero()); db * db];
        for k in 0..db {
            for kp in k..db {
                let mut sum = Complex::new(T::zero(), T::zero());
                for j in 0..da {
                    sum = sum + self.amps[self.shape.flat(j, k)]
                        * self.amps[self.shape.flat(j, kp)].conj();
                }
                entries[k * db + kp] = sum;
                entries[kp * db + k] = sum.conj();
            }
        }
        DensityMatrix::from_entries_unchecked(db, entries)
    }

    /// Alice's reduced state: ⟨j|ρ_A|j'⟩ = Σ_k α_jk · conj(α_j'k).
    pub fn partial_trace_a(&self) -> DensityMatrix<T> {
        let (da, db) = (self.shape.dim_a(), self.shape.dim_b());
        let mut entries = vec![Complex::new(T::zero(), T::zero()); da * da];
        for j in 0..da {
            for jp in j..da {
                let mut sum = Complex::new(T::zero(), T::zero());
                for k in 0..db {
                    sum = sum + self.amps[self.shape.flat(j, k)]
                        * self.amps[self.shape.flat(jp, k)].conj();
                }
                entries[j * da + jp] = sum;
                entries[jp * da + j] = sum.conj();
            }
        }
        DensityMatrix::from_entries_unchecked(da, entries)
    }
}

#[inline]
fn norm_sq<T: Real>(amps: &[Complex<T>]) -> T {
    amps.iter().map(|a| a.norm_sqr()).fold(T::zero(), |s, x| s + x)
}

/// |⟨a|b⟩| for two states on the same shape.
pub fn overlap<T: Real>(a: &StateVector<T>, b: &StateVector<T>) -> Result<T> {
    Ok(a.inner(b)?.norm())
}

/// The one-parameter family ((1+x)|00⟩ + (1−x)|11⟩) / √(2(1+x²)), x ∈ [0, 1].
///
/// Interpolates from the Bell state (x = 0) down to the separable |00⟩
/// (x = 1); its concurrence is (1−x²)/(1+x²).
pub fn family_psi_x<T: Real>(x: T) -> Result<StateVector<T>> {
    if x < T::zero() || x > T::one() {
        return Err(Error::Domain(format!(
            "family parameter x = {x} outside [0, 1]"
        )));
    }
    let shape = BipartiteShape::two_qubits();
    let norm = (real::<T>(2.0) * (T::one() + x * x)).sqrt();
    let mut amps = vec![Complex::new(T::zero(), T::zero()); 4];
    amps[shape.flat(0, 0)] = Complex::new((T::one() + x) / norm, T::zero());
    amps[shape.flat(1, 1)] = Complex::new((T::one() - x) / norm, T::zero());
    StateVector::new(shape, amps)
}

/// The separable state |0⟩ ⊗ ((1−ε)|0⟩ + ε|1⟩), normalized.
///
/// Partner of |00⟩ in the separable-pair concurrence experiment.
pub fn sep_eps<T: Real>(eps: T) -> Result<StateVector<T>> {
    if eps < T::zero() || eps > T::one() {
        return Err(Error::Domain(format!("ε = {eps} outside [0, 1]")));
    }
    let shape = BipartiteShape::two_qubits();
    let mut amps = vec![Complex::new(T::zero(), T::zero()); 4];
    amps[shape.flat(0, 0)] = Complex::new(T::one() - eps, T::zero());
    amps[shape.flat(0, 1)] = Complex::new(eps, T::zero());
    StateVector::normalized(shape, amps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type C64 = Complex<f64>;

    #[test]
    fn construction_enforces_norm() {
        let shape = BipartiteShape::two_qubits();
        let bad = vec![C64::new(1.0, 0.0); 4];
        assert!(matches!(
            StateVector::new(shape, bad.clone()),
            Err(Error::NotNormalized { .. })
        ));
        let fixed = StateVector::normalized(shape, bad).unwrap();
        assert_abs_diff_eq!(fixed.norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn length_mismatch_is_a_shape_error() {
        let shape = BipartiteShape::two_qubits();
        let r = StateVector::new(shape, vec![C64::new(1.0, 0.0); 3]);
        assert!(matches!(r, Err(Error::LengthMismatch { len: 3, .. })));
    }

    #[test]
    fn bell_partial_trace_is_maximally_mixed() {
        let rho = StateVector::<f64>::bell().partial_trace_b();
        assert_abs_diff_eq!(rho.entry(0, 0).re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entry(1, 1).re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entry(0, 1).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn product_state_partial_trace_is_pure() {
        let shape = BipartiteShape::two_qubits();
        let psi = StateVector::<f64>::basis(shape, 0, 0).unwrap();
        let rho = psi.partial_trace_b();
        assert_abs_diff_eq!(rho.entry(0, 0).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entry(1, 1).norm(), 0.0, epsilon = 1e-15);
    }

    // Dense outer-product oracle: build ρ = |ψ⟩⟨ψ| in full and contract the
    // A index explicitly, independent of the partial_trace_b implementation.
    fn partial_trace_b_oracle(psi: &StateVector<f64>) -> Vec<C64> {
        let (da, db) = (psi.shape().dim_a(), psi.shape().dim_b());
        let n = da * db;
        let mut full = vec![C64::new(0.0, 0.0); n * n];
        for r in 0..n {
            for c in 0..n {
                full[r * n + c] = psi.amps()[r] * psi.amps()[c].conj();
            }
        }
        let mut out = vec![C64::new(0.0, 0.0); db * db];
        for k in 0..db {
            for kp in 0..db {
                for j in 0..da {
                    let r = j * db + k;
                    let c = j * db + kp;
                    out[k * db + kp] += full[r * n + c];
                }
            }
        }
        out
    }

    #[test]
    fn family_state_partial_trace_matches_outer_product_oracle() {
        let psi = family_psi_x(0.5).unwrap();
        let oracle = partial_trace_b_oracle(&psi);
        let rho = psi.partial_trace_b();
        for k in 0..2 {
            for kp in 0..2 {
                let d = (rho.entry(k, kp) - oracle[k * 2 + kp]).norm();
                assert!(d < 1e-15, "entry ({k},{kp}) differs by {d}");
            }
        }
        // (1±x)²/(2(1+x²)) at x = 1/2.
        assert_abs_diff_eq!(rho.entry(0, 0).re, 0.9, epsilon = 1e-12);
        assert_abs_diff_eq!(rho.entry(1, 1).re, 0.1, epsilon = 1e-12);
    }

    #[test]
    fn overlap_examples() {
        let bell = StateVector::<f64>::bell();
        assert_abs_diff_eq!(overlap(&bell, &bell).unwrap(), 1.0, epsilon = 1e-15);

        let shape = BipartiteShape::two_qubits();
        let e00 = StateVector::<f64>::basis(shape, 0, 0).unwrap();
        let e11 = StateVector::<f64>::basis(shape, 1, 1).unwrap();
        assert_abs_diff_eq!(overlap(&e00, &e11).unwrap(), 0.0, epsilon = 1e-15);

        // ⟨Ψ_0|Ψ_x⟩ = 1/√(1+x²); x solved numerically for overlap 0.999.
        let x = 0.044_754_932_744_962_11;
        let partner = family_psi_x(x).unwrap();
        assert_abs_diff_eq!(overlap(&bell, &partner).unwrap(), 0.999, epsilon = 1e-12);
    }

    #[test]
    fn overlap_requires_same_shape() {
        let a = StateVector::<f64>::bell();
        let shape = BipartiteShape::new(2, 3).unwrap();
        let b = StateVector::<f64>::basis(shape, 0, 0).unwrap();
        assert!(matches!(overlap(&a, &b), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn family_endpoints() {
        let bell = family_psi_x::<f64>(0.0).unwrap();
        assert_abs_diff_eq!(bell.amp(0, 0).re, 1.0 / 2f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(bell.amp(1, 1).re, 1.0 / 2f64.sqrt(), epsilon = 1e-15);

        let sep = family_psi_x::<f64>(1.0).unwrap();
        assert_abs_diff_eq!(sep.amp(0, 0).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sep.amp(1, 1).re, 0.0, epsilon = 1e-15);

        assert!(family_psi_x::<f64>(-0.1).is_err());
        assert!(family_psi_x::<f64>(1.1).is_err());
    }

    #[test]
    fn family_seed_distance_for_lyapunov_runs() {
        // x = 5e-5 puts the reduced state 1e-4 away from the Bloch origin.
        let psi = family_psi_x(5e-5).unwrap();
        let rho = psi.partial_trace_b();
        let n_z = 2.0 * rho.entry(0, 0).re - 1.0;
        assert_abs_diff_eq!(n_z, 1e-4, epsilon = 1e-8);
    }

    #[test]
    fn sep_eps_is_normalized_product_state() {
        let phi = sep_eps(0.001).unwrap();
        assert_abs_diff_eq!(phi.norm(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(phi.amp(1, 0).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(phi.amp(1, 1).norm(), 0.0, epsilon = 1e-15);
    }
}
