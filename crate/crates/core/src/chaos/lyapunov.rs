//! Maximal-Lyapunov-exponent estimation by zero-intercept regression.
//!
//! Over the exponential-growth window the log-ratio y(t) = log(D(t)/D(0)) is
//! fitted with y = λ·t (no intercept): λ = Σtᵢyᵢ / Σtᵢ². The scatter of the
//! pointwise slopes {yᵢ/tᵢ} gives the coefficient of variation CV = σ/μ, and
//! refitting with the window length changed by ±5% gives the quoted
//! uncertainties δλ, δCV.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::float::{real, Real};

use super::distance::DistanceSeries;

/// Minimum number of regression points accepted in a window.
pub const MIN_WINDOW_POINTS: usize = 8;

/// A fitted exponent with its regression diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LyapunovEstimate<T> {
    /// Fitted slope of log(D(t)/D(0)), in inverse time units.
    pub lambda: T,
    /// Coefficient of variation σ/μ of the pointwise slopes y_i/t_i.
    pub cv: T,
    /// The regression window (0, t_max].
    pub window: (T, T),
    /// Mean |Δλ| under a ±5% change of the window length.
    pub delta_lambda: T,
    /// Mean |ΔCV| under the same window perturbation.
    pub delta_cv: T,
}

struct Fit<T> {
    lambda: T,
    cv: T,
}

fn fit_window<T: Real>(series: &DistanceSeries<T>, t_max: T) -> Result<Fit<T>> {
    let d0 = series.values[0];
    let window_tol = T::one() + real(1e-9);
    let mut sum_ty = T::zero();
    let mut sum_tt = T::zero();
    let mut slopes = Vec::new();
    for (&t, &v) in series.times.iter().zip(&series.values).skip(1) {
        if t <= T::zero() || t > t_max * window_tol {
            continue;
        }
        let y = (v / d0).ln();
        if !y.is_finite() {
            return Err(Error::Domain(format!(
                "log-distance is not finite at t = {t} (D = {v})"
            )));
        }
        sum_ty += t * y;
        sum_tt += t * t;
        slopes.push(y / t);
    }
    if slopes.len() < MIN_WINDOW_POINTS {
        return Err(Error::InsufficientData {
            have: slopes.len(),
            need: MIN_WINDOW_POINTS,
        });
    }
    let lambda = sum_ty / sum_tt;
    let n = T::from_usize(slopes.len()).expect("count fits scalar");
    let mean = slopes.iter().copied().fold(T::zero(), |s, x| s + x) / n;
    let var = slopes
        .iter()
        .map(|&s| (s - mean) * (s - mean))
        .fold(T::zero(), |s, x| s + x)
        / n;
    let sigma = var.sqrt();
    let cv = if sigma == T::zero() { T::zero() } else { sigma / mean };
    Ok(Fit { lambda, cv })
}

/// Fits λ over (0, t_max].
///
/// The series must start strictly positive — apply
/// [`DistanceSeries::shifted`] first when D(0) = 0 (coincident starting
/// points, as after a measurement at t = 0).
pub fn estimate_lyapunov<T: Real>(
    series: &DistanceSeries<T>,
    t_max: T,
) -> Result<LyapunovEstimate<T>> {
    if series.is_empty() || series.values[0] <= T::zero() {
        return Err(Error::Precondition(
            "D(0) must be positive; apply an epsilon shift to a series starting at zero".into(),
        ));
    }
    if t_max <= T::zero() {
        return Err(Error::Domain(format!("t_max = {t_max} must be positive")));
    }
    let base = fit_window(series, t_max)?;
    let five_percent = real::<T>(0.05);
    let mut dl = T::zero();
    let mut dc = T::zero();
    let mut n_perturbed = T::zero();
    for sign in [T::one(), -T::one()] {
        let perturbed_t = t_max * (T::one() + sign * five_percent);
        if let Ok(fit) = fit_window(series, perturbed_t) {
            dl += (fit.lambda - base.lambda).abs();
            dc += (fit.cv - base.cv).abs();
            n_perturbed += T::one();
        }
    }
    let (delta_lambda, delta_cv) = if n_perturbed > T::zero() {
        (dl / n_perturbed, dc / n_perturbed)
    } else {
        (T::zero(), T::zero())
    };
    Ok(LyapunovEstimate {
        lambda: base.lambda,
        cv: base.cv,
        window: (T::zero(), t_max),
        delta_lambda,
        delta_cv,
    })
}

/// Suggests the window end maximizing the zero-intercept R² =
/// (Σty)²/(Σt²·Σy²), the automatic stand-in for the by-eye choice of the
/// exponential-growth range.
pub fn suggest_window<T: Real>(series: &DistanceSeries<T>) -> Option<T> {
    if series.is_empty() || series.values[0] <= T::zero() {
        return None;
    }
    let d0 = series.values[0];
    let mut sum_ty = T::zero();
    let mut sum_tt = T::zero();
    let mut sum_yy = T::zero();
    let mut count = 0usize;
    let mut best: Option<(T, T)> = None; // (r², t_end)
    for (&t, &v) in series.times.iter().zip(&series.values).skip(1) {
        if t <= T::zero() {
            continue;
        }
        let y = (v / d0).ln();
        if !y.is_finite() {
            break;
        }
        sum_ty += t * y;
        sum_tt += t * t;
        sum_yy += y * y;
        count += 1;
        if count < MIN_WINDOW_POINTS || sum_yy == T::zero() {
            continue;
        }
        let r2 = (sum_ty * sum_ty) / (sum_tt * sum_yy);
        if best.map(|(b, _)| r2 > b).unwrap_or(true) {
            best = Some((r2, t));
        }
    }
    best.map(|(_, t)| t)
}
