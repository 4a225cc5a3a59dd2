//! The basis-distinguishing self-potential K(ψ).
//!
//! K acts componentwise in the preferred product basis:
//! K(ψ)_jk = f_jk(|⟨ψ|A_jk|jk⟩|)·α_jk, with A_jk = 1 for every built-in kind,
//! in which case the argument reduces to |α_jk|.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::float::{real, Real};
use crate::hilbert::{BipartiteShape, HermitianMatrix};

/// Lower clamp on the argument of the logarithmic nonlinearity.
///
/// f multiplies α_jk, so the product tends to zero as |α_jk| → 0 anyway; the
/// clamp only keeps intermediates finite. This deviates from the exact
/// logarithmic form below the clamp scale.
pub const LOG_CLAMP: f64 = 1e-15;

/// Per-basis-element scalar function for custom nonlinearities.
pub type IndexFn<T> = Arc<dyn Fn(usize, usize, T) -> T + Send + Sync>;

/// Which self-potential drives the dynamics.
#[derive(Clone)]
pub enum NonlinearitySpec<T: Real> {
    /// f_jk(x) = g·x², the discrete Gross–Pitaevskii form.
    GrossPitaevskii { g: T },
    /// f_jk(x) = g·log(x), the discrete logarithmic form.
    Logarithmic { g: T },
    /// Arbitrary per-index functions, optionally with per-index field
    /// operators A_jk on the full product space.
    Custom {
        f: IndexFn<T>,
        field_ops: Option<Vec<HermitianMatrix<T>>>,
    },
}

impl<T: Real> NonlinearitySpec<T> {
    /// Gross–Pitaevskii with coupling `g`; `g = 0` is the linear limit.
    pub fn gross_pitaevskii(g: T) -> Self {
        Self::GrossPitaevskii { g }
    }

    pub fn logarithmic(g: T) -> Self {
        Self::Logarithmic { g }
    }

    pub fn custom(f: IndexFn<T>) -> Self {
        Self::Custom {
            f,
            field_ops: None,
        }
    }

    /// Custom nonlinearity with one field operator per flat basis index.
    pub fn custom_with_ops(f: IndexFn<T>, field_ops: Vec<HermitianMatrix<T>>) -> Self {
        Self::Custom {
            f,
            field_ops: Some(field_ops),
        }
    }

    /// Evaluates f_jk(x).
    #[inline]
    pub fn eval(&self, j: usize, k: usize, x: T) -> T {
        match self {
            Self::GrossPitaevskii { g } => *g * x * x,
            Self::Logarithmic { g } => *g * x.max(real(LOG_CLAMP)).ln(),
            Self::Custom { f, .. } => f(j, k, x),
        }
    }

    /// The field operators A_jk, if this spec carries non-identity ones.
    pub fn field_ops(&self) -> Option<&[HermitianMatrix<T>]> {
        match self {
            Self::Custom {
                field_ops: Some(ops),
                ..
            } => Some(ops),
            _ => None,
        }
    }

    /// True when evaluation may return a non-finite value and must be checked.
    pub(crate) fn needs_finite_check(&self) -> bool {
        matches!(self, Self::Custom { .. })
    }

    /// Checks that any field operators fit the given shape.
    pub fn check_shape(&self, shape: &BipartiteShape) -> Result<()> {
        if let Some(ops) = self.field_ops() {
            if ops.len() != shape.total() {
                return Err(Error::Domain(format!(
                    "{} field operators supplied for a space of dimension {}",
                    ops.len(),
                    shape.total()
                )));
            }
            for (i, op) in ops.iter().enumerate() {
                if op.dim() != shape.total() {
                    return Err(Error::UnsupportedDimension {
                        expected: shape.total(),
                        found: ops[i].dim(),
                    });
                }
            }
        }
        Ok(())
    }
}

impl<T: Real> fmt::Debug for NonlinearitySpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GrossPitaevskii { g } => write!(f, "GrossPitaevskii {{ g: {g} }}"),
            Self::Logarithmic { g } => write!(f, "Logarithmic {{ g: {g} }}"),
            Self::Custom { field_ops, .. } => write!(
                f,
                "Custom {{ f: <fn>, field_ops: {} }}",
                if field_ops.is_some() { "Some(..)" } else { "None" }
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_kinds_evaluate_as_documented() {
        let gp = NonlinearitySpec::gross_pitaevskii(2.0);
        assert_eq!(gp.eval(0, 0, 0.5), 0.5);
        let log = NonlinearitySpec::logarithmic(1.0);
        assert_eq!(log.eval(1, 1, 1.0), 0.0);
        // Clamp keeps the log finite at zero argument.
        assert!(log.eval(0, 1, 0.0).is_finite());
    }

    #[test]
    fn custom_function_is_called_with_indices() {
        let f: IndexFn<f64> = Arc::new(|j, k, x| (j as f64) + 10.0 * (k as f64) + x);
        let nl = NonlinearitySpec::custom(f);
        assert_eq!(nl.eval(1, 2, 0.25), 21.25);
    }
}
