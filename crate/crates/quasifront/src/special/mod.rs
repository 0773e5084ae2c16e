//! Exact special-function evaluators.
//!
//! | Function | Definition used here |
//! |----------|----------------------|
//! | [`airy_ai`] | Ai(z) = (1/π) ∫₀^∞ cos(zy + y³/3) dy |
//! | [`airy_ai_prime`] | d/dz Ai(z) = −(1/π) ∫₀^∞ y sin(zy + y³/3) dy |
//! | [`scorer_gi`] | Gi(z) = (1/π) ∫₀^∞ sin(zy + y³/3) dy |
//! | [`scorer_gi_prime`] | d/dz Gi(z) = (1/π) ∫₀^∞ y cos(zy + y³/3) dy |
//! | [`bessel_j`] | J_n(x) = (1/π) ∫₀^π cos(nθ − x sinθ) dθ |
//! | [`bessel_j_prime`] | dJ_n/dx = (1/π) ∫₀^π sinθ sin(nθ − x sinθ) dθ |
//! | [`lommel_s0`] | s_{0,n}(x) = ∫₀^{π/2} cos(nθ) sin(x sinθ) dθ, n even |
//! | [`lommel_s0_prime`] | d/dx s_{0,n}(x) = ∫₀^{π/2} cos(nθ) sinθ cos(x sinθ) dθ |
//!
//! The integral representations are the production evaluators. Independent
//! series / backward-recurrence paths live in [`bessel::oracle`] and
//! [`lommel::oracle`] and exist solely for cross-validation.
//!
//! All evaluators are pure functions of their arguments; they share no
//! mutable state and repeated calls return bit-identical results.

pub mod airy;
pub mod bessel;
pub mod lommel;

pub use airy::{airy_ai, airy_ai_prime, scorer_gi, scorer_gi_prime};
pub use bessel::{bessel_j, bessel_j_prime};
pub use lommel::{lommel_s0, lommel_s0_prime};

use crate::error::{Error, Result};

/// A function value paired with an absolute-error estimate from the
/// quadrature engine. `value` is never NaN on the `Ok` path; failed
/// evaluations surface as [`Error::Convergence`] carrying the partial
/// estimate instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Estimated absolute error of the numerical method, finite and ≥ 0.
    pub abs_err_est: f64,
}

impl EvalResult {
    pub(crate) fn new(value: f64, abs_err_est: f64) -> Self {
        EvalResult {
            value,
            abs_err_est: abs_err_est.max(0.0),
        }
    }
}

/// Validates the combined argument x = ct: finite and non-negative.
pub(crate) fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    if x < 0.0 {
        return Err(Error::Domain(format!(
            "argument must be non-negative, got {x}"
        )));
    }
    Ok(())
}

/// The Lommel functions are defined for even orders only.
pub(crate) fn check_even_order(n: u32) -> Result<()> {
    if n % 2 != 0 {
        return Err(Error::OddLommelOrder(n));
    }
    Ok(())
}
