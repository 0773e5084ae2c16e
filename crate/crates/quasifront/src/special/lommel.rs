//! Lommel function s_{0,n} of even order.
//!
//! Production path: the sine integral representation
//! s_{0,n}(x) = ∫₀^{π/2} cos(nθ) sin(x sinθ) dθ. Integrating by parts
//! twice shows this satisfies the inhomogeneous Bessel equation
//! x²w″ + xw′ + (x² − n²)w = x for even n, which is what the
//! cross-validation tests check. Odd n is rejected: the boundary terms of
//! that identity no longer vanish and the function is not defined there.
//!
//! [`oracle`] holds the independent ascending series
//! s_{0,n}(x) = Σ_m (−1)^m x^{2m+1} / Π_{j=0..m} [(2j+1)² − n²],
//! usable for moderate x before cancellation sets in.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::quad::adaptive;
use crate::special::bessel::oscillatory_panels;
use crate::special::{check_argument, check_even_order, EvalResult};

const QUAD_TOL: f64 = 1e-12;
const MAX_DOUBLINGS: u32 = 7;

/// s_{0,n}(x) for even n ≥ 0 and x ≥ 0.
pub fn lommel_s0(n: u32, x: f64) -> Result<EvalResult> {
    check_even_order(n)?;
    check_argument(x)?;
    let nf = n as f64;
    let panels = oscillatory_panels(nf + x, FRAC_PI_2);
    let out = adaptive(
        |th: f64| (nf * th).cos() * (x * th.sin()).sin(),
        0.0,
        FRAC_PI_2,
        panels,
        QUAD_TOL,
        MAX_DOUBLINGS,
    );
    if !out.converged || out.value.is_nan() {
        return Err(Error::Convergence {
            partial: out.value,
            abs_err_est: out.abs_err_est,
        });
    }
    Ok(EvalResult::new(out.value, out.abs_err_est))
}

/// d/dx s_{0,n}(x) by the differentiated integral representation.
pub fn lommel_s0_prime(n: u32, x: f64) -> Result<EvalResult> {
    check_even_order(n)?;
    check_argument(x)?;
    let nf = n as f64;
    let panels = oscillatory_panels(nf + x, FRAC_PI_2);
    let out = adaptive(
        |th: f64| (nf * th).cos() * th.sin() * (x * th.sin()).cos(),
        0.0,
        FRAC_PI_2,
        panels,
        QUAD_TOL,
        MAX_DOUBLINGS,
    );
    if !out.converged || out.value.is_nan() {
        return Err(Error::Convergence {
            partial: out.value,
            abs_err_est: out.abs_err_est,
        });
    }
    Ok(EvalResult::new(out.value, out.abs_err_est))
}

/// Independent series path, used only for cross-validation.
pub mod oracle {
    /// Ascending series of s_{0,n}. Accurate to ~1e-8 absolute for
    /// x ≲ 25; cancellation grows with x beyond that.
    pub fn lommel_s0_series(n: u32, x: f64) -> f64 {
        assert!(n % 2 == 0, "series defined for even n");
        let n2 = (n as f64) * (n as f64);
        let mut term = x / (1.0 - n2);
        let mut sum = term;
        let mut m = 0u32;
        loop {
            m += 1;
            let odd = (2 * m + 1) as f64;
            term *= -(x * x) / (odd * odd - n2);
            let prev = sum;
            sum += term;
            if (sum == prev && m as f64 > x) || m > 400 {
                return sum;
            }
        }
    }

    #[cfg(test)]
    mod tests {
        // s_{0,0}(x) = (π/2)·H_0(x); H_0(1) ≈ 0.5686566 (A&S table 12.1).
        #[test]
        fn struve_connection_at_order_zero() {
            let s = super::lommel_s0_series(0, 1.0);
            let expected = std::f64::consts::FRAC_PI_2 * 0.5686566;
            assert!((s - expected).abs() < 1e-6, "{s} vs {expected}");
        }

        #[test]
        fn leading_behaviour() {
            // s_{0,n}(x) = x/(1−n²) + O(x³)
            let s = super::lommel_s0_series(6, 1e-4);
            assert!((s - 1e-4 / (1.0 - 36.0)).abs() < 1e-14);
        }
    }
}
