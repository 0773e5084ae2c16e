//! Bessel function of the first kind, integer order.
//!
//! Production path: the cosine integral representation
//! J_n(x) = (1/π) ∫₀^π cos(nθ − x sinθ) dθ, evaluated by composite
//! Gauss–Legendre panels sized to the fastest phase (n + x) and doubled
//! until successive estimates agree.
//!
//! [`oracle`] holds the independent path (ascending series for small
//! arguments, Miller backward recurrence otherwise) used by the
//! cross-validation tests. It is not called by the production evaluator.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quad::{adaptive, QuadOutcome};
use crate::special::{check_argument, EvalResult};

const QUAD_TOL: f64 = 1e-12;
const MAX_DOUBLINGS: u32 = 7;

/// Panels for an oscillatory integrand with max phase speed `speed` over
/// an interval of length `len`: about two cycles per 24-node panel.
pub(crate) fn oscillatory_panels(speed: f64, len: f64) -> usize {
    let cycles = speed * len / (2.0 * PI);
    4 + (cycles / 2.0).ceil() as usize
}

fn finish(out: QuadOutcome<f64>, scale: f64) -> Result<EvalResult> {
    let value = out.value * scale;
    let abs_err_est = out.abs_err_est * scale;
    if !out.converged || value.is_nan() {
        return Err(Error::Convergence {
            partial: value,
            abs_err_est,
        });
    }
    Ok(EvalResult::new(value, abs_err_est))
}

/// J_n(x) for integer n ≥ 0 and x ≥ 0.
pub fn bessel_j(n: u32, x: f64) -> Result<EvalResult> {
    check_argument(x)?;
    let nf = n as f64;
    let panels = oscillatory_panels(nf + x, PI);
    let out = adaptive(
        |th: f64| (nf * th - x * th.sin()).cos(),
        0.0,
        PI,
        panels,
        QUAD_TOL,
        MAX_DOUBLINGS,
    );
    finish(out, 1.0 / PI)
}

/// dJ_n/dx by the differentiated integral representation.
pub fn bessel_j_prime(n: u32, x: f64) -> Result<EvalResult> {
    check_argument(x)?;
    let nf = n as f64;
    let panels = oscillatory_panels(nf + x, PI);
    let out = adaptive(
        |th: f64| th.sin() * (nf * th - x * th.sin()).sin(),
        0.0,
        PI,
        panels,
        QUAD_TOL,
        MAX_DOUBLINGS,
    );
    finish(out, 1.0 / PI)
}

/// Independent evaluation paths, used only for cross-validation.
pub mod oracle {
    /// J_n(x) by ascending series (x < 2) or Miller's backward recurrence.
    pub fn bessel_j_series(n: u32, x: f64) -> f64 {
        assert!(x >= 0.0 && x.is_finite());
        if x == 0.0 {
            return if n == 0 { 1.0 } else { 0.0 };
        }
        if x < 2.0 {
            ascending_series(n, x)
        } else {
            miller(n, x)
        }
    }

    /// dJ_n/dx from the recurrence J′_n = (J_{n−1} − J_{n+1})/2.
    pub fn bessel_j_prime_series(n: u32, x: f64) -> f64 {
        if n == 0 {
            -bessel_j_series(1, x)
        } else {
            0.5 * (bessel_j_series(n - 1, x) - bessel_j_series(n + 1, x))
        }
    }

    /// Σ_m (−1)^m (x/2)^{n+2m} / (m! (n+m)!) with no cancellation for x < 2.
    fn ascending_series(n: u32, x: f64) -> f64 {
        let half = 0.5 * x;
        // (x/2)^n / n!, built incrementally to dodge overflow at large n.
        let mut term = 1.0;
        for k in 1..=n {
            term *= half / k as f64;
            if term == 0.0 {
                return 0.0; // underflow: J_n(x) far below f64 range
            }
        }
        let mut sum = term;
        let mut m = 0u32;
        loop {
            m += 1;
            term *= -(half * half) / (m as f64 * (n + m) as f64);
            let prev = sum;
            sum += term;
            if sum == prev || m > 200 {
                return sum;
            }
        }
    }

    /// Miller's algorithm: unnormalised backward recurrence from above the
    /// turning point, normalised by J_0 + 2 J_2 + 2 J_4 + … = 1.
    fn miller(n: u32, x: f64) -> f64 {
        // Start high enough that J_start(x)/J_n(x) is far below 1e-18:
        // the order must clear the turning point by many Airy widths.
        let start = (n as f64).max(x).ceil() as u32 + 20 + (17.0 * x.cbrt()).ceil() as u32;
        let mut jp1 = 0.0_f64; // J_{m+1}
        let mut j = 1e-300_f64; // J_m (arbitrary scale)
        let mut norm = 0.0_f64;
        let mut target = 0.0_f64;
        let mut captured = false;
        for m in (0..=start).rev() {
            if m == n {
                target = j;
                captured = true;
            }
            if m % 2 == 0 {
                norm += if m == 0 { j } else { 2.0 * j };
            }
            if m > 0 {
                let jm1 = (2.0 * m as f64 / x) * j - jp1;
                jp1 = j;
                j = jm1;
                if j.abs() > 1e250 {
                    let s = 1e-250;
                    j *= s;
                    jp1 *= s;
                    norm *= s;
                    if captured {
                        target *= s;
                    }
                }
            }
        }
        target / norm
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_origin() {
        assert_eq!(bessel_j(0, 0.0).unwrap().value, 1.0);
        for n in [1u32, 2, 7, 30] {
            assert!(bessel_j(n, 0.0).unwrap().value.abs() < 1e-14);
        }
    }

    #[test]
    fn j1_of_one() {
        let r = bessel_j(1, 1.0).unwrap();
        assert!((r.value - 0.4400505857449335).abs() < 1e-10);
    }

    #[test]
    fn prime_at_origin() {
        assert!(bessel_j_prime(0, 0.0).unwrap().value.abs() < 1e-14);
        // J'_1(0) = 1/2
        assert!((bessel_j_prime(1, 1e-9).unwrap().value - 0.5).abs() < 1e-8);
    }

    #[test]
    fn three_term_recurrence() {
        let (n, x) = (10u32, 20.0);
        let jm = bessel_j(n - 1, x).unwrap().value;
        let jp = bessel_j(n + 1, x).unwrap().value;
        let j = bessel_j(n, x).unwrap().value;
        let residual = jm + jp - (2.0 * n as f64 / x) * j;
        assert!(residual.abs() <= 1e-9, "residual {residual:e}");
    }

    #[test]
    fn integral_matches_oracle_spot() {
        for &(n, x) in &[(0u32, 0.5), (1, 1.0), (6, 10.0), (20, 20.0), (50, 100.0)] {
            let int = bessel_j(n, x).unwrap().value;
            let ser = oracle::bessel_j_series(n, x);
            assert!((int - ser).abs() < 1e-10, "J_{n}({x}): {int} vs {ser}");
        }
    }

    #[test]
    fn prime_matches_finite_difference() {
        let h = 1e-5;
        let (n, x) = (10u32, 12.0);
        let fd = (bessel_j(n, x + h).unwrap().value - bessel_j(n, x - h).unwrap().value) / (2.0 * h);
        let an = bessel_j_prime(n, x).unwrap().value;
        assert!((fd - an).abs() / an.abs() <= 1e-6);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_j(3, -1.0).is_err());
        assert!(bessel_j(3, f64::NAN).is_err());
    }
}
