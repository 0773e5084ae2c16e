//! Airy Ai and Scorer Gi by rotated-contour quadrature.
//!
//! Both functions (and their derivatives) are slices of one complex
//! integral,
//!
//! ```text
//! I_p(z) = ∫₀^∞ y^p exp(i(zy + y³/3)) dy,        p ∈ {0, 1},
//!
//! π Ai(z)  = Re I₀     π Ai′(z) = −Im I₁
//! π Gi(z)  = Im I₀     π Gi′(z) =  Re I₁
//! ```
//!
//! On the real axis the integrand oscillates forever; the integral is only
//! conditionally convergent. The contour is therefore deformed into the
//! upper half plane where exp(iy³/3) decays:
//!
//! * `z ≥ 0`: up the imaginary axis to the saddle point y = i√z (on this
//!   segment the integrand is real-exponentially decaying and contributes
//!   only to Im I_p), then along the ray y = i√z + ρ·e^{iπ/6}.
//! * `z < 0`: along the real axis to the stationary point y = √(−z)
//!   (bounded oscillation, resolved by panels sized to the phase), then
//!   along the ray y = √(−z) + ρ·e^{iπ/6}.
//!
//! The angle π/6 turns the cubic term into pure decay (i·(ρe^{iπ/6})³ =
//! −ρ³), and starting the ray at the saddle removes the linear growth that
//! would otherwise wreck the z < 0 case. The ray is truncated where its
//! decay envelope falls below e^{-48} of its starting magnitude.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_6, PI};

use crate::error::{Error, Result};
use crate::quad::{adaptive, QuadOutcome};
use crate::special::EvalResult;

/// Per-piece quadrature tolerance (absolute, before the 1/π factor).
const PIECE_TOL: f64 = 1e-14;
/// ln of the envelope truncation: exp(-48) ≈ 1.4e-21.
const LOG_CUTOFF: f64 = 48.0;
const MAX_DOUBLINGS: u32 = 9;

/// exp(i(zy + y³/3)) · y^p evaluated in complex arithmetic.
#[inline]
fn integrand(z: f64, p: u32, y: Complex64) -> Complex64 {
    let phase = Complex64::i() * (z * y + y * y * y / 3.0);
    let e = phase.exp();
    if p == 0 {
        e
    } else {
        y * e
    }
}

/// Solve c2·L² + L³/3 = target for L > 0 by bisection.
fn ray_length(c2: f64, target: f64) -> f64 {
    let g = |l: f64| c2 * l * l + l * l * l / 3.0 - target;
    let mut lo = 0.0;
    let mut hi = 1.0;
    while g(hi) < 0.0 {
        hi *= 2.0;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

struct Piece {
    value: Complex64,
    abs_err_est: f64,
    converged: bool,
}

/// Integrate y^p e^{iφ(y)} along start + ρ·dir for ρ ∈ [0, len].
fn line_piece(
    z: f64,
    p: u32,
    start: Complex64,
    dir: Complex64,
    len: f64,
    initial_panels: usize,
) -> Piece {
    let out: QuadOutcome<Complex64> = adaptive(
        |rho: f64| integrand(z, p, start + rho * dir) * dir,
        0.0,
        len,
        initial_panels,
        PIECE_TOL,
        MAX_DOUBLINGS,
    );
    Piece {
        value: out.value,
        abs_err_est: out.abs_err_est,
        converged: out.converged,
    }
}

/// I_p(z) with an absolute error estimate. The bool is the convergence flag.
fn contour_integral(z: f64, p: u32) -> Result<(Complex64, f64, bool)> {
    if !z.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {z}")));
    }
    let ray_dir = Complex64::from_polar(1.0, FRAC_PI_6);
    let root = z.abs().sqrt();

    let (seg, ray_start, quad_coef) = if z >= 0.0 {
        // Vertical segment to the saddle i√z: integrand e^{σ³/3 − zσ}·i.
        // Steepest slope of the exponent is z at σ = 0.
        let panels = 2 + (root * z / 30.0).ceil() as usize;
        let seg = line_piece(z, p, Complex64::new(0.0, 0.0), Complex64::i(), root, panels);
        (seg, Complex64::new(0.0, root), root)
    } else {
        // Real segment to the stationary point √(−z): unit-modulus
        // oscillation, total phase (2/3)|z|^{3/2}.
        let cycles = root.powi(3) / (3.0 * PI);
        let panels = 4 + (cycles / 2.0).ceil() as usize;
        let seg = line_piece(
            z,
            p,
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            root,
            panels,
        );
        // Quadratic exponent coefficient along the ray has magnitude √(−z)·(√3/2).
        (seg, Complex64::new(root, 0.0), root * 0.75_f64.sqrt())
    };

    let len = ray_length(quad_coef, LOG_CUTOFF + 3.0 * p as f64);
    // Decay plus oscillation along the ray are both bounded by the cutoff
    // budget, so a handful of panels suffices before doubling takes over.
    let ray_cycles = (quad_coef * len * len + len.powi(3) / 3.0) / (2.0 * PI);
    let ray_panels = 4 + (ray_cycles / 2.0).ceil() as usize;
    let ray = line_piece(z, p, ray_start, ray_dir, len, ray_panels);

    let value = seg.value + ray.value;
    let err = seg.abs_err_est + ray.abs_err_est + 1e-20;
    Ok((value, err, seg.converged && ray.converged))
}

fn finish(part: f64, err: f64, converged: bool) -> Result<EvalResult> {
    let value = part / PI;
    let abs_err_est = err / PI;
    if !converged || value.is_nan() {
        return Err(Error::Convergence {
            partial: value,
            abs_err_est,
        });
    }
    Ok(EvalResult::new(value, abs_err_est))
}

/// Airy function Ai(z).
pub fn airy_ai(z: f64) -> Result<EvalResult> {
    let (i0, err, ok) = contour_integral(z, 0)?;
    finish(i0.re, err, ok)
}

/// Derivative Ai′(z).
pub fn airy_ai_prime(z: f64) -> Result<EvalResult> {
    let (i1, err, ok) = contour_integral(z, 1)?;
    finish(-i1.im, err, ok)
}

/// Scorer function Gi(z), the particular solution of w″ − zw = −1/π that
/// stays bounded as z → +∞ (Gi(z) ~ 1/(πz)).
pub fn scorer_gi(z: f64) -> Result<EvalResult> {
    let (i0, err, ok) = contour_integral(z, 0)?;
    finish(i0.im, err, ok)
}

/// Derivative Gi′(z).
pub fn scorer_gi_prime(z: f64) -> Result<EvalResult> {
    let (i1, err, ok) = contour_integral(z, 1)?;
    finish(i1.re, err, ok)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Independent check path: same integrals on the real axis over
    /// [0, R] plus a two-term integration-by-parts tail correction.
    /// Entirely different contour and tail treatment from the production
    /// evaluator; good to ~1e-10 for |z| ≤ 5 with R = 25.
    pub(crate) fn real_axis_oracle(z: f64, p: u32) -> (f64, f64) {
        let r = 25.0;
        let phi = |y: f64| z * y + y * y * y / 3.0;
        let cycles = (z.abs() * r + r.powi(3) / 3.0) / (2.0 * PI);
        let panels = 8 + cycles.ceil() as usize;
        // Tolerance sits above the roundoff floor of summing ~10^3
        // oscillatory panels; the IBP tail truncation (~4e-11) dominates.
        let out: QuadOutcome<Complex64> = adaptive(
            |y: f64| {
                let w = if p == 0 { 1.0 } else { y };
                Complex64::from_polar(w, phi(y))
            },
            0.0,
            r,
            panels,
            5e-11,
            8,
        );
        assert!(out.converged);
        // ∫_R^∞ w e^{iφ} dy ≈ i w e^{iφ}/φ′ |_R + (w e^{iφ})′·... two IBP terms.
        let dphi = z + r * r;
        let ddphi = 2.0 * r;
        let w = if p == 0 { 1.0 } else { r };
        let dw = if p == 0 { 0.0 } else { 1.0 };
        let e = Complex64::from_polar(1.0, phi(r));
        let t1 = Complex64::i() * w * e / dphi;
        let t2 = (w * ddphi / (dphi * dphi * dphi) - dw / (dphi * dphi)) * e;
        let total = out.value + t1 + t2;
        (total.re / PI, total.im / PI)
    }

    // Handbook values (Abramowitz & Stegun / DLMF §9.2), reconfirmed by the
    // real-axis oracle below before freezing.
    const AI_0: f64 = 0.3550280538878172;
    const AIP_0: f64 = -0.2588194037928068;
    const GI_0: f64 = 0.2049755424820002;
    const GIP_0: f64 = 0.1494294524512754;

    #[test]
    fn ai_at_zero() {
        let r = airy_ai(0.0).unwrap();
        assert!((r.value - AI_0).abs() < 1e-12, "Ai(0) = {:e}", r.value);
        assert!(r.abs_err_est <= 1e-12);
    }

    #[test]
    fn aip_at_zero() {
        let r = airy_ai_prime(0.0).unwrap();
        assert!((r.value - AIP_0).abs() < 1e-12, "Ai'(0) = {:e}", r.value);
    }

    #[test]
    fn gi_at_zero() {
        let r = scorer_gi(0.0).unwrap();
        assert!((r.value - GI_0).abs() < 1e-10, "Gi(0) = {:e}", r.value);
        assert!(r.abs_err_est <= 1e-10);
    }

    #[test]
    fn gip_at_zero() {
        let r = scorer_gi_prime(0.0).unwrap();
        assert!((r.value - GIP_0).abs() < 1e-9, "Gi'(0) = {:e}", r.value);
        assert!(r.value > 0.0);
    }

    #[test]
    fn ai_spot_values() {
        // Ai(2) and Ai(-5) from handbook tables; Ai'(-5) frozen from the
        // real-axis oracle (and consistent with finite differences of Ai).
        assert!((airy_ai(2.0).unwrap().value - 0.03492413042327438).abs() < 1e-13);
        assert!((airy_ai(-5.0).unwrap().value - 0.3507610090241142).abs() < 1e-12);
        assert!((airy_ai_prime(-5.0).unwrap().value - 0.3271928185544432).abs() < 1e-12);
    }

    #[test]
    fn ai_decays_to_the_right() {
        let r = airy_ai(10.0).unwrap();
        assert!(r.value.abs() < 1e-9);
        assert!(r.value > 0.0);
    }

    #[test]
    fn ai_first_negative_zero() {
        // Bisection on the production evaluator.
        let f = |z: f64| airy_ai(z).unwrap().value;
        let (mut lo, mut hi) = (-3.0, -2.0);
        assert!(f(lo) < 0.0 && f(hi) > 0.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let zero = 0.5 * (lo + hi);
        assert!((zero - -2.338107410459767).abs() < 1e-9, "zero at {zero}");
    }

    #[test]
    fn matches_real_axis_oracle() {
        for &z in &[-5.0, -2.0, -0.7, 0.0, 0.9, 3.0, 5.0] {
            let (ai_o, gi_o) = real_axis_oracle(z, 0);
            let (gip_o, aip_neg) = {
                let (re, im) = real_axis_oracle(z, 1);
                (re, im)
            };
            assert!(
                (airy_ai(z).unwrap().value - ai_o).abs() < 5e-10,
                "Ai({z}) vs oracle"
            );
            assert!(
                (scorer_gi(z).unwrap().value - gi_o).abs() < 5e-10,
                "Gi({z}) vs oracle"
            );
            assert!(
                (scorer_gi_prime(z).unwrap().value - gip_o).abs() < 5e-9,
                "Gi'({z}) vs oracle"
            );
            assert!(
                (airy_ai_prime(z).unwrap().value - -aip_neg).abs() < 5e-9,
                "Ai'({z}) vs oracle"
            );
        }
    }

    #[test]
    fn gi_large_argument_tail() {
        // Gi(z) ~ 1/(πz) for z → +∞.
        let z = 20.0;
        let gi = scorer_gi(z).unwrap().value;
        assert!((PI * z * gi - 1.0).abs() < 0.01);
    }

    #[test]
    fn error_estimates_within_contract() {
        for i in 0..=70 {
            let z = -50.0 + i as f64;
            let ai = airy_ai(z.min(20.0)).unwrap();
            assert!(ai.abs_err_est <= 1e-12, "Ai err at z={z}: {}", ai.abs_err_est);
            let gi = scorer_gi(z.min(20.0)).unwrap();
            assert!(gi.abs_err_est <= 1e-10, "Gi err at z={z}: {}", gi.abs_err_est);
        }
    }

    #[test]
    fn derivative_consistency_spot() {
        let h = 1e-5;
        for &z in &[-5.0, 0.0, 5.0] {
            let fd = (scorer_gi(z + h).unwrap().value - scorer_gi(z - h).unwrap().value) / (2.0 * h);
            assert!((fd - scorer_gi_prime(z).unwrap().value).abs() < 1e-7);
            let fd = (airy_ai(z + h).unwrap().value - airy_ai(z - h).unwrap().value) / (2.0 * h);
            assert!((fd - airy_ai_prime(z).unwrap().value).abs() < 1e-7);
        }
    }

    #[test]
    fn deterministic() {
        let a = airy_ai(-7.3).unwrap();
        let b = airy_ai(-7.3).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }

    #[test]
    fn rejects_non_finite() {
        assert!(airy_ai(f64::NAN).is_err());
        assert!(scorer_gi(f64::INFINITY).is_err());
    }
}
