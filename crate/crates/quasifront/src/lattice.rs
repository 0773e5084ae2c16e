//! Quasi-front solution functions of the discrete half-plane problem.
//!
//! The displacement u_k(t) and its companion v_k(t) arise from a
//! Laplace–Fourier transform pair over a periodic lattice: the transform
//! images are p/(p² + 4c²sin²(q/2)) and sin(q/2)/(p² + 4c²sin²(q/2)), and
//! analytic inversion of both transforms gives the closed forms
//!
//! ```text
//! u_k(t) = (2/π) ∫₀^{π/2} cos(2zk) cos(2ct sin z) dz = J_{2k}(2ct)
//! v_k(t) = (1/πc) ∫₀^{π/2} cos(2zk) sin(2ct sin z) dz = s_{0,2k}(2ct)/(πc)
//! ```
//!
//! This module evaluates those closed forms (no time stepping, no
//! numerical contour inversion) together with their quasi-front
//! approximations valid near the ray k = ct:
//!
//! ```text
//! u_k(t) ≈ Ai[2(k − ct)/(ct)^{1/3}] / (ct)^{1/3}
//! v_k(t) ≈ −Gi[2(k − ct)/(ct)^{1/3}] / (2c(ct)^{1/3})
//! ```
//!
//! which are the n = 2k, x = 2ct specialisations of the F1/F3
//! approximants.

use crate::error::{Error, Result};
use crate::special::{airy_ai, bessel_j, lommel_s0, scorer_gi, EvalResult};
use std::f64::consts::PI;

/// Propagation velocity, node index, and time for one lattice evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeParams {
    c: f64,
    k: u32,
    t: f64,
}

impl LatticeParams {
    /// Requires c > 0 and t ≥ 0, both finite.
    pub fn new(c: f64, k: u32, t: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::Domain(format!("velocity must be c > 0, got {c}")));
        }
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("time must be t ≥ 0, got {t}")));
        }
        Ok(LatticeParams { c, k, t })
    }

    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn t(&self) -> f64 {
        self.t
    }
}

/// u_k(t) = J_{2k}(2ct), exact.
pub fn u_exact(p: &LatticeParams) -> Result<EvalResult> {
    bessel_j(2 * p.k, 2.0 * p.c * p.t)
}

/// v_k(t) = s_{0,2k}(2ct)/(πc), exact.
pub fn v_exact(p: &LatticeParams) -> Result<EvalResult> {
    let s = lommel_s0(2 * p.k, 2.0 * p.c * p.t)?;
    let scale = 1.0 / (PI * p.c);
    Ok(EvalResult::new(s.value * scale, s.abs_err_est * scale))
}

/// Quasi-front form of u_k(t); requires t > 0.
pub fn u_quasifront(p: &LatticeParams) -> Result<f64> {
    if p.t <= 0.0 {
        return Err(Error::Domain(format!(
            "quasi-front form requires t > 0, got {}",
            p.t
        )));
    }
    let ct = p.c * p.t;
    let scale = ct.cbrt();
    let z = 2.0 * (p.k as f64 - ct) / scale;
    Ok(airy_ai(z)?.value / scale)
}

/// Quasi-front form of v_k(t); requires t > 0.
pub fn v_quasifront(p: &LatticeParams) -> Result<f64> {
    if p.t <= 0.0 {
        return Err(Error::Domain(format!(
            "quasi-front form requires t > 0, got {}",
            p.t
        )));
    }
    let ct = p.c * p.t;
    let scale = ct.cbrt();
    let z = 2.0 * (p.k as f64 - ct) / scale;
    Ok(-scorer_gi(z)?.value / (2.0 * p.c * scale))
}
