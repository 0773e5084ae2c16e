//! Nicholson-type approximants and two-term Olver expansions.
//!
//! With the stretched coordinate z = (n − x)/(x/2)^{1/3} the four
//! approximants are
//!
//! ```text
//! F1(n, x) =  Ai(z) / (x/2)^{1/3}          ≈ J_n(x)
//! F2(n, x) = −Ai′(z) / (x/2)^{2/3}         ≈ J′_n(x)
//! F3(n, x) = −(π/2) Gi(z) / (x/2)^{1/3}    ≈ s_{0,n}(x)
//! F4(n, x) =  (π/2) Gi′(z) / (x/2)^{2/3}   ≈ s′_{0,n}(x)
//! ```
//!
//! each valid for n ≫ 1 or x ≫ 1, uniformly through the transition region
//! x ≈ n. The order n may be any positive real here, not just an integer.
//!
//! F4 is not the exact x-derivative of F3: the chain rule also produces a
//! term carrying (n − x)/(3t) and a scale-derivative term, both dropped as
//! O(1/x) near the front. Tests check the gap closes at that rate rather
//! than asserting exact equality.
//!
//! [`olver_two_term_j`] and [`olver_two_term_jprime`] are the k = 0
//! truncations of the uniform large-order expansions of J_ν and J′_ν in
//! the parameterisation x = ν + a·ν^{1/3}, with seed polynomials
//! P₀ = 1, Q₀ = (3/10)a², R₀ = 1, S₀ = (3/5)a³ − 1/5.

use crate::error::{Error, Result};
use crate::special::{airy_ai, airy_ai_prime, scorer_gi, scorer_gi_prime};
use std::f64::consts::FRAC_PI_2;

/// The stretched transition-region coordinate and its scale factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionCoord {
    /// z = (n − x)/(x/2)^{1/3}; same sign as n − x.
    pub z: f64,
    /// (x/2)^{1/3}, strictly positive.
    pub scale: f64,
}

/// Computes z = (n − x)/(x/2)^{1/3} and the scale (x/2)^{1/3}.
pub fn z_coord(n: f64, x: f64) -> Result<TransitionCoord> {
    if !(x > 0.0) || !x.is_finite() || !n.is_finite() {
        return Err(Error::Domain(format!(
            "z_coord requires finite n and x > 0, got n = {n}, x = {x}"
        )));
    }
    let scale = (x / 2.0).cbrt();
    Ok(TransitionCoord {
        z: (n - x) / scale,
        scale,
    })
}

/// F1(n, x) = Ai(z)/(x/2)^{1/3}, the Nicholson-type approximant of J_n(x).
pub fn f1_bessel(n: f64, x: f64) -> Result<f64> {
    let tc = z_coord(n, x)?;
    Ok(airy_ai(tc.z)?.value / tc.scale)
}

/// F2(n, x) = −Ai′(z)/(x/2)^{2/3}, approximant of J′_n(x).
pub fn f2_bessel_prime(n: f64, x: f64) -> Result<f64> {
    let tc = z_coord(n, x)?;
    Ok(-airy_ai_prime(tc.z)?.value / (tc.scale * tc.scale))
}

/// F3(n, x) = −(π/2)·Gi(z)/(x/2)^{1/3}, approximant of s_{0,n}(x).
pub fn f3_lommel(n: f64, x: f64) -> Result<f64> {
    let tc = z_coord(n, x)?;
    Ok(-FRAC_PI_2 * scorer_gi(tc.z)?.value / tc.scale)
}

/// F4(n, x) = (π/2)·Gi′(z)/(x/2)^{2/3}, approximant of s′_{0,n}(x).
pub fn f4_lommel_prime(n: f64, x: f64) -> Result<f64> {
    let tc = z_coord(n, x)?;
    Ok(FRAC_PI_2 * scorer_gi_prime(tc.z)?.value / (tc.scale * tc.scale))
}

fn check_nu(nu: f64) -> Result<()> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain(format!("order must satisfy ν > 0, got {nu}")));
    }
    Ok(())
}

/// Two-term uniform expansion of J_ν(ν + a·ν^{1/3}) in powers of the order:
/// (2^{1/3}/ν^{1/3})·Ai(−2^{1/3}a)·P₀(a) + (2^{2/3}/ν)·Ai′(−2^{1/3}a)·Q₀(a).
pub fn olver_two_term_j(nu: f64, a: f64) -> Result<f64> {
    check_nu(nu)?;
    let arg = -(2.0_f64.cbrt()) * a;
    let ai = airy_ai(arg)?.value;
    let aip = airy_ai_prime(arg)?.value;
    let q0 = 0.3 * a * a;
    Ok(2.0_f64.cbrt() / nu.cbrt() * ai + 2.0_f64.powf(2.0 / 3.0) / nu * aip * q0)
}

/// Two-term uniform expansion of J′_ν(ν + a·ν^{1/3}):
/// −(2^{2/3}/ν^{2/3})·Ai′(−2^{1/3}a)·R₀(a) + (2^{1/3}/ν^{4/3})·Ai(−2^{1/3}a)·S₀(a).
pub fn olver_two_term_jprime(nu: f64, a: f64) -> Result<f64> {
    check_nu(nu)?;
    let arg = -(2.0_f64.cbrt()) * a;
    let ai = airy_ai(arg)?.value;
    let aip = airy_ai_prime(arg)?.value;
    let s0 = 0.6 * a * a * a - 0.2;
    let nu23 = nu.cbrt() * nu.cbrt();
    Ok(-(2.0_f64.powf(2.0 / 3.0)) / nu23 * aip + 2.0_f64.cbrt() / (nu * nu.cbrt()) * ai * s0)
}
