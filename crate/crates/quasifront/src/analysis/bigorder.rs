//! Large-order agreement check against the published reference value.

use crate::asymptotics::f1_bessel;
use crate::error::Result;

/// Order and argument of the largest Bessel evaluation reported in the
/// numerical literature (Jentschura & Lötstedt 2012).
pub const BIG_ORDER_NU: f64 = 5000000.2;
pub const BIG_ORDER_CT: f64 = 5000000.1;
/// Their high-precision value of J_ν(ct).
pub const BIG_ORDER_REFERENCE_EXACT: f64 = 0.002614463954691926;
/// What the Nicholson-type approximant yields for the same pair.
pub const BIG_ORDER_PAPER_APPROX: f64 = 0.002614463961695188;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BigOrderReport {
    /// F1(ν, ct) computed here.
    pub f1_value: f64,
    /// The hard-coded reference exact value.
    pub reference_exact: f64,
    /// Leading significant figures on which the two agree.
    pub agreeing_sig_figs: u32,
}

/// Number of leading significant figures on which a and b agree:
/// floor(log10(scale/|a − b|)) with scale = max(|a|, |b|).
pub fn agreeing_significant_figures(a: f64, b: f64) -> u32 {
    if a == b {
        return 17;
    }
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        return 0;
    }
    let r = (scale / (a - b).abs()).log10().floor();
    if r < 0.0 {
        0
    } else {
        (r as u32).min(17)
    }
}

/// Evaluates F1 at the reference point and counts agreeing figures.
pub fn bigorder_check() -> Result<BigOrderReport> {
    let f1_value = f1_bessel(BIG_ORDER_NU, BIG_ORDER_CT)?;
    Ok(BigOrderReport {
        f1_value,
        reference_exact: BIG_ORDER_REFERENCE_EXACT,
        agreeing_sig_figs: agreeing_significant_figures(f1_value, BIG_ORDER_REFERENCE_EXACT),
    })
}
