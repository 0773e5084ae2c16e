//! Log-log scaling fits of principal-extremum amplitude and width.

use super::{find_principal_extremum, window_grid, AmplitudeMode, Family};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalingQuantity {
    /// |value| of the principal extremum vs n.
    Amplitude,
    /// Distance from t = n (the front, z = 0) to the principal extremum.
    Width,
}

impl ScalingQuantity {
    pub fn label(self) -> &'static str {
        match self {
            ScalingQuantity::Amplitude => "amplitude",
            ScalingQuantity::Width => "width",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingPoint {
    pub n: u32,
    pub measured: f64,
}

/// Least-squares line through (log10 n, log10 measured).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    pub exponent: f64,
    pub intercept: f64,
    /// Largest absolute fit residual, in log10 units.
    pub max_residual: f64,
}

/// Grid step for the extremum sweep at order n: the lobe width grows like
/// (n/2)^{1/3}, so the step scales with it (never below 0.1, rounded to a
/// multiple of 0.1 to stay on the usual sampling convention). Quadratic
/// refinement keeps sub-step accuracy in both amplitude and location.
fn sweep_step(n: f64) -> f64 {
    let s = (n / 2.0).cbrt();
    ((s / 20.0) * 10.0).round().max(1.0) / 10.0
}

/// Measures the requested quantity at each order and fits a log-log line.
/// Needs at least 4 orders; interpolated amplitudes are used so the grid
/// step does not bias the fit.
pub fn scaling_fit(
    quantity: ScalingQuantity,
    family: Family,
    orders: &[u32],
) -> Result<(Vec<ScalingPoint>, ScalingFit)> {
    if orders.len() < 4 {
        return Err(Error::FitUnderdetermined {
            points: orders.len(),
        });
    }
    let mut sorted: Vec<u32> = orders.to_vec();
    sorted.sort_unstable();

    let mut points = Vec::with_capacity(sorted.len());
    for n in sorted {
        if family.requires_even_order() && n % 2 != 0 {
            return Err(Error::OddLommelOrder(n));
        }
        let nf = n as f64;
        let grid = window_grid(nf, sweep_step(nf))?;
        let rec = find_principal_extremum(
            |t| family.exact(n, t),
            nf,
            &grid,
            AmplitudeMode::Interpolated,
        )?;
        let measured = match quantity {
            ScalingQuantity::Amplitude => rec.value.abs(),
            ScalingQuantity::Width => (rec.t_at - nf).abs(),
        };
        points.push(ScalingPoint { n, measured });
    }

    let xs: Vec<f64> = points.iter().map(|p| (p.n as f64).log10()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.measured.log10()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let max_residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (intercept + exponent * x)).abs())
        .fold(0.0, f64::max);

    Ok((
        points,
        ScalingFit {
            exponent,
            intercept,
            max_residual,
        },
    ))
}
