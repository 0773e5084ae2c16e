//! Quantitative reproduction of the approximation-quality results:
//! principal-extremum detection, peak-amplitude error tables, figure data
//! series, amplitude/width scaling fits, and the large-order agreement
//! check.
//!
//! Everything here fixes c = 1, so the time axis and the function
//! argument coincide (x = t).
//!
//! Row evaluation is embarrassingly parallel and uses rayon internally,
//! but results are assembled in index order: output is deterministic and
//! bit-identical across runs regardless of thread scheduling.

mod bigorder;
mod extremum;
mod figures;
mod scaling;
mod tables;

pub use bigorder::{
    agreeing_significant_figures, bigorder_check, BigOrderReport, BIG_ORDER_CT, BIG_ORDER_NU,
    BIG_ORDER_PAPER_APPROX, BIG_ORDER_REFERENCE_EXACT,
};
pub use extremum::{find_principal_extremum, principal_window, ExtremumKind, ExtremumRecord};
pub use figures::{figure_series, FigureRow};
pub use scaling::{scaling_fit, ScalingFit, ScalingPoint, ScalingQuantity};
pub use tables::{delta_table, window_grid, DeltaRow, RowError};

use crate::asymptotics::{f1_bessel, f2_bessel_prime, f3_lommel, f4_lommel_prime};
use crate::error::{Error, Result};
use crate::special::{bessel_j, bessel_j_prime, lommel_s0, lommel_s0_prime};

/// A uniform sampling grid over the time axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub step: f64,
}

impl GridSpec {
    /// Requires finite bounds with t_min ≤ t_max and step > 0.
    /// (t_min = t_max yields a single-sample grid.)
    pub fn new(t_min: f64, t_max: f64, step: f64) -> Result<Self> {
        if !t_min.is_finite() || !t_max.is_finite() || !step.is_finite() {
            return Err(Error::Usage("grid bounds must be finite".into()));
        }
        if t_min > t_max {
            return Err(Error::Usage(format!(
                "empty grid: t_min = {t_min} > t_max = {t_max}"
            )));
        }
        if step <= 0.0 {
            return Err(Error::Usage(format!("grid step must be > 0, got {step}")));
        }
        Ok(GridSpec { t_min, t_max, step })
    }

    /// floor((t_max − t_min)/step) + 1, with a relative guard against
    /// losing the last sample to floating-point division.
    pub fn len(&self) -> usize {
        ((self.t_max - self.t_min) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn t(&self, i: usize) -> f64 {
        self.t_min + i as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.t(i))
    }
}

/// Which exact/approximant pair a table or fit is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Bessel,
    BesselPrime,
    Lommel,
    LommelPrime,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Bessel => "bessel",
            Family::BesselPrime => "bessel_prime",
            Family::Lommel => "lommel",
            Family::LommelPrime => "lommel_prime",
        }
    }

    pub fn requires_even_order(self) -> bool {
        matches!(self, Family::Lommel | Family::LommelPrime)
    }

    /// The exact function of t at integer order n (c = 1).
    pub fn exact(self, n: u32, t: f64) -> Result<f64> {
        Ok(match self {
            Family::Bessel => bessel_j(n, t)?.value,
            Family::BesselPrime => bessel_j_prime(n, t)?.value,
            Family::Lommel => lommel_s0(n, t)?.value,
            Family::LommelPrime => lommel_s0_prime(n, t)?.value,
        })
    }

    /// The matching approximant F1–F4 (order may be any positive real).
    pub fn approx(self, n: f64, t: f64) -> Result<f64> {
        match self {
            Family::Bessel => f1_bessel(n, t),
            Family::BesselPrime => f2_bessel_prime(n, t),
            Family::Lommel => f3_lommel(n, t),
            Family::LommelPrime => f4_lommel_prime(n, t),
        }
    }
}

/// Whether extremum amplitudes are read off the raw grid samples or from
/// the refining quadratic. Raw-grid is the default for table
/// reproduction; fits use the interpolated value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AmplitudeMode {
    #[default]
    RawGrid,
    Interpolated,
}
