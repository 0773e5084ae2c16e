use std::fmt;

/// Errors produced by the evaluation and analysis routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the function's domain.
    Domain(String),
    /// The Lommel function s_{0,n} is defined for even orders only.
    OddLommelOrder(u32),
    /// Quadrature failed to meet its tolerance within the panel budget.
    /// Carries the partial estimate and its error bound.
    Convergence { partial: f64, abs_err_est: f64 },
    /// The discrete derivative never changed sign inside the search window.
    NoExtremum { n: f64 },
    /// A scaling fit needs at least four points.
    FitUnderdetermined { points: usize },
    /// Malformed request (bad figure id, empty grid, unknown function id).
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::OddLommelOrder(n) => {
                write!(f, "parity error: s_0,n requires even order, got n = {n}")
            }
            Error::Convergence {
                partial,
                abs_err_est,
            } => write!(
                f,
                "quadrature did not converge (partial estimate {partial:e}, error ~{abs_err_est:e})"
            ),
            Error::NoExtremum { n } => {
                write!(f, "no extremum found in the search window around n = {n}")
            }
            Error::FitUnderdetermined { points } => {
                write!(f, "scaling fit needs at least 4 points, got {points}")
            }
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
