//! Aligned data series behind the exact-vs-approximant figures.

use rayon::prelude::*;

use super::{Family, GridSpec};
use crate::error::{Error, Result};

/// One sample: abscissa, exact value (absent for the approximant-only
/// figure 5), and approximant value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub t: f64,
    pub exact: Option<f64>,
    pub approx: f64,
}

fn integer_order(n: f64, even: bool) -> Result<u32> {
    if n < 0.0 || n.fract() != 0.0 || n > u32::MAX as f64 {
        return Err(Error::Usage(format!(
            "this figure needs a non-negative integer order, got n = {n}"
        )));
    }
    let n = n as u32;
    if even && n % 2 != 0 {
        return Err(Error::OddLommelOrder(n));
    }
    Ok(n)
}

/// Samples the figure `which` ∈ 1..=5 over `grid`:
/// 1: (t, J_n, F1)   2: (t, J′_n, F2)   3: (t, s_{0,n}, F3)
/// 4: (t, s′_{0,n}, F4)   5: (t, F1) with any positive real order.
pub fn figure_series(which: u8, n: f64, grid: &GridSpec) -> Result<Vec<FigureRow>> {
    let family = match which {
        1 => Some(Family::Bessel),
        2 => Some(Family::BesselPrime),
        3 => Some(Family::Lommel),
        4 => Some(Family::LommelPrime),
        5 => None,
        _ => {
            return Err(Error::Usage(format!(
                "figure id must be 1..=5, got {which}"
            )))
        }
    };
    let order = match family {
        Some(f) => Some(integer_order(n, f.requires_even_order())?),
        None => None,
    };
    (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let t = grid.t(i);
            match (family, order) {
                (Some(f), Some(ni)) => Ok(FigureRow {
                    t,
                    exact: Some(f.exact(ni, t)?),
                    approx: f.approx(ni as f64, t)?,
                }),
                _ => Ok(FigureRow {
                    t,
                    exact: None,
                    approx: Family::Bessel.approx(n, t)?,
                }),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_one_columns() {
        let grid = GridSpec::new(19.0, 25.0, 0.5).unwrap();
        let rows = figure_series(1, 20.0, &grid).unwrap();
        assert_eq!(rows.len(), 13);
        for r in &rows {
            let exact = r.exact.expect("figures 1-4 carry the exact column");
            // J_20 and F1 stay close through the front.
            assert!((exact - r.approx).abs() < 0.02);
        }
    }

    #[test]
    fn figure_five_has_no_exact_column() {
        let grid = GridSpec::new(100.0, 101.0, 0.5).unwrap();
        let rows = figure_series(5, 100.2, &grid).unwrap();
        assert!(rows.iter().all(|r| r.exact.is_none()));
    }

    #[test]
    fn degenerate_grid_single_row() {
        let grid = GridSpec::new(20.0, 20.0, 0.1).unwrap();
        let rows = figure_series(1, 20.0, &grid).unwrap();
        assert_eq!(rows.len(), 1);
    }

    #[test]
    fn invalid_requests() {
        let grid = GridSpec::new(1.0, 2.0, 0.1).unwrap();
        assert!(matches!(
            figure_series(7, 20.0, &grid),
            Err(Error::Usage(_))
        ));
        // Non-integer order in an exact-column figure.
        assert!(figure_series(1, 20.5, &grid).is_err());
        // Odd order in a Lommel figure.
        assert!(matches!(
            figure_series(3, 7.0, &grid),
            Err(Error::OddLommelOrder(7))
        ));
    }
}
