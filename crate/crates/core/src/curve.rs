//! Period-versus-temperature and angle-versus-temperature sweeps.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::process::PmProcess;
use crate::qpm::{solution_at, solve_period_collinear, SolverSettings};
use crate::{Error, Result};

/// Sampled `(x, y)` data for one process.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSeries {
    pub abscissa_name: String,
    pub ordinate_name: String,
    pub process_tag: String,
    pub points: Vec<(f64, f64)>,
}

impl CurveSeries {
    /// x strictly increasing and every value finite.
    pub fn is_well_formed(&self) -> bool {
        self.points.iter().all(|(x, y)| x.is_finite() && y.is_finite())
            && self.points.windows(2).all(|w| w[0].0 < w[1].0)
    }

    /// Abscissae where the piecewise-linear curve crosses `level`, in order.
    /// Isolated samples sitting exactly on the level count once.
    pub fn crossings(&self, level: f64) -> Vec<f64> {
        let mut out = Vec::new();
        for (i, &(x, y)) in self.points.iter().enumerate() {
            if y == level {
                out.push(x);
                continue;
            }
            if let Some(&(x1, y1)) = self.points.get(i + 1) {
                if y1 != level && (y < level) != (y1 < level) {
                    out.push(x + (level - y) * (x1 - x) / (y1 - y));
                }
            }
        }
        out
    }
}

/// Uniform grid with both end points, `n_points >= 2`.
pub fn uniform_grid(range: (f64, f64), n_points: usize) -> Result<Vec<f64>> {
    let (lo, hi) = range;
    if n_points < 2 {
        return Err(Error::InvalidArgument(alloc::format!("need at least 2 points, got {n_points}")));
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(alloc::format!("range [{lo}, {hi}] is empty")));
    }
    let last = n_points - 1;
    Ok((0..n_points)
        .map(|i| if i == last { hi } else { lo + (hi - lo) * i as f64 / last as f64 })
        .collect())
}

fn check_range(process: &PmProcess, range: (f64, f64)) -> Result<()> {
    let window = process.material().temperature_window();
    for t in [range.0, range.1] {
        if !window.contains(t) {
            return Err(Error::TemperatureOutOfWindow { temperature_c: t, window: window.as_tuple() });
        }
    }
    Ok(())
}

/// Collinear poling period (um) against temperature (C). Temperatures without
/// forward QPM are left out.
pub fn period_vs_temperature_curve(process: &PmProcess, range: (f64, f64), n_points: usize) -> Result<CurveSeries> {
    let grid = uniform_grid(range, n_points)?;
    check_range(process, range)?;
    let mut points = Vec::with_capacity(grid.len());
    for t in grid {
        match solve_period_collinear(process, t) {
            Ok(period) => points.push((t, period)),
            Err(Error::NoForwardQpm { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(CurveSeries {
        abscissa_name: "temperature_C".to_string(),
        ordinate_name: "poling_period_um".to_string(),
        process_tag: process.tag(),
        points,
    })
}

/// External signal exit angle (degrees) against temperature (C) at a fixed
/// period. Temperatures with no emission solution are left out.
pub fn angle_vs_temperature_curve(
    process: &PmProcess,
    period_um: f64,
    range: (f64, f64),
    n_points: usize,
    settings: &SolverSettings,
) -> Result<CurveSeries> {
    let grid = uniform_grid(range, n_points)?;
    check_range(process, range)?;
    let points = grid
        .into_iter()
        .filter_map(|t| solution_at(process, t, period_um, settings).ok().map(|s| (t, s.signal_external.to_degrees())))
        .collect();
    Ok(CurveSeries {
        abscissa_name: "temperature_C".to_string(),
        ordinate_name: "exit_angle_deg".to_string(),
        process_tag: alloc::format!("{} period={period_um}um", process.tag()),
        points,
    })
}
