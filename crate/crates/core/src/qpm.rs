//! Wavevectors, phase mismatch and the QPM solvers.
//!
//! Sign convention: `dk = k_p - k_s - k_i - m K_g` with `K_g = 2 pi / period`,
//! all in rad/um. A positive bulk mismatch `k_p - k_s - k_i` is needed for a
//! forward grating.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::dispersion::Axis;
use crate::math::{asin, cos, hypot, sin};
use crate::process::{PmProcess, Polarization, Wave};
use crate::roots::{brent, scan_roots, Convergence};
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_SCAN_INTERVALS: usize = 400;
pub const DEFAULT_MAX_ITERATIONS: usize = 80;
/// Default ceiling for internal emission angles (30 degrees).
pub const DEFAULT_THETA_MAX: f64 = PI / 6.0;

/// Knobs shared by the bracketing solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSettings {
    /// Target `|dk|` in rad/um.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Uniform pre-scan cells before Brent refinement.
    pub scan_intervals: usize,
    /// Upper end of the internal angle search, radians.
    pub theta_max: f64,
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings {
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            scan_intervals: DEFAULT_SCAN_INTERVALS,
            theta_max: DEFAULT_THETA_MAX,
        }
    }
}

impl SolverSettings {
    fn convergence(&self) -> Convergence {
        Convergence { f_tol: self.tolerance, x_tol: 0.0, max_iterations: self.max_iterations }
    }
}

/// A solved operating point for one process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QpmSolution {
    pub temperature: f64,
    pub period: f64,
    pub order: u32,
    pub signal_internal: f64,
    pub idler_internal: f64,
    pub signal_external: f64,
    pub idler_external: f64,
    /// Magnitude of the residual wavevector mismatch, rad/um.
    pub residual: f64,
}

impl QpmSolution {
    pub fn is_collinear(&self) -> bool {
        self.signal_internal == 0.0 && self.idler_internal == 0.0
    }
}

/// Internal signal/idler angles from [`solve_emission_angles`].
#[derive(Debug, Clone, PartialEq)]
pub struct EmissionAngles {
    pub signal: f64,
    pub idler: f64,
    /// Further roots below the angle ceiling, ascending in signal angle.
    pub alternates: Vec<(f64, f64)>,
}

/// `|k| = 2 pi n / lambda`.
pub fn wave_number(index: f64, wavelength_um: f64) -> f64 {
    2.0 * PI * index / wavelength_um
}

/// `K_g = m 2 pi / period`; zero for an infinite period.
pub fn grating_vector(order: u32, period_um: f64) -> f64 {
    order as f64 * 2.0 * PI / period_um
}

/// Index seen by one wave: ordinary light uses `n_y`, extraordinary light the
/// angled index (`n_z` along the pump axis).
pub fn index_for_wave(process: &PmProcess, wave: Wave, temperature_c: f64, theta: f64) -> Result<f64> {
    let material = process.material();
    let lambda = process.wavelength(wave);
    match process.polarization(wave) {
        Polarization::Ordinary => material.refractive_index(Axis::Y, lambda, temperature_c),
        Polarization::Extraordinary => material.effective_extraordinary_index(lambda, temperature_c, theta),
    }
}

pub fn wave_vector(process: &PmProcess, wave: Wave, temperature_c: f64, theta: f64) -> Result<f64> {
    Ok(wave_number(index_for_wave(process, wave, temperature_c, theta)?, process.wavelength(wave)))
}

/// `k_p - k_s - k_i` with every wave along the pump axis.
pub fn bulk_mismatch(process: &PmProcess, temperature_c: f64) -> Result<f64> {
    let kp = wave_vector(process, Wave::Pump, temperature_c, 0.0)?;
    let ks = wave_vector(process, Wave::Signal, temperature_c, 0.0)?;
    let ki = wave_vector(process, Wave::Idler, temperature_c, 0.0)?;
    Ok(kp - ks - ki)
}

fn check_period(period_um: f64) -> Result<()> {
    if period_um > 0.0 && !period_um.is_nan() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("poling period must be positive, got {period_um}")))
    }
}

/// Collinear mismatch `k_p - k_s - k_i - m 2 pi / period`.
pub fn phase_mismatch_collinear(process: &PmProcess, temperature_c: f64, period_um: f64) -> Result<f64> {
    check_period(period_um)?;
    Ok(bulk_mismatch(process, temperature_c)? - grating_vector(process.order(), period_um))
}

/// Closed-form collinear period `2 pi m / (k_p - k_s - k_i)`.
pub fn solve_period_collinear(process: &PmProcess, temperature_c: f64) -> Result<f64> {
    let bulk = bulk_mismatch(process, temperature_c)?;
    if !(bulk > 0.0) {
        return Err(Error::NoForwardQpm { bulk_mismatch: bulk });
    }
    Ok(2.0 * PI * process.order() as f64 / bulk)
}

fn check_temperature_range(process: &PmProcess, range: (f64, f64)) -> Result<()> {
    let (lo, hi) = range;
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!("temperature range [{lo}, {hi}] is empty")));
    }
    let window = process.material().temperature_window();
    for t in [lo, hi] {
        if !window.contains(t) {
            return Err(Error::TemperatureOutOfWindow { temperature_c: t, window: window.as_tuple() });
        }
    }
    Ok(())
}

/// Every temperature in `range` where the collinear mismatch vanishes for a
/// fixed period, ascending. An empty list means no sign change was found.
pub fn solve_temperature_collinear(
    process: &PmProcess,
    period_um: f64,
    range: (f64, f64),
    settings: &SolverSettings,
) -> Result<Vec<f64>> {
    check_period(period_um)?;
    check_temperature_range(process, range)?;
    let roots = scan_roots(
        |t| phase_mismatch_collinear(process, t, period_um).ok(),
        range.0,
        range.1,
        settings.scan_intervals,
        &settings.convergence(),
    );
    Ok(roots.into_iter().filter(|r| r.fx.abs() <= settings.tolerance).map(|r| r.x).collect())
}

/// Idler angle that balances transverse momentum for a given signal angle,
/// or `None` when no real partner exists.
fn idler_partner(process: &PmProcess, temperature_c: f64, theta_s: f64) -> Result<Option<f64>> {
    let transverse = wave_vector(process, Wave::Signal, temperature_c, theta_s)? * sin(theta_s);
    if transverse == 0.0 {
        return Ok(Some(0.0));
    }
    match process.polarization(Wave::Idler) {
        Polarization::Ordinary => {
            let ratio = transverse / wave_vector(process, Wave::Idler, temperature_c, 0.0)?;
            Ok((ratio.abs() <= 1.0).then(|| asin(ratio)))
        }
        Polarization::Extraordinary => {
            // k_i(theta) sin(theta) is monotone on [0, pi/2] for any physical index ellipse.
            let lambda = process.wavelength(Wave::Idler);
            let material = process.material();
            material.check_domain(lambda, temperature_c)?;
            let g = |t: f64| {
                material
                    .effective_extraordinary_index(lambda, temperature_c, t)
                    .map(|n| wave_number(n, lambda) * sin(t) - transverse)
                    .unwrap_or(f64::NAN)
            };
            let conv = Convergence { f_tol: 1e-15 * transverse.abs(), x_tol: 0.0, max_iterations: 200 };
            Ok(brent(g, 0.0, core::f64::consts::FRAC_PI_2, &conv).map(|r| r.x))
        }
    }
}

/// Longitudinal and transverse residuals of the non-collinear QPM equations
/// `k_s cos(ts) + k_i cos(ti) = k_p - m K_g` and `k_s sin(ts) = k_i sin(ti)`.
pub fn noncollinear_residuals(
    process: &PmProcess,
    temperature_c: f64,
    period_um: f64,
    theta_s: f64,
    theta_i: f64,
) -> Result<(f64, f64)> {
    check_period(period_um)?;
    let kp = wave_vector(process, Wave::Pump, temperature_c, 0.0)?;
    let ks = wave_vector(process, Wave::Signal, temperature_c, theta_s)?;
    let ki = wave_vector(process, Wave::Idler, temperature_c, theta_i)?;
    let target = kp - grating_vector(process.order(), period_um);
    Ok((ks * cos(theta_s) + ki * cos(theta_i) - target, ks * sin(theta_s) - ki * sin(theta_i)))
}

/// Internal emission angles satisfying both non-collinear QPM equations at a
/// fixed `(T, period)`.
///
/// Interchangeable signal/idler (same wavelength and polarization) are forced
/// onto the symmetric branch `theta_s = theta_i`; otherwise the idler angle is
/// eliminated through transverse balance and the signal angle root-found.
/// When the collinear condition already holds within tolerance both angles are
/// exactly zero. The smallest-angle root is primary.
pub fn solve_emission_angles(
    process: &PmProcess,
    temperature_c: f64,
    period_um: f64,
    settings: &SolverSettings,
) -> Result<EmissionAngles> {
    check_period(period_um)?;
    let target = wave_vector(process, Wave::Pump, temperature_c, 0.0)? - grating_vector(process.order(), period_um);
    let symmetric = process.is_symmetric_pair();

    let longitudinal = |theta_s: f64| -> Result<Option<(f64, f64)>> {
        let ks = wave_vector(process, Wave::Signal, temperature_c, theta_s)?;
        if symmetric {
            return Ok(Some((2.0 * ks * cos(theta_s) - target, theta_s)));
        }
        let Some(theta_i) = idler_partner(process, temperature_c, theta_s)? else {
            return Ok(None);
        };
        let ki = wave_vector(process, Wave::Idler, temperature_c, theta_i)?;
        Ok(Some((ks * cos(theta_s) + ki * cos(theta_i) - target, theta_i)))
    };

    let (f0, _) = longitudinal(0.0)?.expect("collinear partner always exists");
    if f0.abs() <= settings.tolerance {
        return Ok(EmissionAngles { signal: 0.0, idler: 0.0, alternates: Vec::new() });
    }
    if f0 < 0.0 {
        return Err(Error::NoNonCollinearSolution { reason: "k_p - m K_g exceeds k_s + k_i" });
    }
    if !(settings.theta_max > 0.0) {
        return Err(Error::InvalidArgument(format!("angle ceiling must be positive, got {}", settings.theta_max)));
    }

    let roots = scan_roots(
        |t| longitudinal(t).ok().flatten().map(|(f, _)| f),
        0.0,
        settings.theta_max,
        settings.scan_intervals,
        &settings.convergence(),
    );
    let mut pairs = Vec::new();
    for root in roots.iter().filter(|r| r.x > 0.0 && r.fx.abs() <= settings.tolerance) {
        if let Some((_, theta_i)) = longitudinal(root.x)? {
            let theta_i = if symmetric { root.x } else { theta_i };
            pairs.push((root.x, theta_i));
        }
    }
    if pairs.is_empty() {
        return Err(Error::NoNonCollinearSolution { reason: "no root below the internal angle ceiling" });
    }
    let (signal, idler) = pairs.remove(0);
    Ok(EmissionAngles { signal, idler, alternates: pairs })
}

/// Snell refraction into air through a face normal to the pump:
/// `arcsin(n sin(theta))`.
pub fn external_angle(theta_internal: f64, index: f64) -> Result<f64> {
    let s = index * sin(theta_internal);
    if !s.is_finite() || s.abs() > 1.0 {
        return Err(Error::TotalInternalReflection { internal_angle: theta_internal, index });
    }
    Ok(asin(s))
}

/// Collinear solution at `T` using the closed-form period.
pub fn solve_collinear_point(process: &PmProcess, temperature_c: f64) -> Result<QpmSolution> {
    let period = solve_period_collinear(process, temperature_c)?;
    collinear_solution_at(process, temperature_c, period)
}

/// Collinear bookkeeping at an arbitrary `(T, period)`: all angles zero,
/// residual is whatever the collinear mismatch is.
pub fn collinear_solution_at(process: &PmProcess, temperature_c: f64, period_um: f64) -> Result<QpmSolution> {
    let dk = phase_mismatch_collinear(process, temperature_c, period_um)?;
    Ok(QpmSolution {
        temperature: temperature_c,
        period: period_um,
        order: process.order(),
        signal_internal: 0.0,
        idler_internal: 0.0,
        signal_external: 0.0,
        idler_external: 0.0,
        residual: dk.abs(),
    })
}

/// Full solution at a fixed `(T, period)`: emission angles (zero when the
/// collinear condition holds), exit angles and the independently re-evaluated
/// residual.
pub fn solution_at(
    process: &PmProcess,
    temperature_c: f64,
    period_um: f64,
    settings: &SolverSettings,
) -> Result<QpmSolution> {
    let angles = solve_emission_angles(process, temperature_c, period_um, settings)?;
    if angles.signal == 0.0 && angles.idler == 0.0 {
        return collinear_solution_at(process, temperature_c, period_um);
    }
    let ns = index_for_wave(process, Wave::Signal, temperature_c, angles.signal)?;
    let ni = index_for_wave(process, Wave::Idler, temperature_c, angles.idler)?;
    let (long, trans) = noncollinear_residuals(process, temperature_c, period_um, angles.signal, angles.idler)?;
    Ok(QpmSolution {
        temperature: temperature_c,
        period: period_um,
        order: process.order(),
        signal_internal: angles.signal,
        idler_internal: angles.idler,
        signal_external: external_angle(angles.signal, ns)?,
        idler_external: external_angle(angles.idler, ni)?,
        residual: hypot(long, trans),
    })
}
