//! Operating points where two or three QPM processes hold at the same
//! temperature and poling period in one crystal.
//!
//! Dual-type search walks the collinear `period(T)` curve of an anchor process
//! and asks, at every step, whether a companion process can phase-match
//! non-collinearly at that `(T, period)`. Triple-type search intersects the
//! collinear period curves of three processes directly.

use alloc::format;
use alloc::vec::Vec;

use crate::curve::uniform_grid;
use crate::process::{Geometry, PmProcess};
use crate::qpm::{
    collinear_solution_at, solution_at, solve_period_collinear, solve_temperature_collinear, QpmSolution,
    SolverSettings,
};
use crate::roots::{scan_roots, Convergence};
use crate::{Error, Result};

/// Temperature step of the anchor walk, C.
pub const DEFAULT_TEMPERATURE_STEP: f64 = 0.05;
/// Largest period disagreement accepted at a curve intersection, um.
pub const DEFAULT_PERIOD_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoincidenceSettings {
    pub temperature_step: f64,
    pub period_tolerance: f64,
    pub solver: SolverSettings,
}

impl Default for CoincidenceSettings {
    fn default() -> Self {
        CoincidenceSettings {
            temperature_step: DEFAULT_TEMPERATURE_STEP,
            period_tolerance: DEFAULT_PERIOD_TOLERANCE,
            solver: SolverSettings::default(),
        }
    }
}

/// One participating process and its solution at the shared point.
#[derive(Debug, Clone)]
pub struct MemberSolution {
    pub process: PmProcess,
    pub solution: QpmSolution,
}

#[derive(Debug, Clone)]
pub struct CoincidencePoint {
    pub temperature: f64,
    pub period: f64,
    pub members: Vec<MemberSolution>,
    pub residual_max: f64,
}

impl CoincidencePoint {
    fn from_members(temperature: f64, period: f64, members: Vec<MemberSolution>) -> Self {
        let residual_max = members.iter().map(|m| m.solution.residual).fold(0.0, f64::max);
        CoincidencePoint { temperature, period, members, residual_max }
    }

    pub fn material_name(&self) -> &str {
        self.members.first().map(|m| m.process.material().name()).unwrap_or("")
    }

    pub fn distinct_types(&self) -> usize {
        let mut types: Vec<_> = self.members.iter().map(|m| m.process.pm_type()).collect();
        types.sort();
        types.dedup();
        types.len()
    }
}

fn check_compatible(processes: &[&PmProcess]) -> Result<()> {
    let first = processes[0];
    for p in &processes[1..] {
        if p.material().name() != first.material().name() {
            return Err(Error::Incompatible("processes use different materials"));
        }
        if p.wavelengths().pump != first.wavelengths().pump {
            return Err(Error::Incompatible("processes use different pump wavelengths"));
        }
    }
    for (i, a) in processes.iter().enumerate() {
        if processes[i + 1..].iter().any(|b| a.same_configuration(b)) {
            return Err(Error::NotDistinct);
        }
    }
    Ok(())
}

fn walk_grid(range: (f64, f64), step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) {
        return Err(Error::InvalidArgument(format!("temperature step must be positive, got {step}")));
    }
    let cells = libm::ceil((range.1 - range.0) / step).max(1.0) as usize;
    uniform_grid(range, cells + 1)
}

/// Walks the anchor's collinear curve over `range` and keeps every step where
/// the companion has a non-collinear solution whose signal exit angle (degrees)
/// lies inside `angle_window_deg`. Results ascend in temperature.
pub fn find_dual_type(
    anchor: &PmProcess,
    companion: &PmProcess,
    range: (f64, f64),
    angle_window_deg: (f64, f64),
    settings: &CoincidenceSettings,
) -> Result<Vec<CoincidencePoint>> {
    check_compatible(&[anchor, companion])?;
    if anchor.pm_type() == companion.pm_type() {
        return Err(Error::Incompatible("dual-type search needs two different QPM types"));
    }
    let window = anchor.material().temperature_window();
    for t in [range.0, range.1] {
        if !window.contains(t) {
            return Err(Error::TemperatureOutOfWindow { temperature_c: t, window: window.as_tuple() });
        }
    }
    let mut points = Vec::new();
    for t in walk_grid(range, settings.temperature_step)? {
        let period = match solve_period_collinear(anchor, t) {
            Ok(p) => p,
            Err(Error::NoForwardQpm { .. }) => continue,
            Err(e) => return Err(e),
        };
        let Ok(partner) = solution_at(companion, t, period, &settings.solver) else {
            continue;
        };
        let exit = partner.signal_external.to_degrees();
        if exit < angle_window_deg.0 || exit > angle_window_deg.1 {
            continue;
        }
        let lead = collinear_solution_at(anchor, t, period)?;
        points.push(CoincidencePoint::from_members(
            t,
            period,
            alloc::vec![
                MemberSolution { process: anchor.clone(), solution: lead },
                MemberSolution { process: companion.clone(), solution: partner },
            ],
        ));
    }
    Ok(points)
}

/// Solves every process at a fixed `(T, period)`, each one collinear when its
/// collinear mismatch already vanishes and non-collinear otherwise.
pub fn evaluate_operating_point(
    processes: &[PmProcess],
    temperature_c: f64,
    period_um: f64,
    solver: &SolverSettings,
) -> Result<CoincidencePoint> {
    if processes.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "an operating point needs at least 2 processes, got {}",
            processes.len()
        )));
    }
    let refs: Vec<&PmProcess> = processes.iter().collect();
    check_compatible(&refs)?;
    let mut members = Vec::with_capacity(processes.len());
    for p in processes {
        let solution = solution_at(p, temperature_c, period_um, solver)
            .map_err(|e| Error::NoSolution(format!("{p} at {temperature_c} C, {period_um} um: {e}")))?;
        members.push(MemberSolution { process: p.clone(), solution });
    }
    Ok(CoincidencePoint::from_members(temperature_c, period_um, members))
}

/// Temperatures inside `range` where the collinear period curves of three
/// distinct processes meet within `period_tolerance`.
///
/// The processes are put in a canonical order first, so any permutation of
/// the input gives the same points.
pub fn find_triple_type(
    processes: &[PmProcess],
    range: (f64, f64),
    settings: &CoincidenceSettings,
) -> Result<Vec<CoincidencePoint>> {
    if processes.len() != 3 {
        return Err(Error::InvalidArgument(format!(
            "triple-type search needs exactly 3 processes, got {}",
            processes.len()
        )));
    }
    let mut ordered: Vec<&PmProcess> = processes.iter().collect();
    check_compatible(&ordered)?;
    if ordered.iter().any(|p| p.geometry() != Geometry::Collinear) {
        return Err(Error::Incompatible("triple-type search needs collinear processes"));
    }
    ordered.sort_by(|a, b| {
        (a.pm_type(), a.polarizations(), a.order())
            .cmp(&(b.pm_type(), b.polarizations(), b.order()))
            .then(a.wavelengths().signal.total_cmp(&b.wavelengths().signal))
    });
    let (a, b, c) = (ordered[0], ordered[1], ordered[2]);

    let window = a.material().temperature_window();
    for t in [range.0, range.1] {
        if !window.contains(t) {
            return Err(Error::TemperatureOutOfWindow { temperature_c: t, window: window.as_tuple() });
        }
    }
    if !(settings.temperature_step > 0.0) || !(range.0 < range.1) {
        return Err(Error::InvalidArgument(format!(
            "bad scan: range [{}, {}], step {}",
            range.0, range.1, settings.temperature_step
        )));
    }
    let cells = libm::ceil((range.1 - range.0) / settings.temperature_step).max(1.0) as usize;
    let gap = |t: f64| Some(solve_period_collinear(a, t).ok()? - solve_period_collinear(b, t).ok()?);
    let conv = Convergence { f_tol: 1e-12, x_tol: 0.0, max_iterations: settings.solver.max_iterations };

    let mut points = Vec::new();
    for root in scan_roots(gap, range.0, range.1, cells, &conv) {
        let t = root.x;
        let period = solve_period_collinear(a, t)?;
        let third = solve_period_collinear(c, t)?;
        if (third - period).abs() > settings.period_tolerance {
            continue;
        }
        let mut members = Vec::with_capacity(3);
        for p in processes {
            members.push(MemberSolution { process: p.clone(), solution: collinear_solution_at(p, t, period)? });
        }
        points.push(CoincidencePoint::from_members(t, period, members));
    }
    Ok(points)
}

/// Shift of the phase-matching temperature when the period moves by
/// `delta_period_um`: `T(period + delta) - T(period)`.
///
/// The unperturbed temperature is the lowest root in `range`; the perturbed
/// one is the root closest to it.
pub fn sensitivity(
    anchor: &PmProcess,
    period_um: f64,
    delta_period_um: f64,
    range: (f64, f64),
    solver: &SolverSettings,
) -> Result<f64> {
    let base = solve_temperature_collinear(anchor, period_um, range, solver)?;
    let Some(&t0) = base.first() else {
        return Err(Error::NoSolution(format!("no phase-matching temperature for period {period_um} um")));
    };
    let shifted_period = period_um + delta_period_um;
    let shifted = solve_temperature_collinear(anchor, shifted_period, range, solver)?;
    let t1 = shifted
        .into_iter()
        .min_by(|x, y| (x - t0).abs().total_cmp(&(y - t0).abs()))
        .ok_or_else(|| Error::NoSolution(format!("no phase-matching temperature for period {shifted_period} um")))?;
    Ok(t1 - t0)
}
