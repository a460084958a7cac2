use alloc::string::String;
use core::fmt;

use crate::dispersion::Axis;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the solvers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Wavelength outside the material's validity window (micrometers).
    WavelengthOutOfWindow { wavelength_um: f64, window: (f64, f64) },
    /// Temperature outside the material's validity window (Celsius).
    TemperatureOutOfWindow { temperature_c: f64, window: (f64, f64) },
    /// A crystal axis needed for the requested evaluation has no model.
    MissingAxis(Axis),
    /// Unknown Sellmeier form identifier.
    UnknownForm(String),
    CoefficientCount { form: &'static str, expected: usize, found: usize },
    EmptyWindow { field: &'static str, window: (f64, f64) },
    /// A model evaluated outside (1, 4) somewhere inside its windows.
    IndexOutOfRange { axis: Axis, wavelength_um: f64, temperature_c: f64, index: f64 },
    InvalidProcess(String),
    InvalidArgument(String),
    /// k_p - k_s - k_i <= 0, so no positive poling period exists.
    NoForwardQpm { bulk_mismatch: f64 },
    NoNonCollinearSolution { reason: &'static str },
    TotalInternalReflection { internal_angle: f64, index: f64 },
    NotDistinct,
    Incompatible(&'static str),
    NoSolution(String),
    NotNormalized { norm_sqr: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::WavelengthOutOfWindow { wavelength_um, window } => write!(
                f,
                "wavelength {wavelength_um} um outside validity window [{}, {}] um",
                window.0, window.1
            ),
            Error::TemperatureOutOfWindow { temperature_c, window } => write!(
                f,
                "temperature {temperature_c} C outside validity window [{}, {}] C",
                window.0, window.1
            ),
            Error::MissingAxis(axis) => write!(f, "missing dispersion model for axis {axis}"),
            Error::UnknownForm(name) => write!(f, "unknown Sellmeier form `{name}`"),
            Error::CoefficientCount { form, expected, found } => write!(
                f,
                "Sellmeier form `{form}` takes {expected} coefficients, got {found}"
            ),
            Error::EmptyWindow { field, window } => {
                write!(f, "{field} [{}, {}] is empty", window.0, window.1)
            }
            Error::IndexOutOfRange { axis, wavelength_um, temperature_c, index } => write!(
                f,
                "axis {axis} gives n = {index} at {wavelength_um} um, {temperature_c} C (expected 1 < n < 4)"
            ),
            Error::InvalidProcess(msg) => write!(f, "invalid process: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NoForwardQpm { bulk_mismatch } => write!(
                f,
                "no forward QPM: bulk mismatch k_p - k_s - k_i = {bulk_mismatch} rad/um is not positive"
            ),
            Error::NoNonCollinearSolution { reason } => {
                write!(f, "no non-collinear solution: {reason}")
            }
            Error::TotalInternalReflection { internal_angle, index } => write!(
                f,
                "total internal reflection: n sin(theta) = {} > 1 (n = {index}, theta = {internal_angle} rad)",
                index * crate::math::sin(*internal_angle)
            ),
            Error::NotDistinct => write!(f, "processes not distinct"),
            Error::Incompatible(msg) => write!(f, "incompatible processes: {msg}"),
            Error::NoSolution(msg) => write!(f, "no solution: {msg}"),
            Error::NotNormalized { norm_sqr } => {
                write!(f, "state not normalized: sum |a|^2 = {norm_sqr}")
            }
        }
    }
}

impl core::error::Error for Error {}
