//! Refractive indices of periodically poled crystals.
//!
//! Each crystal axis carries a [`SellmeierModel`]. Uniaxial crystals usually
//! ship only `y` (ordinary) and `z` (extraordinary); a missing `x` or `y`
//! falls back to the other, i.e. `n_x = n_y = n_o`.
//!
//! Units: wavelengths in micrometers, temperatures in degrees Celsius, angles
//! in radians.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::math::{cos, sin, sqrt};
use crate::{Error, Result};

/// Principal dielectric axis of the crystal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    pub fn from_name(name: &str) -> Option<Axis> {
        match name {
            "x" | "X" => Some(Axis::X),
            "y" | "Y" => Some(Axis::Y),
            "z" | "Z" => Some(Axis::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Functional form of a Sellmeier model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SellmeierForm {
    /// Two-pole Sellmeier with a quadratic temperature parameter
    /// `f = (T - t0)(T + t_shift)` folded into the oscillator terms:
    ///
    /// `n^2 = a1 + b1 f + (a2 + b2 f)/(l^2 - (a3 + b3 f)^2) + (a4 + b4 f)/(l^2 - a5^2) - a6 l^2`
    ///
    /// Used for MgO-doped lithium niobate and tantalate.
    Gayer,
    /// Room temperature two-pole Sellmeier plus a linear thermo-optic shift
    /// whose slope is a cubic in `1/l`:
    ///
    /// `n = sqrt(a + b/(l^2 - c) + d/(l^2 - e)) + (T - t_ref)(dn3/l^3 + dn2/l^2 + dn1/l + dn0)`
    Kato,
}

const GAYER_NAMES: [&str; 12] = ["a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4", "t0", "t_shift"];
const KATO_NAMES: [&str; 10] = ["a", "b", "c", "d", "e", "t_ref", "dn3", "dn2", "dn1", "dn0"];

impl SellmeierForm {
    pub fn name(self) -> &'static str {
        match self {
            SellmeierForm::Gayer => "gayer",
            SellmeierForm::Kato => "kato",
        }
    }

    pub fn from_name(name: &str) -> Result<SellmeierForm> {
        match name {
            "gayer" => Ok(SellmeierForm::Gayer),
            "kato" => Ok(SellmeierForm::Kato),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }

    /// Coefficient names, in the order [`SellmeierModel::new`] expects them.
    pub fn coefficient_names(self) -> &'static [&'static str] {
        match self {
            SellmeierForm::Gayer => &GAYER_NAMES,
            SellmeierForm::Kato => &KATO_NAMES,
        }
    }
}

/// One axis' dispersion: a form and its ordered coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SellmeierModel {
    form: SellmeierForm,
    coefficients: Vec<f64>,
}

impl SellmeierModel {
    pub fn new(form: SellmeierForm, coefficients: Vec<f64>) -> Result<Self> {
        let expected = form.coefficient_names().len();
        if coefficients.len() != expected {
            return Err(Error::CoefficientCount { form: form.name(), expected, found: coefficients.len() });
        }
        if let Some(bad) = coefficients.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(alloc::format!(
                "coefficient `{}` of form `{}` is not finite",
                form.coefficient_names()[bad],
                form.name()
            )));
        }
        Ok(SellmeierModel { form, coefficients })
    }

    pub fn form(&self) -> SellmeierForm {
        self.form
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Raw evaluation, no window checks.
    pub fn index(&self, wavelength_um: f64, temperature_c: f64) -> f64 {
        let c = &self.coefficients;
        let l2 = wavelength_um * wavelength_um;
        match self.form {
            SellmeierForm::Gayer => {
                let f = (temperature_c - c[10]) * (temperature_c + c[11]);
                let pole = c[2] + c[8] * f;
                let n2 = c[0] + c[6] * f + (c[1] + c[7] * f) / (l2 - pole * pole) + (c[3] + c[9] * f) / (l2 - c[4] * c[4])
                    - c[5] * l2;
                sqrt(n2)
            }
            SellmeierForm::Kato => {
                let n_ref = sqrt(c[0] + c[1] / (l2 - c[2]) + c[3] / (l2 - c[4]));
                let inv = 1.0 / wavelength_um;
                let slope = ((c[6] * inv + c[7]) * inv + c[8]) * inv + c[9];
                n_ref + (temperature_c - c[5]) * slope
            }
        }
    }
}

/// Closed interval `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub min: f64,
    pub max: f64,
}

impl Window {
    pub fn new(min: f64, max: f64) -> Self {
        Window { min, max }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.min && x <= self.max
    }

    pub fn is_empty(&self) -> bool {
        !(self.min.is_finite() && self.max.is_finite() && self.min < self.max)
    }

    pub fn as_tuple(&self) -> (f64, f64) {
        (self.min, self.max)
    }
}

/// A named crystal with per-axis dispersion and validity windows.
///
/// Immutable once built; [`MaterialDispersion::new`] checks every invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialDispersion {
    name: String,
    source: String,
    axes: [Option<SellmeierModel>; 3],
    wavelength_window: Window,
    temperature_window: Window,
}

/// Grid used at construction time to check that every axis stays in (1, 4).
const VALIDATION_GRID: usize = 12;

impl MaterialDispersion {
    /// Builds and validates a material.
    ///
    /// Needs a `z` model (extraordinary light) and at least one of `x`/`y`
    /// (ordinary light). Both windows must be non-empty and every axis must
    /// evaluate to `1 < n < 4` on a grid spanning both windows.
    pub fn new(
        name: impl Into<String>,
        source: impl Into<String>,
        axes: impl IntoIterator<Item = (Axis, SellmeierModel)>,
        wavelength_window: Window,
        temperature_window: Window,
    ) -> Result<Self> {
        let mut slots: [Option<SellmeierModel>; 3] = [None, None, None];
        for (axis, model) in axes {
            slots[axis as usize] = Some(model);
        }
        if wavelength_window.is_empty() {
            return Err(Error::EmptyWindow { field: "wavelength_window_um", window: wavelength_window.as_tuple() });
        }
        if temperature_window.is_empty() {
            return Err(Error::EmptyWindow { field: "temperature_window_C", window: temperature_window.as_tuple() });
        }
        if slots[Axis::Z as usize].is_none() {
            return Err(Error::MissingAxis(Axis::Z));
        }
        if slots[Axis::X as usize].is_none() && slots[Axis::Y as usize].is_none() {
            return Err(Error::MissingAxis(Axis::Y));
        }
        let mat = MaterialDispersion {
            name: name.into(),
            source: source.into(),
            axes: slots,
            wavelength_window,
            temperature_window,
        };
        mat.check_index_range()?;
        Ok(mat)
    }

    fn check_index_range(&self) -> Result<()> {
        let lw = self.wavelength_window;
        let tw = self.temperature_window;
        for axis in Axis::ALL {
            let Some(model) = &self.axes[axis as usize] else { continue };
            for i in 0..=VALIDATION_GRID {
                let lambda = lw.min + (lw.max - lw.min) * i as f64 / VALIDATION_GRID as f64;
                for j in 0..=VALIDATION_GRID {
                    let t = tw.min + (tw.max - tw.min) * j as f64 / VALIDATION_GRID as f64;
                    let n = model.index(lambda, t);
                    if !(n > 1.0 && n < 4.0) {
                        return Err(Error::IndexOutOfRange { axis, wavelength_um: lambda, temperature_c: t, index: n });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn wavelength_window(&self) -> Window {
        self.wavelength_window
    }

    pub fn temperature_window(&self) -> Window {
        self.temperature_window
    }

    /// The model stored for `axis`, without the uniaxial fallback.
    pub fn axis_model(&self, axis: Axis) -> Option<&SellmeierModel> {
        self.axes[axis as usize].as_ref()
    }

    /// Axes that carry an explicit model.
    pub fn axes(&self) -> impl Iterator<Item = (Axis, &SellmeierModel)> {
        Axis::ALL.into_iter().filter_map(move |a| self.axis_model(a).map(|m| (a, m)))
    }

    fn resolved_model(&self, axis: Axis) -> Result<&SellmeierModel> {
        let fallback = match axis {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
            Axis::Z => Axis::Z,
        };
        self.axis_model(axis)
            .or_else(|| self.axis_model(fallback))
            .ok_or(Error::MissingAxis(axis))
    }

    pub fn check_domain(&self, wavelength_um: f64, temperature_c: f64) -> Result<()> {
        if !self.wavelength_window.contains(wavelength_um) {
            return Err(Error::WavelengthOutOfWindow {
                wavelength_um,
                window: self.wavelength_window.as_tuple(),
            });
        }
        if !self.temperature_window.contains(temperature_c) {
            return Err(Error::TemperatureOutOfWindow {
                temperature_c,
                window: self.temperature_window.as_tuple(),
            });
        }
        Ok(())
    }

    /// Principal-axis index `n_axis(T, lambda)`.
    pub fn refractive_index(&self, axis: Axis, wavelength_um: f64, temperature_c: f64) -> Result<f64> {
        self.check_domain(wavelength_um, temperature_c)?;
        Ok(self.resolved_model(axis)?.index(wavelength_um, temperature_c))
    }

    /// Index of an extraordinary wave whose wavevector makes angle `theta`
    /// with the pump (x) direction inside the x-z plane:
    ///
    /// `n(theta) = n_x n_z / sqrt(n_x^2 cos^2(theta) + n_z^2 sin^2(theta))`
    ///
    /// so `n(0) = n_z` and `n(pi/2) = n_x`.
    pub fn effective_extraordinary_index(&self, wavelength_um: f64, temperature_c: f64, theta: f64) -> Result<f64> {
        if !theta.is_finite() {
            return Err(Error::InvalidArgument(alloc::format!("propagation angle {theta} is not finite")));
        }
        let nx = self.refractive_index(Axis::X, wavelength_um, temperature_c)?;
        let nz = self.refractive_index(Axis::Z, wavelength_um, temperature_c)?;
        let (c, s) = (cos(theta), sin(theta));
        Ok(nx * nz / sqrt(nx * nx * c * c + nz * nz * s * s))
    }
}
