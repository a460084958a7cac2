//! SPDC process configuration.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use crate::dispersion::MaterialDispersion;
use crate::{Error, Result};

/// Default degenerate telecom pair: 775 nm pump, 1550 nm signal and idler.
pub const DEFAULT_PUMP_UM: f64 = 0.775;
pub const DEFAULT_SIGNAL_UM: f64 = 1.550;

/// Tolerance on `1/l_p - 1/l_s - 1/l_i`, in 1/um.
pub const ENERGY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PmType {
    Type0,
    TypeI,
    TypeII,
}

impl PmType {
    pub fn label(self) -> &'static str {
        match self {
            PmType::Type0 => "type-0",
            PmType::TypeI => "type-I",
            PmType::TypeII => "type-II",
        }
    }
}

impl fmt::Display for PmType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Ordinary light is polarized along `y`; extraordinary along `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarization {
    Ordinary,
    Extraordinary,
}

impl Polarization {
    pub fn symbol(self) -> char {
        match self {
            Polarization::Ordinary => 'o',
            Polarization::Extraordinary => 'e',
        }
    }

    pub fn from_symbol(c: char) -> Option<Polarization> {
        match c {
            'o' | 'O' => Some(Polarization::Ordinary),
            'e' | 'E' => Some(Polarization::Extraordinary),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wave {
    Pump,
    Signal,
    Idler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Geometry {
    Collinear,
    NonCollinear,
}

/// Polarizations of (pump, signal, idler).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polarizations {
    pub pump: Polarization,
    pub signal: Polarization,
    pub idler: Polarization,
}

impl Polarizations {
    pub fn new(pump: Polarization, signal: Polarization, idler: Polarization) -> Self {
        Polarizations { pump, signal, idler }
    }

    /// Parses `p:s,i`, e.g. `o:e,o`.
    pub fn parse(text: &str) -> Option<Self> {
        let (pump, pair) = text.trim().split_once(':')?;
        let (signal, idler) = pair.split_once(',')?;
        let one = |s: &str| {
            let mut chars = s.trim().chars();
            let c = chars.next()?;
            chars.next().is_none().then_some(c).and_then(Polarization::from_symbol)
        };
        Some(Polarizations::new(one(pump)?, one(signal)?, one(idler)?))
    }

    /// The SPDC type implied by this triple.
    pub fn implied_type(&self) -> PmType {
        if self.signal != self.idler {
            PmType::TypeII
        } else if self.signal == self.pump {
            PmType::Type0
        } else {
            PmType::TypeI
        }
    }
}

impl fmt::Display for Polarizations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}+{}", self.pump.symbol(), self.signal.symbol(), self.idler.symbol())
    }
}

/// Pump, signal and idler vacuum wavelengths in micrometers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavelengths {
    pub pump: f64,
    pub signal: f64,
    pub idler: f64,
}

impl Wavelengths {
    /// Closes energy conservation: the idler follows from pump and signal.
    pub fn from_pump_signal(pump: f64, signal: f64) -> Result<Self> {
        if !(pump > 0.0 && signal > pump) {
            return Err(Error::InvalidProcess(format!(
                "need 0 < pump ({pump} um) < signal ({signal} um)"
            )));
        }
        let idler = 1.0 / (1.0 / pump - 1.0 / signal);
        Ok(Wavelengths { pump, signal, idler })
    }

    pub fn degenerate(pump: f64) -> Self {
        Wavelengths { pump, signal: 2.0 * pump, idler: 2.0 * pump }
    }

    pub fn energy_mismatch(&self) -> f64 {
        1.0 / self.pump - 1.0 / self.signal - 1.0 / self.idler
    }
}

impl Default for Wavelengths {
    fn default() -> Self {
        Wavelengths { pump: DEFAULT_PUMP_UM, signal: DEFAULT_SIGNAL_UM, idler: DEFAULT_SIGNAL_UM }
    }
}

/// One SPDC configuration in one crystal.
#[derive(Debug, Clone)]
pub struct PmProcess {
    material: Arc<MaterialDispersion>,
    pm_type: PmType,
    pols: Polarizations,
    wavelengths: Wavelengths,
    order: u32,
    geometry: Geometry,
}

impl PmProcess {
    pub fn new(
        material: Arc<MaterialDispersion>,
        pm_type: PmType,
        pols: Polarizations,
        wavelengths: Wavelengths,
        order: u32,
        geometry: Geometry,
    ) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidProcess(format!("QPM order must be >= 1, got {order}")));
        }
        let w = wavelengths;
        if !(w.pump > 0.0 && w.signal > 0.0 && w.idler > 0.0) {
            return Err(Error::InvalidProcess(format!("wavelengths must be positive: {w:?}")));
        }
        let mismatch = w.energy_mismatch();
        if mismatch.abs() > ENERGY_TOLERANCE {
            return Err(Error::InvalidProcess(format!(
                "energy not conserved: 1/l_p - 1/l_s - 1/l_i = {mismatch:e} 1/um"
            )));
        }
        if pols.implied_type() != pm_type {
            return Err(Error::InvalidProcess(format!(
                "polarizations {pols} describe {}, not {pm_type}",
                pols.implied_type()
            )));
        }
        Ok(PmProcess { material, pm_type, pols, wavelengths, order, geometry })
    }

    /// Degenerate 775 nm -> 1550 nm + 1550 nm process, type taken from the
    /// polarization triple.
    pub fn degenerate(material: Arc<MaterialDispersion>, pols: Polarizations, order: u32, geometry: Geometry) -> Result<Self> {
        PmProcess::new(material, pols.implied_type(), pols, Wavelengths::default(), order, geometry)
    }

    pub fn material(&self) -> &MaterialDispersion {
        &self.material
    }

    pub fn material_arc(&self) -> &Arc<MaterialDispersion> {
        &self.material
    }

    pub fn pm_type(&self) -> PmType {
        self.pm_type
    }

    pub fn polarizations(&self) -> Polarizations {
        self.pols
    }

    pub fn polarization(&self, wave: Wave) -> Polarization {
        match wave {
            Wave::Pump => self.pols.pump,
            Wave::Signal => self.pols.signal,
            Wave::Idler => self.pols.idler,
        }
    }

    pub fn wavelengths(&self) -> Wavelengths {
        self.wavelengths
    }

    pub fn wavelength(&self, wave: Wave) -> f64 {
        match wave {
            Wave::Pump => self.wavelengths.pump,
            Wave::Signal => self.wavelengths.signal,
            Wave::Idler => self.wavelengths.idler,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn with_order(&self, order: u32) -> Result<Self> {
        PmProcess::new(self.material.clone(), self.pm_type, self.pols, self.wavelengths, order, self.geometry)
    }

    pub fn with_geometry(&self, geometry: Geometry) -> Self {
        PmProcess { geometry, ..self.clone() }
    }

    /// Signal and idler are interchangeable: same wavelength, same polarization.
    pub fn is_symmetric_pair(&self) -> bool {
        self.wavelengths.signal == self.wavelengths.idler && self.pols.signal == self.pols.idler
    }

    /// Same physics (material by name, type, polarizations, wavelengths, order).
    pub fn same_configuration(&self, other: &PmProcess) -> bool {
        self.material.name() == other.material.name()
            && self.pm_type == other.pm_type
            && self.pols == other.pols
            && self.wavelengths == other.wavelengths
            && self.order == other.order
    }

    /// Short tag such as `PPLN type-II o->e+o m=2`.
    pub fn tag(&self) -> String {
        format!("{} {} {} m={}", self.material.name(), self.pm_type, self.pols, self.order)
    }
}

impl fmt::Display for PmProcess {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}
