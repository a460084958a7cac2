//! Two-photon states from a Sagnac-loop SPDC source.
//!
//! Model: a pump with Jones vector `(a_H, a_V)` meets an ideal polarizing beam
//! splitter (H transmitted, V reflected). The reflected clockwise beam passes
//! a dual-wavelength half-wave plate at 45 degrees before the crystal, the
//! transmitted counter-clockwise beam hits the crystal first and its photon
//! pair then crosses the same plate. The crystal only converts H pump light;
//! the pair polarizations depend on the SPDC type (type-0 `HH`, type-I `VV`,
//! type-II `HV`). Both arms leave through the same port with no extra phase.
//!
//! After the loop, photon 2 crosses a rotatable half-wave plate and photon 1 a
//! phase compensator. The compensator is re-set for each plate angle so that it
//! cancels the plate's birefringent phase between the two terms; the only
//! relative phase left is the one carried by the pump.

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use core::fmt;

use num_complex::Complex64;

use crate::jones::{
    apply_local, phasor, product_amplitudes, ElementKind, ElementSetting, JonesMatrix, Target, TwoPhotonState,
};
use crate::math::atan2;
use crate::Result;

/// Below this `|kappa|` the compensator is left at zero (plate near 22.5 deg).
const PHASE_REFERENCE_FLOOR: f64 = 1e-12;

/// Which of the simultaneously running processes feeds the loop output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SagnacProcess {
    Type0,
    TypeI,
    TypeII,
}

impl SagnacProcess {
    pub const ALL: [SagnacProcess; 3] = [SagnacProcess::Type0, SagnacProcess::TypeI, SagnacProcess::TypeII];

    pub fn name(self) -> &'static str {
        match self {
            SagnacProcess::Type0 => "type0",
            SagnacProcess::TypeI => "typeI",
            SagnacProcess::TypeII => "typeII",
        }
    }

    pub fn from_name(name: &str) -> Option<SagnacProcess> {
        match name {
            "type0" | "type-0" | "0" => Some(SagnacProcess::Type0),
            "typeI" | "type-I" | "I" => Some(SagnacProcess::TypeI),
            "typeII" | "type-II" | "II" => Some(SagnacProcess::TypeII),
            _ => None,
        }
    }

    /// Output path labels of the two photons.
    pub fn paths(self) -> (u8, u8) {
        match self {
            SagnacProcess::Type0 => (1, 2),
            SagnacProcess::TypeII => (3, 4),
            SagnacProcess::TypeI => (5, 6),
        }
    }

    /// Pair produced from an H-polarized pump photon, as (photon 1, photon 2).
    fn pair(self) -> ([Complex64; 2], [Complex64; 2]) {
        let h = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let v = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        match self {
            SagnacProcess::Type0 => (h, h),
            SagnacProcess::TypeI => (v, v),
            SagnacProcess::TypeII => (h, v),
        }
    }
}

impl fmt::Display for SagnacProcess {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The fixed in-loop dual-wavelength half-wave plate.
pub fn loop_plate() -> ElementSetting {
    ElementSetting::new(ElementKind::Hwp, FRAC_PI_4, Target::Both)
}

/// Unnormalized pair amplitudes leaving the loop for a given pump.
pub fn loop_amplitudes(process: SagnacProcess, pump: [Complex64; 2]) -> [Complex64; 4] {
    let dhwp = loop_plate().matrix();
    let (p1, p2) = process.pair();
    let pair = product_amplitudes(p1, p2);

    // Clockwise: V pump reflected, rotated to H by the plate, then converted.
    let cw_pump = dhwp.apply([Complex64::new(0.0, 0.0), pump[1]]);
    let cw = pair.map(|a| a * cw_pump[0]);

    // Counter-clockwise: H pump converted first, pair rotated by the plate.
    let ccw = apply_local(&pair.map(|a| a * pump[0]), &dhwp, &dhwp);

    [cw[0] + ccw[0], cw[1] + ccw[1], cw[2] + ccw[2], cw[3] + ccw[3]]
}

/// Relative phase reference `conj(HH) VV + conj(HV) VH`.
fn pairing(amplitudes: &[Complex64; 4]) -> Complex64 {
    amplitudes[0].conj() * amplitudes[3] + amplitudes[1].conj() * amplitudes[2]
}

/// Output elements for a plate rotation: the photon-2 half-wave plate and the
/// photon-1 compensator tuned against a reference pump at 45 degrees.
pub fn output_stage(process: SagnacProcess, hwp_offset: f64) -> [ElementSetting; 2] {
    let plate = ElementSetting::new(ElementKind::Hwp, hwp_offset, Target::Photon2);
    let reference_pump = [Complex64::new(FRAC_1_SQRT_2, 0.0), Complex64::new(FRAC_1_SQRT_2, 0.0)];
    let reference = apply_local(&loop_amplitudes(process, reference_pump), &JonesMatrix::identity(), &plate.matrix());
    let kappa = pairing(&reference);
    let chi = if kappa.norm() > PHASE_REFERENCE_FLOOR { -atan2(kappa.im, kappa.re) } else { 0.0 };
    [plate, ElementSetting::new(ElementKind::PhaseShifter, chi, Target::Photon1)]
}

/// Full source output for an arbitrary pump Jones vector.
pub fn sagnac_output(process: SagnacProcess, pump: [Complex64; 2], hwp_offset: f64) -> Result<TwoPhotonState> {
    let raw = loop_amplitudes(process, pump);
    let mut state = TwoPhotonState::normalized(raw, process.paths())?;
    for element in output_stage(process, hwp_offset) {
        state = state.apply(&element);
    }
    TwoPhotonState::normalized(*state.amplitudes(), process.paths())
}

/// Source output for a 45-degree pump whose H component carries
/// `e^{i pump_phase}`. With zero offset and phase this is `(HH + VV)/sqrt 2`
/// for type-0 and type-I and `(HV + VH)/sqrt 2` for type-II.
pub fn build_sagnac_state(process: SagnacProcess, hwp_offset: f64, pump_phase: f64) -> TwoPhotonState {
    let pump = [phasor(pump_phase) * FRAC_1_SQRT_2, Complex64::new(FRAC_1_SQRT_2, 0.0)];
    sagnac_output(process, pump, hwp_offset).expect("a 45-degree pump always produces pairs")
}
