//! Jones calculus for polarization qubits and two-photon states.
//!
//! Basis order is `H = 0`, `V = 1`; a two-photon amplitude index is
//! `2 * photon1 + photon2`, i.e. `(HH, HV, VH, VV)`.

use core::f64::consts::FRAC_1_SQRT_2;
use core::fmt;

use num_complex::Complex64;

use crate::math::{atan2, cos, sin, sqrt};
use crate::{Error, Result};

/// Largest accepted deviation of `sum |a|^2` from one.
pub const NORM_TOLERANCE: f64 = 1e-12;

pub const BASIS_LABELS: [&str; 4] = ["HH", "HV", "VH", "VV"];

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// `e^{i phi}`.
pub fn phasor(phi: f64) -> Complex64 {
    Complex64::new(cos(phi), sin(phi))
}

/// 2x2 single-photon Jones matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesMatrix(pub [[Complex64; 2]; 2]);

impl JonesMatrix {
    pub fn identity() -> Self {
        JonesMatrix([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn mul(&self, rhs: &JonesMatrix) -> JonesMatrix {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[ZERO; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        JonesMatrix(out)
    }

    pub fn adjoint(&self) -> JonesMatrix {
        let m = &self.0;
        JonesMatrix([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    /// Largest entry-wise deviation of `U^dagger U` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let p = self.adjoint().mul(self);
        let id = JonesMatrix::identity();
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((p.0[i][j] - id.0[i][j]).norm());
            }
        }
        worst
    }

    /// Entry-wise distance after removing the best global phase.
    pub fn distance_up_to_phase(&self, other: &JonesMatrix) -> f64 {
        let mut overlap = ZERO;
        for i in 0..2 {
            for j in 0..2 {
                overlap += other.0[i][j].conj() * self.0[i][j];
            }
        }
        let phase = if overlap.norm() > 0.0 { phasor(-atan2(overlap.im, overlap.re)) } else { ONE };
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] * phase - other.0[i][j]).norm());
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Waveplate {
    Half,
    Quarter,
}

/// Ideal wave plate with its fast axis at `angle` (radians) from H.
///
/// The half-wave plate is the reflection `[[cos 2a, sin 2a], [sin 2a, -cos 2a]]`;
/// the quarter-wave plate is `R(-a) diag(1, i) R(a)`.
pub fn waveplate_matrix(plate: Waveplate, angle: f64) -> JonesMatrix {
    match plate {
        Waveplate::Half => {
            let (c2, s2) = (Complex64::new(cos(2.0 * angle), 0.0), Complex64::new(sin(2.0 * angle), 0.0));
            JonesMatrix([[c2, s2], [s2, -c2]])
        }
        Waveplate::Quarter => {
            let (c, s) = (cos(angle), sin(angle));
            let i = Complex64::new(0.0, 1.0);
            let off = (ONE - i) * (s * c);
            JonesMatrix([[ONE * (c * c) + i * (s * s), off], [off, ONE * (s * s) + i * (c * c)]])
        }
    }
}

/// `diag(1, e^{i phase})`: delays V relative to H.
pub fn phase_shifter(phase: f64) -> JonesMatrix {
    JonesMatrix([[ONE, ZERO], [ZERO, phasor(phase)]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Hwp,
    Qwp,
    PhaseShifter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Photon1,
    Photon2,
    Both,
}

/// An optical element and where it sits. `parameter` is the fast-axis angle
/// for wave plates and the V phase delay for a phase shifter, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementSetting {
    pub element: ElementKind,
    pub parameter: f64,
    pub acts_on: Target,
}

impl ElementSetting {
    pub fn new(element: ElementKind, parameter: f64, acts_on: Target) -> Self {
        ElementSetting { element, parameter, acts_on }
    }

    pub fn matrix(&self) -> JonesMatrix {
        match self.element {
            ElementKind::Hwp => waveplate_matrix(Waveplate::Half, self.parameter),
            ElementKind::Qwp => waveplate_matrix(Waveplate::Quarter, self.parameter),
            ElementKind::PhaseShifter => phase_shifter(self.parameter),
        }
    }
}

/// `(U1 x U2) psi` on a raw amplitude vector.
pub fn apply_local(amplitudes: &[Complex64; 4], first: &JonesMatrix, second: &JonesMatrix) -> [Complex64; 4] {
    let mut out = [ZERO; 4];
    for a in 0..2 {
        for b in 0..2 {
            let mut acc = ZERO;
            for c in 0..2 {
                for d in 0..2 {
                    acc += first.0[a][c] * second.0[b][d] * amplitudes[2 * c + d];
                }
            }
            out[2 * a + b] = acc;
        }
    }
    out
}

/// `|p1> x |p2>` for single-photon Jones vectors.
pub fn product_amplitudes(first: [Complex64; 2], second: [Complex64; 2]) -> [Complex64; 4] {
    [first[0] * second[0], first[0] * second[1], first[1] * second[0], first[1] * second[1]]
}

/// Normalized polarization state of a photon pair on two labelled paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPhotonState {
    amplitudes: [Complex64; 4],
    paths: (u8, u8),
}

fn norm_sqr(amplitudes: &[Complex64; 4]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

impl TwoPhotonState {
    /// Wraps amplitudes that are already normalized.
    pub fn new(amplitudes: [Complex64; 4], paths: (u8, u8)) -> Result<Self> {
        let n = norm_sqr(&amplitudes);
        if !((n - 1.0).abs() <= NORM_TOLERANCE) {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        Ok(TwoPhotonState { amplitudes, paths })
    }

    /// Rescales arbitrary non-zero amplitudes to unit norm.
    pub fn normalized(amplitudes: [Complex64; 4], paths: (u8, u8)) -> Result<Self> {
        let n = norm_sqr(&amplitudes);
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
        let scale = 1.0 / sqrt(n);
        Ok(TwoPhotonState { amplitudes: amplitudes.map(|a| a * scale), paths })
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amplitudes
    }

    pub fn paths(&self) -> (u8, u8) {
        self.paths
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amplitudes)
    }

    pub fn with_paths(self, paths: (u8, u8)) -> Self {
        TwoPhotonState { paths, ..self }
    }

    /// Passes the state through one element.
    pub fn apply(&self, setting: &ElementSetting) -> TwoPhotonState {
        let m = setting.matrix();
        let id = JonesMatrix::identity();
        let (first, second) = match setting.acts_on {
            Target::Photon1 => (m, id),
            Target::Photon2 => (id, m),
            Target::Both => (m, m),
        };
        TwoPhotonState { amplitudes: apply_local(&self.amplitudes, &first, &second), paths: self.paths }
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &TwoPhotonState) -> Complex64 {
        self.amplitudes.iter().zip(other.amplitudes.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|<target|self>|^2`.
    pub fn fidelity(&self, target: &TwoPhotonState) -> Result<f64> {
        fidelity(self, target)
    }
}

/// `|<target|state>|^2`, both states must be normalized.
pub fn fidelity(state: &TwoPhotonState, target: &TwoPhotonState) -> Result<f64> {
    for s in [state, target] {
        let n = s.norm_sqr();
        if !((n - 1.0).abs() <= NORM_TOLERANCE) {
            return Err(Error::NotNormalized { norm_sqr: n });
        }
    }
    Ok(target.inner(state).norm_sqr().min(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus];

    pub fn label(self) -> &'static str {
        match self {
            BellState::PhiPlus => "Phi+",
            BellState::PhiMinus => "Phi-",
            BellState::PsiPlus => "Psi+",
            BellState::PsiMinus => "Psi-",
        }
    }

    pub fn state(self, paths: (u8, u8)) -> TwoPhotonState {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let amplitudes = match self {
            BellState::PhiPlus => [h, ZERO, ZERO, h],
            BellState::PhiMinus => [h, ZERO, ZERO, -h],
            BellState::PsiPlus => [ZERO, h, h, ZERO],
            BellState::PsiMinus => [ZERO, h, -h, ZERO],
        };
        TwoPhotonState { amplitudes, paths }
    }
}

impl fmt::Display for BellState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}
