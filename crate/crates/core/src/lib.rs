//! Quasi-phase-matching (QPM) solvers for spontaneous parametric downconversion
//! in periodically poled crystals.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`dispersion`]: temperature dependent Sellmeier models and the angled
//!   extraordinary index,
//! * [`process`] and [`qpm`]: wavevector bookkeeping, collinear period and
//!   temperature solvers, non-collinear emission angles,
//! * [`curve`]: period/angle versus temperature sweeps,
//! * [`coincidence`]: operating points where several QPM types hold at once,
//! * [`jones`] and [`sagnac`]: two-photon polarization states from a Sagnac
//!   loop source.
//!
//! File formats, data export and the command line live in the `qpm` crate.

#![no_std]
// `!(x > 0.0)` style guards are there to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod coincidence;
pub mod curve;
pub mod dispersion;
mod error;
pub mod jones;
mod math;
pub mod process;
pub mod qpm;
pub mod roots;
pub mod sagnac;

pub use error::{Error, Result};
