//! File formats, reports and the `qpm` command line on top of `qpm-core`.

// `!(x > 0.0)` style guards are there to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod material_file;
pub mod report;

pub use material_file::{list_materials, load_material, resolve_material, LoadError, MaterialFile};
pub use report::Format;
