//! JSON material files and the materials directory.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use qpm_core::dispersion::{Axis, MaterialDispersion, SellmeierForm, SellmeierModel, Window};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// On-disk layout of one material.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialFile {
    pub name: String,
    pub source: String,
    pub wavelength_window_um: (f64, f64),
    #[serde(rename = "temperature_window_C")]
    pub temperature_window_c: (f64, f64),
    pub axes: BTreeMap<String, AxisEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisEntry {
    pub form: String,
    pub coefficients: BTreeMap<String, f64>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: cannot read: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: parse error: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{path}: field `{field}`: {message}")]
    Field { path: PathBuf, field: String, message: String },
    #[error("material `{name}` not found in {dir}; available: {}", list_or_none(.available))]
    NotFound { name: String, dir: PathBuf, available: Vec<String> },
}

fn list_or_none(names: &[String]) -> String {
    if names.is_empty() {
        "(none)".to_string()
    } else {
        names.join(", ")
    }
}

impl MaterialFile {
    /// Converts to a validated material. Errors carry the dotted field path
    /// but not the file path; [`load_material`] adds that.
    pub fn into_material(self) -> Result<MaterialDispersion, (String, String)> {
        let mut axes = Vec::with_capacity(self.axes.len());
        for (key, entry) in &self.axes {
            let field = format!("axes.{key}");
            let axis = Axis::from_name(key).ok_or_else(|| (field.clone(), "unknown axis, expected x, y or z".to_string()))?;
            let form = SellmeierForm::from_name(&entry.form).map_err(|e| (format!("{field}.form"), e.to_string()))?;
            let names = form.coefficient_names();
            let cfield = format!("{field}.coefficients");
            if entry.coefficients.len() != names.len() {
                return Err((
                    cfield,
                    format!(
                        "form `{}` takes {} coefficients ({}), got {}",
                        form.name(),
                        names.len(),
                        names.join(", "),
                        entry.coefficients.len()
                    ),
                ));
            }
            let mut values = Vec::with_capacity(names.len());
            for name in names {
                let v = entry
                    .coefficients
                    .get(*name)
                    .ok_or_else(|| (format!("{cfield}.{name}"), "missing coefficient".to_string()))?;
                values.push(*v);
            }
            let model = SellmeierModel::new(form, values).map_err(|e| (cfield, e.to_string()))?;
            axes.push((axis, model));
        }
        let wl = Window::new(self.wavelength_window_um.0, self.wavelength_window_um.1);
        let tw = Window::new(self.temperature_window_c.0, self.temperature_window_c.1);
        MaterialDispersion::new(self.name, self.source, axes, wl, tw).map_err(|e| {
            let field = match &e {
                qpm_core::Error::EmptyWindow { field, .. } => field.to_string(),
                qpm_core::Error::MissingAxis(axis) => format!("axes.{axis}"),
                qpm_core::Error::IndexOutOfRange { axis, .. } => format!("axes.{axis}.coefficients"),
                _ => "axes".to_string(),
            };
            (field, e.to_string())
        })
    }

    pub fn from_material(material: &MaterialDispersion) -> MaterialFile {
        let axes = material
            .axes()
            .map(|(axis, model)| {
                let form = model.form();
                let coefficients =
                    form.coefficient_names().iter().map(|n| n.to_string()).zip(model.coefficients().iter().copied()).collect();
                (axis.name().to_string(), AxisEntry { form: form.name().to_string(), coefficients })
            })
            .collect();
        MaterialFile {
            name: material.name().to_string(),
            source: material.source().to_string(),
            wavelength_window_um: material.wavelength_window().as_tuple(),
            temperature_window_c: material.temperature_window().as_tuple(),
            axes,
        }
    }
}

/// Reads and validates one material file.
pub fn load_material(path: impl AsRef<Path>) -> Result<MaterialDispersion, LoadError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_path_buf(), source })?;
    let file: MaterialFile =
        serde_json::from_str(&text).map_err(|source| LoadError::Parse { path: path.to_path_buf(), source })?;
    file.into_material()
        .map_err(|(field, message)| LoadError::Field { path: path.to_path_buf(), field, message })
}

/// `*.json` files in `dir`, sorted by file name.
pub fn material_paths(dir: impl AsRef<Path>) -> Result<Vec<PathBuf>, LoadError> {
    let dir = dir.as_ref();
    let entries = fs::read_dir(dir).map_err(|source| LoadError::Io { path: dir.to_path_buf(), source })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths)
}

/// Every loadable material in `dir`. Broken files are returned as errors in
/// place so a listing can still show the good ones.
pub fn list_materials(dir: impl AsRef<Path>) -> Result<Vec<Result<MaterialDispersion, LoadError>>, LoadError> {
    Ok(material_paths(dir)?.into_iter().map(load_material).collect())
}

/// Finds a material by name (case-insensitive), matching the file stem first
/// and then the `name` field of every file.
pub fn resolve_material(dir: impl AsRef<Path>, name: &str) -> Result<MaterialDispersion, LoadError> {
    let dir = dir.as_ref();
    let paths = material_paths(dir)?;
    let stem = |p: &PathBuf| p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    if let Some(p) = paths.iter().find(|p| stem(p).eq_ignore_ascii_case(name)) {
        return load_material(p);
    }
    let mut available = Vec::new();
    for p in &paths {
        match load_material(p) {
            Ok(m) if m.name().eq_ignore_ascii_case(name) => return Ok(m),
            Ok(m) => available.push(m.name().to_string()),
            Err(_) => available.push(stem(p)),
        }
    }
    Err(LoadError::NotFound { name: name.to_string(), dir: dir.to_path_buf(), available })
}
