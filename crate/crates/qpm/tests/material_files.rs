use std::fs;
use std::path::PathBuf;

use qpm::material_file::*;
use qpm_core::dispersion::Axis;
use serde_json::{json, Value};

fn shipped() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../materials")
}

fn ppln_json() -> Value {
    serde_json::from_str(&fs::read_to_string(shipped().join("PPLN.json")).unwrap()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, value: &Value) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

#[test]
fn shipped_files_load() {
    let all = list_materials(shipped()).unwrap();
    let names: Vec<_> = all.iter().map(|m| m.as_ref().unwrap().name().to_string()).collect();
    assert_eq!(names, ["PPKTP", "PPLN", "PPSLT"]);
    let ln = load_material(shipped().join("PPLN.json")).unwrap();
    let axes: Vec<_> = ln.axes().map(|(a, _)| a).collect();
    assert_eq!(axes, [Axis::Y, Axis::Z]);
    assert!(ln.source().contains("Gayer"));
    // same numbers as the hand evaluation of the coefficient set
    let ne = ln.refractive_index(Axis::Z, 1.55, 25.0).unwrap();
    assert!((ne - 2.130703032091356).abs() < 1e-13);
}

#[test]
fn round_trip_through_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["PPLN", "PPSLT", "PPKTP"] {
        let m = load_material(shipped().join(format!("{name}.json"))).unwrap();
        let file = MaterialFile::from_material(&m);
        let path = write(&dir, "copy.json", &serde_json::to_value(&file).unwrap());
        let again = load_material(&path).unwrap();
        assert_eq!(MaterialFile::from_material(&again), file);
    }
}

#[test]
fn missing_z_axis_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    v["axes"].as_object_mut().unwrap().remove("z");
    let path = write(&dir, "noz.json", &v);
    let msg = load_material(&path).unwrap_err().to_string();
    assert!(msg.contains("noz.json"), "{msg}");
    assert!(msg.contains("axes.z"), "{msg}");
}

#[test]
fn short_coefficient_list() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    v["axes"]["y"]["coefficients"].as_object_mut().unwrap().remove("b4");
    let path = write(&dir, "short.json", &v);
    let err = load_material(&path).unwrap_err();
    let msg = err.to_string();
    assert!(matches!(err, LoadError::Field { ref field, .. } if field == "axes.y.coefficients"), "{msg}");
    assert!(msg.contains("takes 12 coefficients") && msg.contains("got 11"), "{msg}");
}

#[test]
fn renamed_coefficient() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    let c = v["axes"]["z"]["coefficients"].as_object_mut().unwrap();
    let a1 = c.remove("a1").unwrap();
    c.insert("A1".into(), a1);
    let msg = load_material(write(&dir, "renamed.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("axes.z.coefficients.a1") && msg.contains("missing"), "{msg}");
}

#[test]
fn unknown_form_and_axis() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    v["axes"]["y"]["form"] = json!("cauchy");
    let msg = load_material(write(&dir, "form.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("axes.y.form") && msg.contains("cauchy"), "{msg}");

    let mut v = ppln_json();
    let y = v["axes"]["y"].clone();
    v["axes"]["w"] = y;
    let msg = load_material(write(&dir, "axis.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("axes.w"), "{msg}");
}

#[test]
fn empty_windows() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    v["temperature_window_C"] = json!([50.0, 50.0]);
    let msg = load_material(write(&dir, "t.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("temperature_window_C"), "{msg}");
    let mut v = ppln_json();
    v["wavelength_window_um"] = json!([2.0, 1.0]);
    let msg = load_material(write(&dir, "w.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("wavelength_window_um"), "{msg}");
}

#[test]
fn parse_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{ \"name\": \"X\", ").unwrap();
    let msg = load_material(&path).unwrap_err().to_string();
    assert!(msg.contains("broken.json") && msg.contains("parse error"), "{msg}");
    let mut v = ppln_json();
    v.as_object_mut().unwrap().remove("source");
    let msg = load_material(write(&dir, "nosource.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("source"), "{msg}");
    assert!(matches!(load_material(dir.path().join("absent.json")), Err(LoadError::Io { .. })));
}

#[test]
fn nonphysical_coefficients_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    v["axes"]["z"]["coefficients"]["a1"] = json!(40.0);
    let msg = load_material(write(&dir, "big.json", &v)).unwrap_err().to_string();
    assert!(msg.contains("axes.z"), "{msg}");
}

#[test]
fn resolve_by_stem_or_name() {
    assert_eq!(resolve_material(shipped(), "ppln").unwrap().name(), "PPLN");
    let dir = tempfile::tempdir().unwrap();
    let mut v = ppln_json();
    v["name"] = json!("LN-5MgO");
    write(&dir, "lithium_niobate.json", &v);
    assert_eq!(resolve_material(dir.path(), "ln-5mgo").unwrap().name(), "LN-5MgO");
    let err = resolve_material(dir.path(), "BBO").unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("BBO") && msg.contains("available: LN-5MgO"), "{msg}");
}
