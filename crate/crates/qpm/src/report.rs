//! Rendering of curves, solutions, coincidence points and Sagnac states.
//!
//! JSON keeps full precision. Tables round periods to 3 decimals,
//! temperatures to 1 and angles to whole degrees.

use std::fmt::Write as _;

use qpm_core::coincidence::CoincidencePoint;
use qpm_core::curve::CurveSeries;
use qpm_core::jones::{BellState, TwoPhotonState, BASIS_LABELS};
use qpm_core::process::PmProcess;
use qpm_core::qpm::QpmSolution;
use qpm_core::sagnac::SagnacProcess;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report records always serialize");
    s.push('\n');
    s
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}

/// Formats a table with left-aligned columns separated by two spaces.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn degrees(rad: f64) -> f64 {
    rad.to_degrees()
}

/// Whole degrees, with `-0` folded to `0`.
fn whole_degrees(rad: f64) -> String {
    let d = degrees(rad).round();
    format!("{}", if d == 0.0 { 0.0 } else { d })
}

// curves

#[derive(Serialize)]
struct CurveRecord<'a> {
    abscissa: &'a str,
    ordinate: &'a str,
    process_tag: &'a str,
    points: &'a [(f64, f64)],
}

pub fn curve_csv(curve: &CurveSeries) -> String {
    let mut out = csv_line(&[curve.abscissa_name.clone(), curve.ordinate_name.clone()]);
    for (x, y) in &curve.points {
        out.push_str(&csv_line(&[x.to_string(), y.to_string()]));
    }
    out
}

pub fn curve_json(curve: &CurveSeries) -> String {
    json(&CurveRecord {
        abscissa: &curve.abscissa_name,
        ordinate: &curve.ordinate_name,
        process_tag: &curve.process_tag,
        points: &curve.points,
    })
}

pub fn curve_table(curve: &CurveSeries) -> String {
    let period = curve.ordinate_name.contains("period");
    let mut rows = vec![vec![curve.abscissa_name.clone(), curve.ordinate_name.clone()]];
    for &(x, y) in &curve.points {
        let y = if period { format!("{y:.3}") } else { whole_degrees(y.to_radians()) };
        rows.push(vec![format!("{x:.1}"), y]);
    }
    format!("# {}\n{}", curve.process_tag, align(&rows))
}

pub fn render_curve(curve: &CurveSeries, format: Format) -> String {
    match format {
        Format::Csv => curve_csv(curve),
        Format::Json => curve_json(curve),
        Format::Table => curve_table(curve),
    }
}

// single-process solutions

#[derive(Debug, Clone, Serialize)]
pub struct SolutionRecord {
    pub process: String,
    pub material: String,
    #[serde(rename = "type")]
    pub pm_type: String,
    pub polarizations: String,
    pub order: u32,
    #[serde(rename = "temperature_C")]
    pub temperature_c: f64,
    pub poling_period_um: f64,
    pub signal_internal_deg: f64,
    pub idler_internal_deg: f64,
    pub signal_external_deg: f64,
    pub idler_external_deg: f64,
    pub residual_rad_per_um: f64,
}

impl SolutionRecord {
    pub fn new(process: &PmProcess, s: &QpmSolution) -> Self {
        SolutionRecord {
            process: process.tag(),
            material: process.material().name().to_string(),
            pm_type: process.pm_type().label().to_string(),
            polarizations: process.polarizations().to_string(),
            order: s.order,
            temperature_c: s.temperature,
            poling_period_um: s.period,
            signal_internal_deg: degrees(s.signal_internal),
            idler_internal_deg: degrees(s.idler_internal),
            signal_external_deg: degrees(s.signal_external),
            idler_external_deg: degrees(s.idler_external),
            residual_rad_per_um: s.residual,
        }
    }
}

const SOLUTION_HEADER: [&str; 9] = [
    "temperature_C",
    "poling_period_um",
    "order",
    "signal_internal_deg",
    "idler_internal_deg",
    "signal_external_deg",
    "idler_external_deg",
    "residual_rad_per_um",
    "process",
];

pub fn render_solutions(records: &[SolutionRecord], format: Format) -> String {
    match format {
        Format::Json => json(&records),
        Format::Csv => {
            let mut out = csv_line(&SOLUTION_HEADER.map(String::from));
            for r in records {
                out.push_str(&csv_line(&[
                    r.temperature_c.to_string(),
                    r.poling_period_um.to_string(),
                    r.order.to_string(),
                    r.signal_internal_deg.to_string(),
                    r.idler_internal_deg.to_string(),
                    r.signal_external_deg.to_string(),
                    r.idler_external_deg.to_string(),
                    r.residual_rad_per_um.to_string(),
                    format!("\"{}\"", r.process),
                ]));
            }
            out
        }
        Format::Table => {
            let mut rows =
                vec![["process", "T (C)", "period (um)", "m", "internal (deg)", "exit (deg)", "residual"].map(String::from).to_vec()];
            for r in records {
                rows.push(vec![
                    r.process.clone(),
                    format!("{:.1}", r.temperature_c),
                    format!("{:.3}", r.poling_period_um),
                    r.order.to_string(),
                    pair_degrees(r.signal_internal_deg, r.idler_internal_deg),
                    pair_degrees(r.signal_external_deg, r.idler_external_deg),
                    format!("{:.1e}", r.residual_rad_per_um),
                ]);
            }
            align(&rows)
        }
    }
}

fn pair_degrees(signal: f64, idler: f64) -> String {
    let (s, i) = (whole_degrees(signal.to_radians()), whole_degrees(idler.to_radians()));
    if s == i {
        s
    } else {
        format!("{s}/{i}")
    }
}

// coincidence points

#[derive(Debug, Clone, Serialize)]
pub struct MemberRecord {
    #[serde(rename = "type")]
    pub pm_type: String,
    pub polarizations: String,
    pub order: u32,
    pub geometry: String,
    pub output_angle_deg: f64,
    pub idler_output_angle_deg: f64,
    pub internal_angle_deg: f64,
    pub residual_rad_per_um: f64,
}

/// One row group of the parameter table.
#[derive(Debug, Clone, Serialize)]
pub struct CoincidenceRecord {
    pub material: String,
    #[serde(rename = "temperature_C")]
    pub temperature_c: f64,
    pub poling_period_um: f64,
    pub residual_max_rad_per_um: f64,
    pub processes: Vec<MemberRecord>,
}

impl CoincidenceRecord {
    pub fn new(point: &CoincidencePoint) -> Self {
        let processes = point
            .members
            .iter()
            .map(|m| MemberRecord {
                pm_type: m.process.pm_type().label().to_string(),
                polarizations: m.process.polarizations().to_string(),
                order: m.process.order(),
                geometry: if m.solution.is_collinear() { "collinear" } else { "noncollinear" }.to_string(),
                output_angle_deg: degrees(m.solution.signal_external),
                idler_output_angle_deg: degrees(m.solution.idler_external),
                internal_angle_deg: degrees(m.solution.signal_internal),
                residual_rad_per_um: m.solution.residual,
            })
            .collect();
        CoincidenceRecord {
            material: point.material_name().to_string(),
            temperature_c: point.temperature,
            poling_period_um: point.period,
            residual_max_rad_per_um: point.residual_max,
            processes,
        }
    }
}

pub fn render_coincidences(records: &[CoincidenceRecord], format: Format) -> String {
    match format {
        Format::Json => json(&records),
        Format::Csv => {
            let mut out = csv_line(
                &[
                    "material",
                    "temperature_C",
                    "poling_period_um",
                    "type",
                    "polarizations",
                    "order",
                    "output_angle_deg",
                    "residual_rad_per_um",
                ]
                .map(String::from),
            );
            for r in records {
                for p in &r.processes {
                    out.push_str(&csv_line(&[
                        r.material.clone(),
                        r.temperature_c.to_string(),
                        r.poling_period_um.to_string(),
                        p.pm_type.clone(),
                        p.polarizations.clone(),
                        p.order.to_string(),
                        p.output_angle_deg.to_string(),
                        p.residual_rad_per_um.to_string(),
                    ]));
                }
            }
            out
        }
        Format::Table => {
            let mut rows = vec![["material", "T (C)", "period (um)", "type", "m", "output angle"].map(String::from).to_vec()];
            for r in records {
                for (i, p) in r.processes.iter().enumerate() {
                    let head = if i == 0 {
                        [r.material.clone(), format!("{:.1}", r.temperature_c), format!("{:.3}", r.poling_period_um)]
                    } else {
                        Default::default()
                    };
                    let mut row = head.to_vec();
                    row.push(format!("{}:{}", p.pm_type, p.polarizations));
                    row.push(p.order.to_string());
                    row.push(format!("{}°", whole_degrees(p.output_angle_deg.to_radians())));
                    rows.push(row);
                }
            }
            align(&rows)
        }
    }
}

// Sagnac states

#[derive(Debug, Clone, Serialize)]
pub struct AmplitudeRecord {
    pub ket: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FidelityRecord {
    pub bell: String,
    pub fidelity: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SagnacRecord {
    pub process: String,
    pub paths: (u8, u8),
    pub hwp_offset_deg: f64,
    pub pump_phase_rad: f64,
    pub amplitudes: Vec<AmplitudeRecord>,
    pub fidelities: Vec<FidelityRecord>,
}

impl SagnacRecord {
    pub fn new(process: SagnacProcess, hwp_offset: f64, pump_phase: f64, state: &TwoPhotonState) -> Self {
        let (p1, p2) = state.paths();
        let amplitudes = BASIS_LABELS
            .iter()
            .zip(state.amplitudes())
            .map(|(label, a)| AmplitudeRecord { ket: format!("|{label}>_{p1}{p2}"), re: a.re, im: a.im })
            .collect();
        let fidelities = BellState::ALL
            .iter()
            .map(|b| FidelityRecord {
                bell: b.label().to_string(),
                fidelity: state.fidelity(&b.state(state.paths())).expect("both states are normalized"),
            })
            .collect();
        SagnacRecord {
            process: process.name().to_string(),
            paths: state.paths(),
            hwp_offset_deg: hwp_offset.to_degrees(),
            pump_phase_rad: pump_phase,
            amplitudes,
            fidelities,
        }
    }

    /// Bell state with the largest fidelity.
    pub fn best(&self) -> &FidelityRecord {
        self.fidelities.iter().max_by(|a, b| a.fidelity.total_cmp(&b.fidelity)).expect("four Bell states")
    }
}

/// Amplitudes and fidelities below this print as zero in tables.
const SHOW_ZERO: f64 = 5e-13;

fn clean(x: f64) -> f64 {
    if x.abs() < SHOW_ZERO {
        0.0
    } else {
        x
    }
}

pub fn render_sagnac(record: &SagnacRecord, format: Format) -> String {
    match format {
        Format::Json => json(record),
        Format::Csv => {
            let mut out = csv_line(&["kind", "label", "re", "im"].map(String::from));
            for a in &record.amplitudes {
                out.push_str(&csv_line(&["amplitude".into(), a.ket.clone(), a.re.to_string(), a.im.to_string()]));
            }
            for f in &record.fidelities {
                out.push_str(&csv_line(&["fidelity".into(), f.bell.clone(), f.fidelity.to_string(), "0".into()]));
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "# {} paths {},{} hwp offset {} deg, pump phase {} rad\n",
                record.process, record.paths.0, record.paths.1, record.hwp_offset_deg, record.pump_phase_rad
            );
            let mut rows = vec![["ket", "re", "im"].map(String::from).to_vec()];
            for a in &record.amplitudes {
                rows.push(vec![a.ket.clone(), format!("{:+.6}", clean(a.re)), format!("{:+.6}", clean(a.im))]);
            }
            out.push_str(&align(&rows));
            out.push('\n');
            let mut rows = vec![["bell", "fidelity"].map(String::from).to_vec()];
            for f in &record.fidelities {
                rows.push(vec![f.bell.clone(), format!("{:.6}", clean(f.fidelity))]);
            }
            out.push_str(&align(&rows));
            let _ = writeln!(out, "best: {}", record.best().bell);
            out
        }
    }
}
