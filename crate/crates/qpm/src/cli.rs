//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpm_core::coincidence::{
    evaluate_operating_point, find_dual_type, find_triple_type, CoincidencePoint, CoincidenceSettings,
};
use qpm_core::curve::{angle_vs_temperature_curve, period_vs_temperature_curve};
use qpm_core::dispersion::MaterialDispersion;
use qpm_core::process::{Geometry, PmProcess, PmType, Polarizations, Wavelengths};
use qpm_core::qpm::{
    collinear_solution_at, phase_mismatch_collinear, solution_at, solve_collinear_point, solve_temperature_collinear,
    SolverSettings,
};
use qpm_core::sagnac::{build_sagnac_state, SagnacProcess};
use thiserror::Error;

use crate::material_file::{list_materials, resolve_material, LoadError};
use crate::report::{self, CoincidenceRecord, Format, SagnacRecord, SolutionRecord};

#[derive(Debug, Parser)]
#[command(name = "qpm", version, about = "Quasi-phase-matching operating points for periodically poled crystals")]
pub struct Cli {
    /// Directory holding the material JSON files.
    #[arg(long, global = true, default_value = "materials")]
    pub materials_dir: PathBuf,
    /// Output format (curve defaults to csv, everything else to table).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Root-finder target |dk| in rad/um.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poling period or exit angle against temperature.
    Curve(CurveArgs),
    /// Solve for the period at a temperature or the temperatures for a period.
    Solve(SolveArgs),
    /// Points where two or three processes phase-match together.
    Coincide(CoincideArgs),
    /// Two-photon state from the Sagnac source.
    Sagnac(SagnacArgs),
    /// Material database.
    #[command(subcommand)]
    Materials(MaterialsCommand),
}

#[derive(Debug, Subcommand)]
pub enum MaterialsCommand {
    List,
}

#[derive(Debug, Args)]
pub struct ProcessArgs {
    #[arg(long)]
    pub material: String,
    /// 0, I or II.
    #[arg(long = "type", value_parser = parse_type)]
    pub pm_type: PmType,
    /// pump:signal,idler in o/e notation, e.g. o:e,o. Defaults per type.
    #[arg(long)]
    pub pols: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub order: u32,
    /// Pump wavelength, um.
    #[arg(long, default_value_t = qpm_core::process::DEFAULT_PUMP_UM)]
    pub pump: f64,
    /// Signal wavelength, um (idler follows from energy conservation).
    #[arg(long)]
    pub signal: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveKind {
    Period,
    Angle,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub process: ProcessArgs,
    #[arg(long, value_enum, default_value_t = CurveKind::Period)]
    pub kind: CurveKind,
    /// Temperature range lo:hi in C (default: the material window).
    #[arg(long = "t", value_parser = parse_range)]
    pub range: Option<(f64, f64)>,
    #[arg(long, default_value_t = 501)]
    pub points: usize,
    /// Poling period for angle curves, um.
    #[arg(long)]
    pub period: Option<f64>,
    /// Internal angle ceiling, degrees.
    #[arg(long)]
    pub theta_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub process: ProcessArgs,
    /// Temperature in C; solves for the period.
    #[arg(long)]
    pub temperature: Option<f64>,
    /// Poling period in um; solves for the temperature.
    #[arg(long)]
    pub period: Option<f64>,
    /// Search range lo:hi in C for temperature solves (default: the material window).
    #[arg(long = "t", value_parser = parse_range)]
    pub range: Option<(f64, f64)>,
    #[arg(long)]
    pub theta_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CoincideArgs {
    #[arg(long)]
    pub material: String,
    /// TYPE[/POLS[/ORDER]], e.g. II/o:e,o/2. Two specs run a dual search
    /// (first collinear, second non-collinear); three run a triple search.
    #[arg(long = "process", required = true)]
    pub processes: Vec<String>,
    #[arg(long, default_value_t = qpm_core::process::DEFAULT_PUMP_UM)]
    pub pump: f64,
    /// Temperature range lo:hi in C (default: the material window).
    #[arg(long = "t", value_parser = parse_range)]
    pub range: Option<(f64, f64)>,
    /// Accepted companion exit angles lo:hi in degrees.
    #[arg(long, value_parser = parse_range, default_value = "0:20")]
    pub window: (f64, f64),
    #[arg(long, default_value_t = qpm_core::coincidence::DEFAULT_TEMPERATURE_STEP)]
    pub step: f64,
    #[arg(long, default_value_t = qpm_core::coincidence::DEFAULT_PERIOD_TOLERANCE)]
    pub period_tolerance: f64,
    /// Keep only the point closest to this temperature.
    #[arg(long, conflicts_with = "near_period")]
    pub near_temperature: Option<f64>,
    /// Keep only the point closest to this period.
    #[arg(long)]
    pub near_period: Option<f64>,
    /// Evaluate every process non-collinearly at a fixed temperature...
    #[arg(long, requires = "at_period", conflicts_with_all = ["near_temperature", "near_period"])]
    pub at_temperature: Option<f64>,
    /// ...and period.
    #[arg(long, requires = "at_temperature")]
    pub at_period: Option<f64>,
    #[arg(long)]
    pub theta_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SagnacArgs {
    /// type0, typeI or typeII.
    #[arg(long, value_parser = parse_sagnac)]
    pub process: SagnacProcess,
    /// Output half-wave plate rotation, degrees.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub hwp_offset: f64,
    /// Pump phase in radians; accepts pi, -pi/2, 2pi and the like.
    #[arg(long, default_value = "0", value_parser = parse_angle, allow_hyphen_values = true)]
    pub phase: f64,
}

pub fn parse_type(s: &str) -> Result<PmType, String> {
    let t = s.to_ascii_lowercase();
    let t = t.strip_prefix("type").unwrap_or(&t);
    let t = t.trim_start_matches(['-', '_']);
    match t {
        "0" => Ok(PmType::Type0),
        "i" | "1" => Ok(PmType::TypeI),
        "ii" | "2" => Ok(PmType::TypeII),
        _ => Err(format!("unknown QPM type `{s}`, expected 0, I or II")),
    }
}

pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("range `{s}` should look like lo:hi"))?;
    let lo: f64 = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let hi: f64 = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if !(lo < hi) {
        return Err(format!("range `{s}` is empty"));
    }
    Ok((lo, hi))
}

fn parse_sagnac(s: &str) -> Result<SagnacProcess, String> {
    SagnacProcess::from_name(s).ok_or_else(|| format!("unknown Sagnac process `{s}`, expected type0, typeI or typeII"))
}

/// Radians, with optional multiples and fractions of pi.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let Some(at) = t.find("pi") else {
        return t.parse().map_err(|_| format!("bad angle `{s}`"));
    };
    let (head, tail) = (&t[..at], &t[at + 2..]);
    let factor = match head.trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| format!("bad angle `{s}`"))?,
    };
    let divisor = match tail {
        "" => 1.0,
        d => d.strip_prefix('/').and_then(|d| d.parse::<f64>().ok()).ok_or_else(|| format!("bad angle `{s}`"))?,
    };
    Ok(factor * std::f64::consts::PI / divisor)
}

/// Default polarizations per type, all o-pumped.
pub fn default_pols(pm_type: PmType) -> &'static str {
    match pm_type {
        PmType::Type0 => "o:o,o",
        PmType::TypeI => "o:e,e",
        PmType::TypeII => "o:e,o",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Domain,
    Material,
    NoSolution,
    Io,
}

impl ErrorKind {
    pub fn code(self) -> &'static str {
        match self {
            ErrorKind::Usage => "usage",
            ErrorKind::Domain => "domain",
            ErrorKind::Material => "material",
            ErrorKind::NoSolution => "no-solution",
            ErrorKind::Io => "io",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Usage => 2,
            ErrorKind::Domain | ErrorKind::Material | ErrorKind::Io => 3,
            ErrorKind::NoSolution => 4,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Solver(#[from] qpm_core::Error),
    #[error("{0}")]
    NoSolution(String),
    #[error("{path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn kind(&self) -> ErrorKind {
        use qpm_core::Error as E;
        match self {
            CliError::Usage(_) => ErrorKind::Usage,
            CliError::Load(_) => ErrorKind::Material,
            CliError::NoSolution(_) => ErrorKind::NoSolution,
            CliError::Output { .. } => ErrorKind::Io,
            CliError::Solver(e) => match e {
                E::MissingAxis(_)
                | E::UnknownForm(_)
                | E::CoefficientCount { .. }
                | E::EmptyWindow { .. }
                | E::IndexOutOfRange { .. } => ErrorKind::Material,
                E::InvalidProcess(_) | E::InvalidArgument(_) | E::NotDistinct | E::Incompatible(_) => ErrorKind::Usage,
                E::NoForwardQpm { .. } | E::NoNonCollinearSolution { .. } | E::NoSolution(_) => ErrorKind::NoSolution,
                _ => ErrorKind::Domain,
            },
        }
    }
}

/// What a successful command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub text: String,
    pub warnings: Vec<String>,
}

struct Context<'a> {
    cli: &'a Cli,
    solver: SolverSettings,
}

impl Context<'_> {
    fn material(&self, name: &str) -> Result<Arc<MaterialDispersion>, CliError> {
        Ok(Arc::new(resolve_material(&self.cli.materials_dir, name)?))
    }

    fn solver_with(&self, theta_max_deg: Option<f64>) -> Result<SolverSettings, CliError> {
        let mut s = self.solver;
        if let Some(deg) = theta_max_deg {
            if !(deg > 0.0 && deg < 90.0) {
                return Err(CliError::Usage(format!("--theta-max must lie in (0, 90) degrees, got {deg}")));
            }
            s.theta_max = deg.to_radians();
        }
        Ok(s)
    }

    fn format(&self, default: Format) -> Format {
        self.cli.format.unwrap_or(default)
    }
}

fn build_process(
    material: &Arc<MaterialDispersion>,
    pm_type: PmType,
    pols: Option<&str>,
    order: u32,
    pump: f64,
    signal: Option<f64>,
    geometry: Geometry,
) -> Result<PmProcess, CliError> {
    let text = pols.unwrap_or(default_pols(pm_type));
    let pols = Polarizations::parse(text)
        .ok_or_else(|| CliError::Usage(format!("polarizations `{text}` should look like o:e,o")))?;
    let wavelengths = match signal {
        Some(s) => Wavelengths::from_pump_signal(pump, s).map_err(|e| CliError::Usage(e.to_string()))?,
        None => Wavelengths::degenerate(pump),
    };
    PmProcess::new(material.clone(), pm_type, pols, wavelengths, order, geometry).map_err(|e| CliError::Usage(e.to_string()))
}

fn process_from_args(ctx: &Context, args: &ProcessArgs, geometry: Geometry) -> Result<PmProcess, CliError> {
    let material = ctx.material(&args.material)?;
    build_process(&material, args.pm_type, args.pols.as_deref(), args.order, args.pump, args.signal, geometry)
}

/// `TYPE[/POLS[/ORDER]]`.
pub fn parse_process_spec(spec: &str) -> Result<(PmType, Option<String>, u32), String> {
    let mut parts = spec.split('/');
    let pm_type = parse_type(parts.next().unwrap_or(""))?;
    let pols = parts.next().filter(|p| !p.is_empty()).map(str::to_string);
    let order = match parts.next() {
        Some(o) => o.parse().map_err(|_| format!("bad order `{o}` in process `{spec}`"))?,
        None => 1,
    };
    if parts.next().is_some() {
        return Err(format!("process `{spec}` should look like TYPE/POLS/ORDER"));
    }
    Ok((pm_type, pols, order))
}

fn window_range(material: &MaterialDispersion, range: Option<(f64, f64)>) -> (f64, f64) {
    range.unwrap_or_else(|| material.temperature_window().as_tuple())
}

fn cmd_curve(ctx: &Context, args: &CurveArgs) -> Result<Outcome, CliError> {
    let range = |p: &PmProcess| window_range(p.material(), args.range);
    let curve = match args.kind {
        CurveKind::Period => {
            if args.period.is_some() {
                return Err(CliError::Usage("--period only applies to --kind angle".into()));
            }
            let p = process_from_args(ctx, &args.process, Geometry::Collinear)?;
            period_vs_temperature_curve(&p, range(&p), args.points)?
        }
        CurveKind::Angle => {
            let period = args.period.ok_or_else(|| CliError::Usage("--kind angle needs --period".into()))?;
            let p = process_from_args(ctx, &args.process, Geometry::NonCollinear)?;
            angle_vs_temperature_curve(&p, period, range(&p), args.points, &ctx.solver_with(args.theta_max)?)?
        }
    };
    let mut out = Outcome { text: report::render_curve(&curve, ctx.format(Format::Csv)), warnings: vec![] };
    if curve.points.is_empty() {
        out.warnings.push(format!("no solutions for {} in the requested range; the curve is empty", curve.process_tag));
    }
    Ok(out)
}

fn cmd_solve(ctx: &Context, args: &SolveArgs) -> Result<Outcome, CliError> {
    let solver = ctx.solver_with(args.theta_max)?;
    let format = ctx.format(Format::Table);
    let records = match (args.temperature, args.period) {
        (Some(t), None) => {
            let p = process_from_args(ctx, &args.process, Geometry::Collinear)?;
            vec![SolutionRecord::new(&p, &solve_collinear_point(&p, t)?)]
        }
        (None, Some(period)) => {
            let p = process_from_args(ctx, &args.process, Geometry::Collinear)?;
            let range = window_range(p.material(), args.range);
            let roots = solve_temperature_collinear(&p, period, range, &solver)?;
            if roots.is_empty() {
                return Err(CliError::NoSolution(no_root_diagnostics(&p, period, range, &solver)?));
            }
            roots
                .iter()
                .map(|&t| collinear_solution_at(&p, t, period).map(|s| SolutionRecord::new(&p, &s)))
                .collect::<Result<_, _>>()?
        }
        (Some(t), Some(period)) => {
            let p = process_from_args(ctx, &args.process, Geometry::NonCollinear)?;
            vec![SolutionRecord::new(&p, &solution_at(&p, t, period, &solver)?)]
        }
        (None, None) => return Err(CliError::Usage("solve needs --temperature, --period or both".into())),
    };
    Ok(Outcome { text: report::render_solutions(&records, format), warnings: vec![] })
}

fn no_root_diagnostics(p: &PmProcess, period: f64, range: (f64, f64), solver: &SolverSettings) -> Result<String, CliError> {
    let cells = solver.scan_intervals.max(1);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..=cells {
        let t = range.0 + (range.1 - range.0) * i as f64 / cells as f64;
        let dk = phase_mismatch_collinear(p, t, period)?;
        lo = lo.min(dk);
        hi = hi.max(dk);
    }
    Ok(format!(
        "no phase-matching temperature for {p} at period {period} um in [{}, {}] C: dk stays within [{lo:.6e}, {hi:.6e}] rad/um over {cells} scan cells",
        range.0, range.1
    ))
}

fn cmd_coincide(ctx: &Context, args: &CoincideArgs) -> Result<Outcome, CliError> {
    let material = ctx.material(&args.material)?;
    let solver = ctx.solver_with(args.theta_max)?;
    let settings =
        CoincidenceSettings { temperature_step: args.step, period_tolerance: args.period_tolerance, solver };
    let specs: Vec<_> =
        args.processes.iter().map(|s| parse_process_spec(s).map_err(CliError::Usage)).collect::<Result<_, _>>()?;
    let build = |i: usize, geometry| {
        let (t, pols, order) = &specs[i];
        build_process(&material, *t, pols.as_deref(), *order, args.pump, None, geometry)
    };
    let range = window_range(&material, args.range);

    let points: Vec<CoincidencePoint> = if let (Some(t), Some(period)) = (args.at_temperature, args.at_period) {
        if specs.len() < 2 {
            return Err(CliError::Usage(format!("coincide needs 2 or 3 --process specs, got {}", specs.len())));
        }
        let procs: Vec<_> = (0..specs.len()).map(|i| build(i, Geometry::NonCollinear)).collect::<Result<_, _>>()?;
        vec![evaluate_operating_point(&procs, t, period, &solver)?]
    } else {
        match specs.len() {
            2 => {
                let anchor = build(0, Geometry::Collinear)?;
                let companion = build(1, Geometry::NonCollinear)?;
                find_dual_type(&anchor, &companion, range, args.window, &settings)?
            }
            3 => {
                let procs: Vec<_> = (0..3).map(|i| build(i, Geometry::Collinear)).collect::<Result<_, _>>()?;
                find_triple_type(&procs, range, &settings)?
            }
            n => return Err(CliError::Usage(format!("coincide needs 2 or 3 --process specs, got {n}"))),
        }
    };
    let points = select_nearest(points, args.near_temperature, args.near_period);

    let records: Vec<_> = points.iter().map(CoincidenceRecord::new).collect();
    let format = ctx.format(Format::Table);
    let mut out = Outcome::default();
    if records.is_empty() {
        out.warnings.push("no coincidence found".into());
        if format == Format::Table {
            out.text = "no coincidence found\n".into();
            return Ok(out);
        }
    }
    out.text = report::render_coincidences(&records, format);
    Ok(out)
}

fn select_nearest(points: Vec<CoincidencePoint>, temperature: Option<f64>, period: Option<f64>) -> Vec<CoincidencePoint> {
    let key: Box<dyn Fn(&CoincidencePoint) -> f64> = match (temperature, period) {
        (Some(t), _) => Box::new(move |p| (p.temperature - t).abs()),
        (None, Some(l)) => Box::new(move |p| (p.period - l).abs()),
        (None, None) => return points,
    };
    points.into_iter().min_by(|a, b| key(a).total_cmp(&key(b))).into_iter().collect()
}

fn cmd_sagnac(ctx: &Context, args: &SagnacArgs) -> Result<Outcome, CliError> {
    let offset = args.hwp_offset.to_radians();
    let state = build_sagnac_state(args.process, offset, args.phase);
    let record = SagnacRecord::new(args.process, offset, args.phase, &state);
    Ok(Outcome { text: report::render_sagnac(&record, ctx.format(Format::Table)), warnings: vec![] })
}

fn cmd_materials_list(ctx: &Context) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    let mut rows = Vec::new();
    for entry in list_materials(&ctx.cli.materials_dir)? {
        match entry {
            Ok(m) => rows.push(m),
            Err(e) => out.warnings.push(e.to_string()),
        }
    }
    out.text = match ctx.format(Format::Table) {
        Format::Json => {
            let files: Vec<_> = rows.iter().map(crate::material_file::MaterialFile::from_material).collect();
            let mut s = serde_json::to_string_pretty(&files).expect("material files serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("name,axes,wavelength_min_um,wavelength_max_um,temperature_min_C,temperature_max_C\n");
            for m in &rows {
                let (wl, tw) = (m.wavelength_window(), m.temperature_window());
                let axes: String = m.axes().map(|(a, _)| a.name()).collect();
                s.push_str(&format!("{},{axes},{},{},{},{}\n", m.name(), wl.min, wl.max, tw.min, tw.max));
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for m in &rows {
                let (wl, tw) = (m.wavelength_window(), m.temperature_window());
                let axes: Vec<_> = m.axes().map(|(a, _)| a.name()).collect();
                s.push_str(&format!(
                    "{:<6} axes {:<5} {}-{} um  {}-{} C  {}\n",
                    m.name(),
                    axes.join(","),
                    wl.min,
                    wl.max,
                    tw.min,
                    tw.max,
                    m.source()
                ));
            }
            s
        }
    };
    Ok(out)
}

/// Runs a parsed command without touching stdout or the file system output.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut solver = SolverSettings::default();
    if let Some(tol) = cli.tolerance {
        if !(tol > 0.0) {
            return Err(CliError::Usage(format!("--tolerance must be positive, got {tol}")));
        }
        solver.tolerance = tol;
    }
    let ctx = Context { cli, solver };
    match &cli.command {
        Command::Curve(a) => cmd_curve(&ctx, a),
        Command::Solve(a) => cmd_solve(&ctx, a),
        Command::Coincide(a) => cmd_coincide(&ctx, a),
        Command::Sagnac(a) => cmd_sagnac(&ctx, a),
        Command::Materials(MaterialsCommand::List) => cmd_materials_list(&ctx),
    }
}

fn one_line(text: &str) -> String {
    let text = text.split("\n\nUsage:").next().unwrap_or(text);
    let text = text.split("\n\nFor more information").next().unwrap_or(text);
    let text = text.trim().strip_prefix("error:").unwrap_or(text).trim();
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn report_error(stderr: &mut dyn Write, kind: ErrorKind, message: &str) -> i32 {
    let _ = writeln!(stderr, "error[{}]: {}", kind.code(), one_line(message));
    kind.exit_code()
}

/// Parses `args` (program name first), runs the command and writes the
/// result. Returns the process exit code.
pub fn execute<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            if e.kind() == K::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = write!(stderr, "{e}");
                let _ = writeln!(stderr, "error[usage]: missing subcommand");
                return ErrorKind::Usage.exit_code();
            }
            return report_error(stderr, ErrorKind::Usage, &e.to_string());
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => return report_error(stderr, e.kind(), &e.to_string()),
    };
    for w in &outcome.warnings {
        let _ = writeln!(stderr, "warning: {}", one_line(w));
    }
    match &cli.out {
        Some(path) => {
            if let Err(source) = fs::write(path, &outcome.text) {
                let e = CliError::Output { path: path.clone(), source };
                return report_error(stderr, e.kind(), &e.to_string());
            }
        }
        None => {
            if let Err(e) = stdout.write_all(outcome.text.as_bytes()) {
                return report_error(stderr, ErrorKind::Io, &e.to_string());
            }
        }
    }
    0
}
