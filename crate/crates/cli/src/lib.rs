//! Batch front-end for the `openbook` binary.
//!
//! Exit codes: 0 success, 2 parse error, 3 computation error or
//! inconsistent input data, 4 when every result is inconclusive.

pub mod problem;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use openbook_core::fdtc::{self, FdtcOptions};
use openbook_core::foliation::bounds::{aggregate_bounds, elliptic_point_bounds, multi_point_bounds, Mode};
use openbook_core::foliation::otdisc::transverse_ot_disc_check;
use openbook_core::foliation::{bc_annulus_witness, self_linking};
use openbook_core::surface::{admissible_values, denominator_bound, NtType};
use openbook_core::topology::{self, BraidGenusInputs, Conclusion};
use openbook_core::Rational;
use serde_json::{json, Value};
use thiserror::Error;

pub use problem::{parse_coefficients, parse_problem, ProblemFile};
pub use report::{Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Compute(#[from] openbook_core::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => EXIT_PARSE,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "openbook", version, about = "Fractional Dehn twist coefficients, open book foliations and the criteria built on them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add wall-clock time to the report (breaks byte-for-byte determinism).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    #[command(subcommand)]
    Fdtc(FdtcCommand),
    #[command(subcommand)]
    Foliation(FoliationCommand),
    /// Topological verdicts from a table of twist coefficients.
    Classify {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, value_parser = parse_nt)]
        nt_type: NtType,
        #[arg(long)]
        tight: bool,
        /// Read the coefficients as those of a closed braid; verdicts then concern its complement.
        #[arg(long)]
        braid_mode: bool,
        /// Treat the (single) coefficient as that of a connected boundary.
        #[arg(long)]
        connected: bool,
    },
    /// A-priori bounds on |c| from surfaces in the 3-manifold.
    #[command(subcommand)]
    Bound(BoundCommand),
    #[command(subcommand)]
    Surface(SurfaceCommand),
}

#[derive(Debug, Clone, clap::Args)]
pub struct FdtcArgs {
    pub file: PathBuf,
    /// Boundary component (defaults to the problem's, else the first).
    #[arg(long)]
    pub boundary: Option<String>,
    /// Cap on the iteration count; also read from FDTC_MAX_N.
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Word-length bound when searching for a probe arc.
    #[arg(long)]
    pub probe_bound: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum FdtcCommand {
    /// Exact value when it can be certified, else the best interval.
    Exact(FdtcArgs),
    /// Interval from N iterates on the default probe arc.
    Interval {
        #[command(flatten)]
        args: FdtcArgs,
        #[arg(long = "n")]
        n: u64,
    },
    /// Braid coefficient (normalised by the permutation order).
    Braid(FdtcArgs),
    /// Quasimorphism defect and conjugation invariance for the first two words.
    Audit(FdtcArgs),
    /// Right-veering test: coefficient sign, then a search for a left-moving arc.
    RightVeering {
        #[command(flatten)]
        args: FdtcArgs,
        #[arg(long, default_value_t = 4)]
        weight_bound: usize,
        #[arg(long, value_parser = parse_nt)]
        nt_type: Option<NtType>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FoliationCommand {
    /// Structural consistency, counts, Euler characteristic and self-linking.
    Check { file: PathBuf },
    /// Twist-coefficient estimates from elliptic points.
    Bounds {
        file: PathBuf,
        /// Comma-separated elliptic point ids.
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Monodromy)]
        mode: ModeArg,
    },
    /// Transverse overtwisted disc certificate.
    Otdisc { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BoundCommand {
    /// Bound forced by a closed incompressible surface meeting the binding in 2n points.
    ClosedSurface {
        #[arg(long)]
        genus: u32,
        #[arg(long = "n")]
        n: u64,
        #[arg(long)]
        connected: bool,
    },
    /// Bound for a closed braid bounding a surface of Euler characteristic chi.
    BraidGenus {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long, default_value_t = 0)]
        k: u64,
        #[arg(long)]
        braid_index: u64,
        #[arg(long)]
        connected: bool,
    },
    /// Knot genus lower bound from the smallest |c|.
    KnotGenus {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        min_abs_c: Rational,
    },
}

#[derive(Debug, Subcommand)]
pub enum SurfaceCommand {
    /// Rose model, boundary words and denominator bounds.
    Info { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Monodromy,
    Braid,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Monodromy => Mode::Monodromy,
            ModeArg::Braid => Mode::Braid,
        }
    }
}

fn parse_nt(s: &str) -> Result<NtType, String> {
    s.parse().map_err(|e: openbook_core::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    openbook_core::fdtc::rational::parse(s).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ProblemFile, CliError> {
    parse_problem(&read(path)?)
}

fn options(args: &FdtcArgs) -> FdtcOptions {
    let mut o = FdtcOptions::default();
    if let Some(n) = std::env::var("FDTC_MAX_N").ok().and_then(|v| v.parse().ok()) {
        o.max_n = n;
    }
    if let Some(n) = args.max_n {
        o.max_n = n;
    }
    if let Some(b) = args.probe_bound {
        o.probe_bound = b;
    }
    o
}

/// Output of one command before rendering.
pub struct Outcome {
    pub report: Report,
    pub inconclusive: bool,
    /// Input was read but found inconsistent.
    pub invalid: bool,
}

impl Outcome {
    fn ok(report: Report) -> Outcome {
        Outcome { report, inconclusive: false, invalid: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.invalid {
            EXIT_COMPUTE
        } else if self.inconclusive {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    }
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Fdtc(f) => run_fdtc(f),
        Command::Foliation(f) => run_foliation(f),
        Command::Classify { coeffs, nt_type, tight, braid_mode, connected } => {
            let mut a = parse_coefficients(&read(coeffs)?)?;
            if *braid_mode {
                a.mode = Mode::Braid;
            }
            if *connected {
                a = topology::CoefficientAssignment::new(a.coeffs, a.mode, true)?;
            }
            let mut verdicts = vec![
                ("irreducibility", topology::irreducibility_verdict(&a)),
                ("atoroidality", topology::atoroidality_verdict(&a, *nt_type, *tight)),
                ("geometry", topology::geometry_verdict(&a, *nt_type)),
            ];
            if a.mode == Mode::Monodromy {
                verdicts.push(("stabilization", topology::stabilization_obstruction(&a)?));
            }
            let inconclusive = verdicts.iter().all(|(_, v)| v.conclusion == Conclusion::Inconclusive);
            let mut result = serde_json::Map::new();
            result.insert("assignment".into(), to_value(&a));
            for (k, v) in &verdicts {
                result.insert((*k).into(), to_value(v));
            }
            let mut report = Report::new("classify", Value::Object(result));
            report.warn(format!("Nielsen-Thurston type {nt_type:?} is caller-asserted"));
            if *tight {
                report.warn("tightness is caller-asserted");
            }
            Ok(Outcome { report, inconclusive, invalid: false })
        }
        Command::Bound(b) => run_bound(b),
        Command::Surface(SurfaceCommand::Info { file }) => {
            let p = load(file)?;
            let s = p.surface()?;
            let comps: Vec<Value> = s
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "label": c.label,
                        "kind": to_value(&c.kind),
                        "boundary_word": s.format_word(&s.boundary_word(i)),
                    })
                })
                .collect();
            let mut admissible = serde_json::Map::new();
            for nt in [NtType::Periodic, NtType::PseudoAnosov, NtType::Reducible, NtType::Unknown] {
                let v = match admissible_values(&s.spec, nt) {
                    Ok(d) => json!(d.max),
                    Err(e) => json!(e.to_string()),
                };
                admissible.insert(format!("{nt:?}"), v);
            }
            Ok(Outcome::ok(Report::new(
                "surface info",
                json!({
                    "spec": to_value(&s.spec),
                    "euler_characteristic": s.spec.euler_characteristic(),
                    "generators": s.generators,
                    "components": comps,
                    "denominator_bound": to_value(&denominator_bound(&s.spec)),
                    "max_denominator": Value::Object(admissible),
                }),
            )))
        }
    }
}

fn run_fdtc(f: &FdtcCommand) -> Result<Outcome, CliError> {
    let args = match f {
        FdtcCommand::Exact(a) | FdtcCommand::Braid(a) | FdtcCommand::Audit(a) => a,
        FdtcCommand::Interval { args, .. } | FdtcCommand::RightVeering { args, .. } => args,
    };
    let p = load(&args.file)?;
    let s = p.surface()?;
    let label = p.boundary_label(args.boundary.as_deref())?;
    let opts = options(args);
    let words = p.words_or_identity()?;
    let mut inconclusive = true;
    let (name, results): (&str, Vec<Value>) = match f {
        FdtcCommand::Exact(_) | FdtcCommand::Braid(_) => {
            let braid = matches!(f, FdtcCommand::Braid(_));
            let mut out = Vec::new();
            for w in &words {
                let r = if braid { fdtc::braid_fdtc_with(s, w, &label, &opts)? } else { fdtc::fdtc_exact_with(s, w, &label, &opts)? };
                inconclusive &= r.value.is_none();
                out.push(json!({ "word": w.label(), "boundary": label, "fdtc": to_value(&r) }));
            }
            (if braid { "fdtc braid" } else { "fdtc exact" }, out)
        }
        FdtcCommand::Interval { n, .. } => {
            let comp = s.boundary_component(&label)?;
            let gamma = fdtc::default_probe(s, comp, opts.probe_bound)
                .ok_or_else(|| openbook_core::Error::Precondition(format!("no essential arc on {label}")))?;
            let mut out = Vec::new();
            for w in &words {
                let i = fdtc::key_lemma_interval_with(s, w, &label, &gamma, *n, &opts)?;
                out.push(json!({
                    "word": w.label(),
                    "boundary": label,
                    "N": n,
                    "gamma": openbook_core::mcg::describe_arc(s, &gamma),
                    "interval": to_value(&i),
                    "provenance": "KeyLemma",
                }));
            }
            inconclusive = false;
            ("fdtc interval", out)
        }
        FdtcCommand::Audit(_) => {
            if words.len() < 2 {
                return Err(CliError::Parse("audit needs two words".into()));
            }
            let a = fdtc::quasimorphism_audit(s, &words[0], &words[1], &label)?;
            inconclusive = false;
            ("fdtc audit", vec![json!({ "words": [words[0].label(), words[1].label()], "boundary": label, "audit": to_value(&a) })])
        }
        FdtcCommand::RightVeering { weight_bound, nt_type, .. } => {
            let nt = nt_type.or(p.nt_type).unwrap_or(NtType::Unknown);
            let mut out = Vec::new();
            for w in &words {
                let r = fdtc::right_veering_test(s, w, &label, *weight_bound, nt)?;
                inconclusive &= matches!(r, fdtc::RightVeering::NoWitnessUpToBound { .. });
                out.push(json!({ "word": w.label(), "boundary": label, "right_veering": to_value(&r) }));
            }
            ("fdtc right-veering", out)
        }
    };
    let mut report = Report::new(name, Value::Array(results));
    report.warn("probe arcs are checked for essentiality combinatorially; the Nielsen-Thurston type is never inferred");
    Ok(Outcome { report, inconclusive, invalid: false })
}

fn run_foliation(f: &FoliationCommand) -> Result<Outcome, CliError> {
    let essential_warning = "essentiality of elliptic points is caller-asserted";
    match f {
        FoliationCommand::Check { file } => {
            let p = load(file)?;
            let g = p.foliation()?;
            let violations = g.validate();
            let counts = g.counts();
            let sl = self_linking(&counts, g.surface.closed).ok();
            let mut report = Report::new(
                "foliation check",
                json!({
                    "valid": violations.is_empty(),
                    "violations": violations,
                    "counts": to_value(&counts),
                    "euler_characteristic": { "surface": g.surface.euler_characteristic(), "singularities": counts.euler_characteristic() },
                    "self_linking": sl,
                    "bc_annulus": to_value(&bc_annulus_witness(g)),
                }),
            );
            report.warn(essential_warning);
            Ok(Outcome { report, inconclusive: false, invalid: !violations.is_empty() })
        }
        FoliationCommand::Bounds { file, points, mode } => {
            let p = load(file)?;
            let g = p.foliation()?;
            let mode = Mode::from(*mode);
            let per_point = points
                .iter()
                .map(|id| Ok(json!({ "point": id, "bound": to_value(&elliptic_point_bounds(g, id, mode)?) })))
                .collect::<Result<Vec<_>, openbook_core::Error>>()?;
            let mut result = json!({ "mode": to_value(&mode), "points": per_point });
            if points.len() > 1 {
                result["combined"] = to_value(&multi_point_bounds(g, points, mode)?);
                result["aggregate"] = to_value(&aggregate_bounds(g, points, mode)?);
            }
            let mut report = Report::new("foliation bounds", result);
            report.warn(essential_warning);
            Ok(Outcome::ok(report))
        }
        FoliationCommand::Otdisc { file } => {
            let p = load(file)?;
            let g = p.foliation()?;
            let r = transverse_ot_disc_check(g);
            let inconclusive = !r.valid;
            Ok(Outcome { report: Report::new("foliation otdisc", to_value(&r)), inconclusive, invalid: false })
        }
    }
}

fn run_bound(b: &BoundCommand) -> Result<Outcome, CliError> {
    match b {
        BoundCommand::ClosedSurface { genus, n, connected } => {
            let r = topology::closed_surface_fdtc_bound(*genus, *n, *connected)?;
            Ok(Outcome::ok(Report::new("bound closed-surface", to_value(&r))))
        }
        BoundCommand::BraidGenus { chi, k, braid_index, connected } => {
            let r = topology::braid_genus_bounds(&BraidGenusInputs { chi: *chi, k: *k, braid_index: *braid_index, connected_boundary: *connected })?;
            let inconclusive = r.is_none();
            Ok(Outcome { report: Report::new("bound braid-genus", to_value(&r)), inconclusive, invalid: false })
        }
        BoundCommand::KnotGenus { min_abs_c } => {
            let g = topology::genus_lower_bound(min_abs_c);
            Ok(Outcome::ok(Report::new(
                "bound knot-genus",
                json!({ "genus_at_least": g, "source": "knot-genus/lower" }),
            )))
        }
    }
}

/// Parses `args`, runs the command and returns `(stdout, stderr, exit code)`.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { (text, String::new(), code) } else { (String::new(), text, code) };
        }
    };
    let start = Instant::now();
    match execute(&cli.command) {
        Ok(mut o) => {
            if cli.timing {
                o.report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let code = o.exit_code();
            (o.report.emit(cli.format), String::new(), code)
        }
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}
