//! Command-line front end: `build-omega`, `verify-wgraph`,
//! `verify-conjecture` and `export-graph`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coxeter::{build_system, CoxeterSystem, TypeTag};
use crate::decomp::{refined_graph, verify_conjecture, ConjectureReport, DecompError};
use crate::omega::{compute_quotient, radical, OmegaError, QuotientAlgebra, QuotientOptions};
use crate::pathalg::{compat_graph_dot, compat_graph_json, CompatGraph};
use crate::wgraph::{wgraph_to_module, WGraph};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wgalg", version, about = "Exact W-graph algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute kΩ as a path-algebra quotient and its radical.
    BuildOmega {
        #[command(flatten)]
        common: Common,
        /// Include the structure constants in the JSON bundle.
        #[arg(long)]
        structure_constants: bool,
    },
    /// Validate a W-graph given as JSON and check its Ω-module.
    VerifyWgraph {
        #[command(flatten)]
        common: Common,
        file: PathBuf,
    },
    /// Build the idempotent family and check Z1–Z4.
    VerifyConjecture {
        #[command(flatten)]
        common: Common,
    },
    /// Write the compatibility graph, and the refined graph when a family exists.
    ExportGraph {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Coxeter type: A1xN, I2, A3, A4, B3, B4, D4, F4, H3 (or A1x3, I2(5)).
    #[arg(long = "type")]
    pub type_tag: String,
    /// Parameter of the type: m for I2, n for A1xN.
    #[arg(long)]
    pub m: Option<u32>,
    /// Longest path length explored before giving up on stabilization.
    #[arg(long, default_value_t = 12)]
    pub max_length: usize,
    /// Write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the parallel parts; sequential when absent.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Directory for bundles and graph files.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("unsupported-for-certification: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Omega(OmegaError),
    #[error(transparent)]
    Decomp(DecompError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            CliError::Omega(OmegaError::NotStabilized { .. } | OmegaError::TooManyCollapses(_)) => EXIT_UNSUPPORTED,
            CliError::Decomp(DecompError::Unsupported(_)) => EXIT_UNSUPPORTED,
            CliError::Decomp(DecompError::Omega(OmegaError::NotStabilized { .. })) => EXIT_UNSUPPORTED,
            _ => EXIT_FAIL,
        }
    }
}

impl From<OmegaError> for CliError {
    fn from(e: OmegaError) -> Self {
        CliError::Omega(e)
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        CliError::Decomp(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Outcome of a command: the exit code and what goes to stdout.
struct Outcome {
    code: i32,
    text: String,
    json: Value,
    /// Diagnostics for stderr.
    notes: String,
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out`. Returns the process exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let format = match &cli.command {
        Command::BuildOmega { common, .. } | Command::VerifyWgraph { common, .. } | Command::VerifyConjecture { common } | Command::ExportGraph { common } => common.format,
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let _ = write!(err, "{}", o.notes);
            let _ = match format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).unwrap_or_default()),
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::BuildOmega { common, structure_constants } => build_omega(common, *structure_constants),
        Command::VerifyWgraph { common, file } => verify_wgraph(common, file),
        Command::VerifyConjecture { common } => verify(common),
        Command::ExportGraph { common } => export_graph(common),
    }
}

fn system(c: &Common) -> Result<CoxeterSystem, CliError> {
    let tag = TypeTag::parse(&c.type_tag, c.m).map_err(|e| CliError::Usage(e.to_string()))?;
    build_system(tag).map_err(|e| CliError::Usage(e.to_string()))
}

fn quotient(c: &Common, sys: &CoxeterSystem) -> Result<QuotientAlgebra, CliError> {
    if c.max_length == 0 {
        return Err(CliError::Usage("--max-length must be at least 1".into()));
    }
    Ok(compute_quotient(sys, &QuotientOptions { max_length: c.max_length, ..QuotientOptions::default() })?)
}

/// File stem for a type: `I2(5)` becomes `I2_5`.
fn stem(sys: &CoxeterSystem) -> String {
    sys.tag.to_string().replace('(', "_").replace(')', "")
}

fn write_json(path: &Path, v: &Value) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))? + "\n")?;
    Ok(())
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir)?;
    let p = dir.join(name);
    fs::write(&p, contents)?;
    Ok(p)
}

/// Writes the compatibility graph to `--out-dir`, or returns its DOT text.
fn export_compat(c: &Common, sys: &CoxeterSystem, text: &mut String) -> Result<Value, CliError> {
    let g = CompatGraph::new(sys).map_err(|e| CliError::Omega(e.into()))?;
    let js = compat_graph_json(&g);
    match &c.out_dir {
        Some(dir) => {
            let p = write_file(dir, &format!("{}_compat.dot", stem(sys)), &compat_graph_dot(&g))?;
            write_json(&dir.join(format!("{}_compat.json", stem(sys))), &js)?;
            let _ = writeln!(text, "wrote {}", p.display());
        }
        None => text.push_str(&compat_graph_dot(&g)),
    }
    Ok(js)
}

fn build_omega(c: &Common, structure_constants: bool) -> Result<Outcome, CliError> {
    let sys = system(c)?;
    if !sys.tag.is_certifiable() {
        let mut notes = String::new();
        let compat = export_compat(c, &sys, &mut notes)?;
        let e = CliError::Unsupported(format!("type {} has no certified quotient; the compatibility graph was exported", sys.tag));
        let _ = writeln!(notes, "error: {e}");
        return Ok(Outcome { code: e.exit_code(), text: String::new(), json: json!({ "schema": 1, "type": sys.tag, "compat": compat, "pass": false }), notes });
    }
    let alg = quotient(c, &sys)?;
    let rad = radical(&alg, c.threads)?;
    let order = sys.group_order().map_err(|e| CliError::Usage(e.to_string()))?;
    let pass = rad.dim_semisimple == order;
    let mut text = String::new();
    let _ = writeln!(text, "type {}", sys.tag);
    let _ = writeln!(text, "dim {}", alg.dim());
    let _ = writeln!(text, "dim rad {}", rad.dim_radical);
    let _ = writeln!(text, "dim quot {}", rad.dim_semisimple);
    let _ = writeln!(text, "|W| {order}");
    let _ = writeln!(text, "certified length {}", alg.length_bound());
    let summary = json!({
        "schema": 1,
        "type": sys.tag,
        "dim": alg.dim(),
        "dim_radical": rad.dim_radical,
        "dim_semisimple": rad.dim_semisimple,
        "group_order": order,
        "length_bound": alg.length_bound(),
        "stats": alg.stats(),
        "pass": pass,
    });
    if let Some(dir) = &c.out_dir {
        let p = dir.join(format!("{}_omega.json", stem(&sys)));
        write_json(&p, &alg.to_json(structure_constants))?;
        let _ = writeln!(text, "wrote {}", p.display());
    }
    if let Some(p) = &c.report {
        write_json(p, &summary)?;
    }
    Ok(Outcome { code: if pass { EXIT_PASS } else { EXIT_FAIL }, text, json: summary, notes: String::new() })
}

fn verify_wgraph(c: &Common, file: &Path) -> Result<Outcome, CliError> {
    let sys = system(c)?;
    let raw = fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let value: Value = serde_json::from_str(&raw).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
    let g = WGraph::from_json(&sys, &value).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = g.validate(&sys).map_err(|e| CliError::Usage(e.to_string()))?;
    let module = if report.valid {
        let m = wgraph_to_module(&sys, &g).map_err(|e| CliError::Decomp(e.into()))?;
        Some(m.check().map_err(|e| CliError::Decomp(e.into()))?)
    } else {
        None
    };
    let pass = report.valid && module.as_ref().is_some_and(|m| m.pass());
    let mut text = String::new();
    let _ = writeln!(text, "type {}", sys.tag);
    let _ = writeln!(text, "vertices {}", g.len());
    for v in &report.condition1 {
        let _ = writeln!(text, "condition 1 violated at x={} y={} s={}", v.x, v.y, v.s);
    }
    if let Some(h) = &report.hecke {
        let _ = writeln!(text, "hecke relations {}", if h.pass { "hold" } else { "FAIL" });
    }
    for w in &report.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    if let Some(m) = &module {
        let _ = writeln!(text, "relators checked {} failing {}", m.relators_checked, m.failures.len());
    }
    let _ = writeln!(text, "{}", if pass { "PASS" } else { "FAIL" });
    let js = json!({ "schema": 1, "type": sys.tag, "vertices": g.len(), "validation": report, "module": module, "pass": pass });
    if let Some(p) = &c.report {
        write_json(p, &js)?;
    }
    Ok(Outcome { code: if pass { EXIT_PASS } else { EXIT_FAIL }, text, json: js, notes: String::new() })
}

fn mark(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn conjecture_text(r: &ConjectureReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "type {} over {}", r.tag, r.field);
    let _ = writeln!(t, "dim {}", r.dim);
    let _ = writeln!(t, "identities {}/{}", r.identities.holding, r.identities.total);
    for f in &r.identities.failing {
        let _ = writeln!(t, "  failing: {f}");
    }
    let _ = writeln!(t, "Z1+Z2 {} ({} idempotents)", mark(r.z1_z2.pass), r.z1_z2.idempotents);
    let _ = writeln!(t, "Z3 {} (realized order: {})", mark(r.z3.pass), r.z3.realized_order.iter().map(|[a, b]| format!("{a} < {b}")).collect::<Vec<_>>().join(", "));
    for [a, b] in &r.z3.violations {
        let _ = writeln!(t, "  F^{a} kΩ F^{b} ≠ 0 against the order");
    }
    let _ = writeln!(t, "Z4 {}", mark(r.z4.pass));
    for c in &r.z4.components {
        let _ = writeln!(t, "  {} d={} corner={} image={} {}", c.label, c.degree, c.corner_dim, c.image_dim, mark(c.pass));
    }
    let _ = writeln!(
        t,
        "radical {} (dim rad {}, Σd² {}, Σ corners {})",
        mark(r.radical.pass),
        r.radical.dim_radical,
        r.radical.sum_of_squares,
        r.radical.corners_total
    );
    let _ = writeln!(
        t,
        "denominators {}{}",
        r.denominators.denominators.join(", "),
        if r.denominators.powers_of_two_only { " (powers of 2 only)" } else { "" }
    );
    let _ = writeln!(t, "{}", if r.pass { "PASS" } else { "FAIL" });
    t
}

fn verify(c: &Common) -> Result<Outcome, CliError> {
    let sys = system(c)?;
    if !sys.tag.is_certifiable() {
        return Err(CliError::Unsupported(format!("no idempotent family is constructed for type {}", sys.tag)));
    }
    let alg = quotient(c, &sys)?;
    let (fam, report) = verify_conjecture(&alg, c.threads)?;
    let mut text = conjecture_text(&report);
    let js = serde_json::to_value(&report).map_err(|e| CliError::Io(e.to_string()))?;
    if let Some(p) = &c.report {
        write_json(p, &js)?;
    }
    if let Some(dir) = &c.out_dir {
        let g = refined_graph(&alg, &fam)?;
        let p = write_file(dir, &format!("{}_refined.dot", stem(&sys)), &g.to_dot())?;
        let _ = writeln!(text, "wrote {}", p.display());
    }
    Ok(Outcome { code: if report.pass { EXIT_PASS } else { EXIT_FAIL }, text, json: js, notes: String::new() })
}

fn export_graph(c: &Common) -> Result<Outcome, CliError> {
    let sys = system(c)?;
    let mut text = String::new();
    let compat = export_compat(c, &sys, &mut text)?;
    let mut js = json!({ "schema": 1, "type": sys.tag, "compat": compat });
    if sys.tag.is_certifiable() {
        let alg = quotient(c, &sys)?;
        let fam = crate::decomp::build_family(&alg)?;
        let g = refined_graph(&alg, &fam)?;
        match &c.out_dir {
            Some(dir) => {
                let p = write_file(dir, &format!("{}_refined.dot", stem(&sys)), &g.to_dot())?;
                write_json(&dir.join(format!("{}_refined.json", stem(&sys))), &g.to_json())?;
                let _ = writeln!(text, "wrote {}", p.display());
            }
            None => text.push_str(&g.to_dot()),
        }
        js["refined"] = g.to_json();
    }
    if let Some(p) = &c.report {
        write_json(p, &js)?;
    }
    Ok(Outcome { code: EXIT_PASS, text, json: js, notes: String::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("wgalg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn build_omega_i2_3_reports_six() {
        let (code, out, _) = run_args(&["build-omega", "--type", "I2", "--m", "3"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("dim quot 6"), "{out}");
    }

    #[test]
    fn unknown_type_is_a_usage_error() {
        assert_eq!(run_args(&["verify-conjecture", "--type", "Z9"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify-conjecture"]).0, EXIT_USAGE);
    }

    #[test]
    fn f4_is_unsupported_but_exports_the_graph() {
        let (code, _, err) = run_args(&["build-omega", "--type", "F4"]);
        assert_eq!(code, EXIT_UNSUPPORTED);
        assert!(err.contains("unsupported-for-certification"));
        assert!(err.contains("graph \"F4\""));
    }

    #[test]
    fn json_format_carries_the_schema() {
        let (code, out, _) = run_args(&["verify-conjecture", "--type", "I2", "--m", "4", "--format", "json"]);
        assert_eq!(code, EXIT_PASS);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["pass"], true);
    }
}
