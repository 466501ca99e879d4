//! Command-line front end.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::binoid::{BinoidDocument, BinoidPresentation, DEFAULT_COMPLETION_BUDGET, DEFAULT_DEGREE_BOUND};
use crate::error::{Error, Result};
use crate::groupoid::{skeletonize, ComponentGroup, GroupPresentationResult, GroupoidPresentation};
use crate::homology::chain_complex;
use crate::linalg::AbelianGroupData;
use crate::pi0::{pi0_affine, Pi0Set};
use crate::scheme::{fundamental_groupoid_detailed, load_scheme_with_budget, pi0_scheme, SchemeDiagram, SchemeDocument};
use crate::stanley_reisner::{
    chart_scheme, geometric_realization_groupoid, sr_binoid, sr_groupoid, SimplicialComplexData,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_CONDITIONS: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "binoid-topology",
    version,
    about = "Topological invariants of real and complex spectra of binoids, binoid schemes and Stanley-Reisner complexes",
    after_help = "Exit codes: 0 success, 1 parse or validation failure, 2 a bounded search was incomplete, \
                  3 colimit conditions failed after stretching."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Degree bound for bounded searches.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree_bound: u32,
    /// Step budget for rewriting completion.
    #[arg(long, global = true, default_value_t = DEFAULT_COMPLETION_BUDGET, value_parser = positive)]
    pub completion_budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the relevant groupoid as Graphviz DOT to this path.
    #[arg(long, global = true)]
    pub emit_dot: Option<PathBuf>,
    /// Instantiate every generator and relation of the signed-facet groupoid.
    #[arg(long, global = true)]
    pub full_r2: bool,
    /// Log verbosity; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Field {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connected components of the real spectrum.
    Pi0 { input: PathBuf },
    /// Fundamental group of every connected component.
    Pi1 { input: PathBuf },
    /// Integral homology via the Čech nerve.
    Homology { input: PathBuf },
    /// Number of connected components over R or C.
    Components {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Field::R)]
        field: Field,
    },
    /// Stanley-Reisner binoid and signed-facet groupoid of a complex.
    Sr { input: PathBuf },
}

pub enum Input {
    Binoid(BinoidPresentation),
    Scheme(SchemeDiagram),
    Complex(SimplicialComplexData),
}

/// JSON documents are told apart by their keys; anything else is read as
/// a text presentation such as `x, y | x^2 y = x`.
pub fn load_input(path: &Path, budget: usize) -> Result<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_input(&text, budget)
}

pub fn parse_input(text: &str, budget: usize) -> Result<Input> {
    if !text.trim_start().starts_with('{') {
        let m: BinoidPresentation = text.trim().parse()?;
        if budget == DEFAULT_COMPLETION_BUDGET {
            return Ok(Input::Binoid(m));
        }
        return Ok(Input::Binoid(BinoidDocument::from_presentation(&m).to_presentation_with_budget(budget)?));
    }
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("charts").is_some() {
        let doc: SchemeDocument = serde_json::from_value(value)?;
        Ok(Input::Scheme(load_scheme_with_budget(&doc, budget)?))
    } else if value.get("facets").is_some() {
        Ok(Input::Complex(serde_json::from_value(value)?))
    } else if value.get("gens").is_some() {
        let doc: BinoidDocument = serde_json::from_value(value)?;
        Ok(Input::Binoid(doc.to_presentation_with_budget(budget)?))
    } else {
        Err(Error::ParseError("expected a binoid, scheme or complex document".into()))
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::IncompleteIdempotents(_) | Error::BoundExceeded(_) | Error::UntamedPresentation(_) => EXIT_INCOMPLETE,
        Error::ConditionCheckFailed(_) => EXIT_CONDITIONS,
        _ => EXIT_FAILURE,
    }
}

fn unsupported(format: Format, what: &str) -> Error {
    Error::ParseError(format!("format {format:?} is not available for {what}").to_lowercase())
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("1 {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn emit_dot(config: &RunConfig, g: &GroupoidPresentation) -> Result<()> {
    if let Some(p) = &config.emit_dot {
        std::fs::write(p, g.to_dot()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Runs a parsed command and returns the report.
pub fn execute(cli: &Cli) -> Result<String> {
    let c = &cli.config;
    match &cli.command {
        Command::Pi0 { input } => run_pi0(c, load_input(input, c.completion_budget)?),
        Command::Pi1 { input } => run_pi1(c, load_input(input, c.completion_budget)?),
        Command::Homology { input } => run_homology(c, load_input(input, c.completion_budget)?),
        Command::Components { input, field } => run_components(c, load_input(input, c.completion_budget)?, *field),
        Command::Sr { input } => match load_input(input, c.completion_budget)? {
            Input::Complex(d) => run_sr(c, &d),
            _ => Err(Error::ParseError("sr expects a complex document".into())),
        },
    }
}

#[derive(Serialize)]
struct BlockReport {
    label: String,
    points: usize,
    units: AbelianGroupData,
    signs: Vec<String>,
}

fn block_reports(p: &Pi0Set) -> Vec<BlockReport> {
    p.blocks
        .iter()
        .map(|b| BlockReport {
            label: b.block.label.clone(),
            points: 1 << b.n,
            units: b.units.group.clone(),
            signs: b.basis.clone(),
        })
        .collect()
}

pub fn run_pi0(c: &RunConfig, input: Input) -> Result<String> {
    match input {
        Input::Binoid(m) => {
            let p = pi0_affine(&m, c.degree_bound)?;
            let blocks = block_reports(&p);
            match c.format {
                Format::Json => to_json(&json!({ "components": p.point_count(), "blocks": blocks })),
                Format::Text => {
                    let parts: Vec<String> = blocks.iter().map(|b| b.points.to_string()).collect();
                    let mut s = plural(p.point_count(), "component");
                    if blocks.len() > 1 {
                        let _ = write!(s, ": {}", parts.join(" + "));
                    }
                    s.push('\n');
                    for b in &blocks {
                        let signs = if b.signs.is_empty() { "none".to_string() } else { b.signs.join(", ") };
                        let _ = writeln!(
                            s,
                            "block {}: {}, units {}, signs {}",
                            b.label,
                            plural(b.points, "point"),
                            b.units,
                            signs
                        );
                    }
                    Ok(s)
                }
                f => Err(unsupported(f, "pi0")),
            }
        }
        Input::Scheme(s) => scheme_pi0(c, &s),
        Input::Complex(d) => scheme_pi0(c, &chart_scheme(&d)?),
    }
}

fn scheme_pi0(c: &RunConfig, s: &SchemeDiagram) -> Result<String> {
    let p = pi0_scheme(s, c.degree_bound)?;
    match c.format {
        Format::Json => to_json(&p),
        Format::Text => {
            let mut out = plural(p.count, "component") + "\n";
            for (i, l) in p.labels.iter().enumerate() {
                let _ = writeln!(out, "component {}: {l}", i + 1);
            }
            Ok(out)
        }
        f => Err(unsupported(f, "pi0")),
    }
}

fn describe_component(i: usize, g: &ComponentGroup) -> String {
    let mut s = format!("component {}: ", i + 1);
    match g.free_rank {
        Some(0) => s.push_str("trivial"),
        Some(r) => {
            let _ = write!(s, "free group of rank {r}");
        }
        None => {
            let _ = write!(
                s,
                "{} generators, {} relators, abelianization {}",
                g.generators.len(),
                g.relators.len(),
                g.abelianization
            );
        }
    }
    if g.unreduced {
        s.push_str(" (simplification budget exhausted)");
    }
    s.push('\n');
    let _ = writeln!(s, "  base object: {}", g.representative);
    if !g.generators.is_empty() {
        let _ = writeln!(s, "  generators: {}", g.generators.join(", "));
    }
    for r in &g.relators {
        let _ = writeln!(s, "  relator: {r}");
    }
    s
}

pub fn groups_text(r: &GroupPresentationResult) -> String {
    let mut s = plural(r.component_count(), "component") + "\n";
    for (i, g) in r.components.iter().enumerate() {
        s.push_str(&describe_component(i, g));
    }
    s
}

pub fn run_pi1(c: &RunConfig, input: Input) -> Result<String> {
    let (groups, groupoid) = match input {
        Input::Complex(d) => {
            let g = sr_groupoid(&d, c.full_r2)?;
            (skeletonize(&g), g)
        }
        Input::Scheme(s) => {
            let f = fundamental_groupoid_detailed(&s, c.degree_bound)?;
            (f.groups, f.colimit)
        }
        Input::Binoid(m) => {
            let f = fundamental_groupoid_detailed(&SchemeDiagram::affine(m), c.degree_bound)?;
            (f.groups, f.colimit)
        }
    };
    emit_dot(c, &groupoid)?;
    match c.format {
        Format::Text => Ok(groups_text(&groups)),
        Format::Json => to_json(&groups),
        Format::Dot => Ok(groupoid.to_dot()),
        Format::Csv => Err(unsupported(c.format, "pi1")),
    }
}

pub fn run_homology(c: &RunConfig, input: Input) -> Result<String> {
    let s = match input {
        Input::Scheme(s) => s,
        Input::Binoid(m) => SchemeDiagram::affine(m),
        Input::Complex(d) => chart_scheme(&d)?,
    };
    let cx = chain_complex(&s, c.degree_bound)?;
    let h = cx.homology();
    match c.format {
        Format::Text => {
            let mut out = String::new();
            for (p, g) in h.iter().enumerate() {
                let _ = writeln!(out, "H{p} = {g}");
            }
            Ok(out)
        }
        Format::Json => to_json(&json!({ "homology": h, "chain_ranks": cx.ranks() })),
        Format::Csv => {
            let mut out = String::new();
            for p in 1..cx.boundaries.len() {
                let _ = writeln!(out, "# d{p}");
                out.push_str(&cx.boundary_csv(p));
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported(c.format, "homology")),
    }
}

pub fn run_components(c: &RunConfig, input: Input, field: Field) -> Result<String> {
    let Input::Binoid(m) = input else {
        return Err(Error::ParseError("components expects a binoid".into()));
    };
    let p = pi0_affine(&m, c.degree_bound)?;
    let count = match field {
        Field::R => p.point_count() as u64,
        Field::C => p.complex_component_count(),
    };
    let name = match field {
        Field::R => "R",
        Field::C => "C",
    };
    match c.format {
        Format::Text => Ok(format!("{} over {name}\n", plural(count as usize, "component"))),
        Format::Json => to_json(&json!({ "field": name, "components": count })),
        f => Err(unsupported(f, "components")),
    }
}

pub fn run_sr(c: &RunConfig, d: &SimplicialComplexData) -> Result<String> {
    let m = sr_binoid(d)?;
    let g = sr_groupoid(d, c.full_r2)?;
    let groups = skeletonize(&g);
    let geo = skeletonize(&geometric_realization_groupoid(d)?);
    emit_dot(c, &g)?;
    match c.format {
        Format::Text => {
            let mut s = format!("binoid: {m}\n");
            let _ = writeln!(
                s,
                "signed facets: {} objects, {} generating isos, {} relations",
                g.objects().len(),
                g.gens().len(),
                g.relations().len()
            );
            s.push_str(&groups_text(&groups));
            s.push_str("geometric realization: ");
            s.push_str(&groups_text(&geo));
            Ok(s)
        }
        Format::Json => to_json(&json!({
            "binoid": m.to_string(),
            "objects": g.objects().len(),
            "isos": g.gens().len(),
            "relations": g.relations().len(),
            "groups": groups,
            "geometric_realization": geo,
        })),
        Format::Dot => Ok(g.to_dot()),
        Format::Csv => Err(unsupported(c.format, "sr")),
    }
}

pub fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    let _ = env_logger::Builder::new().filter_level(level).format_timestamp(None).try_init();
}
