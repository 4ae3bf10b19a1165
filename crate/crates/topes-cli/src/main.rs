//! `topes` — inspect tope sets of simple oriented matroids.
//!
//! Subcommands: `validate`, `lattice`, `committees`, `graph`, `counts`,
//! `ingest`. Output is a plain table by default and JSON with `--json`;
//! identical inputs and flags produce byte-identical output. Exit codes:
//! 0 success, 1 validation or consistency failure, 2 parse/usage/IO errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use topes::committees::committees_export;
use topes::convexity::{build_lattice, lattice_export};
use topes::graph::{build_graph, graph_export, to_dot, GraphKind};
use topes::report::counts_report;
use topes::sign::{parse_topes, validate, GroundSubset, ToposSet, ValidationReport};

#[derive(Parser)]
#[command(name = "topes", version, about = "Tope sets of simple oriented matroids: validation, convexity lattices, committees, graphs, cross-checked counts")]
struct Cli {
    /// Emit JSON instead of the plain table.
    #[arg(long, global = true)]
    json: bool,
    /// Treat acyclic input (all-plus tope present) as a validation failure.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check symmetry, simplicity, and acyclicity of a .topes file.
    Validate { file: PathBuf },
    /// Export the lattice of convex subsets: members, coatoms, free sets,
    /// Möbius table.
    Lattice {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate three-tope committees.
    Committees {
        file: PathBuf,
        /// Only committees whose topes all have inclusion-maximal positive
        /// parts.
        #[arg(long)]
        max_positive: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export a tope graph as DOT or JSON.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Gamma)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Dot)]
        format: FormatArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute every count by its formula and direct routes and compare.
    Counts {
        file: PathBuf,
        /// Also run the brute-force triple scans and fail on any mismatch.
        #[arg(long)]
        cross_check: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the topes of a central arrangement (.arr file).
    Ingest {
        /// Arrangement file: one rational normal vector per line.
        #[arg(long)]
        arrangement: PathBuf,
        /// Elements to reorient, e.g. `--reorient 1,2`.
        #[arg(long, value_delimiter = ',')]
        reorient: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Gamma,
    G,
    KneserPos,
    KneserNeg,
    GammaMax,
}

impl From<KindArg> for GraphKind {
    fn from(kind: KindArg) -> GraphKind {
        match kind {
            KindArg::Gamma => GraphKind::Gamma,
            KindArg::G => GraphKind::G,
            KindArg::KneserPos => GraphKind::KneserPositive,
            KindArg::KneserNeg => GraphKind::KneserNegative,
            KindArg::GammaMax => GraphKind::GammaMax,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => {
            let ts = load_topes(&file)?;
            let report = validate(&ts, cli.strict);
            let rendered = if cli.json {
                to_json(&report)?
            } else {
                render_validation(&report)
            };
            print!("{rendered}");
            Ok(if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INVALID)
            })
        }
        Command::Lattice { file, output } => {
            let ts = match load_valid(&file, cli.strict)? {
                Ok(ts) => ts,
                Err(code) => return Ok(code),
            };
            let lat = build_lattice(&ts)?;
            let export = lattice_export(&lat);
            let rendered = if cli.json {
                to_json(&export)?
            } else {
                let mut out = String::new();
                writeln!(out, "n              {}", export.n)?;
                writeln!(out, "members        {}", export.member_count)?;
                writeln!(out, "coatoms        {}", join_sets(&export.coatoms))?;
                writeln!(out, "free_sets      {}", join_sets(&export.free_sets))?;
                for entry in &export.mobius {
                    writeln!(out, "mobius {:<12} {}", entry.set.to_string(), entry.value)?;
                }
                out
            };
            emit(output.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Committees {
            file,
            max_positive,
            output,
        } => {
            let ts = match load_valid(&file, cli.strict)? {
                Ok(ts) => ts,
                Err(code) => return Ok(code),
            };
            let export = committees_export(&ts, max_positive);
            let rendered = if cli.json {
                to_json(&export)?
            } else {
                let mut out = String::new();
                writeln!(out, "committees     {}", export.count)?;
                for c in &export.committees {
                    writeln!(
                        out,
                        "{} {} {}{}",
                        c.topes[0],
                        c.topes[1],
                        c.topes[2],
                        if c.max_positive { "  (max-positive)" } else { "" }
                    )?;
                }
                out
            };
            emit(output.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph {
            file,
            kind,
            format,
            output,
        } => {
            let ts = match load_valid(&file, cli.strict)? {
                Ok(ts) => ts,
                Err(code) => return Ok(code),
            };
            let g = build_graph(&ts, kind.into());
            let rendered = match format {
                FormatArg::Dot => to_dot(&g, &ts),
                FormatArg::Json => to_json(&graph_export(&g, &ts))?,
            };
            emit(output.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Counts {
            file,
            cross_check,
            output,
        } => {
            let ts = match load_valid(&file, cli.strict)? {
                Ok(ts) => ts,
                Err(code) => return Ok(code),
            };
            let report = counts_report(&ts, cross_check)?;
            let rendered = if cli.json {
                to_json(&report)?
            } else {
                render_counts(&report)
            };
            emit(output.as_deref(), &rendered)?;
            if cross_check && !report.all_consistent {
                eprintln!("error: count routes disagree; the identities assume a simple oriented matroid that is not acyclic");
                return Ok(ExitCode::from(EXIT_INVALID));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ingest {
            arrangement,
            reorient,
            output,
        } => {
            let text = read_file(&arrangement)?;
            let arr = topes::arrangement::parse_arrangement(&text)?;
            let subset = GroundSubset::from_elements(reorient.iter().copied())?;
            let ts = topes::arrangement::arrangement_topes(&arr, subset)?;
            let report = validate(&ts, cli.strict);
            for warning in &report.warnings {
                eprintln!("warning: {warning}");
            }
            if !report.ok {
                eprint!("{}", render_validation(&report));
                return Ok(ExitCode::from(EXIT_INVALID));
            }
            let rendered = if cli.json {
                to_json(&TopesJson::new(&ts))?
            } else {
                ts.to_string()
            };
            emit(output.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(serde::Serialize)]
struct TopesJson {
    n: usize,
    topes: Vec<String>,
}

impl TopesJson {
    fn new(ts: &ToposSet) -> TopesJson {
        TopesJson {
            n: ts.n(),
            topes: ts.topes().iter().map(|t| t.to_string()).collect(),
        }
    }
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))
}

fn load_topes(path: &Path) -> anyhow::Result<ToposSet> {
    let text = read_file(path)?;
    Ok(parse_topes(&text)?)
}

/// Parses and validates; `Err(exit_code)` means the report was printed and
/// the command should stop.
fn load_valid(path: &Path, strict: bool) -> anyhow::Result<Result<ToposSet, ExitCode>> {
    let ts = load_topes(path)?;
    let report = validate(&ts, strict);
    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    if !report.ok {
        eprint!("{}", render_validation(&report));
        return Ok(Err(ExitCode::from(EXIT_INVALID)));
    }
    Ok(Ok(ts))
}

fn to_json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    let mut rendered = serde_json::to_string_pretty(value)?;
    rendered.push('\n');
    Ok(rendered)
}

fn emit(output: Option<&Path>, rendered: &str) -> anyhow::Result<()> {
    match output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn join_sets(sets: &[GroundSubset]) -> String {
    sets.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_validation(report: &ValidationReport) -> String {
    let mut out = String::new();
    if report.ok {
        out.push_str("ok\n");
    } else {
        for v in &report.violations {
            let _ = writeln!(out, "violation [{}]: {}", v.rule, v.message);
        }
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

fn render_counts(report: &topes::report::CountsReport) -> String {
    let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    let rows = [
        ("tope_count", report.tope_count.to_string()),
        ("vertex_count_formula", report.vertex_count_formula.to_string()),
        ("edge_count_direct", report.edge_count_direct.to_string()),
        ("edge_count_formula", report.edge_count_formula.to_string()),
        ("triangles_direct", report.triangles_direct.to_string()),
        ("triangles_trace", report.triangles_trace.to_string()),
        ("triangles_neighbor_sum", report.triangles_neighbor_sum.to_string()),
        ("committees_support_sum", report.committees_support_sum.to_string()),
        ("committees_lattice_sum", report.committees_lattice_sum.to_string()),
        ("committees_brute", opt(report.committees_brute)),
        ("no_opposite_triples_formula", report.no_opposite_triples_formula.to_string()),
        ("no_opposite_triples_brute", opt(report.no_opposite_triples_brute)),
        ("max_positive_edges_direct", report.max_positive_edges_direct.to_string()),
        ("max_positive_edges_formula", report.max_positive_edges_formula.to_string()),
        ("max_positive_committees_formula", report.max_positive_committees_formula.to_string()),
        ("max_positive_committees_direct", report.max_positive_committees_direct.to_string()),
        ("max_positive_committees_brute", opt(report.max_positive_committees_brute)),
        ("cyclomatic_formula", report.cyclomatic_formula.to_string()),
        ("cyclomatic_direct", report.cyclomatic_direct.to_string()),
        ("max_positive_cyclomatic", report.max_positive_cyclomatic.to_string()),
    ];
    let mut out = String::new();
    for (name, value) in rows {
        let _ = writeln!(out, "{name:<34} {value}");
    }
    for term in &report.interval_terms {
        let _ = writeln!(
            out,
            "interval {} v {:<18} {}",
            term.left, term.right, term.coatoms_above_join
        );
    }
    let _ = writeln!(out, "{:<34} {}", "all_consistent", report.all_consistent);
    out
}
