//! Command-line interface over the library: periods, circuits, Abel–Jacobi
//! evaluation, tautological classes, identity verification, and tropical
//! theta functions, with byte-stable JSON (or plain-text) reports.
//!
//! Exit status: `0` when the command succeeds and every requested
//! verification holds, `1` when a verification fails, `2` on input errors
//! (unreadable files, malformed JSON, out-of-range arguments).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;

use trop_jac::corpus::run_corpus_dir;
use trop_jac::graph::{CircuitBasis, MetricGraph};
use trop_jac::io::{
    class_to_doc, corpus_to_doc, format_rational, format_rational_vector, graph_from_json,
    graph_to_doc, parse_rational, parse_rational_vector, period_to_doc, report_json,
    theta_eval_to_doc, verification_to_doc, wd_cell_to_doc, ClassDoc, CorpusFileDoc, EdgeDoc,
    VerificationDoc, WdCellDoc,
};
use trop_jac::jacobian::{
    abel_jacobi, abel_jacobi_divisor, period_matrix, wd_cells, CurvePoint, PeriodMatrix,
};
use trop_jac::linalg::Q;
use trop_jac::tautological::{
    class_theta_power, class_wd, degree_theta_g, degree_wd_pair, verify_poincare,
    verify_riemann_homological,
};
use trop_jac::theta::{theta_value, voronoi_relevant_vectors, AppellHumbertDatum};

#[derive(Parser)]
#[command(
    name = "trop-jac",
    version,
    about = "Exact computations on tropical Jacobians of metric graphs",
    propagate_version = true
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph document and summarize it (after leaf pruning).
    Info(GraphArgs),
    /// Print the period Gram matrix of the graph's Jacobian.
    Period(GraphArgs),
    /// Print the spanning tree and the fundamental circuit vectors.
    Circuits(GraphArgs),
    /// Evaluate the Abel–Jacobi map at one or more curve points.
    Aj {
        #[command(flatten)]
        graph: GraphArgs,
        /// Curve points as `EDGE:T` with `T` rational, e.g. `e1:1/2`. The
        /// image of each point and of their formal sum is reported.
        #[arg(required = true, value_name = "EDGE:T")]
        points: Vec<String>,
    },
    /// List the parallelotope cells of the Abel–Jacobi locus W_d.
    WdCells {
        #[command(flatten)]
        graph: GraphArgs,
        /// Number of summed points, 0 ≤ d ≤ genus.
        #[arg(long)]
        d: usize,
    },
    /// Print a tautological cycle class in the exterior-algebra model.
    #[command(subcommand)]
    Class(ClassCommand),
    /// Check identities between tautological classes; exits 1 on failure.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Print the degree of a top-dimensional intersection.
    #[command(subcommand)]
    Degree(DegreeCommand),
    /// Evaluate the tropical Riemann theta function and related data.
    #[command(subcommand)]
    Theta(ThetaCommand),
    /// Run every library check on all graph documents in a directory.
    ///
    /// Exits 2 if any file fails to parse or the directory holds no `*.json`
    /// documents, 1 if all files parse but some verification fails, else 0.
    /// Every file is always processed; one bad file never stops the run.
    Corpus {
        /// Directory containing `*.json` graph documents.
        dir: PathBuf,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Path to a graph document.
    #[arg(long, value_name = "FILE")]
    graph: PathBuf,
    /// Spanning-tree selection seed; 0 picks the deterministic minimal tree.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A genus given either directly or through a graph document.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenusArg {
    /// Use the genus of this graph document.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Use this genus directly.
    #[arg(long)]
    genus: Option<usize>,
}

impl GenusArg {
    fn resolve(&self) -> Result<usize, String> {
        match (&self.graph, self.genus) {
            (Some(path), None) => Ok(load_graph(path)?.genus()),
            (None, Some(g)) => Ok(g),
            _ => unreachable!("clap enforces exactly one genus source"),
        }
    }
}

#[derive(Subcommand)]
enum ClassCommand {
    /// The locus class [W_d], concentrated in bidegree (d, d).
    Wd {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        d: usize,
    },
    /// The k-fold self-intersection [Θ]^k of the theta divisor class.
    ThetaPow {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check (g−d)!·[W_d] = [Θ]^(g−d) for every d, plus degree corollaries.
    Poincare {
        #[command(flatten)]
        genus: GenusArg,
    },
    /// Check the homological Riemann theorem [W_(g−1)] = [Θ].
    Riemann {
        #[command(flatten)]
        genus: GenusArg,
    },
}

#[derive(Subcommand)]
enum DegreeCommand {
    /// Self-intersection number of [Θ] in top degree; always g!.
    ThetaG {
        #[command(flatten)]
        genus: GenusArg,
    },
    /// Intersection number of [W_d] and [W_(g−d)]; always C(g, d).
    WdPair {
        #[command(flatten)]
        genus: GenusArg,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Subcommand)]
enum ThetaCommand {
    /// Evaluate θ at a lift given in circuit coordinates.
    Eval {
        #[command(flatten)]
        graph: GraphArgs,
        /// The lift, comma-separated rationals such as `1,0` or `1/2,-2/5`.
        #[arg(long)]
        x: String,
        /// Linear part of a non-principal translate (same format as --x).
        #[arg(long)]
        l: Option<String>,
    },
    /// Decide whether the point lies on the theta divisor.
    DivisorTest {
        #[command(flatten)]
        graph: GraphArgs,
        /// The lift, comma-separated rationals such as `1,0` or `1/2,-2/5`.
        #[arg(long)]
        x: String,
        /// Linear part of a non-principal translate (same format as --x).
        #[arg(long)]
        l: Option<String>,
    },
    /// List the Voronoi-relevant lattice vectors of the period form.
    RelevantVectors {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Info(args) => info_cmd(fmt, args),
        Command::Period(args) => period_cmd(fmt, args),
        Command::Circuits(args) => circuits_cmd(fmt, args),
        Command::Aj { graph, points } => aj_cmd(fmt, graph, points),
        Command::WdCells { graph, d } => wd_cells_cmd(fmt, graph, *d),
        Command::Class(cmd) => class_cmd(fmt, cmd),
        Command::Verify(cmd) => verify_cmd(fmt, cmd),
        Command::Degree(cmd) => degree_cmd(fmt, cmd),
        Command::Theta(cmd) => theta_cmd(fmt, cmd),
        Command::Corpus { dir } => corpus_cmd(fmt, dir),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

struct Setup {
    graph: MetricGraph,
    basis: CircuitBasis,
    periods: PeriodMatrix,
}

fn load_graph(path: &Path) -> Result<MetricGraph, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = graph_from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    parsed.validate_and_prune().map_err(|e| format!("{}: {e}", path.display()))
}

fn setup(args: &GraphArgs) -> Result<Setup, String> {
    let graph = load_graph(&args.graph)?;
    let basis = graph.circuit_basis(args.seed);
    let periods = period_matrix(&graph, &basis);
    Ok(Setup { graph, basis, periods })
}

fn emit<T: Serialize>(fmt: Format, command: &str, report: &T, text: impl FnOnce() -> String) {
    match fmt {
        Format::Json => println!("{}", report_json(command, report)),
        Format::Text => print!("{}", text()),
    }
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

/// Parses one positional curve-point argument of the form `EDGE:T`.
fn parse_point_spec(spec: &str) -> Result<(&str, Q), String> {
    let (edge, t_text) = spec
        .split_once(':')
        .ok_or_else(|| format!("\"{spec}\": expected EDGE:T, for example e1:1/2"))?;
    let t = parse_rational(t_text).map_err(|e| format!("\"{spec}\": {e}"))?;
    Ok((edge, t))
}

// ---------------------------------------------------------------------------
// Graph-shaped commands
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct InfoReport {
    genus: usize,
    basepoint: String,
    vertex_count: usize,
    edge_count: usize,
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

fn info_cmd(fmt: Format, args: &GraphArgs) -> Result<u8, String> {
    let graph = load_graph(&args.graph)?;
    let doc = graph_to_doc(&graph);
    let report = InfoReport {
        genus: graph.genus(),
        basepoint: graph.basepoint().to_string(),
        vertex_count: graph.vertices().len(),
        edge_count: graph.edges().len(),
        vertices: doc.vertices,
        edges: doc.edges,
    };
    emit(fmt, "info", &report, || {
        let mut s = format!(
            "genus: {}\nbasepoint: {}\nvertices: {}\nedges: {}\n",
            report.genus, report.basepoint, report.vertex_count, report.edge_count
        );
        for e in &report.edges {
            s += &format!("  {}: {} -> {}, length {}\n", e.id, e.src, e.dst, e.length);
        }
        s
    });
    Ok(0)
}

fn period_cmd(fmt: Format, args: &GraphArgs) -> Result<u8, String> {
    let s = setup(args)?;
    let report = period_to_doc(&s.periods);
    emit(fmt, "period", &report, || {
        let mut out = format!("genus: {}\n", report.genus);
        for row in &report.matrix {
            out += &format!("{}\n", row.join(" "));
        }
        out
    });
    Ok(0)
}

#[derive(Serialize)]
struct CircuitsReport {
    genus: usize,
    tree_edges: Vec<String>,
    cotree_edges: Vec<String>,
    /// Edge ids in the column order used by every circuit row.
    edge_order: Vec<String>,
    /// Row k: signed coefficient of each edge on the k-th circuit.
    circuits: Vec<Vec<i64>>,
}

fn circuits_cmd(fmt: Format, args: &GraphArgs) -> Result<u8, String> {
    let s = setup(args)?;
    let report = CircuitsReport {
        genus: s.basis.genus(),
        tree_edges: s.basis.tree_edges().iter().cloned().collect(),
        cotree_edges: s.basis.cotree_edges().to_vec(),
        edge_order: s.graph.edges().iter().map(|e| e.id.clone()).collect(),
        circuits: s.basis.circuits().to_vec(),
    };
    emit(fmt, "circuits", &report, || {
        let mut out = format!(
            "genus: {}\ntree: {}\ncotree: {}\nedges: {}\n",
            report.genus,
            report.tree_edges.iter().join(" "),
            report.cotree_edges.iter().join(" "),
            report.edge_order.iter().join(" ")
        );
        for (k, c) in report.circuits.iter().enumerate() {
            out += &format!("circuit {}: {}\n", k, c.iter().join(" "));
        }
        out
    });
    Ok(0)
}

#[derive(Serialize)]
struct AjPointReport {
    edge: String,
    t: String,
    image: Vec<String>,
}

#[derive(Serialize)]
struct AjReport {
    genus: usize,
    basepoint: String,
    points: Vec<AjPointReport>,
    /// Image of the formal sum of all the points.
    divisor_image: Vec<String>,
}

fn aj_cmd(fmt: Format, args: &GraphArgs, specs: &[String]) -> Result<u8, String> {
    let s = setup(args)?;
    let mut points = Vec::with_capacity(specs.len());
    for spec in specs {
        let (edge, t) = parse_point_spec(spec)?;
        points.push(CurvePoint::new(&s.graph, edge, t).map_err(|e| e.to_string())?);
    }
    let total = abel_jacobi_divisor(&s.graph, &s.basis, &s.periods, &points);
    let report = AjReport {
        genus: s.basis.genus(),
        basepoint: s.graph.basepoint().to_string(),
        points: points
            .iter()
            .map(|p| AjPointReport {
                edge: p.edge().to_string(),
                t: format_rational(p.t()),
                image: format_rational_vector(
                    abel_jacobi(&s.graph, &s.basis, &s.periods, p).coords(),
                ),
            })
            .collect(),
        divisor_image: format_rational_vector(total.coords()),
    };
    emit(fmt, "aj", &report, || {
        let mut out = format!("genus: {}\nbasepoint: {}\n", report.genus, report.basepoint);
        for p in &report.points {
            out += &format!("{}:{} -> ({})\n", p.edge, p.t, p.image.iter().join(", "));
        }
        out += &format!("sum -> ({})\n", report.divisor_image.iter().join(", "));
        out
    });
    Ok(0)
}

#[derive(Serialize)]
struct WdCellsReport {
    genus: usize,
    d: usize,
    cell_count: usize,
    cells: Vec<WdCellDoc>,
}

fn wd_cells_cmd(fmt: Format, args: &GraphArgs, d: usize) -> Result<u8, String> {
    let s = setup(args)?;
    let cells = wd_cells(&s.graph, &s.basis, &s.periods, d).map_err(|e| e.to_string())?;
    let report = WdCellsReport {
        genus: s.basis.genus(),
        d,
        cell_count: cells.len(),
        cells: cells.iter().map(wd_cell_to_doc).collect(),
    };
    emit(fmt, "wd-cells", &report, || {
        let mut out =
            format!("genus: {}\nd: {}\ncells: {}\n", report.genus, report.d, report.cell_count);
        for c in &report.cells {
            out += &format!(
                "  [{}] base ({}) weight {}\n",
                c.edges.iter().join(" "),
                c.base.iter().join(", "),
                c.weight
            );
            for g in &c.generators {
                out += &format!("    gen ({})\n", g.iter().join(", "));
            }
        }
        out
    });
    Ok(0)
}

// ---------------------------------------------------------------------------
// Class, verification, and degree commands
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ClassReport {
    genus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    class: ClassDoc,
}

fn class_text(report: &ClassReport) -> String {
    let mut s = format!(
        "genus: {}\nside: {}\nterms: {}\n",
        report.genus,
        report.class.side,
        report.class.terms.len()
    );
    for t in &report.class.terms {
        s += &format!("  {} · ({} | {})\n", t.coeff, t.j.iter().join(" "), t.i.iter().join(" "));
    }
    s
}

fn class_cmd(fmt: Format, cmd: &ClassCommand) -> Result<u8, String> {
    let (command, report) = match cmd {
        ClassCommand::Wd { genus, d } => {
            let g = genus.resolve()?;
            let class = class_wd(g, *d).map_err(|e| e.to_string())?;
            ("class wd", ClassReport { genus: g, d: Some(*d), k: None, class: class_to_doc(&class) })
        }
        ClassCommand::ThetaPow { genus, k } => {
            let g = genus.resolve()?;
            let class = class_theta_power(g, *k).map_err(|e| e.to_string())?;
            (
                "class theta-pow",
                ClassReport { genus: g, d: None, k: Some(*k), class: class_to_doc(&class) },
            )
        }
    };
    emit(fmt, command, &report, || class_text(&report));
    Ok(0)
}

#[derive(Serialize)]
struct RiemannReport {
    genus: usize,
    equal: bool,
}

fn poincare_text(doc: &VerificationDoc) -> String {
    let mut s = format!("genus: {}\n", doc.genus);
    for row in &doc.rows {
        s += &format!(
            "d={}: factor {}, poincare {}, pontryagin {}\n",
            row.d,
            row.factor,
            ok_str(row.equal),
            ok_str(row.pontryagin_equal)
        );
    }
    for c in &doc.degree_checks {
        s += &format!(
            "{}: expected {}, computed {}: {}\n",
            c.name,
            c.expected,
            c.computed,
            ok_str(c.equal)
        );
    }
    s += if doc.all_passed { "all checks passed\n" } else { "SOME CHECKS FAILED\n" };
    s
}

fn verify_cmd(fmt: Format, cmd: &VerifyCommand) -> Result<u8, String> {
    match cmd {
        VerifyCommand::Poincare { genus } => {
            let g = genus.resolve()?;
            let report = verify_poincare(g);
            let doc = verification_to_doc(&report);
            emit(fmt, "verify poincare", &doc, || poincare_text(&doc));
            Ok(if report.all_passed { 0 } else { 1 })
        }
        VerifyCommand::Riemann { genus } => {
            let g = genus.resolve()?;
            let equal = verify_riemann_homological(g).map_err(|e| e.to_string())?;
            let report = RiemannReport { genus: g, equal };
            emit(fmt, "verify riemann", &report, || {
                format!("genus: {}\nriemann: {}\n", g, ok_str(equal))
            });
            Ok(if equal { 0 } else { 1 })
        }
    }
}

#[derive(Serialize)]
struct DegreeReport {
    genus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    value: String,
}

fn degree_cmd(fmt: Format, cmd: &DegreeCommand) -> Result<u8, String> {
    let (command, report) = match cmd {
        DegreeCommand::ThetaG { genus } => {
            let g = genus.resolve()?;
            let value = degree_theta_g(g);
            ("degree theta-g", DegreeReport { genus: g, d: None, value: value.to_string() })
        }
        DegreeCommand::WdPair { genus, d } => {
            let g = genus.resolve()?;
            let value = degree_wd_pair(g, *d).map_err(|e| e.to_string())?;
            ("degree wd-pair", DegreeReport { genus: g, d: Some(*d), value: value.to_string() })
        }
    };
    emit(fmt, command, &report, || format!("{}\n", report.value));
    Ok(0)
}

// ---------------------------------------------------------------------------
// Theta commands
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct DivisorTestReport {
    genus: usize,
    x: Vec<String>,
    l: Vec<String>,
    on_divisor: bool,
    minimizer_count: usize,
}

#[derive(Serialize)]
struct RelevantVectorsReport {
    genus: usize,
    count: usize,
    vectors: Vec<Vec<i64>>,
}

/// Builds the requested line-bundle datum on the graph's Jacobian: the
/// principal polarization, or its translate with the given linear part.
fn theta_datum(s: &Setup, l: &Option<String>) -> Result<AppellHumbertDatum, String> {
    match l {
        None => Ok(AppellHumbertDatum::principal(s.periods.clone())),
        Some(text) => {
            let l = parse_rational_vector(text).map_err(|e| e.to_string())?;
            AppellHumbertDatum::new(s.periods.clone(), s.periods.matrix().clone(), l)
                .map_err(|e| e.to_string())
        }
    }
}

fn theta_cmd(fmt: Format, cmd: &ThetaCommand) -> Result<u8, String> {
    match cmd {
        ThetaCommand::Eval { graph, x, l } => {
            let s = setup(graph)?;
            let datum = theta_datum(&s, l)?;
            let xv = parse_rational_vector(x).map_err(|e| e.to_string())?;
            let value = theta_value(&datum, &xv).map_err(|e| e.to_string())?;
            let report = theta_eval_to_doc(&datum, &xv, &value);
            emit(fmt, "theta eval", &report, || {
                let mut out = format!(
                    "value: {}\nminimizers: {}\n",
                    report.theta.value,
                    report.theta.minimizers.len()
                );
                for m in &report.theta.minimizers {
                    out += &format!("  {}\n", m.iter().join(" "));
                }
                out += &format!(
                    "certified radius: {}\non divisor: {}\n",
                    report.theta.certified_radius, report.theta.on_divisor
                );
                out
            });
            Ok(0)
        }
        ThetaCommand::DivisorTest { graph, x, l } => {
            let s = setup(graph)?;
            let datum = theta_datum(&s, l)?;
            let xv = parse_rational_vector(x).map_err(|e| e.to_string())?;
            let value = theta_value(&datum, &xv).map_err(|e| e.to_string())?;
            let report = DivisorTestReport {
                genus: s.basis.genus(),
                x: format_rational_vector(&xv),
                l: format_rational_vector(datum.l()),
                on_divisor: value.minimizers.len() >= 2,
                minimizer_count: value.minimizers.len(),
            };
            emit(fmt, "theta divisor-test", &report, || {
                format!(
                    "on divisor: {}\nminimizers: {}\n",
                    report.on_divisor, report.minimizer_count
                )
            });
            Ok(0)
        }
        ThetaCommand::RelevantVectors { graph } => {
            let s = setup(graph)?;
            let vectors = voronoi_relevant_vectors(&s.periods).map_err(|e| e.to_string())?;
            let report = RelevantVectorsReport {
                genus: s.periods.genus(),
                count: vectors.len(),
                vectors,
            };
            emit(fmt, "theta relevant-vectors", &report, || {
                let mut out = format!("genus: {}\ncount: {}\n", report.genus, report.count);
                for v in &report.vectors {
                    out += &format!("  {}\n", v.iter().join(" "));
                }
                out
            });
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------------
// Corpus command
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CorpusRunReport {
    directory: String,
    total: usize,
    passed: usize,
    input_errors: usize,
    verify_failures: usize,
    files: Vec<CorpusFileDoc>,
}

fn corpus_cmd(fmt: Format, dir: &Path) -> Result<u8, String> {
    let result = run_corpus_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let doc = corpus_to_doc(&result);
    let report = CorpusRunReport {
        directory: dir.display().to_string(),
        total: doc.total,
        passed: doc.passed,
        input_errors: doc.input_errors,
        verify_failures: doc.verify_failures,
        files: doc.files,
    };
    emit(fmt, "corpus", &report, || {
        let mut out = String::new();
        for f in &report.files {
            out += &format!("{:<12} {}", f.status, f.file);
            if !f.details.is_empty() {
                out += &format!(": {}", f.details.iter().join("; "));
            }
            out.push('\n');
        }
        out += &format!(
            "{} graphs: {} passed, {} input errors, {} verification failures\n",
            report.total, report.passed, report.input_errors, report.verify_failures
        );
        out
    });
    if report.total == 0 {
        eprintln!("error: no graph documents (*.json) found in {}", report.directory);
        return Ok(2);
    }
    if report.input_errors > 0 {
        Ok(2)
    } else if report.verify_failures > 0 {
        Ok(1)
    } else {
        Ok(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use trop_jac::linalg::q;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn point_specs_parse_strictly() {
        let (edge, t) = parse_point_spec("e1:1/2").unwrap();
        assert_eq!(edge, "e1");
        assert_eq!(t, q(1, 2));
        // Edge ids may themselves contain colons; only the last-resort
        // split would be ambiguous, so the first colon is the separator
        // and the remainder must be a clean rational.
        assert!(parse_point_spec("e1").is_err());
        assert!(parse_point_spec("e1:").is_err());
        assert!(parse_point_spec("e1:0.5").is_err());
    }

    #[test]
    fn genus_sources_are_mutually_exclusive() {
        assert!(Cli::try_parse_from(["trop-jac", "verify", "poincare", "--genus", "3"]).is_ok());
        assert!(Cli::try_parse_from(["trop-jac", "verify", "poincare"]).is_err());
        assert!(Cli::try_parse_from([
            "trop-jac", "verify", "poincare", "--genus", "3", "--graph", "g.json"
        ])
        .is_err());
    }
}
