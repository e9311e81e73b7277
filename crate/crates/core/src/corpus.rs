//! Reference graphs, seeded random graph generation, and the batch
//! verification runner behind `trop-jac corpus` and the acceptance suite.
//!
//! Random graphs are built as a uniform random spanning tree plus `genus`
//! extra edges (parallels and self-loops allowed), so the genus is exact by
//! construction. Pendant tree branches are left in on purpose: they
//! exercise the leaf-pruning path of every downstream consumer.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::{Edge, MetricGraph};
use crate::jacobian::{circuit_lift, period_matrix};
use crate::linalg::{dot, q, qi, Q};
use crate::tautological::verify_poincare;
use crate::theta::{theta_value, AppellHumbertDatum};
use num_traits::Zero;

/// Two vertices joined by three parallel edges of lengths `a`, `b`, `c`
/// (genus 2), basepoint `q`. The running example for everything.
pub fn theta_graph(a: Q, b: Q, c: Q) -> MetricGraph {
    MetricGraph::new(
        vec!["q".into(), "w".into()],
        vec![
            Edge { id: "e1".into(), src: "q".into(), dst: "w".into(), length: a },
            Edge { id: "e2".into(), src: "q".into(), dst: "w".into(), length: b },
            Edge { id: "e3".into(), src: "q".into(), dst: "w".into(), length: c },
        ],
        Some("q".into()),
    )
    .expect("theta graph is structurally valid")
}

/// A single vertex with one self-loop of length `j` (genus 1).
pub fn circle_graph(j: Q) -> MetricGraph {
    MetricGraph::new(
        vec!["v".into()],
        vec![Edge { id: "loop".into(), src: "v".into(), dst: "v".into(), length: j }],
        None,
    )
    .expect("circle graph is structurally valid")
}

/// Two self-loops joined by a bridge (genus 2).
pub fn dumbbell_graph(left: Q, right: Q, bridge: Q) -> MetricGraph {
    MetricGraph::new(
        vec!["a".into(), "b".into()],
        vec![
            Edge { id: "left".into(), src: "a".into(), dst: "a".into(), length: left },
            Edge { id: "bridge".into(), src: "a".into(), dst: "b".into(), length: bridge },
            Edge { id: "right".into(), src: "b".into(), dst: "b".into(), length: right },
        ],
        None,
    )
    .expect("dumbbell graph is structurally valid")
}

/// A random connected multigraph of the given genus: a random spanning
/// tree on 1–5 vertices plus `genus` extra edges with random endpoints.
/// Lengths are small random rationals. The result is connected with
/// positive lengths by construction, so `validate_and_prune` always
/// succeeds when `genus ≥ 1`.
pub fn random_graph(rng: &mut impl Rng, genus: usize) -> MetricGraph {
    let n = rng.gen_range(1..=5usize);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let random_length = |rng: &mut dyn rand::RngCore| -> Q {
        q(rng.gen_range(1..=8i64), rng.gen_range(1..=4i64))
    };
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push(Edge {
            id: format!("e{}", edges.len()),
            src: format!("v{j}"),
            dst: format!("v{i}"),
            length: random_length(rng),
        });
    }
    for _ in 0..genus {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        edges.push(Edge {
            id: format!("e{}", edges.len()),
            src: format!("v{u}"),
            dst: format!("v{v}"),
            length: random_length(rng),
        });
    }
    let basepoint = format!("v{}", rng.gen_range(0..n));
    MetricGraph::new(vertices, edges, Some(basepoint))
        .expect("generated graph is structurally valid")
}

/// A reproducible corpus: `count` random graphs from one seed, with the
/// genus cycling through 1..=6.
pub fn seeded_corpus(seed: u64, count: usize) -> Vec<MetricGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_graph(&mut rng, i % 6 + 1)).collect()
}

/// Outcome for one corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphStatus {
    /// Parsed, validated, and every verification held.
    Pass,
    /// The file could not be read, parsed, or validated as a metric graph.
    InputError(String),
    /// The graph is valid but at least one verification failed; each entry
    /// describes one failed check.
    VerifyFail(Vec<String>),
}

/// Per-file record in a corpus run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphReport {
    pub file: String,
    pub status: GraphStatus,
}

/// Aggregate of a corpus run, ordered by filename.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    pub graphs: Vec<GraphReport>,
}

impl CorpusReport {
    pub fn passed(&self) -> usize {
        self.graphs.iter().filter(|g| g.status == GraphStatus::Pass).count()
    }

    pub fn input_errors(&self) -> usize {
        self.graphs
            .iter()
            .filter(|g| matches!(g.status, GraphStatus::InputError(_)))
            .count()
    }

    pub fn verify_failures(&self) -> usize {
        self.graphs
            .iter()
            .filter(|g| matches!(g.status, GraphStatus::VerifyFail(_)))
            .count()
    }
}

/// The full verification pipeline for one validated graph. Returns a
/// description of every check that failed (empty means the graph passes).
///
/// Checks: the period matrix is positive definite; lifting each
/// fundamental circuit through the Abel–Jacobi map returns exactly the
/// matching lattice generator; the Poincaré formula, Pontryagin
/// consistency, and degree corollaries all hold at this genus; and the
/// principal theta function behaves as required at cheap probe points
/// (origin smooth, lattice points satisfy quasi-periodicity with the
/// predicted unique minimizer).
pub fn check_graph(graph: &MetricGraph) -> Vec<String> {
    let mut failures = Vec::new();
    let basis = graph.circuit_basis(0);
    let periods = period_matrix(graph, &basis);
    let g = periods.genus();

    if !periods.is_positive_definite() {
        failures.push("period matrix is not positive definite".to_string());
    }

    for k in 0..g {
        if circuit_lift(graph, &basis, k) != periods.lattice_generator(k) {
            failures.push(format!(
                "fundamental circuit {k} does not lift to lattice generator {k}"
            ));
        }
    }

    let report = verify_poincare(g);
    if !report.all_passed {
        failures.push(format!("tautological-class verification failed at genus {g}"));
    }

    let datum = AppellHumbertDatum::principal(periods.clone());
    match theta_value(&datum, &vec![Q::zero(); g]) {
        Ok(at_origin) => {
            if !at_origin.value.is_zero() || at_origin.minimizers != vec![vec![0i64; g]] {
                failures.push("theta is not smooth with value 0 at the origin".to_string());
            }
        }
        Err(e) => failures.push(format!("theta evaluation failed at the origin: {e}")),
    }

    // Lattice probes: φ(G·m) must equal −½·mᵀ·G·m with unique minimizer −m.
    let mut probes: Vec<Vec<i64>> = vec![vec![1; g]];
    let mut unit = vec![0i64; g];
    unit[0] = 1;
    probes.push(unit);
    for m in probes {
        let m_q: Vec<Q> = m.iter().map(|&v| qi(v)).collect();
        let gm = periods.matrix().mul_vec(&m_q);
        let expected = -dot(&m_q, &gm) * q(1, 2);
        let neg_m: Vec<i64> = m.iter().map(|v| -v).collect();
        match theta_value(&datum, &gm) {
            Ok(at_lattice) => {
                if at_lattice.value != expected || at_lattice.minimizers != vec![neg_m] {
                    failures.push(format!(
                        "theta at lattice point {m:?} breaks quasi-periodicity"
                    ));
                }
            }
            Err(e) => failures.push(format!("theta evaluation failed at {m:?}: {e}")),
        }
    }

    // At small genus the certified search is cheap to cross-check against
    // the plain box oracle at a break-locus candidate (a half period).
    if g <= 3 {
        let half: Vec<Q> =
            periods.lattice_generator(0).iter().map(|v| v * q(1, 2)).collect();
        match theta_value(&datum, &half) {
            Ok(certified) => {
                let span = certified
                    .minimizers
                    .iter()
                    .flat_map(|n| n.iter().map(|v| v.abs()))
                    .max()
                    .unwrap_or(0) as u32;
                match crate::theta::brute_force_reference(&datum, &half, span + 2) {
                    Ok(brute)
                        if brute.value == certified.value
                            && brute.minimizers == certified.minimizers => {}
                    Ok(_) => failures.push(
                        "certified theta disagrees with the box oracle at a half period"
                            .to_string(),
                    ),
                    Err(e) => failures.push(format!("box oracle failed: {e}")),
                }
            }
            Err(e) => failures.push(format!("theta evaluation failed at a half period: {e}")),
        }
    }

    failures
}

fn check_file(path: &Path) -> GraphStatus {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => return GraphStatus::InputError(e.to_string()),
    };
    let validated = crate::io::graph_from_json(&text)
        .and_then(|g| g.validate_and_prune().map_err(Into::into));
    match validated {
        Err(e) => GraphStatus::InputError(e.to_string()),
        Ok(graph) => {
            let failures = check_graph(&graph);
            if failures.is_empty() {
                GraphStatus::Pass
            } else {
                GraphStatus::VerifyFail(failures)
            }
        }
    }
}

/// Runs the verification pipeline over every `.json` file in a directory,
/// in parallel, and assembles the per-file reports ordered by filename.
/// Only reading the directory itself can fail; per-file problems are
/// recorded in the report.
pub fn run_corpus_dir(dir: &Path) -> std::io::Result<CorpusReport> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    let graphs = paths
        .par_iter()
        .map(|path| GraphReport {
            file: path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default(),
            status: check_file(path),
        })
        .collect();
    Ok(CorpusReport { graphs })
}
