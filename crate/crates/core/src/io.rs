//! Strict JSON input/output with exact rationals as strings.
//!
//! Wire format for graphs:
//!
//! ```json
//! {
//!   "vertices": ["v", "w"],
//!   "edges": [{"id": "e1", "src": "v", "dst": "w", "length": "3/2"}],
//!   "basepoint": "v"
//! }
//! ```
//!
//! Rationals travel as `"p"` or `"p/q"` with `q > 0`, everywhere — no
//! floating point is accepted or produced. Parsing is strict: no
//! whitespace, no signs on the denominator, no zero denominators.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusReport, GraphStatus};
use crate::graph::{Edge, GraphError, MetricGraph};
use crate::homology::{BigradedClass, Side};
use crate::jacobian::{PeriodMatrix, WdCell};
use crate::linalg::{Q, QMat};
use crate::tautological::VerificationReport;
use crate::theta::{AppellHumbertDatum, ThetaValue};

/// Errors from the strict `"p"` / `"p/q"` rational grammar.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("\"{0}\" is not a rational: expected \"p\" or \"p/q\"")]
    Malformed(String),
    #[error("\"{0}\" has a non-positive denominator; write \"-p/q\" with q > 0")]
    NonPositiveDenominator(String),
}

/// Errors from reading a graph document.
#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    /// Syntactic or shape errors; the message carries line and column.
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge \"{edge}\": bad length: {source}")]
    EdgeLength {
        edge: String,
        #[source]
        source: RationalParseError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses `"p"` or `"p/q"` with `q > 0` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Q, RationalParseError> {
    let malformed = || RationalParseError::Malformed(s.to_string());
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| malformed())?;
            Ok(Q::from(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num).map_err(|_| malformed())?;
            // Reject signs (and anything else non-digit) in the denominator
            // up front so "1/-2" and "1/+2" fail loudly rather than being
            // silently normalized.
            if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            let d = BigInt::from_str(den).map_err(|_| malformed())?;
            if d == BigInt::from(0) {
                return Err(RationalParseError::NonPositiveDenominator(s.to_string()));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Renders a rational as `"p"` (denominator 1) or `"p/q"`.
pub fn format_rational(x: &Q) -> String {
    x.to_string()
}

/// Parses a comma-separated rational vector such as `"1,3/2,-2/5"`.
pub fn parse_rational_vector(s: &str) -> Result<Vec<Q>, RationalParseError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

pub fn format_rational_vector(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Serde-facing shape of a graph document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub length: String,
}

/// Reads a graph from JSON text. Structural problems (duplicate ids,
/// unknown endpoints) surface as [`GraphError`]; metric and connectivity
/// checks are deferred to [`MetricGraph::validate_and_prune`].
pub fn graph_from_json(text: &str) -> Result<MetricGraph, ParseError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    graph_from_doc(doc)
}

pub fn graph_from_doc(doc: GraphDoc) -> Result<MetricGraph, ParseError> {
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in doc.edges {
        let length = parse_rational(&e.length)
            .map_err(|source| ParseError::EdgeLength { edge: e.id.clone(), source })?;
        edges.push(Edge { id: e.id, src: e.src, dst: e.dst, length });
    }
    Ok(MetricGraph::new(doc.vertices, edges, doc.basepoint)?)
}

pub fn graph_to_doc(g: &MetricGraph) -> GraphDoc {
    GraphDoc {
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                src: e.src.clone(),
                dst: e.dst.clone(),
                length: format_rational(&e.length),
            })
            .collect(),
        basepoint: Some(g.basepoint().to_string()),
    }
}

pub fn graph_to_json(g: &MetricGraph) -> String {
    serde_json::to_string_pretty(&graph_to_doc(g)).expect("graph doc serializes")
}

// ---------------------------------------------------------------------------
// Report documents: the stable JSON surface shared by the CLI and the C API.
// ---------------------------------------------------------------------------

/// Version stamp on every report envelope. Bumped on any change that is not
/// backwards compatible (renamed or removed fields, changed meanings).
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
struct Envelope<'a, T> {
    schema_version: u32,
    command: &'a str,
    report: &'a T,
}

/// Wraps a report in the versioned envelope and pretty-prints it. Field
/// order follows struct declaration and all maps are sorted, so the output
/// bytes are a pure function of the input.
pub fn report_json<T: Serialize>(command: &str, report: &T) -> String {
    let env = Envelope { schema_version: SCHEMA_VERSION, command, report };
    serde_json::to_string_pretty(&env).expect("report serializes")
}

/// Exact matrix rendering, row major, every entry `"p"` or `"p/q"`.
pub fn matrix_to_strings(m: &QMat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| format_rational_vector(m.row(i))).collect()
}

/// One monomial of a bigraded class, indices 1-based and increasing.
#[derive(Debug, Clone, Serialize)]
pub struct ClassTermDoc {
    pub j: Vec<u32>,
    pub i: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassDoc {
    /// `"homology"` or `"cohomology"`.
    pub side: String,
    pub terms: Vec<ClassTermDoc>,
}

pub fn class_to_doc(c: &BigradedClass) -> ClassDoc {
    let side = match c.side() {
        Side::Homology => "homology",
        Side::Cohomology => "cohomology",
    };
    ClassDoc {
        side: side.to_string(),
        terms: c
            .terms_sorted()
            .into_iter()
            .map(|(j, i, coeff)| ClassTermDoc { j, i, coeff: coeff.to_string() })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PeriodDoc {
    pub genus: usize,
    pub matrix: Vec<Vec<String>>,
}

pub fn period_to_doc(pm: &PeriodMatrix) -> PeriodDoc {
    PeriodDoc { genus: pm.genus(), matrix: matrix_to_strings(pm.matrix()) }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaDoc {
    pub value: String,
    pub minimizers: Vec<Vec<i64>>,
    pub certified_radius: u32,
    /// Divisor membership: at least two lattice minimizers.
    pub on_divisor: bool,
}

/// A theta evaluation together with the inputs that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaEvalDoc {
    pub genus: usize,
    pub x: Vec<String>,
    pub l: Vec<String>,
    pub theta: ThetaDoc,
}

pub fn theta_eval_to_doc(datum: &AppellHumbertDatum, x: &[Q], value: &ThetaValue) -> ThetaEvalDoc {
    ThetaEvalDoc {
        genus: datum.genus(),
        x: format_rational_vector(x),
        l: format_rational_vector(datum.l()),
        theta: theta_to_doc(value),
    }
}

pub fn theta_to_doc(v: &ThetaValue) -> ThetaDoc {
    ThetaDoc {
        value: format_rational(&v.value),
        minimizers: v.minimizers.clone(),
        certified_radius: v.certified_radius,
        on_divisor: v.minimizers.len() >= 2,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PoincareRowDoc {
    pub d: usize,
    pub factor: String,
    pub class_wd: ClassDoc,
    pub class_theta_power: ClassDoc,
    pub equal: bool,
    pub pontryagin_equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeCheckDoc {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationDoc {
    pub genus: usize,
    pub rows: Vec<PoincareRowDoc>,
    pub degree_checks: Vec<DegreeCheckDoc>,
    pub all_passed: bool,
}

pub fn verification_to_doc(r: &VerificationReport) -> VerificationDoc {
    VerificationDoc {
        genus: r.genus,
        rows: r
            .rows
            .iter()
            .map(|row| PoincareRowDoc {
                d: row.d,
                factor: row.factor.to_string(),
                class_wd: class_to_doc(&row.class_wd),
                class_theta_power: class_to_doc(&row.class_theta_power),
                equal: row.equal,
                pontryagin_equal: row.pontryagin_equal,
            })
            .collect(),
        degree_checks: r
            .degree_checks
            .iter()
            .map(|c| DegreeCheckDoc {
                name: c.name.clone(),
                expected: c.expected.to_string(),
                computed: c.computed.to_string(),
                equal: c.equal,
            })
            .collect(),
        all_passed: r.all_passed,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WdCellDoc {
    pub edges: Vec<String>,
    pub base: Vec<String>,
    pub generators: Vec<Vec<String>>,
    pub weight: i64,
}

pub fn wd_cell_to_doc(c: &WdCell) -> WdCellDoc {
    WdCellDoc {
        edges: c.edges.clone(),
        base: format_rational_vector(c.base.coords()),
        generators: c.generators.iter().map(|g| format_rational_vector(g)).collect(),
        weight: c.weight,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusFileDoc {
    pub file: String,
    /// `"pass"`, `"input-error"`, or `"verify-fail"`.
    pub status: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusDoc {
    pub total: usize,
    pub passed: usize,
    pub input_errors: usize,
    pub verify_failures: usize,
    pub files: Vec<CorpusFileDoc>,
}

pub fn corpus_to_doc(r: &CorpusReport) -> CorpusDoc {
    CorpusDoc {
        total: r.graphs.len(),
        passed: r.passed(),
        input_errors: r.input_errors(),
        verify_failures: r.verify_failures(),
        files: r
            .graphs
            .iter()
            .map(|g| {
                let (status, details) = match &g.status {
                    GraphStatus::Pass => ("pass", Vec::new()),
                    GraphStatus::InputError(msg) => ("input-error", vec![msg.clone()]),
                    GraphStatus::VerifyFail(msgs) => ("verify-fail", msgs.clone()),
                };
                CorpusFileDoc { file: g.file.clone(), status: status.to_string(), details }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qi};

    #[test]
    fn rational_grammar_accepts_exact_forms() {
        assert_eq!(parse_rational("3").unwrap(), qi(3));
        assert_eq!(parse_rational("-3").unwrap(), qi(-3));
        assert_eq!(parse_rational("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_rational("-3/2").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_rational("0").unwrap(), qi(0));
    }

    #[test]
    fn rational_grammar_rejects_everything_else() {
        for bad in ["", " 1", "1 ", "1.5", "a", "1/", "/2", "1//2", "1/a", "1/+2", "1/-2", "--1"] {
            assert!(
                matches!(parse_rational(bad), Err(RationalParseError::Malformed(_))),
                "expected Malformed for {bad:?}"
            );
        }
        assert!(matches!(
            parse_rational("1/0"),
            Err(RationalParseError::NonPositiveDenominator(_))
        ));
    }

    #[test]
    fn rendering_uses_integer_form_when_possible() {
        assert_eq!(format_rational(&qi(5)), "5");
        assert_eq!(format_rational(&q(-4, 2)), "-2");
        assert_eq!(format_rational(&q(3, 2)), "3/2");
        assert_eq!(format_rational(&q(-1, 3)), "-1/3");
    }

    #[test]
    fn vector_parsing_round_trips() {
        let v = parse_rational_vector("1,3/2,-2/5").unwrap();
        assert_eq!(v, vec![qi(1), q(3, 2), q(-2, 5)]);
        assert_eq!(format_rational_vector(&v), vec!["1", "3/2", "-2/5"]);
        assert_eq!(parse_rational_vector("").unwrap(), Vec::<Q>::new());
        assert!(parse_rational_vector("1,,2").is_err());
    }

    #[test]
    fn graph_documents_round_trip() {
        let text = r#"{
            "vertices": ["v", "w"],
            "edges": [{"id": "e1", "src": "v", "dst": "w", "length": "3/2"}],
            "basepoint": "v"
        }"#;
        let g = graph_from_json(text).unwrap();
        assert_eq!(g.vertices(), &["v".to_string(), "w".to_string()]);
        assert_eq!(g.edges()[0].length, q(3, 2));
        assert_eq!(g.basepoint(), "v");

        let again = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(again.edges()[0].length, q(3, 2));
        assert_eq!(again.basepoint(), "v");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = graph_from_json("{\"vertices\": [,]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 1"), "missing position in: {msg}");
        assert!(msg.contains("column"), "missing position in: {msg}");
    }

    #[test]
    fn bad_length_names_the_edge() {
        let text = r#"{
            "vertices": ["v"],
            "edges": [{"id": "e9", "src": "v", "dst": "v", "length": "1.5"}]
        }"#;
        let err = graph_from_json(text).unwrap_err();
        assert!(err.to_string().contains("e9"), "got: {err}");
    }

    #[test]
    fn report_envelope_bytes_are_stable() {
        #[derive(Serialize)]
        struct Tiny {
            genus: usize,
            matrix: Vec<Vec<String>>,
        }
        let report = Tiny { genus: 1, matrix: vec![vec!["2".to_string()]] };
        let expected = concat!(
            "{\n",
            "  \"schema_version\": 1,\n",
            "  \"command\": \"period\",\n",
            "  \"report\": {\n",
            "    \"genus\": 1,\n",
            "    \"matrix\": [\n",
            "      [\n",
            "        \"2\"\n",
            "      ]\n",
            "    ]\n",
            "  }\n",
            "}",
        );
        assert_eq!(report_json("period", &report), expected);
    }

    #[test]
    fn class_documents_list_terms_in_order() {
        let doc = class_to_doc(&crate::tautological::class_w1(2));
        assert_eq!(doc.side, "homology");
        assert_eq!(doc.terms.len(), 2);
        assert_eq!(doc.terms[0].j, vec![1]);
        assert_eq!(doc.terms[0].i, vec![1]);
        assert_eq!(doc.terms[0].coeff, "1");
        assert_eq!(doc.terms[1].j, vec![2]);
        assert_eq!(doc.terms[1].i, vec![2]);
    }

    #[test]
    fn theta_documents_carry_divisor_membership() {
        let v = ThetaValue {
            value: q(-1, 2),
            minimizers: vec![vec![0, 0], vec![1, 0]],
            certified_radius: 3,
        };
        let doc = theta_to_doc(&v);
        assert_eq!(doc.value, "-1/2");
        assert!(doc.on_divisor);
        let single =
            ThetaValue { value: qi(0), minimizers: vec![vec![0, 0]], certified_radius: 0 };
        assert!(!theta_to_doc(&single).on_divisor);
    }

    #[test]
    fn corpus_documents_tally_statuses() {
        use crate::corpus::GraphReport;
        let report = CorpusReport {
            graphs: vec![
                GraphReport { file: "a.json".to_string(), status: GraphStatus::Pass },
                GraphReport {
                    file: "b.json".to_string(),
                    status: GraphStatus::InputError("bad length".to_string()),
                },
                GraphReport {
                    file: "c.json".to_string(),
                    status: GraphStatus::VerifyFail(vec!["period not SPD".to_string()]),
                },
            ],
        };
        let doc = corpus_to_doc(&report);
        assert_eq!((doc.total, doc.passed, doc.input_errors, doc.verify_failures), (3, 1, 1, 1));
        assert_eq!(doc.files[0].status, "pass");
        assert!(doc.files[0].details.is_empty());
        assert_eq!(doc.files[1].status, "input-error");
        assert_eq!(doc.files[1].details, vec!["bad length".to_string()]);
        assert_eq!(doc.files[2].status, "verify-fail");
    }

    #[test]
    fn structural_graph_errors_pass_through() {
        let text = r#"{
            "vertices": ["v"],
            "edges": [{"id": "e", "src": "v", "dst": "ghost", "length": "1"}]
        }"#;
        match graph_from_json(text).unwrap_err() {
            ParseError::Graph(GraphError::UnknownVertex { edge, vertex }) => {
                assert_eq!(edge, "e");
                assert_eq!(vertex, "ghost");
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }
}
