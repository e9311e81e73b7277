//! The tropical Jacobian: period Gram matrix, lattice embedding, exact
//! Abel–Jacobi evaluation, and the parallelotope cells of the loci `W_d`.
//!
//! Coordinates. Everything lives in the δ-basis dual to the fundamental
//! circuits under the cycle pairing `Q(γ, γ′) = Σ_e len(e)·γ(e)·γ′(e)`.
//! In these coordinates the lattice `Λ = H₁(Γ; Z)` embeds as the column
//! lattice of the Gram matrix `G[i][j] = Q(c_i, c_j)`: the circuit `c_i`
//! lands on column `i`. A point of the Jacobian is a δ-coordinate vector
//! modulo that column lattice; the canonical representative is the unique
//! lift `x` with `G⁻¹x ∈ [0,1)^g`.
//!
//! The Abel–Jacobi map integrates the circuit-dual forms from the
//! basepoint: an oriented edge `e` contributes its flow vector
//! `(c_1(e), …, c_g(e))` per unit length.

use crate::graph::{CircuitBasis, GraphError, MetricGraph};
use crate::linalg::{Q, QMat};
use num_traits::Zero;

/// The g×g Gram matrix of the cycle pairing on a fundamental-circuit
/// basis, together with its (cached) inverse. Symmetric positive definite
/// for every metric graph; the columns generate the period lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodMatrix {
    mat: QMat,
    inv: QMat,
}

/// Builds the period Gram matrix `G[i][j] = Σ_e len(e)·c_i(e)·c_j(e)`.
pub fn period_matrix(graph: &MetricGraph, basis: &CircuitBasis) -> PeriodMatrix {
    let g = basis.genus();
    let mut mat = QMat::zeros(g, g);
    for i in 0..g {
        for j in 0..=i {
            let mut acc = Q::zero();
            for (e, edge) in graph.edges().iter().enumerate() {
                let ci = basis.circuit(i)[e];
                let cj = basis.circuit(j)[e];
                if ci != 0 && cj != 0 {
                    acc += &edge.length * Q::from(num_bigint::BigInt::from(ci * cj));
                }
            }
            mat[(i, j)] = acc.clone();
            mat[(j, i)] = acc;
        }
    }
    let inv = mat
        .inverse()
        .expect("the cycle pairing of a metric graph is positive definite");
    PeriodMatrix { mat, inv }
}

impl PeriodMatrix {
    pub fn genus(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &QMat {
        &self.mat
    }

    pub fn inverse(&self) -> &QMat {
        &self.inv
    }

    /// δ-coordinates of the lattice generator `c_i`: column `i` of `G`.
    pub fn lattice_generator(&self, i: usize) -> Vec<Q> {
        self.mat.column(i)
    }

    /// Exact Sylvester check (all leading principal minors positive).
    pub fn is_positive_definite(&self) -> bool {
        self.mat.is_positive_definite()
    }

    /// Circuit-basis coordinates `G⁻¹·x` of a δ-coordinate vector.
    pub fn circuit_coordinates(&self, x: &[Q]) -> Vec<Q> {
        self.inv.mul_vec(x)
    }
}

/// A point of the Jacobian, stored as the canonical lift: the unique
/// representative `x` of its lattice coset with `G⁻¹x ∈ [0,1)^g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint {
    coords: Vec<Q>,
}

impl TorusPoint {
    /// Reduces an arbitrary δ-coordinate lift to the canonical
    /// representative: take fractional parts in circuit coordinates and
    /// map back.
    pub fn from_lift(lift: &[Q], pm: &PeriodMatrix) -> TorusPoint {
        assert_eq!(lift.len(), pm.genus(), "dimension mismatch");
        let frac: Vec<Q> = pm
            .circuit_coordinates(lift)
            .into_iter()
            .map(|y| &y - y.floor())
            .collect();
        TorusPoint { coords: pm.matrix().mul_vec(&frac) }
    }

    pub fn zero(g: usize) -> TorusPoint {
        TorusPoint { coords: vec![Q::zero(); g] }
    }

    /// Canonical δ-coordinates.
    pub fn coords(&self) -> &[Q] {
        &self.coords
    }
}

/// A point on the metric graph: an edge id and an offset `0 ≤ t ≤ length`
/// measured from the edge's `src` endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    edge: String,
    t: Q,
}

impl CurvePoint {
    pub fn new(graph: &MetricGraph, edge: &str, t: Q) -> Result<CurvePoint, GraphError> {
        let idx = graph
            .edge_index(edge)
            .ok_or_else(|| GraphError::UnknownEdge(edge.to_string()))?;
        let length = &graph.edges()[idx].length;
        if t < Q::zero() || &t > length {
            return Err(GraphError::CurvePointOutOfRange {
                edge: edge.to_string(),
                t,
                length: length.clone(),
            });
        }
        Ok(CurvePoint { edge: edge.to_string(), t })
    }

    pub fn edge(&self) -> &str {
        &self.edge
    }

    pub fn t(&self) -> &Q {
        &self.t
    }
}

/// Per-unit-length Abel–Jacobi velocity of the oriented edge in
/// δ-coordinates: the flow vector `(c_1(e), …, c_g(e))`. For the k-th
/// cotree edge this is the k-th standard unit vector.
pub fn edge_direction(
    graph: &MetricGraph,
    basis: &CircuitBasis,
    edge: &str,
) -> Result<Vec<i64>, GraphError> {
    let idx = graph
        .edge_index(edge)
        .ok_or_else(|| GraphError::UnknownEdge(edge.to_string()))?;
    Ok(edge_direction_at(basis, idx))
}

/// Same as [`edge_direction`], indexed by edge position.
pub fn edge_direction_at(basis: &CircuitBasis, idx: usize) -> Vec<i64> {
    basis.circuits().iter().map(|c| c[idx]).collect()
}

fn direction_q(basis: &CircuitBasis, idx: usize) -> Vec<Q> {
    edge_direction_at(basis, idx)
        .into_iter()
        .map(|n| Q::from(num_bigint::BigInt::from(n)))
        .collect()
}

/// δ-coordinate lifts of the Abel–Jacobi images of all vertices, computed
/// along tree paths from the basepoint (entry `v` is the lift of `Φ(v)`).
pub fn vertex_lifts(graph: &MetricGraph, basis: &CircuitBasis) -> Vec<Vec<Q>> {
    let g = basis.genus();
    let n = graph.vertices().len();
    // Tree adjacency: (neighbor, edge index, oriented forward?).
    let mut adj: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for id in basis.tree_edges() {
        let idx = graph.edge_index(id).expect("tree edge belongs to the graph");
        let (s, d) = graph.endpoints(idx);
        adj[s].push((d, idx, true));
        adj[d].push((s, idx, false));
    }
    let mut lifts: Vec<Option<Vec<Q>>> = vec![None; n];
    let root = graph.basepoint_index();
    lifts[root] = Some(vec![Q::zero(); g]);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let here = lifts[v].clone().expect("visited vertices have lifts");
        for &(w, idx, forward) in &adj[v] {
            if lifts[w].is_some() {
                continue;
            }
            let step = direction_q(basis, idx);
            let len = &graph.edges()[idx].length;
            let lift: Vec<Q> = here
                .iter()
                .zip(&step)
                .map(|(h, s)| if forward { h + len * s } else { h - len * s })
                .collect();
            lifts[w] = Some(lift);
            queue.push_back(w);
        }
    }
    lifts
        .into_iter()
        .map(|l| l.expect("spanning tree reaches every vertex"))
        .collect()
}

/// δ-coordinate lift of the Abel–Jacobi image of a curve point: the tree
/// path to `src(edge)` plus `t` units along the edge.
pub fn abel_jacobi_lift(
    graph: &MetricGraph,
    basis: &CircuitBasis,
    p: &CurvePoint,
) -> Vec<Q> {
    let idx = graph.edge_index(p.edge()).expect("curve point is on the graph");
    let (src, _) = graph.endpoints(idx);
    let base = &vertex_lifts(graph, basis)[src];
    let dir = direction_q(basis, idx);
    base.iter().zip(&dir).map(|(b, d)| b + p.t() * d).collect()
}

/// Abel–Jacobi image of one curve point, canonically reduced.
pub fn abel_jacobi(
    graph: &MetricGraph,
    basis: &CircuitBasis,
    pm: &PeriodMatrix,
    p: &CurvePoint,
) -> TorusPoint {
    TorusPoint::from_lift(&abel_jacobi_lift(graph, basis, p), pm)
}

/// Abel–Jacobi image of a formal sum of curve points (the d-fold map):
/// lifts add, then one canonical reduction.
pub fn abel_jacobi_divisor(
    graph: &MetricGraph,
    basis: &CircuitBasis,
    pm: &PeriodMatrix,
    points: &[CurvePoint],
) -> TorusPoint {
    let mut total = vec![Q::zero(); basis.genus()];
    for p in points {
        for (acc, x) in total.iter_mut().zip(abel_jacobi_lift(graph, basis, p)) {
            *acc += x;
        }
    }
    TorusPoint::from_lift(&total, pm)
}

/// Lift of the closed loop along fundamental circuit `k`:
/// `Σ_e c_k(e)·len(e)·dir(e)`. Always equals column `k` of the period
/// matrix — the loop-consistency identity the acceptance suite pins down.
pub fn circuit_lift(graph: &MetricGraph, basis: &CircuitBasis, k: usize) -> Vec<Q> {
    let g = basis.genus();
    let mut total = vec![Q::zero(); g];
    for (e, edge) in graph.edges().iter().enumerate() {
        let coeff = basis.circuit(k)[e];
        if coeff == 0 {
            continue;
        }
        let dir = direction_q(basis, e);
        let scale = &edge.length * Q::from(num_bigint::BigInt::from(coeff));
        for (acc, d) in total.iter_mut().zip(&dir) {
            *acc += &scale * d;
        }
    }
    total
}

/// One parallelotope cell of the locus `W_d`: the Abel–Jacobi image of the
/// product of `d` edges whose removal keeps the graph connected. The cell
/// is the base point translated by the half-open span of the generators;
/// every cell carries multiplicity 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WdCell {
    /// Canonical image of `Σ_{f∈S} Φ(src(f))`.
    pub base: TorusPoint,
    /// One generator `len(f)·dir(f)` per edge of the subset, in δ-coordinates.
    pub generators: Vec<Vec<Q>>,
    /// Cell multiplicity; always 1 here.
    pub weight: i64,
    /// The edge subset indexing the cell (sorted ids).
    pub edges: Vec<String>,
}

/// All cells of `W_d`, one per subset from
/// [`MetricGraph::wd_cell_subsets`], in the same lexicographic order.
pub fn wd_cells(
    graph: &MetricGraph,
    basis: &CircuitBasis,
    pm: &PeriodMatrix,
    d: usize,
) -> Result<Vec<WdCell>, GraphError> {
    let subsets = graph.wd_cell_subsets(d)?;
    let lifts = vertex_lifts(graph, basis);
    let g = basis.genus();
    let mut cells = Vec::with_capacity(subsets.len());
    for subset in subsets {
        let mut base = vec![Q::zero(); g];
        let mut generators = Vec::with_capacity(subset.len());
        for id in &subset {
            let idx = graph.edge_index(id).expect("subset edges belong to the graph");
            let (src, _) = graph.endpoints(idx);
            for (acc, x) in base.iter_mut().zip(&lifts[src]) {
                *acc += x;
            }
            let len = &graph.edges()[idx].length;
            generators.push(direction_q(basis, idx).into_iter().map(|c| len * c).collect());
        }
        cells.push(WdCell {
            base: TorusPoint::from_lift(&base, pm),
            generators,
            weight: 1,
            edges: subset,
        });
    }
    Ok(cells)
}
