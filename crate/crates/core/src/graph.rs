//! Metric graphs: validation, leaf pruning, spanning trees, fundamental
//! circuits, and the connectivity combinatorics behind the `W_d` loci.
//!
//! A metric graph is a connected multigraph (self-loops and parallel edges
//! allowed) with positive rational edge lengths. Its genus is the first
//! Betti number `|E| − |V| + 1`. Choosing a spanning tree `T` singles out
//! `g` cotree edges `e_1 … e_g`; each determines the fundamental circuit
//! `c_k` that traverses `e_k` forwards and returns through `T`. These
//! circuits are a basis of the cycle space and fix every coordinate system
//! used downstream.

use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Q;
use num_traits::Signed;

/// Errors from graph construction, validation, and combinatorics.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("duplicate vertex id \"{0}\"")]
    DuplicateVertexId(String),
    #[error("duplicate edge id \"{0}\"")]
    DuplicateEdgeId(String),
    #[error("edge \"{edge}\" references unknown vertex \"{vertex}\"")]
    UnknownVertex { edge: String, vertex: String },
    #[error("basepoint \"{0}\" is not a vertex")]
    UnknownBasepoint(String),
    #[error("unknown edge id \"{0}\"")]
    UnknownEdge(String),
    #[error("edge \"{edge}\" has non-positive length {length}")]
    NonPositiveLength { edge: String, length: Q },
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("graph has no edges left after pruning leaves")]
    EmptyAfterPruning,
    #[error("d = {d} is out of range 0..={genus}")]
    DOutOfRange { d: usize, genus: usize },
    #[error("t = {t} is outside [0, {length}] on edge \"{edge}\"")]
    CurvePointOutOfRange { edge: String, t: Q, length: Q },
}

/// An oriented edge of a metric graph. The orientation (`src` → `dst`) is
/// bookkeeping only — it fixes signs, not geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: String,
    pub dst: String,
    pub length: Q,
}

/// A connected multigraph with positive rational edge lengths and a marked
/// basepoint vertex. Immutable after construction; all operations are pure.
#[derive(Debug, Clone)]
pub struct MetricGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    basepoint: usize,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
}

impl MetricGraph {
    /// Builds a graph, checking structural well-formedness only (unique
    /// ids, known endpoints, known basepoint). Metric and topological
    /// validity is the job of [`MetricGraph::validate_and_prune`].
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<Edge>,
        basepoint: Option<String>,
    ) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertexId(v.clone()));
            }
        }
        let mut edge_index = HashMap::new();
        let mut src = Vec::with_capacity(edges.len());
        let mut dst = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if edge_index.insert(e.id.clone(), i).is_some() {
                return Err(GraphError::DuplicateEdgeId(e.id.clone()));
            }
            for v in [&e.src, &e.dst] {
                if !vertex_index.contains_key(v) {
                    return Err(GraphError::UnknownVertex {
                        edge: e.id.clone(),
                        vertex: v.clone(),
                    });
                }
            }
            src.push(vertex_index[&e.src]);
            dst.push(vertex_index[&e.dst]);
        }
        let basepoint = match basepoint {
            Some(b) => *vertex_index
                .get(&b)
                .ok_or(GraphError::UnknownBasepoint(b))?,
            None => 0,
        };
        Ok(MetricGraph { vertices, edges, basepoint, vertex_index, edge_index, src, dst })
    }

    /// Checks lengths and connectivity, then iteratively removes valence-1
    /// vertices (and their edges) until every vertex has valence ≥ 2.
    ///
    /// Pruning changes neither the genus nor any Jacobian-level quantity;
    /// it only removes contractible decorations. If the designated
    /// basepoint is pruned away, the first surviving vertex takes over.
    /// Errors if the pruned graph has no edges left.
    pub fn validate_and_prune(&self) -> Result<MetricGraph, GraphError> {
        for e in &self.edges {
            if !e.length.is_positive() {
                return Err(GraphError::NonPositiveLength {
                    edge: e.id.clone(),
                    length: e.length.clone(),
                });
            }
        }
        if !self.is_connected() {
            return Err(GraphError::DisconnectedGraph);
        }

        // Iteratively strip valence-≤1 vertices. Valence 0 can only appear
        // for intermediate orphans (both endpoints of a pruned path); the
        // connectivity of what remains is never broken by removing leaves.
        let mut vertex_alive = vec![true; self.vertices.len()];
        let mut edge_alive = vec![true; self.edges.len()];
        loop {
            let mut valence = vec![0usize; self.vertices.len()];
            for i in 0..self.edges.len() {
                if edge_alive[i] {
                    valence[self.src[i]] += 1;
                    valence[self.dst[i]] += 1;
                }
            }
            let doomed: Vec<usize> = (0..self.vertices.len())
                .filter(|&v| vertex_alive[v] && valence[v] <= 1)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                vertex_alive[v] = false;
                for i in 0..self.edges.len() {
                    if self.src[i] == v || self.dst[i] == v {
                        edge_alive[i] = false;
                    }
                }
            }
        }
        if !edge_alive.iter().any(|&a| a) {
            return Err(GraphError::EmptyAfterPruning);
        }

        let vertices: Vec<String> = (0..self.vertices.len())
            .filter(|&v| vertex_alive[v])
            .map(|v| self.vertices[v].clone())
            .collect();
        let edges: Vec<Edge> = (0..self.edges.len())
            .filter(|&i| edge_alive[i])
            .map(|i| self.edges[i].clone())
            .collect();
        let basepoint = if vertex_alive[self.basepoint] {
            Some(self.vertices[self.basepoint].clone())
        } else {
            None // falls back to the first surviving vertex
        };
        MetricGraph::new(vertices, edges, basepoint)
    }

    /// First Betti number `|E| − |V| + 1` of a connected graph.
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn basepoint(&self) -> &str {
        &self.vertices[self.basepoint]
    }

    pub fn basepoint_index(&self) -> usize {
        self.basepoint
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    /// Endpoint indices `(src, dst)` of the edge at `idx`.
    pub fn endpoints(&self, idx: usize) -> (usize, usize) {
        (self.src[idx], self.dst[idx])
    }

    /// Number of edge ends incident to the vertex (a self-loop counts 2).
    pub fn valence(&self, vertex: usize) -> usize {
        (0..self.edges.len())
            .map(|i| {
                (self.src[i] == vertex) as usize + (self.dst[i] == vertex) as usize
            })
            .sum()
    }

    /// True iff every vertex is reachable from the first one over all edges.
    pub fn is_connected(&self) -> bool {
        self.component_count(&vec![false; self.edges.len()]) == 1
    }

    /// True iff removing the (open) edges in `removed` leaves the space
    /// connected. All vertices are retained, so a single-vertex graph is
    /// connected no matter what is removed.
    pub fn is_complement_connected(&self, removed: &BTreeSet<String>) -> bool {
        let mut mask = vec![false; self.edges.len()];
        for id in removed {
            match self.edge_index(id) {
                Some(i) => mask[i] = true,
                None => return false,
            }
        }
        self.component_count(&mask) == 1
    }

    /// Same check with the removed set given as an edge-index mask.
    pub(crate) fn complement_connected(&self, removed: &[bool]) -> bool {
        self.component_count(removed) == 1
    }

    fn component_count(&self, removed_edges: &[bool]) -> usize {
        if self.vertices.is_empty() {
            return 0;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut components = 0;
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                for i in 0..self.edges.len() {
                    if removed_edges[i] {
                        continue;
                    }
                    for w in [self.src[i], self.dst[i]] {
                        if (self.src[i] == v || self.dst[i] == v) && !seen[w] {
                            seen[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        components
    }

    /// All size-`d` edge subsets whose removal keeps the graph connected —
    /// equivalently, the independent sets of size `d` in the cographic
    /// matroid. Each subset is a sorted id list; the list of subsets is
    /// lexicographically sorted.
    pub fn wd_cell_subsets(&self, d: usize) -> Result<Vec<Vec<String>>, GraphError> {
        let g = self.genus();
        if d > g {
            return Err(GraphError::DOutOfRange { d, genus: g });
        }
        let mut ids: Vec<&String> = self.edges.iter().map(|e| &e.id).collect();
        ids.sort();
        let mut out = Vec::new();
        for combo in ids.iter().combinations(d) {
            let mut mask = vec![false; self.edges.len()];
            for id in &combo {
                mask[self.edge_index(id).unwrap()] = true;
            }
            if self.complement_connected(&mask) {
                out.push(combo.into_iter().map(|s| (*s).clone()).collect());
            }
        }
        Ok(out)
    }

    /// Fundamental-circuit basis for a deterministic spanning tree.
    ///
    /// With `seed = 0` the tree is the Kruskal tree for the ascending
    /// `(length, edge id)` order — reproducible across runs, which is what
    /// the golden tests rely on. A nonzero `seed` instead shuffles the edge
    /// order (ChaCha8), producing a valid but randomized tree; this is only
    /// interesting for tests that must not depend on the tree choice.
    pub fn circuit_basis(&self, seed: u64) -> CircuitBasis {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        if seed == 0 {
            order.sort_by(|&a, &b| {
                (&self.edges[a].length, &self.edges[a].id)
                    .cmp(&(&self.edges[b].length, &self.edges[b].id))
            });
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            order.shuffle(&mut rng);
        }

        // Kruskal: an edge joins the tree iff it connects two components.
        let mut comp: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(comp: &mut Vec<usize>, v: usize) -> usize {
            if comp[v] != v {
                let root = find(comp, comp[v]);
                comp[v] = root;
            }
            comp[v]
        }
        let mut in_tree = vec![false; self.edges.len()];
        for &i in &order {
            let (a, b) = (find(&mut comp, self.src[i]), find(&mut comp, self.dst[i]));
            if a != b {
                comp[a] = b;
                in_tree[i] = true;
            }
        }

        // Tree adjacency for path closure.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertices.len()];
        for i in 0..self.edges.len() {
            if in_tree[i] {
                adj[self.src[i]].push((self.dst[i], i));
                adj[self.dst[i]].push((self.src[i], i));
            }
        }

        // Cotree edges in input order; one fundamental circuit each. The
        // circuit traverses e_k positively (src → dst) and closes from
        // dst(e_k) back to src(e_k) through the tree, so its entry on a
        // tree edge f is +1 when the closure runs along f's orientation
        // and −1 against it. A self-loop closes instantly (empty path).
        let cotree: Vec<usize> = (0..self.edges.len()).filter(|&i| !in_tree[i]).collect();
        let mut circuits = Vec::with_capacity(cotree.len());
        for &k in &cotree {
            let mut circuit = vec![0i64; self.edges.len()];
            circuit[k] = 1;
            for (edge, forward) in self.tree_path(&adj, self.dst[k], self.src[k]) {
                circuit[edge] += if forward { 1 } else { -1 };
            }
            circuits.push(circuit);
        }

        let basis = CircuitBasis {
            tree_edges: (0..self.edges.len())
                .filter(|&i| in_tree[i])
                .map(|i| self.edges[i].id.clone())
                .collect(),
            cotree_edges: cotree.iter().map(|&i| self.edges[i].id.clone()).collect(),
            circuits,
            cotree_indices: cotree,
        };
        debug_assert!(basis.cotree_pattern_is_identity());
        basis
    }

    /// Edges of the unique tree path `from → to`, each tagged with whether
    /// it is traversed along its own orientation.
    fn tree_path(
        &self,
        adj: &[Vec<(usize, usize)>],
        from: usize,
        to: usize,
    ) -> Vec<(usize, bool)> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertices.len()];
        let mut seen = vec![false; self.vertices.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &(w, edge) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, edge));
                    queue.push_back(w);
                }
            }
        }
        let mut path = Vec::new();
        let mut v = to;
        while let Some((u, edge)) = prev[v] {
            // Traversed u → v; forward iff that matches src → dst.
            path.push((edge, self.src[edge] == u && self.dst[edge] == v));
            v = u;
        }
        path.reverse();
        path
    }
}

/// A spanning tree together with its ordered cotree edges and fundamental
/// circuits. Circuit `c_k` is stored as a signed integer vector indexed by
/// the graph's edge positions; entries lie in {−1, 0, 1}, with the identity
/// pattern on cotree positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitBasis {
    tree_edges: BTreeSet<String>,
    cotree_edges: Vec<String>,
    circuits: Vec<Vec<i64>>,
    cotree_indices: Vec<usize>,
}

impl CircuitBasis {
    /// Genus = number of cotree edges = number of circuits.
    pub fn genus(&self) -> usize {
        self.cotree_edges.len()
    }

    pub fn tree_edges(&self) -> &BTreeSet<String> {
        &self.tree_edges
    }

    /// Cotree edge ids `e_1 … e_g`, in the order the circuits are indexed.
    pub fn cotree_edges(&self) -> &[String] {
        &self.cotree_edges
    }

    /// Edge positions of the cotree edges within the graph's edge list.
    pub fn cotree_indices(&self) -> &[usize] {
        &self.cotree_indices
    }

    /// The k-th fundamental circuit (0-based) over all edge positions.
    pub fn circuit(&self, k: usize) -> &[i64] {
        &self.circuits[k]
    }

    pub fn circuits(&self) -> &[Vec<i64>] {
        &self.circuits
    }

    /// Checks that the g×g submatrix on cotree columns is the identity.
    pub fn cotree_pattern_is_identity(&self) -> bool {
        self.circuits.iter().enumerate().all(|(k, c)| {
            self.cotree_indices
                .iter()
                .enumerate()
                .all(|(l, &idx)| c[idx] == if k == l { 1 } else { 0 })
        })
    }
}
