//! Tropical Jacobians of metric graphs, in exact rational arithmetic.
//!
//! A compact metric graph `Γ` (a multigraph with positive rational edge
//! lengths) has a Jacobian: the real torus `R^g / Λ` where `g` is the first
//! Betti number and `Λ` is the image of the cycle lattice under the cycle
//! pairing. This crate builds that torus explicitly and computes on it:
//!
//! * [`graph`] — the metric-graph data model, leaf pruning, spanning trees,
//!   fundamental circuits, and the connectivity combinatorics behind the
//!   Abel–Jacobi image loci `W_d`;
//! * [`jacobian`] — the period Gram matrix, the lattice embedding, exact
//!   Abel–Jacobi evaluation, and the parallelotope cells of `W_d`;
//! * [`homology`] — the bigraded exterior-algebra model of the homology and
//!   cohomology of a real torus, with Pontryagin, cup, cap, Poincaré
//!   duality, intersection product, and degree;
//! * [`tautological`] — closed-form cycle classes (`[W_d]`, powers of the
//!   theta divisor class) and the verification pipeline for the Poincaré
//!   formula `(g−d)!·[W_d] = [Θ]^{g−d}` and its corollaries;
//! * [`theta`] — Appell–Humbert line-bundle algebra and the tropical
//!   Riemann theta function, minimized over the lattice with a fully
//!   rational enumeration certificate;
//! * [`io`] — strict JSON (de)serialization with rationals as `"p/q"`
//!   strings;
//! * [`corpus`] — seeded random graph generation and the batch verification
//!   runner used by the CLI and the acceptance suite.
//!
//! Everything is exact: no floating point appears anywhere in the crate.

pub mod corpus;
pub mod graph;
pub mod homology;
pub mod io;
pub mod jacobian;
pub mod linalg;
pub mod tautological;
pub mod theta;
