//! Appell–Humbert line-bundle algebra and the tropical Riemann theta
//! function, evaluated by certified lattice minimization.
//!
//! A line bundle on the Jacobian torus is described by a pair `(E, l)`:
//! a symmetric rational form `E` expressed in circuit coordinates
//! (`E(λ, λ′) = nᵀ·E_mat·n′` for lattice vectors with circuit coordinates
//! `n, n′`) together with a rational covector `l` (`l(λ) = l·n`). The
//! integrality required of a factor of automorphy amounts to `E_mat·G⁻¹`
//! having integer entries, where `G` is the period matrix; the principal
//! polarization is `E_mat = G, l = 0`.
//!
//! The theta section of a positive-definite datum is the concave function
//!
//! ```text
//! φ(x) = min over n ∈ Z^g of  f(n) = n·b + ½·nᵀ·E·n,   b = E·G⁻¹·x − l,
//! ```
//!
//! (for the principal datum `b = x − l`, since `E·G⁻¹ = I`). Everything is
//! exact: the enumeration stops only when a rational eigenvalue bound
//! certifies that no integer vector outside the scanned region can attain
//! or tie the incumbent minimum, so the minimizer set — and with it
//! membership in the theta divisor, the break locus of `φ` — is exact.

use crate::jacobian::PeriodMatrix;
use crate::linalg::{all_integral, dot, one_norm, q, qi, Q, QMat};
use itertools::Itertools;
use num_traits::{ToPrimitive, Zero};

/// Errors from line-bundle construction and theta evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("the form matrix is not symmetric")]
    NotSymmetric,
    #[error("the form does not pair integrally with the period lattice")]
    NotIntegral,
    #[error("the form matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("genus {genus} exceeds the supported bound {max} for relevant-vector enumeration")]
    GenusTooLarge { genus: usize, max: usize },
}

/// Appell–Humbert data `(E, l)` for a line bundle on a fixed Jacobian.
///
/// The datum carries its period matrix so that all pairings (which go
/// through `G⁻¹`) are self-contained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppellHumbertDatum {
    periods: PeriodMatrix,
    e_mat: QMat,
    l: Vec<Q>,
}

impl AppellHumbertDatum {
    /// Validates and wraps a datum: `e_mat` must be a symmetric g×g matrix
    /// and `E·G⁻¹` must have integer entries (the factor-of-automorphy
    /// integrality condition in circuit coordinates).
    pub fn new(
        periods: PeriodMatrix,
        e_mat: QMat,
        l: Vec<Q>,
    ) -> Result<AppellHumbertDatum, ThetaError> {
        let g = periods.genus();
        if e_mat.rows() != g || e_mat.cols() != g {
            return Err(ThetaError::DimensionMismatch { expected: g, got: e_mat.rows() });
        }
        if l.len() != g {
            return Err(ThetaError::DimensionMismatch { expected: g, got: l.len() });
        }
        if !e_mat.is_symmetric() {
            return Err(ThetaError::NotSymmetric);
        }
        let product = e_mat.mul(periods.inverse());
        if !(0..g).all(|i| all_integral(product.row(i))) {
            return Err(ThetaError::NotIntegral);
        }
        Ok(AppellHumbertDatum { periods, e_mat, l })
    }

    /// The principal polarization `(G, 0)`.
    pub fn principal(periods: PeriodMatrix) -> AppellHumbertDatum {
        let e_mat = periods.matrix().clone();
        let g = periods.genus();
        AppellHumbertDatum { periods, e_mat, l: vec![Q::zero(); g] }
    }

    pub fn genus(&self) -> usize {
        self.periods.genus()
    }

    pub fn periods(&self) -> &PeriodMatrix {
        &self.periods
    }

    pub fn e_mat(&self) -> &QMat {
        &self.e_mat
    }

    pub fn l(&self) -> &[Q] {
        &self.l
    }

    /// The affine coefficient vector `b = E·G⁻¹·x − l` of the minimization
    /// target `f(n) = n·b + ½·nᵀ·E·n` at the lift `x` (δ-coordinates).
    fn pairing_vector(&self, x: &[Q]) -> Vec<Q> {
        let ex = self.e_mat.mul_vec(&self.periods.circuit_coordinates(x));
        ex.into_iter().zip(&self.l).map(|(a, b)| a - b).collect()
    }
}

/// Exact value of a theta function together with its full minimizer set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaValue {
    /// `min f(n)` over all integer vectors.
    pub value: Q,
    /// Every integer vector attaining `value`, in lexicographic order.
    pub minimizers: Vec<Vec<i64>>,
    /// Enumeration bound: the box of this radius around the rounded
    /// quadratic center was scanned, and the eigenvalue certificate rules
    /// out every integer vector beyond it.
    pub certified_radius: u32,
}

/// `nᵀ·E·n` for an integer vector against a rational symmetric matrix.
fn quadratic_form(e: &QMat, n: &[i64]) -> Q {
    let mut acc = Q::zero();
    for i in 0..n.len() {
        if n[i] == 0 {
            continue;
        }
        for j in 0..n.len() {
            if n[j] == 0 {
                continue;
            }
            acc += qi(n[i] * n[j]) * &e[(i, j)];
        }
    }
    acc
}

/// `f(n) = n·b + ½·nᵀ·E·n`, the function minimized by the theta section.
fn objective(e: &QMat, b: &[Q], n: &[i64]) -> Q {
    let linear: Q = n
        .iter()
        .zip(b)
        .filter(|(c, _)| **c != 0)
        .map(|(c, bi)| qi(*c) * bi)
        .sum();
    linear + quadratic_form(e, n) * q(1, 2)
}

/// Rational lower bound for the smallest eigenvalue of a positive-definite
/// matrix, the sharper of two exact estimates: `1/(g·max|entry of E⁻¹|)`
/// and `1/‖E⁻¹‖_∞` (for symmetric matrices `‖·‖₂ ≤ ‖·‖_∞`).
fn eigenvalue_lower_bound(e: &QMat, e_inv: &QMat) -> Q {
    let by_entry = qi(1) / (qi(e.rows() as i64) * e_inv.max_abs_entry());
    let by_row_sum = qi(1) / e_inv.max_abs_row_sum();
    by_entry.max(by_row_sum)
}

/// Rounds to the nearest integer (ties away from zero) as an `i64`.
fn round_to_i64(v: &Q) -> i64 {
    v.round().to_integer().to_i64().expect("rounded coordinate fits in i64")
}

/// The tropical factor of automorphy
/// `a(n, x) = l·n − nᵀ·E·G⁻¹·x − ½·nᵀ·E·n`
/// for the lattice vector with circuit coordinates `n` at the lift `x`.
/// Equivalently `a(n, x) = −f(n)` for the objective minimized at `x`.
pub fn factor_of_automorphy(
    datum: &AppellHumbertDatum,
    n: &[i64],
    x: &[Q],
) -> Result<Q, ThetaError> {
    let g = datum.genus();
    if n.len() != g {
        return Err(ThetaError::DimensionMismatch { expected: g, got: n.len() });
    }
    if x.len() != g {
        return Err(ThetaError::DimensionMismatch { expected: g, got: x.len() });
    }
    let b = datum.pairing_vector(x);
    Ok(-objective(&datum.e_mat, &b, n))
}

/// Whether two data describe isomorphic line bundles: same form `E`, and
/// the difference of linear parts integral on the period lattice, i.e.
/// `(l₁ − l₂)·G⁻¹ ∈ Z^g`. Data over different period matrices are never
/// isomorphic here (they live on different tori).
pub fn bundles_isomorphic(d1: &AppellHumbertDatum, d2: &AppellHumbertDatum) -> bool {
    if d1.periods.matrix() != d2.periods.matrix() || d1.e_mat != d2.e_mat {
        return false;
    }
    let diff: Vec<Q> = d1.l.iter().zip(&d2.l).map(|(a, b)| a - b).collect();
    all_integral(&d1.periods.inverse().vec_mul(&diff))
}

/// Pullback of the bundle along translation by the lift `y`:
/// `(E, l) ↦ (E, l − E·G⁻¹·y)`. Translating by a lattice vector yields a
/// bundle isomorphic to the input.
pub fn translate_pullback(
    datum: &AppellHumbertDatum,
    y: &[Q],
) -> Result<AppellHumbertDatum, ThetaError> {
    let g = datum.genus();
    if y.len() != g {
        return Err(ThetaError::DimensionMismatch { expected: g, got: y.len() });
    }
    let shift = datum.e_mat.mul_vec(&datum.periods.circuit_coordinates(y));
    let l = datum.l.iter().zip(shift).map(|(a, b)| a - b).collect();
    Ok(AppellHumbertDatum {
        periods: datum.periods.clone(),
        e_mat: datum.e_mat.clone(),
        l,
    })
}

/// Exhaustive-with-pruning scan of the box `|u|_∞ ≤ radius` for all
/// integer `u` minimizing `f(u) = u·b + ½·uᵀ·E·u`.
///
/// Works in closest-vector form: with `c = −E⁻¹·b` one has
/// `f(u) = ½·(u−c)ᵀ·E·(u−c) − v₀`, `v₀ = ½·cᵀ·E·c`, and the LDLᵀ pivots
/// turn the quadratic into a sum `Σ dᵢ·vᵢ²` accumulated one coordinate
/// at a time, so branches whose partial sum already exceeds the incumbent
/// budget are cut exactly. Visits every box point whose value ties or
/// beats the incumbent; the seed incumbent is `f(0) = 0`.
struct BoxScan<'a> {
    lower: &'a QMat,
    pivots: &'a [Q],
    center: &'a [Q],
    radius: i64,
    /// Quadratic-scale budget `2·(best + v₀)`, kept in sync with `best`.
    budget: Q,
    v0: Q,
    best: Q,
    minimizers: Vec<Vec<i64>>,
    u: Vec<i64>,
    z: Vec<Q>,
}

impl BoxScan<'_> {
    /// Fixes coordinate `level` (descending) given the partial quadratic
    /// sum `acc` of all higher coordinates.
    fn descend(&mut self, level: usize, acc: Q) {
        // Center of the admissible interval for u[level] given the
        // higher coordinates: c[level] − Σ_{j>level} L[j][level]·z[j].
        let mut ctr = self.center[level].clone();
        for j in level + 1..self.z.len() {
            ctr -= &self.lower[(j, level)] * &self.z[j];
        }
        let start = round_to_i64(&ctr);
        // Walk outward from the rounded center; on each side the pivot
        // contribution is monotone, so the first budget violation ends
        // the walk. The box bound caps both walks.
        for direction in [1i64, -1] {
            let mut val = if direction == 1 { start } else { start - 1 };
            loop {
                if val.abs() > self.radius {
                    break;
                }
                let v = qi(val) - &ctr;
                let contribution = &self.pivots[level] * &v * &v;
                let total = &acc + &contribution;
                if total > self.budget {
                    break;
                }
                self.u[level] = val;
                self.z[level] = qi(val) - &self.center[level];
                if level == 0 {
                    self.take_leaf(total);
                } else {
                    self.descend(level - 1, total);
                }
                val += direction;
            }
        }
    }

    fn take_leaf(&mut self, quad: Q) {
        if self.u.iter().all(|&v| v == 0) {
            return; // the seed point
        }
        let value = quad * q(1, 2) - &self.v0;
        if value < self.best {
            self.best = value.clone();
            self.budget = (value + &self.v0) * qi(2);
            self.minimizers.clear();
            self.minimizers.push(self.u.clone());
        } else if value == self.best {
            self.minimizers.push(self.u.clone());
        }
    }
}

/// Evaluates the theta function of a positive-definite datum at the lift
/// `x`: the exact minimum of `f(n) = n·b + ½·nᵀ·E·n` with `b = E·G⁻¹·x − l`,
/// plus the complete minimizer set.
///
/// The search is recentered first: with `m₀ = round(−E⁻¹·b)` and
/// `n = m₀ + u`, the residual problem has coefficient `b′ = b + E·m₀`
/// whose size is controlled by `E` alone, independent of `x`. The
/// certificate then fixes the box: for `|u|_∞ ≥ s` one has
/// `f′(u) ≥ h(s) = ½·λ·s² − |b′|₁·s` with `λ` the rational eigenvalue
/// bound, and `h` is nondecreasing once `s ≥ |b′|₁/λ`; the smallest `s`
/// past that vertex with `h(s) > f′(0) = 0` confines every minimizer to
/// the box of radius `s − 1`, which is scanned exhaustively (with exact
/// budget pruning).
pub fn theta_value(datum: &AppellHumbertDatum, x: &[Q]) -> Result<ThetaValue, ThetaError> {
    let g = datum.genus();
    if x.len() != g {
        return Err(ThetaError::DimensionMismatch { expected: g, got: x.len() });
    }
    let Some((lower, pivots)) = datum.e_mat.ldl() else {
        return Err(ThetaError::NotPositiveDefinite);
    };
    let e_inv = datum.e_mat.inverse().expect("positive-definite matrices are invertible");
    let lambda = eigenvalue_lower_bound(&datum.e_mat, &e_inv);

    let b = datum.pairing_vector(x);
    let center: Vec<i64> = e_inv.mul_vec(&b).iter().map(|v| round_to_i64(&-v)).collect();
    let base = objective(&datum.e_mat, &b, &center);
    let b_red: Vec<Q> = {
        let shift = datum
            .e_mat
            .mul_vec(&center.iter().map(|&v| qi(v)).collect::<Vec<_>>());
        b.iter().zip(shift).map(|(a, s)| a + s).collect()
    };
    let b_norm = one_norm(&b_red);

    // Smallest s past the vertex of h with h(s) > 0: every |u|_∞ ≥ s then
    // has f′(u) > 0 = f′(0), so the box of radius s−1 traps all minimizers.
    let mut s = (&b_norm / &lambda)
        .ceil()
        .to_integer()
        .to_i64()
        .expect("certificate vertex fits in i64")
        .max(1);
    while &lambda * qi(s) * qi(s) * q(1, 2) - &b_norm * qi(s) <= Q::zero() {
        s += 1;
    }
    let radius = s - 1;

    let mut minimizers = vec![vec![0i64; g]];
    let mut best = Q::zero();
    if radius > 0 {
        let c_red = e_inv.mul_vec(&b_red).iter().map(|v| -v).collect::<Vec<_>>();
        let v0 = -dot(&c_red, &b_red) * q(1, 2);
        let mut scan = BoxScan {
            lower: &lower,
            pivots: &pivots,
            center: &c_red,
            radius,
            budget: &v0 * qi(2),
            v0,
            best: Q::zero(),
            minimizers: Vec::new(),
            u: vec![0; g],
            z: vec![Q::zero(); g],
        };
        scan.descend(g - 1, Q::zero());
        if scan.best < Q::zero() {
            best = scan.best;
            minimizers = scan.minimizers;
        } else {
            minimizers.extend(scan.minimizers);
        }
    }

    let mut minimizers: Vec<Vec<i64>> = minimizers
        .into_iter()
        .map(|u| u.iter().zip(&center).map(|(a, b)| a + b).collect())
        .collect();
    minimizers.sort();
    Ok(ThetaValue {
        value: base + best,
        minimizers,
        certified_radius: radius.try_into().expect("certified radius fits in u32"),
    })
}

/// Whether the image of `x` lies on the theta divisor: the break locus of
/// the concave function `φ`, i.e. the points where the minimum is attained
/// at least twice.
pub fn on_theta_divisor(datum: &AppellHumbertDatum, x: &[Q]) -> Result<bool, ThetaError> {
    Ok(theta_value(datum, x)?.minimizers.len() >= 2)
}

/// Plain exhaustive minimization of `f` over the box `|n|_∞ ≤ radius`,
/// with no certificate: the caller chooses the box. Used as an independent
/// oracle against [`theta_value`].
pub fn brute_force_reference(
    datum: &AppellHumbertDatum,
    x: &[Q],
    radius: u32,
) -> Result<ThetaValue, ThetaError> {
    let g = datum.genus();
    if x.len() != g {
        return Err(ThetaError::DimensionMismatch { expected: g, got: x.len() });
    }
    let b = datum.pairing_vector(x);
    let r = radius as i64;
    let mut best: Option<Q> = None;
    let mut minimizers: Vec<Vec<i64>> = Vec::new();
    for n in (0..g).map(|_| -r..=r).multi_cartesian_product() {
        let value = objective(&datum.e_mat, &b, &n);
        match &best {
            Some(incumbent) if value > *incumbent => {}
            Some(incumbent) if value == *incumbent => minimizers.push(n),
            _ => {
                best = Some(value);
                minimizers = vec![n];
            }
        }
    }
    minimizers.sort();
    Ok(ThetaValue {
        value: best.expect("the box always contains the origin"),
        minimizers,
        certified_radius: radius,
    })
}

/// The Voronoi-relevant vectors of the period lattice: all nonzero `n`
/// such that `±n` are the unique minima of `m ↦ mᵀ·G·m` over the coset
/// `n + 2Z^g`. These index the facets of the Voronoi cell of the origin,
/// whose boundary structure carves out the theta divisor.
///
/// The enumeration is certified per coset: an incumbent from the sign
/// representatives in `{−1, 0, 1}^g` caps the box via the eigenvalue
/// bound. Refuses genus above 6 (the coset count grows as `2^g`).
pub fn voronoi_relevant_vectors(periods: &PeriodMatrix) -> Result<Vec<Vec<i64>>, ThetaError> {
    const MAX_GENUS: usize = 6;
    let g = periods.genus();
    if g > MAX_GENUS {
        return Err(ThetaError::GenusTooLarge { genus: g, max: MAX_GENUS });
    }
    let gram = periods.matrix();
    if !gram.is_positive_definite() {
        return Err(ThetaError::NotPositiveDefinite);
    }
    let lambda = eigenvalue_lower_bound(gram, periods.inverse());

    let mut relevant: Vec<Vec<i64>> = Vec::new();
    for coset in 1u32..1 << g {
        let parity: Vec<i64> = (0..g).map(|i| ((coset >> i) & 1) as i64).collect();

        // Incumbent over the sign representatives: entries 0 where the
        // coset is even, ±1 where odd.
        let incumbent = parity
            .iter()
            .map(|&p| if p == 0 { vec![0i64] } else { vec![-1i64, 1] })
            .multi_cartesian_product()
            .map(|m| quadratic_form(gram, &m))
            .min()
            .expect("a nonzero coset has sign representatives");

        // Any coset minimizer m satisfies λ·|m|_∞² ≤ mᵀGm ≤ incumbent.
        let bound = (incumbent.clone() / &lambda).floor().to_integer();
        let r = bound.sqrt().to_i64().expect("coset search radius fits in i64");

        let mut best = incumbent;
        let mut argmin: Vec<Vec<i64>> = Vec::new();
        let per_axis: Vec<Vec<i64>> = parity
            .iter()
            .map(|&p| (-r..=r).filter(|v| (v.rem_euclid(2)) == p).collect())
            .collect();
        for m in per_axis.into_iter().multi_cartesian_product() {
            let value = quadratic_form(gram, &m);
            if value < best {
                best = value;
                argmin = vec![m];
            } else if value == best {
                argmin.push(m);
            }
        }

        // Relevant iff the minimum is attained by exactly one ± pair.
        if argmin.len() == 2 {
            debug_assert!(argmin[0].iter().zip(&argmin[1]).all(|(a, b)| *a == -b));
            relevant.extend(argmin);
        }
    }
    relevant.sort();
    Ok(relevant)
}
