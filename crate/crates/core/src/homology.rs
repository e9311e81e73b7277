//! The bigraded exterior-algebra model of the homology of a real torus.
//!
//! For a `g`-dimensional real torus with lattice `Λ` and integral cotangent
//! space `N`, the homology is `H_{p,q} ≅ Λ^q Λ ⊗ Λ^p N` and the cohomology
//! is the same construction on the dual bases. A class is a formal integer
//! combination of monomials `c_J ⊗ δ_I` (homology) or `c_J* ⊗ δ_I*`
//! (cohomology), where `J, I ⊆ {1..g}` index wedges of the circuit and
//! δ-basis generators. We store the subsets as bitmasks.
//!
//! Products act componentwise on the two tensor factors, each factor
//! contributing its own Koszul sign and nothing else:
//!
//! * Pontryagin `⋆` (homology) and cup `⌣` (cohomology) are
//!   `(α⊗ω)·(β⊗ξ) = (α∧β)⊗(ω∧ξ)`;
//! * cap `⌢` is contraction on both factors: `(α⊗ω) ⌢ (β⊗ξ) = (α⌟β)⊗(ω⌟ξ)`.
//!
//! Multi-index contraction applies single duals in increasing index order,
//! which normalizes `ι_{e_I*}(e_I) = +1` for every `I`. One consequence
//! worth knowing: contraction is then an order-reversing module action,
//! `(x ⌣ y) ⌢ a = y ⌢ (x ⌢ a)` (the two orders agree whenever `x` and `y`
//! both have even total degree, which covers every tautological-class
//! computation in this crate).

use std::collections::BTreeMap;

use crate::linalg::Z;
use num_traits::Zero;

/// Index subset of `{1..g}` as a bitmask: index `k` is bit `k − 1`.
pub type Mask = u32;

/// Errors from mixing sides or degrees where an operation forbids it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("operands live on different sides (homology vs cohomology)")]
    SideMismatch,
    #[error("class is not homogeneous: monomials span several bidegrees")]
    InhomogeneousClass,
    #[error("class has terms outside bidegree (0,0); degree is undefined")]
    NonZeroDegreeClass,
}

/// Which exterior algebra a class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Homology,
    Cohomology,
}

/// Builds a mask from 1-based indices. Panics on index 0 or > 32.
pub fn subset_mask(indices: &[u32]) -> Mask {
    indices.iter().fold(0, |m, &i| {
        assert!((1..=32).contains(&i), "index {i} out of range 1..=32");
        m | 1 << (i - 1)
    })
}

/// The 1-based indices of a mask, ascending.
pub fn mask_indices(mask: Mask) -> Vec<u32> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// Wedge of two sorted monomials: `None` if they share an index, else the
/// Koszul sign `(−1)^{#{(a,b) ∈ J1×J2 : a > b}}` and the union.
pub fn wedge_monomials(j1: Mask, j2: Mask) -> Option<(i8, Mask)> {
    if j1 & j2 != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = j2;
    while rest != 0 {
        let b = rest.trailing_zeros();
        // Indices of j1 strictly above this element of j2.
        inversions += (j1 >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    Some((if inversions % 2 == 0 { 1 } else { -1 }, j1 | j2))
}

/// Contraction of the monomial `e_J` by the dual monomial `e_{J_dual}*`:
/// `None` unless `J_dual ⊆ J`. Single indices follow
/// `ι_{e_i*}(e_J) = (−1)^{#{j ∈ J : j < i}}·e_{J∖{i}}` and are applied in
/// increasing index order, so `ι_{e_I*}(e_I) = +1` for every `I`.
pub fn interior(j_dual: Mask, j: Mask) -> Option<(i8, Mask)> {
    if j_dual & !j != 0 {
        return None;
    }
    let mut sign = 1i8;
    let mut current = j;
    let mut rest = j_dual;
    while rest != 0 {
        let b = rest.trailing_zeros();
        let below = (current & ((1u32 << b) - 1)).count_ones();
        if below % 2 == 1 {
            sign = -sign;
        }
        current &= !(1 << b);
        rest &= rest - 1;
    }
    Some((sign, current))
}

/// An integer combination of wedge-monomial basis elements of fixed side.
/// Keys are `(J, I)` mask pairs; coefficients are nonzero big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedClass {
    side: Side,
    terms: BTreeMap<(Mask, Mask), Z>,
}

impl BigradedClass {
    pub fn zero(side: Side) -> Self {
        BigradedClass { side, terms: BTreeMap::new() }
    }

    /// A single monomial `c_J ⊗ δ_I` (or its dual) with a coefficient.
    pub fn monomial(side: Side, j: Mask, i: Mask, coeff: Z) -> Self {
        let mut class = BigradedClass::zero(side);
        class.add_term(j, i, coeff);
        class
    }

    /// The multiplicative unit `∅ ⊗ ∅` of `⋆` respectively `⌣`.
    pub fn unit(side: Side) -> Self {
        BigradedClass::monomial(side, 0, 0, Z::from(1))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mask, Mask), &Z)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, j: Mask, i: Mask) -> Z {
        self.terms.get(&(j, i)).cloned().unwrap_or_else(Z::zero)
    }

    /// Adds `coeff · (J, I)` in place, dropping the key if it cancels.
    pub fn add_term(&mut self, j: Mask, i: Mask, coeff: Z) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((j, i)).or_insert_with(Z::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(j, i));
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, HomologyError> {
        if self.side != other.side {
            return Err(HomologyError::SideMismatch);
        }
        let mut out = self.clone();
        for (&(j, i), c) in &other.terms {
            out.add_term(j, i, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, HomologyError> {
        self.checked_add(&other.scale(&Z::from(-1)))
    }

    pub fn scale(&self, factor: &Z) -> Self {
        if factor.is_zero() {
            return BigradedClass::zero(self.side);
        }
        BigradedClass {
            side: self.side,
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, c * factor))
                .collect(),
        }
    }

    /// `(p, q)` = (δ-factor degree, circuit-factor degree) if all monomials
    /// agree; `None` when the class is zero or mixes bidegrees.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut keys = self.terms.keys();
        let &(j, i) = keys.next()?;
        let bidegree = (i.count_ones() as usize, j.count_ones() as usize);
        for &(j2, i2) in keys {
            if (i2.count_ones() as usize, j2.count_ones() as usize) != bidegree {
                return None;
            }
        }
        Some(bidegree)
    }

    /// True for the zero class and for classes concentrated in one bidegree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.bidegree().is_some()
    }

    /// Terms as `(J indices, I indices, coefficient)`, deterministic order.
    pub fn terms_sorted(&self) -> Vec<(Vec<u32>, Vec<u32>, Z)> {
        self.terms
            .iter()
            .map(|(&(j, i), c)| (mask_indices(j), mask_indices(i), c.clone()))
            .collect()
    }
}

fn bilinear_product(
    a: &BigradedClass,
    b: &BigradedClass,
    side: Side,
) -> BigradedClass {
    let mut out = BigradedClass::zero(side);
    for (&(j1, i1), c1) in &a.terms {
        for (&(j2, i2), c2) in &b.terms {
            let Some((sign_j, j)) = wedge_monomials(j1, j2) else { continue };
            let Some((sign_i, i)) = wedge_monomials(i1, i2) else { continue };
            let mut coeff = c1 * c2;
            if sign_j * sign_i < 0 {
                coeff = -coeff;
            }
            out.add_term(j, i, coeff);
        }
    }
    out
}

/// Pontryagin product of homology classes: componentwise wedge on both
/// tensor factors, each with its own Koszul sign and no cross-factor sign.
pub fn pontryagin(
    a: &BigradedClass,
    b: &BigradedClass,
) -> Result<BigradedClass, HomologyError> {
    if a.side != Side::Homology || b.side != Side::Homology {
        return Err(HomologyError::SideMismatch);
    }
    Ok(bilinear_product(a, b, Side::Homology))
}

/// Cup product of cohomology classes: the same combinatorial rule as
/// [`pontryagin`] on the dual bases.
pub fn cup(a: &BigradedClass, b: &BigradedClass) -> Result<BigradedClass, HomologyError> {
    if a.side != Side::Cohomology || b.side != Side::Cohomology {
        return Err(HomologyError::SideMismatch);
    }
    Ok(bilinear_product(a, b, Side::Cohomology))
}

/// Cap product `c ⌢ a` of a cohomology class on a homology class:
/// contraction on both tensor factors independently.
pub fn cap(c: &BigradedClass, a: &BigradedClass) -> Result<BigradedClass, HomologyError> {
    if c.side != Side::Cohomology || a.side != Side::Homology {
        return Err(HomologyError::SideMismatch);
    }
    let mut out = BigradedClass::zero(Side::Homology);
    for (&(jd, id), cc) in &c.terms {
        for (&(j, i), ca) in &a.terms {
            let Some((sign_j, j_rem)) = interior(jd, j) else { continue };
            let Some((sign_i, i_rem)) = interior(id, i) else { continue };
            let mut coeff = cc * ca;
            if sign_j * sign_i < 0 {
                coeff = -coeff;
            }
            out.add_term(j_rem, i_rem, coeff);
        }
    }
    Ok(out)
}

/// The fundamental class of the `g`-torus: the single monomial with
/// `J = I = {1..g}` and coefficient 1.
pub fn fundamental_class(g: usize) -> BigradedClass {
    assert!(g <= 32, "masks hold at most 32 indices");
    let full: Mask = if g == 32 { !0 } else { (1u32 << g) - 1 };
    BigradedClass::monomial(Side::Homology, full, full, Z::from(1))
}

/// Poincaré duality: `c ↦ c ⌢ [fundamental]`. Requires a homogeneous
/// cohomology class.
pub fn poincare_dual(
    c: &BigradedClass,
    g: usize,
) -> Result<BigradedClass, HomologyError> {
    if c.side != Side::Cohomology {
        return Err(HomologyError::SideMismatch);
    }
    if !c.is_homogeneous() {
        return Err(HomologyError::InhomogeneousClass);
    }
    cap(c, &fundamental_class(g))
}

/// Inverse of [`poincare_dual`], via the monomial bijection
/// `(J, I) ↔ (Jᶜ, Iᶜ)` with the exact signs the cap product produces:
/// capping `(Jᶜ, Iᶜ)*` against the fundamental class yields
/// `σ(Jᶜ)·σ(Iᶜ)·(J, I)`, and the sign squares to 1.
pub fn poincare_dual_inverse(
    a: &BigradedClass,
    g: usize,
) -> Result<BigradedClass, HomologyError> {
    if a.side != Side::Homology {
        return Err(HomologyError::SideMismatch);
    }
    if !a.is_homogeneous() {
        return Err(HomologyError::InhomogeneousClass);
    }
    let full: Mask = if g == 32 { !0 } else { (1u32 << g) - 1 };
    let mut out = BigradedClass::zero(Side::Cohomology);
    for (&(j, i), c) in &a.terms {
        debug_assert_eq!(j & !full, 0, "monomial exceeds genus");
        debug_assert_eq!(i & !full, 0, "monomial exceeds genus");
        let (jc, ic) = (full & !j, full & !i);
        let (sign_j, _) = interior(jc, full).expect("complement is a subset");
        let (sign_i, _) = interior(ic, full).expect("complement is a subset");
        let mut coeff = c.clone();
        if sign_j * sign_i < 0 {
            coeff = -coeff;
        }
        out.add_term(jc, ic, coeff);
    }
    Ok(out)
}

/// Intersection product of homology classes:
/// `a · b = poincare_dual_inverse(a) ⌢ b`.
pub fn intersection(
    a: &BigradedClass,
    b: &BigradedClass,
    g: usize,
) -> Result<BigradedClass, HomologyError> {
    cap(&poincare_dual_inverse(a, g)?, b)
}

/// Degree of a homology class concentrated in bidegree `(0, 0)`: the
/// coefficient of `∅ ⊗ ∅` (zero for the zero class).
pub fn degree(a: &BigradedClass) -> Result<Z, HomologyError> {
    if a.side != Side::Homology {
        return Err(HomologyError::SideMismatch);
    }
    if a.terms.keys().any(|&k| k != (0, 0)) {
        return Err(HomologyError::NonZeroDegreeClass);
    }
    Ok(a.coeff(0, 0))
}

/// All `(J, I)` monomials of bidegree `(p, q)`: `|J| = q`, `|I| = p`.
/// There are exactly `C(g,q)·C(g,p)` of them.
pub fn basis_monomials(g: usize, p: usize, q: usize) -> Vec<(Mask, Mask)> {
    assert!(g <= 16, "basis enumeration is meant for small genus");
    let masks = |size: usize| -> Vec<Mask> {
        (0u32..1 << g).filter(|m| m.count_ones() as usize == size).collect()
    };
    let js = masks(q);
    let is = masks(p);
    let mut out = Vec::with_capacity(js.len() * is.len());
    for &j in &js {
        for &i in &is {
            out.push((j, i));
        }
    }
    out
}
