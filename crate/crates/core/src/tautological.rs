//! Tautological cycle classes on the Jacobian and the verification
//! pipeline for the Poincaré formula and its corollaries.
//!
//! In the wedge-monomial bases the classes have closed forms that depend
//! only on the genus:
//!
//! * `[W_1] = Σ_k c_k ⊗ δ_k` and more generally
//!   `[W_d] = Σ_{|I|=d} c_I ⊗ δ_I` (coefficient 1 on every diagonal
//!   monomial);
//! * the first Chern class of the principal polarization is
//!   `c₁ = Σ_i c_i* ⊗ δ_i*`;
//! * `[Θ]^k = c₁^{⌣k} ⌢ [fundamental]` comes out as `k!·Σ_{|I|=g−k} c_I ⊗ δ_I`.
//!
//! The Poincaré formula says `(g−d)!·[W_d] = [Θ]^{g−d}` exactly;
//! corollaries give `⋆^d[W_1] = d!·[W_d]`, `∫ [Θ]^g = g!` and
//! `∫ [W_d]·[W_{g−d}] = C(g,d)`. [`verify_poincare`] recomputes both sides
//! of each identity through the product pipeline — none of the closed
//! forms above is assumed — and reports exact integer equality.

use crate::homology::{
    cap, cup, degree, fundamental_class, intersection, pontryagin, subset_mask,
    BigradedClass, Side,
};
use crate::linalg::Z;

/// Errors for out-of-range class parameters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TautologicalError {
    #[error("d = {d} is out of range 0..={genus}")]
    DOutOfRange { d: usize, genus: usize },
    #[error("k = {k} is out of range 0..={genus}")]
    KOutOfRange { k: usize, genus: usize },
    #[error("genus {genus} is out of range (must be ≥ {min})")]
    GOutOfRange { genus: usize, min: usize },
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> Z {
    (1..=n).fold(Z::from(1), |acc, k| acc * Z::from(k))
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> Z {
    if k > n {
        return Z::from(0);
    }
    (0..k).fold(Z::from(1), |acc, i| acc * Z::from(n - i) / Z::from(i + 1))
}

/// The curve class `[W_1] = Σ_{k=1}^g c_k ⊗ δ_k`.
pub fn class_w1(g: usize) -> BigradedClass {
    let mut class = BigradedClass::zero(Side::Homology);
    for k in 1..=g as u32 {
        class.add_term(subset_mask(&[k]), subset_mask(&[k]), Z::from(1));
    }
    class
}

/// The class `[W_d] = Σ_{|I|=d} c_I ⊗ δ_I` of the d-th Abel–Jacobi locus.
pub fn class_wd(g: usize, d: usize) -> Result<BigradedClass, TautologicalError> {
    if d > g {
        return Err(TautologicalError::DOutOfRange { d, genus: g });
    }
    let mut class = BigradedClass::zero(Side::Homology);
    for mask in 0u32..1 << g {
        if mask.count_ones() as usize == d {
            class.add_term(mask, mask, Z::from(1));
        }
    }
    Ok(class)
}

/// The d-fold Pontryagin power `⋆^d [W_1]`; the empty product is the unit.
pub fn pontryagin_power_w1(g: usize, d: usize) -> BigradedClass {
    let w1 = class_w1(g);
    let mut acc = BigradedClass::unit(Side::Homology);
    for _ in 0..d {
        acc = pontryagin(&acc, &w1).expect("homology sides match");
    }
    acc
}

/// First Chern class of the principal polarization:
/// `c₁ = Σ_{i=1}^g c_i* ⊗ δ_i*`.
pub fn chern_theta(g: usize) -> BigradedClass {
    let mut class = BigradedClass::zero(Side::Cohomology);
    for i in 1..=g as u32 {
        class.add_term(subset_mask(&[i]), subset_mask(&[i]), Z::from(1));
    }
    class
}

/// The theta-power class `[Θ]^k = c₁^{⌣k} ⌢ [fundamental]`, computed
/// through the cup/cap pipeline (no closed form assumed).
pub fn class_theta_power(g: usize, k: usize) -> Result<BigradedClass, TautologicalError> {
    if k > g {
        return Err(TautologicalError::KOutOfRange { k, genus: g });
    }
    let chern = chern_theta(g);
    let mut power = BigradedClass::unit(Side::Cohomology);
    for _ in 0..k {
        power = cup(&power, &chern).expect("cohomology sides match");
    }
    cap(&power, &fundamental_class(g)).map_err(|_| unreachable!("sides are fixed"))
}

/// `∫ [Θ]^g`: the degree of the top theta power. Equals `g!`.
pub fn degree_theta_g(g: usize) -> Z {
    let top = class_theta_power(g, g).expect("k = g is always in range");
    degree(&top).expect("the top theta power is a point class")
}

/// `∫ [W_d]·[W_{g−d}]`: the intersection degree of complementary
/// Abel–Jacobi loci. Equals `C(g, d)`.
pub fn degree_wd_pair(g: usize, d: usize) -> Result<Z, TautologicalError> {
    let a = class_wd(g, d)?;
    let b = class_wd(g, g - d)?;
    let product = intersection(&a, &b, g).expect("W_d classes are homogeneous");
    Ok(degree(&product).expect("complementary loci intersect in points"))
}

/// One row of the Poincaré-formula report: everything checked at a fixed `d`.
#[derive(Debug, Clone)]
pub struct PoincareRow {
    pub d: usize,
    /// The factor `(g−d)!` relating the two classes.
    pub factor: Z,
    pub class_wd: BigradedClass,
    /// `[Θ]^{g−d}` computed through the cup/cap pipeline.
    pub class_theta_power: BigradedClass,
    /// `(g−d)!·[W_d] == [Θ]^{g−d}`, exact integer equality.
    pub equal: bool,
    /// `⋆^d [W_1] == d!·[W_d]`, exact integer equality.
    pub pontryagin_equal: bool,
}

/// One integer identity with its expected and computed values.
#[derive(Debug, Clone)]
pub struct DegreeCheck {
    pub name: String,
    pub expected: Z,
    pub computed: Z,
    pub equal: bool,
}

/// Full verification record for one genus.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub genus: usize,
    pub rows: Vec<PoincareRow>,
    pub degree_checks: Vec<DegreeCheck>,
    pub all_passed: bool,
}

/// Checks, for every `0 ≤ d ≤ g`, the exact class equality
/// `(g−d)!·[W_d] = [Θ]^{g−d}` and the Pontryagin-power consistency
/// `⋆^d[W_1] = d!·[W_d]`, plus the degree corollaries `∫[Θ]^g = g!` and
/// `∫[W_d]·[W_{g−d}] = C(g,d)`. Failures are carried in the report, not
/// raised as errors.
pub fn verify_poincare(g: usize) -> VerificationReport {
    let mut rows = Vec::with_capacity(g + 1);
    for d in 0..=g {
        let wd = class_wd(g, d).expect("d ≤ g by construction");
        let theta_pow = class_theta_power(g, g - d).expect("g−d ≤ g by construction");
        let factor = factorial(g - d);
        let equal = wd.scale(&factor) == theta_pow;
        let pontryagin_equal = pontryagin_power_w1(g, d) == wd.scale(&factorial(d));
        rows.push(PoincareRow {
            d,
            factor,
            class_wd: wd,
            class_theta_power: theta_pow,
            equal,
            pontryagin_equal,
        });
    }

    let mut degree_checks = vec![{
        let computed = degree_theta_g(g);
        let expected = factorial(g);
        DegreeCheck {
            name: "theta-top-degree".to_string(),
            equal: computed == expected,
            expected,
            computed,
        }
    }];
    for d in 0..=g {
        let computed = degree_wd_pair(g, d).expect("d ≤ g by construction");
        let expected = binomial(g, d);
        degree_checks.push(DegreeCheck {
            name: format!("wd-pair-degree d={d}"),
            equal: computed == expected,
            expected,
            computed,
        });
    }

    let all_passed = rows.iter().all(|r| r.equal && r.pontryagin_equal)
        && degree_checks.iter().all(|c| c.equal);
    VerificationReport { genus: g, rows, degree_checks, all_passed }
}

/// The homological shadow of Riemann's theorem:
/// `[W_{g−1}] == [Θ]^1` as classes. Requires `g ≥ 1`.
pub fn verify_riemann_homological(g: usize) -> Result<bool, TautologicalError> {
    if g < 1 {
        return Err(TautologicalError::GOutOfRange { genus: g, min: 1 });
    }
    Ok(class_wd(g, g - 1).expect("g−1 < g") == class_theta_power(g, 1).expect("1 ≤ g"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::mask_indices;

    fn z(n: i64) -> Z {
        Z::from(n)
    }

    fn hom(j: &[u32], i: &[u32], coeff: i64) -> BigradedClass {
        BigradedClass::monomial(Side::Homology, subset_mask(j), subset_mask(i), z(coeff))
    }

    #[test]
    fn w1_is_the_diagonal_sum() {
        assert!(class_w1(0).is_zero());
        assert_eq!(class_w1(1), hom(&[1], &[1], 1));
        assert_eq!(
            class_w1(2),
            hom(&[1], &[1], 1).checked_add(&hom(&[2], &[2], 1)).unwrap()
        );
    }

    #[test]
    fn wd_counts_and_boundary_cases() {
        assert_eq!(class_wd(2, 1).unwrap(), class_w1(2));
        assert_eq!(class_wd(2, 2).unwrap(), fundamental_class(2));
        let g3d2 = class_wd(3, 2).unwrap();
        assert_eq!(g3d2.len(), 3);
        for (&(j, i), c) in g3d2.terms() {
            assert_eq!(j, i);
            assert_eq!(mask_indices(j).len(), 2);
            assert_eq!(c, &z(1));
        }
        assert_eq!(
            class_wd(2, 3).unwrap_err(),
            TautologicalError::DOutOfRange { d: 3, genus: 2 }
        );
    }

    #[test]
    fn pontryagin_powers_of_w1() {
        assert_eq!(pontryagin_power_w1(2, 0), BigradedClass::unit(Side::Homology));
        assert_eq!(pontryagin_power_w1(2, 1), class_w1(2));
        assert_eq!(pontryagin_power_w1(2, 2), fundamental_class(2).scale(&z(2)));
        // Beyond the genus every wedge repeats a generator.
        assert!(pontryagin_power_w1(2, 3).is_zero());
    }

    #[test]
    fn chern_class_shape() {
        assert!(chern_theta(0).is_zero());
        let c = chern_theta(2);
        assert_eq!(c.side(), Side::Cohomology);
        assert_eq!(c.coeff(subset_mask(&[1]), subset_mask(&[1])), z(1));
        assert_eq!(c.coeff(subset_mask(&[2]), subset_mask(&[2])), z(1));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn theta_powers_at_genus_two() {
        assert_eq!(class_theta_power(2, 0).unwrap(), fundamental_class(2));
        assert_eq!(class_theta_power(2, 1).unwrap(), class_w1(2));
        assert_eq!(class_theta_power(2, 2).unwrap(), hom(&[], &[], 2));
        assert_eq!(
            class_theta_power(2, 3).unwrap_err(),
            TautologicalError::KOutOfRange { k: 3, genus: 2 }
        );
    }

    #[test]
    fn theta_power_coefficients_are_factorials_on_the_diagonal() {
        for g in 0..=8usize {
            for k in 0..=g {
                let class = class_theta_power(g, k).unwrap();
                let expected = factorial(k);
                let mut count = 0usize;
                for (&(j, i), c) in class.terms() {
                    assert_eq!(j, i, "theta powers are diagonal");
                    assert_eq!(j.count_ones() as usize, g - k);
                    assert_eq!(c, &expected, "coefficient must be k!");
                    count += 1;
                }
                assert_eq!(Z::from(count), binomial(g, g - k));
            }
        }
    }

    #[test]
    fn degree_identities_small_genus() {
        assert_eq!(degree_theta_g(0), z(1));
        assert_eq!(degree_theta_g(2), z(2));
        assert_eq!(degree_theta_g(3), z(6));
        assert_eq!(degree_wd_pair(2, 1).unwrap(), z(2));
        assert_eq!(degree_wd_pair(4, 2).unwrap(), z(6));
        assert_eq!(degree_wd_pair(4, 0).unwrap(), z(1));
        assert_eq!(
            degree_wd_pair(2, 3).unwrap_err(),
            TautologicalError::DOutOfRange { d: 3, genus: 2 }
        );
    }

    #[test]
    fn verification_report_is_clean_for_small_genus() {
        for g in 0..=6usize {
            let report = verify_poincare(g);
            assert_eq!(report.genus, g);
            assert_eq!(report.rows.len(), g + 1);
            assert!(report.all_passed, "genus {g} report failed");
            for row in &report.rows {
                assert!(row.equal);
                assert!(row.pontryagin_equal);
                assert_eq!(row.factor, factorial(g - row.d));
            }
            assert_eq!(report.degree_checks.len(), g + 2);
        }
    }

    #[test]
    fn poincare_formula_holds_up_to_genus_twelve() {
        // Stress the exact pipeline at the largest genus we promise to
        // handle quickly; intermediate classes have up to C(12,6) = 924
        // monomials.
        for g in [10, 12] {
            let report = verify_poincare(g);
            assert!(report.all_passed, "genus {g} report failed");
        }
    }

    #[test]
    fn riemann_identity() {
        assert_eq!(
            verify_riemann_homological(0).unwrap_err(),
            TautologicalError::GOutOfRange { genus: 0, min: 1 }
        );
        for g in 1..=8usize {
            assert!(verify_riemann_homological(g).unwrap(), "genus {g}");
        }
    }

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(factorial(0), z(1));
        assert_eq!(factorial(5), z(120));
        assert_eq!(binomial(10, 3), z(120));
        assert_eq!(binomial(3, 10), z(0));
        assert_eq!(binomial(12, 6), z(924));
    }
}
