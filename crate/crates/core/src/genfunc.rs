//! Rational generating functions of the form prod (1 - x^d)^{±e}: exact
//! series expansion, the closed forms for the reduced-coefficient family,
//! MacMahon's box product, and the cyclotomic numerator P_a.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::colored::colored_partitions_of;
use crate::error::{Error, Result};
use crate::poly::{cyclotomic_factorization, CyclotomicFactorization, IntPolynomial};

/// A symbolic product prod_d (1 - x^d)^{e_d} with integer exponents e_d
/// (negative exponents are denominator factors). Kept unexpanded.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductForm {
    // d -> net exponent, zero entries removed
    factors: BTreeMap<usize, i64>,
}

impl ProductForm {
    /// The empty product (the constant series 1).
    pub fn one() -> Self {
        ProductForm {
            factors: BTreeMap::new(),
        }
    }

    /// Builds from (d, e) pairs; summing exponents of equal d. Rejects d = 0,
    /// for which 1 - x^d vanishes and the product is not a power series.
    pub fn from_factors(factors: &[(usize, i64)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(d, e) in factors {
            if d == 0 {
                return Err(Error::InvalidParameter(
                    "factor exponent d must be >= 1 (d = 0 is not a power series)".into(),
                ));
            }
            *map.entry(d).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        Ok(ProductForm { factors: map })
    }

    /// (d, e) pairs, d ascending.
    pub fn factors(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.factors.iter().map(|(&d, &e)| (d, e))
    }

    pub fn mul(&self, other: &ProductForm) -> ProductForm {
        let mut map = self.factors.clone();
        for (&d, &e) in &other.factors {
            *map.entry(d).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        ProductForm { factors: map }
    }

    /// Formal inverse (negate all exponents).
    pub fn inverse(&self) -> ProductForm {
        ProductForm {
            factors: self.factors.iter().map(|(&d, &e)| (d, -e)).collect(),
        }
    }

    /// Coefficients of the power series up to and including x^N.
    ///
    /// Every factor has constant term 1, so the product is always a power
    /// series; (1 - x^d)^{-1} is applied as the prefix-sum recurrence
    /// c[i] += c[i-d], and (1 - x^d) as c[i] -= c[i-d] downwards.
    pub fn series_coefficients(&self, n: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::one();
        for (&d, &e) in &self.factors {
            if d > n {
                continue;
            }
            if e > 0 {
                for _ in 0..e {
                    for i in (d..=n).rev() {
                        let t = c[i - d].clone();
                        c[i] -= t;
                    }
                }
            } else {
                for _ in 0..(-e) {
                    for i in d..=n {
                        let t = c[i - d].clone();
                        c[i] += t;
                    }
                }
            }
        }
        c
    }

    /// Single series coefficient.
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.series_coefficients(k).pop().unwrap()
    }

    /// True iff some factor has a negative net exponent.
    pub fn has_denominator(&self) -> bool {
        self.factors.values().any(|&e| e < 0)
    }
}

impl fmt::Display for ProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self
            .factors
            .iter()
            .filter(|(_, &e)| e > 0)
            .map(|(&d, &e)| factor_str(d, e as usize))
            .collect();
        let den: Vec<String> = self
            .factors
            .iter()
            .filter(|(_, &e)| e < 0)
            .map(|(&d, &e)| factor_str(d, (-e) as usize))
            .collect();
        let num_s = if num.is_empty() {
            "1".to_string()
        } else {
            num.join("·")
        };
        if den.is_empty() {
            write!(f, "{}", num_s)
        } else {
            write!(f, "{}/({})", num_s, den.join("·"))
        }
    }
}

impl fmt::Debug for ProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProductForm({})", self)
    }
}

fn factor_str(d: usize, e: usize) -> String {
    let base = if d == 1 {
        "(1-x)".to_string()
    } else {
        format!("(1-x^{})", d)
    };
    if e == 1 {
        base
    } else {
        format!("{}^{}", base, e)
    }
}

/// lcm(1, 2, ..., m).
pub fn lcm_up_to(m: usize) -> usize {
    (1..=m).fold(1usize, |acc, j| acc.lcm(&j))
}

/// The generating function of the sequence of reduced coefficients indexed
/// by k for row multiplicities (a, b), a >= b:
///
/// * a = b >= 1: 1 / ((1-x)(1-x^2)^2 ... (1-x^a)^2 (1-x^{a+1}))
/// * a = b + 1:  1 / (1-x)
/// * a > b + 1:  the constant series 1 (value 0 for every k >= 1)
///
/// The degenerate a = b = 0 family is delta_{k,0} by direct definition (the
/// closed form above would give k+1 at a = 0, which is wrong), so the
/// constant series 1 is returned for it.
pub fn gf_reduced(a: usize, b: usize) -> Result<ProductForm> {
    if a < b {
        return Err(Error::InvalidParameter(format!(
            "requires a >= b, got a = {}, b = {}",
            a, b
        )));
    }
    if a == b {
        if a == 0 {
            return Ok(ProductForm::one());
        }
        let mut factors = vec![(1usize, -1i64), (a + 1, -1)];
        for j in 2..=a {
            factors.push((j, -2));
        }
        return ProductForm::from_factors(&factors);
    }
    if a == b + 1 {
        return ProductForm::from_factors(&[(1, -1)]);
    }
    Ok(ProductForm::one())
}

/// MacMahon's generating function for plane partitions inside the box:
/// prod_{i<=r} prod_{j<=s} (1 - x^{i+j+t-1}) / (1 - x^{i+j-1}),
/// expanded to the exact polynomial of degree r*s*t.
pub fn macmahon_box_gf(r: usize, s: usize, t: usize) -> IntPolynomial {
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for i in 1..=r {
        for j in 1..=s {
            num = &num * &IntPolynomial::one_minus_x_pow(i + j + t - 1);
            den = &den * &IntPolynomial::one_minus_x_pow(i + j - 1);
        }
    }
    let p = num
        .exact_div(&den)
        .expect("MacMahon product divides exactly");
    debug_assert_eq!(p.degree(), Some(r * s * t));
    p
}

/// The rewriting of the box product with t -> infinity: the generating
/// function for plane partitions inside an l x a rectangle,
/// with r = min(a, l) and s = max(a, l):
///
///   prod_{j=r}^{s} (1/(1-x^j))^r
///   * prod_{i=1}^{r-1} (1/(1-x^i))^i (1/(1-x^{s+i}))^{r-i}
pub fn lemma_pp_product(l: usize, a: usize) -> Result<ProductForm> {
    if l == 0 || a == 0 {
        return Err(Error::InvalidParameter(
            "rectangle sides must be >= 1".into(),
        ));
    }
    let r = a.min(l);
    let s = a.max(l);
    let mut factors: Vec<(usize, i64)> = Vec::new();
    for j in r..=s {
        factors.push((j, -(r as i64)));
    }
    for i in 1..r {
        factors.push((i, -(i as i64)));
        factors.push((s + i, -((r - i) as i64)));
    }
    ProductForm::from_factors(&factors)
}

/// P_a(x) = (1 - x^l)^{2a} / [(1-x)(1-x^{a+1}) prod_{j=2}^{a} (1-x^j)^2],
/// with l = lcm(1..=a+1); the numerator of F_{a,a} over (1-x^l)^{2a}.
/// Every denominator factor divides (1 - x^l), so the division is exact.
pub fn compute_pa(a: usize) -> Result<IntPolynomial> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be >= 1".into()));
    }
    let l = lcm_up_to(a + 1);
    let mut p = IntPolynomial::one_minus_x_pow(l).pow(2 * a);
    let denominator = gf_reduced(a, a)?.inverse();
    for (d, e) in denominator.factors() {
        let f = IntPolynomial::one_minus_x_pow(d);
        for _ in 0..e {
            p = p.exact_div(&f)?;
        }
    }
    let expected_deg = 2 * l * a - (a + 2) * a;
    if p.degree() != Some(expected_deg) {
        return Err(Error::Internal(format!(
            "P_{} has degree {:?}, expected {}",
            a,
            p.degree(),
            expected_deg
        )));
    }
    Ok(p)
}

/// Structural facts about P_a checked by [`reciprocity_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub a: usize,
    pub modulus: usize,
    pub degree: usize,
    pub expected_degree: usize,
    pub palindromic: bool,
    pub degree_matches: bool,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.palindromic && self.degree_matches
    }
}

/// Verifies the finite form of the reciprocity law x^{a(a+2)} F_a(x) =
/// F_a(1/x): P_a must be palindromic with degree 2*l*a - (a+2)*a.
pub fn reciprocity_check(a: usize) -> Result<ReciprocityReport> {
    let p = compute_pa(a)?;
    let l = lcm_up_to(a + 1);
    let degree = p.degree().unwrap_or(0);
    let expected_degree = 2 * l * a - (a + 2) * a;
    Ok(ReciprocityReport {
        a,
        modulus: l,
        degree,
        expected_degree,
        palindromic: p.is_palindromic(),
        degree_matches: degree == expected_degree,
    })
}

/// Outcome of comparing P_a's coefficients with bounded coloured-partition
/// counts; `first_mismatch` and negative coefficients are reported rather
/// than thrown.
#[derive(Clone, Debug)]
pub struct PaCoefficientReport {
    pub a: usize,
    pub modulus: usize,
    pub degree: usize,
    pub coefficients_match_bounded_counts: bool,
    pub first_mismatch: Option<usize>,
    pub all_nonnegative: bool,
    pub palindromic: bool,
    /// Index i with c_{i-1} + c_{i+1} > 2 c_i, if one exists (the
    /// coefficients need not form a concave sequence).
    pub concavity_violation: Option<usize>,
}

impl PaCoefficientReport {
    pub fn holds(&self) -> bool {
        self.coefficients_match_bounded_counts && self.all_nonnegative && self.palindromic
    }
}

/// Item-by-item check that P_a is the generating function for coloured
/// partitions whose weight-j symbols each appear fewer than l/j times.
pub fn pa_colored_count_check(a: usize) -> Result<PaCoefficientReport> {
    let p = compute_pa(a)?;
    let l = lcm_up_to(a + 1);
    let degree = p.degree().unwrap_or(0);
    let mut matches = true;
    let mut first_mismatch = None;
    for k in 0..=degree {
        let count = colored_partitions_of(k, a, Some(l))?.len();
        if p.coeff(k) != BigInt::from(count) {
            matches = false;
            first_mismatch = Some(k);
            break;
        }
    }
    let coeffs = p.coeffs();
    let all_nonnegative = coeffs.iter().all(|c| !c.is_negative());
    let concavity_violation = (1..coeffs.len().saturating_sub(1))
        .find(|&i| &coeffs[i - 1] + &coeffs[i + 1] > 2 * coeffs[i].clone());
    Ok(PaCoefficientReport {
        a,
        modulus: l,
        degree,
        coefficients_match_bounded_counts: matches,
        first_mismatch,
        all_nonnegative,
        palindromic: p.is_palindromic(),
        concavity_violation,
    })
}

/// Factorization of P_a into cyclotomic polynomials.
pub fn pa_factorization(a: usize) -> Result<CyclotomicFactorization> {
    cyclotomic_factorization(&compute_pa(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_partition::{plane_partitions_in_box, plane_partitions_in_rect, BoxSpec};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn series_of_f11_counts_partitions_into_parts_1_and_2() {
        // brute force: partitions of k with parts in {1, 2}
        let f = gf_reduced(1, 1).unwrap();
        let coeffs = f.series_coefficients(6);
        let brute: Vec<BigInt> = (0..=6)
            .map(|k| {
                let mut c = 0;
                for twos in 0..=k / 2 {
                    let _ones = k - 2 * twos;
                    c += 1;
                }
                BigInt::from(c)
            })
            .collect();
        assert_eq!(coeffs, brute);
        assert_eq!(coeffs, big(&[1, 1, 2, 2, 3, 3, 4]));
    }

    #[test]
    fn gf_reduced_cases() {
        let f = gf_reduced(2, 2).unwrap();
        assert_eq!(f.to_string(), "1/((1-x)·(1-x^2)^2·(1-x^3))");
        let f = gf_reduced(3, 2).unwrap();
        assert_eq!(f.to_string(), "1/((1-x))");
        assert_eq!(f.series_coefficients(5), big(&[1, 1, 1, 1, 1, 1]));
        let f = gf_reduced(5, 2).unwrap();
        assert_eq!(f.series_coefficients(4), big(&[1, 0, 0, 0, 0]));
        assert!(gf_reduced(1, 2).is_err());
        // degenerate pair: delta_{k,0}
        let f = gf_reduced(0, 0).unwrap();
        assert_eq!(f.series_coefficients(3), big(&[1, 0, 0, 0]));
    }

    #[test]
    fn f44_coefficient_of_x3_is_5() {
        assert_eq!(gf_reduced(4, 4).unwrap().coefficient(3), BigInt::from(5));
    }

    #[test]
    fn series_f22_matches_2x2_rectangle_counts() {
        let coeffs = gf_reduced(2, 2).unwrap().series_coefficients(8);
        for k in 0..=8 {
            assert_eq!(
                coeffs[k],
                BigInt::from(plane_partitions_in_rect(k, 2, 2).len()),
                "k = {}",
                k
            );
        }
        assert_eq!(coeffs, big(&[1, 1, 3, 4, 7, 9, 14, 16, 22]));
    }

    #[test]
    fn product_form_rejects_d_zero() {
        assert!(ProductForm::from_factors(&[(0, -1)]).is_err());
    }

    #[test]
    fn macmahon_small_boxes() {
        assert_eq!(macmahon_box_gf(1, 1, 1), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(
            macmahon_box_gf(1, 1, 4),
            IntPolynomial::from_i64(&[1, 1, 1, 1, 1])
        );
        assert_eq!(macmahon_box_gf(3, 2, 0), IntPolynomial::one());
        // intro figure: 5 plane partitions of 3 inside 2x4 (height 3 inactive)
        assert_eq!(macmahon_box_gf(2, 4, 3).coeff(3), BigInt::from(5));
    }

    #[test]
    fn macmahon_matches_direct_enumeration_2_2_1() {
        let spec = BoxSpec::new(2, 2, 1);
        assert_eq!(plane_partitions_in_box(spec), macmahon_box_gf(2, 2, 1).coeffs().to_vec());
    }

    #[test]
    fn lemma_product_instances() {
        // l=2, a>=2 must equal the closed form for the a=b family
        for a in 2..=5 {
            assert_eq!(lemma_pp_product(2, a).unwrap(), gf_reduced(a, a).unwrap(), "a = {}", a);
        }
        assert_eq!(
            lemma_pp_product(1, 1).unwrap(),
            ProductForm::from_factors(&[(1, -1)]).unwrap()
        );
        assert_eq!(
            lemma_pp_product(2, 2).unwrap(),
            ProductForm::from_factors(&[(1, -1), (2, -2), (3, -1)]).unwrap()
        );
        // orientation does not matter
        assert_eq!(lemma_pp_product(3, 2).unwrap(), lemma_pp_product(2, 3).unwrap());
    }

    #[test]
    fn pa_small_cases() {
        // P_1 = (1-x^2)^2 / ((1-x)(1-x^2)) = 1 + x
        assert_eq!(compute_pa(1).unwrap(), IntPolynomial::from_i64(&[1, 1]));
        let p2 = compute_pa(2).unwrap();
        assert_eq!(p2.degree(), Some(16));
        let f2 = cyclotomic_factorization(&p2).unwrap();
        assert_eq!(
            f2.exponents().iter().map(|(&d, &e)| (d, e)).collect::<Vec<_>>(),
            vec![(2, 2), (3, 3), (6, 4)]
        );
        assert_eq!(f2.to_string(), "Φ2^2 · Φ3^3 · Φ6^4");
        // P_2(1) = 108, the product of the multiplicity caps
        assert_eq!(p2.eval_int(&BigInt::one()), BigInt::from(108));
    }

    #[test]
    fn pa_reciprocity_reports() {
        for a in 1..=3 {
            let r = reciprocity_check(a).unwrap();
            assert!(r.holds(), "a = {}: {:?}", a, r);
        }
        let r = reciprocity_check(2).unwrap();
        assert_eq!(r.degree, 16);
        assert_eq!(r.expected_degree, 24 - 8);
    }

    #[test]
    fn pa_coefficients_match_bounded_colored_counts() {
        for a in 1..=2 {
            let rep = pa_colored_count_check(a).unwrap();
            assert!(rep.holds(), "a = {}: {:?}", a, rep);
        }
    }

    #[test]
    fn lcm_up_to_values() {
        assert_eq!(lcm_up_to(1), 1);
        assert_eq!(lcm_up_to(2), 2);
        assert_eq!(lcm_up_to(3), 6);
        assert_eq!(lcm_up_to(4), 12);
        assert_eq!(lcm_up_to(5), 60);
        assert_eq!(lcm_up_to(6), 60);
    }
}
