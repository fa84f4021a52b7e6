//! Dense polynomials with arbitrary-precision integer coefficients, exact
//! division, and cyclotomic polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial over Z, stored densely. The coefficient vector never has a
/// trailing zero; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// 1 - x^d.
    pub fn one_minus_x_pow(d: usize) -> Self {
        assert!(d >= 1);
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::one();
        coeffs[d] = -BigInt::one();
        IntPolynomial { coeffs }
    }

    /// x^n - 1.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (0 beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True iff the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact division; fails with `InexactDivision` if the remainder is
    /// nonzero or the divisor's leading coefficient does not divide every
    /// step (divisors here are always +/-1-monic, so in practice a nonzero
    /// remainder is the only failure).
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        if divisor.is_zero() {
            return Err(Error::Internal("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::InexactDivision {
                remainder_degree: nd,
            });
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = (top.clone() / &lead, top % &lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    remainder_degree: k + dd,
                });
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let prod = dc * &q;
                rem[k + i] -= prod;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            let rd = rem.iter().rposition(|c| !c.is_zero()).unwrap();
            return Err(Error::InexactDivision {
                remainder_degree: rd,
            });
        }
        Ok(IntPolynomial::new(quot))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect(),
        )
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

/// All divisors of n, ascending.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by all
/// lower-order cyclotomics: Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
pub fn cyclotomic(n: usize) -> IntPolynomial {
    CyclotomicTable::new().get(n).clone()
}

/// Cache of cyclotomic polynomials, filled on demand.
pub struct CyclotomicTable {
    table: BTreeMap<usize, IntPolynomial>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        CyclotomicTable {
            table: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, n: usize) -> &IntPolynomial {
        assert!(n >= 1, "cyclotomic index must be positive");
        if !self.table.contains_key(&n) {
            let mut p = IntPolynomial::x_pow_minus_one(n);
            for d in divisors(n) {
                if d == n {
                    continue;
                }
                let phi_d = self.get(d).clone();
                p = p.exact_div(&phi_d).expect("x^n - 1 divisible by Phi_d");
            }
            self.table.insert(n, p);
        }
        &self.table[&n]
    }
}

impl Default for CyclotomicTable {
    fn default() -> Self {
        CyclotomicTable::new()
    }
}

/// A factorization P = prod_d Phi_d^{e_d}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicFactorization {
    exponents: BTreeMap<usize, usize>,
}

impl CyclotomicFactorization {
    pub fn exponent(&self, d: usize) -> usize {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<usize, usize> {
        &self.exponents
    }

    /// Sum of e_d * phi(d), which must equal the degree of the product.
    pub fn total_degree(&self) -> usize {
        self.exponents
            .iter()
            .map(|(&d, &e)| e * euler_phi(d))
            .sum()
    }

    pub fn expand(&self) -> IntPolynomial {
        let mut table = CyclotomicTable::new();
        let mut acc = IntPolynomial::one();
        for (&d, &e) in &self.exponents {
            let phi = table.get(d).clone();
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        acc
    }
}

impl fmt::Display for CyclotomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&d, &e) in &self.exponents {
            if !first {
                write!(f, " · ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "Φ{}", d)?;
            } else {
                write!(f, "Φ{}^{}", d, e)?;
            }
        }
        Ok(())
    }
}

/// Factors P into cyclotomic polynomials by repeated trial exact division,
/// d ascending. The trial range is 1..=3*deg(P) with a phi(d) <= remaining
/// degree filter, which covers every d whose cyclotomic could still divide
/// at desk scale. Fails if a non-constant, non-cyclotomic factor survives.
pub fn cyclotomic_factorization(p: &IntPolynomial) -> Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::NotCyclotomicProduct("zero polynomial".into()));
    }
    let deg0 = p.degree().unwrap();
    if *p.coeffs().last().unwrap() != BigInt::one() {
        return Err(Error::NotCyclotomicProduct(format!(
            "not monic (leading coefficient {})",
            p.coeffs().last().unwrap()
        )));
    }
    let mut rem = p.clone();
    let mut exponents = BTreeMap::new();
    for d in 1..=(3 * deg0).max(1) {
        let rd = match rem.degree() {
            Some(0) | None => break,
            Some(rd) => rd,
        };
        if euler_phi(d) > rd {
            continue;
        }
        let phi = cyclotomic(d);
        loop {
            match rem.exact_div(&phi) {
                Ok(q) => {
                    *exponents.entry(d).or_insert(0) += 1;
                    rem = q;
                }
                Err(_) => break,
            }
            if rem.degree().map_or(true, |rd| rd == 0) {
                break;
            }
        }
    }
    if rem != IntPolynomial::one() {
        return Err(Error::NotCyclotomicProduct(format!("{}", rem)));
    }
    Ok(CyclotomicFactorization { exponents })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let p = IntPolynomial::from_i64(&[1, 2, 1]); // (1+x)^2
        let q = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(&q * &q, p);
        assert_eq!(p.exact_div(&q).unwrap(), q);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p.eval_int(&BigInt::from(3)), BigInt::from(16));
    }

    #[test]
    fn exact_div_detects_remainders() {
        let p = IntPolynomial::from_i64(&[1, 1, 1]);
        let q = IntPolynomial::from_i64(&[1, 1]);
        assert!(matches!(
            p.exact_div(&q),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(IntPolynomial::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(IntPolynomial::from_i64(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[2]).to_string(), "2");
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPolynomial::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_identity() {
        // prod_{d | n} Phi_d = x^n - 1 for n <= 30
        let mut table = CyclotomicTable::new();
        for n in 1..=30 {
            let mut prod = IntPolynomial::one();
            for d in divisors(n) {
                prod = &prod * table.get(d);
            }
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n), "n = {}", n);
        }
    }

    #[test]
    fn cyclotomic_degrees_are_phi() {
        for n in 1..=40 {
            assert_eq!(cyclotomic(n).degree(), Some(euler_phi(n)), "n = {}", n);
        }
    }

    #[test]
    fn factorization_round_trip() {
        let p = &(&cyclotomic(2).pow(2) * &cyclotomic(3).pow(3)) * &cyclotomic(6).pow(4);
        let f = cyclotomic_factorization(&p).unwrap();
        assert_eq!(f.exponent(2), 2);
        assert_eq!(f.exponent(3), 3);
        assert_eq!(f.exponent(6), 4);
        assert_eq!(f.exponent(1), 0);
        assert_eq!(f.total_degree(), p.degree().unwrap());
        assert_eq!(f.expand(), p);
        // d may exceed the degree of the product (phi(6) = 2)
        let lone = cyclotomic(6);
        let f = cyclotomic_factorization(&lone).unwrap();
        assert_eq!(f.exponent(6), 1);
    }

    #[test]
    fn factorization_rejects_non_cyclotomic() {
        assert!(cyclotomic_factorization(&IntPolynomial::from_i64(&[2, 1])).is_err());
        assert!(cyclotomic_factorization(&IntPolynomial::from_i64(&[-1, 1, 0, 1])).is_err());
    }

    #[test]
    fn palindrome_check() {
        assert!(IntPolynomial::from_i64(&[1, 3, 3, 1]).is_palindromic());
        assert!(!IntPolynomial::from_i64(&[1, 2, 1, 1]).is_palindromic());
        assert!(IntPolynomial::one().is_palindromic());
        assert!(IntPolynomial::zero().is_palindromic());
    }
}
