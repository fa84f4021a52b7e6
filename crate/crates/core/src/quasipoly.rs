//! Quasipolynomial extraction: one exact-rational polynomial per residue
//! class of k modulo the period, interpolated from series coefficients and
//! then verified against every remaining expanded term.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::genfunc::{gf_reduced, lcm_up_to};
use crate::poly::divisors;

/// A polynomial with exact rational coefficients, dense, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(k)))
    }

    fn add_scaled(&mut self, other: &RatPoly, scale: &BigRational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c * scale;
        }
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// self * (x - root).
    fn mul_linear(&self, root: &BigRational) -> RatPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * root;
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    // Paper-style branch layout: "1/72 k^3 + 1/6 k^2 + 13/24 k + 5/18".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
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
                1 => {
                    if !mag.is_one() {
                        write!(f, " ")?;
                    }
                    write!(f, "k")?;
                }
                _ => {
                    if !mag.is_one() {
                        write!(f, " ")?;
                    }
                    write!(f, "k^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self)
    }
}

/// Lagrange interpolation through the given points, exact.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPoly::new(vec![BigRational::one()]);
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul_linear(xj);
                denom *= xi - xj;
            }
        }
        acc.add_scaled(&basis, &(yi / denom));
    }
    acc
}

/// A family of per-residue-class polynomials with period `period`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quasipolynomial {
    period: usize,
    branches: Vec<RatPoly>,
    minimal_period: usize,
}

impl Quasipolynomial {
    pub fn period(&self) -> usize {
        self.period
    }

    /// Smallest divisor of the period under which the branch family is
    /// invariant.
    pub fn minimal_period(&self) -> usize {
        self.minimal_period
    }

    /// Max branch degree.
    pub fn degree(&self) -> usize {
        self.branches
            .iter()
            .filter_map(|b| b.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn branches(&self) -> &[RatPoly] {
        &self.branches
    }

    pub fn branch(&self, residue: usize) -> &RatPoly {
        &self.branches[residue % self.period]
    }

    /// Evaluates at k; the value of a counting quasipolynomial is always a
    /// nonnegative integer, and a non-integer result is an internal error.
    pub fn eval(&self, k: usize) -> Result<BigInt> {
        let v = self.branch(k % self.period).eval_int(k as i64);
        if !v.is_integer() {
            return Err(Error::Internal(format!(
                "quasipolynomial value at k = {} is not an integer: {}",
                k, v
            )));
        }
        Ok(v.to_integer())
    }
}

impl fmt::Display for Quasipolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, b) in self.branches.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            write!(f, "{}   if k ≡ {} (mod {})", b, r, self.period)?;
        }
        Ok(())
    }
}

/// Extracts the quasipolynomial describing the coefficients of F_{a,a}.
///
/// Expands the series to 2*a*l + validate_extra terms (l = lcm(1..=a+1)),
/// interpolates each residue class from its first 2a values by a polynomial
/// of degree <= 2a-1, then verifies the polynomial against every remaining
/// expanded coefficient. A verification mismatch is a hard error: it would
/// falsify the degree/period claim.
pub fn extract_quasipolynomial(a: usize, validate_extra: usize) -> Result<Quasipolynomial> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be >= 1".into()));
    }
    let l = lcm_up_to(a + 1);
    let points_per_branch = 2 * a;
    // 2*a*l terms are needed for interpolation, the rest verify the claim
    let n_max = points_per_branch * l - 1 + validate_extra;
    let coeffs = gf_reduced(a, a)?.series_coefficients(n_max);
    let mut branches = Vec::with_capacity(l);
    for r in 0..l {
        let points: Vec<(BigRational, BigRational)> = (0..points_per_branch)
            .map(|i| {
                let k = r + i * l;
                (
                    BigRational::from_integer(BigInt::from(k)),
                    BigRational::from_integer(coeffs[k].clone()),
                )
            })
            .collect();
        let poly = interpolate(&points);
        if poly.degree().map_or(false, |d| d > 2 * a - 1) {
            return Err(Error::QuasipolyMismatch(format!(
                "branch {} has degree {:?} > {}",
                r,
                poly.degree(),
                2 * a - 1
            )));
        }
        branches.push(poly);
    }
    // verify every expanded coefficient, not just the interpolation points
    for (k, c) in coeffs.iter().enumerate() {
        let predicted = branches[k % l].eval_int(k as i64);
        if predicted != BigRational::from_integer(c.clone()) {
            return Err(Error::QuasipolyMismatch(format!(
                "branch {} predicts {} at k = {}, series has {}",
                k % l,
                predicted,
                k,
                c
            )));
        }
    }
    // minimal true period: smallest divisor of l fixing the branch family
    let minimal_period = divisors(l)
        .into_iter()
        .find(|&lp| (0..l).all(|r| branches[r] == branches[r % lp]))
        .unwrap_or(l);
    Ok(Quasipolynomial {
        period: l,
        branches,
        minimal_period,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        // y = x^2 - x/2 + 3
        let target = RatPoly::new(vec![rat(3, 1), rat(-1, 2), rat(1, 1)]);
        let pts: Vec<_> = (0..3)
            .map(|x| {
                let xr = BigRational::from_integer(BigInt::from(x));
                (xr.clone(), target.eval(&xr))
            })
            .collect();
        assert_eq!(interpolate(&pts), target);
    }

    #[test]
    fn a1_has_two_branches_of_degree_one() {
        // coefficients of 1/((1-x)(1-x^2)) are floor(k/2) + 1
        let q = extract_quasipolynomial(1, 8).unwrap();
        assert_eq!(q.period(), 2);
        assert_eq!(q.degree(), 1);
        assert_eq!(q.minimal_period(), 2);
        // k even: k/2 + 1; k odd: k/2 + 1/2
        assert_eq!(q.branch(0), &RatPoly::new(vec![rat(1, 1), rat(1, 2)]));
        assert_eq!(q.branch(1), &RatPoly::new(vec![rat(1, 2), rat(1, 2)]));
        for k in 0..30 {
            assert_eq!(q.eval(k).unwrap(), BigInt::from(k / 2 + 1));
        }
    }

    #[test]
    fn a2_reproduces_the_six_known_branches() {
        let q = extract_quasipolynomial(2, 12).unwrap();
        assert_eq!(q.period(), 6);
        assert_eq!(q.minimal_period(), 6);
        assert_eq!(q.degree(), 3);
        let expect = [
            vec![rat(1, 1), rat(2, 3), rat(1, 6), rat(1, 72)],
            vec![rat(5, 18), rat(13, 24), rat(1, 6), rat(1, 72)],
            vec![rat(8, 9), rat(2, 3), rat(1, 6), rat(1, 72)],
            vec![rat(1, 2), rat(13, 24), rat(1, 6), rat(1, 72)],
            vec![rat(7, 9), rat(2, 3), rat(1, 6), rat(1, 72)],
            vec![rat(7, 18), rat(13, 24), rat(1, 6), rat(1, 72)],
        ];
        for (r, coeffs) in expect.iter().enumerate() {
            assert_eq!(q.branch(r), &RatPoly::new(coeffs.clone()), "branch {}", r);
        }
    }

    #[test]
    fn branch_display_layout() {
        let q = extract_quasipolynomial(2, 0).unwrap();
        assert_eq!(q.branch(1).to_string(), "1/72 k^3 + 1/6 k^2 + 13/24 k + 5/18");
        assert_eq!(q.branch(0).to_string(), "1/72 k^3 + 1/6 k^2 + 2/3 k + 1");
    }
}
