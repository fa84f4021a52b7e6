//! Integer partitions and their enumerators.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! Trailing zeros are stripped at construction, so `(3, 2)` and `(3, 2, 0)`
//! denote the same value; the empty sequence is the unique partition of 0.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a part list. Trailing zeros are stripped;
    /// a zero anywhere else, or any increase, is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {:?}",
                parts
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero part in {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// The unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle (k, k, ..., k) with `a` rows. `k = 0` or `a = 0` gives
    /// the empty partition.
    pub fn rectangle(k: usize, a: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![k; a],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |lambda|, the number being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// True iff the Young diagram of `inner` fits inside that of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| self[i] >= inner[i])
    }

    /// Pointwise minimum of the two diagrams.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition {
            parts: (0..n).map(|i| self[i].min(other[i])).collect(),
        }
    }

    /// The conjugate partition (column lengths of the diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// alpha[n]: prepends a first part of size `n - |alpha|`.
    ///
    /// Fails when `n - |alpha| < alpha_1`, i.e. the result would not be
    /// weakly decreasing.
    pub fn prepend_first_part(&self, n: usize) -> Result<Partition> {
        let first = n as isize - self.size() as isize;
        if first < self.first() as isize {
            return Err(Error::NotStableShaped {
                first,
                alpha1: self.first(),
            });
        }
        if first == 0 {
            // Only possible for the empty partition; alpha[0] = empty.
            return Ok(self.clone());
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first as usize);
        parts.extend_from_slice(&self.parts);
        Ok(Partition { parts })
    }

    /// Smallest `n` for which `prepend_first_part(n)` succeeds.
    pub fn min_stable_n(&self) -> usize {
        self.size() + self.first()
    }
}

/// Out-of-range rows read as 0, which makes containment and pointwise
/// arithmetic uniform.
impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    // Renders as "(3,2,1)"; the empty partition is "()".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

/// All partitions of `p`, optionally restricted to those fitting inside
/// `inside`, in lexicographically decreasing order.
pub fn partitions_of(p: usize, inside: Option<&Partition>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let row_cap = |row: usize| inside.map_or(usize::MAX, |b| b[row]);
    fn rec(
        remaining: usize,
        row: usize,
        max_part: usize,
        row_cap: &dyn Fn(usize) -> usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max_part).min(row_cap(row));
        for part in (1..=hi).rev() {
            current.push(part);
            rec(remaining - part, row + 1, part, row_cap, current, out);
            current.pop();
        }
    }
    rec(p, 0, p, &row_cap, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_strips_trailing_zeros() {
        assert_eq!(pt(&[3, 2, 0, 0]), pt(&[3, 2]));
        assert_eq!(pt(&[]), Partition::empty());
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![3, 0, 2]).is_err());
    }

    #[test]
    fn prepend_first_part_examples() {
        assert_eq!(pt(&[3, 2]).prepend_first_part(10).unwrap(), pt(&[5, 3, 2]));
        assert_eq!(Partition::empty().prepend_first_part(4).unwrap(), pt(&[4]));
        assert_eq!(
            pt(&[2, 2, 1]).prepend_first_part(10).unwrap(),
            pt(&[5, 2, 2, 1])
        );
        // n - |alpha| < alpha_1 is not yet stable-shaped
        assert!(matches!(
            pt(&[3, 2]).prepend_first_part(7),
            Err(Error::NotStableShaped { .. })
        ));
        // boundary: n - |alpha| == alpha_1 is fine
        assert_eq!(pt(&[3, 2]).prepend_first_part(8).unwrap(), pt(&[3, 3, 2]));
        assert_eq!(Partition::empty().prepend_first_part(0).unwrap(), Partition::empty());
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(
            pt(&[9, 3, 3, 3]).intersect(&pt(&[9, 3, 3, 3])),
            pt(&[9, 3, 3, 3])
        );
        assert_eq!(pt(&[5, 3, 2]).intersect(&pt(&[4, 4, 2])), pt(&[4, 3, 2]));
        assert_eq!(pt(&[2]).intersect(&pt(&[1, 1])), pt(&[1]));
    }

    #[test]
    fn partitions_of_examples() {
        let all3 = partitions_of(3, None);
        assert_eq!(all3, vec![pt(&[3]), pt(&[2, 1]), pt(&[1, 1, 1])]);

        let bounded = partitions_of(3, Some(&pt(&[3, 3, 3, 3])));
        assert_eq!(bounded.len(), 3);

        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);

        // inside-bounded output is exactly the containment filter
        let inside = pt(&[3, 1]);
        let bounded = partitions_of(4, Some(&inside));
        let filtered: Vec<_> = partitions_of(4, None)
            .into_iter()
            .filter(|q| inside.contains(q))
            .collect();
        assert_eq!(bounded, filtered);
    }

    #[test]
    fn partition_counts_are_classical() {
        // p(0..9) = 1,1,2,3,5,7,11,15,22,30
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n, None).len(), e, "p({})", n);
        }
    }

    #[test]
    fn conjugate_involution() {
        for n in 0..=8 {
            for lam in partitions_of(n, None) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), lam.size());
            }
        }
        assert_eq!(pt(&[3, 2]).conjugate(), pt(&[2, 2, 1]));
    }

    #[test]
    fn index_reads_zero_out_of_range() {
        let p = pt(&[4, 2]);
        assert_eq!(p[0], 4);
        assert_eq!(p[5], 0);
    }
}
