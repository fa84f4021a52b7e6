//! Plane partitions: 2-D arrays of positive integers weakly decreasing
//! along rows and down columns, or equivalently finite order ideals in N^3.
//!
//! Storage is row-major (the two-dimensional-array view); the lattice-point
//! view is available through [`PlanePartition::lattice_points`].

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// A plane partition, stored as its rows. Zero entries are never stored;
/// shorter rows simply end earlier.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    rows: Vec<Vec<usize>>,
}

impl PlanePartition {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().map_or(false, |r| r.is_empty()) {
            rows.pop();
        }
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidPlanePartition(format!(
                    "row {} is empty but later rows are not",
                    i
                )));
            }
            if row.iter().any(|&e| e == 0) {
                return Err(Error::InvalidPlanePartition(format!(
                    "zero entry in row {}",
                    i
                )));
            }
            if !row.windows(2).all(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPlanePartition(format!(
                    "row {} is not weakly decreasing: {:?}",
                    i, row
                )));
            }
        }
        for i in 1..rows.len() {
            if rows[i].len() > rows[i - 1].len() {
                return Err(Error::InvalidPlanePartition(format!(
                    "row {} is longer than row {}",
                    i,
                    i - 1
                )));
            }
            for j in 0..rows[i].len() {
                if rows[i][j] > rows[i - 1][j] {
                    return Err(Error::InvalidPlanePartition(format!(
                        "column {} increases from row {} to row {}",
                        j,
                        i - 1,
                        i
                    )));
                }
            }
        }
        Ok(PlanePartition { rows })
    }

    pub fn empty() -> Self {
        PlanePartition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Sum of all entries.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.iter().sum::<usize>()).sum()
    }

    /// (number of rows, maximal row length).
    pub fn shape(&self) -> (usize, usize) {
        (
            self.rows.len(),
            self.rows.first().map_or(0, |r| r.len()),
        )
    }

    /// Largest entry.
    pub fn height(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// The order-ideal view: all 1-based lattice points (i, j, h) with
    /// h <= entry(i, j). Downward closed by the defining inequalities.
    pub fn lattice_points(&self) -> Vec<(usize, usize, usize)> {
        let mut pts = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                for h in 1..=e {
                    pts.push((i + 1, j + 1, h));
                }
            }
        }
        pts
    }

    /// Rebuilds a plane partition from an arbitrary set of lattice points,
    /// rejecting sets that are not downward closed.
    pub fn from_lattice_points(points: &[(usize, usize, usize)]) -> Result<Self> {
        use std::collections::HashSet;
        let set: HashSet<_> = points.iter().copied().collect();
        for &(i, j, h) in &set {
            if i == 0 || j == 0 || h == 0 {
                return Err(Error::InvalidPlanePartition(
                    "lattice points are 1-based and positive".into(),
                ));
            }
            for q in [(i - 1, j, h), (i, j - 1, h), (i, j, h - 1)] {
                if q.0 >= 1 && q.1 >= 1 && q.2 >= 1 && !set.contains(&q) {
                    return Err(Error::InvalidPlanePartition(format!(
                        "not downward closed: contains {:?} but not {:?}",
                        (i, j, h),
                        q
                    )));
                }
            }
        }
        let max_i = set.iter().map(|p| p.0).max().unwrap_or(0);
        let mut rows = Vec::new();
        for i in 1..=max_i {
            let max_j = set.iter().filter(|p| p.0 == i).map(|p| p.1).max().unwrap_or(0);
            let row: Vec<usize> = (1..=max_j)
                .map(|j| set.iter().filter(|p| p.0 == i && p.1 == j).map(|p| p.2).max().unwrap_or(0))
                .collect();
            rows.push(row);
        }
        PlanePartition::new(rows)
    }
}

impl fmt::Debug for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanePartition{:?}", self.rows)
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Box side lengths for MacMahon-style bounded enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxSpec {
    pub rows: usize,
    pub cols: usize,
    pub height: usize,
}

impl BoxSpec {
    pub fn new(rows: usize, cols: usize, height: usize) -> Self {
        BoxSpec { rows, cols, height }
    }
}

/// All plane partitions of `k` whose base shape fits in `r` rows and `s`
/// columns, with unbounded entries. Deterministic order: rows are chosen
/// top to bottom, each row running through its admissible partitions in
/// lexicographically decreasing order, larger row sums first.
pub fn plane_partitions_in_rect(k: usize, r: usize, s: usize) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    let mut acc: Vec<Vec<usize>> = Vec::new();
    fn rec(
        remaining: usize,
        rows_left: usize,
        bound: &Partition,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<PlanePartition>,
    ) {
        if remaining == 0 {
            out.push(PlanePartition { rows: acc.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for m in (1..=remaining).rev() {
            for row in partitions_of(m, Some(bound)) {
                acc.push(row.parts().to_vec());
                rec(remaining - m, rows_left - 1, &row, acc, out);
                acc.pop();
            }
        }
    }
    if k == 0 {
        return vec![PlanePartition::empty()];
    }
    let top = Partition::rectangle(k, s);
    rec(k, r, &top, &mut acc, &mut out);
    out
}

/// All plane partitions inside the box (entries <= height, base shape
/// inside rows x cols), in a deterministic order.
pub fn plane_partitions_in_box_enumerate(spec: BoxSpec) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    let mut acc: Vec<Vec<usize>> = Vec::new();
    fn rec(
        rows_left: usize,
        bound: &Partition,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<PlanePartition>,
    ) {
        out.push(PlanePartition {
            rows: acc.iter().filter(|r| !r.is_empty()).cloned().collect(),
        });
        if rows_left == 0 || bound.is_empty() {
            return;
        }
        let cap = bound.size();
        for m in 1..=cap {
            for row in partitions_of(m, Some(bound)) {
                acc.push(row.parts().to_vec());
                rec(rows_left - 1, &row, acc, out);
                acc.pop();
            }
        }
    }
    let bound = if spec.cols == 0 || spec.height == 0 {
        Partition::empty()
    } else {
        Partition::rectangle(spec.height, spec.cols)
    };
    rec(spec.rows, &bound, &mut acc, &mut out);
    out
}

/// The size distribution of plane partitions inside the box: entry `k` of
/// the returned vector counts those of size `k`. The vector has length
/// rows*cols*height + 1 and matches the MacMahon product coefficientwise.
pub fn plane_partitions_in_box(spec: BoxSpec) -> Vec<BigInt> {
    let mut dist = vec![BigInt::from(0); spec.rows * spec.cols * spec.height + 1];
    for pp in plane_partitions_in_box_enumerate(spec) {
        dist[pp.size()] += 1;
    }
    dist
}
