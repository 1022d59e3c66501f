//! Partitions (Young diagrams), flags, subdiagrams and the two diagram
//! extensions used by the lattice-path determinants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty diagram is
/// the empty sequence; zero parts are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first row, 0 for the empty diagram.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Row `i` (0-based), 0 past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Whether `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All subdiagrams, ordered by size and then reverse-lexicographically
    /// within a size.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn walk(bound: &[usize], cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            let Some((&row, rest)) = bound.split_first() else {
                return;
            };
            for len in 1..=row.min(cap) {
                prefix.push(len);
                walk(rest, len, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        walk(&self.0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }

    /// `self[k, l]`: `k` new rows of length `first + l` on top and `l` new
    /// columns of height `len` on the left.
    pub fn extend(&self, k: usize, l: usize) -> Result<Partition> {
        if self.is_empty() && (k > 0 || l > 0) {
            return Err(Error::Domain(
                "cannot extend the empty diagram: first row and height are undefined".into(),
            ));
        }
        let top = self.first() + l;
        let parts = std::iter::repeat_n(top, k)
            .chain(self.0.iter().map(|p| p + l))
            .collect();
        Ok(Partition(parts))
    }

    /// The staircase extension: a staircase of size `k` added on top and one
    /// of size `l` on the left, i.e.
    /// `(first+k+l, ..., first+1+l, first+l, row2+l, ..., rowm+l, l, l-1, ..., 1)`.
    ///
    /// For the empty diagram this is the staircase with `k + l` rows.
    pub fn staircase_extend(&self, k: usize, l: usize) -> Partition {
        let first = self.first();
        let parts = (1..=k)
            .rev()
            .map(|t| first + t + l)
            .chain(self.0.iter().map(|p| p + l))
            .chain((1..=l).rev())
            .collect();
        Partition(parts)
    }

    /// The staircase `(n-1, n-2, ..., 1)`; empty for `n <= 1`.
    pub fn staircase(n: usize) -> Partition {
        Partition((1..n).rev().collect())
    }

    /// Cells as `(row, column)`, 0-based, in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (k, p) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// Parses `(a,b,c)`; whitespace is ignored and the parentheses are optional.
pub(crate) fn parse_tuple(text: &str) -> Result<Vec<usize>> {
    let trimmed = text.trim();
    let (inner, offset) = match trimmed.strip_prefix('(') {
        Some(rest) => {
            let rest = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(text.len(), "missing closing ')'"))?;
            (rest, text.find('(').unwrap() + 1)
        }
        None => (trimmed, text.len() - text.trim_start().len()),
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in inner.split(',') {
        let value = piece.trim().parse::<usize>().map_err(|_| {
            Error::parse(
                pos + piece.len() - piece.trim_start().len(),
                format!("expected a nonnegative integer, found '{}'", piece.trim()),
            )
        })?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_tuple(s)?)
    }
}

/// Row bounds `b_1 <= b_2 <= ...` for a flagged tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Flag(Vec<usize>);

impl Flag {
    pub fn new(bounds: Vec<usize>) -> Result<Self> {
        if bounds.contains(&0) {
            return Err(Error::Domain(format!("flag {bounds:?} has a zero bound")));
        }
        if bounds.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain(format!("flag {bounds:?} is not weakly increasing")));
        }
        Ok(Flag(bounds))
    }

    /// The flag `(h+1, h+2, ..., h+rows)`; `h = 0` gives the row-index flag.
    pub fn h_flag(h: usize, rows: usize) -> Flag {
        Flag((1..=rows).map(|i| h + i).collect())
    }

    pub fn bounds(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn check_against(&self, shape: &Partition) -> Result<()> {
        if self.len() != shape.len() {
            return Err(Error::Dimension(format!(
                "flag {self} has {} bounds but shape {shape} has {} rows",
                self.len(),
                shape.len()
            )));
        }
        Ok(())
    }

    /// Every weakly increasing flag of the given length with bounds in `1..=max`.
    pub fn all(len: usize, max: usize) -> Vec<Flag> {
        fn walk(len: usize, lo: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Flag>) {
            if prefix.len() == len {
                out.push(Flag(prefix.clone()));
                return;
            }
            for b in lo..=max {
                prefix.push(b);
                walk(len, b, max, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        walk(len, 1, max, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for Flag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Flag::new(parse_tuple(s)?)
    }
}
