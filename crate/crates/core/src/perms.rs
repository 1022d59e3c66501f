//! Permutations in one-line notation with the combinatorics needed for
//! Schubert polynomials: Lehmer codes, pattern avoidance, vexillary data,
//! shifts, dominant extensions and Richardson blocks.
//!
//! Composition is `(uv)(i) = u(v(i))`, so `w * s_i` swaps the entries in
//! positions `i` and `i+1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Flag, Partition};

/// A permutation of `1..=n`. Equality, hashing and ordering ignore trailing
/// fixed points, matching the stable embedding `S_n -> S_{n+1}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    oneline: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    P132,
    P2143,
}

impl Pattern {
    fn letters(self) -> &'static [u32] {
        match self {
            Pattern::P132 => &[1, 3, 2],
            Pattern::P2143 => &[2, 1, 4, 3],
        }
    }
}

impl Permutation {
    pub fn new(oneline: Vec<u32>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::Domain(format!(
                    "{oneline:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            oneline: (1..=n as u32).collect(),
        }
    }

    /// The longest element `w0(n) = (n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            oneline: (1..=n as u32).rev().collect(),
        }
    }

    /// The simple transposition `s_i` in `S_{i+1}`.
    pub fn simple(i: usize) -> Self {
        let mut p = Permutation::identity(i + 1);
        p.oneline.swap(i - 1, i);
        p
    }

    pub fn oneline(&self) -> &[u32] {
        &self.oneline
    }

    /// Size of the stored one-line form.
    pub fn len(&self) -> usize {
        self.oneline.len()
    }

    pub fn is_empty(&self) -> bool {
        self.oneline.is_empty()
    }

    /// Length of the one-line form after dropping trailing fixed points.
    pub fn trimmed_len(&self) -> usize {
        let mut n = self.oneline.len();
        while n > 0 && self.oneline[n - 1] as usize == n {
            n -= 1;
        }
        n
    }

    pub fn trimmed(&self) -> Permutation {
        Permutation {
            oneline: self.oneline[..self.trimmed_len()].to_vec(),
        }
    }

    /// Embeds into `S_n` by appending fixed points. `n` below the trimmed
    /// length is a domain error.
    pub fn padded(&self, n: usize) -> Result<Permutation> {
        if n < self.trimmed_len() {
            return Err(Error::Domain(format!("{self} does not fit in S_{n}")));
        }
        let mut oneline = self.oneline[..self.trimmed_len()].to_vec();
        oneline.extend(oneline.len() as u32 + 1..=n as u32);
        Ok(Permutation { oneline })
    }

    /// `w(i)` for 1-based `i`; fixed beyond the stored size.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.oneline.len() {
            self.oneline[i - 1] as usize
        } else {
            i
        }
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.len().max(other.len());
        Permutation {
            oneline: (1..=n).map(|i| self.apply(other.apply(i)) as u32).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { oneline: inv }
    }

    /// `w * s_i`: swaps positions `i`, `i+1` (1-based), growing if needed.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut p = self.padded(self.len().max(i + 1)).expect("padding only grows");
        p.oneline.swap(i - 1, i);
        p
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.lehmer_code().iter().sum()
    }

    /// `c_i = #{j > i : w(j) < w(i)}`, one entry per stored position.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.oneline;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// Right descents: positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.oneline
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn avoids_pattern(&self, pattern: Pattern) -> bool {
        let pat = pattern.letters();
        let w = &self.oneline;
        let mut chosen = Vec::with_capacity(pat.len());
        fn search(w: &[u32], pat: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
            let k = chosen.len();
            if k == pat.len() {
                return true;
            }
            for (pos, &v) in w.iter().enumerate().skip(from) {
                // relative order of v against earlier picks must match the pattern
                let consistent = chosen.iter().zip(pat).all(|(&c, &p)| (c < v) == (p < pat[k]));
                if consistent {
                    chosen.push(v);
                    if search(w, pat, pos + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        !search(w, pat, 0, &mut chosen)
    }

    pub fn is_vexillary(&self) -> bool {
        self.avoids_pattern(Pattern::P2143)
    }

    pub fn is_dominant(&self) -> bool {
        self.avoids_pattern(Pattern::P132)
    }

    /// Shape `λ(w)` (the sorted Lehmer code) and flag `b(w)` (the values
    /// `min I_i - 1` over nonempty `I_i = {j > i : w(j) < w(i)}`, sorted).
    pub fn vexillary_shape_and_flag(&self) -> Result<(Partition, Flag)> {
        if !self.is_vexillary() {
            return Err(Error::Domain(format!("{self} is not vexillary")));
        }
        let w = &self.oneline;
        let mut flag = Vec::new();
        for i in 0..w.len() {
            if let Some(j) = (i + 1..w.len()).find(|&j| w[j] < w[i]) {
                // j is 0-based, so min I_i - 1 in 1-based terms is j
                flag.push(j);
            }
        }
        flag.sort_unstable();
        let shape = Partition::from_unsorted(self.lehmer_code());
        Ok((shape, Flag::new(flag)?))
    }

    /// `1^h × w`: `h` new fixed points in front.
    pub fn shift(&self, h: usize) -> Permutation {
        let mut oneline: Vec<u32> = (1..=h as u32).collect();
        oneline.extend(self.oneline.iter().map(|&v| v + h as u32));
        Permutation { oneline }
    }

    fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::Domain(format!("{self} is not dominant")))
        }
    }

    /// Doubles the first entry: `w(1)+1, w(1), ...` with later entries
    /// above `w(1)` raised by one.
    fn extend_top(&self) -> Permutation {
        let w = self.padded(self.len().max(1)).expect("grows only").oneline;
        let first = w[0];
        let mut out = vec![first + 1, first];
        out.extend(w[1..].iter().map(|&v| if v > first { v + 1 } else { v }));
        Permutation { oneline: out }
    }

    /// Doubles the position of 1: entries up to `w^{-1}(1)` are raised by
    /// one, then 1 is inserted right after.
    fn extend_left(&self) -> Permutation {
        let w = self.padded(self.len().max(1)).expect("grows only").oneline;
        let p = w.iter().position(|&v| v == 1).expect("1 is present");
        let mut out: Vec<u32> = w[..=p].iter().map(|&v| v + 1).collect();
        out.push(1);
        out.extend(w[p + 1..].iter().map(|&v| v + 1));
        Permutation { oneline: out }
    }

    /// `ŵ[k, l]`: `k` top doublings and `l` left doublings. Its Lehmer code
    /// sorts to the staircase extension of `λ(w)`.
    pub fn extend_dominant(&self, k: usize, l: usize) -> Result<Permutation> {
        self.require_dominant()?;
        let mut w = self.clone();
        for _ in 0..k {
            w = w.extend_top();
        }
        for _ in 0..l {
            w = w.extend_left();
        }
        Ok(w)
    }

    /// Sizes of the consecutive decreasing blocks if `w` is Richardson.
    pub fn richardson_blocks(&self) -> Option<Vec<usize>> {
        let w = &self.oneline;
        let mut blocks = Vec::new();
        let mut start = 0;
        while start < w.len() {
            let top = w[start] as usize;
            let size = top.checked_sub(start)?;
            if size == 0 || start + size > w.len() {
                return None;
            }
            let expected = (start as u32 + 1..=top as u32).rev();
            if !w[start..start + size].iter().copied().eq(expected) {
                return None;
            }
            blocks.push(size);
            start += size;
        }
        Some(blocks)
    }

    pub fn is_richardson(&self) -> bool {
        self.richardson_blocks().is_some()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation {
                oneline: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..current.len())
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    /// The digit form `(1432)`, available when `n <= 9`.
    pub fn compact(&self) -> Option<String> {
        (self.len() <= 9).then(|| {
            let digits: String = self.oneline.iter().map(|d| d.to_string()).collect();
            format!("({digits})")
        })
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.oneline[..self.trimmed_len()] == other.oneline[..other.trimmed_len()]
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.oneline[..self.trimmed_len()].hash(state);
    }
}

impl Ord for Permutation {
    /// Lexicographic on one-line forms padded to a common size.
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.len().max(other.len());
        (1..=n)
            .map(|i| self.apply(i).cmp(&other.apply(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.oneline.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `(1,4,3,2)` and the compact `(1432)`; parentheses optional.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let values: Vec<u32> = if inner.contains(',') {
            crate::shapes::parse_tuple(s)?
                .into_iter()
                .map(|v| v as u32)
                .collect()
        } else {
            let offset = s.find(inner).unwrap_or(0);
            inner
                .chars()
                .enumerate()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(k, c)| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::parse(offset + k, format!("unexpected '{c}' in permutation")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.oneline
    }
}
