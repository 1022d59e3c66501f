use rustc_hash::FxHashMap;

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Largest size handled by memoized minor expansion; bigger matrices go
/// through fraction-free elimination.
pub const MINOR_EXPANSION_LIMIT: usize = 6;

/// Dense row-major matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> LaurentPoly>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Exact determinant. The empty 0x0 matrix has determinant 1.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        if self.rows <= MINOR_EXPANSION_LIMIT {
            Ok(self.minor_expansion())
        } else {
            self.bareiss()
        }
    }

    /// Laplace expansion along successive rows, memoized over column subsets:
    /// `minors[S]` is the determinant of the first `|S|` rows restricted to
    /// the columns in `S`.
    pub fn determinant_by_minors(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        Ok(self.minor_expansion())
    }

    fn minor_expansion(&self) -> LaurentPoly {
        let n = self.rows;
        let mut minors: FxHashMap<u32, LaurentPoly> = FxHashMap::default();
        minors.insert(0, LaurentPoly::one());
        let mut layer: Vec<u32> = vec![0];
        for row in 0..n {
            let mut next: FxHashMap<u32, LaurentPoly> = FxHashMap::default();
            for &set in &layer {
                let sub = &minors[&set];
                if sub.is_zero() {
                    continue;
                }
                for col in 0..n {
                    if set & (1 << col) != 0 {
                        continue;
                    }
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    // Position of `col` among the sorted columns of the enlarged set.
                    let position = (set & ((1u32 << col) - 1)).count_ones() as usize;
                    let sign_negative = (row + position) % 2 == 1;
                    let product = entry * sub;
                    let slot = next.entry(set | (1 << col)).or_default();
                    if sign_negative {
                        *slot = &*slot - &product;
                    } else {
                        *slot = &*slot + &product;
                    }
                }
            }
            layer = next.keys().copied().collect();
            minors = next;
        }
        minors.remove(&((1u32 << n) - 1)).unwrap_or_default()
    }

    /// Fraction-free (Bareiss) elimination. Each division by the previous
    /// pivot is exact; a nonzero remainder is reported as an invariant
    /// violation.
    pub fn bareiss(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(LaurentPoly::zero());
                };
                a.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .ok_or_else(|| Error::Invariant("Bareiss step left a nonzero remainder".into()))?;
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}
