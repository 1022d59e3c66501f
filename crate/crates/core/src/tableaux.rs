//! Flagged semistandard tableaux and the two classical routes to flagged
//! Schur polynomials: summing tableau monomials, and the flagged
//! Jacobi–Trudi determinant of complete homogeneous polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Monomial, PolyMatrix, Var};
use crate::shapes::{Flag, Partition};

/// A filling of a Young diagram, rows weakly increasing and columns
/// strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlaggedTableau {
    rows: Vec<Vec<u32>>,
}

impl FlaggedTableau {
    /// Validates row/column monotonicity and positivity.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape)?;
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::Domain("tableau entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Domain(format!("row {} is not weakly increasing", i + 1)));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below <= above) {
                return Err(Error::Domain(format!("column strictness fails at row {}", i + 1)));
            }
        }
        Ok(FlaggedTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn satisfies_flag(&self, flag: &Flag) -> bool {
        flag.len() == self.rows.len()
            && self
                .rows
                .iter()
                .zip(flag.bounds())
                .all(|(row, &b)| row.iter().all(|&t| t as usize <= b))
    }
}

impl fmt::Display for FlaggedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, t) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FlaggedTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(FlaggedTableau { rows: Vec::new() });
        }
        let mut rows = Vec::new();
        let mut offset = 0;
        for chunk in s.split('/') {
            let mut row = Vec::new();
            let mut pos = offset;
            for word in chunk.split(' ') {
                if !word.is_empty() {
                    row.push(word.parse::<u32>().map_err(|_| {
                        Error::parse(pos, format!("expected a positive integer, found '{word}'"))
                    })?);
                }
                pos += word.len() + 1;
            }
            rows.push(row);
            offset += chunk.len() + 1;
        }
        FlaggedTableau::new(rows)
    }
}

/// Shared backtracking over flagged fillings: cells are filled in reading
/// order, each with every admissible value in increasing order.
fn fill<F: FnMut(&[Vec<u32>])>(shape: &Partition, flag: &Flag, visit: &mut F) {
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    fn step<F: FnMut(&[Vec<u32>])>(
        k: usize,
        cells: &[(usize, usize)],
        bounds: &[usize],
        rows: &mut Vec<Vec<u32>>,
        visit: &mut F,
    ) {
        let Some(&(i, j)) = cells.get(k) else {
            visit(rows);
            return;
        };
        let left = if j > 0 { rows[i][j - 1] } else { 1 };
        let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
        let lo = left.max(above);
        // Column strictness below forces row i entries to leave room:
        // the entry at (i', j) for i' > i is at least t + (i' - i).
        let mut hi = bounds[i] as u32;
        let mut below = i + 1;
        while below < rows.len() && rows[below].len() > j {
            hi = hi.min(bounds[below] as u32 - (below - i) as u32);
            below += 1;
        }
        for t in lo..=hi {
            rows[i][j] = t;
            step(k + 1, cells, bounds, rows, visit);
        }
    }
    // A bound smaller than the forced minimum row index leaves nothing to fill.
    let feasible = flag.bounds().iter().enumerate().all(|(i, &b)| b > i);
    if feasible {
        step(0, &cells, flag.bounds(), &mut rows, visit);
    }
}

/// All tableaux of shape `lambda` whose row `i` entries are at most `b_i`,
/// in lexicographic order of their reading words.
pub fn enumerate_tableaux(lambda: &Partition, b: &Flag) -> Result<Vec<FlaggedTableau>> {
    b.check_against(lambda)?;
    let mut out = Vec::new();
    fill(lambda, b, &mut |rows: &[Vec<u32>]| {
        out.push(FlaggedTableau { rows: rows.to_vec() })
    });
    Ok(out)
}

/// The content monomial: exponent of `x_k` is the number of entries equal to `k`.
pub fn weight_monomial(t: &FlaggedTableau) -> LaurentPoly {
    LaurentPoly::monomial(content(&t.rows))
}

fn content(rows: &[Vec<u32>]) -> Monomial {
    let mut exps: Vec<i32> = Vec::new();
    for &t in rows.iter().flatten() {
        let idx = t as usize - 1;
        if idx >= exps.len() {
            exps.resize(idx + 1, 0);
        }
        exps[idx] += 1;
    }
    Monomial::from_exponents(&exps)
}

/// Flagged Schur polynomial by definition: the sum of content monomials of
/// all flagged tableaux.
pub fn flagged_schur(lambda: &Partition, b: &Flag) -> Result<LaurentPoly> {
    b.check_against(lambda)?;
    let mut acc: FxHashMap<Monomial, u64> = FxHashMap::default();
    fill(lambda, b, &mut |rows: &[Vec<u32>]| {
        *acc.entry(content(rows)).or_insert(0) += 1;
    });
    Ok(LaurentPoly::from_terms(
        acc.into_iter().map(|(m, c)| (m, BigInt::from(c))),
    ))
}

/// The `h`-flagged Schur polynomial, flag `(h+1, ..., h+m)`.
pub fn h_flagged_schur(lambda: &Partition, h: usize) -> LaurentPoly {
    flagged_schur(lambda, &Flag::h_flag(h, lambda.len())).expect("flag length matches by construction")
}

/// Complete homogeneous polynomial of degree `d` in `x1..xk`; 1 for `d = 0`,
/// 0 for negative `d`.
pub fn complete_homogeneous(d: i64, k: usize) -> LaurentPoly {
    if d < 0 {
        return LaurentPoly::zero();
    }
    if d == 0 {
        return LaurentPoly::one();
    }
    // Weakly increasing index sequences, generated as exponent vectors.
    let mut terms = Vec::new();
    let mut exps = vec![0i32; k];
    fn walk(var: usize, left: i64, exps: &mut Vec<i32>, terms: &mut Vec<(Monomial, BigInt)>) {
        if var + 1 == exps.len() {
            exps[var] = left as i32;
            terms.push((Monomial::from_exponents(exps), BigInt::from(1)));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e as i32;
            walk(var + 1, left - e, exps, terms);
        }
        exps[var] = 0;
    }
    if k > 0 {
        walk(0, d, &mut exps, &mut terms);
    }
    LaurentPoly::from_terms(terms)
}

/// The flagged Jacobi–Trudi matrix `(h_{λ_i - i + j}(b_i))`.
pub fn jacobi_trudi_matrix(lambda: &Partition, b: &Flag) -> Result<PolyMatrix> {
    b.check_against(lambda)?;
    let m = lambda.len();
    let mut cache: FxHashMap<(i64, usize), LaurentPoly> = FxHashMap::default();
    Ok(PolyMatrix::from_fn(m, m, |i, j| {
        let d = lambda.row(i) as i64 - i as i64 + j as i64;
        let k = b.bounds()[i];
        cache
            .entry((d, k))
            .or_insert_with(|| complete_homogeneous(d, k))
            .clone()
    }))
}

pub fn jacobi_trudi(lambda: &Partition, b: &Flag) -> Result<LaurentPoly> {
    jacobi_trudi_matrix(lambda, b)?.determinant()
}

/// Replaces `t_ij` by `h + i - t_ij` (rows 1-based), turning an `h`-flagged
/// tableau into a plane partition with entries in `0..=h`.
pub fn to_plane_partition(t: &FlaggedTableau, h: usize) -> Result<Vec<Vec<u32>>> {
    t.rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let top = (h + i + 1) as u32;
            row.iter()
                .map(|&v| {
                    if v > top {
                        Err(Error::Domain(format!(
                            "entry {v} in row {} exceeds the {h}-flag bound {top}",
                            i + 1
                        )))
                    } else {
                        Ok(top - v)
                    }
                })
                .collect()
        })
        .collect()
}

/// Inverse of [`to_plane_partition`].
pub fn from_plane_partition(pp: &[Vec<u32>], h: usize) -> Result<FlaggedTableau> {
    let rows = pp
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let top = (h + i + 1) as u32;
            row.iter()
                .map(|&v| {
                    if v as usize > h {
                        Err(Error::Domain(format!("plane partition entry {v} exceeds {h}")))
                    } else {
                        Ok(top - v)
                    }
                })
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    FlaggedTableau::new(rows)
}

/// Substitutes `x_k -> x_{k+offset}`, i.e. evaluates in the variable window
/// starting at `x_{offset+1}`.
pub fn in_window(p: &LaurentPoly, first_var: Var) -> LaurentPoly {
    p.shift_vars(first_var - 1)
}
