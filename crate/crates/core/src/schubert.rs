//! Divided differences and Schubert polynomials, with the flagged Schur
//! identities for vexillary and shifted dominant permutations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::lattice::{entry_as_one_flagged, lgv_construction, Variant};
use crate::perms::Permutation;
use crate::poly::{LaurentPoly, Monomial, Var};
use crate::shapes::Partition;
use crate::tableaux::{flagged_schur, in_window};

/// Largest `n` accepted by [`all_schubert_values_at_one`] unless raised.
pub const DEFAULT_MAX_N: usize = 7;

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
///
/// Computed term by term: `x_i^a x_{i+1}^b` maps to the complete
/// homogeneous sum `x_i^{a-1} x_{i+1}^b + ... + x_i^b x_{i+1}^{a-1}` (negated
/// when `a < b`), which is the exact quotient. Negative exponents on `x_i` or
/// `x_{i+1}` are rejected.
pub fn divided_difference(f: &LaurentPoly, i: usize) -> Result<LaurentPoly> {
    if i == 0 {
        return Err(Error::Domain("divided differences are indexed from 1".into()));
    }
    let vi = i as Var;
    let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
    for (m, c) in f.terms() {
        let a = m.exponent(vi);
        let b = m.exponent(vi + 1);
        if a < 0 || b < 0 {
            return Err(Error::Domain(format!(
                "∂_{i} needs nonnegative powers of x{i} and x{}, found {m}",
                i + 1
            )));
        }
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
        let mut exps = m.exponents().to_vec();
        if exps.len() < i + 1 {
            exps.resize(i + 1, 0);
        }
        for k in 0..hi - lo {
            exps[i - 1] = hi - 1 - k;
            exps[i] = lo + k;
            let slot = acc.entry(Monomial::from_exponents(&exps)).or_default();
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
    }
    Ok(LaurentPoly::from_terms(acc))
}

/// A reduced word `(i_1, ..., i_k)` with `v = s_{i_1} ... s_{i_k}`, found by
/// peeling off the smallest right descent.
pub fn reduced_word(v: &Permutation) -> Vec<usize> {
    let mut v = v.clone();
    let mut peeled = Vec::new();
    while let Some(&d) = v.descents().first() {
        peeled.push(d);
        v = v.times_simple(d);
    }
    peeled.reverse();
    peeled
}

/// Product `s_{i_1} ... s_{i_k}`.
pub fn word_product(word: &[usize]) -> Permutation {
    word.iter()
        .fold(Permutation::identity(0), |acc, &i| acc.times_simple(i))
}

fn staircase_monomial(n: usize) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::from_exponents(
        &(0..n).rev().map(|e| e as i32).collect::<Vec<_>>(),
    ))
}

/// `𝔖_w`, taking the ambient group to be `S_n` for `n` the trimmed size.
pub fn schubert_poly(w: &Permutation) -> LaurentPoly {
    let n = w.trimmed_len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let word = reduced_word(&Permutation::longest(n).compose(w));
    apply_word(staircase_monomial(n), &word)
}

fn apply_word(mut f: LaurentPoly, word: &[usize]) -> LaurentPoly {
    // ∂_{i_1} acts first
    for &i in word {
        f = divided_difference(&f, i).expect("Schubert chains stay polynomial");
    }
    f
}

/// `𝔖_w` along a caller-supplied reduced word of `w0(n) w`, `n` the trimmed
/// size of `w`.
pub fn schubert_poly_with_word(w: &Permutation, word: &[usize]) -> Result<LaurentPoly> {
    let n = w.trimmed_len();
    let target = Permutation::longest(n).compose(w);
    if word.len() != target.length() || word_product(word) != target {
        return Err(Error::Domain(format!(
            "{word:?} is not a reduced word of w0 w for w = {w}"
        )));
    }
    Ok(apply_word(staircase_monomial(n), word))
}

/// `𝔖_w(1, ..., 1)` for every `w` in `S_n`.
///
/// Walks the weak order level by level from `w0`: each `v` of length `L` is
/// `u s_d` for `d` its smallest ascent and `u` of length `L+1`, so
/// `𝔖_v = ∂_d 𝔖_u`. Only one level of polynomials is alive at a time.
pub fn all_schubert_values_at_one(n: usize, max_n: usize) -> Result<BTreeMap<Permutation, BigInt>> {
    if n > max_n {
        return Err(Error::Budget(format!(
            "S_{n} exceeds the configured limit n <= {max_n}"
        )));
    }
    let mut values = BTreeMap::new();
    let top = Permutation::longest(n);
    let mut level: FxHashMap<Permutation, LaurentPoly> = FxHashMap::default();
    level.insert(top, staircase_monomial(n));
    while !level.is_empty() {
        for (w, p) in &level {
            values.insert(w.padded(n)?, p.eval_at_ones());
        }
        let mut below: FxHashSet<Permutation> = FxHashSet::default();
        for u in level.keys() {
            for d in u.descents() {
                below.insert(u.times_simple(d));
            }
        }
        let below: Vec<Permutation> = below.into_iter().collect();
        let next: Vec<(Permutation, LaurentPoly)> = below
            .into_par_iter()
            .map(|v| {
                let w = v.padded(n).expect("same group");
                let d = (1..n)
                    .find(|&d| w.apply(d) < w.apply(d + 1))
                    .expect("non-top elements have an ascent");
                let parent = &level[&w.times_simple(d)];
                let poly = divided_difference(parent, d).expect("Schubert chains stay polynomial");
                (v, poly)
            })
            .collect();
        level = next.into_iter().collect();
    }
    Ok(values)
}

/// Whether `𝔖_w` equals the flagged Schur polynomial of `λ(w)`, `b(w)`.
pub fn wachs_check(w: &Permutation) -> Result<bool> {
    let (shape, flag) = w.vexillary_shape_and_flag()?;
    Ok(schubert_poly(w) == flagged_schur(&shape, &flag)?)
}

/// `𝔖_{1^h × w}` for dominant `w`, computed as the staircase-variant path
/// determinant for `λ(w)`.
///
/// Every matrix entry is checked against `𝔖_{1 × ŵ[a,b]}` in its variable
/// window over its monomial, where `ŵ[a,b]` is the dominant extension whose
/// code is the entry's diagram. A mismatch is reported as an invariant
/// violation.
pub fn mainschubert_determinant(w: &Permutation, h: usize) -> Result<LaurentPoly> {
    if !w.is_dominant() {
        return Err(Error::Domain(format!("{w} is not dominant")));
    }
    if h == 0 {
        return Err(Error::Domain("h must be at least 1".into()));
    }
    let lambda = Partition::from_unsorted(w.lehmer_code());
    if lambda.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let construction = lgv_construction(&lambda, h, Variant::Staircase)?;
    let matrix = construction.matrix()?;
    for i in 1..=h {
        for j in 1..=h {
            let form = entry_as_one_flagged(&lambda, h, i, j, Variant::Staircase)?;
            let (a, b) = (0..h)
                .flat_map(|a| (0..h).map(move |b| (a, b)))
                .find(|&(a, b)| lambda.staircase_extend(a, b) == form.diagram)
                .ok_or_else(|| {
                    Error::Invariant(format!(
                        "entry ({i},{j}) has diagram {} which is no staircase extension of {lambda}",
                        form.diagram
                    ))
                })?;
            let extended = w.extend_dominant(a, b)?.shift(1);
            let via_schubert =
                in_window(&schubert_poly(&extended), form.first_var).monomial_quotient(&form.denominator);
            if &via_schubert != matrix.get(i - 1, j - 1) {
                return Err(Error::Invariant(format!(
                    "entry ({i},{j}) differs from the Schubert polynomial of {extended}"
                )));
            }
        }
    }
    Ok(matrix.determinant()?.mul_monomial(&construction.prefactor))
}

/// Product of `𝔖_{1^offset × w0(size)}` over the decreasing blocks of a
/// Richardson permutation.
pub fn richardson_factorization(w: &Permutation) -> Result<LaurentPoly> {
    let blocks = w
        .richardson_blocks()
        .ok_or_else(|| Error::Domain(format!("{w} is not Richardson")))?;
    let mut offset = 0;
    let mut product = LaurentPoly::one();
    for size in blocks {
        product = product * schubert_poly(&Permutation::longest(size).shift(offset));
        offset += size;
    }
    Ok(product)
}
