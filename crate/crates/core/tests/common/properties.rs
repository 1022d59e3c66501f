//! Seeded structural property checks, shared by the core test suite and
//! the acceptance runner. Each check returns `Err` with a description of
//! the first violation.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schurkit_core::lattice::{
    lgv_construction, nc_path_systems, one_flagged_via_paths, paths_between, tail_swap, PathSystem, Variant,
};
use schurkit_core::perms::Permutation;
use schurkit_core::schubert::{
    divided_difference, reduced_word, richardson_factorization, schubert_poly, schubert_poly_with_word,
    word_product,
};
use schurkit_core::shapes::{Flag, Partition};
use schurkit_core::tableaux::{
    enumerate_tableaux, from_plane_partition, h_flagged_schur, to_plane_partition,
};
use schurkit_core::{LaurentPoly, Monomial, PolyMatrix};

pub type Check = fn() -> Result<(), String>;

pub const ALL: &[(&str, Check)] = &[
    ("ring axioms", ring_axioms),
    ("parse/display round trip", parse_round_trip),
    (
        "elimination determinant agrees with minor expansion",
        bareiss_matches_minors,
    ),
    ("plane partition bijection", plane_partition_bijection),
    (
        "tail swap is a weight-preserving involution",
        tail_swap_involution,
    ),
    (
        "Schubert polynomial independent of reduced word",
        braid_independence,
    ),
    (
        "divided difference squares to zero",
        divided_difference_squares_to_zero,
    ),
    ("Schubert polynomial stable under padding", stability),
    (
        "dominant iff Schubert polynomial is a monomial",
        dominant_iff_monomial,
    ),
    ("x1 = 0 in 1 x w gives shifted w", shift_by_one_fixed_point),
    (
        "dominant extension code is the staircase extension",
        extension_codes,
    ),
    ("top and left extensions commute", extensions_commute),
    ("Richardson permutations factor into blocks", richardson_factors),
    ("one-flagged via single paths", one_flagged_paths),
    ("dominant implies vexillary", dominant_implies_vexillary),
];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_poly(rng: &mut ChaCha8Rng, vars: usize, exps: std::ops::RangeInclusive<i32>) -> LaurentPoly {
    let terms = rng.gen_range(0..=4);
    (0..terms)
        .map(|_| {
            let e: Vec<i32> = (0..vars).map(|_| rng.gen_range(exps.clone())).collect();
            LaurentPoly::term(Monomial::from_exponents(&e), rng.gen_range(-3i64..=3))
        })
        .sum()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn ring_axioms() -> Result<(), String> {
    let mut r = rng(1);
    for _ in 0..200 {
        let a = random_poly(&mut r, 3, -2..=3);
        let b = random_poly(&mut r, 3, -2..=3);
        let c = random_poly(&mut r, 3, -2..=3);
        check(&a + &b == &b + &a, || format!("a+b != b+a for {a}, {b}"))?;
        check(&a * &b == &b * &a, || format!("ab != ba for {a}, {b}"))?;
        check((&a + &b) + &c == &a + &(&b + &c), || {
            format!("+ not associative on {a}, {b}, {c}")
        })?;
        check((&a * &b) * &c == &a * &(&b * &c), || {
            format!("* not associative on {a}, {b}, {c}")
        })?;
        check(&a * &(&b + &c) == &a * &b + &a * &c, || {
            format!("not distributive on {a}, {b}, {c}")
        })?;
        check((&a + &(-&a)).is_zero(), || format!("a + (-a) != 0 for {a}"))?;
        check(&a * &LaurentPoly::one() == a, || format!("a*1 != a for {a}"))?;
    }
    Ok(())
}

pub fn parse_round_trip() -> Result<(), String> {
    let mut r = rng(2);
    for _ in 0..300 {
        let a = random_poly(&mut r, 4, -3..=3);
        let back: LaurentPoly = a.to_string().parse().map_err(|e| format!("{a}: {e}"))?;
        check(back == a, || format!("{a} reparsed as {back}"))?;
    }
    Ok(())
}

pub fn bareiss_matches_minors() -> Result<(), String> {
    let mut r = rng(3);
    for size in 1..=5 {
        for _ in 0..6 {
            let m = PolyMatrix::from_fn(size, size, |_, _| random_poly(&mut r, 3, -1..=2));
            let a = m.bareiss().map_err(|e| e.to_string())?;
            let b = m.determinant_by_minors().map_err(|e| e.to_string())?;
            check(a == b, || format!("{size}x{size}: elimination {a} vs minors {b}"))?;
        }
    }
    Ok(())
}

pub fn plane_partition_bijection() -> Result<(), String> {
    let outer: Partition = "(3,2,2)".parse().unwrap();
    for lambda in outer.subdiagrams() {
        for h in 1..=3 {
            let flag = Flag::h_flag(h, lambda.len());
            for t in enumerate_tableaux(&lambda, &flag).map_err(|e| e.to_string())? {
                let pp = to_plane_partition(&t, h).map_err(|e| e.to_string())?;
                let rows_ok = pp.iter().all(|row| row.windows(2).all(|w| w[0] >= w[1]));
                let cols_ok = pp
                    .windows(2)
                    .all(|rows| rows[1].iter().zip(&rows[0]).all(|(lo, hi)| lo <= hi));
                let range_ok = pp.iter().flatten().all(|&v| v as usize <= h);
                check(rows_ok && cols_ok && range_ok, || {
                    format!("{t:?} maps to bad {pp:?}")
                })?;
                let back = from_plane_partition(&pp, h).map_err(|e| e.to_string())?;
                check(back == t, || format!("{t:?} round-trips to {back:?}"))?;
            }
        }
    }
    Ok(())
}

/// Every path system for `λ ⊆ (2,2)`, `h = 2`, both endpoint matchings.
pub fn tail_swap_involution() -> Result<(), String> {
    let outer: Partition = "(2,2)".parse().unwrap();
    let mut crossing = 0;
    for lambda in outer.subdiagrams().into_iter().filter(|l| !l.is_empty()) {
        let c = lgv_construction(&lambda, 2, Variant::Plain).map_err(|e| e.to_string())?;
        for sigma in [[0, 1], [1, 0]] {
            let ends: Vec<_> = sigma.iter().map(|&k| c.ends[k]).collect();
            let first = paths_between(&c.grid, c.starts[0], ends[0]).map_err(|e| e.to_string())?;
            let second = paths_between(&c.grid, c.starts[1], ends[1]).map_err(|e| e.to_string())?;
            for p in &first {
                for q in &second {
                    let system = PathSystem {
                        paths: vec![p.clone(), q.clone()],
                    };
                    let Some(swapped) = tail_swap(&system) else {
                        continue;
                    };
                    crossing += 1;
                    check(swapped.weight(&c.grid) == system.weight(&c.grid), || {
                        format!("tail swap changes the weight of\n{system}")
                    })?;
                    check(
                        swapped.paths[0].end() == ends[1] && swapped.paths[1].end() == ends[0],
                        || format!("tail swap keeps the matching of\n{system}"),
                    )?;
                    check(tail_swap(&swapped).as_ref() == Some(&system), || {
                        format!("tail swap is not an involution on\n{system}")
                    })?;
                }
            }
        }
        let nc = nc_path_systems(&c.grid, &c.starts, &c.ends).map_err(|e| e.to_string())?;
        check(nc.iter().all(|s| tail_swap(s).is_none()), || {
            format!("a noncrossing system for {lambda} was swapped")
        })?;
    }
    check(crossing > 0, || "no crossing systems were generated".into())
}

/// A reduced word of `v` built by peeling random right descents.
fn random_reduced_word(v: &Permutation, r: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v = v.clone();
    let mut peeled = Vec::new();
    while let Some(&d) = v.descents().choose(r) {
        peeled.push(d);
        v = v.times_simple(d);
    }
    peeled.reverse();
    peeled
}

pub fn braid_independence() -> Result<(), String> {
    let mut r = rng(4);
    let all = Permutation::all(5);
    for _ in 0..50 {
        let w = all.choose(&mut r).unwrap();
        let n = w.trimmed_len();
        let v = Permutation::longest(n).compose(w);
        let word = random_reduced_word(&v, &mut r);
        check(word_product(&word) == v, || {
            format!("{word:?} is not a word of {v}")
        })?;
        let p = schubert_poly_with_word(w, &word).map_err(|e| e.to_string())?;
        check(p == schubert_poly(w), || format!("{w} along {word:?} gives {p}"))?;
    }
    Ok(())
}

pub fn divided_difference_squares_to_zero() -> Result<(), String> {
    let mut r = rng(5);
    for _ in 0..200 {
        let f = random_poly(&mut r, 4, 0..=3);
        let i = r.gen_range(1..=3);
        let once = divided_difference(&f, i).map_err(|e| e.to_string())?;
        let twice = divided_difference(&once, i).map_err(|e| e.to_string())?;
        check(twice.is_zero(), || format!("d{i} d{i} ({f}) = {twice}"))?;
    }
    Ok(())
}

/// `𝔖_w` computed from `w0(n)` for an `n` larger than needed.
fn schubert_in(w: &Permutation, n: usize) -> Result<LaurentPoly, String> {
    let w = w.padded(n).map_err(|e| e.to_string())?;
    let exps: Vec<i32> = (0..n as i32).rev().collect();
    let mut f = LaurentPoly::monomial(Monomial::from_exponents(&exps));
    for i in reduced_word(&Permutation::longest(n).compose(&w)) {
        f = divided_difference(&f, i).map_err(|e| e.to_string())?;
    }
    Ok(f)
}

pub fn stability() -> Result<(), String> {
    for w in Permutation::all(4) {
        for extra in 1..=2 {
            let big = schubert_in(&w, 4 + extra)?;
            check(big == schubert_poly(&w), || {
                format!("{w} in S_{} gives {big}", 4 + extra)
            })?;
        }
    }
    Ok(())
}

pub fn dominant_iff_monomial() -> Result<(), String> {
    for w in Permutation::all(5) {
        let code: Vec<i32> = w.lehmer_code().iter().map(|&c| c as i32).collect();
        let is_code_monomial = schubert_poly(&w) == LaurentPoly::monomial(Monomial::from_exponents(&code));
        check(is_code_monomial == w.is_dominant(), || {
            format!(
                "{w}: dominant = {}, code monomial = {is_code_monomial}",
                w.is_dominant()
            )
        })?;
    }
    Ok(())
}

pub fn shift_by_one_fixed_point() -> Result<(), String> {
    let zero: BTreeMap<_, _> = [(1, LaurentPoly::zero())].into_iter().collect();
    for w in Permutation::all(4) {
        let lhs = schubert_poly(&w.shift(1))
            .substitute(&zero)
            .map_err(|e| e.to_string())?;
        let rhs = schubert_poly(&w).shift_vars(1);
        check(lhs == rhs, || format!("{w}: {lhs} vs {rhs}"))?;
    }
    Ok(())
}

pub fn extension_codes() -> Result<(), String> {
    for w in Permutation::all(5).into_iter().filter(Permutation::is_dominant) {
        let lambda = Partition::from_unsorted(w.lehmer_code());
        for k in 0..=2 {
            for l in 0..=2 {
                let ext = w.extend_dominant(k, l).map_err(|e| e.to_string())?;
                let shape = Partition::from_unsorted(ext.lehmer_code());
                check(ext.is_dominant(), || {
                    format!("{w} extended by ({k},{l}) is {ext}")
                })?;
                check(shape == lambda.staircase_extend(k, l), || {
                    format!("{w} extended by ({k},{l}) has shape {shape}")
                })?;
            }
        }
    }
    Ok(())
}

pub fn extensions_commute() -> Result<(), String> {
    let ext = |w: &Permutation, k, l| w.extend_dominant(k, l).map_err(|e| e.to_string());
    for w in Permutation::all(5).into_iter().filter(Permutation::is_dominant) {
        let top_left = ext(&ext(&w, 1, 0)?, 0, 1)?;
        let left_top = ext(&ext(&w, 0, 1)?, 1, 0)?;
        check(top_left == left_top, || format!("{w}: {top_left} vs {left_top}"))?;
        check(top_left == ext(&w, 1, 1)?, || {
            format!("{w}: one-step (1,1) differs")
        })?;
    }
    Ok(())
}

pub fn richardson_factors() -> Result<(), String> {
    let mut seen = 0;
    for w in Permutation::all(6).into_iter().filter(Permutation::is_richardson) {
        seen += 1;
        let f = richardson_factorization(&w).map_err(|e| e.to_string())?;
        check(f == schubert_poly(&w), || format!("{w}: product {f}"))?;
    }
    check(seen == 32, || {
        format!("expected 32 Richardson permutations in S_6, saw {seen}")
    })
}

pub fn one_flagged_paths() -> Result<(), String> {
    let outer: Partition = "(3,3,2)".parse().unwrap();
    for lambda in outer.subdiagrams() {
        let a = one_flagged_via_paths(&lambda);
        let b = h_flagged_schur(&lambda, 1);
        check(a == b, || format!("{lambda}: paths {a} vs tableaux {b}"))?;
    }
    Ok(())
}

pub fn dominant_implies_vexillary() -> Result<(), String> {
    for w in Permutation::all(6) {
        check(!w.is_dominant() || w.is_vexillary(), || {
            format!("{w} is dominant but not vexillary")
        })?;
    }
    Ok(())
}
