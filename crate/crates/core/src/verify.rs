//! Exhaustive checks of the determinantal and Schubert identities over
//! bounded families of inputs. Each sweep stops at the first mismatch and
//! returns it as a counterexample that can be replayed through the library.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalan::{catalan_hankel, q_catalan, woo_check};
use crate::error::{Error, Result};
use crate::lattice::{
    entry_as_one_flagged, h_flagged_via_lgv, lgv_construction, lgv_determinant, z_nc, EntryForm, Variant,
    BRUTE_FORCE_POINT_LIMIT,
};
use crate::perms::Permutation;
use crate::poly::LaurentPoly;
use crate::schubert::{mainschubert_determinant, schubert_poly, wachs_check};
use crate::shapes::{Flag, Partition};
use crate::tableaux::{flagged_schur, h_flagged_schur, jacobi_trudi};

/// Wall-clock limit shared by the cases of one sweep.
#[derive(Clone, Copy, Debug, Default)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn after(limit: Duration) -> Self {
        Deadline(Some(Instant::now() + limit))
    }

    pub fn check(&self) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() > t => Err(Error::Budget("verification time budget exhausted".into())),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub identity: String,
    pub cases: usize,
    pub elapsed_ms: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn compare(case: String, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample {
        case,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Runs `check` on every case in parallel; the reported counterexample is
/// the first one in case order.
fn sweep<C, F>(identity: &str, cases: Vec<C>, deadline: Deadline, check: F) -> Result<VerifyReport>
where
    C: Sync,
    F: Fn(&C) -> Result<Option<Counterexample>> + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Result<Option<Counterexample>>> = cases
        .par_iter()
        .map(|c| {
            deadline.check()?;
            check(c)
        })
        .collect();
    let mut counterexample = None;
    for outcome in outcomes {
        if let Some(c) = outcome? {
            counterexample.get_or_insert(c);
        }
    }
    Ok(VerifyReport {
        identity: identity.to_string(),
        cases: cases.len(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        counterexample,
    })
}

/// Flagged Schur polynomials by tableaux against the flagged Jacobi–Trudi
/// determinant, for every `λ ⊆ max_shape` and every flag with entries at
/// most `max_flag`.
pub fn jacobi_trudi_sweep(
    max_shape: &Partition,
    max_flag: usize,
    deadline: Deadline,
) -> Result<VerifyReport> {
    let cases: Vec<(Partition, Flag)> = max_shape
        .subdiagrams()
        .into_iter()
        .flat_map(|l| {
            Flag::all(l.len(), max_flag)
                .into_iter()
                .map(move |b| (l.clone(), b))
        })
        .collect();
    sweep("jacobi-trudi", cases, deadline, |(l, b)| {
        Ok(compare(
            format!("shape {l}, flag {b}"),
            &flagged_schur(l, b)?,
            &jacobi_trudi(l, b)?,
        ))
    })
}

fn nonempty_subdiagrams(max_shape: &Partition) -> Vec<Partition> {
    max_shape
        .subdiagrams()
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect()
}

/// Brute-force noncrossing sums against the path determinant, using the
/// endpoints of the plain construction (and of the staircase one whenever
/// its grid is small enough to enumerate).
pub fn lgv_sweep(max_shape: &Partition, hs: &[usize], deadline: Deadline) -> Result<VerifyReport> {
    let mut cases = Vec::new();
    for l in nonempty_subdiagrams(max_shape) {
        for &h in hs {
            for v in [Variant::Plain, Variant::Staircase] {
                let c = lgv_construction(&l, h, v)?;
                if v == Variant::Plain || c.grid.point_count() <= BRUTE_FORCE_POINT_LIMIT {
                    cases.push((l.clone(), h, v));
                }
            }
        }
    }
    sweep("lgv", cases, deadline, |(l, h, v)| {
        let c = lgv_construction(l, *h, *v)?;
        Ok(compare(
            format!("shape {l}, h = {h}, {v:?} endpoints"),
            &z_nc(&c.grid, &c.starts, &c.ends)?,
            &lgv_determinant(&c.grid, &c.starts, &c.ends)?,
        ))
    })
}

/// The path-determinant formula against tableaux and Jacobi–Trudi, with
/// every matrix entry checked against its 1-flagged closed form. The
/// staircase variant must also be free of variables past `x_{h+m}`.
pub fn flagged_det_sweep(
    max_shape: &Partition,
    max_h: usize,
    variant: Variant,
    deadline: Deadline,
) -> Result<VerifyReport> {
    let cases: Vec<(Partition, usize)> = nonempty_subdiagrams(max_shape)
        .into_iter()
        .flat_map(|l| (1..=max_h).map(move |h| (l.clone(), h)))
        .collect();
    flagged_det_cases(cases, variant, deadline)
}

/// [`flagged_det_sweep`] on an explicit list of `(shape, h)` pairs.
pub fn flagged_det_cases(
    cases: Vec<(Partition, usize)>,
    variant: Variant,
    deadline: Deadline,
) -> Result<VerifyReport> {
    if let Some((l, h)) = cases.iter().find(|(l, h)| l.is_empty() || *h == 0) {
        return Err(Error::Domain(format!(
            "need a nonempty shape and h >= 1, got {l} and {h}"
        )));
    }
    let name = match variant {
        Variant::Plain => "flagged-det",
        Variant::Staircase => "flagged-det-staircase",
    };
    sweep(name, cases, deadline, |(l, h)| {
        let h = *h;
        let case = format!("shape {l}, h = {h}");
        let via_paths = h_flagged_via_lgv(l, h, variant)?;
        let by_tableaux = h_flagged_schur(l, h);
        if let Some(c) = compare(case.clone(), &via_paths, &by_tableaux) {
            return Ok(Some(c));
        }
        let jt = jacobi_trudi(l, &Flag::h_flag(h, l.len()))?;
        if let Some(c) = compare(format!("{case}, Jacobi–Trudi"), &jt, &by_tableaux) {
            return Ok(Some(c));
        }
        if variant == Variant::Staircase && via_paths.max_var() as usize > h + l.len() {
            return Ok(Some(Counterexample {
                case: format!("{case}, variables beyond x{}", h + l.len()),
                lhs: via_paths.to_string(),
                rhs: by_tableaux.to_string(),
            }));
        }
        let matrix = lgv_construction(l, h, variant)?.matrix()?;
        for i in 1..=h {
            for j in 1..=h {
                let form = entry_as_one_flagged(l, h, i, j, variant)?;
                if let Some(c) = compare(
                    format!("{case}, entry ({i},{j})"),
                    &form.evaluate(),
                    matrix.get(i - 1, j - 1),
                ) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    })
}

/// One matrix entry with its closed form, for display.
#[derive(Clone, Debug)]
pub struct MatrixEntry {
    pub i: usize,
    pub j: usize,
    pub form: EntryForm,
    pub value: LaurentPoly,
}

pub fn matrix_entries(lambda: &Partition, h: usize, variant: Variant) -> Result<Vec<MatrixEntry>> {
    let matrix = lgv_construction(lambda, h, variant)?.matrix()?;
    let mut out = Vec::new();
    for i in 1..=h {
        for j in 1..=h {
            out.push(MatrixEntry {
                i,
                j,
                form: entry_as_one_flagged(lambda, h, i, j, variant)?,
                value: matrix.get(i - 1, j - 1).clone(),
            });
        }
    }
    Ok(out)
}

/// Schubert polynomials of all vexillary `w ∈ S_n` against flagged Schur
/// polynomials of their shape and flag.
pub fn wachs_sweep(n: usize, deadline: Deadline) -> Result<VerifyReport> {
    let cases: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(Permutation::is_vexillary)
        .collect();
    sweep("wachs", cases, deadline, |w| {
        if wachs_check(w)? {
            return Ok(None);
        }
        let (shape, flag) = w.vexillary_shape_and_flag()?;
        Ok(compare(
            format!("w = {w}, shape {shape}, flag {flag}"),
            &schubert_poly(w),
            &flagged_schur(&shape, &flag)?,
        ))
    })
}

/// `𝔖_{1^h × w}` against its determinant for dominant `w ∈ S_n`, `h ≤ max_h`.
pub fn mainschubert_sweep(n: usize, max_h: usize, deadline: Deadline) -> Result<VerifyReport> {
    let cases: Vec<(Permutation, usize)> = Permutation::all(n)
        .into_iter()
        .filter(Permutation::is_dominant)
        .flat_map(|w| (1..=max_h).map(move |h| (w.clone(), h)))
        .collect();
    sweep("mainschubert", cases, deadline, |(w, h)| {
        Ok(compare(
            format!("w = {w}, h = {h}"),
            &mainschubert_determinant(w, *h)?,
            &schubert_poly(&w.shift(*h)),
        ))
    })
}

/// Principal specialization of `𝔖_{1 × w0(n)}` for `n = 1..=max_n`.
pub fn woo_sweep(max_n: usize, deadline: Deadline) -> Result<VerifyReport> {
    let cases: Vec<usize> = (1..=max_n).collect();
    sweep("woo", cases, deadline, |&n| {
        if woo_check(n, max_n)? {
            return Ok(None);
        }
        let lhs = schubert_poly(&Permutation::longest(n).shift(1)).principal_specialization();
        Ok(compare(format!("n = {n}"), &lhs, &q_catalan(n)))
    })
}

/// `𝔖_{1^h × w0(n)}(1, ..., 1)` against Catalan–Hankel determinants.
pub fn catalan_hankel_sweep(max_n: usize, max_h: usize, deadline: Deadline) -> Result<VerifyReport> {
    let cases: Vec<(usize, usize)> = (1..=max_n)
        .flat_map(|n| (1..=max_h).map(move |h| (n, h)))
        .collect();
    sweep("catalan-hankel", cases, deadline, |&(n, h)| {
        let value = schubert_poly(&Permutation::longest(n).shift(h)).eval_at_ones();
        Ok(compare(
            format!("n = {n}, h = {h}"),
            &LaurentPoly::constant(value),
            &LaurentPoly::constant(catalan_hankel(n, h)),
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_sweeps_pass() {
        let d = Deadline::none();
        assert!(jacobi_trudi_sweep(&part("(2,2)"), 4, d).unwrap().passed());
        assert!(lgv_sweep(&part("(2,1)"), &[2], d).unwrap().passed());
        assert!(flagged_det_sweep(&part("(2,1)"), 2, Variant::Plain, d)
            .unwrap()
            .passed());
        assert!(flagged_det_sweep(&part("(2,1)"), 2, Variant::Staircase, d)
            .unwrap()
            .passed());
        assert!(wachs_sweep(4, d).unwrap().passed());
        assert!(mainschubert_sweep(3, 2, d).unwrap().passed());
        assert!(woo_sweep(4, d).unwrap().passed());
        assert!(catalan_hankel_sweep(3, 2, d).unwrap().passed());
    }

    #[test]
    fn case_counts() {
        let r = jacobi_trudi_sweep(&part("(1)"), 2, Deadline::none()).unwrap();
        // shapes () and (1); flags (), (1), (2)
        assert_eq!(r.cases, 3);
    }

    #[test]
    fn expired_deadline_is_a_budget_error() {
        let d = Deadline::after(Duration::ZERO);
        std::thread::sleep(Duration::from_millis(2));
        assert!(matches!(woo_sweep(3, d), Err(Error::Budget(_))));
    }

    #[test]
    fn worked_example_entries() {
        let entries = matrix_entries(&part("(2,1)"), 2, Variant::Plain).unwrap();
        let diagrams: Vec<String> = entries.iter().map(|e| e.form.diagram.to_string()).collect();
        assert_eq!(diagrams, ["(2,1)", "(2,2,1)", "(3,2)", "(3,3,2)"]);
        for e in &entries {
            assert_eq!(e.form.evaluate(), e.value);
        }
    }
}
