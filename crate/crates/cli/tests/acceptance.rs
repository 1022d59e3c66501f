//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! limit. Exits nonzero if any criterion fails.
//!
//! Set `SCHURKIT_STRETCH=1` to also run the `n = 8` maximum search.

#[path = "../../core/tests/common/properties.rs"]
mod properties;

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use schurkit_core::catalan::{catalan, catalan_hankel, q_catalan};
use schurkit_core::lattice::{lgv_construction, Variant};
use schurkit_core::perms::Permutation;
use schurkit_core::schubert::schubert_poly;
use schurkit_core::search::{known_maxima, max_search, SearchConfig, OVERRIDE_MAX_N};
use schurkit_core::shapes::Partition;
use schurkit_core::tableaux::h_flagged_schur;
use schurkit_core::verify::{self, matrix_entries, Deadline, VerifyReport};
use schurkit_core::{LaurentPoly, Monomial, PolyMatrix};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shape(s: &str) -> Partition {
    s.parse().expect("fixture shapes parse")
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("fixture polynomials parse")
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("fixture permutations parse")
}

fn passed(report: schurkit_core::Result<VerifyReport>) -> Outcome {
    let report = report.map_err(|e| e.to_string())?;
    match report.counterexample {
        None => Ok(format!("{} cases", report.cases)),
        Some(c) => Err(format!("{}: lhs {} rhs {}", c.case, c.lhs, c.rhs)),
    }
}

fn schur_example() -> Outcome {
    let listed = poly("x1^2*x2 + x1^2*x3 + x1*x2*x3 + x1*x2^2 + x2^2*x3");
    let expected = listed.to_string();
    ensure(
        expected == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3",
        || format!("unexpected canonical rendering {expected}"),
    )?;
    let out = Command::new(env!("CARGO_BIN_EXE_schurkit"))
        .args(["schur", "--shape", "(2,1)", "--h", "1"])
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(stdout == format!("{expected}\n"), || {
        format!("printed {stdout:?}")
    })?;
    ensure(poly(stdout.trim()) == listed, || "term set differs".into())?;
    Ok(stdout.trim().to_string())
}

fn worked_example_entries() -> Outcome {
    let lambda = shape("(2,1)");
    let expected = [
        ((1, 1), "(2,1)", 2, 4, "x2^2*x3^2*x4"),
        ((1, 2), "(2,2,1)", 1, 4, "x1^2*x2^2*x3^2*x4"),
        ((2, 1), "(3,2)", 2, 4, "x2^3*x3^3*x4^2"),
        ((2, 2), "(3,3,2)", 1, 4, "x1^3*x2^3*x3^3*x4^2"),
    ];
    let entries = matrix_entries(&lambda, 2, Variant::Plain).map_err(|e| e.to_string())?;
    ensure(entries.len() == 4, || format!("{} entries", entries.len()))?;
    for (e, ((i, j), diagram, first, last, denom)) in entries.iter().zip(expected) {
        let window_end = e.form.first_var as usize + e.form.diagram.len();
        ensure(
            (e.i, e.j) == (i, j)
                && e.form.diagram == shape(diagram)
                && e.form.first_var as usize == first
                && window_end == last
                && LaurentPoly::monomial(e.form.denominator.clone()) == poly(denom),
            || {
                format!(
                    "entry ({i},{j}): got s1_{}(x{}..x{window_end}) / {}",
                    e.form.diagram, e.form.first_var, e.form.denominator
                )
            },
        )?;
        ensure(e.form.evaluate() == e.value, || {
            format!("entry ({i},{j}) value differs")
        })?;
    }
    let c = lgv_construction(&lambda, 2, Variant::Plain).map_err(|e| e.to_string())?;
    ensure(
        LaurentPoly::monomial(c.prefactor.clone()) == poly("x1^3*x2^2*x3^2*x4"),
        || format!("prefactor {}", c.prefactor),
    )?;
    let det = c.evaluate().map_err(|e| e.to_string())?;
    ensure(det == h_flagged_schur(&lambda, 2), || {
        format!("determinant gives {det}")
    })?;
    Ok("4 entries and prefactor".into())
}

fn woo() -> Outcome {
    let summary = passed(verify::woo_sweep(6, Deadline::none()))?;
    let lhs = schubert_poly(&perm("(1432)")).principal_specialization();
    ensure(lhs == poly("x1 + 2*x1^2 + x1^3 + x1^4"), || {
        format!("n = 3 gives {lhs}")
    })?;
    let q = LaurentPoly::monomial(Monomial::var(1));
    ensure(lhs == &q * &q_catalan(3), || "n = 3 is not q Cat_q(3)".into())?;
    Ok(summary)
}

fn hankel() -> Outcome {
    let summary = passed(verify::catalan_hankel_sweep(5, 3, Deadline::none()))?;
    let m = PolyMatrix::from_fn(2, 2, |i, j| LaurentPoly::constant(catalan(3 + i + j)));
    let det = m.determinant().map_err(|e| e.to_string())?;
    ensure(det == LaurentPoly::constant(14), || {
        format!("det[[5,14],[14,42]] = {det}")
    })?;
    ensure(catalan_hankel(3, 2) == BigInt::from(14), || {
        "Hankel (3,2) is not 14".into()
    })?;
    let value = schubert_poly(&perm("(12543)")).eval_at_ones();
    ensure(value == BigInt::from(14), || {
        format!("(12543) evaluates to {value}")
    })?;
    Ok(summary)
}

fn wachs() -> Outcome {
    let report = verify::wachs_sweep(6, Deadline::none()).map_err(|e| e.to_string())?;
    if let Some(c) = &report.counterexample {
        return Err(format!(
            "flag-convention counterexample: {}: lhs {} rhs {}",
            c.case, c.lhs, c.rhs
        ));
    }
    ensure(report.cases == 513, || {
        format!("{} vexillary permutations, expected 513", report.cases)
    })?;
    Ok(format!("{} cases", report.cases))
}

fn search_row(n: usize, expected: u64, config: &SearchConfig) -> Result<(), String> {
    let report = max_search(n, config).map_err(|e| e.to_string())?;
    ensure(report.max_value == expected, || {
        format!("n = {n}: max {} expected {expected}", report.max_value)
    })?;
    let found: BTreeSet<Permutation> = report.argmax.iter().cloned().collect();
    let listed: BTreeSet<Permutation> = known_maxima(n).into_iter().map(|(w, _)| w).collect();
    let exact = matches!(n, 3 | 4 | 5 | 7);
    ensure(
        if exact {
            found == listed
        } else {
            found.is_superset(&listed)
        },
        || {
            let found: Vec<String> = found.iter().map(|w| w.to_string()).collect();
            format!("n = {n}: argmax {}", found.join(" "))
        },
    )?;
    ensure(report.all_argmax_richardson, || {
        format!("n = {n}: non-Richardson argmax")
    })
}

fn maxima() -> Outcome {
    let config = SearchConfig::default();
    for (n, max) in [(2, 1), (3, 2), (4, 5), (5, 14), (6, 84), (7, 660)] {
        search_row(n, max, &config)?;
    }
    Ok("n = 2..7".into())
}

fn maxima_stretch() -> Outcome {
    let config = SearchConfig {
        max_n: OVERRIDE_MAX_N,
        ..Default::default()
    };
    search_row(8, 9438, &config)?;
    Ok("n = 8".into())
}

fn property_suites() -> Outcome {
    for (name, check) in properties::ALL {
        check().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("{} properties", properties::ALL.len()))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Duration,
    run: Box<dyn Fn() -> Outcome>,
}

fn criterion(
    id: &'static str,
    name: &'static str,
    secs: u64,
    run: impl Fn() -> Outcome + 'static,
) -> Criterion {
    Criterion {
        id,
        name,
        limit: Duration::from_secs(secs),
        run: Box::new(run),
    }
}

fn main() -> ExitCode {
    let mut criteria = vec![
        criterion(
            "1",
            "schur (2,1), h = 1 prints the canonical polynomial",
            1,
            schur_example,
        ),
        criterion(
            "2",
            "tableaux = Jacobi-Trudi, shapes in (4,4,4), flags <= 6",
            60,
            || passed(verify::jacobi_trudi_sweep(&shape("(4,4,4)"), 6, Deadline::none())),
        ),
        criterion(
            "3",
            "noncrossing sum = path determinant, shapes in (3,2,2), h in {2,3}",
            60,
            || passed(verify::lgv_sweep(&shape("(3,2,2)"), &[2, 3], Deadline::none())),
        ),
        criterion(
            "4",
            "both determinant variants = h-flagged Schur, shapes in (4,3,2), h <= 3",
            120,
            || {
                let plain = passed(verify::flagged_det_sweep(
                    &shape("(4,3,2)"),
                    3,
                    Variant::Plain,
                    Deadline::none(),
                ))?;
                let stair = passed(verify::flagged_det_sweep(
                    &shape("(4,3,2)"),
                    3,
                    Variant::Staircase,
                    Deadline::none(),
                ))?;
                Ok(format!("plain {plain}, staircase {stair}"))
            },
        ),
        criterion(
            "5",
            "entries of the (2,1), h = 2 matrix",
            10,
            worked_example_entries,
        ),
        criterion("6", "Schubert = flagged Schur for vexillary w in S_6", 300, wachs),
        criterion(
            "7",
            "Schubert determinant for dominant w in S_4, h <= 2",
            120,
            || passed(verify::mainschubert_sweep(4, 2, Deadline::none())),
        ),
        criterion("8", "principal specialization of 1 x w0(n), n <= 6", 30, woo),
        criterion("9", "Catalan Hankel determinants, n <= 5, h <= 3", 120, hankel),
        criterion("10", "maximal values at ones, n = 2..7", 600, maxima),
        criterion("11", "seeded property suites", 300, property_suites),
    ];
    if std::env::var_os("SCHURKIT_STRETCH").is_some() {
        criteria.push(criterion(
            "10+",
            "maximal value at ones, n = 8",
            3600,
            maxima_stretch,
        ));
    }

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let timing = format!("{:.2}s / {}s", elapsed.as_secs_f64(), c.limit.as_secs());
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.limit => format!("PASS [{}] {} ({detail}; {timing})", c.id, c.name),
            Ok(detail) => format!("FAIL [{}] {} ({detail}; over time {timing})", c.id, c.name),
            Err(why) => format!("FAIL [{}] {} ({timing}): {why}", c.id, c.name),
        };
        if verdict.starts_with("FAIL") {
            failures += 1;
        }
        println!("{verdict}");
    }
    if std::env::var_os("SCHURKIT_STRETCH").is_none() {
        println!("SKIP [10+] maximal value at ones, n = 8 (set SCHURKIT_STRETCH=1)");
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
