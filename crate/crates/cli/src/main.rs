//! `schurkit`: compute flagged Schur and Schubert polynomials and check the
//! determinantal identities between them.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 bad usage, 3 over budget.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use schurkit_core::catalan::{catalan, catalan_hankel, q_catalan};
use schurkit_core::lattice::{lgv_construction, nc_path_systems, Variant};
use schurkit_core::perms::Permutation;
use schurkit_core::schubert::{schubert_poly, DEFAULT_MAX_N};
use schurkit_core::search::{max_search, SearchConfig, SearchReport, LONG_RUN_MAX_N, OVERRIDE_MAX_N};
use schurkit_core::shapes::{Flag, Partition};
use schurkit_core::tableaux::{flagged_schur, h_flagged_schur, jacobi_trudi};
use schurkit_core::verify::{self, Deadline, VerifyReport};
use schurkit_core::{Error, LaurentPoly};

const SCHEMA: u32 = 1;
const BUDGET_ENV: &str = "SCHURKIT_BUDGET_SECS";

#[derive(Parser)]
#[command(
    name = "schurkit",
    version,
    about = "Flagged Schur and Schubert polynomials via lattice paths"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Raise the permutation size limit from 7 to 8.
    #[arg(long, global = true)]
    budget_override: bool,

    /// Allow permutation sizes up to 10 (hours of compute and tens of GB for 10).
    #[arg(long, global = true)]
    long_run: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Flagged Schur polynomial of a shape.
    Schur(SchurArgs),
    /// Schubert polynomial of a permutation.
    Schubert(SchubertArgs),
    /// Check an identity over a family of inputs.
    Verify {
        #[command(subcommand)]
        identity: Identity,
    },
    /// Maximize the Schubert value at all ones over S_n.
    Search(SearchArgs),
    /// Catalan numbers, q-Catalan polynomials and Hankel determinants.
    Catalan(CatalanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tableaux,
    JacobiTrudi,
    Lgv,
    LgvStaircase,
}

#[derive(Args)]
struct SchurArgs {
    #[arg(long)]
    shape: String,
    /// Use the flag (h+1, ..., h+m).
    #[arg(long, conflicts_with = "flags", required_unless_present = "flags")]
    h: Option<usize>,
    /// Explicit flag, e.g. "(2,3)".
    #[arg(long)]
    flags: Option<String>,
    #[arg(long, value_enum, default_value_t = Method::Tableaux)]
    method: Method,
}

#[derive(Args)]
struct SchubertArgs {
    /// One-line notation, "(1,4,3,2)" or "(1432)".
    #[arg(long)]
    perm: String,
    /// Print the value at x = (1, 1, ...) instead of the polynomial.
    #[arg(long)]
    at_ones: bool,
    /// Substitute x_i -> q^(i-1).
    #[arg(long, conflicts_with = "at_ones")]
    principal: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Include every permutation's value in the report.
    #[arg(long)]
    all_values: bool,
}

#[derive(Args)]
struct CatalanArgs {
    #[arg(long)]
    n: usize,
    /// Print the q-Catalan polynomial.
    #[arg(long)]
    q: bool,
    /// Print the h x h Hankel determinant starting at Cat(n).
    #[arg(long)]
    hankel: Option<usize>,
}

#[derive(Subcommand)]
enum Identity {
    /// Tableau sums against flagged Jacobi-Trudi determinants.
    JacobiTrudi {
        #[arg(long, default_value = "(4,4,4)")]
        max_shape: String,
        #[arg(long, default_value_t = 6)]
        max_flag: usize,
    },
    /// Noncrossing path sums against path determinants.
    Lgv {
        #[arg(long, default_value = "(3,2,2)")]
        max_shape: String,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        h: Vec<usize>,
        /// Print the noncrossing systems for one shape (with a single --h).
        #[arg(long)]
        trace: Option<String>,
    },
    /// Path-determinant formula with extended diagrams.
    FlaggedDet(FlaggedDetArgs),
    /// Path-determinant formula with staircase-extended diagrams.
    FlaggedDetStaircase(FlaggedDetArgs),
    /// Schubert polynomials of vexillary permutations as flagged Schur polynomials.
    Wachs {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Schubert polynomials of shifted dominant permutations as determinants.
    Mainschubert {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_h: usize,
    },
    /// Principal specialization of 1 x w0(n) against q-Catalan numbers.
    Woo {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Shifted longest elements at all ones against Catalan-Hankel determinants.
    CatalanHankel {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_h: usize,
    },
}

#[derive(Args)]
struct FlaggedDetArgs {
    /// Check one shape instead of all subdiagrams of --max-shape.
    #[arg(long, requires = "h")]
    shape: Option<String>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long, default_value = "(4,3,2)")]
    max_shape: String,
    #[arg(long, default_value_t = 3)]
    max_h: usize,
    /// Print each matrix entry as a 1-flagged Schur polynomial over a monomial.
    #[arg(long)]
    show_matrix: bool,
}

/// What a command produced: text for stdout, a JSON body, and whether an
/// identity failed.
struct Outcome {
    text: String,
    json: Value,
    failed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            failed: false,
        }
    }
}

struct Context {
    max_n: usize,
    threads: usize,
    deadline: Deadline,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    let deadline = match std::env::var(BUDGET_ENV) {
        Ok(s) => match s.trim().parse::<u64>() {
            Ok(secs) => Deadline::after(Duration::from_secs(secs)),
            Err(_) => {
                eprintln!("error: {BUDGET_ENV} must be a whole number of seconds, got '{s}'");
                return ExitCode::from(2);
            }
        },
        Err(_) => Deadline::none(),
    };
    let ctx = Context {
        max_n: if cli.long_run {
            LONG_RUN_MAX_N
        } else if cli.budget_override {
            OVERRIDE_MAX_N
        } else {
            DEFAULT_MAX_N
        },
        threads: cli.threads,
        deadline,
    };
    match run(&cli.command, &ctx) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => {
                    let mut body = out.json;
                    body["schema"] = json!(SCHEMA);
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&body).expect("JSON values serialize")
                    );
                }
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget(_) => 3,
                Error::Invariant(_) => 1,
                _ => 2,
            })
        }
    }
}

fn run(command: &Command, ctx: &Context) -> Result<Outcome, Error> {
    match command {
        Command::Schur(args) => schur(args),
        Command::Schubert(args) => schubert(args, ctx),
        Command::Verify { identity } => verify_identity(identity, ctx),
        Command::Search(args) => search(args, ctx),
        Command::Catalan(args) => catalan_cmd(args),
    }
}

#[derive(Serialize)]
struct Term {
    exponents: Vec<i32>,
    coefficient: String,
}

fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Term> = p
        .terms()
        .map(|(m, c)| Term {
            exponents: m.exponents().to_vec(),
            coefficient: c.to_string(),
        })
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

fn schur(args: &SchurArgs) -> Result<Outcome, Error> {
    let shape: Partition = args.shape.parse()?;
    let flag = match (&args.flags, args.h) {
        (Some(f), _) => f.parse::<Flag>()?,
        (None, Some(h)) => Flag::h_flag(h, shape.len()),
        (None, None) => unreachable!("clap requires one of --h and --flags"),
    };
    flag.check_against(&shape)?;
    let p = match args.method {
        Method::Tableaux => flagged_schur(&shape, &flag)?,
        Method::JacobiTrudi => jacobi_trudi(&shape, &flag)?,
        Method::Lgv | Method::LgvStaircase => {
            let h = h_of_flag(&flag)?;
            if shape.is_empty() {
                h_flagged_schur(&shape, h)
            } else {
                let variant = if args.method == Method::Lgv {
                    Variant::Plain
                } else {
                    Variant::Staircase
                };
                schurkit_core::lattice::h_flagged_via_lgv(&shape, h, variant)?
            }
        }
    };
    Ok(Outcome::ok(
        format!("{p}\n"),
        json!({ "shape": shape, "flag": flag.bounds(), "polynomial": poly_json(&p) }),
    ))
}

/// The `h` of a flag `(h+1, ..., h+m)`; path methods need this form.
fn h_of_flag(flag: &Flag) -> Result<usize, Error> {
    let b = flag.bounds();
    match b.first() {
        None => Ok(1),
        Some(&first) if first >= 2 && b.iter().enumerate().all(|(i, &v)| v == first + i) => Ok(first - 1),
        _ => Err(Error::Domain(format!(
            "path methods need a flag (h+1, ..., h+m) with h >= 1, got {flag}"
        ))),
    }
}

fn check_perm_size(n: usize, ctx: &Context) -> Result<(), Error> {
    if n > ctx.max_n {
        return Err(Error::Budget(format!(
            "permutations of size {n} exceed the limit {} (see --budget-override, --long-run)",
            ctx.max_n
        )));
    }
    Ok(())
}

fn schubert(args: &SchubertArgs, ctx: &Context) -> Result<Outcome, Error> {
    let w: Permutation = args.perm.parse()?;
    check_perm_size(w.trimmed_len(), ctx)?;
    let p = schubert_poly(&w);
    if args.at_ones {
        let v = p.eval_at_ones();
        return Ok(Outcome::ok(
            format!("{v}\n"),
            json!({ "permutation": w, "value_at_ones": v.to_string() }),
        ));
    }
    if args.principal {
        let q = p.principal_specialization();
        return Ok(Outcome::ok(
            format!("{}\n", q.display_with(|_| "q".to_string())),
            json!({ "permutation": w, "principal_specialization": poly_json(&q) }),
        ));
    }
    Ok(Outcome::ok(
        format!("{p}\n"),
        json!({ "permutation": w, "polynomial": poly_json(&p) }),
    ))
}

fn report_outcome(report: VerifyReport, extra_text: String) -> Outcome {
    // elapsed time varies between runs, so it goes to stderr in text mode
    let cases = match report.cases {
        1 => "1 case".to_string(),
        n => format!("{n} cases"),
    };
    eprintln!("{}: {cases} in {} ms", report.identity, report.elapsed_ms);
    let mut text = extra_text;
    match &report.counterexample {
        None => text.push_str(&format!("PASS {} ({cases})\n", report.identity)),
        Some(c) => text.push_str(&format!(
            "FAIL {} ({cases})\ncase: {}\nlhs: {}\nrhs: {}\n",
            report.identity, c.case, c.lhs, c.rhs
        )),
    }
    Outcome {
        text,
        failed: !report.passed(),
        json: json!({
            "identity": report.identity,
            "passed": report.passed(),
            "cases": report.cases,
            "elapsed_ms": report.elapsed_ms,
            "counterexample": report.counterexample,
        }),
    }
}

fn verify_identity(identity: &Identity, ctx: &Context) -> Result<Outcome, Error> {
    let d = ctx.deadline;
    match identity {
        Identity::JacobiTrudi { max_shape, max_flag } => {
            let shape: Partition = max_shape.parse()?;
            Ok(report_outcome(
                verify::jacobi_trudi_sweep(&shape, *max_flag, d)?,
                String::new(),
            ))
        }
        Identity::Lgv { max_shape, h, trace } => {
            if h.is_empty() || h.contains(&0) {
                return Err(Error::Domain("--h needs values of at least 1".into()));
            }
            let mut text = String::new();
            if let Some(shape) = trace {
                let [h] = h[..] else {
                    return Err(Error::Domain("--trace takes a single --h".into()));
                };
                let c = lgv_construction(&shape.parse()?, h, Variant::Plain)?;
                for (k, s) in nc_path_systems(&c.grid, &c.starts, &c.ends)?.iter().enumerate() {
                    text.push_str(&format!("system {}\n{s}\n", k + 1));
                }
            }
            let shape: Partition = max_shape.parse()?;
            Ok(report_outcome(verify::lgv_sweep(&shape, h, d)?, text))
        }
        Identity::FlaggedDet(args) => flagged_det(args, Variant::Plain, d),
        Identity::FlaggedDetStaircase(args) => flagged_det(args, Variant::Staircase, d),
        Identity::Wachs { n } => {
            check_perm_size(*n, ctx)?;
            Ok(report_outcome(verify::wachs_sweep(*n, d)?, String::new()))
        }
        Identity::Mainschubert { n, max_h } => {
            // the largest extended permutation has n + 2h - 1 entries
            check_perm_size(n + 2 * max_h.saturating_sub(1) + 1, ctx)?;
            Ok(report_outcome(
                verify::mainschubert_sweep(*n, *max_h, d)?,
                String::new(),
            ))
        }
        Identity::Woo { n } => {
            check_perm_size(n + 1, ctx)?;
            Ok(report_outcome(verify::woo_sweep(*n, d)?, String::new()))
        }
        Identity::CatalanHankel { n, max_h } => {
            check_perm_size(n + max_h, ctx)?;
            Ok(report_outcome(
                verify::catalan_hankel_sweep(*n, *max_h, d)?,
                String::new(),
            ))
        }
    }
}

fn flagged_det(args: &FlaggedDetArgs, variant: Variant, d: Deadline) -> Result<Outcome, Error> {
    let (max_shape, max_h, single) = match (&args.shape, args.h) {
        (Some(s), Some(h)) => (s.parse::<Partition>()?, h, true),
        _ => (args.max_shape.parse()?, args.max_h, false),
    };
    let mut text = String::new();
    if args.show_matrix {
        if !single {
            return Err(Error::Domain("--show-matrix needs --shape and --h".into()));
        }
        for e in verify::matrix_entries(&max_shape, max_h, variant)? {
            text.push_str(&format!(
                "({},{}): s1_{}(x{},...,x{}) / {}  =  {}\n",
                e.i,
                e.j,
                e.form.diagram,
                e.form.first_var,
                e.form.first_var as usize + e.form.diagram.len(),
                e.form.denominator,
                e.value
            ));
        }
    }
    let report = if single {
        verify::flagged_det_cases(vec![(max_shape, max_h)], variant, d)?
    } else {
        verify::flagged_det_sweep(&max_shape, max_h, variant, d)?
    };
    Ok(report_outcome(report, text))
}

fn search(args: &SearchArgs, ctx: &Context) -> Result<Outcome, Error> {
    let config = SearchConfig {
        threads: ctx.threads,
        max_n: ctx.max_n,
        keep_values: args.all_values,
    };
    let report = max_search(args.n, &config)?;
    eprintln!("search S_{}: {} ms", report.n, report.runtime_ms);
    Ok(Outcome::ok(
        search_text(&report),
        serde_json::to_value(&report).expect("report serializes"),
    ))
}

fn search_text(r: &SearchReport) -> String {
    let mut out = format!(
        "n = {}\nmax value = {}\nargmax ({}):\n",
        r.n,
        r.max_value,
        r.argmax.len()
    );
    for w in &r.argmax {
        let richardson = if w.is_richardson() {
            "Richardson"
        } else {
            "not Richardson"
        };
        out.push_str(&format!(
            "  {}  {richardson}\n",
            w.compact().unwrap_or_else(|| w.to_string())
        ));
    }
    out.push_str(&format!("all argmax Richardson: {}\n", r.all_argmax_richardson));
    if let Some(values) = &r.values {
        out.push_str("values:\n");
        for (w, v) in values {
            out.push_str(&format!("  {w} {v}\n"));
        }
    }
    out
}

fn catalan_cmd(args: &CatalanArgs) -> Result<Outcome, Error> {
    if args.n == 0 {
        return Err(Error::Domain("--n must be at least 1".into()));
    }
    let n = args.n;
    if let Some(h) = args.hankel {
        let v = catalan_hankel(n, h);
        return Ok(Outcome::ok(
            format!("{v}\n"),
            json!({ "n": n, "h": h, "hankel": v.to_string() }),
        ));
    }
    if args.q {
        let p = q_catalan(n);
        return Ok(Outcome::ok(
            format!("{}\n", p.display_with(|_| "q".to_string())),
            json!({ "n": n, "q_catalan": poly_json(&p) }),
        ));
    }
    let c = catalan(n);
    Ok(Outcome::ok(
        format!("{c}\n"),
        json!({ "n": n, "catalan": c.to_string() }),
    ))
}
