//! Exhaustive search for the permutations maximizing `𝔖_w(1, ..., 1)`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perms::Permutation;
use crate::schubert::{all_schubert_values_at_one, DEFAULT_MAX_N};

/// Largest `n` reachable with the budget override.
pub const OVERRIDE_MAX_N: usize = 8;
/// Largest `n` reachable in long-run mode.
pub const LONG_RUN_MAX_N: usize = 10;

/// Known maxima: `(n, representative, value)`. Several rows per `n` list
/// tied representatives.
pub const KNOWN_MAXIMA: &[(usize, &str, u64)] = &[
    (2, "(12)", 1),
    (3, "(132)", 2),
    (4, "(1432)", 5),
    (5, "(15432)", 14),
    (5, "(12543)", 14),
    (5, "(21543)", 14),
    (6, "(126543)", 84),
    (6, "(216543)", 84),
    (7, "(1327654)", 660),
    (8, "(13287654)", 9438),
    (9, "(132987654)", 163592),
    (10, "(1,4,3,2,10,9,8,7,6,5)", 4424420),
];

/// Known maxima for one `n`, with their representatives.
pub fn known_maxima(n: usize) -> Vec<(Permutation, u64)> {
    KNOWN_MAXIMA
        .iter()
        .filter(|row| row.0 == n)
        .map(|&(_, w, v)| (w.parse().expect("fixture permutations parse"), v))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub threads: usize,
    pub max_n: usize,
    pub keep_values: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 0,
            max_n: DEFAULT_MAX_N,
            keep_values: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub max_value: u64,
    /// Sorted lexicographically.
    pub argmax: Vec<Permutation>,
    pub all_argmax_richardson: bool,
    pub runtime_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<BTreeMap<String, u64>>,
}

/// Max and sorted argmax of one slice of the value table.
fn partial_max(entries: &[(&Permutation, &BigInt)]) -> (BigInt, Vec<Permutation>) {
    let mut best = BigInt::from(0);
    let mut arg = Vec::new();
    for &(w, v) in entries {
        if *v > best {
            best = v.clone();
            arg.clear();
        }
        if *v == best {
            arg.push(w.clone());
        }
    }
    (best, arg)
}

fn merge(a: (BigInt, Vec<Permutation>), b: (BigInt, Vec<Permutation>)) -> (BigInt, Vec<Permutation>) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            let mut arg = a.1;
            arg.extend(b.1);
            arg.sort();
            (a.0, arg)
        }
    }
}

/// Exact maximum of `𝔖_w(1, ..., 1)` over `S_n` with the full tie set.
/// The report does not depend on the thread count except for its runtime.
pub fn max_search(n: usize, config: &SearchConfig) -> Result<SearchReport> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n > config.max_n {
        return Err(Error::Budget(format!(
            "searching S_{n} exceeds the configured limit n <= {}",
            config.max_n
        )));
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::Budget(format!("cannot start worker threads: {e}")))?;
    let (values, (max, argmax)) = pool.install(|| -> Result<_> {
        let values = all_schubert_values_at_one(n, config.max_n)?;
        // one slice per first entry
        let mut slices: BTreeMap<usize, Vec<(&Permutation, &BigInt)>> = BTreeMap::new();
        for (w, v) in &values {
            slices.entry(w.apply(1)).or_default().push((w, v));
        }
        let slices: Vec<_> = slices.into_values().collect();
        let best = slices
            .par_iter()
            .map(|s| partial_max(s))
            .reduce(|| (BigInt::from(0), Vec::new()), merge);
        Ok((values, best))
    })?;
    let max_value = max
        .to_u64()
        .ok_or_else(|| Error::Invariant(format!("maximum {max} does not fit in 64 bits")))?;
    let all_argmax_richardson = argmax.iter().all(Permutation::is_richardson);
    let values = config.keep_values.then(|| {
        values
            .iter()
            .map(|(w, v)| (w.to_string(), v.to_u64().unwrap_or(u64::MAX)))
            .collect()
    });
    Ok(SearchReport {
        n,
        max_value,
        argmax,
        all_argmax_richardson,
        runtime_ms: start.elapsed().as_millis() as u64,
        values,
    })
}
