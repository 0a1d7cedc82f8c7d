//! Build-and-verify over a rectangle of `(n, k)` pairs.

use std::fmt::Write as _;

use kreg_core::{build_with, classify, BuildOptions, RegularityClass};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub k: usize,
    pub n: usize,
    pub class: RegularityClass,
    pub edges: usize,
    pub steps: usize,
    pub outcome: Result<(), String>,
}

/// Every constructible `(n, k)` with `2 <= k <= k_max` and
/// `k + 1 <= n <= n_max`, ordered by `(k, n)`.
pub fn cases(k_max: usize, n_max: usize) -> Vec<(usize, usize)> {
    (2..=k_max)
        .flat_map(|k| (k + 1..=n_max).map(move |n| (k, n)))
        .collect()
}

fn run_case(k: usize, n: usize, options: BuildOptions) -> SweepRow {
    let class = classify(n, k).class;
    match build_with(n, k, options) {
        Ok((g, trace)) => SweepRow {
            k,
            n,
            class,
            edges: g.edge_count(),
            steps: trace.steps.len(),
            outcome: Ok(()),
        },
        Err(e) => SweepRow {
            k,
            n,
            class,
            edges: 0,
            steps: 0,
            outcome: Err(e.to_string()),
        },
    }
}

/// Runs the sweep on `jobs` worker threads. Rows come back in `(k, n)`
/// order regardless of completion order.
pub fn sweep(k_max: usize, n_max: usize, jobs: usize, options: BuildOptions) -> Vec<SweepRow> {
    let cases = cases(k_max, n_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        cases
            .par_iter()
            .map(|&(k, n)| run_case(k, n, options))
            .collect()
    })
}

pub fn render_table(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>4} {:>6} {:<15} {:>8} {:>6}  status",
        "k", "n", "class", "edges", "steps"
    )
    .unwrap();
    for r in rows {
        let status = match &r.outcome {
            Ok(()) => "ok".to_string(),
            Err(e) => format!("FAIL: {e}"),
        };
        writeln!(
            out,
            "{:>4} {:>6} {:<15} {:>8} {:>6}  {status}",
            r.k,
            r.n,
            r.class.to_string(),
            r.edges,
            r.steps
        )
        .unwrap();
    }
    let failed = rows.iter().filter(|r| r.outcome.is_err()).count();
    writeln!(
        out,
        "{} cases, {} passed, {} failed",
        rows.len(),
        rows.len() - failed,
        failed
    )
    .unwrap();
    out
}
