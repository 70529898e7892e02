//! Sweep runner and the JSON report document.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{default_suite, verify, Mismatch, ParamSet, Status, VerificationReport};
use crate::limits::{rational_suite, CheckOutcome, RationalCase};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub version: String,
    pub order: i64,
    pub suite: String,
    pub totals: Totals,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub header: Header,
    pub rows: Vec<VerificationReport>,
}

impl ReportDocument {
    /// Sorts rows by `(identity, params)` and recomputes the totals.
    pub fn new(order: i64, suite: String, mut rows: Vec<VerificationReport>) -> Self {
        rows.sort_by(|a, b| (&a.identity, &a.params).cmp(&(&b.identity, &b.params)));
        let totals = totals(&rows);
        let header = Header {
            version: env!("CARGO_PKG_VERSION").to_string(),
            order,
            suite,
            totals,
        };
        Self { header, rows }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn totals(rows: &[VerificationReport]) -> Totals {
    let mut t = Totals::default();
    for r in rows {
        match r.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::Skipped => t.skipped += 1,
        }
    }
    t
}

/// Report row for an exact rational check.
pub fn rational_report(case: &RationalCase) -> VerificationReport {
    let start = Instant::now();
    let row = VerificationReport::new(case.id(), case.to_string(), None);
    let mut row = match case.outcome() {
        CheckOutcome::Pass => row,
        CheckOutcome::Fail { lhs, rhs } => row.failed(
            Some(Mismatch {
                exponent: None,
                lhs,
                rhs,
            }),
            None,
        ),
        CheckOutcome::Skipped(reason) => row.skipped(reason),
    };
    row.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    row
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_n: i64,
    pub order: i64,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub seed: u64,
    /// Keep per-row timings. Off by default so documents are reproducible.
    pub timings: bool,
}

enum Task {
    Series(&'static str, ParamSet),
    Rational(RationalCase),
}

/// Runs the series grid and the rational grid and collects one document.
pub fn run_sweep(opts: &SweepOptions) -> Result<ReportDocument, rayon::ThreadPoolBuildError> {
    let mut tasks: Vec<Task> = default_suite(opts.max_n, opts.seed)
        .into_iter()
        .map(|(id, p)| Task::Series(id, p))
        .collect();
    tasks.extend(rational_suite(opts.max_n).into_iter().map(Task::Rational));

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build()?;
    let rows: Vec<VerificationReport> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let mut row = match t {
                    Task::Series(id, p) => verify(id, p, opts.order),
                    Task::Rational(c) => rational_report(c),
                };
                if !opts.timings {
                    row.elapsed_ms = None;
                }
                row
            })
            .collect()
    });
    let suite = format!("default(max_n={},seed={})", opts.max_n, opts.seed);
    Ok(ReportDocument::new(opts.order, suite, rows))
}
