//! Registry of the series identities, parameter validation, side
//! evaluation and verification.

mod entries;
mod params;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{equal_to_precision, Comparison, QLaurentSeries, QMonomial};

pub use params::{ParamKind, ParamSet, ParamSpec, ParamValue};

/// Default truncation order for checks.
pub const DEFAULT_ORDER: i64 = 30;

/// Nonzero sides must start at least this far below the order.
pub const WINDOW_MARGIN: i64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

type Evaluator = fn(&ParamSet, i64) -> Result<QLaurentSeries>;
type Validator = fn(&ParamSet) -> std::result::Result<(), String>;

/// One catalog entry.
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub name: &'static str,
    /// Plain-text statement of the identity.
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    /// Whether some sum runs to infinity and is truncated formally.
    pub infinite: bool,
    /// Why term valuations grow, for infinite entries.
    pub valuation_note: Option<&'static str>,
    validate: Validator,
    lhs: Evaluator,
    rhs: Evaluator,
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .finish_non_exhaustive()
    }
}

impl IdentityDescriptor {
    pub fn signature(&self) -> String {
        let names: Vec<String> = self.params.iter().map(ParamSpec::describe).collect();
        format!("{}({})", self.id, names.join(", "))
    }
}

/// Machine-readable summary used by listings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub id: String,
    pub name: String,
    pub params: Vec<String>,
    pub statement: String,
    pub infinite: bool,
    pub valuation_note: Option<String>,
}

impl From<&IdentityDescriptor> for IdentitySummary {
    fn from(d: &IdentityDescriptor) -> Self {
        Self {
            id: d.id.to_string(),
            name: d.name.to_string(),
            params: d.params.iter().map(ParamSpec::describe).collect(),
            statement: d.statement.to_string(),
            infinite: d.infinite,
            valuation_note: d.valuation_note.map(str::to_string),
        }
    }
}

/// All series identities, sorted by id.
pub fn registry() -> &'static [IdentityDescriptor] {
    entries::REGISTRY
}

pub fn list_identities() -> Vec<IdentitySummary> {
    registry().iter().map(IdentitySummary::from).collect()
}

pub fn lookup(id: &str) -> Result<&'static IdentityDescriptor> {
    registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Checks parameter coverage, ranges, pole freedom and (for infinite
/// entries) valuation growth. `Ok(Err(reason))` is a violation.
pub fn validate_params(id: &str, p: &ParamSet) -> Result<std::result::Result<(), String>> {
    let d = lookup(id)?;
    Ok(validate_with(d, p))
}

fn validate_with(d: &IdentityDescriptor, p: &ParamSet) -> std::result::Result<(), String> {
    p.check_coverage(d.params)?;
    for spec in d.params {
        if let ParamKind::Int { min, at_most } = spec.kind {
            let v = p.int(spec.name).map_err(|e| e.to_string())?;
            if v < min {
                return Err(format!("{} = {v} is below {min}", spec.name));
            }
            if let Some(bound) = at_most {
                let b = p.int(bound).map_err(|e| e.to_string())?;
                if v > b {
                    return Err(format!("{} exceeds {bound}", spec.name));
                }
            }
        }
    }
    (d.validate)(p)
}

fn attach(id: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::Identity {
        id: id.to_string(),
        source: Box::new(e),
    }
}

/// Evaluates one side through `prec`, raising the working precision until
/// the result is known through `prec`.
pub fn evaluate_side(id: &str, side: Side, p: &ParamSet, prec: i64) -> Result<QLaurentSeries> {
    let d = lookup(id)?;
    evaluate_with(d, side, p, prec)
}

fn evaluate_with(
    d: &IdentityDescriptor,
    side: Side,
    p: &ParamSet,
    prec: i64,
) -> Result<QLaurentSeries> {
    let eval = match side {
        Side::Lhs => d.lhs,
        Side::Rhs => d.rhs,
    };
    let mut working = prec;
    for _ in 0..8 {
        let s = eval(p, working).map_err(attach(d.id))?;
        if s.prec() >= prec {
            return Ok(s.truncate(prec));
        }
        working += (prec - s.prec()).max(1);
    }
    Err(attach(d.id)(Error::EmptyWindow { val: working, prec }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Exponent and both coefficients at the first disagreement. Rational
/// checks leave `exponent` empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub exponent: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: String,
    /// Truncation order; `None` for exact rational checks.
    pub order: Option<i64>,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub skip_reason: Option<String>,
    /// Evaluation error text for failures without a coefficient mismatch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(identity: &str, params: String, order: Option<i64>) -> Self {
        Self {
            identity: identity.to_string(),
            params,
            order,
            status: Status::Pass,
            first_mismatch: None,
            skip_reason: None,
            detail: None,
            elapsed_ms: None,
        }
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.skip_reason = Some(reason.into());
        self
    }

    pub fn failed(mut self, mismatch: Option<Mismatch>, detail: Option<String>) -> Self {
        self.status = Status::Fail;
        self.first_mismatch = mismatch;
        self.detail = detail;
        self
    }
}

/// Evaluates both sides and compares them through `prec`.
pub fn verify(id: &str, p: &ParamSet, prec: i64) -> VerificationReport {
    let start = Instant::now();
    let mut report = match lookup(id) {
        Ok(d) => verify_with(d, p, prec),
        Err(e) => VerificationReport::new(id, p.to_string(), Some(prec)).skipped(e.to_string()),
    };
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

fn verify_with(d: &IdentityDescriptor, p: &ParamSet, prec: i64) -> VerificationReport {
    let report = VerificationReport::new(d.id, p.to_string(), Some(prec));
    if let Err(reason) = validate_with(d, p) {
        return report.skipped(reason);
    }
    let sides = evaluate_with(d, Side::Lhs, p, prec)
        .and_then(|l| evaluate_with(d, Side::Rhs, p, prec).map(|r| (l, r)));
    let (lhs, rhs) = match sides {
        Ok(s) => s,
        Err(e) => return report.failed(None, Some(e.to_string())),
    };
    match equal_to_precision(&lhs, &rhs) {
        Comparison::FirstMismatch { exponent, lhs, rhs } => report.failed(
            Some(Mismatch {
                exponent: Some(exponent),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
            None,
        ),
        // Both sides vanish through the order: the identity reads 0 = 0.
        Comparison::InsufficientWindow => report,
        Comparison::Equal => {
            let start = lhs.val().max(rhs.val());
            if prec < start + WINDOW_MARGIN {
                report.skipped(format!(
                    "InsufficientWindow: sides start at q^{start}, order {prec} < {}",
                    start + WINDOW_MARGIN
                ))
            } else {
                report
            }
        }
    }
}

/// Substitution points used by the default grid.
pub struct PointLists {
    pub z: Vec<QMonomial>,
    pub v: Vec<QMonomial>,
    pub xy: Vec<QMonomial>,
}

fn parse_all(items: &[&str]) -> Vec<QMonomial> {
    items
        .iter()
        .map(|s| s.parse().expect("static literal"))
        .collect()
}

impl PointLists {
    /// Fixed point lists; `seed` selects among them, `0` being the default.
    pub fn for_seed(seed: u64) -> Self {
        match seed % 2 {
            0 => Self {
                z: parse_all(&[
                    "2", "1/2", "-3", "1*q^1", "-1*q^1", "2*q^1", "1*q^2", "-1/2*q^1",
                ]),
                v: parse_all(&["1*q^1", "3", "-2*q^1"]),
                xy: parse_all(&["2", "1*q^1", "-1*q^1"]),
            },
            _ => Self {
                z: parse_all(&[
                    "3", "-1/3", "5/2", "3*q^1", "-2*q^2", "1*q^3", "1/3*q^1", "-1*q^2",
                ]),
                v: parse_all(&["-1*q^2", "1/2", "5*q^1"]),
                xy: parse_all(&["-2", "1/3*q^1", "1*q^2"]),
            },
        }
    }

    fn for_param(&self, name: &str) -> &[QMonomial] {
        match name {
            "z" => &self.z,
            "v" => &self.v,
            _ => &self.xy,
        }
    }
}

/// The cross-product grid of `(id, params)` points: integer parameters up
/// to `max_n` within their declared ranges, letter parameters over the
/// point lists. Points violating other constraints are kept; `verify`
/// reports them as skipped.
pub fn default_suite(max_n: i64, seed: u64) -> Vec<(&'static str, ParamSet)> {
    let points = PointLists::for_seed(seed);
    let mut out = Vec::new();
    for d in registry() {
        let mut grid = vec![ParamSet::default()];
        for spec in d.params {
            let mut next = Vec::new();
            for p in &grid {
                match spec.kind {
                    ParamKind::Int { min, at_most } => {
                        let hi = match at_most {
                            Some(b) => p.int(b).expect("bound declared earlier"),
                            None => max_n,
                        };
                        for v in min..=hi {
                            next.push(p.with(spec.name, ParamValue::Int(v)));
                        }
                    }
                    ParamKind::Monomial => {
                        for m in points.for_param(spec.name) {
                            next.push(p.with(spec.name, ParamValue::Monomial(m.clone())));
                        }
                    }
                }
            }
            grid = next;
        }
        out.extend(grid.into_iter().map(|p| (d.id, p)));
    }
    out
}

#[cfg(test)]
mod tests;
