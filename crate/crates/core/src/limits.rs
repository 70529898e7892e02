//! Binomial identities in exact rational arithmetic (the `q -> 1` shadows of
//! the series identities), plus the partial-fraction identity for complete
//! homogeneous symmetric sums.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{int, rat, Rational};

pub fn harmonic(n: i64) -> Rational {
    (1..=n).map(|k| rat(1, k)).sum()
}

pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

/// Rising factorial `(x)_N = x (x+1) ... (x+N-1)`.
pub fn rising(x: &Rational, n: i64) -> Rational {
    (0..n).map(|i| x + int(i)).product()
}

fn factorial(n: i64) -> Rational {
    (1..=n).map(int).product()
}

/// `sum_{1 <= k_m <= ... <= k_1 <= n} prod_i w_i(k_i)`, where `weights[i-1][k-1]`
/// is `w_i(k)`. An empty chain sums to 1.
pub fn chain_sum(n: i64, weights: &[Vec<Rational>]) -> Rational {
    let Some((innermost, outer)) = weights.split_last() else {
        return Rational::one();
    };
    // level[k-1]: sum over the current and inner levels with the current index equal to k
    let mut level: Vec<Rational> = innermost.clone();
    for w in outer.iter().rev() {
        let mut running = Rational::zero();
        level = (0..n as usize)
            .map(|k| {
                running += &level[k];
                &w[k] * &running
            })
            .collect();
    }
    level.into_iter().sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckOutcome {
    Pass,
    Fail { lhs: String, rhs: String },
    Skipped(String),
}

fn compare(lhs: Rational, rhs: Rational) -> CheckOutcome {
    if lhs == rhs {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn need_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::Params(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Errors with `PoleAtX` when `x` is an integer in `lo..=hi`.
fn avoid(x: &Rational, lo: i64, hi: i64, factor: &str) -> Result<()> {
    if x.is_integer() {
        let t = x.to_integer();
        if t >= BigInt::from(lo) && t <= BigInt::from(hi) {
            return Err(Error::PoleAtX(format!("{factor} vanishes at x = {x}")));
        }
    }
    Ok(())
}

/// `sum_{k=1}^n (-1)^{k-1} C(n,k)/k = H_n`.
pub fn check_trigo(n: i64) -> Result<CheckOutcome> {
    need_positive("n", n)?;
    let lhs = (1..=n)
        .map(|k| alternating(k) * binomial(n, k) / int(k))
        .sum();
    Ok(compare(lhs, harmonic(n)))
}

fn alternating(k: i64) -> Rational {
    if k % 2 == 1 {
        int(1)
    } else {
        int(-1)
    }
}

fn reciprocal_powers(n: i64, m: i64) -> Rational {
    (1..=n)
        .map(|k| alternating(k) * binomial(n, k) / int(k).pow(m as i32))
        .sum()
}

/// `sum_{k=1}^n (-1)^{k-1} C(n,k)/k^m = sum_{chains} 1/(k_1 ... k_m)`.
pub fn check_dilcher_noq(m: i64, n: i64) -> Result<CheckOutcome> {
    need_positive("m", m)?;
    need_positive("n", n)?;
    let w: Vec<Rational> = (1..=n).map(|k| rat(1, k)).collect();
    let rhs = chain_sum(n, &vec![w; m as usize]);
    Ok(compare(reciprocal_powers(n, m), rhs))
}

/// Chain weights `1/(k (x + k - i - shift))` for levels `i = 1..=levels`.
fn shifted_weights(x: &Rational, n: i64, levels: i64, shift: i64) -> Vec<Vec<Rational>> {
    (1..=levels)
        .map(|i| {
            (1..=n)
                .map(|k| (int(k) * (x + int(k - i - shift))).recip())
                .collect()
        })
        .collect()
}

/// `sum_k C(n,k) (m-x)_k (x)_{n-k} / ((x-m)_{m+n} k^m)
///   = -sum_{chains} 1/(k_1 ... k_m (x+k_1-1) ... (x+k_m-m))`.
pub fn check_multi_noq(m: i64, n: i64, x: &Rational) -> Result<CheckOutcome> {
    need_positive("m", m)?;
    need_positive("n", n)?;
    avoid(x, 1 - n, m, "(x-m)_{m+n} or a chain factor x+k_i-i")?;
    let den = rising(&(x - int(m)), m + n);
    let lhs: Rational = (1..=n)
        .map(|k| {
            binomial(n, k) * rising(&(int(m) - x), k) * rising(x, n - k) / int(k).pow(m as i32)
        })
        .sum::<Rational>()
        / den;
    let rhs = -chain_sum(n, &shifted_weights(x, n, m, 0));
    Ok(compare(lhs, rhs))
}

/// The `x -> m` limit of [`check_multi_noq`]:
/// `sum_k C(n,k) (k-1)! (m+n-k-1)! / k^m
///   = sum_{chains} (m-1)! (m+n-1)! / (k_1 ... k_m (k_1+m-1) ... (k_m+m-m))`.
pub fn check_multi_noq_xm_limit(m: i64, n: i64) -> Result<CheckOutcome> {
    need_positive("m", m)?;
    need_positive("n", n)?;
    let lhs = (1..=n)
        .map(|k| {
            binomial(n, k) * factorial(k - 1) * factorial(m + n - k - 1) / int(k).pow(m as i32)
        })
        .sum();
    let rhs =
        factorial(m - 1) * factorial(m + n - 1) * chain_sum(n, &shifted_weights(&int(m), n, m, 0));
    Ok(compare(lhs, rhs))
}

/// `sum_k C(n,k) (m-x)_k (x-1)_{n-k} / ((x-m)_{m+n-1} k^m)
///   = sum_{chains of length m-1} T(k_{m-1}) / (k_1 ... k_{m-1} (x+k_1-2) ... (x+k_{m-1}-m))`
/// with `T(t) = sum_{j=1}^{t-1} 1/(x+j-m) - H_t`. For `m = 1` the chain is
/// empty and `T` is taken at `t = n`.
pub fn check_dilch2_noq(m: i64, n: i64, x: &Rational) -> Result<CheckOutcome> {
    need_positive("m", m)?;
    need_positive("n", n)?;
    avoid(
        x,
        2 - n,
        m,
        "(x-m)_{m+n-1}, a chain factor or a tail factor",
    )?;
    let den = rising(&(x - int(m)), m + n - 1);
    let lhs: Rational = (1..=n)
        .map(|k| {
            binomial(n, k) * rising(&(int(m) - x), k) * rising(&(x - int(1)), n - k)
                / int(k).pow(m as i32)
        })
        .sum::<Rational>()
        / den;
    let tail = |t: i64| -> Rational {
        (1..t).map(|j| (x + int(j - m)).recip()).sum::<Rational>() - harmonic(t)
    };
    let rhs = if m == 1 {
        tail(n)
    } else {
        let mut weights = shifted_weights(x, n, m - 1, 1);
        for (k, w) in weights.last_mut().expect("m >= 2").iter_mut().enumerate() {
            *w *= tail(k as i64 + 1);
        }
        chain_sum(n, &weights)
    };
    Ok(compare(lhs, rhs))
}

/// `h_m(a_1, ..., a_N) = sum_k a_k^m prod_{j != k} (1 - a_j/a_k)^{-1}` for
/// distinct nonzero `a`.
pub fn check_zeng_key(a: &[Rational], m: i64) -> Result<CheckOutcome> {
    need_positive("m", m)?;
    if a.is_empty() {
        return Err(Error::Params("at least one value is required".into()));
    }
    let distinct = a
        .iter()
        .enumerate()
        .all(|(i, x)| !x.is_zero() && a[..i].iter().all(|y| y != x));
    if !distinct {
        return Err(Error::DuplicateValues);
    }
    // h[j] = h_j of the values seen so far
    let mut h = vec![Rational::zero(); m as usize + 1];
    h[0] = Rational::one();
    for v in a {
        for j in 1..=m as usize {
            let step = &h[j - 1] * v;
            h[j] += step;
        }
    }
    let rhs = a
        .iter()
        .enumerate()
        .map(|(k, ak)| {
            let prod: Rational = a
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, aj)| Rational::one() - aj / ak)
                .product();
            ak.pow(m as i32) / prod
        })
        .sum();
    Ok(compare(h.pop().expect("m >= 1"), rhs))
}

/// One exact rational check with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalCase {
    Trigo { n: i64 },
    DilcherNoq { m: i64, n: i64 },
    MultiNoq { m: i64, n: i64, x: Rational },
    MultiNoqXm { m: i64, n: i64 },
    Dilch2Noq { m: i64, n: i64, x: Rational },
    ZengKey { a: Vec<Rational>, m: i64 },
}

impl RationalCase {
    pub fn id(&self) -> &'static str {
        match self {
            Self::Trigo { .. } => "trigo",
            Self::DilcherNoq { .. } => "dilcher_noq",
            Self::MultiNoq { .. } => "multi_noq",
            Self::MultiNoqXm { .. } => "multi_noq_xm",
            Self::Dilch2Noq { .. } => "dilch2_noq",
            Self::ZengKey { .. } => "zeng_key",
        }
    }

    pub fn check(&self) -> Result<CheckOutcome> {
        match self {
            Self::Trigo { n } => check_trigo(*n),
            Self::DilcherNoq { m, n } => check_dilcher_noq(*m, *n),
            Self::MultiNoq { m, n, x } => check_multi_noq(*m, *n, x),
            Self::MultiNoqXm { m, n } => check_multi_noq_xm_limit(*m, *n),
            Self::Dilch2Noq { m, n, x } => check_dilch2_noq(*m, *n, x),
            Self::ZengKey { a, m } => check_zeng_key(a, *m),
        }
    }

    /// Like [`check`](Self::check), with invalid input reported as skipped.
    pub fn outcome(&self) -> CheckOutcome {
        self.check()
            .unwrap_or_else(|e| CheckOutcome::Skipped(e.to_string()))
    }
}

impl fmt::Display for RationalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trigo { n } => write!(f, "n={n}"),
            Self::DilcherNoq { m, n } | Self::MultiNoqXm { m, n } => write!(f, "m={m},n={n}"),
            Self::MultiNoq { m, n, x } | Self::Dilch2Noq { m, n, x } => {
                write!(f, "m={m},n={n},x={x}")
            }
            Self::ZengKey { a, m } => {
                let a: Vec<String> = a.iter().map(ToString::to_string).collect();
                write!(f, "m={m},a=[{}]", a.join(";"))
            }
        }
    }
}

/// Listing entry for one rational check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSummary {
    pub id: String,
    pub params: Vec<String>,
    pub statement: String,
}

pub fn rational_checks() -> Vec<RationalSummary> {
    let entries: [(&str, &[&str], &str); 6] = [
        ("dilch2_noq", &["m >= 1", "n >= 1", "x"], "sum_k C(n,k) (m-x)_k (x-1)_{n-k}/((x-m)_{m+n-1} k^m) = sum_{chains of length m-1} (sum_{j<k_{m-1}} 1/(x+j-m) - H_{k_{m-1}})/(k_1 ... k_{m-1} (x+k_1-2) ... (x+k_{m-1}-m))"),
        ("dilcher_noq", &["m >= 1", "n >= 1"], "sum_{k=1}^n (-1)^{k-1} C(n,k)/k^m = sum_{1<=k_m<=...<=k_1<=n} 1/(k_1 ... k_m)"),
        ("multi_noq", &["m >= 1", "n >= 1", "x"], "sum_k C(n,k) (m-x)_k (x)_{n-k}/((x-m)_{m+n} k^m) = -sum_{chains} 1/(k_1 ... k_m (x+k_1-1) ... (x+k_m-m))"),
        ("multi_noq_xm", &["m >= 1", "n >= 1"], "sum_k C(n,k) (k-1)! (m+n-k-1)!/k^m = sum_{chains} (m-1)! (m+n-1)!/(k_1 ... k_m (k_1+m-1) ... (k_m+m-m))"),
        ("trigo", &["n >= 1"], "sum_{k=1}^n (-1)^{k-1} C(n,k)/k = H_n"),
        ("zeng_key", &["m >= 1", "a (distinct, nonzero)"], "h_m(a_1, ..., a_N) = sum_k a_k^m prod_{j!=k} (1 - a_j/a_k)^{-1}"),
    ];
    entries
        .iter()
        .map(|(id, params, statement)| RationalSummary {
            id: id.to_string(),
            params: params.iter().map(|p| p.to_string()).collect(),
            statement: statement.to_string(),
        })
        .collect()
}

pub fn x_points() -> Vec<Rational> {
    vec![rat(7, 2), int(5), rat(11, 3), rat(-5, 2), int(1_000_000)]
}

pub fn zeng_tuples() -> Vec<Vec<Rational>> {
    vec![
        vec![int(1)],
        vec![int(1), int(2)],
        vec![int(1), int(2), int(3)],
        vec![rat(1, 2), int(-1), int(3), rat(2, 3)],
        vec![int(2), int(-3), rat(1, 5), int(7), rat(-1, 4)],
    ]
}

/// The rational grid: `trigo` for `n <= max(15, max_n)`, the two-parameter
/// checks for `1 <= m, n <= max_n` over [`x_points`], and the key identity
/// for every tuple of [`zeng_tuples`] with `m <= 4`.
pub fn rational_suite(max_n: i64) -> Vec<RationalCase> {
    let mut out: Vec<RationalCase> = (1..=max_n.max(15))
        .map(|n| RationalCase::Trigo { n })
        .collect();
    for m in 1..=max_n {
        for n in 1..=max_n {
            out.push(RationalCase::DilcherNoq { m, n });
            out.push(RationalCase::MultiNoqXm { m, n });
            for x in x_points() {
                out.push(RationalCase::MultiNoq { m, n, x: x.clone() });
                out.push(RationalCase::Dilch2Noq { m, n, x });
            }
        }
    }
    for a in zeng_tuples() {
        for m in 1..=4 {
            out.push(RationalCase::ZengKey { a: a.clone(), m });
        }
    }
    out
}

#[cfg(test)]
mod tests;
