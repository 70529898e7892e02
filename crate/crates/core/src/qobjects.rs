//! q-analogue building blocks: Pochhammer symbols, Gaussian binomials,
//! q-harmonic numbers, shifted Lambert sums and nested chain sums.

use num_traits::One;

use crate::error::{Error, Result};
use crate::series::{
    int, sum_terms, LaurentPoly, QLaurentSeries, QMonomial, Rational, DEFAULT_GUARD,
};

/// `(a; q)_n` as an exact Laurent polynomial.
pub fn pochhammer_poly(a: &QMonomial, n: i64) -> LaurentPoly {
    pochhammer_capped(a, n, None)
}

fn pochhammer_capped(a: &QMonomial, n: i64, cap: Option<i64>) -> LaurentPoly {
    (0..n).fold(LaurentPoly::one(), |acc, j| {
        acc.mul_capped(&LaurentPoly::binomial(a.coeff(), a.exponent() + j), cap)
    })
}

/// `(a; q)_n` windowed to `prec`.
///
/// Exponents above `prec - L`, where `L <= 0` is the sum of the negative
/// factor exponents, can never fall back into the window and are dropped
/// while multiplying out.
pub fn pochhammer(a: &QMonomial, n: i64, prec: i64) -> QLaurentSeries {
    let low: i64 = (0..n).map(|j| (a.exponent() + j).min(0)).sum();
    pochhammer_capped(a, n, Some(prec - low)).to_series(prec)
}

/// Gaussian binomial coefficient `[n, k]`; zero outside `0 <= k <= n`.
pub fn qbinomial(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let degree = k * (n - k);
    let mut s = QLaurentSeries::one(degree);
    for j in 1..=k {
        s = s.mul_binomial(&Rational::one(), n - k + j);
        s = s.div_binomial(&Rational::one(), j).expect("j >= 1");
    }
    LaurentPoly::from_terms(s.terms().map(|(e, c)| (e, c.clone())))
}

/// `H_n(q) = sum_{k=1}^n q^k / (1 - q^k)`.
pub fn q_harmonic(n: i64, prec: i64) -> QLaurentSeries {
    shifted_lambert(&QMonomial::one(), 0, 1, Some(n), None, prec).expect("no poles for k >= 1")
}

/// `w / (1 - w)` for `w = z q^t`.
fn lambert_term(z: &QMonomial, t: i64, k: i64, prec: i64) -> Result<QLaurentSeries> {
    let w = z.shifted(t);
    QLaurentSeries::from_monomial(&w, prec)
        .div_binomial(w.coeff(), w.exponent())
        .map_err(|_| Error::PoleInRange {
            k,
            factor: format!("1 - ({w})"),
        })
}

/// `sum_k z q^{k-m} / (1 - z q^{k-m})` over `k_from..=k_to` (or to infinity
/// when `k_to` is `None`), skipping `exclude`.
pub fn shifted_lambert(
    z: &QMonomial,
    m: i64,
    k_from: i64,
    k_to: Option<i64>,
    exclude: Option<i64>,
    prec: i64,
) -> Result<QLaurentSeries> {
    let term = |k: i64| -> Result<Option<QLaurentSeries>> {
        if Some(k) == exclude {
            return Ok(None);
        }
        lambert_term(z, k - m, k, prec).map(Some)
    };
    match k_to {
        Some(k_to) => {
            let mut acc = QLaurentSeries::zero(prec);
            for k in k_from..=k_to {
                if let Some(t) = term(k)? {
                    acc = acc.add(&t);
                }
            }
            Ok(acc)
        }
        None => sum_terms(k_from, prec, DEFAULT_GUARD, term),
    }
}

/// Shape of the level factors in a nested chain sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    /// `-sum prod_i q^{k_i} / ((1 - z q^{k_i - i}) (1 - q^{k_i}))` over
    /// `1 <= k_m <= ... <= k_1 <= n`.
    Shifted,
    /// Levels `1..m-1` carry `q^{k_i} / ((1 - z q^{k_i - i - 1}) (1 - q^{k_i}))`;
    /// the innermost level is the difference
    /// `sum_{k=1}^{k_{m-1}-1} z q^{k-m}/(1 - z q^{k-m}) - sum_{k=1}^{k_{m-1}} q^k/(1 - q^k)`.
    /// For depth 1 there are no outer levels and `k_0 = n`.
    LambertTail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainSpec {
    pub depth: i64,
    /// `None` means the outermost index runs to infinity.
    pub upper: Option<i64>,
    pub kind: ChainKind,
}

impl ChainSpec {
    /// Exponent offset `t` in the level-`i` factor `1 - z q^{k + t}`.
    pub fn level_offset(&self, level: i64) -> i64 {
        match self.kind {
            ChainKind::Shifted => -level,
            ChainKind::LambertTail => -level - 1,
        }
    }

    fn outer_levels(&self) -> i64 {
        match self.kind {
            ChainKind::Shifted => self.depth,
            ChainKind::LambertTail => self.depth - 1,
        }
    }
}

/// `f(j) * x` for the level factor `q^j / ((1 - z q^{j+t}) (1 - q^j))`.
fn apply_level(x: &QLaurentSeries, z: &QMonomial, t: i64, j: i64) -> Result<QLaurentSeries> {
    x.shift(j)
        .div_binomial(z.coeff(), z.exponent() + j + t)
        .map_err(|_| Error::PoleInRange {
            k: j,
            factor: format!("1 - ({})", z.shifted(j + t)),
        })?
        .div_binomial(&Rational::one(), j)
}

/// Incremental prefix-sum evaluation of a chain sum: after `advance(j)` the
/// state holds the sum with outermost index bounded by `j`.
struct ChainState<'a> {
    spec: ChainSpec,
    z: &'a QMonomial,
    prec: i64,
    /// `levels[i]` is the level-`i+1` prefix sum.
    levels: Vec<QLaurentSeries>,
    z_tail: QLaurentSeries,
    q_tail: QLaurentSeries,
    j: i64,
}

impl<'a> ChainState<'a> {
    fn new(spec: ChainSpec, z: &'a QMonomial, prec: i64) -> Self {
        let zero = QLaurentSeries::zero(prec);
        Self {
            spec,
            z,
            prec,
            levels: vec![zero.clone(); spec.outer_levels() as usize],
            z_tail: zero.clone(),
            q_tail: zero,
            j: 0,
        }
    }

    /// Moves the bound to `j + 1` and returns the new top value.
    fn advance(&mut self) -> Result<QLaurentSeries> {
        self.j += 1;
        let j = self.j;
        let inner = match self.spec.kind {
            ChainKind::Shifted => QLaurentSeries::one(self.prec),
            ChainKind::LambertTail => {
                if j > 1 {
                    let t = lambert_term(self.z, j - 1 - self.spec.depth, j - 1, self.prec)?;
                    self.z_tail = self.z_tail.add(&t);
                }
                let t = lambert_term(&QMonomial::one(), j, j, self.prec)?;
                self.q_tail = self.q_tail.add(&t);
                self.z_tail.sub(&self.q_tail)
            }
        };
        let mut below = inner;
        for idx in (0..self.levels.len()).rev() {
            let level = idx as i64 + 1;
            let step = apply_level(&below, self.z, self.spec.level_offset(level), j)?;
            self.levels[idx] = self.levels[idx].add(&step);
            below = self.levels[idx].clone();
        }
        Ok(match self.spec.kind {
            ChainKind::Shifted => below.neg(),
            ChainKind::LambertTail => below,
        })
    }
}

/// Nested chain sum by prefix-sum dynamic programming: `O(depth * n)`
/// series operations.
pub fn chain_sum(spec: &ChainSpec, z: &QMonomial, prec: i64) -> Result<QLaurentSeries> {
    if spec.depth < 1 {
        return Err(Error::Params(format!("chain depth {} < 1", spec.depth)));
    }
    let mut state = ChainState::new(*spec, z, prec);
    match spec.upper {
        Some(n) => {
            let mut top = QLaurentSeries::zero(prec);
            for _ in 0..n {
                top = state.advance()?;
            }
            Ok(top)
        }
        None => {
            let mut prev = QLaurentSeries::zero(prec);
            sum_terms(1, prec, DEFAULT_GUARD, |_| {
                let top = state.advance()?;
                let step = top.sub(&prev);
                prev = top;
                Ok(Some(step))
            })
        }
    }
}

/// Number of positive divisors, by trial division up to `sqrt(n)`.
pub fn divisor_count(n: u64) -> u64 {
    assert!(n >= 1, "divisor_count needs n >= 1");
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

/// Number of odd positive divisors.
pub fn odd_divisor_count(n: u64) -> u64 {
    let mut m = n;
    while m.is_multiple_of(2) {
        m /= 2;
    }
    divisor_count(m)
}

/// `(-1)^k` as a rational.
pub fn sign(k: i64) -> Rational {
    int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests;
