//! Truncated formal Laurent series in `q` over exact rationals.
//!
//! A series carries a valuation `val` and a precision `prec`: every
//! coefficient with exponent `e <= prec` is known exactly (zero below `val`),
//! nothing is known above `prec`. Coefficients are kept densely for the
//! window `[val, prec]` with a nonzero leading entry, so `val` is always the
//! true valuation unless the series vanishes through `prec`, in which case
//! `val = prec + 1`.

mod monomial;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use monomial::QMonomial;
pub use poly::LaurentPoly;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Default number of consecutive above-window terms that ends a formal sum.
pub const DEFAULT_GUARD: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QLaurentSeries {
    val: i64,
    prec: i64,
    coeffs: Vec<Rational>,
}

/// Outcome of comparing two series on their common window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    FirstMismatch {
        exponent: i64,
        lhs: Rational,
        rhs: Rational,
    },
    InsufficientWindow,
}

impl QLaurentSeries {
    /// The series that vanishes through `prec`.
    pub fn zero(prec: i64) -> Self {
        Self {
            val: prec + 1,
            prec,
            coeffs: Vec::new(),
        }
    }

    pub fn one(prec: i64) -> Self {
        Self::from_terms([(0, Rational::one())], prec)
    }

    pub fn constant(c: Rational, prec: i64) -> Self {
        Self::from_terms([(0, c)], prec)
    }

    pub fn from_monomial(m: &QMonomial, prec: i64) -> Self {
        Self::from_terms([(m.exponent(), m.coeff().clone())], prec)
    }

    /// Builds a series from `(exponent, coefficient)` pairs; exponents above
    /// `prec` are dropped and repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I, prec: i64) -> Self {
        let terms: Vec<(i64, Rational)> = terms.into_iter().filter(|(e, _)| *e <= prec).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(prec);
        };
        let mut coeffs = vec![Rational::zero(); (prec - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::normalized(lo, prec, coeffs)
    }

    fn normalized(val: i64, prec: i64, mut coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len() as i64, (prec - val + 1).max(0));
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(prec),
            Some(0) => Self { val, prec, coeffs },
            Some(i) => {
                coeffs.drain(..i);
                Self {
                    val: val + i as i64,
                    prec,
                    coeffs,
                }
            }
        }
    }

    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// True if every coefficient through `prec` is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^e`; errors when `e` lies above the known window.
    pub fn coeff(&self, e: i64) -> Result<Rational> {
        if e > self.prec {
            return Err(Error::OutOfWindow {
                exponent: e,
                prec: self.prec,
            });
        }
        Ok(self.get(e).clone())
    }

    fn get(&self, e: i64) -> &Rational {
        static ZERO: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();
        if e < self.val || e > self.prec {
            return ZERO.get_or_init(Rational::zero);
        }
        &self.coeffs[(e - self.val) as usize]
    }

    /// Nonzero `(exponent, coefficient)` pairs in the window.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    /// Forgets everything above `prec` (no-op if already coarser).
    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        if self.val > prec {
            return Self::zero(prec);
        }
        let keep = (prec - self.val + 1) as usize;
        Self::normalized(self.val, prec, self.coeffs[..keep].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let val = self.val.min(other.val);
        if val > prec {
            return Self::zero(prec);
        }
        let coeffs = (val..=prec).map(|e| self.get(e) + other.get(e)).collect();
        Self::normalized(val, prec, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            val: self.val,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.prec);
        }
        Self {
            val: self.val,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplication by the exact monomial `q^t`.
    pub fn shift(&self, t: i64) -> Self {
        Self {
            val: self.val + t,
            prec: self.prec + t,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &QMonomial) -> Self {
        self.scale(m.coeff()).shift(m.exponent())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = (self.prec + other.val).min(other.prec + self.val);
        let val = self.val + other.val;
        if self.is_zero() || other.is_zero() || val > prec {
            return Self::zero(prec);
        }
        let len = (prec - val + 1) as usize;
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::normalized(val, prec, out)
    }

    /// Product with an exact Laurent polynomial; precision moves by the
    /// polynomial's valuation only.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let Some(pv) = p.val() else {
            return Self::zero(self.prec);
        };
        let prec = self.prec + pv;
        let val = self.val + pv;
        if self.is_zero() {
            return Self::zero(prec);
        }
        let len = (prec - val + 1) as usize;
        let mut out = vec![Rational::zero(); len];
        for (e, c) in p.terms() {
            let off = (e - pv) as usize;
            if off >= len {
                break;
            }
            for (i, a) in self.coeffs.iter().enumerate().take(len - off) {
                if !a.is_zero() {
                    out[off + i] += a * c;
                }
            }
        }
        Self::normalized(val, prec, out)
    }

    /// Multiplication by `1 - c q^e`.
    pub fn mul_binomial(&self, c: &Rational, e: i64) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        if e == 0 {
            return self.scale(&(Rational::one() - c));
        }
        let drop = e.min(0);
        let (val, prec) = (self.val + drop, self.prec + drop);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let coeffs = (val..=prec)
            .map(|t| self.get(t) - c * self.get(t - e))
            .collect();
        Self::normalized(val, prec, coeffs)
    }

    /// Division by `1 - c q^e`, expanded in the Laurent field: for `e < 0`
    /// the inverse is `-c^{-1} q^{-e} / (1 - c^{-1} q^{-e})`.
    pub fn div_binomial(&self, c: &Rational, e: i64) -> Result<Self> {
        if c.is_zero() {
            return Ok(self.clone());
        }
        if e == 0 {
            if c.is_one() {
                return Err(Error::PoleAtConstant);
            }
            return Ok(self.scale(&(Rational::one() - c).recip()));
        }
        if e < 0 {
            let ci = c.recip();
            return self.scale(&-ci.clone()).shift(-e).div_binomial(&ci, -e);
        }
        let mut coeffs = self.coeffs.clone();
        let step = e as usize;
        for i in step..coeffs.len() {
            let carry = c * &coeffs[i - step];
            coeffs[i] += carry;
        }
        Ok(Self {
            val: self.val,
            prec: self.prec,
            coeffs,
        })
    }

    /// Multiplication by `(a; q)_n`.
    pub fn mul_pochhammer(&self, a: &QMonomial, n: i64) -> Self {
        (0..n).fold(self.clone(), |acc, j| {
            acc.mul_binomial(a.coeff(), a.exponent() + j)
        })
    }

    /// Division by `(a; q)_n`; fails at the first identically zero factor.
    pub fn div_pochhammer(&self, a: &QMonomial, n: i64) -> Result<Self> {
        (0..n).try_fold(self.clone(), |acc, j| {
            acc.div_binomial(a.coeff(), a.exponent() + j)
        })
    }

    /// Multiplicative inverse; the result has valuation `-val` and precision
    /// `prec - 2 val`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::EmptyWindow {
                val: self.val,
                prec: self.prec,
            });
        }
        let lead = &self.coeffs[0];
        if lead.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let inv_lead = lead.recip();
        let n = self.coeffs.len();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(inv_lead.clone());
        for i in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=i {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out[i - j];
                }
            }
            out.push(-acc * &inv_lead);
        }
        Ok(Self::normalized(-self.val, self.prec - 2 * self.val, out))
    }
}

/// Expansion of `1 / (1 - c q^d)` known through `prec`.
pub fn invert_binomial(c: &Rational, d: i64, prec: i64) -> Result<QLaurentSeries> {
    QLaurentSeries::one(prec - (-d).max(0)).div_binomial(c, d)
}

/// Compares two series on every exponent through the smaller precision.
pub fn equal_to_precision(a: &QLaurentSeries, b: &QLaurentSeries) -> Comparison {
    let p = a.prec.min(b.prec);
    let lo = a.val.min(b.val);
    for e in lo..=p {
        let (x, y) = (a.get(e), b.get(e));
        if x != y {
            return Comparison::FirstMismatch {
                exponent: e,
                lhs: x.clone(),
                rhs: y.clone(),
            };
        }
    }
    if p < a.val.max(b.val) {
        Comparison::InsufficientWindow
    } else {
        Comparison::Equal
    }
}

/// Sums `term(k)` for `k = start, start + 1, ...` through `prec`.
///
/// `term` may return `None` to skip an index. Summation stops once `guard`
/// consecutive terms vanish through `prec`; a hard cap of `10 (prec + 50)`
/// terms turns a non-settling sum into [`Error::DivergentFormalSum`].
pub fn sum_terms<F>(start: i64, prec: i64, guard: usize, mut term: F) -> Result<QLaurentSeries>
where
    F: FnMut(i64) -> Result<Option<QLaurentSeries>>,
{
    let cap = 10 * (prec.max(0) + 50);
    let mut acc = QLaurentSeries::zero(prec);
    let mut quiet = 0usize;
    for (count, k) in (start..).enumerate() {
        if count as i64 >= cap {
            return Err(Error::DivergentFormalSum { iterations: cap });
        }
        let Some(t) = term(k)? else { continue };
        if t.val > prec {
            quiet += 1;
        } else {
            quiet = 0;
            acc = acc.add(&t);
        }
        if quiet >= guard {
            return Ok(acc);
        }
    }
    unreachable!("unbounded index range")
}

pub(crate) fn fmt_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (i64, &'a Rational)>,
{
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let body = match e {
            0 => mag.to_string(),
            _ => {
                let qe = if e == 1 {
                    "q".to_string()
                } else {
                    format!("q^{e}")
                };
                if mag.is_one() {
                    qe
                } else {
                    format!("{mag}*{qe}")
                }
            }
        };
        f.write_str(&body)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for QLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms())?;
        write!(f, " + O(q^{})", self.prec + 1)
    }
}
