use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{QLaurentSeries, Rational};
use crate::error::{Error, Result};

/// A substitution value `c * q^s` with `c != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMonomial {
    c: Rational,
    s: i64,
}

impl QMonomial {
    pub fn new(c: Rational, s: i64) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroMonomial);
        }
        Ok(Self { c, s })
    }

    pub fn constant(c: Rational) -> Result<Self> {
        Self::new(c, 0)
    }

    /// `q^s`.
    pub fn q_power(s: i64) -> Self {
        Self {
            c: Rational::one(),
            s,
        }
    }

    pub fn one() -> Self {
        Self::q_power(0)
    }

    pub fn coeff(&self) -> &Rational {
        &self.c
    }

    pub fn exponent(&self) -> i64 {
        self.s
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        QMonomial {
            c: &self.c * &other.c,
            s: self.s + other.s,
        }
    }

    pub fn recip(&self) -> QMonomial {
        QMonomial {
            c: self.c.recip(),
            s: -self.s,
        }
    }

    /// Multiply by `q^t`.
    pub fn shifted(&self, t: i64) -> QMonomial {
        QMonomial {
            c: self.c.clone(),
            s: self.s + t,
        }
    }

    pub fn scaled(&self, k: &Rational) -> Result<QMonomial> {
        QMonomial::new(&self.c * k, self.s)
    }

    /// `(c q^s)^k = c^k q^{ks}`, negative `k` allowed.
    pub fn pow(&self, k: i64) -> QMonomial {
        let c = if k >= 0 {
            num_traits::pow(self.c.clone(), k as usize)
        } else {
            num_traits::pow(self.c.recip(), (-k) as usize)
        };
        QMonomial { c, s: self.s * k }
    }

    /// True when `1 - self * q^j` is the zero constant.
    pub fn vanishes_at(&self, j: i64) -> bool {
        self.c.is_one() && self.s + j == 0
    }

    /// First `j` in `range` for which `1 - self * q^j` is identically zero.
    pub fn first_zero_factor(&self, range: std::ops::RangeInclusive<i64>) -> Option<i64> {
        if !self.c.is_one() {
            return None;
        }
        let j = -self.s;
        range.contains(&j).then_some(j)
    }

    pub fn to_series(&self, prec: i64) -> QLaurentSeries {
        QLaurentSeries::from_monomial(self, prec)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 0 {
            write!(f, "{}", self.c)
        } else {
            write!(f, "{}*q^{}", self.c, self.s)
        }
    }
}

/// Parses `C` or `C*q^S` where `C` is `p` or `p/q`.
impl FromStr for QMonomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::ParseMonomial(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (c, s) = match compact.split_once('*') {
            Some((c, rest)) => {
                let exp = rest.strip_prefix("q^").ok_or_else(bad)?;
                (c, exp.parse::<i64>().map_err(|_| bad())?)
            }
            None => (compact.as_str(), 0),
        };
        let c: Rational = c.parse().map_err(|_| bad())?;
        QMonomial::new(c, s).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn parses_literals() {
        let m: QMonomial = "-1*q^1".parse().unwrap();
        assert_eq!(m, QMonomial::new(rat(-1, 1), 1).unwrap());
        let h: QMonomial = "1/2".parse().unwrap();
        assert_eq!(h, QMonomial::constant(rat(1, 2)).unwrap());
        let n: QMonomial = "-3/4*q^-2".parse().unwrap();
        assert_eq!(n, QMonomial::new(rat(-3, 4), -2).unwrap());
        assert!("0".parse::<QMonomial>().is_err());
        assert!("2*x^3".parse::<QMonomial>().is_err());
        assert!("1/0".parse::<QMonomial>().is_err());
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(QMonomial::new(rat(-1, 1), 1).unwrap().to_string(), "-1*q^1");
        assert_eq!(QMonomial::constant(rat(2, 4)).unwrap().to_string(), "1/2");
    }

    #[test]
    fn power_and_recip() {
        let z = QMonomial::new(rat(-1, 2), 1).unwrap();
        assert_eq!(z.pow(3), QMonomial::new(rat(-1, 8), 3).unwrap());
        assert_eq!(z.pow(-2), QMonomial::new(rat(4, 1), -2).unwrap());
        assert_eq!(z.mul(&z.recip()), QMonomial::one());
    }

    proptest::proptest! {
        #[test]
        fn parse_render_round_trip(p in -50i64..50, d in 1i64..20, s in -20i64..20) {
            proptest::prop_assume!(p != 0);
            let m = QMonomial::new(rat(p, d), s).unwrap();
            let back: QMonomial = m.to_string().parse().unwrap();
            proptest::prop_assert_eq!(back, m);
        }
    }
}
