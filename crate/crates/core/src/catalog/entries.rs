//! Side evaluators and constraints for every catalog entry.

use num_traits::One;

use super::params::{ParamSet, ParamSpec};
use super::IdentityDescriptor;
use crate::error::Result;
use crate::qobjects::pochhammer_poly;
use crate::qobjects::{
    chain_sum, q_harmonic, qbinomial, shifted_lambert, sign, ChainKind, ChainSpec,
};
use crate::series::{
    int, sum_terms, LaurentPoly, QLaurentSeries, QMonomial, Rational, DEFAULT_GUARD,
};

type Check = std::result::Result<(), String>;

/// Stand-in for an unbounded index range in pole checks.
const OPEN: i64 = 1 << 40;

fn q() -> QMonomial {
    QMonomial::q_power(1)
}

fn one(w: i64) -> QLaurentSeries {
    QLaurentSeries::one(w)
}

fn tri(k: i64) -> i64 {
    k * (k + 1) / 2
}

fn unit() -> Rational {
    Rational::one()
}

/// Fails when `1 - a q^j` vanishes identically for some `j` in `lo..=hi`.
fn nonzero_factors(label: &str, a: &QMonomial, lo: i64, hi: i64) -> Check {
    match a.first_zero_factor(lo..=hi) {
        Some(j) => Err(format!(
            "{label} has the zero factor 1 - ({}) at j = {j}",
            a.shifted(j)
        )),
        None => Ok(()),
    }
}

fn needs_growth(name: &str, z: &QMonomial) -> Check {
    if z.exponent() < 1 {
        Err(format!("infinite sum requires s >= 1 for {name} = {z}"))
    } else {
        Ok(())
    }
}

/// `(q/z; q)_k z^k`-style leading factors: multiplies by `(a; q)_k z^k`.
fn poch_power(s: QLaurentSeries, a: &QMonomial, z: &QMonomial, k: i64) -> QLaurentSeries {
    s.mul_pochhammer(a, k).mul_monomial(&z.pow(k))
}

fn div_q_power(s: QLaurentSeries, k: i64, times: i64) -> Result<QLaurentSeries> {
    (0..times).try_fold(s, |acc, _| acc.div_binomial(&unit(), k))
}

// ---------------------------------------------------------------------------
// Classical sums

fn u81_lhs(_: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    sum_terms(1, w, DEFAULT_GUARD, |k| {
        let t = one(w)
            .shift(tri(k))
            .scale(&sign(k - 1))
            .div_pochhammer(&q(), k)?
            .div_binomial(&unit(), k)?;
        Ok(Some(t))
    })
}

fn divisor_series(_: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    shifted_lambert(&QMonomial::one(), 0, 1, None, None, w)
}

fn van_hamme_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let n = p.int("n")?;
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = one(w)
            .mul_poly(&qbinomial(n, k))
            .shift(tri(k))
            .scale(&sign(k - 1))
            .div_binomial(&unit(), k)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn van_hamme_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    Ok(q_harmonic(p.int("n")?, w))
}

fn uchimura_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m) = (p.int("n")?, p.int("m")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = one(w)
            .mul_poly(&qbinomial(n, k))
            .shift(tri(k))
            .scale(&sign(k - 1))
            .div_binomial(&unit(), k + m)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn uchimura_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m) = (p.int("n")?, p.int("m")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let inv = qbinomial(k + m, m).to_series(w).invert()?;
        let t = inv.shift(k).div_binomial(&unit(), k)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn dilcher_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m) = (p.int("n")?, p.int("m")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = one(w)
            .mul_poly(&qbinomial(n, k))
            .shift(k * (k - 1) / 2 + k * m)
            .scale(&sign(k - 1));
        acc = acc.add(&div_q_power(t, k, m)?);
    }
    Ok(acc)
}

/// Complete homogeneous sum `h_m(a_1, ..., a_n)` with `a_k = q^k/(1 - q^k)`.
fn dilcher_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m) = (p.int("n")?, p.int("m")?);
    let mut h: Vec<QLaurentSeries> = (0..=m)
        .map(|j| {
            if j == 0 {
                one(w)
            } else {
                QLaurentSeries::zero(w)
            }
        })
        .collect();
    for k in 1..=n {
        for j in 1..=m as usize {
            let step = h[j - 1].shift(k).div_binomial(&unit(), k)?;
            h[j] = h[j].add(&step);
        }
    }
    Ok(h.pop().expect("m >= 0"))
}

fn prodinger_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m) = (p.int("n")?, p.int("m")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in (0..=n).filter(|&k| k != m) {
        let t = one(w)
            .mul_poly(&qbinomial(n, k))
            .shift(tri(k))
            .scale(&sign(k - 1))
            .div_binomial(&unit(), k - m)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn prodinger_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m) = (p.int("n")?, p.int("m")?);
    let sum = shifted_lambert(&QMonomial::one(), m, 0, Some(n), Some(m), w)?;
    Ok(sum.mul_poly(&qbinomial(n, m)).shift(tri(m)).scale(&sign(m)))
}

// ---------------------------------------------------------------------------
// Interpolation family

fn thm1_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, l, m, z) = (p.int("n")?, p.int("l")?, p.int("m")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in (0..=n).filter(|&k| k != m) {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(1),
            z,
            k,
        )
        .mul_pochhammer(&z.shifted(-l), n - k)
        .div_binomial(&unit(), k - m)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn thm1_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, l, m, z) = (p.int("n")?, p.int("l")?, p.int("m")?, p.mono("z")?);
    let bracket = shifted_lambert(z, m, 0, Some(n - l - 1), None, w)?.sub(&shifted_lambert(
        &QMonomial::one(),
        m,
        0,
        Some(n),
        Some(m),
        w,
    )?);
    let prefactor = qbinomial(n, m)
        .mul(&pochhammer_poly(&z.shifted(-l), l))
        .mul(&pochhammer_poly(&z.shifted(-m), n - l))
        .shift(tri(m))
        .scale(&sign(m));
    Ok(bracket.mul_poly(&prefactor))
}

fn thm1_check(p: &ParamSet) -> Check {
    let (n, l, m) = (
        p.int("n").unwrap(),
        p.int("l").unwrap(),
        p.int("m").unwrap(),
    );
    let z = p.mono("z").unwrap();
    if m > n {
        return Err("m exceeds n".into());
    }
    if l > n {
        return Err("l exceeds n".into());
    }
    nonzero_factors("1 - z q^{k-m}, 0 <= k < n-l", &z.shifted(-m), 0, n - l - 1)
}

fn lagrange_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, l, x, z) = (p.int("n")?, p.int("l")?, p.mono("x")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 0..=n {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(1),
            z,
            k,
        )
        .mul_pochhammer(&z.shifted(-l), n - k)
        .div_binomial(x.coeff(), x.exponent() + k)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn lagrange_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, l, x, z) = (p.int("n")?, p.int("l")?, p.mono("x")?, p.mono("z")?);
    let num = pochhammer_poly(&q(), n)
        .mul(&pochhammer_poly(&x.mul(z), n - l))
        .mul(&pochhammer_poly(&z.shifted(-l), l));
    num.to_series(w).div_pochhammer(x, n + 1)
}

fn lagrange_check(p: &ParamSet) -> Check {
    nonzero_factors("(x;q)_{n+1}", p.mono("x").unwrap(), 0, p.int("n").unwrap())
}

fn ourdiv_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m, z) = (p.int("n")?, p.int("m")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in (0..=n).filter(|&k| k != m) {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(1),
            z,
            k,
        )
        .mul_pochhammer(z, n - k)
        .div_binomial(&unit(), k - m)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn ourdiv_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, m, z) = (p.int("n")?, p.int("m")?, p.mono("z")?);
    let bracket = shifted_lambert(z, m, 0, Some(n - 1), None, w)?.sub(&shifted_lambert(
        &QMonomial::one(),
        m,
        0,
        Some(n),
        Some(m),
        w,
    )?);
    let prefactor = qbinomial(n, m)
        .mul(&pochhammer_poly(&z.shifted(-m), n))
        .shift(tri(m))
        .scale(&sign(m));
    Ok(bracket.mul_poly(&prefactor))
}

fn ourdiv_check(p: &ParamSet) -> Check {
    let (n, m, z) = (
        p.int("n").unwrap(),
        p.int("m").unwrap(),
        p.mono("z").unwrap(),
    );
    nonzero_factors("1 - z q^{k-m}, 0 <= k < n", &z.shifted(-m), 0, n - 1)
}

fn ourinfty_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, z) = (p.int("m")?, p.mono("z")?);
    sum_terms(0, w, DEFAULT_GUARD, |k| {
        if k == m {
            return Ok(None);
        }
        let t = poch_power(one(w), &z.recip().shifted(1), z, k)
            .div_pochhammer(&q(), k)?
            .div_binomial(&unit(), k - m)?;
        Ok(Some(t))
    })
}

fn ourinfty_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, z) = (p.int("m")?, p.mono("z")?);
    let bracket = shifted_lambert(z, m, 0, None, None, w)?.sub(&shifted_lambert(
        &QMonomial::one(),
        m,
        0,
        None,
        Some(m),
        w,
    )?);
    bracket
        .mul_poly(&pochhammer_poly(&z.shifted(-m), m))
        .shift(tri(m))
        .scale(&sign(m))
        .div_pochhammer(&q(), m)
}

fn ourinfty_check(p: &ParamSet) -> Check {
    let (m, z) = (p.int("m").unwrap(), p.mono("z").unwrap());
    needs_growth("z", z)?;
    nonzero_factors("1 - z q^{k-m}, k >= 0", &z.shifted(-m), 0, OPEN)
}

fn ourinfty2_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let z = p.mono("z")?;
    sum_terms(1, w, DEFAULT_GUARD, |k| {
        let t = poch_power(one(w), &z.recip().shifted(1), z, k)
            .div_pochhammer(&q(), k)?
            .div_binomial(&unit(), k)?;
        Ok(Some(t))
    })
}

fn ourinfty2_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let z = p.mono("z")?;
    Ok(
        shifted_lambert(z, 0, 0, None, None, w)?.sub(&shifted_lambert(
            &QMonomial::one(),
            0,
            1,
            None,
            None,
            w,
        )?),
    )
}

fn ourinfty2_check(p: &ParamSet) -> Check {
    let z = p.mono("z").unwrap();
    needs_growth("z", z)?;
    nonzero_factors("1 - z q^k, k >= 0", z, 0, OPEN)
}

fn corteel_lovejoy_lhs(_: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let minus_one = QMonomial::constant(int(-1)).expect("nonzero");
    let minus_q = minus_one.shifted(1);
    sum_terms(1, w, DEFAULT_GUARD, |k| {
        let t = poch_power(one(w), &minus_one, &minus_q, k)
            .div_pochhammer(&q(), k)?
            .div_binomial(&unit(), k)?;
        Ok(Some(t))
    })
}

fn corteel_lovejoy_rhs(_: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let s = sum_terms(1, w, DEFAULT_GUARD, |k| {
        Ok(Some(
            one(w)
                .shift(k)
                .scale(&int(2))
                .div_binomial(&unit(), 2 * k)?,
        ))
    })?;
    Ok(s.neg())
}

fn cor_our_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, l, z) = (p.int("n")?, p.int("l")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(1),
            z,
            k,
        )
        .mul_pochhammer(&z.shifted(-l), n - k)
        .div_binomial(&unit(), k)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn cor_our_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, l, z) = (p.int("n")?, p.int("l")?, p.mono("z")?);
    let bracket = shifted_lambert(z, 1, 1, Some(n - l), None, w)?.sub(&q_harmonic(n, w));
    Ok(bracket.mul_poly(&pochhammer_poly(&z.shifted(-l), n)))
}

fn cor_our_check(p: &ParamSet) -> Check {
    let (n, l, z) = (
        p.int("n").unwrap(),
        p.int("l").unwrap(),
        p.mono("z").unwrap(),
    );
    nonzero_factors("1 - z q^{k-1}, 1 <= k <= n-l", &z.shifted(-1), 1, n - l)
}

fn cor1_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, z) = (p.int("n")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(1),
            z,
            k,
        )
        .mul_pochhammer(z, n - k)
        .div_binomial(&unit(), k)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// `sum_{k=1}^t q^k / ((1 - z q^{k-1}) (1 - q^k))`.
fn paired_lambert(z: &QMonomial, t: i64, w: i64) -> Result<QLaurentSeries> {
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=t {
        let term = one(w)
            .shift(k)
            .div_binomial(z.coeff(), z.exponent() + k - 1)?
            .div_binomial(&unit(), k)?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Carries the overall minus sign that the partial-fraction step produces.
fn cor1_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (n, z) = (p.int("n")?, p.mono("z")?);
    Ok(paired_lambert(z, n, w)?
        .mul_poly(&pochhammer_poly(&z.shifted(-1), n + 1))
        .neg())
}

fn cor1_check(p: &ParamSet) -> Check {
    let (n, z) = (p.int("n").unwrap(), p.mono("z").unwrap());
    nonzero_factors("1 - z q^{k-1}, 1 <= k <= n", &z.shifted(-1), 1, n)
}

// ---------------------------------------------------------------------------
// Chain-sum family

fn thm2_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, z) = (p.int("m")?, p.int("n")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(m),
            z,
            k,
        )
        .mul_pochhammer(z, n - k)
        .div_pochhammer(&z.shifted(-m), m + n)?;
        acc = acc.add(&div_q_power(t, k, m)?);
    }
    Ok(acc)
}

fn thm2_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, z) = (p.int("m")?, p.int("n")?, p.mono("z")?);
    chain_sum(
        &ChainSpec {
            depth: m,
            upper: Some(n),
            kind: ChainKind::Shifted,
        },
        z,
        w,
    )
}

fn shifted_chain_poles(z: &QMonomial, m: i64, n: i64) -> Check {
    for i in 1..=m {
        nonzero_factors("chain factor 1 - z q^{k_i - i}", &z.shifted(-i), 1, n)?;
    }
    Ok(())
}

fn thm2_check(p: &ParamSet) -> Check {
    let (m, n, z) = (
        p.int("m").unwrap(),
        p.int("n").unwrap(),
        p.mono("z").unwrap(),
    );
    nonzero_factors("(z q^{-m};q)_{m+n}", &z.shifted(-m), 0, m + n - 1)?;
    shifted_chain_poles(z, m, n)
}

fn thm4_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, z) = (p.int("m")?, p.int("n")?, p.mono("z")?);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = poch_power(
            one(w).mul_poly(&qbinomial(n, k)),
            &z.recip().shifted(m),
            z,
            k,
        )
        .mul_pochhammer(&z.shifted(-1), n - k)
        .div_pochhammer(&z.shifted(-m), n + m - 1)?;
        acc = acc.add(&div_q_power(t, k, m)?);
    }
    Ok(acc)
}

fn thm4_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, z) = (p.int("m")?, p.int("n")?, p.mono("z")?);
    chain_sum(
        &ChainSpec {
            depth: m,
            upper: Some(n),
            kind: ChainKind::LambertTail,
        },
        z,
        w,
    )
}

fn tail_chain_poles(z: &QMonomial, m: i64, n: i64) -> Check {
    for i in 1..m {
        nonzero_factors(
            "chain factor 1 - z q^{k_i - i - 1}",
            &z.shifted(-i - 1),
            1,
            n,
        )?;
    }
    nonzero_factors("tail factor 1 - z q^{k - m}", &z.shifted(-m), 1, n - 1)
}

fn thm4_check(p: &ParamSet) -> Check {
    let (m, n, z) = (
        p.int("m").unwrap(),
        p.int("n").unwrap(),
        p.mono("z").unwrap(),
    );
    nonzero_factors("(z q^{-m};q)_{n+m-1}", &z.shifted(-m), 0, n + m - 2)?;
    tail_chain_poles(z, m, n)
}

fn thm2_inf_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, z) = (p.int("m")?, p.mono("z")?);
    sum_terms(1, w, DEFAULT_GUARD, |k| {
        let t = poch_power(one(w), &z.recip().shifted(m), z, k)
            .div_pochhammer(&z.shifted(-m), m)?
            .div_pochhammer(&q(), k)?;
        div_q_power(t, k, m).map(Some)
    })
}

fn thm2_inf_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, z) = (p.int("m")?, p.mono("z")?);
    chain_sum(
        &ChainSpec {
            depth: m,
            upper: None,
            kind: ChainKind::Shifted,
        },
        z,
        w,
    )
}

fn thm2_inf_check(p: &ParamSet) -> Check {
    let (m, z) = (p.int("m").unwrap(), p.mono("z").unwrap());
    needs_growth("z", z)?;
    nonzero_factors("(z q^{-m};q)_m", &z.shifted(-m), 0, m - 1)?;
    shifted_chain_poles(z, m, OPEN)
}

fn thm4_inf_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, z) = (p.int("m")?, p.mono("z")?);
    sum_terms(1, w, DEFAULT_GUARD, |k| {
        let t = poch_power(one(w), &z.recip().shifted(m), z, k)
            .div_pochhammer(&z.shifted(-m), m - 1)?
            .div_pochhammer(&q(), k)?;
        div_q_power(t, k, m).map(Some)
    })
}

fn thm4_inf_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, z) = (p.int("m")?, p.mono("z")?);
    chain_sum(
        &ChainSpec {
            depth: m,
            upper: None,
            kind: ChainKind::LambertTail,
        },
        z,
        w,
    )
}

fn thm4_inf_check(p: &ParamSet) -> Check {
    let (m, z) = (p.int("m").unwrap(), p.mono("z").unwrap());
    needs_growth("z", z)?;
    nonzero_factors("(z q^{-m};q)_{m-1}", &z.shifted(-m), 0, m - 2)?;
    tail_chain_poles(z, m, OPEN)
}

// ---------------------------------------------------------------------------
// Symmetric family

fn guo_zeng_half(p: &ParamSet, m: i64, n: i64, w: i64) -> Result<QLaurentSeries> {
    let (x, y, v, z) = (p.mono("x")?, p.mono("y")?, p.mono("v")?, p.mono("z")?);
    let xyz = x.mul(y).mul(z);
    let mut acc = QLaurentSeries::zero(w);
    for k in 0..=n {
        let t = one(w)
            .mul_pochhammer(x, k)
            .mul_pochhammer(y, k)
            .mul_pochhammer(&v.shifted(m), k)
            .mul_pochhammer(z, n - k)
            .mul_monomial(&z.pow(k))
            .div_pochhammer(&q(), k)?
            .div_pochhammer(v, k)?
            .div_pochhammer(&xyz.shifted(m), k)?
            .div_pochhammer(&q(), n - k)?;
        acc = acc.add(&t);
    }
    acc.mul_pochhammer(&x.mul(z), m)
        .mul_pochhammer(&y.mul(z), m)
        .div_pochhammer(&q(), m)?
        .div_pochhammer(&xyz, m)
}

fn guo_zeng_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    guo_zeng_half(p, p.int("m")?, p.int("n")?, w)
}

fn guo_zeng_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    guo_zeng_half(p, p.int("n")?, p.int("m")?, w)
}

fn guo_zeng_check(p: &ParamSet) -> Check {
    let (m, n) = (p.int("m").unwrap(), p.int("n").unwrap());
    let (x, y, v, z) = (
        p.mono("x").unwrap(),
        p.mono("y").unwrap(),
        p.mono("v").unwrap(),
        p.mono("z").unwrap(),
    );
    let xyz = x.mul(y).mul(z);
    let top = m.max(n);
    nonzero_factors("(xyz;q)", &xyz, 0, top - 1)?;
    nonzero_factors("(v;q)_k", v, 0, top - 1)?;
    nonzero_factors("(xyz q^m;q)_k", &xyz.shifted(m), 0, n - 1)?;
    nonzero_factors("(xyz q^n;q)_k", &xyz.shifted(n), 0, m - 1)
}

/// The `v` factor of the symmetric sums: a value of `v`, its `v -> 0`
/// limit, or its `v -> infinity` limit `q^{mk}`.
#[derive(Clone, Copy)]
enum VFactor<'a> {
    Value(&'a QMonomial),
    Zero,
    Infinity,
}

/// `sum_{k=1}^n (q/z)_k (v q^m)_k (z)_{n-k} (X)_m z^k / ((q)_k (v)_k (q)_{n-k} (x q^k)_{m+1})`
/// where `X = xz` and `x` defaults to 1 (so the last factor is `(q^k)_{m+1}`).
fn symmetric_half(
    n: i64,
    m: i64,
    z: &QMonomial,
    x: Option<&QMonomial>,
    v: VFactor<'_>,
    w: i64,
) -> Result<QLaurentSeries> {
    let x1 = x.cloned().unwrap_or_else(QMonomial::one);
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let mut t = poch_power(one(w), &z.recip().shifted(1), z, k).mul_pochhammer(z, n - k);
        t = match v {
            VFactor::Value(v) => t.mul_pochhammer(&v.shifted(m), k).div_pochhammer(v, k)?,
            VFactor::Zero => t,
            VFactor::Infinity => t.shift(m * k),
        };
        t = t
            .div_pochhammer(&q(), k)?
            .div_pochhammer(&q(), n - k)?
            .div_pochhammer(&x1.shifted(k), m + 1)?;
        acc = acc.add(&t);
    }
    Ok(acc.mul_pochhammer(&x1.mul(z), m))
}

fn v_factor<'a>(p: &'a ParamSet, which: &str) -> Result<VFactor<'a>> {
    Ok(match which {
        "v0" => VFactor::Zero,
        "vinf" => VFactor::Infinity,
        _ => VFactor::Value(p.mono("v")?),
    })
}

fn symmetric_lhs(p: &ParamSet, w: i64, which: &str) -> Result<QLaurentSeries> {
    let (m, n, z) = (p.int("m")?, p.int("n")?, p.mono("z")?);
    let v = v_factor(p, which)?;
    Ok(symmetric_half(n, m, z, None, v, w)?.sub(&symmetric_half(m, n, z, None, v, w)?))
}

fn symmetric_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, z) = (p.int("m")?, p.int("n")?, p.mono("z")?);
    let bracket = paired_lambert(z, m, w)?.sub(&paired_lambert(z, n, w)?);
    let num = LaurentPoly::binomial(z.coeff(), z.exponent() - 1)
        .mul(&pochhammer_poly(z, m))
        .mul(&pochhammer_poly(z, n));
    bracket
        .mul_poly(&num)
        .div_pochhammer(&q(), m)?
        .div_pochhammer(&q(), n)
}

fn thm3_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    symmetric_lhs(p, w, "v")
}

fn cor_v0_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    symmetric_lhs(p, w, "v0")
}

fn cor_vinf_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    symmetric_lhs(p, w, "vinf")
}

fn symmetric_z_check(p: &ParamSet) -> Check {
    let (m, n, z) = (
        p.int("m").unwrap(),
        p.int("n").unwrap(),
        p.mono("z").unwrap(),
    );
    nonzero_factors("1 - z q^{k-1}", &z.shifted(-1), 1, m.max(n))
}

fn thm3_check(p: &ParamSet) -> Check {
    let (m, n, v) = (
        p.int("m").unwrap(),
        p.int("n").unwrap(),
        p.mono("v").unwrap(),
    );
    nonzero_factors("(v;q)_k", v, 0, m.max(n) - 1)?;
    symmetric_z_check(p)
}

fn newsym_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, x, v, z) = (
        p.int("m")?,
        p.int("n")?,
        p.mono("x")?,
        p.mono("v")?,
        p.mono("z")?,
    );
    let vf = VFactor::Value(v);
    Ok(symmetric_half(n, m, z, Some(x), vf, w)?.sub(&symmetric_half(m, n, z, Some(x), vf, w)?))
}

fn newsym_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n, x, z) = (p.int("m")?, p.int("n")?, p.mono("x")?, p.mono("z")?);
    let (xz, xq) = (x.mul(z), x.shifted(1));
    let term = |a: i64, b: i64| {
        pochhammer_poly(z, a)
            .mul(&pochhammer_poly(&q(), b))
            .mul(&pochhammer_poly(&xz, b))
            .mul(&pochhammer_poly(&xq, a))
    };
    let num = term(m, n).sub(&term(n, m));
    num.to_series(w)
        .div_pochhammer(&q(), m)?
        .div_pochhammer(&q(), n)?
        .div_pochhammer(&xq, m)?
        .div_pochhammer(&xq, n)?
        .div_binomial(x.coeff(), x.exponent())
}

fn newsym_check(p: &ParamSet) -> Check {
    let (m, n, x, v) = (
        p.int("m").unwrap(),
        p.int("n").unwrap(),
        p.mono("x").unwrap(),
        p.mono("v").unwrap(),
    );
    nonzero_factors("(x q^k;q)_{m+1}, 1 - x, (xq;q)", x, 0, m + n)?;
    nonzero_factors("(v;q)_k", v, 0, m.max(n) - 1)?;
    symmetric_z_check(p)
}

/// `sum_{k=1}^n (-1)^k q^{binom(k+1,2) + e(k)} / ((q)_k (q)_{n-k} (q^k)_{m+1})`.
fn signed_half(n: i64, m: i64, extra: impl Fn(i64) -> i64, w: i64) -> Result<QLaurentSeries> {
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=n {
        let t = one(w)
            .shift(tri(k) + extra(k))
            .scale(&sign(k))
            .div_pochhammer(&q(), k)?
            .div_pochhammer(&q(), n - k)?
            .div_pochhammer(&QMonomial::q_power(k), m + 1)?;
        acc = acc.add(&t);
    }
    Ok(acc)
}

fn cor001_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n) = (p.int("m")?, p.int("n")?);
    Ok(signed_half(n, m, |_| 0, w)?.sub(&signed_half(m, n, |_| 0, w)?))
}

fn cor002_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n) = (p.int("m")?, p.int("n")?);
    Ok(signed_half(n, m, |k| m * k, w)?.sub(&signed_half(m, n, |k| n * k, w)?))
}

fn qinv001_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n) = (p.int("m")?, p.int("n")?);
    Ok(signed_half(n, m, |k| (m - n) * k, w)?.sub(&signed_half(m, n, |k| (n - m) * k, w)?))
}

fn qinv002_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n) = (p.int("m")?, p.int("n")?);
    Ok(signed_half(n, m, |k| -n * k, w)?.sub(&signed_half(m, n, |k| -m * k, w)?))
}

fn harmonic_gap_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n) = (p.int("m")?, p.int("n")?);
    q_harmonic(m, w)
        .sub(&q_harmonic(n, w))
        .div_pochhammer(&q(), m)?
        .div_pochhammer(&q(), n)
}

/// `sum_{k=1}^t 1 / (1 - q^k)`.
fn reciprocal_sum(t: i64, w: i64) -> Result<QLaurentSeries> {
    let mut acc = QLaurentSeries::zero(w);
    for k in 1..=t {
        acc = acc.add(&one(w).div_binomial(&unit(), k)?);
    }
    Ok(acc)
}

fn reciprocal_gap_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let (m, n) = (p.int("m")?, p.int("n")?);
    reciprocal_sum(m, w)?
        .sub(&reciprocal_sum(n, w)?)
        .div_pochhammer(&q(), m)?
        .div_pochhammer(&q(), n)
}

fn gen_u81_head(m: i64, extra: i64, w: i64) -> Result<QLaurentSeries> {
    sum_terms(1, w, DEFAULT_GUARD, |k| {
        let t = one(w)
            .shift(tri(k) + extra * k)
            .scale(&sign(k - 1))
            .div_pochhammer(&q(), k)?
            .div_pochhammer(&QMonomial::q_power(k), m + 1)?;
        Ok(Some(t))
    })
}

fn gen_u81_a_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let m = p.int("m")?;
    let mut finite = QLaurentSeries::zero(w);
    for k in 1..=m {
        let t = one(w)
            .shift(tri(k))
            .scale(&sign(k - 1))
            .div_pochhammer(&q(), m - k)?
            .div_binomial(&unit(), k)?;
        finite = finite.add(&t);
    }
    Ok(gen_u81_head(m, 0, w)?.sub(&finite))
}

fn gen_u81_b_lhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let m = p.int("m")?;
    gen_u81_head(m, m, w)
}

fn gen_u81_rhs(p: &ParamSet, w: i64) -> Result<QLaurentSeries> {
    let m = p.int("m")?;
    shifted_lambert(&QMonomial::one(), 0, m + 1, None, None, w)?.div_pochhammer(&q(), m)
}

fn no_check(_: &ParamSet) -> Check {
    Ok(())
}

// ---------------------------------------------------------------------------

const N: ParamSpec = ParamSpec::int("n", 0);
const N1: ParamSpec = ParamSpec::int("n", 1);
const M0: ParamSpec = ParamSpec::int("m", 0);
const M1: ParamSpec = ParamSpec::int("m", 1);
const M_LE_N: ParamSpec = ParamSpec::int_le("m", 0, "n");
const L_LE_N: ParamSpec = ParamSpec::int_le("l", 0, "n");
const Z: ParamSpec = ParamSpec::mono("z");
const V: ParamSpec = ParamSpec::mono("v");
const X: ParamSpec = ParamSpec::mono("x");
const Y: ParamSpec = ParamSpec::mono("y");

const GROWTH: Option<&str> =
    Some("with z = c q^s and s >= 1 every factor (z - q^{j+a}) has valuation >= 1, so term k has valuation >= k");

pub(super) static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "cor001",
        name: "z -> 0 reduction of the v -> 0 symmetric sum",
        statement: "sum_{k=1}^n (-1)^k q^{C(k+1,2)}/((q)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (H_m(q) - H_n(q))/((q)_m (q)_n)",
        params: &[M0, N],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: cor001_lhs,
        rhs: harmonic_gap_rhs,
    },
    IdentityDescriptor {
        id: "cor002",
        name: "z -> 0 reduction of the v -> infinity symmetric sum",
        statement: "sum_{k=1}^n (-1)^k q^{mk+C(k+1,2)}/((q)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (H_m(q) - H_n(q))/((q)_m (q)_n)",
        params: &[M0, N],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: cor002_lhs,
        rhs: harmonic_gap_rhs,
    },
    IdentityDescriptor {
        id: "cor1",
        name: "Partial-fraction form of the l = 0 sum",
        statement: "sum_{k=1}^n [n,k] (q/z)_k (z)_{n-k} z^k/(1-q^k) = -(z/q)_{n+1} sum_{k=1}^n q^k/((1-zq^{k-1})(1-q^k))",
        params: &[N, Z],
        infinite: false,
        valuation_note: None,
        validate: cor1_check,
        lhs: cor1_lhs,
        rhs: cor1_rhs,
    },
    IdentityDescriptor {
        id: "cor_our",
        name: "m = 0 interpolation sum",
        statement: "sum_{k=1}^n [n,k] (q/z)_k (zq^{-l})_{n-k} z^k/(1-q^k) = (zq^{-l})_n (sum_{k=1}^{n-l} zq^{k-1}/(1-zq^{k-1}) - H_n(q))",
        params: &[N, L_LE_N, Z],
        infinite: false,
        valuation_note: None,
        validate: cor_our_check,
        lhs: cor_our_lhs,
        rhs: cor_our_rhs,
    },
    IdentityDescriptor {
        id: "cor_ourdiv",
        name: "l = 0 interpolation sum",
        statement: "sum_{k=0,k!=m}^n [n,k] (q/z)_k (z)_{n-k} z^k/(1-q^{k-m}) = (-1)^m q^{C(m+1,2)} [n,m] (zq^{-m})_n (sum_{k=0}^{n-1} zq^{k-m}/(1-zq^{k-m}) - sum_{k=0,k!=m}^n q^{k-m}/(1-q^{k-m}))",
        params: &[N, M_LE_N, Z],
        infinite: false,
        valuation_note: None,
        validate: ourdiv_check,
        lhs: ourdiv_lhs,
        rhs: ourdiv_rhs,
    },
    IdentityDescriptor {
        id: "cor_ourinfty",
        name: "n -> infinity interpolation sum",
        statement: "sum_{k>=0,k!=m} (q/z)_k z^k/((q)_k (1-q^{k-m})) = (-1)^m q^{C(m+1,2)} (zq^{-m})_m/(q)_m (sum_{k>=0} zq^{k-m}/(1-zq^{k-m}) - sum_{k>=0,k!=m} q^{k-m}/(1-q^{k-m}))",
        params: &[M0, Z],
        infinite: true,
        valuation_note: GROWTH,
        validate: ourinfty_check,
        lhs: ourinfty_lhs,
        rhs: ourinfty_rhs,
    },
    IdentityDescriptor {
        id: "cor_ourinfty2",
        name: "m = 0 infinite interpolation sum",
        statement: "sum_{k>=1} (q/z)_k z^k/((q)_k (1-q^k)) = sum_{k>=0} zq^k/(1-zq^k) - sum_{k>=1} q^k/(1-q^k)",
        params: &[Z],
        infinite: true,
        valuation_note: GROWTH,
        validate: ourinfty2_check,
        lhs: ourinfty2_lhs,
        rhs: ourinfty2_rhs,
    },
    IdentityDescriptor {
        id: "cor_v0",
        name: "v -> 0 symmetric sum",
        statement: "sum_{k=1}^n (q/z)_k (z)_{n-k} (z)_m z^k/((q)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (1-z/q)(z)_m (z)_n/((q)_m (q)_n) (S_m - S_n), S_t = sum_{k=1}^t q^k/((1-zq^{k-1})(1-q^k))",
        params: &[M0, N, Z],
        infinite: false,
        valuation_note: None,
        validate: symmetric_z_check,
        lhs: cor_v0_lhs,
        rhs: symmetric_rhs,
    },
    IdentityDescriptor {
        id: "cor_vinf",
        name: "v -> infinity symmetric sum",
        statement: "sum_{k=1}^n (q/z)_k (z)_{n-k} (z)_m q^{mk} z^k/((q)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (1-z/q)(z)_m (z)_n/((q)_m (q)_n) (S_m - S_n)",
        params: &[M0, N, Z],
        infinite: false,
        valuation_note: None,
        validate: symmetric_z_check,
        lhs: cor_vinf_lhs,
        rhs: symmetric_rhs,
    },
    IdentityDescriptor {
        id: "corteel_lovejoy",
        name: "Overpartition case z = -q",
        statement: "sum_{k>=1} (-1)_k (-q)^k/((q)_k (1-q^k)) = -sum_{k>=1} 2q^k/(1-q^{2k})",
        params: &[],
        infinite: true,
        valuation_note: Some("(-q)^k contributes valuation k"),
        validate: no_check,
        lhs: corteel_lovejoy_lhs,
        rhs: corteel_lovejoy_rhs,
    },
    IdentityDescriptor {
        id: "dilcher",
        name: "Dilcher's multiple sum",
        statement: "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2)+km}/(1-q^k)^m = sum_{1<=k_1<=...<=k_m<=n} prod_i q^{k_i}/(1-q^{k_i})",
        params: &[N1, M1],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: dilcher_lhs,
        rhs: dilcher_rhs,
    },
    IdentityDescriptor {
        id: "gen_u81_a",
        name: "First m-generalisation of the divisor series",
        statement: "sum_{k>=1} (-1)^{k-1} q^{C(k+1,2)}/((q)_k (q^k)_{m+1}) - sum_{k=1}^m (-1)^{k-1} q^{C(k+1,2)}/((q)_{m-k}(1-q^k)) = 1/(q)_m sum_{k>=m+1} q^k/(1-q^k)",
        params: &[M0],
        infinite: true,
        valuation_note: Some("term k has valuation C(k+1,2)"),
        validate: no_check,
        lhs: gen_u81_a_lhs,
        rhs: gen_u81_rhs,
    },
    IdentityDescriptor {
        id: "gen_u81_b",
        name: "Second m-generalisation of the divisor series",
        statement: "sum_{k>=1} (-1)^{k-1} q^{mk+C(k+1,2)}/((q)_k (q^k)_{m+1}) = 1/(q)_m sum_{k>=m+1} q^k/(1-q^k)",
        params: &[M0],
        infinite: true,
        valuation_note: Some("term k has valuation mk + C(k+1,2)"),
        validate: no_check,
        lhs: gen_u81_b_lhs,
        rhs: gen_u81_rhs,
    },
    IdentityDescriptor {
        id: "guo_zeng",
        name: "Six-parameter symmetric transformation",
        statement: "(xz,yz)_m/(q,xyz)_m sum_{k=0}^n (x,y,vq^m)_k (z)_{n-k} z^k/((q,v,xyzq^m)_k (q)_{n-k}) = [m<->n]",
        params: &[M0, N, X, Y, V, Z],
        infinite: false,
        valuation_note: None,
        validate: guo_zeng_check,
        lhs: guo_zeng_lhs,
        rhs: guo_zeng_rhs,
    },
    IdentityDescriptor {
        id: "lagrange_lemma",
        name: "Lagrange interpolation sum",
        statement: "sum_{k=0}^n [n,k] (q/z)_k (zq^{-l})_{n-k} z^k/(1-xq^k) = (q)_n (xz)_{n-l} (zq^{-l})_l/(x)_{n+1}",
        params: &[N, L_LE_N, X, Z],
        infinite: false,
        valuation_note: None,
        validate: lagrange_check,
        lhs: lagrange_lhs,
        rhs: lagrange_rhs,
    },
    IdentityDescriptor {
        id: "newsym",
        name: "Symmetric sum with y = q/z",
        statement: "sum_{k=1}^n (q/z)_k (vq^m)_k (z)_{n-k} (xz)_m z^k/((q)_k (v)_k (q)_{n-k} (xq^k)_{m+1}) - [m<->n] = ((z)_m (q)_n (xz)_n (xq)_m - (z)_n (q)_m (xz)_m (xq)_n)/((q)_m (q)_n (xq)_m (xq)_n (1-x))",
        params: &[M0, N, X, V, Z],
        infinite: false,
        valuation_note: None,
        validate: newsym_check,
        lhs: newsym_lhs,
        rhs: newsym_rhs,
    },
    IdentityDescriptor {
        id: "prodinger",
        name: "Prodinger's sum",
        statement: "sum_{k=0,k!=m}^n (-1)^{k-1} [n,k] q^{C(k+1,2)}/(1-q^{k-m}) = (-1)^m q^{C(m+1,2)} [n,m] sum_{k=0,k!=m}^n q^{k-m}/(1-q^{k-m})",
        params: &[N, M_LE_N],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: prodinger_lhs,
        rhs: prodinger_rhs,
    },
    IdentityDescriptor {
        id: "qinv001",
        name: "q -> 1/q form of cor001",
        statement: "sum_{k=1}^n (-1)^k q^{C(k+1,2)+(m-n)k}/((q)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (sum_{k=1}^m 1/(1-q^k) - sum_{k=1}^n 1/(1-q^k))/((q)_m (q)_n)",
        params: &[M0, N],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: qinv001_lhs,
        rhs: reciprocal_gap_rhs,
    },
    IdentityDescriptor {
        id: "qinv002",
        name: "q -> 1/q form of cor002",
        statement: "sum_{k=1}^n (-1)^k q^{C(k+1,2)-nk}/((q)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (sum_{k=1}^m 1/(1-q^k) - sum_{k=1}^n 1/(1-q^k))/((q)_m (q)_n)",
        params: &[M0, N],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: qinv002_lhs,
        rhs: reciprocal_gap_rhs,
    },
    IdentityDescriptor {
        id: "thm1",
        name: "Interpolation sum with two shifts",
        statement: "sum_{k=0,k!=m}^n [n,k] (q/z)_k (zq^{-l})_{n-k} z^k/(1-q^{k-m}) = (-1)^m q^{C(m+1,2)} [n,m] (zq^{-l})_l (zq^{-m})_{n-l} (sum_{k=0}^{n-l-1} zq^{k-m}/(1-zq^{k-m}) - sum_{k=0,k!=m}^n q^{k-m}/(1-q^{k-m}))",
        params: &[N, L_LE_N, M_LE_N, Z],
        infinite: false,
        valuation_note: None,
        validate: thm1_check,
        lhs: thm1_lhs,
        rhs: thm1_rhs,
    },
    IdentityDescriptor {
        id: "thm2",
        name: "Shifted multiple sum",
        statement: "sum_{k=1}^n [n,k] (q^m/z)_k (z)_{n-k} z^k/((zq^{-m})_{m+n} (1-q^k)^m) = -sum_{n>=k_1>=...>=k_m>=1} prod_i q^{k_i}/((1-zq^{k_i-i})(1-q^{k_i}))",
        params: &[M1, N1, Z],
        infinite: false,
        valuation_note: None,
        validate: thm2_check,
        lhs: thm2_lhs,
        rhs: thm2_rhs,
    },
    IdentityDescriptor {
        id: "thm2_inf",
        name: "Shifted multiple sum, n -> infinity",
        statement: "sum_{k>=1} (q^m/z)_k z^k/((zq^{-m})_m (q)_k (1-q^k)^m) = -sum_{k_1>=...>=k_m>=1} prod_i q^{k_i}/((1-zq^{k_i-i})(1-q^{k_i}))",
        params: &[M1, Z],
        infinite: true,
        valuation_note: GROWTH,
        validate: thm2_inf_check,
        lhs: thm2_inf_lhs,
        rhs: thm2_inf_rhs,
    },
    IdentityDescriptor {
        id: "thm3",
        name: "Symmetric sum",
        statement: "sum_{k=1}^n (q/z)_k (vq^m)_k (z)_{n-k} (z)_m z^k/((q)_k (v)_k (q)_{n-k} (q^k)_{m+1}) - [m<->n] = (1-z/q)(z)_m (z)_n/((q)_m (q)_n) (S_m - S_n)",
        params: &[M0, N, Z, V],
        infinite: false,
        valuation_note: None,
        validate: thm3_check,
        lhs: thm3_lhs,
        rhs: symmetric_rhs,
    },
    IdentityDescriptor {
        id: "thm4",
        name: "Multiple sum with Lambert tail",
        statement: "sum_{k=1}^n [n,k] (q^m/z)_k (z/q)_{n-k} z^k/((zq^{-m})_{n+m-1} (1-q^k)^m) = sum_{n>=k_1>=...>=k_{m-1}>=1} prod_{i<m} q^{k_i}/((1-zq^{k_i-i-1})(1-q^{k_i})) (sum_{k=1}^{k_{m-1}-1} zq^{k-m}/(1-zq^{k-m}) - sum_{k=1}^{k_{m-1}} q^k/(1-q^k))",
        params: &[M1, N1, Z],
        infinite: false,
        valuation_note: None,
        validate: thm4_check,
        lhs: thm4_lhs,
        rhs: thm4_rhs,
    },
    IdentityDescriptor {
        id: "thm4_inf",
        name: "Multiple sum with Lambert tail, n -> infinity",
        statement: "sum_{k>=1} (q^m/z)_k z^k/((zq^{-m})_{m-1} (q)_k (1-q^k)^m) = (chain with Lambert tail, n = infinity)",
        params: &[M1, Z],
        infinite: true,
        valuation_note: GROWTH,
        validate: thm4_inf_check,
        lhs: thm4_inf_lhs,
        rhs: thm4_inf_rhs,
    },
    IdentityDescriptor {
        id: "u81",
        name: "Uchimura's divisor series",
        statement: "sum_{k>=1} (-1)^{k-1} q^{C(k+1,2)}/((q)_k (1-q^k)) = sum_{k>=1} q^k/(1-q^k)",
        params: &[],
        infinite: true,
        valuation_note: Some("term k has valuation C(k+1,2); the Lambert term k has valuation k"),
        validate: no_check,
        lhs: u81_lhs,
        rhs: divisor_series,
    },
    IdentityDescriptor {
        id: "uchimura_m",
        name: "Uchimura's shifted finite sum",
        statement: "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k+1,2)}/(1-q^{k+m}) = sum_{k=1}^n q^k/(1-q^k) / [k+m,m]",
        params: &[N1, M0],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: uchimura_lhs,
        rhs: uchimura_rhs,
    },
    IdentityDescriptor {
        id: "van_hamme",
        name: "Van Hamme's finite sum",
        statement: "sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k+1,2)}/(1-q^k) = sum_{k=1}^n q^k/(1-q^k)",
        params: &[N1],
        infinite: false,
        valuation_note: None,
        validate: no_check,
        lhs: van_hamme_lhs,
        rhs: van_hamme_rhs,
    },
];
