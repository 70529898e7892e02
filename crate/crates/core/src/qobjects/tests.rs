use proptest::prelude::*;

use super::*;
use crate::series::{equal_to_precision, invert_binomial, rat, Comparison};

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
}

fn mono(c: Rational, s: i64) -> QMonomial {
    QMonomial::new(c, s).unwrap()
}

fn same(a: &QLaurentSeries, b: &QLaurentSeries) -> bool {
    !matches!(equal_to_precision(a, b), Comparison::FirstMismatch { .. })
}

#[test]
fn pochhammer_examples() {
    let p = pochhammer_poly(&QMonomial::q_power(1), 3);
    assert_eq!(
        p,
        poly(&[(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)])
    );
    assert_eq!(pochhammer_poly(&mono(rat(7, 3), -4), 0), LaurentPoly::one());
    let p = pochhammer_poly(&QMonomial::q_power(-2), 2);
    // (1 - q^-2)(1 - q^-1) = 1 - q^-1 - q^-2 + q^-3
    assert_eq!(p, poly(&[(-3, 1), (-2, -1), (-1, -1), (0, 1)]));
    assert_eq!(p.val(), Some(-3));
}

#[test]
fn windowed_pochhammer_keeps_low_exponents() {
    // Large exponents combined with negative ones must still land in the window.
    let a = QMonomial::q_power(-5);
    for n in 0..12 {
        let exact = pochhammer_poly(&a, n).to_series(3);
        assert_eq!(pochhammer(&a, n, 3), exact);
    }
    let a = QMonomial::q_power(1);
    assert_eq!(
        pochhammer(&a, 40, 10),
        pochhammer_poly(&a, 40).to_series(10)
    );
}

#[test]
fn qbinomial_examples() {
    assert_eq!(
        qbinomial(4, 2),
        poly(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
    );
    for n in 0..6 {
        assert_eq!(qbinomial(n, 0), LaurentPoly::one());
    }
    assert!(qbinomial(3, 5).is_zero());
    assert!(qbinomial(3, -1).is_zero());
}

#[test]
fn qbinomial_pascal_recurrence() {
    for n in 1..=12 {
        for k in 0..=n {
            let rhs = qbinomial(n - 1, k - 1).add(&qbinomial(n - 1, k).shift(k));
            assert_eq!(qbinomial(n, k), rhs, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn qbinomial_sign_relation() {
    let q = QMonomial::q_power(1);
    for n in 0..=8 {
        for m in 0..=n {
            let lhs = pochhammer_poly(&q, n);
            let rhs = qbinomial(n, m)
                .mul(&pochhammer_poly(&QMonomial::q_power(-m), m))
                .mul(&pochhammer_poly(&q, n - m))
                .shift(m * (m + 1) / 2)
                .scale(&sign(m));
            assert_eq!(lhs, rhs, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn q_harmonic_examples() {
    assert!(q_harmonic(0, 10).is_zero());
    let h = q_harmonic(2, 5);
    let expected = poly(&[(1, 1), (2, 2), (3, 1), (4, 2), (5, 1)]).to_series(5);
    assert_eq!(h, expected);
    let inf = shifted_lambert(&QMonomial::one(), 0, 1, None, None, 6).unwrap();
    assert_eq!(inf.coeff(6).unwrap(), int(4));
}

#[test]
fn q_harmonic_counts_bounded_divisors() {
    for n in 0..=10 {
        let h = q_harmonic(n, 60);
        for j in 1..=60 {
            let oracle = (1..=n).filter(|d| j % d == 0).count() as i64;
            assert_eq!(h.coeff(j).unwrap(), int(oracle), "n = {n}, j = {j}");
        }
    }
}

#[test]
fn shifted_lambert_examples() {
    let s = shifted_lambert(&QMonomial::q_power(1), 0, 1, Some(1), None, 4).unwrap();
    assert_eq!(s, poly(&[(2, 1), (4, 1)]).to_series(4));
    let err = shifted_lambert(&QMonomial::one(), 1, 0, Some(3), None, 4).unwrap_err();
    assert!(matches!(err, Error::PoleInRange { k: 1, .. }));
    // Excluding the offending index removes the pole.
    assert!(shifted_lambert(&QMonomial::one(), 1, 0, Some(3), Some(1), 4).is_ok());
    let s = shifted_lambert(&mono(int(-1), 1), 0, 0, None, None, 3).unwrap();
    assert_eq!(s, poly(&[(1, -1), (3, -2)]).to_series(3));
}

#[test]
fn partial_fraction_relation() {
    let mut rng_state = 0x2545_f491_u64;
    let mut next = |m: u64| {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        rng_state % m
    };
    let mut checked = 0;
    while checked < 20 {
        let c = rat(next(9) as i64 - 4, next(4) as i64 + 1);
        let s = next(7) as i64 - 3;
        let k = next(6) as i64 + 1;
        if c == int(0) || (c == int(1) && (s + k - 1 == 0 || s == 1)) {
            continue;
        }
        let z = mono(c, s);
        let prec = 40;
        let lhs = shifted_lambert(&z, 1, k, Some(k), None, prec)
            .unwrap()
            .sub(&shifted_lambert(&QMonomial::one(), 0, k, Some(k), None, prec).unwrap());
        let w = z.shifted(k - 1);
        let rhs = LaurentPoly::binomial(z.coeff(), z.exponent() - 1)
            .to_series(prec + 20)
            .mul(&invert_binomial(w.coeff(), w.exponent(), prec + 20).unwrap())
            .mul(&invert_binomial(&int(1), k, prec + 20).unwrap())
            .shift(k)
            .neg();
        assert_eq!(
            equal_to_precision(&lhs, &rhs),
            Comparison::Equal,
            "z = {z}, k = {k}"
        );
        checked += 1;
    }
}

/// Enumerates every weakly decreasing chain and multiplies level factors
/// through generic inversion.
fn naive_chain(spec: &ChainSpec, z: &QMonomial, prec: i64) -> Result<QLaurentSeries> {
    let n = spec.upper.unwrap();
    let w = prec + 5;
    let factor = |level: i64, k: i64| -> Result<QLaurentSeries> {
        let zz = z.shifted(k + spec.level_offset(level));
        let a = invert_binomial(zz.coeff(), zz.exponent(), w).map_err(|_| Error::PoleInRange {
            k,
            factor: String::new(),
        })?;
        Ok(a.mul(&invert_binomial(&int(1), k, w)?).shift(k))
    };
    let outer = match spec.kind {
        ChainKind::Shifted => spec.depth,
        ChainKind::LambertTail => spec.depth - 1,
    };
    let mut chains: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..outer {
        chains = chains
            .into_iter()
            .flat_map(|c| {
                let top = c.last().copied().unwrap_or(n);
                (1..=top).map(move |k| {
                    let mut c = c.clone();
                    c.push(k);
                    c
                })
            })
            .collect();
    }
    let mut total = QLaurentSeries::zero(w);
    for chain in chains {
        let mut prod = QLaurentSeries::one(w);
        for (i, &k) in chain.iter().enumerate() {
            prod = prod.mul(&factor(i as i64 + 1, k)?);
        }
        if spec.kind == ChainKind::LambertTail {
            let top = chain.last().copied().unwrap_or(n);
            let mut tail = QLaurentSeries::zero(w);
            for u in 1..top {
                let zz = z.shifted(u - spec.depth);
                let t = invert_binomial(zz.coeff(), zz.exponent(), w)
                    .map_err(|_| Error::PoleInRange {
                        k: u,
                        factor: String::new(),
                    })?
                    .mul(&QLaurentSeries::from_monomial(&zz, w));
                tail = tail.add(&t);
            }
            for u in 1..=top {
                tail = tail.sub(&invert_binomial(&int(1), u, w)?.shift(u));
            }
            prod = prod.mul(&tail);
        }
        total = total.add(&prod);
    }
    Ok(match spec.kind {
        ChainKind::Shifted => total.neg(),
        ChainKind::LambertTail => total,
    })
}

#[test]
fn chain_dp_matches_naive_enumeration() {
    let zs = [
        mono(int(2), 0),
        mono(rat(1, 2), 0),
        mono(int(-1), 1),
        QMonomial::q_power(2),
    ];
    for kind in [ChainKind::Shifted, ChainKind::LambertTail] {
        for depth in 1..=3 {
            for n in 1..=4 {
                for z in &zs {
                    let spec = ChainSpec {
                        depth,
                        upper: Some(n),
                        kind,
                    };
                    let dp = chain_sum(&spec, z, 25);
                    let naive = naive_chain(&spec, z, 25);
                    match (dp, naive) {
                        (Ok(a), Ok(b)) => {
                            assert!(a.prec() >= 25, "{spec:?} {z}");
                            assert_eq!(
                                equal_to_precision(&a, &b.truncate(25)),
                                Comparison::Equal,
                                "{spec:?} {z}"
                            );
                        }
                        (Err(_), Err(_)) => {}
                        (a, b) => panic!("{spec:?} {z}: {a:?} vs {b:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn chain_examples() {
    let spec = ChainSpec {
        depth: 1,
        upper: Some(1),
        kind: ChainKind::Shifted,
    };
    let got = chain_sum(&spec, &mono(int(2), 0), 10).unwrap();
    assert_eq!(got, invert_binomial(&int(1), 1, 9).unwrap().shift(1));

    // n = 1 collapses to -q^d / ((z q^{1-d}; q)_d (1 - q)^d).
    for z in [mono(int(3), 2), mono(int(-1), 1), mono(rat(1, 2), 0)] {
        for depth in 1..=5 {
            let spec = ChainSpec {
                depth,
                upper: Some(1),
                kind: ChainKind::Shifted,
            };
            let got = chain_sum(&spec, &z, 25).unwrap();
            let expected = QLaurentSeries::one(40)
                .shift(depth)
                .div_pochhammer(&z.shifted(1 - depth), depth)
                .unwrap()
                .div_pochhammer(&QMonomial::q_power(1), 1)
                .and_then(|s| (1..depth).try_fold(s, |s, _| s.div_binomial(&int(1), 1)))
                .unwrap()
                .neg();
            assert_eq!(
                equal_to_precision(&got, &expected.truncate(25)),
                Comparison::Equal
            );
        }
    }

    let spec = ChainSpec {
        depth: 1,
        upper: Some(2),
        kind: ChainKind::LambertTail,
    };
    let got = chain_sum(&spec, &QMonomial::q_power(1), 8).unwrap();
    assert_eq!(
        got,
        poly(&[(2, -1), (4, -1), (6, -1), (8, -1)]).to_series(8)
    );
}

#[test]
fn infinite_chain_settles() {
    let z = mono(int(3), 2);
    let spec = ChainSpec {
        depth: 2,
        upper: None,
        kind: ChainKind::Shifted,
    };
    let inf = chain_sum(&spec, &z, 20).unwrap();
    let finite = chain_sum(
        &ChainSpec {
            upper: Some(25),
            ..spec
        },
        &z,
        20,
    )
    .unwrap();
    assert!(same(&inf, &finite));
    assert!(inf.prec() >= 20);
}

#[test]
fn chain_pole_is_reported() {
    let spec = ChainSpec {
        depth: 2,
        upper: Some(3),
        kind: ChainKind::Shifted,
    };
    let err = chain_sum(&spec, &QMonomial::one(), 10).unwrap_err();
    assert!(matches!(err, Error::PoleInRange { .. }));
}

#[test]
fn divisor_counts() {
    assert_eq!(divisor_count(1), 1);
    assert_eq!(divisor_count(6), 4);
    assert_eq!(divisor_count(36), 9);
    assert_eq!(odd_divisor_count(6), 2);
    assert_eq!(odd_divisor_count(1), 1);
    for n in 1..=300u64 {
        assert_eq!(
            divisor_count(n),
            (1..=n).filter(|d| n % d == 0).count() as u64
        );
    }
}

proptest! {
    #[test]
    fn pochhammer_window_is_exact_polynomial_window(c in -3i64..4, s in -4i64..4, n in 0i64..8, prec in -6i64..12) {
        prop_assume!(c != 0);
        let a = mono(int(c), s);
        prop_assert_eq!(pochhammer(&a, n, prec), pochhammer_poly(&a, n).to_series(prec));
    }
}
