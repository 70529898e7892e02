use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Direct enumeration of `1 <= k_m <= ... <= k_1 <= n`.
fn naive_chain(n: i64, weights: &[Vec<Rational>]) -> Rational {
    fn go(top: i64, weights: &[Vec<Rational>]) -> Rational {
        match weights.split_first() {
            None => Rational::one(),
            Some((w, rest)) => (1..=top).map(|k| &w[k as usize - 1] * go(k, rest)).sum(),
        }
    }
    go(n, weights)
}

fn pass(o: Result<CheckOutcome>) {
    assert_eq!(o.unwrap(), CheckOutcome::Pass);
}

#[test]
fn harmonic_numbers() {
    assert_eq!(harmonic(0), int(0));
    assert_eq!(harmonic(3), rat(11, 6));
    assert_eq!(harmonic(10), rat(7381, 2520));
}

#[test]
fn binomials_and_rising() {
    assert_eq!(binomial(10, 3), int(120));
    assert_eq!(binomial(4, 5), int(0));
    assert_eq!(rising(&rat(1, 2), 3), rat(15, 8));
    assert_eq!(rising(&int(7), 0), int(1));
}

#[test]
fn trigo_cases() {
    for n in 1..=15 {
        pass(check_trigo(n));
    }
    let n3: Rational = int(3) - rat(3, 2) + rat(1, 3);
    assert_eq!(n3, harmonic(3));
}

#[test]
fn dilcher_noq_cases() {
    // m = 2, n = 2: 2 - 1/4 on the left, 1 + 1/2 + 1/4 on the right
    assert_eq!(reciprocal_powers(2, 2), rat(7, 4));
    pass(check_dilcher_noq(2, 2));
    pass(check_dilcher_noq(1, 3));
    pass(check_dilcher_noq(3, 4));
    let w: Vec<Rational> = (1..=4).map(|k| rat(1, k)).collect();
    assert_eq!(naive_chain(4, &vec![w; 3]), reciprocal_powers(4, 3));
}

#[test]
fn multi_noq_cases() {
    pass(check_multi_noq(1, 2, &rat(7, 2)));
    pass(check_multi_noq(1, 1, &int(5)));
    // single term: (1-5)/((4)(5)) = -1/5 against -1/(1*5)
    let lhs = rising(&int(-4), 1) / rising(&int(4), 2);
    assert_eq!(lhs, rat(-1, 5));
    assert!(matches!(
        check_multi_noq(2, 2, &int(2)),
        Err(Error::PoleAtX(_))
    ));
    for x in x_points() {
        for m in 1..=4 {
            for n in 1..=4 {
                pass(check_multi_noq(m, n, &x));
            }
        }
    }
}

#[test]
fn xm_limit_cases() {
    for (m, n) in [(1, 1), (2, 2), (3, 3), (4, 2), (1, 5)] {
        pass(check_multi_noq_xm_limit(m, n));
    }
}

#[test]
fn dilch2_noq_cases() {
    pass(check_dilch2_noq(1, 2, &rat(9, 2)));
    pass(check_dilch2_noq(2, 2, &rat(11, 3)));
    assert!(matches!(
        check_dilch2_noq(2, 3, &int(2)),
        Err(Error::PoleAtX(_))
    ));
    for x in x_points() {
        for m in 1..=4 {
            for n in 1..=4 {
                pass(check_dilch2_noq(m, n, &x));
            }
        }
    }
}

/// With `k_0 := n` the depth-1 reading agrees with the explicit `m = 1` sum.
#[test]
fn dilch2_noq_depth_one_reading() {
    let x = rat(9, 2);
    let n = 3;
    let lhs: Rational = (1..=n)
        .map(|k| {
            binomial(n, k) * rising(&(int(1) - &x), k) * rising(&(&x - int(1)), n - k) / int(k)
        })
        .sum::<Rational>()
        / rising(&(&x - int(1)), n);
    let tail: Rational = (1..n).map(|j| (&x + int(j - 1)).recip()).sum::<Rational>() - harmonic(n);
    assert_eq!(lhs, tail);
}

#[test]
fn zeng_key_cases() {
    pass(check_zeng_key(&[int(1), int(2)], 1));
    pass(check_zeng_key(&[rat(3, 7)], 5));
    pass(check_zeng_key(&[int(1), int(2), int(3)], 3));
    // h_3(1,2,3) by listing all ten multisets
    let mut h3 = 0;
    for i in 1..=3 {
        for j in i..=3 {
            for k in j..=3 {
                h3 += i * j * k;
            }
        }
    }
    assert_eq!(h3, 90);
    assert_eq!(
        check_zeng_key(&[int(1), int(1)], 2),
        Err(Error::DuplicateValues)
    );
    assert_eq!(
        check_zeng_key(&[int(0), int(1)], 2),
        Err(Error::DuplicateValues)
    );
    for a in zeng_tuples() {
        for m in 1..=4 {
            pass(check_zeng_key(&a, m));
        }
    }
}

#[test]
fn chain_dp_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let x = rat(rng.gen_range(-40..40), rng.gen_range(1..9));
        for m in 1..=3 {
            for n in 1..=5 {
                let w: Vec<Vec<Rational>> = (1..=m)
                    .map(|i| (1..=n).map(|k| &x + int(k * i) + rat(1, k)).collect())
                    .collect();
                assert_eq!(chain_sum(n, &w), naive_chain(n, &w), "m={m} n={n} x={x}");
            }
        }
    }
    assert_eq!(chain_sum(3, &[]), int(1));
}

#[test]
fn suite_passes() {
    let suite = rational_suite(4);
    assert!(suite.len() > 200);
    for case in &suite {
        assert!(
            !matches!(case.outcome(), CheckOutcome::Fail { .. }),
            "{} {case}",
            case.id()
        );
    }
}
