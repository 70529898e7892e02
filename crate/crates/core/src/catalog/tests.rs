use super::*;
use crate::qobjects::odd_divisor_count;
use crate::series::{int, LaurentPoly, QLaurentSeries, QMonomial};

fn mono(s: &str) -> QMonomial {
    s.parse().unwrap()
}

fn params(ints: &[(&str, i64)], monos: &[(&str, &str)]) -> ParamSet {
    let mut p = ParamSet::new();
    for (n, v) in ints {
        p.set(n, ParamValue::Int(*v));
    }
    for (n, v) in monos {
        p.set(n, ParamValue::Monomial(mono(v)));
    }
    p
}

fn side(id: &str, s: Side, p: &ParamSet, prec: i64) -> QLaurentSeries {
    evaluate_side(id, s, p, prec).unwrap_or_else(|e| panic!("{id} {p}: {e}"))
}

fn geometric_tail(from: i64, prec: i64) -> QLaurentSeries {
    QLaurentSeries::from_terms((from..=prec).map(|e| (e, int(1))), prec)
}

#[test]
fn registry_is_sorted_and_complete() {
    let ids: Vec<_> = list_identities().into_iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), 28);
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for id in ["thm1", "thm2", "cor001", "u81", "gen_u81_b"] {
        assert!(ids.iter().any(|i| i == id), "{id}");
    }
    assert!(list_identities().iter().all(|s| !s.statement.is_empty()));
    assert!(registry()
        .iter()
        .filter(|d| d.infinite)
        .all(|d| d.valuation_note.is_some()));
    assert_eq!(list_identities(), list_identities());
}

#[test]
fn unknown_identity() {
    assert_eq!(
        validate_params("nope", &ParamSet::new()),
        Err(Error::UnknownIdentity("nope".into()))
    );
    assert_eq!(verify("nope", &ParamSet::new(), 10).status, Status::Skipped);
}

#[test]
fn validation_examples() {
    let v = validate_params(
        "thm1",
        &params(&[("n", 2), ("l", 0), ("m", 3)], &[("z", "2")]),
    )
    .unwrap();
    assert!(v.unwrap_err().contains("exceeds"));

    for m in 1..=3 {
        let z = format!("1*q^{m}");
        let v = validate_params("thm2", &params(&[("m", m), ("n", 2)], &[("z", &z)])).unwrap();
        assert!(v.unwrap_err().contains("zero factor"), "m = {m}");
    }

    let v = validate_params("cor_ourinfty", &params(&[("m", 1)], &[("z", "2")])).unwrap();
    assert!(v.unwrap_err().contains("requires s >= 1"));

    let v = validate_params("van_hamme", &params(&[("n", 0)], &[])).unwrap();
    assert!(v.is_err());
    let v = validate_params("van_hamme", &params(&[("n", 2), ("m", 1)], &[])).unwrap();
    assert!(v.unwrap_err().contains("unexpected"));
    let v = validate_params("thm1", &params(&[("n", 2), ("l", 0)], &[("z", "2")])).unwrap();
    assert!(v.unwrap_err().contains("missing"));
}

#[test]
fn van_hamme_single_term() {
    let lhs = side("van_hamme", Side::Lhs, &params(&[("n", 1)], &[]), 6);
    assert_eq!(lhs, geometric_tail(1, 6));
}

#[test]
fn thm2_smallest_case_cancels() {
    let p = params(&[("m", 1), ("n", 1)], &[("z", "2")]);
    let lhs = side("thm2", Side::Lhs, &p, 8);
    assert_eq!(lhs, geometric_tail(1, 8));
    assert_eq!(side("thm2", Side::Rhs, &p, 8), lhs);
}

#[test]
fn cor001_diagonal_rhs_vanishes() {
    let rhs = side("cor001", Side::Rhs, &params(&[("m", 2), ("n", 2)], &[]), 10);
    assert!(rhs.is_zero());
}

#[test]
fn verify_examples() {
    assert_eq!(
        verify("van_hamme", &params(&[("n", 4)], &[]), 20).status,
        Status::Pass
    );
    assert_eq!(
        verify("prodinger", &params(&[("n", 3), ("m", 3)], &[]), 20).status,
        Status::Pass
    );
    let r = verify("van_hamme", &params(&[("n", 4)], &[]), 20);
    assert!(r.first_mismatch.is_none() && r.skip_reason.is_none());
}

/// `-q^{m+1} / ((z q^{-m}; q)_{m+1} (1 - q)^{m+1})`, the common value of
/// both sides of `thm2` at depth `m + 1` and `n = 1`, built as a polynomial
/// and inverted once.
fn base_case(m: i64, z: &QMonomial, prec: i64) -> QLaurentSeries {
    let mut den = LaurentPoly::one();
    for j in 0..=m {
        den = den.mul(&LaurentPoly::binomial(z.coeff(), z.exponent() - m + j));
        den = den.mul(&LaurentPoly::binomial(&int(1), 1));
    }
    let w = prec + 2 * (m + 1);
    den.to_series(w)
        .invert()
        .unwrap()
        .shift(m + 1)
        .neg()
        .truncate(prec)
}

#[test]
fn thm2_base_case_closed_form() {
    for z in ["3*q^2", "-1*q^1", "1/2"] {
        let z = mono(z);
        for m in 0..=5 {
            let p = params(&[("m", m + 1), ("n", 1)], &[("z", &z.to_string())]);
            let expect = base_case(m, &z, 25);
            assert_eq!(side("thm2", Side::Lhs, &p, 25), expect, "lhs m={m} z={z}");
            assert_eq!(side("thm2", Side::Rhs, &p, 25), expect, "rhs m={m} z={z}");
            let r = verify("thm2", &p, 40);
            assert_eq!(r.status, Status::Pass, "m={m} z={z} {:?}", r.skip_reason);
        }
    }
}

#[test]
fn thm1_at_l_zero_matches_cor_ourdiv() {
    for n in 0..=3 {
        for m in 0..=n {
            for z in ["2", "-1*q^1", "1*q^2", "-1/2*q^1"] {
                let general = params(&[("n", n), ("l", 0), ("m", m)], &[("z", z)]);
                let special = params(&[("n", n), ("m", m)], &[("z", z)]);
                if validate_params("cor_ourdiv", &special).unwrap().is_err() {
                    continue;
                }
                for s in [Side::Lhs, Side::Rhs] {
                    assert_eq!(
                        side("thm1", s, &general, 30),
                        side("cor_ourdiv", s, &special, 30)
                    );
                }
            }
        }
    }
}

/// At `m = 0` both z -> 0 reductions become the finite sum of
/// `van_hamme` after scaling by `-(q;q)_n`.
#[test]
fn m_zero_collapse() {
    for n in 1..=4 {
        let vh = params(&[("n", n)], &[]);
        let poch = crate::qobjects::pochhammer_poly(&mono("1*q^1"), n);
        for id in ["cor001", "cor002"] {
            let p = params(&[("m", 0), ("n", n)], &[]);
            for s in [Side::Lhs, Side::Rhs] {
                let scaled = side(id, s, &p, 30).mul_poly(&poch).neg().truncate(30);
                assert_eq!(scaled, side("van_hamme", s, &vh, 30), "{id} n={n}");
            }
        }
    }
}

#[test]
fn swapping_m_and_n_negates() {
    for (id, z) in [("thm3", Some("1*q^1")), ("cor001", None), ("cor002", None)] {
        for (m, n) in [(0, 2), (1, 3), (2, 4)] {
            let build = |a, b| {
                let mut p = params(&[("m", a), ("n", b)], &[]);
                if let Some(z) = z {
                    p.set("z", ParamValue::Monomial(mono(z)));
                    p.set("v", ParamValue::Monomial(mono("3")));
                }
                p
            };
            for s in [Side::Lhs, Side::Rhs] {
                assert_eq!(
                    side(id, s, &build(m, n), 30),
                    side(id, s, &build(n, m), 30).neg(),
                    "{id}"
                );
            }
        }
    }
}

#[test]
fn corteel_lovejoy_counts_odd_divisors() {
    let prec = 60;
    let p = ParamSet::new();
    let lhs = side("corteel_lovejoy", Side::Lhs, &p, prec);
    let rhs = side("corteel_lovejoy", Side::Rhs, &p, prec);
    for e in 1..=prec {
        let want = int(-2 * odd_divisor_count(e as u64) as i64);
        assert_eq!(lhs.coeff(e).unwrap(), want, "lhs q^{e}");
        assert_eq!(rhs.coeff(e).unwrap(), want, "rhs q^{e}");
    }
}

/// Without the leading minus sign the partial-fraction form fails at n = 1.
#[test]
fn cor1_needs_the_minus_sign() {
    let p = params(&[("n", 1)], &[("z", "2")]);
    let lhs = side("cor1", Side::Lhs, &p, 20);
    let rhs = side("cor1", Side::Rhs, &p, 20);
    assert_eq!(lhs, rhs);
    assert_ne!(lhs, rhs.neg());
}

#[test]
fn suite_shape() {
    let suite = default_suite(2, 0);
    let thm1: Vec<_> = suite.iter().filter(|(id, _)| *id == "thm1").collect();
    // sum over n of (n+1)^2 choices of (l, m), times 8 z points
    assert_eq!(thm1.len(), (1 + 4 + 9) * 8);
    assert_eq!(
        suite
            .iter()
            .filter(|(id, _)| *id == "corteel_lovejoy")
            .count(),
        1
    );

    let infty: Vec<_> = suite
        .iter()
        .filter(|(id, _)| *id == "cor_ourinfty")
        .collect();
    let constant_z: Vec<_> = infty
        .iter()
        .filter(|(_, p)| p.mono("z").unwrap().exponent() == 0)
        .collect();
    assert!(!constant_z.is_empty());
    for (id, p) in constant_z {
        let r = verify(id, p, 30);
        assert_eq!(r.status, Status::Skipped);
        assert!(r.skip_reason.unwrap().contains("requires s >= 1"));
    }
}

#[test]
fn small_grid_is_sound() {
    for (id, p) in default_suite(1, 0) {
        let r = verify(id, &p, 20);
        assert_ne!(
            r.status,
            Status::Fail,
            "{id} {p}: {:?} {:?}",
            r.first_mismatch,
            r.detail
        );
        if r.status == Status::Skipped {
            assert!(r.skip_reason.is_some());
        }
    }
}

/// Individual terms of the q -> 1/q forms start at negative powers of q.
#[test]
fn q_inverted_forms_pass() {
    for id in ["qinv001", "qinv002"] {
        for (m, n) in [(0, 3), (2, 5), (4, 1), (3, 3)] {
            let r = verify(id, &params(&[("m", m), ("n", n)], &[]), 30);
            assert_eq!(r.status, Status::Pass, "{id} m={m} n={n}");
        }
    }
}

/// Depth-1 Lambert tail (`k_0 = n`): thm4 at m = 1 times `(z/q; q)_n` is
/// cor_our at l = 1.
#[test]
fn thm4_depth_one_matches_cor_our() {
    for n in 1..=4 {
        for z in ["2", "-1/2*q^1", "1*q^2", "-3"] {
            let z = mono(z);
            let p4 = params(&[("m", 1), ("n", n)], &[("z", &z.to_string())]);
            let pc = params(&[("n", n), ("l", 1)], &[("z", &z.to_string())]);
            if validate_params("thm4", &p4).unwrap().is_err()
                || validate_params("cor_our", &pc).unwrap().is_err()
            {
                continue;
            }
            let scale = crate::qobjects::pochhammer_poly(&z.shifted(-1), n);
            for s in [Side::Lhs, Side::Rhs] {
                let scaled = side("thm4", s, &p4, 40).mul_poly(&scale);
                let target = side("cor_our", s, &pc, 30);
                assert_eq!(
                    equal_to_precision_at(&scaled, &target, 30),
                    Ok(()),
                    "n={n} z={z} {s:?}"
                );
            }
        }
    }
}

fn equal_to_precision_at(a: &QLaurentSeries, b: &QLaurentSeries, prec: i64) -> Result<(), i64> {
    for e in a.val().min(b.val())..=prec {
        if a.coeff(e).unwrap() != b.coeff(e).unwrap() {
            return Err(e);
        }
    }
    Ok(())
}
