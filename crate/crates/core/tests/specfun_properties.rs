mod common;

use std::f64::consts::PI;

use common::*;
use lerchlab::specfun::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn unit(num: i64, den: i64) -> Complex64 {
    RationalAngle::new(num, den).unwrap().to_complex()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn direct_series_matches_integral_rep(
        zr in 0.0f64..0.8, zarg in -PI..PI,
        s_re in -6.0f64..6.0, s_im in -3.0f64..3.0,
        v_re in 0.2f64..3.0, v_im in -1.0f64..1.0,
    ) {
        prop_assume!(c(s_re, s_im).norm() <= 6.0);
        let z = Complex64::from_polar(zr, zarg);
        let (s, v) = (c(s_re, s_im), c(v_re, v_im));
        let a = lerch_phi(z, s, v, Some(LerchStrategy::DirectSeries)).unwrap();
        let b = lerch_phi(z, s, v, Some(LerchStrategy::IntegralRep)).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * a.norm().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn root_of_unity_matches_accelerated_series(
        num in 1i64..12, den in 2i64..13, s_re in 1.2f64..4.0, s_im in -2.0f64..2.0, v in 0.3f64..3.0,
    ) {
        let angle = RationalAngle::new(num, den).unwrap();
        let z = angle.to_complex();
        prop_assume!((1.0 - z).norm() > 0.5);
        let s = c(s_re, s_im);
        let a = lerch_phi(z, s, real(v), Some(LerchStrategy::RootOfUnityHurwitz)).unwrap();
        let b = accelerated_series(z, |n| (-s * (v + n as f64).ln()).exp(), 4000, 10);
        prop_assert!((a - b).norm() <= 1e-9 * b.norm().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn root_of_unity_matches_integral_rep(
        num in 1i64..12, den in 2i64..13, s_re in -3.0f64..5.0, s_im in -2.0f64..2.0, v in 0.3f64..3.0,
    ) {
        let z = RationalAngle::new(num, den).unwrap().to_complex();
        prop_assume!(z != real(1.0));
        let s = c(s_re, s_im);
        let a = lerch_phi(z, s, real(v), Some(LerchStrategy::RootOfUnityHurwitz)).unwrap();
        let b = lerch_phi(z, s, real(v), Some(LerchStrategy::IntegralRep)).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * b.norm().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn hurwitz_s_derivative_matches_central_difference(s_re in -4.0f64..6.0, s_im in -3.0f64..3.0, v in 0.2f64..3.0) {
        let s = c(s_re, s_im);
        prop_assume!((s - 1.0).norm() > 0.3);
        let h = 1e-5;
        let fd = (hurwitz_zeta(s + h, real(v)).unwrap() - hurwitz_zeta(s - h, real(v)).unwrap()) / (2.0 * h);
        let d = hurwitz_zeta_sderiv(s, real(v)).unwrap();
        prop_assert!((fd - d).norm() <= 1e-6 * d.norm().max(1.0), "{d} vs {fd}");
    }
}

#[test]
fn negative_integer_s_matches_direct_series() {
    for kk in 0..=6u32 {
        for v in [0.3, 1.0, 2.7] {
            for (r, arg) in [(0.5, 0.3), (0.25, -2.0), (0.5, PI), (0.1, 1.0)] {
                let z = Complex64::from_polar(r, arg);
                let a = lerch_phi_neg_int_s(z, kk, real(v)).unwrap();
                let b = lerch_phi(z, real(-(kk as f64)), real(v), Some(LerchStrategy::DirectSeries)).unwrap();
                assert!(rel_err(a, b) <= 1e-11, "kk={kk} v={v} z={z}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn negative_integer_s_against_long_series() {
    let z = real(1.0 / 3.0);
    let a = lerch_phi_neg_int_s(z, 2, real(1.0)).unwrap();
    let b = lerch_partial(z, real(-2.0), real(1.0), 200);
    assert!(rel_err(a, b) < 1e-13);
}

#[test]
fn hurwitz_multiplication_theorem() {
    for q in [2usize, 3, 6] {
        for s in [real(-2.0), real(-1.0), c(0.5, 1.0), real(3.0)] {
            for v in [0.3, 1.0, 1.7] {
                let lhs: Complex64 = (0..q).map(|r| hurwitz_zeta(s, real(v + r as f64 / q as f64)).unwrap()).sum();
                let rhs = (s * (q as f64).ln()).exp() * hurwitz_zeta(s, real(q as f64 * v)).unwrap();
                assert!(rel_err(lhs, rhs) <= 1e-10, "q={q} s={s} v={v}: {lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn hurwitz_negative_integers_are_bernoulli() {
    for n in 0..=3usize {
        for v in [0.1, 1.0 / 6.0, 0.5, 5.0 / 6.0, 1.0, 2.3] {
            let z = hurwitz_zeta(real(-(n as f64)), real(v)).unwrap();
            let b = -bernoulli_poly(n + 1, real(v)) / (n + 1) as f64;
            assert!((z - b).norm() <= 1e-11, "n={n} v={v}: {z} vs {b}");
        }
    }
}

#[test]
fn hurwitz_wider_negative_integers() {
    for n in 4..=10usize {
        let v = real(0.7);
        let z = hurwitz_zeta(real(-(n as f64)), v).unwrap();
        let b = -bernoulli_poly(n + 1, v) / (n + 1) as f64;
        assert!(rel_err(z, b) <= 1e-11, "n={n}: {z} vs {b}");
    }
}

#[test]
fn hurwitz_large_s_against_direct_sum() {
    for s in [c(12.0, 0.0), c(20.0, 5.0), c(7.5, -3.0)] {
        let v = real(0.8);
        let direct = lerch_partial(real(1.0), s, v, 2000);
        assert!(rel_err(hurwitz_zeta(s, v).unwrap(), direct) <= 1e-11);
    }
}

#[test]
fn glaisher_relation() {
    let a = glaisher_constant().re;
    assert!((a - 1.282_427_129_100_622_6).abs() <= 1e-9);
    let d = hurwitz_zeta_sderiv(real(-1.0), real(1.0)).unwrap();
    assert!((d.re - (1.0 / 12.0 - a.ln())).abs() <= 1e-12);
}

#[test]
fn zeta_derivative_pair() {
    let h = 1e-5;
    let f = |s: f64| hurwitz_zeta(real(s), real(1.0 / 6.0)).unwrap() + hurwitz_zeta(real(s), real(5.0 / 6.0)).unwrap();
    let fd = (f(-1.0 + h) - f(-1.0 - h)) / (2.0 * h);
    let d = hurwitz_zeta_sderiv(real(-1.0), real(1.0 / 6.0)).unwrap()
        + hurwitz_zeta_sderiv(real(-1.0), real(5.0 / 6.0)).unwrap();
    assert!((fd - d).norm() <= 1e-7);
}

#[test]
fn bessel_half_order_closed_form() {
    for z in [0.5, 1.0, 2.0, 5.0] {
        let k = bessel_k(real(0.5), real(z)).unwrap();
        let closed = (PI / (2.0 * z)).sqrt() * (-z).exp();
        assert!((k.re - closed).abs() <= 1e-12 * closed, "z={z}");
    }
}

#[test]
fn bessel_k0_self_convergence() {
    // the same integral by a plain trapezoid rule on a long uniform grid
    let trapezoid = |h: f64| -> f64 {
        let n = (30.0 / h) as usize;
        h * (0.5 * (-1.0f64).exp() + (1..=n).map(|i| (-(i as f64 * h).cosh()).exp()).sum::<f64>())
    };
    let (coarse, fine) = (trapezoid(0.1), trapezoid(0.05));
    assert!((coarse - fine).abs() <= 1e-12);
    let k0 = bessel_k(real(0.0), real(1.0)).unwrap().re;
    assert!((k0 - fine).abs() <= 1e-12, "{k0} vs {fine}");
}

#[test]
fn two_f1_partial_sums_converge_to_value() {
    for a in [1.0 / 3.0, 2.0 / 3.0, 1.5] {
        for z in [c(0.7, 0.0), c(-0.5, 0.4), c(0.0, -0.7)] {
            let v = gauss_2f1_a1(real(a), z).unwrap();
            let partial: Complex64 = (0..400).map(|n| z.powu(n as u32) * (a / (a + n as f64))).sum();
            assert!(rel_err(v, partial) <= 1e-12, "a={a} z={z}");
        }
    }
}

#[test]
fn two_f1_on_the_unit_circle() {
    let a = 1.0 / 3.0;
    for z in [real(-1.0), unit(1, 3), unit(2, 3), unit(1, 4), c(-0.6, -0.8)] {
        let v = gauss_2f1_a1(real(a), z).unwrap();
        let oracle = accelerated_series(z, |n| real(a / (a + n as f64)), 4000, 10);
        assert!(rel_err(v, oracle) <= 1e-10, "z={z}: {v} vs {oracle}");
    }
}

#[test]
fn two_f1_a_one_is_log() {
    let v = gauss_2f1_a1(real(1.0), real(0.5)).unwrap();
    assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
}

#[test]
fn acosh_examples() {
    assert!(acosh_principal(real(1.0)).norm() < 1e-15);
    assert!((acosh_principal(real(2.0)).re - (2.0 + 3f64.sqrt()).ln()).abs() < 1e-15);
    assert!((acosh_principal(real(0.5)) - c(0.0, PI / 3.0)).norm() < 1e-15);
}

#[test]
fn unsupported_region_is_explicit() {
    let r = lerch_phi(c(1.5, 0.5), c(0.5, 0.2), real(1.0), None);
    assert!(matches!(r, Err(lerchlab::Error::UnsupportedRegion { .. })), "{r:?}");
}
