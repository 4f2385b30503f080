mod common;

use std::f64::consts::PI;

use common::*;
use lerchlab::catalog::{build_catalog, cf_3_1_3_48, rhs_main_theorem, IntegralParams};
use lerchlab::quadrature::*;
use lerchlab::specfun::bessel_k;
use lerchlab::Error;
use num_complex::Complex64;
use proptest::prelude::*;

fn cfg(rel_tol: f64) -> QuadConfig {
    QuadConfig { rel_tol, ..QuadConfig::default() }
}

#[test]
fn error_estimates_are_honest() {
    type Case = (fn(f64) -> f64, f64);
    let cases: [Case; 3] =
        [(|x| (-x).exp(), 1.0), (|x| (-x).exp() / x.sqrt(), PI.sqrt()), (|x| (-x * x).exp(), 0.5 * PI.sqrt())];
    for (f, exact) in cases {
        for tol in [1e-4, 1e-8, 1e-12] {
            let r = integrate_halfline(|x| Ok(real(f(x))), &cfg(tol)).unwrap();
            assert!(r.converged);
            assert!(r.err_estimate <= tol * r.value.norm().max(1.0));
            assert!((r.value.re - exact).abs() <= 10.0 * r.err_estimate.max(1e-16), "tol={tol}: {r:?}");
        }
    }
}

#[test]
fn product_integral_plumbing() {
    let r = integrate_product_2d(|x, y| Ok(real((-x - y).exp())), &cfg(1e-10)).unwrap();
    assert!(r.converged);
    assert!((r.value.re - 1.0).abs() < 1e-12);
}

#[test]
fn fubini_order_swap_on_log_power_entries() {
    for e in build_catalog().into_iter().filter(|e| e.two_d_authoritative()) {
        let yx = integrate_2d(&e.integrand, Order::YThenX, &cfg(1e-10)).unwrap();
        let xy = integrate_2d(&e.integrand, Order::XThenY, &cfg(1e-10)).unwrap();
        assert!(yx.converged && xy.converged, "{}", e.id);
        assert!(rel_err(yx.value, xy.value) <= 1e-8, "{}: {} vs {}", e.id, yx.value, xy.value);
    }
}

#[test]
fn routes_agree_on_every_entry() {
    for e in build_catalog() {
        let one = integrate_reduced(&e.integrand, &cfg(1e-10)).unwrap();
        let two = integrate_2d(&e.integrand, Order::YThenX, &cfg(1e-10)).unwrap();
        let tol = 1e-8f64.max(10.0 * (one.err_estimate + two.err_estimate));
        assert!(rel_err(one.value, two.value) <= tol, "{}: {} vs {}", e.id, one.value, two.value);
    }
}

#[test]
fn reduced_route_matches_csc_form_real_point() {
    let p = IntegralParams::real(-0.5, 0.0, 1.0, 1.0, 0.25);
    let r = integrate_reduced_1d(&p, &cfg(1e-12)).unwrap();
    assert!(rel_err(r.value, cf_3_1_3_48(&p).unwrap()) < 1e-11);
    let two = integrate_2d_paper(&p, &cfg(1e-10)).unwrap();
    assert!(rel_err(two.value, r.value) < 1e-8);
}

#[test]
fn reduced_route_at_p_equal_sqrt_q_cosh_one() {
    let q = 0.36f64;
    let p = IntegralParams::real(-0.5, 0.0, 1.0, q.sqrt() * 1f64.cosh(), q);
    let r = integrate_reduced_1d(&p, &cfg(1e-12)).unwrap();
    assert!(rel_err(r.value, cf_3_1_3_48(&p).unwrap()) < 1e-11);
}

#[test]
fn equal_exponents_integrate_to_zero() {
    let m = c(-0.5, -0.6);
    let integrand = Integrand {
        terms: vec![Monomial { coef: real(1.0), m }, Monomial { coef: real(-1.0), m }],
        log: LogFactor::Reciprocal,
        a: real(1.0),
        p: real(0.25),
        q: real(0.25),
    };
    let r = integrate_reduced(&integrand, &cfg(1e-10)).unwrap();
    assert_eq!(r.value, c(0.0, 0.0));
}

#[test]
fn denominator_root_on_path_is_rejected() {
    let p = IntegralParams::real(-0.5, 0.0, 1.0, -1.0, 0.125);
    assert!(matches!(integrate_reduced_1d(&p, &cfg(1e-10)), Err(Error::Contour(_))));
}

#[test]
fn non_removable_reciprocal_is_rejected() {
    let integrand = Integrand {
        terms: vec![Monomial { coef: real(1.0), m: real(-0.5) }, Monomial { coef: real(-2.0), m: real(-0.75) }],
        log: LogFactor::Reciprocal,
        a: real(1.0),
        p: real(0.25),
        q: real(0.25),
    };
    assert!(matches!(integrate_reduced(&integrand, &cfg(1e-10)), Err(Error::NonRemovable(_))));
}

#[test]
fn guard_near_the_removable_point() {
    let num = PowerSum::new(vec![(real(1.0), real(0.25)), (real(-1.0), real(0.0))]);
    let d = 1e-12;
    let v = removable_singularity_guard(&num, 1.0, 1.0 + d, GUARD_EPS).unwrap();
    // N(u)/log(1/u) = −1/4 − d/32 + O(d²)
    assert!((v.re - (-0.25 - d / 32.0)).abs() < 1e-10);
    let num = PowerSum::new(vec![(real(1.0), real(1.0 / 6.0)), (real(-1.0), real(0.25))]);
    let v = removable_singularity_guard(&num, 1.0, 1.0, GUARD_EPS).unwrap();
    assert!((v.re - 1.0 / 12.0).abs() < 1e-15);
}

#[test]
fn bessel_route_for_k_zero() {
    // ∫ y^{−m−1} e^{−qy − x²/(4y)} dy = 2 (x/(2√q))^{−m} K_m(√q x)
    for (m, p, q) in [(c(-0.5, -0.6), 1.0, 0.25), (real(-0.3), 0.7, 1.3), (c(-0.8, -0.9), 2.0, 0.5)] {
        let params = IntegralParams::new(m, real(0.0), real(1.0), real(p), real(q));
        let sq = q.sqrt();
        let pref = 2.0 * (m * (2.0 * sq).ln()).exp();
        let r = integrate_halfline(|x| Ok(pref * (-p * x).exp() * bessel_k(m, real(sq * x))?), &cfg(1e-10)).unwrap();
        let expected = cf_3_1_3_48(&params).unwrap();
        assert!(rel_err(r.value, expected) < 1e-9, "m={m}: {} vs {expected}", r.value);
    }
}

/// `u → c·u` maps `(a, p, q)` to `(c a, p/c, q/c²)` and scales the integral by `c^{1−m}`.
#[test]
fn scale_covariance_of_reduced_integrand() {
    let scale = 2.0;
    for e in build_catalog()
        .into_iter()
        .filter(|e| matches!(e.integrand.log, LogFactor::Power(k) if k == real(0.0) || k == real(1.0)))
    {
        let mut mapped = e.integrand.clone();
        mapped.a *= scale;
        mapped.p /= scale;
        mapped.q /= scale * scale;
        for t in &mut mapped.terms {
            t.coef *= (-(1.0 - t.m) * scale.ln()).exp();
        }
        let a = integrate_reduced(&e.integrand, &cfg(1e-12)).unwrap();
        let b = integrate_reduced(&mapped, &cfg(1e-12)).unwrap();
        assert!(rel_err(a.value, b.value) < 1e-10, "{}: {} vs {}", e.id, a.value, b.value);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theorem_matches_reduced_route(
        m_re in -0.99f64..-0.5, m_im in -0.99f64..-0.51, k in 0u32..3,
        a in 0.3f64..3.0, p in 0.3f64..3.0, q in 0.1f64..2.0,
    ) {
        prop_assume!((p * p - q).abs() > 0.05);
        let params = IntegralParams::new(c(m_re, m_im), real(k as f64), real(a), real(p), real(q));
        let rhs = rhs_main_theorem(&params).unwrap();
        let quad = integrate_reduced_1d(&params, &cfg(1e-11)).unwrap();
        prop_assert!(quad.converged);
        prop_assert!(rel_err(quad.value, rhs) <= 1e-8, "{} vs {rhs}", quad.value);
    }

    #[test]
    fn routes_agree_on_random_strict_points(
        m_re in -0.95f64..-0.5, m_im in -0.95f64..-0.55, k in 0u32..3, p in 0.5f64..2.0, q in 0.2f64..1.5,
    ) {
        let params = IntegralParams::new(c(m_re, m_im), real(k as f64), real(1.0), real(p), real(q));
        let one = integrate_reduced_1d(&params, &cfg(1e-10)).unwrap();
        let two = integrate_2d_paper(&params, &cfg(1e-9)).unwrap();
        prop_assert!(rel_err(one.value, two.value) <= 1e-8, "{} vs {}", one.value, two.value);
    }
}

#[test]
fn complex_p_q_and_a() {
    let params = IntegralParams::new(c(-0.6, -0.7), real(1.0), c(1.2, 0.4), c(1.0, 0.3), c(0.5, -0.2));
    let rhs = rhs_main_theorem(&params).unwrap();
    let quad = integrate_reduced_1d(&params, &cfg(1e-11)).unwrap();
    assert!(rel_err(quad.value, rhs) < 1e-9, "{} vs {rhs}", quad.value);
    let two = integrate_2d_paper(&params, &cfg(1e-9)).unwrap();
    assert!(rel_err(two.value, rhs) < 1e-8, "{} vs {rhs}", two.value);
}

#[test]
fn non_convergence_is_reported() {
    let r = integrate_halfline(
        |x| Ok(Complex64::new((x * 40.0).sin() * (-x / 50.0).exp(), 0.0)),
        &QuadConfig { max_level: 3, ..cfg(1e-14) },
    )
    .unwrap();
    assert!(!r.converged);
}

#[test]
fn slowly_decaying_oscillatory_tail() {
    for (m, k) in [(c(-0.99, -0.99), 2.0), (c(-0.9636, -0.51), 1.0), (c(-0.97, 0.8), 0.0)] {
        let params = IntegralParams::new(m, real(k), real(0.3), real(0.3), real(0.1542));
        let rhs = rhs_main_theorem(&params).unwrap();
        let quad = integrate_reduced_1d(&params, &cfg(1e-12)).unwrap();
        assert!(quad.converged, "m={m}");
        assert!(rel_err(quad.value, rhs) < 1e-12, "m={m}: {} vs {rhs}", quad.value);
    }
}

#[test]
fn rotated_tail_keeps_the_log_branch() {
    for (k, a) in [(0.5, c(1.0, 0.0)), (1.5, c(0.8, 0.6)), (0.5, c(0.8, -0.6))] {
        let params = IntegralParams::new(c(-0.7, -0.8), real(k), a, real(1.0), real(0.5));
        let one = integrate_reduced_1d(&params, &cfg(1e-11)).unwrap();
        let two = integrate_2d_paper(&params, &cfg(1e-10)).unwrap();
        assert!(one.converged && two.converged);
        assert!(rel_err(one.value, two.value) < 1e-8, "k={k}, a={a}: {} vs {}", one.value, two.value);
    }
}

#[test]
fn rotated_tail_with_log_log_factor() {
    let integrand = Integrand {
        terms: vec![Monomial { coef: real(1.0), m: c(-0.7, -0.8) }],
        log: LogFactor::PowerLogLog(real(1.0)),
        a: real(1.0),
        p: real(1.0),
        q: real(0.5),
    };
    let one = integrate_reduced(&integrand, &cfg(1e-11)).unwrap();
    let two = integrate_2d(&integrand, Order::YThenX, &cfg(1e-10)).unwrap();
    assert!(one.converged && two.converged);
    assert!(rel_err(one.value, two.value) < 1e-8, "{} vs {}", one.value, two.value);
}
