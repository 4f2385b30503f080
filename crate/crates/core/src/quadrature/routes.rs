use std::cell::Cell;

use serde::{Deserialize, Serialize};

use super::de::{integrate_halfline, integrate_halfline_aux, integrate_halfline_scaled, QuadConfig, QuadratureResult};
use super::integrand::{Integrand, UNDERFLOW_EXPONENT};
use crate::catalog::IntegralParams;
use crate::specfun::principal_sqrt;
use crate::{ComplexValue, Error, Result};

/// Which variable the outer integral runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Order {
    /// Outer `y`, inner `x`.
    YThenX,
    /// Outer `x`, inner `y`.
    XThenY,
}

/// `∫_{−∞}^{∞} g(σ) dσ` split at `σ = 0`, with the features of each half expected near `±scales`.
fn integrate_line_scaled<G>(g: G, scales: [f64; 2], cfg: &QuadConfig) -> Result<QuadratureResult>
where
    G: Fn(f64) -> Result<ComplexValue>,
{
    let right = integrate_halfline_scaled(&g, scales[1], cfg)?;
    let left = integrate_halfline_scaled(|t| g(-t), scales[0], cfg)?;
    Ok(right.combine(left))
}

/// `max(1, |σ|)` for a feature expected at `σ`.
fn feature_scale(sigma: f64) -> f64 {
    if sigma.is_finite() {
        sigma.abs().max(1.0)
    } else {
        1.0
    }
}

fn reject_real_positive_roots(p: ComplexValue, q: ComplexValue) -> Result<()> {
    if q.norm() == 0.0 {
        return Err(Error::Domain("q = 0".into()));
    }
    let disc = principal_sqrt(p * p - q);
    for root in [(-p + disc) / (2.0 * q), (-p - disc) / (2.0 * q)] {
        if root.re > 0.0 && root.im.abs() <= 1e-12 * root.norm() {
            return Err(Error::Contour(format!(
                "4q u² + 4p u + 1 vanishes at u = {} on the integration path",
                root.re
            )));
        }
    }
    Ok(())
}

/// Exact one-dimensional reduction of the double integral:
/// `∫₀^∞ 4 Σ c_j u^{−m_j} L(log(a/u)) / (4q u² + 4p u + 1) du`.
pub fn integrate_reduced(integrand: &Integrand, cfg: &QuadConfig) -> Result<QuadratureResult> {
    integrand.validate()?;
    reject_real_positive_roots(integrand.p, integrand.q)?;
    let numerator = integrand.reduced_numerator();
    let density = |sigma: f64| integrand.reduced_density(sigma, &numerator);
    let right = integrate_halfline(density, cfg)?;
    let left = match integrand.tail_ray() {
        Some(ray) => {
            let s = ray.start;
            let near = integrate_halfline(|x| Ok(density(-s * x / (1.0 + x))? * (s / ((1.0 + x) * (1.0 + x)))), cfg)?;
            let far = integrate_halfline_scaled(
                |t| Ok(integrand.tail_density(ComplexValue::new(-s, 0.0) - t * ray.dir)? * ray.dir),
                ray.scale,
                cfg,
            )?;
            near.combine(far)
        }
        None => {
            // the u → ∞ tail decays like e^{(1 + Re m) σ}
            let slowest = integrand.terms.iter().map(|t| 1.0 + t.m.re).fold(f64::INFINITY, f64::min);
            let scale = if slowest > 0.0 { feature_scale((1.0 / slowest).min(1e3)) } else { 1.0 };
            integrate_halfline_scaled(|t| density(-t), scale, cfg)?
        }
    };
    Ok(right.combine(left))
}

/// [`integrate_reduced`] for the single-term family.
pub fn integrate_reduced_1d(params: &IntegralParams, cfg: &QuadConfig) -> Result<QuadratureResult> {
    integrate_reduced(&Integrand::from_params(params), cfg)
}

/// Nested double-exponential quadrature over the quarter plane.
///
/// The inner integral runs in `σ = log(|a| x/y)`; the exponent is tested before
/// any other factor is formed and contributions below `e^{−745}` are dropped.
/// The error estimate is the outer estimate plus the outer quadrature of the
/// inner estimates, and convergence is judged on that sum.
pub fn integrate_2d(integrand: &Integrand, order: Order, cfg: &QuadConfig) -> Result<QuadratureResult> {
    integrand.validate()?;
    if !(integrand.q.re > 0.0) {
        return Err(Error::Domain(format!("the y-integral needs Re(q) > 0, got q = {}", integrand.q)));
    }
    cfg.validate()?;
    let inner_cfg = QuadConfig { rel_tol: (cfg.rel_tol * 1e-2).max(1e-14), ..*cfg };
    let inv_abs_a = integrand.a.norm().recip();
    let (p, q) = (integrand.p, integrand.q);
    let zero = ComplexValue::new(0.0, 0.0);

    let inner_evals = Cell::new(0usize);

    let (outer, inner_err) = integrate_halfline_aux(
        |outer_var| {
            let inner = match order {
                Order::YThenX => {
                    let y = outer_var;
                    // e^{−y u²/4} cuts off near u = √(2/y)
                    let peak = (integrand.a.norm() * (2.0 / y).sqrt()).ln();
                    integrate_line_scaled(
                        |sigma| {
                            let u = sigma.exp() * inv_abs_a;
                            let re_e = -q.re * y - y * (p.re * u + 0.25 * u * u);
                            if !(re_e > UNDERFLOW_EXPONENT) {
                                return Ok(zero);
                            }
                            let e = -q * y - (p * u + 0.25 * u * u) * y;
                            integrand.weighted_kernel(sigma, 1.0, e)
                        },
                        [1.0, feature_scale(peak.max(0.0))],
                        &inner_cfg,
                    )?
                }
                Order::XThenY => {
                    let x = outer_var;
                    // e^{−x u/4} cuts off near u = 4/x, e^{−q x/u} near u = |q| x
                    let abs_a = integrand.a.norm();
                    let right = (abs_a * 4.0 / x).ln();
                    let left = (abs_a * q.norm() * x).ln();
                    integrate_line_scaled(
                        |sigma| {
                            let u = sigma.exp() * inv_abs_a;
                            let re_e = -p.re * x - q.re * x / u - 0.25 * x * u;
                            if !(re_e > UNDERFLOW_EXPONENT) {
                                return Ok(zero);
                            }
                            let e = -p * x - q * (x / u) - 0.25 * x * u;
                            integrand.weighted_kernel(sigma, 0.0, e)
                        },
                        [feature_scale(left.min(0.0)), feature_scale(right.max(0.0))],
                        &inner_cfg,
                    )?
                }
            };
            inner_evals.set(inner_evals.get() + inner.evaluations);
            Ok((inner.value, inner.err_estimate))
        },
        1.0,
        cfg,
    )?;
    let err_estimate = outer.err_estimate + inner_err;
    Ok(QuadratureResult {
        value: outer.value,
        err_estimate,
        evaluations: outer.evaluations + inner_evals.get(),
        converged: outer.converged && cfg.accepts(err_estimate, outer.value),
    })
}

/// [`integrate_2d`] for the single-term family in the stated order (outer `y`).
pub fn integrate_2d_paper(params: &IntegralParams, cfg: &QuadConfig) -> Result<QuadratureResult> {
    integrate_2d(&Integrand::from_params(params), Order::YThenX, cfg)
}

/// Plain nested quadrature of `f(x, y)` over the quarter plane, outer `y`.
pub fn integrate_product_2d<F>(f: F, cfg: &QuadConfig) -> Result<QuadratureResult>
where
    F: Fn(f64, f64) -> Result<ComplexValue>,
{
    let inner_cfg = QuadConfig { rel_tol: (cfg.rel_tol * 1e-2).max(1e-14), ..*cfg };
    let evals = Cell::new(0usize);
    let (outer, inner_err) = integrate_halfline_aux(
        |y| {
            let r = integrate_halfline(|x| f(x, y), &inner_cfg)?;
            evals.set(evals.get() + r.evaluations);
            Ok((r.value, r.err_estimate))
        },
        1.0,
        cfg,
    )?;
    let err_estimate = outer.err_estimate + inner_err;
    Ok(QuadratureResult {
        value: outer.value,
        err_estimate,
        evaluations: outer.evaluations + evals.get(),
        converged: outer.converged && cfg.accepts(err_estimate, outer.value),
    })
}
