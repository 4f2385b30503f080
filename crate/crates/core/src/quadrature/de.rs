use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::{ComplexValue, Error, Result};

/// Tolerances for the level-doubling drivers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub max_level: u32,
    pub abs_floor: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-10, max_level: 12, abs_floor: 1e-300 }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::Config(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if !(3..=20).contains(&self.max_level) {
            return Err(Error::Config(format!("max_level must lie in [3, 20], got {}", self.max_level)));
        }
        if !(self.abs_floor >= 0.0) {
            return Err(Error::Config("abs_floor must be non-negative".into()));
        }
        Ok(())
    }

    /// Tolerance `err ≤ rel_tol · max(1, |value|)` (or `≤ abs_floor`).
    pub fn accepts(&self, err: f64, value: ComplexValue) -> bool {
        err <= self.rel_tol * value.norm().max(1.0) || err <= self.abs_floor
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: ComplexValue,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// Sum of independent pieces: values and error estimates add.
    pub fn combine(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

/// Half-width of the transformed abscissa range; keeps `e^{±π/2 sinh t}` inside ~1e±290.
const T_MAX: f64 = 6.7;
/// Level-0 terms below this fraction of the largest term end the scan.
const TRUNCATION: f64 = 1e-20;
/// Levels below this never declare convergence.
const MIN_LEVEL: u32 = 3;

/// `∫₀^∞ f(x) dx` by exp-sinh transformed trapezoid sums.
pub fn integrate_halfline<F>(f: F, cfg: &QuadConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    integrate_halfline_scaled(f, 1.0, cfg)
}

/// As [`integrate_halfline`] with the substitution `x = scale · e^{π/2 sinh t}`.
///
/// Levels halve the step until two successive sums differ by at most
/// `rel_tol · max(1, |value|)`; the estimate is that difference, floored at
/// the roundoff level of the absolute sum.
pub fn integrate_halfline_scaled<F>(f: F, scale: f64, cfg: &QuadConfig) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<ComplexValue>,
{
    integrate_halfline_aux(|x| Ok((f(x)?, 0.0)), scale, cfg).map(|(r, _)| r)
}

/// As [`integrate_halfline_scaled`] for `f(x) = (value, aux)`, also returning the
/// final-level quadrature of the real auxiliary channel.
pub(crate) fn integrate_halfline_aux<F>(f: F, scale: f64, cfg: &QuadConfig) -> Result<(QuadratureResult, f64)>
where
    F: Fn(f64) -> Result<(ComplexValue, f64)>,
{
    cfg.validate()?;
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::Config(format!("scale must be positive, got {scale}")));
    }
    let mut evaluations = 0usize;
    let mut node = |t: f64| -> Result<(ComplexValue, f64)> {
        let e = FRAC_PI_2 * t.sinh();
        let x = scale * e.exp();
        let w = scale * FRAC_PI_2 * t.cosh() * e.exp();
        if x == 0.0 || !x.is_finite() || w == 0.0 || !w.is_finite() {
            return Ok((ComplexValue::new(0.0, 0.0), 0.0));
        }
        evaluations += 1;
        let (fx, aux) = f(x)?;
        if !(fx.re.is_finite() && fx.im.is_finite()) {
            return Err(Error::NonFinite(x));
        }
        Ok((fx * w, aux * w))
    };

    // Level 0 (h = 1) also fixes the effective abscissa window.
    let (mut raw, mut raw_aux) = node(0.0)?;
    let mut abs_sum = raw.norm();
    let mut peak = abs_sum;
    let mut window = [-T_MAX, T_MAX];
    for (side, dir) in [(1usize, 1.0), (0usize, -1.0)] {
        let mut quiet = 0;
        let mut k = 1.0;
        while k <= T_MAX {
            let (term, aux) = node(dir * k)?;
            raw += term;
            raw_aux += aux;
            abs_sum += term.norm();
            peak = peak.max(term.norm());
            if term.norm() <= TRUNCATION * peak {
                quiet += 1;
                if quiet >= 2 {
                    window[side] = dir * k;
                    break;
                }
            } else {
                quiet = 0;
            }
            k += 1.0;
        }
    }

    let mut h = 1.0;
    let mut estimate = raw;
    let mut err = f64::INFINITY;
    let mut converged = false;
    for level in 1..=cfg.max_level {
        h *= 0.5;
        let mut add = |t: f64| -> Result<()> {
            let (term, aux) = node(t)?;
            raw += term;
            raw_aux += aux;
            abs_sum += term.norm();
            Ok(())
        };
        let mut t = h;
        while t < window[1] {
            add(t)?;
            t += 2.0 * h;
        }
        let mut t = -h;
        while t > window[0] {
            add(t)?;
            t -= 2.0 * h;
        }
        let next = raw * h;
        let roundoff = 8.0 * f64::EPSILON * abs_sum * h;
        err = (next - estimate).norm().max(roundoff);
        estimate = next;
        if level >= MIN_LEVEL && cfg.accepts(err, estimate) {
            converged = true;
            break;
        }
    }
    Ok((QuadratureResult { value: estimate, err_estimate: err, evaluations, converged }, raw_aux * h))
}
