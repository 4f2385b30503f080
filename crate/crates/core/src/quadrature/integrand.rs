use std::f64::consts::{FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use super::guard::{removable_singularity_guard, PowerSum, GUARD_EPS};
use crate::catalog::IntegralParams;
use crate::specfun::{cpow, exprel, principal_log, principal_sqrt};
use crate::{ComplexValue, Error, Result};

/// Contributions below `e^{−745}` underflow to zero.
pub(crate) const UNDERFLOW_EXPONENT: f64 = -745.0;

/// `coef · x^m y^{−m−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub coef: ComplexValue,
    pub m: ComplexValue,
}

/// The logarithmic factor in `ℓ = log(a x / y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum LogFactor {
    /// `ℓ^k`
    Power(ComplexValue),
    /// `ℓ^k · log ℓ`
    PowerLogLog(ComplexValue),
    /// `1/ℓ`, only for sums that vanish at `a x = y`.
    Reciprocal,
}

/// The ray `σ = −start − t·dir`, `t ≥ 0`, replacing `σ < −start` in the reduced route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct TailRay {
    pub start: f64,
    pub dir: ComplexValue,
    pub scale: f64,
}

/// `Σ_j c_j x^{m_j} y^{−m_j−1} · e^{−p x − q y − x²/(4y)} · L(log(a x/y))`
///
/// Every route works in the variable `σ = log(|a| x / y)`, so that
/// `log(a x/y) = σ + i·arg a` is exact and the only possible singularity of the
/// logarithmic factor sits at `σ = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Integrand {
    pub terms: Vec<Monomial>,
    pub log: LogFactor,
    pub a: ComplexValue,
    pub p: ComplexValue,
    pub q: ComplexValue,
}

fn is_small_integer(k: ComplexValue) -> Option<i32> {
    (k.im == 0.0 && k.re.fract() == 0.0 && k.re.abs() < 64.0).then_some(k.re as i32)
}

fn log_power(l: ComplexValue, k: ComplexValue) -> Result<ComplexValue> {
    if let Some(n) = is_small_integer(k) {
        if n < 0 && l.norm() == 0.0 {
            return Err(Error::Pole("negative power of log at a x = y".into()));
        }
        return Ok(l.powi(n));
    }
    if l.norm() == 0.0 {
        return if k.re > 0.0 {
            Ok(ComplexValue::new(0.0, 0.0))
        } else {
            Err(Error::Pole("log power with Re(k) ≤ 0 at a x = y".into()))
        };
    }
    cpow(l, k)
}

impl Integrand {
    /// The single-term family with `log^k(a x/y)`.
    pub fn from_params(params: &IntegralParams) -> Self {
        Self {
            terms: vec![Monomial { coef: ComplexValue::new(1.0, 0.0), m: params.m }],
            log: LogFactor::Power(params.k),
            a: params.a,
            p: params.p,
            q: params.q,
        }
    }

    fn ln_abs_a(&self) -> f64 {
        self.a.norm().ln()
    }

    fn arg_a(&self) -> f64 {
        if self.a.im == 0.0 && self.a.re > 0.0 {
            0.0
        } else {
            self.a.im.atan2(self.a.re)
        }
    }

    /// `Σ c_j u^{−m_j}` in the reduced variable `u = y/x`.
    pub fn reduced_numerator(&self) -> PowerSum {
        PowerSum::new(self.terms.iter().map(|t| (t.coef, -t.m)).collect())
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::Domain("integrand has no terms".into()));
        }
        for t in &self.terms {
            if !(t.m.re > -1.0 && t.m.re < 1.0) {
                return Err(Error::Domain(format!("need −1 < Re(m) < 1, got m = {}", t.m)));
            }
        }
        if self.a.norm() == 0.0 {
            return Err(Error::Domain("a = 0".into()));
        }
        if let LogFactor::Reciprocal = self.log {
            if !(self.a.im == 0.0 && self.a.re > 0.0) {
                return Err(Error::Domain("reciprocal-log integrands need real a > 0".into()));
            }
            let zero_at = self.reduced_numerator().taylor(self.a.re, 0)[0];
            let scale: f64 = self.terms.iter().map(|t| t.coef.norm()).sum();
            if zero_at.norm() > 1e-12 * scale {
                return Err(Error::NonRemovable(format!("numerator is {zero_at} where log(a x/y) vanishes")));
            }
        }
        Ok(())
    }

    /// The logarithmic factor `L(ℓ)` for `Power` and `PowerLogLog`.
    fn log_part(&self, sigma: f64) -> Result<ComplexValue> {
        let l = ComplexValue::new(sigma, self.arg_a());
        match self.log {
            LogFactor::Power(k) => log_power(l, k),
            LogFactor::PowerLogLog(k) => {
                if l.norm() == 0.0 {
                    return if k.re > 0.0 {
                        Ok(ComplexValue::new(0.0, 0.0))
                    } else {
                        Err(Error::Pole("log(log) at a x = y".into()))
                    };
                }
                Ok(log_power(l, k)? * principal_log(l)?)
            }
            LogFactor::Reciprocal => Ok(l.inv()),
        }
    }

    /// `e^E · u^extra · W(σ)` with `W(σ) = Σ c_j u^{m_j} · L` and `u = x/y = e^σ/|a|`.
    ///
    /// All exponentials of a term are combined before evaluation so that huge and
    /// tiny factors never meet. For reciprocal logs the removable point is handled
    /// through `Σ c_j |a|^{−m_j} (e^{m_j σ} − 1)/σ`, which is exact in floating point.
    pub(crate) fn weighted_kernel(&self, sigma: f64, extra: f64, e: ComplexValue) -> Result<ComplexValue> {
        let zero = ComplexValue::new(0.0, 0.0);
        let shift = sigma - self.ln_abs_a();
        let l = ComplexValue::new(sigma, self.arg_a());
        let ln_l = if l.norm() > 0.0 { l.norm().ln() } else { 0.0 };
        let log_bound = match self.log {
            LogFactor::Power(k) => k.re * ln_l + k.im.abs() * PI,
            LogFactor::PowerLogLog(k) => k.re * ln_l + k.im.abs() * PI + (ln_l.abs() + PI).ln(),
            LogFactor::Reciprocal => -ln_l,
        };
        let largest = self
            .terms
            .iter()
            .map(|t| e.re + (t.m.re + extra) * shift + t.coef.norm().ln())
            .fold(f64::NEG_INFINITY, f64::max);
        if !(largest + log_bound > UNDERFLOW_EXPONENT) {
            return Ok(zero);
        }
        match self.log {
            LogFactor::Reciprocal if sigma.abs() <= 1.0 => {
                let la = self.ln_abs_a();
                let sum: ComplexValue =
                    self.terms.iter().map(|t| t.coef * (-t.m * la).exp() * t.m * exprel(t.m * sigma)).sum();
                Ok((e + extra * shift).exp() * sum)
            }
            LogFactor::Reciprocal => {
                let sum: ComplexValue = self.terms.iter().map(|t| t.coef * (e + (t.m + extra) * shift).exp()).sum();
                Ok(sum / sigma)
            }
            _ => {
                let sum: ComplexValue = self.terms.iter().map(|t| t.coef * (e + (t.m + extra) * shift).exp()).sum();
                if sum == zero {
                    return Ok(zero);
                }
                Ok(sum * self.log_part(sigma)?)
            }
        }
    }

    /// Rotation for the `u → ∞` tail, which behaves like `Σ e^{(1+m_j)σ}` and
    /// oscillates badly when `Im m_j` dominates `1 + Re m_j`.
    ///
    /// Left of `start` the integrand has no poles, so the tail can be turned onto a
    /// ray along which every term decays without oscillating.
    pub(crate) fn tail_ray(&self) -> Option<TailRay> {
        let args = self.terms.iter().map(|t| (1.0 + t.m).arg());
        let lo = args.clone().fold(f64::INFINITY, f64::min);
        let hi = args.fold(f64::NEG_INFINITY, f64::max);
        if !(lo.abs().max(hi.abs()) > FRAC_PI_4 && hi - lo < PI - 0.2) {
            return None;
        }
        let dir = ComplexValue::from_polar(1.0, -0.5 * (hi + lo));
        let rate = self.terms.iter().map(|t| ((1.0 + t.m) * dir).re).fold(f64::INFINITY, f64::min);
        let disc = principal_sqrt(self.p * self.p - self.q);
        let widest = [(-self.p + disc) / (2.0 * self.q), (-self.p - disc) / (2.0 * self.q)]
            .iter()
            .map(|r| r.norm())
            .fold(0.0, f64::max);
        let start = (widest.ln() - self.ln_abs_a() + 1.0).max(2.0);
        if !(rate > 0.0 && start.is_finite()) {
            return None;
        }
        Some(TailRay { start, dir, scale: rate.recip().clamp(1.0, 1e3) })
    }

    /// [`Self::reduced_density`] continued to complex `σ` with `Re σ ≤ −2`.
    ///
    /// Branches of `log ℓ` are continued from the side of the cut used on the real line.
    pub(crate) fn tail_density(&self, s: ComplexValue) -> Result<ComplexValue> {
        let ln_u = self.ln_abs_a() - s;
        let arg_a = self.arg_a();
        let l = s + ComplexValue::new(0.0, arg_a);
        let mut theta = l.arg();
        if arg_a >= 0.0 && theta < 0.0 {
            theta += 2.0 * PI;
        } else if arg_a < 0.0 && theta > 0.0 {
            theta -= 2.0 * PI;
        }
        let log_l = ComplexValue::new(l.norm().ln(), theta);
        let power = |k: ComplexValue| match is_small_integer(k) {
            Some(n) => l.powi(n),
            None => (k * log_l).exp(),
        };
        let factor = match self.log {
            LogFactor::Power(k) => power(k),
            LogFactor::PowerLogLog(k) => power(k) * log_l,
            LogFactor::Reciprocal => l.inv(),
        };
        let top: ComplexValue = self.terms.iter().map(|t| t.coef * (-(1.0 + t.m) * ln_u).exp()).sum();
        let inv_u = (-ln_u).exp();
        Ok(4.0 * top * factor / (4.0 * self.q + 4.0 * self.p * inv_u + inv_u * inv_u))
    }

    /// Integrand of `∫ 4 u^{−m} L(log(a/u)) / (4q u² + 4p u + 1) du` written in
    /// `σ = log(|a|/u)`, i.e. including the Jacobian `u`.
    pub fn reduced_density(&self, sigma: f64, numerator: &PowerSum) -> Result<ComplexValue> {
        let zero = ComplexValue::new(0.0, 0.0);
        let u = self.a.norm() * (-sigma).exp();
        if u == 0.0 || !u.is_finite() {
            return Ok(zero);
        }
        let top = match self.log {
            LogFactor::Reciprocal => removable_singularity_guard(numerator, self.a.re, u, GUARD_EPS)?,
            _ => numerator.value(u) * self.log_part(sigma)?,
        };
        if top == zero {
            return Ok(zero);
        }
        // 4u·top/(4qu² + 4pu + 1), divided through by u² when u > 1
        Ok(if u > 1.0 {
            4.0 * (top / u) / (4.0 * self.q + 4.0 * self.p / u + 1.0 / (u * u))
        } else {
            4.0 * u * top / (4.0 * self.q * u * u + 4.0 * self.p * u + 1.0)
        })
    }
}
