use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use super::entries::EntryParams;
use super::params::IntegralParams;
use crate::specfun::{
    acosh_principal, cos_pi, cot_pi, cpow, csc_pi, ensure_finite, gauss_2f1_a1, glaisher_constant, hurwitz_zeta,
    hurwitz_zeta_sderiv, lerch_phi, principal_log, principal_sqrt, riemann_zeta, sin_pi,
};
use crate::{ComplexValue, Error, Result};

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn real(x: f64) -> ComplexValue {
    c(x, 0.0)
}

const I: ComplexValue = ComplexValue::new(0.0, 1.0);

/// `e^{2iπm}` with the phase reduced exactly.
fn unit_power(m: ComplexValue) -> ComplexValue {
    let r = (-2.0 * PI * m.im).exp();
    let two_re = real(2.0 * m.re);
    r * c(cos_pi(two_re).re, sin_pi(two_re).re)
}

/// `acosh(p/√q)` and `√(p² − q)`, rejecting the prefactor pole.
///
/// The root is taken as `√q sinh(acosh(p/√q))` so that its sign follows the
/// acosh branch; the principal `√(p² − q)` flips independently when `p² − q`
/// crosses the negative axis.
fn theorem_parts(params: &IntegralParams) -> Result<(ComplexValue, ComplexValue)> {
    params.validate_theorem_form()?;
    let sqrt_q = principal_sqrt(params.q);
    let acosh = acosh_principal(params.p / sqrt_q);
    Ok((acosh, sqrt_q * acosh.sinh()))
}

/// `r̄·[e^{2m·acosh(p/√q)}·Φ(e^{2iπm}, −k, v₁) − Φ(e^{2iπm}, −k, v₂)]`.
pub fn rhs_main_theorem(params: &IntegralParams) -> Result<ComplexValue> {
    let (acosh, root) = theorem_parts(params)?;
    let IntegralParams { m, k, a, q, .. } = *params;
    let z = unit_power(m);
    let inner = 2.0 * I * acosh - 2.0 * I * principal_log(2.0 * a)? - I * principal_log(q)?;
    let v1 = -(2.0 * I * acosh + 2.0 * I * principal_log(2.0 * a)? + I * principal_log(q)? - 2.0 * PI) / (4.0 * PI);
    let v2 = (inner + 2.0 * PI) / (4.0 * PI);
    let r_bar = -I
        * cpow(real(PI), k + 1.0)?
        * cpow(real(2.0), k + m + 1.0)?
        * cpow(q, m / 2.0)?
        * (-m * acosh + 0.5 * I * PI * (k + 2.0 * m)).exp()
        / root;
    let phi1 = lerch_phi(z, -k, v1, None)?;
    let phi2 = lerch_phi(z, -k, v2, None)?;
    ensure_finite(r_bar * ((2.0 * m * acosh).exp() * phi1 - phi2), "rhs_main_theorem")
}

/// `π 2^{m+1} q^{m/2} csc(πm) sinh(m acosh(p/√q)) / √(p² − q)`.
pub fn cf_3_1_3_48(params: &IntegralParams) -> Result<ComplexValue> {
    let (acosh, root) = theorem_parts(params)?;
    let m = params.m;
    let value = PI * cpow(real(2.0), m + 1.0)? * cpow(params.q, m / 2.0)? * csc_pi(m)? * (m * acosh).sinh() / root;
    ensure_finite(value, "cf_3_1_3_48")
}

/// The `k = 1` member of the family, with `log(a x/y)` in the integrand.
pub fn cf_3_1_3_59(params: &IntegralParams) -> Result<ComplexValue> {
    let (acosh, root) = theorem_parts(params)?;
    let IntegralParams { m, a, q, .. } = *params;
    let bracket = -2.0 * principal_log(a)? + 2.0 * PI * cot_pi(m)? - principal_log(4.0 * q)?;
    let value = -PI * cpow(real(2.0), m)? * cpow(q, m / 2.0)? * csc_pi(m)? / root
        * (bracket * (m * acosh).sinh() - 2.0 * acosh * (m * acosh).cosh());
    ensure_finite(value, "cf_3_1_3_59")
}

/// `(−2√2 π acosh 2, 2√(2/3) π (π² + acosh² 2))`.
pub fn cf_3_1_3_60_61() -> (ComplexValue, ComplexValue) {
    let acosh2 = (2.0 + 3f64.sqrt()).ln();
    (real(-2.0 * 2f64.sqrt() * PI * acosh2), real(2.0 * (2.0f64 / 3.0).sqrt() * PI * (PI * PI + acosh2 * acosh2)))
}

fn zeta_bracket(kk: ComplexValue) -> Result<ComplexValue> {
    let s = -kk;
    let three = cpow(real(3.0), s)?;
    Ok(hurwitz_zeta(s, real(1.0 / 6.0))? + hurwitz_zeta(s, real(5.0 / 6.0))? + (1.0 - three) * riemann_zeta(s)?)
}

fn zeta_bracket_kderiv(kk: ComplexValue) -> Result<ComplexValue> {
    let s = -kk;
    let three = cpow(real(3.0), s)?;
    let d = hurwitz_zeta_sderiv(s, real(1.0 / 6.0))?
        + hurwitz_zeta_sderiv(s, real(5.0 / 6.0))?
        + (1.0 - three) * hurwitz_zeta_sderiv(s, real(1.0))?
        - 3f64.ln() * three * riemann_zeta(s)?;
    Ok(-d)
}

fn zeta_prefactor(kk: ComplexValue) -> Result<ComplexValue> {
    Ok(I * cpow(real(2.0), 2.0 * kk + 3.0)? * (0.5 * I * PI * kk).exp() * cpow(real(PI), kk + 1.0)?)
}

/// `i 2^{2k+3} e^{iπk/2} π^{k+1} (ζ(−k,1/6) + ζ(−k,5/6) + (1 − 3^{−k}) ζ(−k))`.
pub fn cf_3_1_3_62(kk: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(zeta_prefactor(kk)? * zeta_bracket(kk)?, "cf_3_1_3_62")
}

/// `∂/∂k` of [`cf_3_1_3_62`], term by term.
pub fn cf_3_1_3_62_kderiv(kk: ComplexValue) -> Result<ComplexValue> {
    let log_prefactor_deriv = 2.0 * LN_2 + 0.5 * I * PI + PI.ln();
    let value = zeta_prefactor(kk)? * (zeta_bracket(kk)? * log_prefactor_deriv + zeta_bracket_kderiv(kk)?);
    ensure_finite(value, "cf_3_1_3_62_kderiv")
}

/// `(4/9) π² (6 + 3πi + log(2¹⁴ 3³ π⁶ / A⁷²))`.
pub fn cf_3_1_3_63() -> ComplexValue {
    let a = glaisher_constant().re;
    let log_ratio = 14.0 * LN_2 + 3.0 * 3f64.ln() + 6.0 * PI.ln() - 72.0 * a.ln();
    4.0 / 9.0 * PI * PI * c(6.0 + log_ratio, 3.0 * PI)
}

fn two_f1_term(m: ComplexValue) -> Result<ComplexValue> {
    let z = unit_power(m);
    let w = (2.0 * I * PI * m / 3.0).exp();
    let f1 = gauss_2f1_a1(real(1.0 / 3.0), z)?;
    let f2 = gauss_2f1_a1(real(2.0 / 3.0), z)?;
    Ok(2.0 * I * 3f64.sqrt() * (2.0 * w * f1 - w * w * f2))
}

/// `G(m) − G(t)` with `G(m) = 2i√3 (2 e^{2iπm/3} ₂F₁(1/3,1;4/3;e^{2iπm}) − e^{4iπm/3} ₂F₁(2/3,1;5/3;e^{2iπm}))`.
pub fn cf_2f1_family(m: ComplexValue, t: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(two_f1_term(m)? - two_f1_term(t)?, "cf_2f1_family")
}

fn limit_term(m: ComplexValue) -> Result<ComplexValue> {
    let z = unit_power(m);
    let v = c(0.5, -LN_2 / (2.0 * PI));
    let phi1 = lerch_phi(z, real(1.0), v, None)?;
    let phi2 = lerch_phi(z, real(2.0), v, None)?;
    Ok(cpow(real(2.0), m)? * (I * PI * m).exp() / PI * (2.0 * PI * m * phi1 + I * phi2))
}

/// `H(m) − H(t)` with `H(m) = 2^m e^{iπm}/π (2πm Φ(e^{2iπm},1,v) + i Φ(e^{2iπm},2,v))`,
/// `v = (π − i log 2)/(2π)`.
pub fn cf_3_1_3_70(m: ComplexValue, t: ComplexValue) -> Result<ComplexValue> {
    ensure_finite(limit_term(m)? - limit_term(t)?, "cf_3_1_3_70")
}

/// Fixed constants of the reciprocal-log rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DisplayedConstant {
    /// `4 log(4 − 2√3)`
    FourLog,
    /// `log(sec⁴(π/9) / (4 (sin(π/36) + cos(π/36))⁴))`
    SecantRatio,
    /// `2 (log(7/4 − √3) + 2 log csc(π/18))`
    CosecantSum,
    /// `2 log((1 + cos(π/9)) / (4 − 4 sin(π/18)))`
    CosineRatio,
}

pub fn displayed_constant(which: DisplayedConstant) -> ComplexValue {
    let s3 = 3f64.sqrt();
    real(match which {
        DisplayedConstant::FourLog => 4.0 * (4.0 - 2.0 * s3).ln(),
        DisplayedConstant::SecantRatio => {
            let sec = 1.0 / (PI / 9.0).cos();
            let sc = (PI / 36.0).sin() + (PI / 36.0).cos();
            (sec.powi(4) / (4.0 * sc.powi(4))).ln()
        }
        DisplayedConstant::CosecantSum => 2.0 * ((1.75 - s3).ln() + 2.0 * (1.0 / (PI / 18.0).sin()).ln()),
        DisplayedConstant::CosineRatio => 2.0 * ((1.0 + (PI / 9.0).cos()) / (4.0 - 4.0 * (PI / 18.0).sin())).ln(),
    })
}

/// Which evaluator an entry uses.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedForm {
    Csc,
    CscLog,
    AcoshLog,
    AcoshLogSquared,
    ZetaFamily,
    Glaisher,
    Hypergeometric,
    Displayed(DisplayedConstant),
    LerchLimit,
    /// The base value times `1 + rel`; used to check that the verifier catches wrong formulas.
    Perturbed {
        base: Box<ClosedForm>,
        rel: f64,
    },
}

impl ClosedForm {
    pub fn evaluate(&self, params: &EntryParams) -> Result<ComplexValue> {
        let p = &params.base;
        let t = || params.t.ok_or_else(|| Error::Document("entry needs a second exponent t".into()));
        match self {
            ClosedForm::Csc => cf_3_1_3_48(p),
            ClosedForm::CscLog => cf_3_1_3_59(p),
            ClosedForm::AcoshLog => Ok(cf_3_1_3_60_61().0),
            ClosedForm::AcoshLogSquared => Ok(cf_3_1_3_60_61().1),
            ClosedForm::ZetaFamily => cf_3_1_3_62(p.k),
            ClosedForm::Glaisher => Ok(cf_3_1_3_63()),
            ClosedForm::Hypergeometric => cf_2f1_family(p.m, t()?),
            ClosedForm::Displayed(which) => Ok(displayed_constant(*which)),
            ClosedForm::LerchLimit => cf_3_1_3_70(p.m, t()?),
            ClosedForm::Perturbed { base, rel } => Ok(base.evaluate(params)? * (1.0 + rel)),
        }
    }

    /// The evaluator with any perturbation stripped.
    pub fn root(&self) -> &ClosedForm {
        match self {
            ClosedForm::Perturbed { base, .. } => base.root(),
            other => other,
        }
    }
}
