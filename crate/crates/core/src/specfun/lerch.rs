//! The Lerch transcendent `Φ(z, s, v) = Σ_{n≥0} z^n (v+n)^{-s}` and its
//! continuations.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::elementary::{cos_pi, principal_log, sin_pi};
use super::gamma::{digamma, recip_gamma};
use super::zeta::{hurwitz_zeta, hurwitz_zeta_sderiv};
use crate::quadrature::{integrate_halfline_scaled, QuadConfig};
use crate::{ComplexValue, Error, Result};

/// `|z|` bound for the direct power series.
const DIRECT_SERIES_RADIUS: f64 = 0.9;
const DIRECT_SERIES_MAX_TERMS: usize = 20_000;
/// Largest denominator recognised when matching `z` to a root of unity.
const MAX_ROOT_DENOMINATOR: i64 = 64;
const ROOT_TOLERANCE: f64 = 1e-12;

/// Evaluation strategy for [`lerch_phi`], listed in dispatch priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LerchStrategy {
    /// Exact rational form for `s = 0, −1, −2, …`, valid for every `z ≠ 1`.
    NegativeIntegerS,
    /// Power series for `|z| ≤ 0.9`.
    DirectSeries,
    /// `z = e^{2πi p/q}`: split by residue class into `q` Hurwitz zetas.
    RootOfUnityHurwitz,
    /// `Γ(s)^{-1} ∫ t^{s−1} e^{−vt} / (1 − z e^{−t}) dt`, `Re v > 0`, `z ∉ [1, ∞)`.
    IntegralRep,
}

impl LerchStrategy {
    pub const DISPATCH_ORDER: [LerchStrategy; 4] = [
        LerchStrategy::NegativeIntegerS,
        LerchStrategy::DirectSeries,
        LerchStrategy::RootOfUnityHurwitz,
        LerchStrategy::IntegralRep,
    ];

    /// `Ok(())` when the strategy covers `(z, s, v)`, otherwise the reason it does not.
    pub fn applicability(self, z: ComplexValue, s: ComplexValue, v: ComplexValue) -> std::result::Result<(), String> {
        match self {
            LerchStrategy::NegativeIntegerS => {
                if nonpositive_integer(s).is_none() {
                    Err("s is not a non-positive integer".into())
                } else if z == ComplexValue::new(1.0, 0.0) {
                    Err("pole at z = 1".into())
                } else {
                    Ok(())
                }
            }
            LerchStrategy::DirectSeries => {
                if z.norm() > DIRECT_SERIES_RADIUS {
                    Err(format!("|z| = {} exceeds {DIRECT_SERIES_RADIUS}", z.norm()))
                } else if nonpositive_integer(v).is_some() {
                    Err("v is a non-positive integer".into())
                } else {
                    Ok(())
                }
            }
            LerchStrategy::RootOfUnityHurwitz => {
                if RationalAngle::from_unit(z).is_none() {
                    Err("z is not a recognised root of unity".into())
                } else if !(v.re > 0.0) {
                    Err("needs Re(v) > 0".into())
                } else if z == ComplexValue::new(1.0, 0.0) && s == ComplexValue::new(1.0, 0.0) {
                    Err("pole at z = 1, s = 1".into())
                } else {
                    Ok(())
                }
            }
            LerchStrategy::IntegralRep => {
                if !(v.re > 0.0) {
                    Err("needs Re(v) > 0".into())
                } else if z.im == 0.0 && z.re >= 1.0 {
                    Err("z on the cut [1, ∞)".into())
                } else if z.norm() > 1.0 && !(s.im == 0.0 && s.re.fract() == 0.0) {
                    Err("|z| > 1 is only continued for integer s".into())
                } else {
                    Ok(())
                }
            }
        }
    }
}

impl fmt::Display for LerchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn nonpositive_integer(s: ComplexValue) -> Option<u32> {
    (s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0 && s.re > -(u32::MAX as f64)).then(|| (-s.re) as u32)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A point `e^{2πi·num/den}` on the unit circle, stored reduced with `0 ≤ num < den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalAngle {
    num: i64,
    den: i64,
}

impl RationalAngle {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::Domain(format!("angle denominator must be positive, got {den}")));
        }
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        Ok(Self { num: num.rem_euclid(den), den })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// Recognises `z` as a root of unity with denominator at most 64.
    pub fn from_unit(z: ComplexValue) -> Option<Self> {
        if (z.norm() - 1.0).abs() > ROOT_TOLERANCE {
            return None;
        }
        let turns = z.im.atan2(z.re) / (2.0 * PI);
        (1..=MAX_ROOT_DENOMINATOR).find_map(|den| {
            let scaled = turns * den as f64;
            let num = scaled.round();
            ((scaled - num).abs() < ROOT_TOLERANCE * den as f64)
                .then(|| Self::new(num as i64, den).expect("positive denominator"))
        })
    }

    /// The root of unity itself, exact at quarter turns.
    pub fn to_complex(&self) -> ComplexValue {
        let x = ComplexValue::new(2.0 * self.num as f64 / self.den as f64, 0.0);
        ComplexValue::new(cos_pi(x).re, sin_pi(x).re)
    }

    fn power(&self, r: i64) -> ComplexValue {
        Self::new(self.num * r, self.den).expect("positive denominator").to_complex()
    }
}

/// `Φ(z, s, v)`; dispatches on the first applicable strategy unless one is forced.
pub fn lerch_phi(
    z: ComplexValue,
    s: ComplexValue,
    v: ComplexValue,
    strategy: Option<LerchStrategy>,
) -> Result<ComplexValue> {
    let chosen = match strategy {
        Some(st) => {
            st.applicability(z, s, v)
                .map_err(|reason| Error::StrategyNotApplicable { strategy: st.to_string(), reason })?;
            st
        }
        None => LerchStrategy::DISPATCH_ORDER
            .into_iter()
            .find(|st| st.applicability(z, s, v).is_ok())
            .ok_or_else(|| Error::UnsupportedRegion { z: z.to_string(), s: s.to_string(), v: v.to_string() })?,
    };
    match chosen {
        LerchStrategy::NegativeIntegerS => lerch_phi_neg_int_s(z, nonpositive_integer(s).expect("checked"), v),
        LerchStrategy::DirectSeries => direct_series(z, s, v),
        LerchStrategy::RootOfUnityHurwitz => lerch_root_of_unity(RationalAngle::from_unit(z).expect("checked"), s, v),
        LerchStrategy::IntegralRep => integral_rep(z, s, v),
    }
}

fn direct_series(z: ComplexValue, s: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    let zabs = z.norm();
    if zabs >= 1.0 {
        return Err(Error::Domain(format!("direct series diverges for |z| = {zabs}")));
    }
    let mut sum = ComplexValue::new(0.0, 0.0);
    let mut zn = ComplexValue::new(1.0, 0.0);
    for n in 0..DIRECT_SERIES_MAX_TERMS {
        let base = v + n as f64;
        let term = zn * (-s * principal_log(base)?).exp();
        sum += term;
        zn *= z;
        if zn.norm() == 0.0 {
            return Ok(sum);
        }
        // Successive |(v+n)^{-s}| ratios bound the tail by a geometric series.
        let next = v + (n + 1) as f64;
        let growth = (base.norm() / next.norm()).powf(s.re) * (s.im * (next.arg() - base.arg())).exp();
        let rho = zabs * growth.max(1.0);
        if rho < 1.0 {
            let tail = term.norm() * rho / (1.0 - rho);
            if tail <= 1e-17 * sum.norm() || tail == 0.0 {
                return Ok(sum);
            }
        }
    }
    Err(Error::SeriesDivergence(DIRECT_SERIES_MAX_TERMS))
}

/// `Φ(z, −kk, v) = P_kk(z, v) / (1 − z)^{kk+1}` with
/// `P_0 = 1`, `P_j = v(1−z)P_{j−1} + z(1−z)P′_{j−1} + j z P_{j−1}`.
pub fn lerch_phi_neg_int_s(z: ComplexValue, kk: u32, v: ComplexValue) -> Result<ComplexValue> {
    let one = ComplexValue::new(1.0, 0.0);
    if z == one {
        return Err(Error::Pole("Φ(z, −k, v) has a pole at z = 1".into()));
    }
    // coefficients of P in powers of z
    let mut poly = vec![one];
    for j in 1..=kk as usize {
        let mut next = vec![ComplexValue::new(0.0, 0.0); poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            // v(1−z)·c z^i
            next[i] += v * c;
            next[i + 1] -= v * c;
            // z(1−z)·i c z^{i−1}
            let ic = c * i as f64;
            next[i] += ic;
            next[i + 1] -= ic;
            // j z · c z^i
            next[i + 1] += c * j as f64;
        }
        poly = next;
    }
    let p = poly.iter().rev().fold(ComplexValue::new(0.0, 0.0), |acc, &c| acc * z + c);
    Ok(p / (one - z).powu(kk + 1))
}

/// `Φ(e^{2πi p/q}, s, v) = q^{−s} Σ_{r<q} e^{2πi p r/q} ζ(s, (v+r)/q)`.
///
/// At `s = 1` with `p ≠ 0` the Hurwitz poles cancel, leaving
/// `−q^{−1} Σ_r e^{2πi p r/q} ψ((v+r)/q)`.
pub fn lerch_root_of_unity(angle: RationalAngle, s: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    if !(v.re > 0.0) {
        return Err(Error::Domain(format!("root-of-unity route needs Re(v) > 0, got {v}")));
    }
    let q = angle.den() as f64;
    if angle.num() == 0 {
        return hurwitz_zeta(s, v);
    }
    let mut sum = ComplexValue::new(0.0, 0.0);
    if s == ComplexValue::new(1.0, 0.0) {
        for r in 0..angle.den() {
            sum -= angle.power(r) * digamma((v + r as f64) / q)?;
        }
        return Ok(sum / q);
    }
    for r in 0..angle.den() {
        sum += angle.power(r) * hurwitz_zeta(s, (v + r as f64) / q)?;
    }
    Ok((-s * q.ln()).exp() * sum)
}

/// `∂Φ/∂s` at a root of unity, differentiating the Hurwitz decomposition term by term.
pub fn lerch_root_of_unity_sderiv(angle: RationalAngle, s: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    if !(v.re > 0.0) {
        return Err(Error::Domain(format!("root-of-unity route needs Re(v) > 0, got {v}")));
    }
    if s == ComplexValue::new(1.0, 0.0) {
        return Err(Error::Pole("s-derivative at s = 1 is not supported".into()));
    }
    let q = angle.den() as f64;
    let lq = q.ln();
    let mut value = ComplexValue::new(0.0, 0.0);
    let mut deriv = ComplexValue::new(0.0, 0.0);
    for r in 0..angle.den() {
        let w = angle.power(r);
        let arg = (v + r as f64) / q;
        value += w * hurwitz_zeta(s, arg)?;
        deriv += w * hurwitz_zeta_sderiv(s, arg)?;
    }
    Ok((-s * lq).exp() * (deriv - lq * value))
}

/// Distance from `t = 0` to the nearest zero of `1 − z e^{−t}`.
fn singularity_radius(z: ComplexValue) -> Result<f64> {
    let lz = principal_log(z)?;
    Ok([-1.0, 0.0, 1.0]
        .iter()
        .map(|&k| (lz + ComplexValue::new(0.0, 2.0 * PI * k)).norm())
        .fold(f64::INFINITY, f64::min))
}

const TAYLOR_MAX_TERMS: usize = 200;

/// Integral representation continued to all `s`: the piece `[0, τ]` is
/// integrated term by term from the Taylor series of `e^{−vt}/(1 − z e^{−t})`,
/// the rest by double-exponential quadrature.
fn integral_rep(z: ComplexValue, s: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    let zero = ComplexValue::new(0.0, 0.0);
    let one = ComplexValue::new(1.0, 0.0);
    if z == zero {
        return Ok((-s * principal_log(v)?).exp());
    }
    let tau = (0.5 * singularity_radius(z)?).min(1.0);

    // Taylor coefficients g_j of e^{−vt}/(1 − z e^{−t}) by series division.
    let h0 = one - z;
    let mut g: Vec<ComplexValue> = Vec::with_capacity(64);
    let mut h: Vec<ComplexValue> = vec![h0];
    let mut a_j = one;
    let mut fact = 1.0;
    let neg_int = nonpositive_integer(s);
    let mut head = zero;
    let ln_tau = tau.ln();
    for j in 0..TAYLOR_MAX_TERMS {
        if j > 0 {
            a_j *= -v / j as f64;
            fact *= j as f64;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            h.push(-z * sign / fact);
        }
        let mut gj = a_j;
        for i in 1..=j {
            gj -= h[i] * g[j - i];
        }
        gj /= h0;
        g.push(gj);

        let exponent = s + j as f64;
        if neg_int == Some(j as u32) {
            // 1/Γ(s) · 1/(s+j) → (−1)^j j! at s = −j
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            return Ok(gj * sign * fact);
        }
        let term = gj * (exponent * ln_tau).exp() / exponent;
        head += term;
        if j > 4 && neg_int.is_none() && (gj.norm() * tau.powi(j as i32)) < 1e-18 * head.norm().max(1e-300) {
            break;
        }
        if j + 1 == TAYLOR_MAX_TERMS {
            return Err(Error::SeriesDivergence(TAYLOR_MAX_TERMS));
        }
    }
    if neg_int.is_some() {
        return Ok(zero);
    }

    let rate = v.re.max(1e-3);
    let tail = integrate_halfline_scaled(
        |x| {
            let t = tau + x;
            let e = (s - 1.0) * t.ln() - v * t;
            if e.re < -745.0 {
                return Ok(zero);
            }
            Ok(e.exp() / (one - z * (-t).exp()))
        },
        1.0 / rate,
        &QuadConfig { rel_tol: 1e-14, ..QuadConfig::default() },
    )?;
    Ok(recip_gamma(s) * (head + tail.value))
}
