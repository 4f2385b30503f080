use std::sync::OnceLock;

use super::elementary::principal_log;
use crate::{ComplexValue, Error, Result};

/// `B_2, B_4, …, B_26`.
pub const BERNOULLI_EVEN: [f64; 13] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
];

/// Number of Bernoulli correction terms.
const EM_TERMS: usize = 12;
/// Largest upward shift of `v`.
const EM_MAX_SHIFT: usize = 25;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Picks the shift `N` minimising truncation error plus cancellation in the
/// direct partial sum. For `Re s ≥ 0` this is the full shift.
///
/// The remainder of `ζ` itself vanishes at small non-positive integers; the
/// remainder of `∂ζ/∂s` does not, so its factors are floored at one.
fn choose_shift(s: ComplexValue, v: ComplexValue, derivative: bool) -> usize {
    let floor = if derivative { 1.0 } else { 0.0 };
    let remainder_coeff = BERNOULLI_EVEN[EM_TERMS].abs() / factorial(2 * EM_TERMS + 2)
        * (0..=2 * EM_TERMS).map(|i| (s + i as f64).norm().max(floor)).product::<f64>();
    let denom = (s - 1.0).norm().max(1e-300);
    let mut best = (EM_MAX_SHIFT, f64::INFINITY);
    for n in 0..=EM_MAX_SHIFT {
        let w = (v + n as f64).norm();
        if w < 1.0 {
            continue;
        }
        let truncation = remainder_coeff * w.powf(-s.re - 2.0 * EM_TERMS as f64 - 1.0);
        let cancellation = f64::EPSILON * w.powf(1.0 - s.re) / denom;
        let total = truncation + cancellation;
        if total <= best.1 {
            best = (n, total);
        }
    }
    best.0
}

fn check_args(s: ComplexValue, v: ComplexValue) -> Result<()> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("Hurwitz zeta at s = 1".into()));
    }
    if !(v.re > 0.0) {
        return Err(Error::Domain(format!("Hurwitz zeta needs Re(v) > 0, got v = {v}")));
    }
    if !(s.re.is_finite() && s.im.is_finite() && v.im.is_finite()) {
        return Err(Error::Domain("non-finite Hurwitz zeta argument".into()));
    }
    Ok(())
}

/// Hurwitz zeta `ζ(s, v) = Σ (v+n)^{-s}` continued by Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    check_args(s, v)?;
    let shift = choose_shift(s, v, false);
    let mut sum = ComplexValue::new(0.0, 0.0);
    for n in 0..shift {
        sum += (-s * principal_log(v + n as f64)?).exp();
    }
    let w = v + shift as f64;
    let lw = principal_log(w)?;
    let w_neg_s = (-s * lw).exp();
    sum += w * w_neg_s / (s - 1.0) + 0.5 * w_neg_s;

    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · w^{−s−2j+1}
    let winv = w.inv();
    let winv2 = winv * winv;
    let mut rising = s;
    let mut wpow = w_neg_s * winv;
    for j in 1..=EM_TERMS {
        let term = BERNOULLI_EVEN[j - 1] / factorial(2 * j) * rising * wpow;
        sum += term;
        rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        wpow *= winv2;
    }
    Ok(sum)
}

/// `∂ζ(s, v)/∂s` by term-wise differentiation of the Euler–Maclaurin formula.
pub fn hurwitz_zeta_sderiv(s: ComplexValue, v: ComplexValue) -> Result<ComplexValue> {
    check_args(s, v)?;
    let shift = choose_shift(s, v, true);
    let mut sum = ComplexValue::new(0.0, 0.0);
    for n in 0..shift {
        let l = principal_log(v + n as f64)?;
        sum -= l * (-s * l).exp();
    }
    let w = v + shift as f64;
    let lw = principal_log(w)?;
    let w_neg_s = (-s * lw).exp();
    let tail = w * w_neg_s / (s - 1.0);
    sum += -lw * tail - tail / (s - 1.0) - 0.5 * lw * w_neg_s;

    let winv = w.inv();
    let winv2 = winv * winv;
    let mut rising = s;
    let mut rising_d = ComplexValue::new(1.0, 0.0);
    let mut wpow = w_neg_s * winv;
    for j in 1..=EM_TERMS {
        let b = BERNOULLI_EVEN[j - 1] / factorial(2 * j);
        sum += b * (rising_d - lw * rising) * wpow;
        for f in [s + (2 * j - 1) as f64, s + (2 * j) as f64] {
            rising_d = rising_d * f + rising;
            rising *= f;
        }
        wpow *= winv2;
    }
    Ok(sum)
}

/// Riemann zeta, `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: ComplexValue) -> Result<ComplexValue> {
    hurwitz_zeta(s, ComplexValue::new(1.0, 0.0))
}

/// Glaisher–Kinkelin constant `A = exp(1/12 − ζ′(−1))`, computed once.
pub fn glaisher_constant() -> ComplexValue {
    static GLAISHER: OnceLock<f64> = OnceLock::new();
    let a = *GLAISHER.get_or_init(|| {
        let d =
            hurwitz_zeta_sderiv(ComplexValue::new(-1.0, 0.0), ComplexValue::new(1.0, 0.0)).expect("ζ′(−1) is regular");
        (1.0 / 12.0 - d.re).exp()
    });
    ComplexValue::new(a, 0.0)
}
