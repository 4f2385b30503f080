use std::f64::consts::PI;

use super::elementary::{cot_pi, sin_pi};
use crate::{ComplexValue, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(z)` for `Re z ≥ 1/2` (Lanczos, g = 7).
fn ln_gamma_right(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut x = ComplexValue::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `1/Γ(z)`, entire; exactly zero at the non-positive integers.
pub fn recip_gamma(z: ComplexValue) -> ComplexValue {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return ComplexValue::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        // 1/Γ(z) = sin(πz) Γ(1−z) / π
        sin_pi(z) * ln_gamma_right(1.0 - z).exp() / PI
    }
}

const DIGAMMA_SHIFT: f64 = 10.0;

/// Digamma `ψ(w)` by upward recurrence and the Stirling series.
pub fn digamma(w: ComplexValue) -> Result<ComplexValue> {
    if w.im == 0.0 && w.re <= 0.0 && w.re.fract() == 0.0 {
        return Err(Error::Pole(format!("digamma at {}", w.re)));
    }
    if w.re < 0.5 {
        // ψ(w) = ψ(1−w) − π cot(πw)
        return Ok(digamma(1.0 - w)? - PI * cot_pi(w)?);
    }
    let mut w = w;
    let mut acc = ComplexValue::new(0.0, 0.0);
    while w.norm() < DIGAMMA_SHIFT {
        acc -= w.inv();
        w += 1.0;
    }
    let winv2 = (w * w).inv();
    let mut series = ComplexValue::new(0.0, 0.0);
    let mut pow = winv2;
    for (j, b) in super::zeta::BERNOULLI_EVEN.iter().take(8).enumerate() {
        series += *b / (2.0 * (j + 1) as f64) * pow;
        pow *= winv2;
    }
    Ok(acc + w.ln() - 0.5 * w.inv() - series)
}
