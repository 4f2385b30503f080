use std::f64::consts::PI;

use crate::{ComplexValue, Error, Result};

/// Replace a negative-zero imaginary part by `+0.0` so that values on the
/// negative real axis land on the upper side of every cut.
fn unsigned_zero(z: ComplexValue) -> ComplexValue {
    if z.im == 0.0 {
        ComplexValue::new(z.re, 0.0)
    } else {
        z
    }
}

pub fn ensure_finite(z: ComplexValue, what: &str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain(format!("{what} produced a non-finite value {z}")))
    }
}

/// Principal logarithm, imaginary part in `(-π, π]`.
pub fn principal_log(z: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("log(0)".into()));
    }
    if z.re.is_nan() || z.im.is_nan() {
        return Err(Error::Domain("log(NaN)".into()));
    }
    let z = unsigned_zero(z);
    Ok(ComplexValue::new(z.norm().ln(), z.im.atan2(z.re)))
}

/// Principal square root; the cut is the negative real axis, approached from above.
pub fn principal_sqrt(z: ComplexValue) -> ComplexValue {
    unsigned_zero(z).sqrt()
}

/// `base^exponent = exp(exponent · Log base)` with the principal logarithm.
/// `0^w` is `0` for `Re w > 0` and `1` for `w = 0`.
pub fn cpow(base: ComplexValue, exponent: ComplexValue) -> Result<ComplexValue> {
    if base.re == 0.0 && base.im == 0.0 {
        return if exponent.re == 0.0 && exponent.im == 0.0 {
            Ok(ComplexValue::new(1.0, 0.0))
        } else if exponent.re > 0.0 {
            Ok(ComplexValue::new(0.0, 0.0))
        } else {
            Err(Error::Pole(format!("0^{exponent}")))
        };
    }
    Ok((exponent * principal_log(base)?).exp())
}

/// Principal inverse hyperbolic cosine, `log(z + √(z+1)·√(z−1))`.
///
/// Real part is non-negative; the cut runs along the real axis left of 1.
pub fn acosh_principal(z: ComplexValue) -> ComplexValue {
    let z = unsigned_zero(z);
    let one = ComplexValue::new(1.0, 0.0);
    let w = z + principal_sqrt(z + one) * principal_sqrt(z - one);
    let w = unsigned_zero(w);
    ComplexValue::new(w.norm().ln(), w.im.atan2(w.re))
}

/// `(x mod 2)` reduced to `[-1, 1]`, exact in floating point.
fn reduce_half_turns(x: f64) -> f64 {
    let r = x % 2.0;
    if r > 1.0 {
        r - 2.0
    } else if r < -1.0 {
        r + 2.0
    } else {
        r
    }
}

fn sin_pi_real(x: f64) -> f64 {
    let r = reduce_half_turns(x);
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    if r.abs() == 0.5 {
        return r.signum();
    }
    (PI * r).sin()
}

fn cos_pi_real(x: f64) -> f64 {
    let r = reduce_half_turns(x);
    if r.abs() == 0.5 {
        return 0.0;
    }
    (PI * r).cos()
}

/// `sin(πz)` with exact reduction of the real part.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    ComplexValue::new(sin_pi_real(z.re) * y.cosh(), cos_pi_real(z.re) * y.sinh())
}

/// `cos(πz)` with exact reduction of the real part.
pub fn cos_pi(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    ComplexValue::new(cos_pi_real(z.re) * y.cosh(), -sin_pi_real(z.re) * y.sinh())
}

/// `csc(πz)`; integer `z` is a pole.
pub fn csc_pi(z: ComplexValue) -> Result<ComplexValue> {
    let s = sin_pi(z);
    if s.re == 0.0 && s.im == 0.0 {
        return Err(Error::Pole(format!("csc(π·{z})")));
    }
    Ok(s.inv())
}

/// `cot(πz)`; integer `z` is a pole.
pub fn cot_pi(z: ComplexValue) -> Result<ComplexValue> {
    let s = sin_pi(z);
    if s.re == 0.0 && s.im == 0.0 {
        return Err(Error::Pole(format!("cot(π·{z})")));
    }
    Ok(cos_pi(z) / s)
}

/// `(e^z − 1)/z`, accurate near `z = 0`.
pub fn exprel(z: ComplexValue) -> ComplexValue {
    if z.norm() < 1e-5 {
        // 1 + z/2 + z²/6 + z³/24
        let one = ComplexValue::new(1.0, 0.0);
        return one + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
    }
    expm1(z) / z
}

fn expm1(z: ComplexValue) -> ComplexValue {
    let (s, c) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    let em1 = z.re.exp_m1();
    ComplexValue::new(em1 * c - 2.0 * half * half, (em1 + 1.0) * s)
}
