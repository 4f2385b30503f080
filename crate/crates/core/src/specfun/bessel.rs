use crate::quadrature::{integrate_halfline, QuadConfig};
use crate::{ComplexValue, Error, Result};

/// Modified Bessel function of the second kind,
/// `K_ν(z) = ∫₀^∞ e^{−z cosh t} cosh(νt) dt`, for `Re z > 0`.
pub fn bessel_k(nu: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re > 0.0) {
        return Err(Error::Domain(format!("K_ν(z) needs Re(z) > 0, got z = {z}")));
    }
    let zero = ComplexValue::new(0.0, 0.0);
    let cfg = QuadConfig { rel_tol: 1e-13, ..QuadConfig::default() };
    let r = integrate_halfline(
        |t| {
            let base = -z * t.cosh();
            if base.re < -745.0 || !base.re.is_finite() {
                return Ok(zero);
            }
            // ½(e^{νt} + e^{−νt}) folded into the exponent
            Ok(0.5 * ((base + nu * t).exp() + (base - nu * t).exp()))
        },
        &cfg,
    )?;
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn half_order_closed_form() {
        for x in [0.5, 1.0, 2.0, 5.0] {
            let k = bessel_k(c(0.5, 0.0), c(x, 0.0)).unwrap();
            let expect = (PI / (2.0 * x)).sqrt() * (-x).exp();
            assert!((k.re - expect).abs() <= 1e-12 * expect, "x={x}");
            assert!(k.im.abs() < 1e-15);
        }
    }

    #[test]
    fn even_in_order() {
        let z = c(1.3, 0.4);
        let nu = c(0.7, -0.2);
        let a = bessel_k(nu, z).unwrap();
        let b = bessel_k(-nu, z).unwrap();
        assert!((a - b).norm() < 1e-15 * a.norm());
    }

    #[test]
    fn k0_at_one() {
        // reference K₀(1) = 0.42102443824070833334
        let k = bessel_k(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((k.re - 0.421_024_438_240_708_3).abs() < 1e-15);
    }

    #[test]
    fn rejects_left_half_plane() {
        assert!(bessel_k(c(0.0, 0.0), c(0.0, 1.0)).is_err());
        assert!(bessel_k(c(0.0, 0.0), c(-1.0, 0.0)).is_err());
    }
}
