use super::lerch::lerch_phi;
use crate::{ComplexValue, Error, Result};

/// `₂F₁(a, 1; a+1; z) = a·Φ(z, 1, a)`, principal branch with the cut on `[1, ∞)`.
pub fn gauss_2f1_a1(a: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::BranchCut(format!("₂F₁(a,1;a+1;z) at z = {}", z.re)));
    }
    if z == ComplexValue::new(0.0, 0.0) {
        return Ok(ComplexValue::new(1.0, 0.0));
    }
    Ok(a * lerch_phi(z, ComplexValue::new(1.0, 0.0), a, None)?)
}
