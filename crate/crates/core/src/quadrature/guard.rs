use serde::{Deserialize, Serialize};

use crate::{ComplexValue, Error, Result};

/// Half-width of the window around the removable point where the Taylor ratio is used.
pub const GUARD_EPS: f64 = 1e-4;

/// `N(u) = Σ c_j u^{e_j}` for real `u > 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSum {
    pub terms: Vec<(ComplexValue, ComplexValue)>,
}

impl PowerSum {
    pub fn new(terms: Vec<(ComplexValue, ComplexValue)>) -> Self {
        Self { terms }
    }

    pub fn value(&self, u: f64) -> ComplexValue {
        let lu = u.ln();
        self.terms.iter().map(|&(c, e)| c * (e * lu).exp()).sum()
    }

    /// `N^{(n)}(a)/n!` for `n = 0..=order`.
    pub fn taylor(&self, a: f64, order: usize) -> Vec<ComplexValue> {
        let la = a.ln();
        (0..=order)
            .map(|n| {
                self.terms
                    .iter()
                    .map(|&(c, e)| {
                        let mut binom = ComplexValue::new(1.0, 0.0);
                        for i in 0..n {
                            binom *= (e - i as f64) / (i + 1) as f64;
                        }
                        c * binom * ((e - n as f64) * la).exp()
                    })
                    .sum()
            })
            .collect()
    }

    fn magnitude(&self, a: f64) -> f64 {
        let la = a.ln();
        self.terms.iter().map(|&(c, e)| (c * (e * la).exp()).norm()).sum()
    }
}

/// `N(u) / log(a/u)` where `N(a) = 0`.
///
/// Within `eps` of `a` the ratio of the order-4 Taylor expansions is returned,
/// otherwise the direct quotient.
pub fn removable_singularity_guard(num: &PowerSum, a: f64, u: f64, eps: f64) -> Result<ComplexValue> {
    if !(a > 0.0) || !(u > 0.0) {
        return Err(Error::Domain(format!("guard needs a > 0 and u > 0, got a={a}, u={u}")));
    }
    let coeffs = num.taylor(a, 4);
    if coeffs[0].norm() > 1e-12 * num.magnitude(a).max(f64::MIN_POSITIVE) {
        return Err(Error::NonRemovable(format!("numerator is {} at u = {a}", coeffs[0])));
    }
    let d = u - a;
    if d.abs() < eps {
        let x = d / a;
        let top = coeffs[1] + d * (coeffs[2] + d * (coeffs[3] + d * coeffs[4]));
        // log(a/u)/d = −(1/a)(1 − x/2 + x²/3 − x³/4)
        let bottom = -(1.0 - x * (0.5 - x * (1.0 / 3.0 - 0.25 * x))) / a;
        Ok(top / bottom)
    } else {
        Ok(num.value(u) / -(d / a).ln_1p())
    }
}
