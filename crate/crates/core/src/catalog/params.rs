use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{ComplexValue, Error, Result};

/// `(m, k, a, p, q)` of `∫∫ x^m y^{−m−1} e^{−px−qy−x²/(4y)} log^k(ax/y) dx dy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralParams {
    pub m: ComplexValue,
    pub k: ComplexValue,
    pub a: ComplexValue,
    pub p: ComplexValue,
    pub q: ComplexValue,
}

/// Whether a parameter point lies in the theorem's stated region or needs analytic continuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainClass {
    PaperStrict,
    AnalyticExtension,
}

impl DomainClass {
    /// `PaperStrict` iff `−1 < Re ≤ −1/2` and `−1 < Im < −1/2` for every exponent given.
    pub fn classify(exponents: &[ComplexValue]) -> Self {
        let strict = exponents.iter().all(|m| m.re > -1.0 && m.re <= -0.5 && m.im > -1.0 && m.im < -0.5);
        if strict {
            DomainClass::PaperStrict
        } else {
            DomainClass::AnalyticExtension
        }
    }

    /// The serialized name.
    pub fn as_str(self) -> &'static str {
        match self {
            DomainClass::PaperStrict => "paper_strict",
            DomainClass::AnalyticExtension => "analytic_extension",
        }
    }
}

impl IntegralParams {
    pub fn new(m: ComplexValue, k: ComplexValue, a: ComplexValue, p: ComplexValue, q: ComplexValue) -> Self {
        Self { m, k, a, p, q }
    }

    pub fn real(m: f64, k: f64, a: f64, p: f64, q: f64) -> Self {
        let c = |x| ComplexValue::new(x, 0.0);
        Self::new(c(m), c(k), c(a), c(p), c(q))
    }

    pub fn domain(&self) -> DomainClass {
        DomainClass::classify(&[self.m])
    }

    /// `m ∉ ℤ`, `q ≠ 0`, finite components.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m", self.m), ("k", self.k), ("a", self.a), ("p", self.p), ("q", self.q)] {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::Domain(format!("{name} is not finite")));
            }
        }
        if self.m.im == 0.0 && self.m.re.fract() == 0.0 {
            return Err(Error::Pole(format!("csc(πm) at integer m = {}", self.m.re)));
        }
        if self.q.norm() == 0.0 {
            return Err(Error::Domain("q = 0".into()));
        }
        Ok(())
    }

    /// `p² ≠ q`, the prefactor pole of the closed forms built on `acosh(p/√q)`.
    pub fn validate_theorem_form(&self) -> Result<()> {
        self.validate()?;
        let d = self.p * self.p - self.q;
        if d.norm() <= 1e-14 * self.q.norm() {
            return Err(Error::Pole("p² = q".into()));
        }
        Ok(())
    }
}

/// A random point in the theorem's region with `k = 0` and moderate `a, p, q`.
pub fn random_paper_strict_params<R: Rng>(rng: &mut R) -> IntegralParams {
    loop {
        let m = ComplexValue::new(-0.5 - 0.49 * rng.gen::<f64>(), -0.51 - 0.48 * rng.gen::<f64>());
        let a = ComplexValue::new(rng.gen_range(0.3..3.0), 0.0);
        let p = ComplexValue::new(rng.gen_range(0.3..3.0), rng.gen_range(-0.3..0.3));
        let q = ComplexValue::new(rng.gen_range(0.1..2.0), rng.gen_range(-0.3..0.3));
        let params = IntegralParams::new(m, ComplexValue::new(0.0, 0.0), a, p, q);
        if (p * p - q).norm() > 0.05 {
            return params;
        }
    }
}
