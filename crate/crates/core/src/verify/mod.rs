//! Runs catalog entries through both quadrature routes and classifies the outcome.

mod report;

use std::time::Instant;

use glob::Pattern;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{cf_3_1_3_48, random_paper_strict_params, rhs_main_theorem, CatalogEntry, DomainClass};
use crate::quadrature::{integrate_2d, integrate_reduced, Order, QuadConfig, QuadratureResult};
use crate::{ComplexValue, Error, Result};

pub use report::{render, OutputFormat, Report, Summary, REPORT_SCHEMA};

/// Below this closed-form magnitude comparisons are absolute.
pub const NEAR_ZERO: f64 = 1e-8;
/// Absolute tolerance used near analytic zeros.
pub const ABS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub rel_tol: f64,
    pub entry_filter: String,
    pub output_format: OutputFormat,
    pub seed: u64,
    pub workers: usize,
    /// Include wall-clock times; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-6,
            entry_filter: "*".into(),
            output_format: OutputFormat::Markdown,
            seed: 0,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-2) {
            return Err(Error::Config(format!("rel_tol must lie in (0, 1e-2], got {}", self.rel_tol)));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        self.pattern().map(|_| ())
    }

    pub fn pattern(&self) -> Result<Pattern> {
        Pattern::new(&self.entry_filter).map_err(|e| Error::Config(format!("bad entry glob: {e}")))
    }

    /// Quadrature runs well below the comparison tolerance.
    pub fn quad_config(&self) -> QuadConfig {
        QuadConfig { rel_tol: (self.rel_tol * 1e-3).clamp(1e-12, 1e-9), ..QuadConfig::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Disputed,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Disputed => "DISPUTED",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub entry_id: String,
    pub integrand: String,
    pub formula: String,
    pub domain: DomainClass,
    pub closed_form: Option<ComplexValue>,
    pub quad_1d: Option<QuadratureResult>,
    pub quad_2d: Option<QuadratureResult>,
    pub rel_err_1d: Option<f64>,
    pub rel_err_2d: Option<f64>,
    /// Relative gap between the two routes.
    pub oracle_gap: Option<f64>,
    /// Whether the errors above are absolute (closed form near zero).
    pub absolute: bool,
    pub two_d_informational: bool,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

/// `|v − reference|`, relative unless the reference is near zero.
fn discrepancy(v: ComplexValue, reference: ComplexValue) -> (f64, bool) {
    let diff = (v - reference).norm();
    if reference.norm() < NEAR_ZERO {
        (diff, true)
    } else {
        (diff / reference.norm(), false)
    }
}

fn within(err: f64, absolute: bool, rel_tol: f64) -> bool {
    err <= if absolute { ABS_TOL } else { rel_tol }
}

fn skipped(entry: &CatalogEntry, reason: String) -> VerificationRecord {
    VerificationRecord {
        entry_id: entry.id.clone(),
        integrand: entry.integrand_text.to_string(),
        formula: entry.closed_form_text.to_string(),
        domain: entry.domain,
        closed_form: None,
        quad_1d: None,
        quad_2d: None,
        rel_err_1d: None,
        rel_err_2d: None,
        oracle_gap: None,
        absolute: false,
        two_d_informational: !entry.two_d_authoritative(),
        status: Status::Skipped,
        reason: Some(reason),
        runtime_ms: None,
    }
}

/// Evaluates the closed form and both routes and classifies the entry.
///
/// PASS needs a converged reduced integral within tolerance. DISPUTED needs two
/// converged routes that agree with each other but not with the closed form; for
/// `1/log` rows the 2D route is informational, so those rows cannot be DISPUTED.
pub fn verify_entry(entry: &CatalogEntry, cfg: &RunConfig) -> VerificationRecord {
    let start = Instant::now();
    let mut record = classify(entry, cfg);
    if cfg.timings {
        record.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    record
}

fn classify(entry: &CatalogEntry, cfg: &RunConfig) -> VerificationRecord {
    let quad = cfg.quad_config();
    let cf = match entry.evaluate_closed_form() {
        Ok(v) => v,
        Err(e) => return skipped(entry, format!("closed form: {e}")),
    };
    let q1 = match integrate_reduced(&entry.integrand, &quad) {
        Ok(r) => r,
        Err(e) => {
            let mut r = skipped(entry, format!("reduced route: {e}"));
            r.closed_form = Some(cf);
            return r;
        }
    };
    let (q2, two_d_error) = match integrate_2d(&entry.integrand, Order::YThenX, &quad) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(format!("2D route: {e}"))),
    };
    let (err1, absolute) = discrepancy(q1.value, cf);
    let err2 = q2.map(|r| discrepancy(r.value, cf).0);
    let gap = q2.map(|r| discrepancy(r.value, q1.value).0);

    let pass = q1.converged && within(err1, absolute, cfg.rel_tol);
    let disputed = !pass
        && entry.two_d_authoritative()
        && q1.converged
        && q2.is_some_and(|r| r.converged)
        && gap.is_some_and(|g| within(g, q1.value.norm() < NEAR_ZERO, cfg.rel_tol))
        && err2.is_some_and(|e| !within(e, absolute, cfg.rel_tol));
    let status = if pass {
        Status::Pass
    } else if disputed {
        Status::Disputed
    } else {
        Status::Fail
    };
    let reason = match status {
        Status::Fail if !q1.converged => Some("reduced route did not converge".to_string()),
        Status::Fail => Some(two_d_error.unwrap_or_else(|| "closed form disagrees with the reduced route".into())),
        Status::Disputed => Some("both routes agree with each other, not with the closed form".into()),
        _ => two_d_error,
    };
    VerificationRecord {
        entry_id: entry.id.clone(),
        integrand: entry.integrand_text.to_string(),
        formula: entry.closed_form_text.to_string(),
        domain: entry.domain,
        closed_form: Some(cf),
        quad_1d: Some(q1),
        quad_2d: q2,
        rel_err_1d: Some(err1),
        rel_err_2d: err2,
        oracle_gap: gap,
        absolute,
        two_d_informational: !entry.two_d_authoritative(),
        status,
        reason,
        runtime_ms: None,
    }
}

/// Identity check between the general formula at `k = 0` and its collapsed form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub name: String,
    pub seed: u64,
    pub points: usize,
    pub tolerance: f64,
    pub max_rel_err: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

pub const COLLAPSE_POINTS: usize = 20;
pub const COLLAPSE_TOL: f64 = 1e-10;

pub fn theorem_collapse_check(seed: u64) -> PropertyCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut reason = None;
    for _ in 0..COLLAPSE_POINTS {
        let params = random_paper_strict_params(&mut rng);
        match (rhs_main_theorem(&params), cf_3_1_3_48(&params)) {
            (Ok(lhs), Ok(rhs)) => worst = worst.max(discrepancy(lhs, rhs).0),
            (Err(e), _) | (_, Err(e)) => {
                reason = Some(format!("m = {}: {e}", params.m));
                worst = f64::INFINITY;
                break;
            }
        }
    }
    PropertyCheck {
        name: "theorem_collapse_k0".into(),
        seed,
        points: COLLAPSE_POINTS,
        tolerance: COLLAPSE_TOL,
        max_rel_err: worst,
        passed: worst <= COLLAPSE_TOL,
        reason,
    }
}

/// Verifies every entry matching the filter, in parallel, sorted by id.
pub fn run_catalog(entries: &[CatalogEntry], cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let pattern = cfg.pattern()?;
    let selected: Vec<&CatalogEntry> = entries.iter().filter(|e| pattern.matches(&e.id)).collect();
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().map_err(|e| Error::Config(e.to_string()))?;
    let mut records: Vec<VerificationRecord> =
        pool.install(|| selected.par_iter().map(|e| verify_entry(e, cfg)).collect());
    records.sort_by(|a, b| a.entry_id.cmp(&b.entry_id));
    Ok(Report::new(cfg, records, vec![theorem_collapse_check(cfg.seed)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, default_params, make_entry, ClosedForm};

    fn entry(id: &str) -> CatalogEntry {
        build_catalog().into_iter().find(|e| e.id == id).unwrap()
    }

    #[test]
    fn config_bounds() {
        let mut cfg = RunConfig::default();
        assert!(cfg.validate().is_ok());
        cfg.rel_tol = 0.1;
        assert!(cfg.validate().is_err());
        cfg.rel_tol = 0.0;
        assert!(cfg.validate().is_err());
        cfg = RunConfig { entry_filter: "[".into(), ..RunConfig::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn fixed_entry_passes() {
        let r = verify_entry(&entry("3.1.3.60"), &RunConfig::default());
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert!(r.rel_err_1d.unwrap() <= 1e-6);
    }

    #[test]
    fn zero_case_uses_absolute_tolerance() {
        let mut p = default_params("3.1.3.62").unwrap();
        p.base.k = ComplexValue::new(0.0, 0.0);
        let r = verify_entry(&make_entry("3.1.3.62", p).unwrap(), &RunConfig::default());
        assert!(r.absolute);
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }

    #[test]
    fn perturbed_closed_forms_do_not_pass() {
        for id in ["3.1.3.60", "3.1.3.64"] {
            let e = entry(id);
            let base = Box::new(e.closed_form.clone());
            let e = e.with_closed_form(ClosedForm::Perturbed { base, rel: 1e-3 });
            let r = verify_entry(&e, &RunConfig::default());
            let expected = if id == "3.1.3.60" { Status::Disputed } else { Status::Fail };
            assert_eq!(r.status, expected, "{r:?}");
        }
    }

    #[test]
    fn invalid_params_skip() {
        let mut e = entry("3.1.3.48");
        e.params.base.p = ComplexValue::new(0.5, 0.0);
        let r = verify_entry(&e, &RunConfig::default());
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.is_some());
    }

    #[test]
    fn collapse_check_passes() {
        let c = theorem_collapse_check(0);
        assert!(c.passed, "{c:?}");
    }
}
