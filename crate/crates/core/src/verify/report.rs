use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{PropertyCheck, RunConfig, Status, VerificationRecord};
use crate::ComplexValue;

pub const REPORT_SCHEMA: &str = "lerchlab-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Markdown,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "markdown" => Ok(Self::Markdown),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub disputed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub rel_tol: f64,
    pub entry_filter: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub config: ReportConfig,
    pub records: Vec<VerificationRecord>,
    pub property_checks: Vec<PropertyCheck>,
    pub summary: Summary,
}

impl Report {
    pub fn new(cfg: &RunConfig, records: Vec<VerificationRecord>, property_checks: Vec<PropertyCheck>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Disputed => summary.disputed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Self {
            schema: REPORT_SCHEMA.into(),
            config: ReportConfig { rel_tol: cfg.rel_tol, entry_filter: cfg.entry_filter.clone(), seed: cfg.seed },
            records,
            property_checks,
            summary,
        }
    }

    /// 0 unless some entry or property check failed.
    pub fn exit_code(&self) -> i32 {
        let failed = self.summary.fail > 0 || self.property_checks.iter().any(|c| !c.passed);
        i32::from(failed)
    }
}

fn fmt_complex(z: ComplexValue) -> String {
    if z.im == 0.0 {
        format!("{:.12e}", z.re)
    } else {
        format!("{:.12e} {} {:.12e}i", z.re, if z.im < 0.0 { '-' } else { '+' }, z.im.abs())
    }
}

fn opt<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_else(|| "-".into())
}

fn markdown(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Verification report ({})\n", report.schema);
    let _ = writeln!(
        out,
        "rel_tol = {:e}, entries = `{}`, seed = {}\n",
        report.config.rel_tol, report.config.entry_filter, report.config.seed
    );
    let disputed: Vec<_> = report.records.iter().filter(|r| r.status == Status::Disputed).collect();
    if !disputed.is_empty() {
        let _ = writeln!(out, "**Disputed entries:**\n");
        for r in disputed {
            let _ = writeln!(out, "- {}: {}", r.entry_id, r.reason.as_deref().unwrap_or(""));
        }
        out.push('\n');
    }
    out.push_str("| Entry | f(x,y) | Closed form | Value | Reduced route | Error | 2D route | Status |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for r in &report.records {
        let err = opt(r.rel_err_1d, |e| format!("{e:.2e}{}", if r.absolute { " (abs)" } else { "" }));
        let two_d = opt(r.quad_2d, |q| {
            let gap = opt(r.oracle_gap, |g| format!("{g:.1e}"));
            format!("{} (gap {gap}{})", fmt_complex(q.value), if r.two_d_informational { ", info" } else { "" })
        });
        let status = match &r.reason {
            Some(reason) if r.status != Status::Pass => format!("{} ({reason})", r.status),
            _ => r.status.to_string(),
        };
        let _ = writeln!(
            out,
            "| {} | `{}` | `{}` | {} | {} | {} | {} | {} |",
            r.entry_id,
            r.integrand,
            r.formula,
            opt(r.closed_form, fmt_complex),
            opt(r.quad_1d, |q| fmt_complex(q.value)),
            err,
            two_d,
            status
        );
    }
    out.push('\n');
    for c in &report.property_checks {
        let _ = writeln!(
            out,
            "Property `{}`: {} points (seed {}), max error {:.2e}, tolerance {:.0e}: {}",
            c.name,
            c.points,
            c.seed,
            c.max_rel_err,
            c.tolerance,
            if c.passed { "PASS" } else { "FAIL" }
        );
    }
    let s = &report.summary;
    let _ = writeln!(out, "\nPASS {}, FAIL {}, DISPUTED {}, SKIPPED {}", s.pass, s.fail, s.disputed, s.skipped);
    out
}

fn csv(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let num = |v: Option<f64>| v.map(|x| format!("{x:e}")).unwrap_or_default();
    let parts = |z: Option<ComplexValue>| (num(z.map(|z| z.re)), num(z.map(|z| z.im)));
    let _ = w.write_record([
        "entry_id",
        "domain",
        "status",
        "closed_form_re",
        "closed_form_im",
        "quad_1d_re",
        "quad_1d_im",
        "quad_1d_err",
        "quad_1d_converged",
        "quad_2d_re",
        "quad_2d_im",
        "quad_2d_err",
        "quad_2d_converged",
        "rel_err_1d",
        "rel_err_2d",
        "oracle_gap",
        "absolute",
        "reason",
        "runtime_ms",
    ]);
    for r in &report.records {
        let (cf_re, cf_im) = parts(r.closed_form);
        let (q1_re, q1_im) = parts(r.quad_1d.map(|q| q.value));
        let (q2_re, q2_im) = parts(r.quad_2d.map(|q| q.value));
        let _ = w.write_record([
            r.entry_id.clone(),
            r.domain.as_str().to_string(),
            r.status.to_string(),
            cf_re,
            cf_im,
            q1_re,
            q1_im,
            num(r.quad_1d.map(|q| q.err_estimate)),
            r.quad_1d.map(|q| q.converged.to_string()).unwrap_or_default(),
            q2_re,
            q2_im,
            num(r.quad_2d.map(|q| q.err_estimate)),
            r.quad_2d.map(|q| q.converged.to_string()).unwrap_or_default(),
            num(r.rel_err_1d),
            num(r.rel_err_2d),
            num(r.oracle_gap),
            r.absolute.to_string(),
            r.reason.clone().unwrap_or_default(),
            r.runtime_ms.map(|t| t.to_string()).unwrap_or_default(),
        ]);
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv")
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Markdown => markdown(report),
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        OutputFormat::Csv => csv(report),
    }
}
