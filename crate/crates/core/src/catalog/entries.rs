use serde::{Deserialize, Serialize};

use super::closed_form::{ClosedForm, DisplayedConstant};
use super::params::{DomainClass, IntegralParams};
use crate::quadrature::{Integrand, LogFactor, Monomial};
use crate::{ComplexValue, Error, Result};

pub const CATALOG_SCHEMA: &str = "lerchlab-catalog/1";

pub const CATALOG_IDS: [&str; 13] = [
    "3.1.3.48", "3.1.3.59", "3.1.3.60", "3.1.3.61", "3.1.3.62", "3.1.3.63", "3.1.3.64", "3.1.3.65", "3.1.3.66",
    "3.1.3.67", "3.1.3.68", "3.1.3.69", "3.1.3.70",
];

/// Parameters of an entry; `t` is the second exponent of the difference rows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntryParams {
    #[serde(flatten)]
    pub base: IntegralParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<ComplexValue>,
}

impl EntryParams {
    pub fn exponents(&self) -> Vec<ComplexValue> {
        std::iter::once(self.base.m).chain(self.t).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub params: EntryParams,
    /// Names of the parameters a catalog document may change.
    pub free: &'static [&'static str],
    pub integrand: Integrand,
    pub integrand_text: &'static str,
    pub closed_form: ClosedForm,
    pub closed_form_text: &'static str,
    pub domain: DomainClass,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    pub fn evaluate_closed_form(&self) -> Result<ComplexValue> {
        self.closed_form.evaluate(&self.params)
    }

    /// The 2D route is informational for `1/log` rows.
    pub fn two_d_authoritative(&self) -> bool {
        !matches!(self.integrand.log, LogFactor::Reciprocal)
    }

    pub fn with_closed_form(mut self, closed_form: ClosedForm) -> Self {
        self.closed_form = closed_form;
        self
    }
}

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn real(x: f64) -> ComplexValue {
    c(x, 0.0)
}

struct Row {
    free: &'static [&'static str],
    integrand_text: &'static str,
    closed_form: ClosedForm,
    closed_form_text: &'static str,
    notes: &'static [&'static str],
}

const ZETA_TEXT: &str = "exp(-(x^2+xy+y^2)/(4y)) (x-y) log^k(x/y) / (sqrt(x) y^(3/2))";
const QUARTER_TEXT: &str = "exp(-(x^2+xy+y^2)/(4y)) (y^(1/4)-x^(1/4)) / (x^(3/4) sqrt(y) log(x/y))";
const RECIPROCAL_NOTE: &str =
    "1/log row: the reduced route with the removable-singularity guard is authoritative, the 2D route is informational";
const CONTINUATION_NOTE: &str =
    "real exponents lie outside -1 < Re(m) <= -1/2, -1 < Im(m) < -1/2; value by analytic continuation";

fn row(id: &str) -> Result<Row> {
    Ok(match id {
        "3.1.3.48" => Row {
            free: &["m", "a", "p", "q"],
            integrand_text: "x^m y^(-m-1) exp(-px-qy-x^2/(4y))",
            closed_form: ClosedForm::Csc,
            closed_form_text: "pi 2^(m+1) q^(m/2) csc(pi m) sinh(m acosh(p/sqrt(q))) / sqrt(p^2-q)",
            notes: &[],
        },
        "3.1.3.59" => Row {
            free: &["m", "a", "p", "q"],
            integrand_text: "x^m y^(-m-1) log(ax/y) exp(-px-qy-x^2/(4y))",
            closed_form: ClosedForm::CscLog,
            closed_form_text: "-pi 2^m q^(m/2) csc(pi m) ((-2 log a + 2 pi cot(pi m) - log 4q) sinh(m acosh(p/sqrt(q))) - 2 acosh(p/sqrt(q)) cosh(m acosh(p/sqrt(q)))) / sqrt(p^2-q)",
            notes: &["the grouping of (-2 log a + 2 pi cot(pi m) - log 4q) is checked numerically, not derived"],
        },
        "3.1.3.60" => Row {
            free: &[],
            integrand_text: "exp(-(x^2+4xy+y^2)/(4y)) log(x/y) / (sqrt(x) sqrt(y))",
            closed_form: ClosedForm::AcoshLog,
            closed_form_text: "-2 sqrt(2) pi acosh(2)",
            notes: &[CONTINUATION_NOTE],
        },
        "3.1.3.61" => Row {
            free: &[],
            integrand_text: "exp(-(x^2+4xy+y^2)/(4y)) log^2(x/y) / (sqrt(x) sqrt(y))",
            closed_form: ClosedForm::AcoshLogSquared,
            closed_form_text: "2 sqrt(2/3) pi (pi^2 + acosh(2)^2)",
            notes: &[CONTINUATION_NOTE],
        },
        "3.1.3.62" => Row {
            free: &["k"],
            integrand_text: ZETA_TEXT,
            closed_form: ClosedForm::ZetaFamily,
            closed_form_text: "i 2^(2k+3) e^(i pi k/2) pi^(k+1) (zeta(-k,1/6) + zeta(-k,5/6) + (1-3^(-k)) zeta(-k))",
            notes: &[CONTINUATION_NOTE, "non-integer k takes the principal branch of log^k(x/y) on x < y"],
        },
        "3.1.3.63" => Row {
            free: &[],
            integrand_text: "exp(-(x^2+xy+y^2)/(4y)) (x-y) log(x/y) log(log(x/y)) / (sqrt(x) y^(3/2))",
            closed_form: ClosedForm::Glaisher,
            closed_form_text: "(4/9) pi^2 (6 + 3 pi i + log(2^14 3^3 pi^6 / A^72))",
            notes: &[
                CONTINUATION_NOTE,
                "log(log(x/y)) is complex for x < y; the principal branch is used, giving the imaginary part",
            ],
        },
        "3.1.3.64" => Row {
            free: &[],
            integrand_text: QUARTER_TEXT,
            closed_form: ClosedForm::Displayed(DisplayedConstant::FourLog),
            closed_form_text: "4 log(4 - 2 sqrt(3))",
            notes: &[CONTINUATION_NOTE, RECIPROCAL_NOTE, "duplicate row: identical statement to 3.1.3.69"],
        },
        "3.1.3.65" => Row {
            free: &["m", "t"],
            integrand_text: "exp(-(x^2+xy+y^2)/(4y)) y^(-m-t-1) (y^m x^t - x^m y^t) / log(x/y)",
            closed_form: ClosedForm::Hypergeometric,
            closed_form_text: "2 i sqrt(3) (2 e^(2 i pi m/3) 2F1(1/3,1;4/3;e^(2 i pi m)) - e^(4 i pi m/3) 2F1(2/3,1;5/3;e^(2 i pi m)) - [same in t])",
            notes: &[RECIPROCAL_NOTE],
        },
        "3.1.3.66" => Row {
            free: &[],
            integrand_text: "exp(-(x^2+xy+y^2)/(4y)) (y^(1/6)-x^(1/6)) / (x^(2/3) sqrt(y) log(x/y))",
            closed_form: ClosedForm::Displayed(DisplayedConstant::SecantRatio),
            closed_form_text: "log(sec^4(pi/9) / (4 (sin(pi/36) + cos(pi/36))^4))",
            notes: &[CONTINUATION_NOTE, RECIPROCAL_NOTE],
        },
        "3.1.3.67" => Row {
            free: &[],
            integrand_text: "exp(-(x^2+xy+y^2)/(4y)) (y^(1/12)-x^(1/12)) / (x^(3/4) y^(1/3) log(x/y))",
            closed_form: ClosedForm::Displayed(DisplayedConstant::CosecantSum),
            closed_form_text: "2 (log(7/4 - sqrt(3)) + 2 log(csc(pi/18)))",
            notes: &[CONTINUATION_NOTE, RECIPROCAL_NOTE],
        },
        "3.1.3.68" => Row {
            free: &[],
            integrand_text: "exp(-(x^2+xy+y^2)/(4y)) (y^(1/6)-x^(1/6)) / (sqrt(x) y^(2/3) log(x/y))",
            closed_form: ClosedForm::Displayed(DisplayedConstant::CosineRatio),
            closed_form_text: "2 log((1 + cos(pi/9)) / (4 - 4 sin(pi/18)))",
            notes: &[CONTINUATION_NOTE, RECIPROCAL_NOTE],
        },
        "3.1.3.69" => Row {
            free: &[],
            integrand_text: QUARTER_TEXT,
            closed_form: ClosedForm::Displayed(DisplayedConstant::FourLog),
            closed_form_text: "4 log(4 - 2 sqrt(3))",
            notes: &[CONTINUATION_NOTE, RECIPROCAL_NOTE, "duplicate row: identical statement to 3.1.3.64"],
        },
        "3.1.3.70" => Row {
            free: &["m", "t"],
            integrand_text: "exp(-(x+2y)^2/(4y)) y^(-m-t-1) (y^m x^t - x^m y^t) / log(x/y)",
            closed_form: ClosedForm::LerchLimit,
            closed_form_text: "H(m) - H(t), H(m) = 2^m e^(i pi m)/pi (2 pi m Phi(e^(2 i pi m),1,v) + i Phi(e^(2 i pi m),2,v)), v = (pi - i log 2)/(2 pi)",
            notes: &[
                CONTINUATION_NOTE,
                RECIPROCAL_NOTE,
                "limit p = q -> 1 of the general formula, i.e. p = q = 1",
                "the t-term carries the same 1/pi factor as the m-term; without it the formula disagrees with quadrature",
            ],
        },
        other => return Err(Error::UnknownEntry(other.to_string())),
    })
}

/// Default parameters of an entry.
pub fn default_params(id: &str) -> Result<EntryParams> {
    let half = |k: f64, p: f64, q: f64| IntegralParams::real(-0.5, k, 1.0, p, q);
    let diff = |m: ComplexValue, t: ComplexValue, pq: f64| EntryParams {
        base: IntegralParams::new(m, real(-1.0), real(1.0), real(pq), real(pq)),
        t: Some(t),
    };
    let plain = |base| EntryParams { base, t: None };
    Ok(match id {
        "3.1.3.48" => plain(IntegralParams::new(c(-0.5, -0.6), real(0.0), real(1.0), real(1.0), real(0.25))),
        "3.1.3.59" => plain(IntegralParams::new(c(-0.5, -0.6), real(1.0), real(1.5), real(1.0), real(0.25))),
        "3.1.3.60" => plain(half(1.0, 1.0, 0.25)),
        "3.1.3.61" => plain(half(2.0, 1.0, 0.25)),
        "3.1.3.62" | "3.1.3.63" => plain(half(1.0, 0.25, 0.25)),
        "3.1.3.64" | "3.1.3.69" => diff(real(-0.5), real(-0.75), 0.25),
        "3.1.3.65" => diff(c(-0.5, -0.6), c(-0.75, -0.7), 0.25),
        "3.1.3.66" => diff(real(-0.5), real(-2.0 / 3.0), 0.25),
        "3.1.3.67" => diff(real(-2.0 / 3.0), real(-0.75), 0.25),
        "3.1.3.68" => diff(real(-1.0 / 3.0), real(-0.5), 0.25),
        "3.1.3.70" => diff(real(-0.5), real(-0.75), 1.0),
        other => return Err(Error::UnknownEntry(other.to_string())),
    })
}

fn field(params: &EntryParams, name: &str) -> Option<ComplexValue> {
    match name {
        "m" => Some(params.base.m),
        "k" => Some(params.base.k),
        "a" => Some(params.base.a),
        "p" => Some(params.base.p),
        "q" => Some(params.base.q),
        "t" => params.t,
        _ => None,
    }
}

fn build_integrand(id: &str, params: &EntryParams) -> Integrand {
    let one = real(1.0);
    let b = &params.base;
    let pair = |first: ComplexValue, second: ComplexValue| {
        vec![Monomial { coef: one, m: first }, Monomial { coef: -one, m: second }]
    };
    match id {
        "3.1.3.62" => {
            Integrand { terms: pair(real(0.5), real(-0.5)), log: LogFactor::Power(b.k), a: b.a, p: b.p, q: b.q }
        }
        "3.1.3.63" => {
            Integrand { terms: pair(real(0.5), real(-0.5)), log: LogFactor::PowerLogLog(one), a: b.a, p: b.p, q: b.q }
        }
        _ => match params.t {
            Some(t) => Integrand { terms: pair(t, b.m), log: LogFactor::Reciprocal, a: b.a, p: b.p, q: b.q },
            None => Integrand::from_params(b),
        },
    }
}

/// The entry `id` at `params`; only the entry's free parameters may differ from the defaults.
pub fn make_entry(id: &str, params: EntryParams) -> Result<CatalogEntry> {
    let row = row(id)?;
    let defaults = default_params(id)?;
    for name in ["m", "k", "a", "p", "q", "t"] {
        if row.free.contains(&name) {
            if field(&params, name).is_none() {
                return Err(Error::Document(format!("entry {id} needs parameter {name}")));
            }
        } else if field(&params, name) != field(&defaults, name) {
            return Err(Error::Document(format!("parameter {name} of entry {id} is fixed")));
        }
    }
    Ok(CatalogEntry {
        id: id.to_string(),
        integrand: build_integrand(id, &params),
        domain: DomainClass::classify(&params.exponents()),
        params,
        free: row.free,
        integrand_text: row.integrand_text,
        closed_form: row.closed_form,
        closed_form_text: row.closed_form_text,
        notes: row.notes.iter().map(|s| s.to_string()).collect(),
    })
}

/// Every entry at its default parameters, in id order.
pub fn build_catalog() -> Vec<CatalogEntry> {
    CATALOG_IDS
        .iter()
        .map(|id| make_entry(id, default_params(id).expect("known id")).expect("defaults are valid"))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct EntryDocument {
    id: String,
    params: EntryParams,
    domain: DomainClass,
    closed_form: ClosedForm,
    #[serde(default)]
    notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CatalogDocument {
    schema: String,
    entries: Vec<EntryDocument>,
}

pub fn catalog_to_json(entries: &[CatalogEntry]) -> String {
    let doc = CatalogDocument {
        schema: CATALOG_SCHEMA.to_string(),
        entries: entries
            .iter()
            .map(|e| EntryDocument {
                id: e.id.clone(),
                params: e.params,
                domain: e.domain,
                closed_form: e.closed_form.clone(),
                notes: e.notes.clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("catalog serializes")
}

/// Rebuilds entries from a document. The closed form may be wrapped in a
/// perturbation but must otherwise be the entry's own evaluator.
pub fn catalog_from_json(text: &str) -> Result<Vec<CatalogEntry>> {
    let doc: CatalogDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    if doc.schema != CATALOG_SCHEMA {
        return Err(Error::Document(format!("unsupported schema {:?}", doc.schema)));
    }
    let mut seen = std::collections::BTreeSet::new();
    doc.entries
        .into_iter()
        .map(|d| {
            if !seen.insert(d.id.clone()) {
                return Err(Error::Document(format!("duplicate entry {}", d.id)));
            }
            let entry = make_entry(&d.id, d.params)?;
            if entry.domain != d.domain {
                return Err(Error::Document(format!(
                    "entry {} is {}, not {}",
                    d.id,
                    entry.domain.as_str(),
                    d.domain.as_str()
                )));
            }
            if d.closed_form.root() != &entry.closed_form {
                return Err(Error::Document(format!("entry {} has the wrong closed form", d.id)));
            }
            Ok(entry.with_closed_form(d.closed_form))
        })
        .collect()
}
