use thiserror::Error;

/// Errors raised by the special functions, the quadrature drivers and the verifier.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("argument on branch cut: {0}")]
    BranchCut(String),
    #[error("no Lerch strategy covers z={z}, s={s}, v={v}")]
    UnsupportedRegion { z: String, s: String, v: String },
    #[error("strategy {strategy} not applicable: {reason}")]
    StrategyNotApplicable { strategy: String, reason: String },
    #[error("integration path meets a singularity: {0}")]
    Contour(String),
    #[error("singularity is not removable: {0}")]
    NonRemovable(String),
    #[error("integrand returned a non-finite value at x={0}")]
    NonFinite(f64),
    #[error("series did not converge after {0} terms")]
    SeriesDivergence(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown catalog entry {0}")]
    UnknownEntry(String),
    #[error("catalog document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
