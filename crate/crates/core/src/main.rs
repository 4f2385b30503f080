use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lerchlab::catalog::{build_catalog, catalog_from_json, catalog_to_json, CatalogEntry, ClosedForm};
use lerchlab::verify::{render, run_catalog, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "lerchlab", version, about = "Numerically verify Lerch-function double-integral identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Markdown,
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Markdown => OutputFormat::Markdown,
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify catalog entries; exits 1 if any entry fails.
    Verify {
        /// Glob over entry ids, e.g. "3.1.3.6*".
        #[arg(long, default_value = "*")]
        entry: String,
        /// Relative tolerance for PASS, in (0, 1e-2].
        #[arg(long, default_value_t = 1e-6)]
        rel_tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Seed for the randomized identity check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        /// Read the catalog from a JSON document instead of the built-in table.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Report per-entry wall-clock times.
        #[arg(long)]
        timings: bool,
        /// Scale every closed form by 1 + REL.
        #[arg(long, hide = true)]
        perturb_closed_form: Option<f64>,
    },
    /// Print the built-in catalog as JSON.
    Catalog,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn load(path: Option<PathBuf>) -> Result<Vec<CatalogEntry>, String> {
    match path {
        None => Ok(build_catalog()),
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
            catalog_from_json(&text).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Catalog => {
            emit(&(catalog_to_json(&build_catalog()) + "\n"));
            ExitCode::SUCCESS
        }
        Command::Verify { entry, rel_tol, format, seed, workers, catalog, timings, perturb_closed_form } => {
            let mut cfg = RunConfig {
                rel_tol,
                entry_filter: entry,
                output_format: format.into(),
                seed,
                timings,
                ..RunConfig::default()
            };
            if let Some(w) = workers {
                cfg.workers = w;
            }
            if let Err(e) = cfg.validate() {
                return usage_error(e);
            }
            let mut entries = match load(catalog) {
                Ok(e) => e,
                Err(e) => return usage_error(e),
            };
            if let Some(rel) = perturb_closed_form {
                entries = entries
                    .into_iter()
                    .map(|e| {
                        let base = Box::new(e.closed_form.clone());
                        e.with_closed_form(ClosedForm::Perturbed { base, rel })
                    })
                    .collect();
            }
            let report = match run_catalog(&entries, &cfg) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            emit(&render(&report, cfg.output_format));
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
