//! Experiment harness behind the `deephole` binary.
//!
//! Every command is a thin adapter over a `deephole` library call. Reports
//! are deterministic: identical configs serialize to identical bytes, and
//! the worker count never changes the output.

mod experiments;
mod report;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use deephole::{Bounds, Field};
use serde::{Deserialize, Serialize};

pub use report::{report_diff, write_report, Check, DiffEntry, FieldInfo, Report, Table};

/// Size guard for coset enumeration unless `DEEPHOLE_MAX_Q` says otherwise.
pub const DEFAULT_MAX_Q: u64 = 13;
pub const MAX_Q_ENV: &str = "DEEPHOLE_MAX_Q";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CoveringRadius,
    EnumDeepCosets,
    Family,
    Completeness,
    Hypergraph,
    CubicCoverage,
    Ssp,
    N3,
    ZeroSumFree,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CoveringRadius => "covering-radius",
            Command::EnumDeepCosets => "enum-deep-cosets",
            Command::Family => "family",
            Command::Completeness => "completeness",
            Command::Hypergraph => "hypergraph",
            Command::CubicCoverage => "cubic-coverage",
            Command::Ssp => "ssp",
            Command::N3 => "n3",
            Command::ZeroSumFree => "zero-sum-free",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CodeChoice {
    /// Affine Reed-Solomon code on `--set`, or on the whole field.
    Rs,
    /// Doubly extended Reed-Solomon code of length q + 1.
    #[default]
    Prs,
}

/// One experiment run. The output path and the thread count are not part of
/// the serialized config, so they cannot influence report bytes.
#[derive(Clone, Debug, PartialEq, Eq, Parser, Serialize, Deserialize)]
#[command(name = "deephole", version, about = "Deep-hole experiments for Reed-Solomon codes")]
pub struct ExperimentConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Field order, a prime power.
    #[arg(long)]
    pub q: Option<u64>,
    /// Field characteristic, used with `--m`.
    #[arg(long)]
    pub p: Option<u32>,
    /// Extension degree over GF(p).
    #[arg(long)]
    pub m: Option<u32>,
    /// Code dimension.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum)]
    pub code: Option<CodeChoice>,
    /// Denominator degree for `family`: 2 or 3.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Comma-separated element reprs of an evaluation set D.
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<u32>>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip)]
    pub threads: Option<usize>,
    /// Lift the field-size guard and all enumeration bounds.
    #[arg(long)]
    pub unsafe_bounds: bool,
}

impl ExperimentConfig {
    /// A config for `command` with every parameter unset.
    pub fn new(command: Command) -> Self {
        ExperimentConfig {
            command,
            q: None,
            p: None,
            m: None,
            k: None,
            code: None,
            degree: None,
            set: None,
            r: None,
            format: Format::Json,
            out: None,
            threads: None,
            unsafe_bounds: false,
        }
    }

    pub fn with_q(mut self, q: u64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn bounds(&self) -> Bounds {
        if self.unsafe_bounds {
            Bounds::unlimited()
        } else {
            Bounds {
                max_span_redundancy: 8,
                ..Bounds::default()
            }
        }
    }

    /// The field named by `--q`, or by `--p` and `--m` (default 1).
    pub fn field(&self) -> Result<Field, CliError> {
        let from_pm = self.p.map(|p| (p, self.m.unwrap_or(1)));
        let field = match (self.q, from_pm) {
            (None, None) => return Err(CliError::Usage("missing --q (or --p and --m)".into())),
            (Some(q), None) => Field::of_order(q)?,
            (None, Some((p, m))) => Field::new(p, m)?,
            (Some(q), Some((p, m))) => {
                let f = Field::new(p, m)?;
                if f.q() as u64 != q {
                    return Err(CliError::Usage(format!("--q {q} disagrees with --p {p} --m {m}")));
                }
                f
            }
        };
        if self.q.is_some() && self.m.is_some() && self.p.is_none() && self.m != Some(field.m()) {
            return Err(CliError::Usage(format!("--q {} is not a degree-{} extension", field.q(), self.m.unwrap_or(1))));
        }
        Ok(field)
    }

    pub fn require_k(&self) -> Result<usize, CliError> {
        self.k.ok_or_else(|| CliError::Usage(format!("{} needs --k", self.command.name())))
    }

    pub fn require_r(&self) -> Result<usize, CliError> {
        self.r.ok_or_else(|| CliError::Usage(format!("{} needs --r", self.command.name())))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("field order {q} exceeds the guard {max}; raise {MAX_Q_ENV} or pass --unsafe-bounds")]
    FieldGuard { q: u64, max: u64 },
    #[error("cannot compare a {left} report with a {right} report")]
    KindMismatch { left: &'static str, right: &'static str },
    #[error(transparent)]
    Library(#[from] deephole::Error),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("output: {0}")]
    Json(#[from] serde_json::Error),
    #[error("output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 when a stated result failed to hold, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(deephole::Error::HypothesisFailed(_)) => 2,
            _ => 1,
        }
    }
}

/// The field-size guard for coset enumeration, from `DEEPHOLE_MAX_Q`.
pub fn max_q() -> Result<u64, CliError> {
    match std::env::var(MAX_Q_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_Q_ENV}={v} is not an integer"))),
        Err(_) => Ok(DEFAULT_MAX_Q),
    }
}

/// Runs one experiment on `config.threads` workers (all cores when unset).
pub fn run(config: &ExperimentConfig) -> Result<Report, CliError> {
    let field = config.field()?;
    if !config.unsafe_bounds && config.command != Command::Ssp {
        let max = max_q()?;
        if field.q() as u64 > max {
            return Err(CliError::FieldGuard { q: field.q() as u64, max });
        }
    }
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("--threads {n}: {e}")))?
            .install(|| experiments::dispatch(config, &field)),
        None => experiments::dispatch(config, &field),
    }
}
