//! Grid scans driven by a TOML config file.

use std::path::Path;
use std::time::Duration;

use pathideal_core::MAX_PATH_VERTICES;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{render_table, Method, Summary, VerificationReport};
use crate::verify::{Verifier, VerifierOptions, VerifyError, DEFAULT_BUDGET};

/// Largest power accepted in a scan config.
pub const MAX_SCAN_K: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Range {
    pub min: usize,
    pub max: usize,
}

impl Range {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.min..=self.max
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanConfig {
    pub n: Range,
    pub t: Range,
    pub k: Range,
    pub method: Method,
    pub cell_budget_ms: u64,
    pub cache_capacity: usize,
    /// Record wall time per cell. Off by default so repeated runs produce
    /// identical reports.
    pub timings: bool,
    /// Worker threads. Not echoed in the report header.
    #[serde(skip_serializing)]
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            n: Range { min: 1, max: 8 },
            t: Range { min: 1, max: 3 },
            k: Range { min: 1, max: 3 },
            method: Method::Decomposition,
            cell_budget_ms: DEFAULT_BUDGET.as_millis() as u64,
            cache_capacity: VerifierOptions::default().cache_capacity,
            timings: false,
            jobs: 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

impl ScanConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let config: ScanConfig = toml::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, r) in [("n", self.n), ("t", self.t), ("k", self.k)] {
            if r.min == 0 || r.min > r.max {
                return Err(ConfigError::Invalid(format!(
                    "{name} range must satisfy 1 <= min <= max (got {}..={})",
                    r.min, r.max
                )));
            }
        }
        if self.n.max > MAX_PATH_VERTICES {
            return Err(ConfigError::Invalid(format!(
                "n.max = {} exceeds the path cap {MAX_PATH_VERTICES}",
                self.n.max
            )));
        }
        if self.k.max > MAX_SCAN_K {
            return Err(ConfigError::Invalid(format!(
                "k.max = {} exceeds {MAX_SCAN_K}",
                self.k.max
            )));
        }
        if self.cell_budget_ms == 0 {
            return Err(ConfigError::Invalid("cell_budget_ms must be positive".into()));
        }
        if self.cache_capacity == 0 {
            return Err(ConfigError::Invalid("cache_capacity must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(ConfigError::Invalid("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn verifier_options(&self) -> VerifierOptions {
        VerifierOptions {
            budget: Duration::from_millis(self.cell_budget_ms),
            cache_capacity: self.cache_capacity,
            timings: self.timings,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportHeader {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ScanConfig,
}

/// A full scan: header, cells in `(t, n, k)` order, totals.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub header: ReportHeader,
    pub cells: Vec<VerificationReport>,
    pub summary: Summary,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let s = &self.summary;
        format!(
            "{} {} scan ({} method)\n{}\ncells {}  pass {}  fail {}  skipped {}  zero {}\n",
            self.header.tool,
            self.header.version,
            self.header.config.method.label(),
            render_table(&self.cells),
            s.cells,
            s.pass,
            s.fail,
            s.skipped,
            s.zero
        )
    }

    /// 0 when every non-skipped, non-zero cell passed, else 1.
    pub fn exit_code(&self) -> i32 {
        if self.summary.all_pass() {
            0
        } else {
            1
        }
    }
}

/// Runs the grid. `(n, t)` series run concurrently on `config.jobs` threads;
/// the output order does not depend on scheduling.
pub fn grid_scan(config: &ScanConfig) -> Result<ScanReport, VerifyError> {
    config
        .validate()
        .map_err(|e| VerifyError::Params(e.to_string()))?;
    let series: Vec<(usize, usize)> = config
        .t
        .iter()
        .flat_map(|t| config.n.iter().map(move |n| (n, t)))
        .collect();
    let options = config.verifier_options();
    let run = |&(n, t): &(usize, usize)| -> Result<Vec<VerificationReport>, VerifyError> {
        Verifier::new(n, t, options.clone())?.verify_series(config.k.iter(), config.method)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| VerifyError::Params(format!("thread pool: {e}")))?;
    let results: Vec<Result<Vec<VerificationReport>, VerifyError>> =
        pool.install(|| series.par_iter().map(run).collect());
    let mut cells = Vec::new();
    for r in results {
        cells.extend(r?);
    }
    let summary = Summary::of(&cells);
    Ok(ScanReport {
        header: ReportHeader {
            tool: "pathideal",
            version: env!("CARGO_PKG_VERSION"),
            config: config.clone(),
        },
        cells,
        summary,
    })
}
