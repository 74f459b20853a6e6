//! Verification driver for the associated primes of powers of `Ind_t(P_n)`.
//!
//! Each grid cell `(n, t, k)` computes `Ass(I^k)` with the decomposition
//! engine (or, more cheaply, checks colon witnesses for the predicted primes
//! only) and diffs it against the closed form.

pub mod report;
pub mod scan;
pub mod verify;

pub use report::{render_table, Method, Summary, Verdict, VerificationReport, WitnessResult};
pub use scan::{grid_scan, ConfigError, Range, ReportHeader, ScanConfig, ScanReport};
pub use verify::{
    empirical_astab, persistence_scan, verify_cell, AstabResult, AstabValue, PersistenceScan,
    Verifier, VerifierOptions, VerifyError, DEFAULT_BUDGET,
};
