//! Report records and their text/JSON renderings.

use std::fmt::Write as _;

use pathideal_core::{PathCase, VarPrime};
use serde::{Deserialize, Serialize};

/// How a cell is adjudicated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Full irreducible decomposition of `I^k`, compared as sets.
    Decomposition,
    /// Colon witnesses for the predicted primes only. One-sided: extra
    /// primes go undetected.
    #[value(name = "witness")]
    #[serde(rename = "witness")]
    WitnessOnly,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Decomposition => "decomposition",
            Method::WitnessOnly => "witness",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// Budget exceeded before the cell finished.
    Skipped,
    /// `Ind_t(P_n)` is zero; nothing to verify.
    Zero,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
            Verdict::Zero => "ZERO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessResult {
    pub prime: VarPrime,
    /// The constructed `u`, canonical text.
    pub witness: Option<String>,
    pub passed: bool,
    pub reason: String,
}

/// Outcome of one `(n, t, k)` cell. Field order is the serialized order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub t: usize,
    pub k: usize,
    pub case: PathCase,
    pub method: Method,
    pub verdict: Verdict,
    pub predicted_count: usize,
    pub computed_count: Option<usize>,
    pub missing: Vec<VarPrime>,
    pub extra: Vec<VarPrime>,
    /// `Ass(I^{k-1}) ⊆ Ass(I^k)`; `None` when not computed.
    pub persistence: Option<bool>,
    /// Set for witness-only cells: extra primes cannot be detected.
    pub one_sided: bool,
    pub witnesses: Vec<WitnessResult>,
    pub wall_time_ms: Option<u64>,
    pub note: Option<String>,
}

impl VerificationReport {
    /// Recomputes the verdict from the comparison fields.
    pub(crate) fn settle(&mut self) {
        if matches!(self.verdict, Verdict::Skipped | Verdict::Zero) {
            return;
        }
        let ok = self.missing.is_empty()
            && self.extra.is_empty()
            && self.witnesses.iter().all(|w| w.passed);
        self.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    }

    pub fn witnesses_passed(&self) -> usize {
        self.witnesses.iter().filter(|w| w.passed).count()
    }
}

fn primes_text(primes: &[VarPrime]) -> String {
    if primes.is_empty() {
        "-".into()
    } else {
        primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), |x| x.to_string())
}

/// Fixed-width table, one row per cell.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>3} {:>3}  {:<16} {:<13} {:<8} {:>5} {:>5} {:>7} {:>6} {:>8}  {:<}",
        "n", "t", "k", "case", "method", "verdict", "pred", "comp", "witness", "persist", "ms", "missing / extra"
    );
    for r in reports {
        let witness = if r.witnesses.is_empty() {
            "-".to_string()
        } else {
            format!("{}/{}", r.witnesses_passed(), r.witnesses.len())
        };
        let persist = match r.persistence {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let mut diff = format!("{} / {}", primes_text(&r.missing), primes_text(&r.extra));
        if let Some(note) = &r.note {
            let _ = write!(diff, "  ({note})");
        }
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>3}  {:<16} {:<13} {:<8} {:>5} {:>5} {:>7} {:>6} {:>8}  {}",
            r.n,
            r.t,
            r.k,
            r.case.label(),
            r.method.label(),
            r.verdict.label(),
            r.predicted_count,
            opt(&r.computed_count),
            witness,
            persist,
            opt(&r.wall_time_ms),
            diff
        );
    }
    out
}

/// Per-verdict totals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cells: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub zero: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary {
            cells: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
                Verdict::Zero => s.zero += 1,
            }
        }
        s
    }

    pub fn all_pass(&self) -> bool {
        self.fail == 0
    }
}
