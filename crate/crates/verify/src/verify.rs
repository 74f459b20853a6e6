//! Cell verification: computed associated primes of `Ind_t(P_n)^k` against
//! the closed form, plus persistence and stability scans.

use std::time::{Duration, Instant};

use pathideal_core::{
    ind_ideal, predicted_ass, predicted_astab, verify_witness_in_power, witness_monomial,
    AlgebraError, DecomposeOptions, Decomposer, FamilyError, MonomialIdeal, PathCase,
    PathFamilyParams, VarPrime,
};
use serde::Serialize;

use crate::report::{Method, Verdict, VerificationReport, WitnessResult};

/// Default per-cell wall-time budget.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Params(String),
}

#[derive(Clone, Debug)]
pub struct VerifierOptions {
    pub budget: Duration,
    pub cache_capacity: usize,
    /// Record per-cell wall time. Off keeps reports reproducible byte for byte.
    pub timings: bool,
}

impl Default for VerifierOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            cache_capacity: DecomposeOptions::default().cache_capacity,
            timings: false,
        }
    }
}

/// Drives the engine for one `(n, t)` family. Each instance owns its
/// decomposition cache, so a series over `k` reuses subideals.
pub struct Verifier {
    n: usize,
    t: usize,
    case: PathCase,
    ideal: Option<MonomialIdeal>,
    decomposer: Decomposer<u32>,
    options: VerifierOptions,
}

/// Ass of one power, or why it is unavailable.
enum AssOutcome {
    Computed(Vec<VarPrime>),
    Skipped,
}

impl Verifier {
    pub fn new(n: usize, t: usize, options: VerifierOptions) -> Result<Self, VerifyError> {
        let params = PathFamilyParams::new(n, t, None)?;
        let ideal = if params.is_zero() {
            None
        } else {
            Some(ind_ideal(n, t)?)
        };
        let decomposer = Decomposer::new(DecomposeOptions {
            cache_capacity: options.cache_capacity,
            parallel_depth: 0,
        });
        Ok(Self {
            n,
            t,
            case: params.case(),
            ideal,
            decomposer,
            options,
        })
    }

    pub fn case(&self) -> PathCase {
        self.case
    }

    fn ideal(&self) -> Result<&MonomialIdeal, VerifyError> {
        self.ideal.as_ref().ok_or(VerifyError::Family(FamilyError::ZeroIdeal {
            n: self.n,
            t: self.t,
        }))
    }

    fn power(&self, k: usize) -> Result<MonomialIdeal, VerifyError> {
        let k = u32::try_from(k).map_err(|_| VerifyError::Params(format!("k={k} too large")))?;
        Ok(self.ideal()?.power(k)?)
    }

    fn ass(&self, k: usize, deadline: Instant) -> Result<AssOutcome, VerifyError> {
        let power = self.power(k)?;
        match self.decomposer.associated_primes_until(&power, Some(deadline)) {
            Ok(primes) => Ok(AssOutcome::Computed(primes)),
            Err(AlgebraError::BudgetExhausted) => Ok(AssOutcome::Skipped),
            Err(e) => Err(e.into()),
        }
    }

    /// Computed `Ass(I^k)`; `None` if the budget ran out.
    pub fn computed_ass(&self, k: usize) -> Result<Option<Vec<VarPrime>>, VerifyError> {
        let deadline = Instant::now() + self.options.budget;
        Ok(match self.ass(k, deadline)? {
            AssOutcome::Computed(p) => Some(p),
            AssOutcome::Skipped => None,
        })
    }

    fn blank_report(&self, k: usize, method: Method) -> VerificationReport {
        VerificationReport {
            n: self.n,
            t: self.t,
            k,
            case: self.case,
            method,
            verdict: Verdict::Pass,
            predicted_count: 0,
            computed_count: None,
            missing: Vec::new(),
            extra: Vec::new(),
            persistence: None,
            one_sided: method == Method::WitnessOnly,
            witnesses: Vec::new(),
            wall_time_ms: None,
            note: None,
        }
    }

    /// Verifies one cell. For the decomposition method, `previous` may carry
    /// an already computed `Ass(I^{k-1})` for the persistence flag; otherwise
    /// it is computed here when `k >= 2`.
    pub fn verify_cell(&self, k: usize, method: Method) -> Result<VerificationReport, VerifyError> {
        self.verify_cell_with(k, method, None).map(|(r, _)| r)
    }

    fn verify_cell_with(
        &self,
        k: usize,
        method: Method,
        previous: Option<Option<&[VarPrime]>>,
    ) -> Result<(VerificationReport, Option<Vec<VarPrime>>), VerifyError> {
        if k == 0 {
            return Err(VerifyError::Params("k must be at least 1".into()));
        }
        let start = Instant::now();
        let deadline = start + self.options.budget;
        let mut report = self.blank_report(k, method);
        if self.case == PathCase::Zero {
            report.verdict = Verdict::Zero;
            report.note = Some("Ind_t(P_n) is the zero ideal".into());
            return Ok((report, None));
        }
        let predicted = predicted_ass(self.n, self.t, k)?;
        report.predicted_count = predicted.len();
        let power = self.power(k)?;

        let mut computed = None;
        if method == Method::Decomposition {
            match self.decomposer.associated_primes_until(&power, Some(deadline)) {
                Ok(primes) => computed = Some(primes),
                Err(AlgebraError::BudgetExhausted) => {
                    return Ok((self.skipped(report, start), None));
                }
                Err(e) => return Err(e.into()),
            }
            let primes = computed.as_ref().expect("set above");
            report.computed_count = Some(primes.len());
            report.missing = predicted.iter().filter(|p| !primes.contains(p)).cloned().collect();
            report.extra = primes.iter().filter(|p| !predicted.contains(p)).cloned().collect();

            report.persistence = if k == 1 {
                Some(true)
            } else {
                match previous {
                    Some(Some(prev)) => Some(prev.iter().all(|p| primes.contains(p))),
                    Some(None) => None,
                    None => match self.ass(k - 1, deadline)? {
                        AssOutcome::Computed(prev) => Some(prev.iter().all(|p| primes.contains(p))),
                        AssOutcome::Skipped => return Ok((self.skipped(report, start), computed)),
                    },
                }
            };
        } else {
            report.note = Some("one-sided: extra primes are not detected".into());
        }

        for prime in &predicted {
            if Instant::now() >= deadline {
                return Ok((self.skipped(report, start), computed));
            }
            report.witnesses.push(self.check_witness(k, &power, prime)?);
        }

        report.settle();
        if self.options.timings {
            report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok((report, computed))
    }

    fn check_witness(
        &self,
        k: usize,
        power: &MonomialIdeal,
        prime: &VarPrime,
    ) -> Result<WitnessResult, VerifyError> {
        let u = witness_monomial(self.n, self.t, k, prime)?;
        let verdict = verify_witness_in_power(power, &u, prime)?;
        Ok(WitnessResult {
            prime: prime.clone(),
            witness: Some(u.to_string()),
            passed: verdict.is_verified(),
            reason: verdict.reason().to_string(),
        })
    }

    fn skipped(&self, mut report: VerificationReport, start: Instant) -> VerificationReport {
        report.verdict = Verdict::Skipped;
        report.note = Some(format!(
            "cell budget of {} ms exhausted",
            self.options.budget.as_millis()
        ));
        if self.options.timings {
            report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        report
    }

    /// Verifies `k` in `ks` in increasing order, reusing each computed
    /// `Ass(I^k)` for the next cell's persistence flag.
    pub fn verify_series(
        &self,
        ks: std::ops::RangeInclusive<usize>,
        method: Method,
    ) -> Result<Vec<VerificationReport>, VerifyError> {
        let mut reports = Vec::new();
        let mut previous: Option<Option<Vec<VarPrime>>> = None;
        for k in ks {
            let prev = previous.as_ref().map(|p| p.as_deref());
            let (report, computed) = self.verify_cell_with(k, method, prev)?;
            if method == Method::Decomposition {
                previous = Some(computed);
            }
            reports.push(report);
        }
        Ok(reports)
    }

    /// Computes `Ass(I^k)` for `k = 1..=kmax` and checks the chain.
    pub fn persistence_scan(&self, kmax: usize) -> Result<PersistenceScan, VerifyError> {
        if kmax < 2 {
            return Err(VerifyError::Params("persistence needs kmax >= 2".into()));
        }
        self.ideal()?;
        let reports = self.verify_series(1..=kmax, Method::Decomposition)?;
        let chain_sizes: Vec<Option<usize>> = reports.iter().map(|r| r.computed_count).collect();
        let first_violation = reports
            .iter()
            .find(|r| r.persistence == Some(false))
            .map(|r| r.k);
        let complete = reports.iter().all(|r| r.verdict != Verdict::Skipped);
        Ok(PersistenceScan {
            n: self.n,
            t: self.t,
            kmax,
            chain_sizes,
            first_violation,
            complete,
            reports,
        })
    }

    /// Smallest `k0` with `Ass(I^k) == Ass(I^{k0})` for `k0 <= k <= kmax`.
    pub fn empirical_astab(&self, kmax: usize) -> Result<AstabResult, VerifyError> {
        if kmax < 1 {
            return Err(VerifyError::Params("astab needs kmax >= 1".into()));
        }
        self.ideal()?;
        let predicted = predicted_astab(self.n, self.t)?;
        let mut chain = Vec::with_capacity(kmax);
        for k in 1..=kmax {
            match self.computed_ass(k)? {
                Some(primes) => chain.push(primes),
                None => {
                    return Ok(AstabResult {
                        n: self.n,
                        t: self.t,
                        kmax,
                        value: AstabValue::Undetermined,
                        predicted,
                        matches: None,
                        chain_sizes: chain.iter().map(Vec::len).collect(),
                        note: Some(format!("Ass(I^{k}) exceeded the cell budget")),
                    })
                }
            }
        }
        let last = chain.last().expect("kmax >= 1");
        let mut k0 = kmax;
        while k0 > 1 && &chain[k0 - 2] == last {
            k0 -= 1;
        }
        let value = if k0 == kmax {
            AstabValue::Undetermined
        } else {
            AstabValue::Determined(k0)
        };
        let matches = match value {
            AstabValue::Determined(v) => Some(v == predicted),
            AstabValue::Undetermined => None,
        };
        Ok(AstabResult {
            n: self.n,
            t: self.t,
            kmax,
            value,
            predicted,
            matches,
            chain_sizes: chain.iter().map(Vec::len).collect(),
            note: None,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PersistenceScan {
    pub n: usize,
    pub t: usize,
    pub kmax: usize,
    /// `|Ass(I^k)|` for `k = 1..=kmax`; `None` where the budget ran out.
    pub chain_sizes: Vec<Option<usize>>,
    /// First `k` with `Ass(I^{k-1}) ⊄ Ass(I^k)`.
    pub first_violation: Option<usize>,
    pub complete: bool,
    pub reports: Vec<VerificationReport>,
}

impl PersistenceScan {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AstabValue {
    Determined(usize),
    /// The chain only settled at `kmax`, which the scan cannot certify.
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct AstabResult {
    pub n: usize,
    pub t: usize,
    pub kmax: usize,
    pub value: AstabValue,
    pub predicted: usize,
    pub matches: Option<bool>,
    pub chain_sizes: Vec<usize>,
    pub note: Option<String>,
}

/// One-shot cell check with default options.
pub fn verify_cell(n: usize, t: usize, k: usize, method: Method) -> Result<VerificationReport, VerifyError> {
    Verifier::new(n, t, VerifierOptions::default())?.verify_cell(k, method)
}

pub fn persistence_scan(n: usize, t: usize, kmax: usize) -> Result<PersistenceScan, VerifyError> {
    Verifier::new(n, t, VerifierOptions::default())?.persistence_scan(kmax)
}

pub fn empirical_astab(n: usize, t: usize, kmax: usize) -> Result<AstabResult, VerifyError> {
    Verifier::new(n, t, VerifierOptions::default())?.empirical_astab(kmax)
}
