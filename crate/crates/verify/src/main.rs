use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pathideal_core::{
    ind_ideal, predicted_ass, predicted_astab, predicted_decomposition_2t, predicted_ntf,
    predicted_stable_set, PathCase, PathFamilyParams,
};
use pathideal_verify::{
    grid_scan, render_table, AstabValue, Method, ScanConfig, Verdict, Verifier, VerifierOptions,
    DEFAULT_BUDGET,
};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Parser)]
#[command(name = "pathideal", version, about = "Associated primes of powers of Ind_t(P_n)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct Family {
    /// Number of path vertices.
    #[arg(long)]
    n: usize,
    /// Independent-set size.
    #[arg(long)]
    t: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of Ind_t(P_n).
    Gen {
        #[command(flatten)]
        family: Family,
    },
    /// Compute Ass(I^k) and compare it with the closed form.
    Ass {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "decomposition")]
        method: Method,
        /// Wall-time budget in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Print the predicted Ass(I^k), index of stability and stable set.
    Predict {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        k: usize,
    },
    /// Print the irredundant irreducible decomposition of I^k.
    Decompose {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        k: usize,
    },
    /// Check Ass(I) ⊆ Ass(I^2) ⊆ ... ⊆ Ass(I^kmax).
    Persistence {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Estimate the index of stability up to kmax.
    Astab {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Sweep a parameter grid from a TOML config and write a report.
    Scan {
        #[arg(long)]
        config: PathBuf,
        /// Structured (JSON) report path.
        #[arg(long)]
        out: PathBuf,
        /// Human-readable table path; defaults to the report path with a
        /// `.txt` extension.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Worker threads, overriding the config.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Failure that maps onto an exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn options(budget_ms: Option<u64>) -> VerifierOptions {
    VerifierOptions {
        budget: budget_ms.map_or(DEFAULT_BUDGET, Duration::from_millis),
        ..VerifierOptions::default()
    }
}

fn emit(format: Format, text: String, value: serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let _ = match format {
        Format::Text => write!(out, "{text}"),
        Format::Structured => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&value).expect("json value")
        ),
    };
}

fn primes_lines(primes: &[pathideal_core::VarPrime]) -> String {
    primes.iter().map(|p| format!("  {p}\n")).collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Gen { family } => {
            let params = PathFamilyParams::new(family.n, family.t, None).map_err(usage)?;
            let ideal = ind_ideal(family.n, family.t).map_err(usage)?;
            let mut text = format!(
                "Ind_{}(P_{}) [{}]: {} generators\n",
                family.t,
                family.n,
                params.case(),
                ideal.len()
            );
            for g in ideal.gens() {
                text.push_str(&format!("  {g}\n"));
            }
            emit(
                format,
                text,
                json!({ "n": family.n, "t": family.t, "case": params.case(), "ideal": ideal }),
            );
            Ok(0)
        }
        Command::Ass {
            family,
            k,
            method,
            budget_ms,
        } => {
            let verifier = Verifier::new(family.n, family.t, options(budget_ms)).map_err(usage)?;
            let report = verifier.verify_cell(k, method).map_err(usage)?;
            let verdict = report.verdict;
            emit(
                format,
                render_table(std::slice::from_ref(&report)),
                serde_json::to_value(&report).expect("report serializes"),
            );
            Ok(if verdict == Verdict::Fail { EXIT_FAIL } else { 0 })
        }
        Command::Predict { family, k } => {
            let (n, t) = (family.n, family.t);
            let primes = predicted_ass(n, t, k).map_err(usage)?;
            let astab = predicted_astab(n, t).map_err(usage)?;
            let ntf = predicted_ntf(n, t).map_err(usage)?;
            let stable = predicted_stable_set(n, t).map_err(usage)?;
            let case = PathCase::classify(n, t);
            let decomposition = if case == PathCase::Case2t {
                Some(predicted_decomposition_2t(t, k).map_err(usage)?)
            } else {
                None
            };
            let mut text = format!(
                "predicted Ass(I^{k}) for Ind_{t}(P_{n}) [{case}]: {} primes\n{}astab {astab}, normally torsion-free: {ntf}, stable set: {} primes\n",
                primes.len(),
                primes_lines(&primes),
                stable.len()
            );
            if let Some(d) = &decomposition {
                text.push_str(&format!("I^{k} = intersection of {} components\n", d.components.len()));
                for c in &d.components {
                    text.push_str(&format!("  {c}\n"));
                }
            }
            emit(
                format,
                text,
                json!({
                    "n": n, "t": t, "k": k, "case": case,
                    "ass": primes, "astab": astab, "normally_torsion_free": ntf,
                    "stable_set": stable,
                    "decomposition": decomposition.map(|d| d.components),
                }),
            );
            Ok(0)
        }
        Command::Decompose { family, k } => {
            let (n, t) = (family.n, family.t);
            let ideal = ind_ideal(n, t).map_err(usage)?;
            if ideal.is_zero() {
                return Err(usage(format!("Ind_{t}(P_{n}) is the zero ideal")));
            }
            let k32 = u32::try_from(k).map_err(usage)?;
            let power = ideal.power(k32).map_err(usage)?;
            let components = pathideal_core::irreducible_decomposition(&power).map_err(usage)?;
            let primes = pathideal_core::primes_of(&components);
            let mut text = format!(
                "Ind_{t}(P_{n})^{k}: {} generators, {} irreducible components\n",
                power.len(),
                components.len()
            );
            for c in &components {
                text.push_str(&format!("  {c}\n"));
            }
            text.push_str(&format!("Ass: {} primes\n{}", primes.len(), primes_lines(&primes)));
            emit(
                format,
                text,
                json!({
                    "n": n, "t": t, "k": k,
                    "generators": power.len(),
                    "components": components,
                    "ass": primes,
                }),
            );
            Ok(0)
        }
        Command::Persistence {
            family,
            kmax,
            budget_ms,
        } => {
            let verifier = Verifier::new(family.n, family.t, options(budget_ms)).map_err(usage)?;
            let scan = verifier.persistence_scan(kmax).map_err(usage)?;
            let sizes: Vec<String> = scan
                .chain_sizes
                .iter()
                .map(|s| s.map_or_else(|| "?".to_string(), |v| v.to_string()))
                .collect();
            let status = match scan.first_violation {
                Some(k) => format!("VIOLATED at k={k}"),
                None if scan.complete => "holds".to_string(),
                None => "no violation among computed powers (some skipped)".to_string(),
            };
            let text = format!(
                "Ind_{}(P_{}) chain |Ass(I^k)|, k=1..{}: [{}]\npersistence {status}\n{}",
                family.t,
                family.n,
                kmax,
                sizes.join(", "),
                render_table(&scan.reports)
            );
            let code = if scan.holds() { 0 } else { EXIT_FAIL };
            emit(format, text, serde_json::to_value(&scan).expect("scan serializes"));
            Ok(code)
        }
        Command::Astab {
            family,
            kmax,
            budget_ms,
        } => {
            let verifier = Verifier::new(family.n, family.t, options(budget_ms)).map_err(usage)?;
            let result = verifier.empirical_astab(kmax).map_err(usage)?;
            let value = match result.value {
                AstabValue::Determined(v) => v.to_string(),
                AstabValue::Undetermined => "UNDETERMINED".to_string(),
            };
            let text = format!(
                "Ind_{}(P_{}) astab up to k={}: {value} (predicted {}), chain sizes {:?}\n",
                family.t, family.n, kmax, result.predicted, result.chain_sizes
            );
            let code = if result.matches == Some(false) { EXIT_FAIL } else { 0 };
            emit(format, text, serde_json::to_value(&result).expect("astab serializes"));
            Ok(code)
        }
        Command::Scan {
            config,
            out,
            table,
            jobs,
        } => {
            let mut config = ScanConfig::load(&config).map_err(usage)?;
            if let Some(jobs) = jobs {
                config.jobs = jobs;
            }
            config.validate().map_err(usage)?;
            let report = grid_scan(&config).map_err(usage)?;
            let table_path = table.or_else(|| {
                let p = out.with_extension("txt");
                (p != out).then_some(p)
            });
            write_file(&out, &report.to_json())?;
            if let Some(path) = &table_path {
                write_file(path, &report.to_table())?;
            }
            emit(
                format,
                report.to_table(),
                serde_json::to_value(&report.summary).expect("summary serializes"),
            );
            Ok(report.exit_code() as u8)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
