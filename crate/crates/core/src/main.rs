use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use su3_outer::battery::{battery_to_csv, render_battery, run_battery};
use su3_outer::decompose::{constrained_basis, render_text, resolve, resolve_space};
use su3_outer::factory::{build_c4prime, C4PrimeCoefficients};
use su3_outer::oracle::oracle_report;
use su3_outer::scalar::parse_rational;
use su3_outer::verify::{reports_to_json, run_suite, Suite};
use su3_outer::{IrrepLabel, Rational};

const NMAX_CEILING: u32 = 10;

#[derive(Parser, Debug)]
#[command(name = "su3-outer", version, about = "Exact SU(3) outer multiplicity resolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Factors {
    #[arg(long)]
    p1: u32,
    #[arg(long)]
    q1: u32,
    #[arg(long)]
    p2: u32,
    #[arg(long)]
    q2: u32,
}

impl Factors {
    fn labels(&self) -> (IrrepLabel, IrrepLabel) {
        (IrrepLabel::new(self.p1, self.q1), IrrepLabel::new(self.p2, self.q2))
    }
}

#[derive(Args, Debug)]
struct Lambdas {
    /// Weight of (A+.C)(C+.A).
    #[arg(long, default_value = "1", value_parser = rational_arg)]
    lambda1: Rational,
    /// Weight of (B+.D)(D+.B).
    #[arg(long, default_value = "0", value_parser = rational_arg)]
    lambda2: Rational,
    /// Weight of (A+.D+)(A.D).
    #[arg(long, default_value = "0", value_parser = rational_arg)]
    lambda3: Rational,
    /// Weight of (B+.C+)(B.C).
    #[arg(long, default_value = "0", value_parser = rational_arg)]
    lambda4: Rational,
}

impl Lambdas {
    fn coefficients(&self) -> C4PrimeCoefficients {
        C4PrimeCoefficients::from_rationals([
            self.lambda1.clone(),
            self.lambda2.clone(),
            self.lambda3.clone(),
            self.lambda4.clone(),
        ])
    }
}

#[derive(Args, Debug)]
struct Output {
    /// Write JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write CSV to this path.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SuiteArg {
    So42,
    Invariance,
    Identities,
    Casimirs,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::So42 => Suite::So42,
            SuiteArg::Invariance => Suite::Invariance,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Casimirs => Suite::Casimirs,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a product and resolve repeated irreps by C4'.
    Decompose {
        #[command(flatten)]
        factors: Factors,
        #[command(flatten)]
        lambdas: Lambdas,
        #[command(flatten)]
        output: Output,
    },
    /// Check operator identities on truncated Fock spaces.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Truncation for so(4,2) and invariance checks; Casimir checks
        /// keep the same interior.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=NMAX_CEILING as i64))]
        nmax: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Compare resolve against the character oracle on all small pairs.
    Battery {
        /// Largest p + q of either factor.
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[command(flatten)]
        lambdas: Lambdas,
        #[command(flatten)]
        output: Output,
    },
    /// C4' spectrum on the highest-weight space of one coupled irrep.
    Spectrum {
        #[command(flatten)]
        factors: Factors,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        lambdas: Lambdas,
        #[command(flatten)]
        output: Output,
    },
    /// Decompose a product using characters only.
    Oracle {
        #[command(flatten)]
        factors: Factors,
        #[command(flatten)]
        output: Output,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Exit code and message.
type Failure = (u8, String);

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| (1, format!("writing {}: {e}", path.display())))
}

fn fail(e: su3_outer::Error) -> Failure {
    let code = match e {
        su3_outer::Error::Parse(_) => 2,
        _ => 1,
    };
    (code, e.to_string())
}

fn emit(output: &Output, json: impl FnOnce() -> String, csv: Option<String>) -> Result<(), Failure> {
    if let Some(p) = &output.json {
        write_file(p, &json())?;
    }
    if let Some(p) = &output.csv {
        match csv {
            Some(body) => write_file(p, &body)?,
            None => return Err((2, "csv output is not available for this command".into())),
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Decompose {
            factors,
            lambdas,
            output,
        } => {
            let (a, b) = factors.labels();
            let report = resolve(a, b, &lambdas.coefficients()).map_err(fail)?;
            print!("{}", render_text(&report));
            emit(&output, || report.to_json(), Some(report.to_csv()))?;
            Ok(report.passed())
        }
        Command::Verify { suite, nmax, output } => {
            let reports = run_suite(suite.into(), nmax).map_err(fail)?;
            for r in &reports {
                println!("{r}");
            }
            emit(&output, || reports_to_json(&reports), None)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::Battery {
            bound,
            lambdas,
            output,
        } => {
            let rows = run_battery(bound, &lambdas.coefficients()).map_err(fail)?;
            print!("{}", render_battery(&rows));
            for r in rows.iter().filter(|r| !r.degenerate.is_empty()) {
                println!("finding: degenerate C4' spectrum in {:?} for {:?}", r.factors, r.degenerate);
            }
            emit(
                &output,
                || serde_json::to_string_pretty(&rows).expect("rows serialize"),
                Some(battery_to_csv(&rows)),
            )?;
            Ok(rows.iter().all(|r| r.passed()))
        }
        Command::Spectrum {
            factors,
            p,
            q,
            lambdas,
            output,
        } => {
            let (a, b) = factors.labels();
            let target = IrrepLabel::new(p, q);
            let basis = constrained_basis(a, b).map_err(fail)?;
            let c4 = build_c4prime(&lambdas.coefficients());
            let space = resolve_space(&basis, target, &c4).map_err(fail)?;
            let labels = space.as_ref().map(|s| s.report_labels()).unwrap_or_default();
            println!("{a} x {b} -> {target}: multiplicity {}", labels.len());
            for s in space.iter().flat_map(|s| &s.spectrum) {
                println!("  {}  (x{})", s.value.label(), s.multiplicity);
            }
            let json = serde_json::json!({
                "factors": [[a.p, a.q], [b.p, b.q]],
                "p": p,
                "q": q,
                "multiplicity": labels.len(),
                "c4prime_eigenvalues": labels,
                "exact": space.iter().flat_map(|s| &s.spectrum).all(|s| s.value.is_exact()),
            });
            emit(&output, || serde_json::to_string_pretty(&json).expect("json"), None)?;
            Ok(true)
        }
        Command::Oracle { factors, output } => {
            let (a, b) = factors.labels();
            let report = oracle_report(a, b).map_err(fail)?;
            println!("{a} x {b}");
            for t in &report.terms {
                println!("  ({},{})  x{}", t.p, t.q, t.multiplicity);
            }
            let mut csv = String::from("p,q,multiplicity\n");
            for t in &report.terms {
                csv.push_str(&format!("{},{},{}\n", t.p, t.q, t.multiplicity));
            }
            emit(
                &output,
                || serde_json::to_string_pretty(&report).expect("report serializes"),
                Some(csv),
            )?;
            Ok(report.dimension_check)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
