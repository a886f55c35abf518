//! `polyrep`: compute representation counts, run verification suites, scan
//! for unsolvable `n` and inspect quadratic-form class data.
//!
//! Exit codes: 0 success, 1 verification or cross-check failure, 2 usage
//! error (including families without a closed form).

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use polyrep_core::arith::set_splitter_seed;
use polyrep_core::closedform::{closed_r, Method};
use polyrep_core::harness::{run_suite, scan_unsolvable, RunOptions, Suite, VerificationReport};
use polyrep_core::qforms::{conductor, reduced_forms, ClassRoles, QuadForm, Structure};
use polyrep_core::repcount::{r_prime_brute, representations, Representation};
use polyrep_core::Family;

#[derive(Parser)]
#[command(name = "polyrep", version, about = "Representations of n as a + b with ab = t*P(m, c)")]
struct Cli {
    /// Seed for the factorization splitter (results never depend on it).
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count and list representations of n.
    Compute(ComputeArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// List unsolvable n for a divisor-count family.
    Scan(ScanArgs),
    /// Show reduced forms and class data for a negative discriminant.
    Qform(QformArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(clap::Args)]
struct ComputeArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    t: u64,
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    n: Option<u64>,
    /// Inclusive range START..END.
    #[arg(long, value_parser = parse_range)]
    n_range: Option<RangeInclusive<u64>>,
    #[arg(long, value_enum, default_value = "brute")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    n_max: Option<u64>,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "POLYREP_JOBS", default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = polyrep_core::harness::DEFAULT_FAILURE_BUDGET)]
    failure_budget: usize,
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct ScanArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    t: u64,
    #[arg(long)]
    n_max: u64,
    /// Also list n with at most one representation.
    #[arg(long)]
    at_most_one: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(clap::Args)]
struct QformArgs {
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    #[arg(long)]
    json: bool,
}

/// One line of `compute` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct OutputRecord {
    m: u64,
    t: u64,
    n: u64,
    r: u64,
    r_prime: u64,
    representations: Vec<Representation>,
    method: Method,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    m: u64,
    t: u64,
    n: u64,
    r: u64,
    r_prime: u64,
    method: &'a str,
    reps: String,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<polyrep_core::Error> for Failure {
    fn from(e: polyrep_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = s.split_once("..").ok_or("expected START..END")?;
    let lo: u64 = lo.trim().parse().map_err(|e| format!("bad start: {e}"))?;
    let hi: u64 = hi.trim_start_matches('=').trim().parse().map_err(|e| format!("bad end: {e}"))?;
    if lo == 0 || lo > hi {
        return Err("need 1 <= START <= END".into());
    }
    Ok(lo..=hi)
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let family = Family::new(args.m, args.t)?;
    let range = args.n_range.clone().unwrap_or_else(|| {
        let n = args.n.unwrap_or(1);
        n..=n
    });
    if *range.start() == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    // Reject unsupported families before writing anything.
    if args.method != MethodArg::Brute {
        closed_r(&family, *range.start())?;
    }

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut csv_out = (args.format == Format::Csv).then(|| csv::Writer::from_writer(io::stdout()));
    if args.format == Format::Table {
        writeln!(out, "{:>6} {:>6} {:>10} {:>8} {:>8}  {:<9} representations", "m", "t", "n", "r", "r'", "method")?;
    }
    let mut mismatch = false;
    for n in range {
        let record = match args.method {
            MethodArg::Brute => {
                let reps = representations(&family, n);
                OutputRecord {
                    m: args.m,
                    t: args.t,
                    n,
                    r: reps.len() as u64,
                    r_prime: r_prime_brute(&family, n) as u64,
                    representations: reps,
                    method: Method::Brute,
                }
            }
            MethodArg::Closed => {
                let (r, method) = closed_r(&family, n)?;
                OutputRecord {
                    m: args.m,
                    t: args.t,
                    n,
                    r,
                    r_prime: r_prime_brute(&family, n) as u64,
                    representations: Vec::new(),
                    method,
                }
            }
            MethodArg::Both => {
                let (closed, method) = closed_r(&family, n)?;
                let reps = representations(&family, n);
                if closed != reps.len() as u64 {
                    eprintln!("mismatch at {family} n={n}: brute {} closed {closed}", reps.len());
                    mismatch = true;
                }
                OutputRecord {
                    m: args.m,
                    t: args.t,
                    n,
                    r: reps.len() as u64,
                    r_prime: r_prime_brute(&family, n) as u64,
                    representations: reps,
                    method,
                }
            }
        };
        match args.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&record)?)?,
            Format::Csv => {
                let w = csv_out.as_mut().expect("csv writer");
                w.serialize(CsvRow {
                    m: record.m,
                    t: record.t,
                    n: record.n,
                    r: record.r,
                    r_prime: record.r_prime,
                    method: record.method.as_str(),
                    reps: record
                        .representations
                        .iter()
                        .map(|p| format!("{}:{}:{}", p.a, p.b, p.c))
                        .collect::<Vec<_>>()
                        .join(";"),
                })?;
                w.flush()?;
            }
            Format::Table => {
                let reps: Vec<String> = record
                    .representations
                    .iter()
                    .map(|p| format!("({},{},{})", p.a, p.b, p.c))
                    .collect();
                writeln!(
                    out,
                    "{:>6} {:>6} {:>10} {:>8} {:>8}  {:<9} {}",
                    record.m,
                    record.t,
                    record.n,
                    record.r,
                    record.r_prime,
                    record.method.as_str(),
                    reps.join(" ")
                )?;
            }
        }
    }
    if mismatch {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn print_report(out: &mut impl Write, report: &VerificationReport) -> io::Result<()> {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{status} {} n_max={} cases={} failures={}{} {:.2}s",
        report.suite,
        report.n_max,
        report.cases_run,
        report.failures.len(),
        if report.aborted { " (budget reached)" } else { "" },
        report.elapsed_secs
    )?;
    for f in &report.failures {
        writeln!(out, "  {}: expected {}, got {}", f.case, f.expected, f.got)?;
    }
    for note in &report.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let opts = RunOptions {
        n_max: args.n_max,
        jobs: args.jobs,
        failure_budget: args.failure_budget,
    };
    let mut out = io::stdout().lock();
    let mut all_passed = true;
    for suite in suites {
        let report = run_suite(suite, &opts);
        all_passed &= report.passed();
        if args.json {
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        } else {
            print_report(&mut out, &report)?;
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn scan(args: &ScanArgs) -> Result<(), Failure> {
    let family = Family::new(args.m, args.t)?;
    let result = scan_unsolvable(&family, args.n_max)?;
    let mut out = io::stdout().lock();
    let join = |ns: &[u64]| ns.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&result)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "class"])?;
            for n in &result.unsolvable {
                w.write_record([n.to_string().as_str(), "unsolvable"])?;
            }
            if args.at_most_one {
                for n in &result.at_most_one {
                    w.write_record([n.to_string().as_str(), "at_most_one"])?;
                }
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{}", join(&result.unsolvable))?;
            if args.at_most_one {
                writeln!(out, "{}", join(&result.at_most_one))?;
            }
            eprintln!(
                "{family} n <= {}: {} unsolvable (density {:.4}), {} with r <= 1 (density {:.4}), {} sampled against brute force",
                result.n_max,
                result.unsolvable.len(),
                result.unsolvable_density,
                result.at_most_one.len(),
                result.at_most_one_density,
                result.sampled
            );
        }
    }
    if result.disagreements.is_empty() {
        Ok(())
    } else {
        eprintln!("closed form disagrees with brute force at n = {}", join(&result.disagreements));
        Err(Failure::Check)
    }
}

#[derive(Serialize)]
struct QformOutput {
    d: i64,
    h: usize,
    structure: Structure,
    conductor: u64,
    forms: Vec<QuadForm>,
    roles: Option<ClassRoles>,
}

fn qform(args: &QformArgs) -> Result<(), Failure> {
    let data = reduced_forms(args.d)?;
    let info = QformOutput {
        d: data.d(),
        h: data.h(),
        structure: data.structure(),
        conductor: conductor(args.d)?,
        forms: data.forms().to_vec(),
        roles: data.roles().copied(),
    };
    let mut out = io::stdout().lock();
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&info)?)?;
        return Ok(());
    }
    let forms: Vec<String> = info.forms.iter().map(QuadForm::to_string).collect();
    writeln!(out, "d = {}", info.d)?;
    writeln!(out, "forms: {}", forms.join(" "))?;
    writeln!(out, "h = {}", info.h)?;
    writeln!(out, "structure: {:?}", info.structure)?;
    writeln!(out, "conductor: {}", info.conductor)?;
    if let Some(roles) = info.roles {
        writeln!(out, "I = {}, A = {}", roles.identity, roles.generator)?;
        if let Some(sq) = roles.square {
            writeln!(out, "A^2 = {sq}")?;
        }
        if let Some(cube) = roles.cube {
            writeln!(out, "A^3 = {cube}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(seed) = cli.seed {
        set_splitter_seed(seed);
    }
    let result = match &cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Scan(args) => scan(args),
        Command::Qform(args) => qform(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
