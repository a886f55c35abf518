//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.
//!
//! Suites run on one worker so the time limits are single-threaded limits.

use std::process::ExitCode;

use polyrep_core::harness::{benchmark, run_suite, RunOptions, Suite, VerificationReport};
use polyrep_core::Family;

struct Criterion {
    id: u32,
    name: &'static str,
    suite: Suite,
    n_max: u64,
    limit_secs: f64,
}

const CRITERIA: [Criterion; 7] = [
    Criterion { id: 1, name: "divisor-count closed forms, 14 families, n <= 300", suite: Suite::Theorem3, n_max: 300, limit_secs: 30.0 },
    Criterion { id: 2, name: "prime-set test iff r = 0, n <= 300; n²+1 to 2000", suite: Suite::Corollary1, n_max: 300, limit_secs: 10.0 },
    Criterion { id: 3, name: "r = r' - 1 on the listed families, n <= 200", suite: Suite::Theorem2, n_max: 200, limit_secs: 60.0 },
    Criterion { id: 4, name: "prime z forces r = 0; r <= r' - 1 on m <= 60, t <= 30, n <= 200", suite: Suite::Theorem1, n_max: 200, limit_secs: 60.0 },
    Criterion { id: 5, name: "class-functional closed forms and F(I) column, n <= 150", suite: Suite::Theorem4, n_max: 150, limit_secs: 60.0 },
    Criterion { id: 6, name: "class lists, Dirichlet, split formulas, Nagell uniqueness", suite: Suite::Lemmas, n_max: 2000, limit_secs: 120.0 },
    Criterion { id: 7, name: "r' from [t, 0, 2(m-2)] equals brute r', 24 families, n <= 200", suite: Suite::Bridge, n_max: 200, limit_secs: 30.0 },
];

fn line(id: u32, ok: bool, name: &str, detail: &str) {
    println!("criterion {id}: {} {name} ({detail})", if ok { "PASS" } else { "FAIL" });
}

fn check_suite(c: &Criterion) -> bool {
    let opts = RunOptions {
        n_max: Some(c.n_max),
        jobs: 1,
        failure_budget: 100_000,
    };
    let report: VerificationReport = run_suite(c.suite, &opts);
    let in_time = report.elapsed_secs < c.limit_secs;
    let ok = report.passed() && in_time;
    let mut detail = format!(
        "{} cases, {} failures{}, {:.2}s of {:.0}s",
        report.cases_run,
        report.failures.len(),
        if report.aborted { " (budget reached)" } else { "" },
        report.elapsed_secs,
        c.limit_secs
    );
    let mut families: Vec<String> = report
        .failures
        .iter()
        .filter(|f| f.case.starts_with("(m="))
        .filter_map(|f| f.case.split(", n=").next().map(|fam| format!("{fam})")))
        .collect();
    families.dedup();
    if !families.is_empty() {
        detail.push_str(&format!("; failing families: {}", families.join(" ")));
    }
    if let Some(f) = report.failures.first() {
        detail.push_str(&format!("; first: {} expected {} got {}", f.case, f.expected, f.got));
    }
    line(c.id, ok, c.name, &detail);
    for note in &report.notes {
        println!("    note: {note}");
    }
    ok
}

fn check_benchmark() -> bool {
    let family = Family::new(3, 1).expect("valid family");
    let name = "closed form matches brute force on (3,1) to n = 10^4 and is faster";
    match benchmark(&family, 10_000) {
        Ok(b) => {
            let ok = b.counts_identical() && b.speedup > 1.0;
            let detail = format!(
                "{} mismatches, closed {:.3}s, brute {:.3}s, speedup {:.1}x",
                b.mismatches.len(),
                b.closed_secs,
                b.brute_secs,
                b.speedup
            );
            line(8, ok, name, &detail);
            ok
        }
        Err(e) => {
            line(8, false, name, &e.to_string());
            false
        }
    }
}

fn main() -> ExitCode {
    // libtest passes flags such as --nocapture or a filter; only a filter matters here.
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let selected = |id: u32| filter.is_empty() || filter.iter().any(|f| f == &id.to_string());

    let mut failed = Vec::new();
    for c in CRITERIA.iter().filter(|c| selected(c.id)) {
        if !check_suite(c) {
            failed.push(c.id);
        }
    }
    if selected(8) && !check_benchmark() {
        failed.push(8);
    }
    if failed.is_empty() {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
