//! Verification suites binding each closed form to a brute-force oracle,
//! plus scans for unsolvable `n` and closed-form vs brute-force timing.
//!
//! Suites split their cases into fixed-size blocks evaluated on a rayon pool.
//! Blocks are merged in case order and the failure budget is checked after
//! each fixed-size wave, so a report does not depend on the worker count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime};
use crate::closedform::{
    closed_r, descriptor, divisor_families, functional_families, r_class_functionals, r_divisor_formula,
    rprime_from_forms, table_f_identity, unsolvable_by_prime_set, Method, CASES,
};
use crate::error::{Error, Result};
use crate::polygonal::Family;
use crate::qforms::{
    class_two_closed, cyclic_four_closed, diagonal_solutions, dirichlet_n, f_square_direct, f_values,
    is_fundamental, omega, principal_r, reduced_forms, represent_count, validate_discriminant, ClassData,
    Structure, CLASS_NUMBER_ONE, CLASS_NUMBER_THREE, CLASS_NUMBER_TWO, CYCLIC_FOUR,
};
use crate::repcount::{qsolutions, representation_from_qpair, representations, r_brute, r_prime_brute};

const BLOCK: usize = 64;
const WAVE: usize = 16;

pub const DEFAULT_FAILURE_BUDGET: usize = 25;

/// Discriminants used for the divisor-sum consistency check.
pub const DIRICHLET_DISCRIMINANTS: [i64; 12] = [-3, -4, -8, -24, -40, -56, -88, -136, -184, -232, -328, -568];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Corollary1,
    Lemmas,
    Bridge,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Theorem1,
        Suite::Theorem2,
        Suite::Theorem3,
        Suite::Theorem4,
        Suite::Corollary1,
        Suite::Lemmas,
        Suite::Bridge,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem3 => "theorem3",
            Suite::Theorem4 => "theorem4",
            Suite::Corollary1 => "corollary1",
            Suite::Lemmas => "lemmas",
            Suite::Bridge => "bridge",
        }
    }

    pub fn default_n_max(&self) -> u64 {
        match self {
            Suite::Theorem1 | Suite::Theorem2 | Suite::Bridge => 200,
            Suite::Theorem3 | Suite::Corollary1 => 300,
            Suite::Theorem4 => 150,
            Suite::Lemmas => 2000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    fn new(case: impl Into<String>, expected: impl ToString, got: impl ToString) -> Self {
        Self {
            case: case.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_max: u64,
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    /// Set when the failure budget stopped the suite early.
    pub aborted: bool,
    pub notes: Vec<String>,
    pub elapsed_secs: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Overrides [`Suite::default_n_max`].
    pub n_max: Option<u64>,
    /// Worker threads; 0 uses rayon's default.
    pub jobs: usize,
    pub failure_budget: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            n_max: None,
            jobs: 0,
            failure_budget: DEFAULT_FAILURE_BUDGET,
        }
    }
}

struct Collector {
    budget: usize,
    cases_run: u64,
    failures: Vec<Failure>,
    aborted: bool,
    notes: Vec<String>,
}

impl Collector {
    fn new(budget: usize) -> Self {
        Self {
            budget: budget.max(1),
            cases_run: 0,
            failures: Vec::new(),
            aborted: false,
            notes: Vec::new(),
        }
    }

    fn run<C, F>(&mut self, cases: &[C], check: F)
    where
        C: Sync,
        F: Fn(&C) -> Option<Failure> + Sync,
    {
        for wave in cases.chunks(BLOCK * WAVE) {
            if self.aborted {
                return;
            }
            let found: Vec<Vec<Failure>> = wave
                .par_chunks(BLOCK)
                .map(|block| block.iter().filter_map(&check).collect())
                .collect();
            self.cases_run += wave.len() as u64;
            self.failures.extend(found.into_iter().flatten());
            if self.failures.len() >= self.budget {
                self.failures.truncate(self.budget);
                self.aborted = true;
            }
        }
    }
}

fn grid(families: &[Family], n_max: u64) -> Vec<(Family, u64)> {
    families
        .iter()
        .flat_map(|&f| (1..=n_max).map(move |n| (f, n)))
        .collect()
}

fn label(f: &Family, n: u64) -> String {
    format!("(m={}, t={}, n={n})", f.m(), f.t())
}

fn odd_primes_up_to(limit: u64) -> impl Iterator<Item = u64> {
    (3..=limit).filter(|&p| is_prime(p))
}

/// Families covered by the `r = r' - 1` relation.
pub fn theorem2_families() -> Vec<Family> {
    let fam = |m, t| Family::new(m, t).expect("valid family");
    let shifted: Vec<u64> = std::iter::once(3).chain(odd_primes_up_to(60).map(|p| p + 2)).collect();
    let mut out: Vec<Family> = shifted.iter().map(|&m| fam(m, 1)).collect();
    out.extend(std::iter::once(3).chain(odd_primes_up_to(30).map(|p| 2 * p + 2)).map(|m| fam(m, 2)));
    for t in [3, 5, 7, 11, 13] {
        out.extend(shifted.iter().filter(|&&m| t != m - 2).map(|&m| fam(m, t)));
    }
    out
}

fn theorem1(c: &mut Collector, n_max: u64) {
    let families: Vec<Family> = (3..=60)
        .flat_map(|m| (1..=30).map(move |t| Family::new(m, t).expect("valid family")))
        .collect();
    let primes = std::sync::atomic::AtomicU64::new(0);
    c.run(&grid(&families, n_max), |(f, n)| {
        let r = r_brute(f, *n);
        let rp = r_prime_brute(f, *n);
        let z = f.z(*n);
        if u64::try_from(z).is_ok_and(is_prime) {
            primes.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            if r != 0 {
                return Some(Failure::new(format!("{} z={z} prime", label(f, *n)), "r = 0", format!("r = {r}")));
            }
        }
        (r + 1 > rp).then(|| Failure::new(label(f, *n), format!("r <= r'-1 = {}", rp as i64 - 1), format!("r = {r}")))
    });
    c.notes.push(format!(
        "{} grid points with prime z",
        primes.load(std::sync::atomic::Ordering::Relaxed)
    ));
}

fn theorem2(c: &mut Collector, n_max: u64) {
    c.run(&grid(&theorem2_families(), n_max), |(f, n)| {
        let reps = representations(f, *n);
        let sols = qsolutions(f, *n);
        if reps.len() + 1 != sols.len() {
            return Some(Failure::new(label(f, *n), format!("r = r'-1 = {}", sols.len() as i64 - 1), format!("r = {}", reps.len())));
        }
        let trivial = (*n, (f.m() as i64 - 4).unsigned_abs());
        let mut built = BTreeSet::new();
        for s in &sols {
            match representation_from_qpair(f, *n, s) {
                Some(rep) => {
                    built.insert((rep.a, rep.b, rep.c));
                }
                None if (s.x, s.y) == trivial => {}
                None => {
                    return Some(Failure::new(label(f, *n), "every non-trivial pair maps", format!("({}, {}) unmapped", s.x, s.y)));
                }
            }
        }
        let expected: BTreeSet<_> = reps.iter().map(|r| (r.a, r.b, r.c)).collect();
        (built != expected).then(|| Failure::new(label(f, *n), format!("{expected:?}"), format!("{built:?}")))
    });
}

fn theorem3(c: &mut Collector, n_max: u64) {
    let families: Vec<Family> = divisor_families().map(|d| d.family()).collect();
    c.run(&grid(&families, n_max), |(f, n)| {
        let brute = r_brute(f, *n) as u64;
        match r_divisor_formula(f, *n) {
            Ok(v) if v == brute => None,
            Ok(v) => Some(Failure::new(label(f, *n), brute, v)),
            Err(e) => Some(Failure::new(label(f, *n), brute, e)),
        }
    });
}

fn corollary1(c: &mut Collector, n_max: u64) {
    let families: Vec<Family> = divisor_families().map(|d| d.family()).collect();
    c.run(&grid(&families, n_max), |(f, n)| {
        let brute = r_brute(f, *n);
        let closed = r_divisor_formula(f, *n).ok();
        let member = unsolvable_by_prime_set(f, *n).ok();
        let consistent = member == Some(brute == 0) && closed.map(|r| r == 0) == Some(brute == 0);
        (!consistent).then(|| {
            Failure::new(
                label(f, *n),
                format!("unsolvable = {}", brute == 0),
                format!("prime-set test {member:?}, closed r {closed:?}"),
            )
        })
    });
    let flagship_max = n_max.max(2000);
    let fam = Family::new(3, 2).expect("valid family");
    let ns: Vec<u64> = (1..=flagship_max).collect();
    c.run(&ns, |&n| {
        let brute_zero = r_brute(&fam, n) == 0;
        let prime = is_prime(n * n + 1);
        let member = unsolvable_by_prime_set(&fam, n).ok();
        (brute_zero != prime || member != Some(prime))
            .then(|| Failure::new(format!("n²+1 check, n={n}"), format!("r = 0 iff prime ({prime})"), format!("brute r = 0: {brute_zero}, prime-set test {member:?}")))
    });
    c.notes.push(format!("n²+1 criterion checked for n <= {flagship_max}"));
}

fn theorem4(c: &mut Collector, n_max: u64) {
    let cases: Vec<_> = functional_families()
        .flat_map(|d| (1..=n_max).map(move |n| (d, n)))
        .collect();
    c.run(&cases, |(case, n)| {
        let f = case.family();
        let brute = r_brute(&f, *n) as u64;
        let closed = r_class_functionals(&f, *n);
        if closed.as_ref().ok() != Some(&brute) {
            return Some(Failure::new(label(&f, *n), brute, format!("{closed:?}")));
        }
        let z = case.z(*n).ok()?;
        let data = case.class_data().ok()?;
        let via_classes = data.total_count(z) / omega(case.d);
        match table_f_identity(&f, *n) {
            Ok(v) if v == via_classes => None,
            other => Some(Failure::new(format!("F(I) divisor expression at {} z={z}", label(&f, *n)), via_classes, format!("{other:?}"))),
        }
    });
}

fn bridge(c: &mut Collector, n_max: u64) {
    let families: Vec<Family> = CASES.iter().map(|d| d.family()).collect();
    c.run(&grid(&families, n_max), |(f, n)| {
        let brute = r_prime_brute(f, *n) as u64;
        match rprime_from_forms(f, *n) {
            Ok(v) if v == brute => None,
            other => Some(Failure::new(label(f, *n), brute, format!("{other:?}"))),
        }
    });
}

fn class_number_lists(c: &mut Collector) {
    let ds: Vec<i64> = (-1600..=-3).rev().filter(|&d| validate_discriminant(d).is_ok()).collect();
    c.run(&ds, |&d| {
        let data = reduced_forms(d).ok()?;
        let h = data.h();
        let cyclic = h == 4 && data.ambiguous_count() == 2;
        let checks = [
            ("h = 1", h == 1, CLASS_NUMBER_ONE.contains(&d)),
            ("h = 2", h == 2, CLASS_NUMBER_TWO.contains(&d)),
            ("h = 3", h == 3, CLASS_NUMBER_THREE.contains(&d)),
            ("Z4", cyclic, CYCLIC_FOUR.contains(&d)),
        ];
        checks.iter().find(|(_, enumerated, listed)| enumerated != listed).map(|(what, enumerated, listed)| {
            Failure::new(format!("d={d} {what}"), format!("listed: {listed}"), format!("enumerated: {enumerated} (h={h})"))
        })
    });
}

fn dirichlet_consistency(c: &mut Collector, n_max: u64) {
    let data: Vec<ClassData> = DIRICHLET_DISCRIMINANTS.iter().map(|&d| reduced_forms(d).expect("valid")).collect();
    let cases: Vec<(&ClassData, u64)> = data
        .iter()
        .flat_map(|cd| (1..=n_max).filter(|&n| gcd(n, cd.d().unsigned_abs()) == 1).map(move |n| (cd, n)))
        .collect();
    c.run(&cases, |(cd, n)| {
        let d = cd.d();
        let enumerated = cd.total_count(*n);
        let formula = dirichlet_n(*n, d);
        if formula.as_ref().ok() != Some(&enumerated) {
            return Some(Failure::new(format!("N({n}, {d})"), enumerated, format!("{formula:?}")));
        }
        if cd.h() == 1 {
            let principal = represent_count(&cd.forms()[0], *n).ok()?;
            if principal_r(*n, d).ok() != Some(principal) {
                return Some(Failure::new(format!("R(I, {n}) for d={d}"), principal, format!("{:?}", principal_r(*n, d))));
            }
        }
        None
    });
}

fn class_two_split(c: &mut Collector, n_max: u64) {
    let data: Vec<ClassData> = CLASS_NUMBER_TWO
        .iter()
        .filter(|&&d| d != -60 && is_fundamental(d))
        .map(|&d| reduced_forms(d).expect("valid"))
        .collect();
    let cases: Vec<(&ClassData, u64)> = data.iter().flat_map(|cd| (1..=n_max).map(move |n| (cd, n))).collect();
    let applicable = std::sync::atomic::AtomicU64::new(0);
    c.run(&cases, |(cd, n)| {
        let closed = match class_two_closed(*n, cd.d()) {
            Err(Error::Hypothesis(_)) => return None,
            other => other,
        };
        applicable.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        let forms = cd.forms();
        let expected = (represent_count(&forms[0], *n).ok()?, represent_count(&forms[1], *n).ok()?);
        (closed.as_ref().ok() != Some(&expected))
            .then(|| Failure::new(format!("class-two split at n={n}, d={}", cd.d()), format!("{expected:?}"), format!("{closed:?}")))
    });
    c.notes.push(format!(
        "class-two closed form applied at {} (d, n) pairs",
        applicable.load(std::sync::atomic::Ordering::Relaxed)
    ));
}

fn cyclic_four_split(c: &mut Collector, n_max: u64) {
    let data: Vec<ClassData> = CYCLIC_FOUR
        .iter()
        .filter(|&&d| is_fundamental(d))
        .map(|&d| reduced_forms(d).expect("valid"))
        .collect();
    if let Some(cd) = data.iter().find(|cd| cd.roles().is_none() || cd.structure() != Structure::Z4) {
        c.failures.push(Failure::new(format!("roles for d={}", cd.d()), "assigned", "missing"));
    }
    let cases: Vec<(&ClassData, u64)> = data.iter().flat_map(|cd| (1..=n_max).map(move |n| (cd, n))).collect();
    c.run(&cases, |(cd, n)| {
        let roles = cd.roles()?;
        let square = roles.square?;
        let expected = (represent_count(&roles.identity, *n).ok()?, represent_count(&square, *n).ok()?);
        let closed = cyclic_four_closed(*n, cd);
        if closed.as_ref().ok() != Some(&expected) {
            return Some(Failure::new(format!("cyclic-four split at n={n}, d={}", cd.d()), format!("{expected:?}"), format!("{closed:?}")));
        }
        let signed = f_values(*n, cd).ok()?.f_a2;
        let direct = f_square_direct(*n, cd).ok();
        (signed != direct).then(|| Failure::new(format!("F(A², {n}) sign rule, d={}", cd.d()), format!("{direct:?}"), format!("{signed:?}")))
    });
}

fn nagell(c: &mut Collector) {
    let primes: Vec<u64> = (2..=10_000).filter(|&p| is_prime(p)).collect();
    let pairs: Vec<(u64, u64)> = [1, 2, 3, 5, 11, 29]
        .into_iter()
        .flat_map(|a| [1, 2, 6, 10, 14].into_iter().map(move |b| (a, b)))
        .collect();
    let cases: Vec<(u64, u64, u64)> = pairs
        .iter()
        .flat_map(|&(a, b)| primes.iter().map(move |&p| (a, b, p)))
        .collect();
    c.run(&cases, |&(a, b, p)| {
        // A symmetric form counts (x, y) and (y, x) once.
        let sols: Vec<_> = diagonal_solutions(a, b, p)
            .into_iter()
            .filter(|&(x, y)| a != b || x <= y)
            .collect();
        (sols.len() > 1).then(|| Failure::new(format!("{p} = {a}x² + {b}y²"), "at most one", format!("{sols:?}")))
    });
}

fn lemmas(c: &mut Collector, n_max: u64) {
    class_number_lists(c);
    dirichlet_consistency(c, n_max);
    class_two_split(c, n_max);
    cyclic_four_split(c, n_max);
    nagell(c);
}

pub fn run_suite(suite: Suite, options: &RunOptions) -> VerificationReport {
    let n_max = options.n_max.unwrap_or_else(|| suite.default_n_max());
    let start = Instant::now();
    let mut collector = Collector::new(options.failure_budget);
    let body = |c: &mut Collector| match suite {
        Suite::Theorem1 => theorem1(c, n_max),
        Suite::Theorem2 => theorem2(c, n_max),
        Suite::Theorem3 => theorem3(c, n_max),
        Suite::Theorem4 => theorem4(c, n_max),
        Suite::Corollary1 => corollary1(c, n_max),
        Suite::Lemmas => lemmas(c, n_max),
        Suite::Bridge => bridge(c, n_max),
    };
    with_pool(options.jobs, || body(&mut collector));
    VerificationReport {
        suite: suite.name().to_string(),
        n_max,
        cases_run: collector.cases_run,
        failures: collector.failures,
        aborted: collector.aborted,
        notes: collector.notes,
        elapsed_secs: start.elapsed().as_secs_f64(),
    }
}

/// Looks a suite up by name and runs it.
pub fn run_suite_named(name: &str, options: &RunOptions) -> Result<VerificationReport> {
    Ok(run_suite(name.parse()?, options))
}

fn with_pool<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub m: u64,
    pub t: u64,
    pub n_max: u64,
    pub unsolvable: Vec<u64>,
    pub at_most_one: Vec<u64>,
    pub unsolvable_density: f64,
    pub at_most_one_density: f64,
    pub sampled: usize,
    /// Sampled `n` where the closed form and brute force disagree.
    pub disagreements: Vec<u64>,
}

/// Unsolvable `n ≤ n_max` via the divisor formula, spot-checked against brute
/// force on every hundredth `n` (starting at 1).
pub fn scan_unsolvable(family: &Family, n_max: u64) -> Result<ScanResult> {
    if descriptor(family).map(|d| d.method()) != Some(Method::Theorem3) {
        return Err(Error::UnsupportedFamily {
            m: family.m(),
            t: family.t(),
        });
    }
    let counts: Vec<(u64, u64)> = (1..=n_max)
        .into_par_iter()
        .map(|n| r_divisor_formula(family, n).map(|r| (n, r)))
        .collect::<Result<_>>()?;
    let unsolvable: Vec<u64> = counts.iter().filter(|(_, r)| *r == 0).map(|(n, _)| *n).collect();
    let at_most_one: Vec<u64> = counts.iter().filter(|(_, r)| *r <= 1).map(|(n, _)| *n).collect();
    let sample: Vec<&(u64, u64)> = counts.iter().filter(|(n, _)| n % 100 == 1).collect();
    let disagreements = sample
        .par_iter()
        .filter(|(n, r)| r_brute(family, *n) as u64 != *r)
        .map(|(n, _)| *n)
        .collect();
    let density = |k: usize| if n_max == 0 { 0.0 } else { k as f64 / n_max as f64 };
    Ok(ScanResult {
        m: family.m(),
        t: family.t(),
        n_max,
        unsolvable_density: density(unsolvable.len()),
        at_most_one_density: density(at_most_one.len()),
        unsolvable,
        at_most_one,
        sampled: sample.len(),
        disagreements,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkResult {
    pub m: u64,
    pub t: u64,
    pub n_max: u64,
    pub method: Method,
    pub closed_secs: f64,
    pub brute_secs: f64,
    pub speedup: f64,
    pub mismatches: Vec<u64>,
}

impl BenchmarkResult {
    pub fn counts_identical(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Times both routes single-threaded over `1..=n_max`.
pub fn benchmark(family: &Family, n_max: u64) -> Result<BenchmarkResult> {
    let start = Instant::now();
    let mut closed = Vec::with_capacity(n_max as usize);
    let mut method = Method::Theorem3;
    for n in 1..=n_max {
        let (r, m) = closed_r(family, n)?;
        closed.push(r);
        method = m;
    }
    let closed_secs = start.elapsed().as_secs_f64();

    let start = Instant::now();
    let brute: Vec<u64> = (1..=n_max).map(|n| r_brute(family, n) as u64).collect();
    let brute_secs = start.elapsed().as_secs_f64();

    let mismatches = (1..=n_max)
        .zip(closed.iter().zip(&brute))
        .filter(|(_, (a, b))| a != b)
        .map(|(n, _)| n)
        .collect();
    Ok(BenchmarkResult {
        m: family.m(),
        t: family.t(),
        n_max,
        method,
        closed_secs,
        brute_secs,
        speedup: if closed_secs > 0.0 { brute_secs / closed_secs } else { f64::INFINITY },
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(m: u64, t: u64) -> Family {
        Family::new(m, t).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
        }
        assert_eq!("bogus".parse::<Suite>(), Err(Error::UnknownSuite("bogus".into())));
    }

    #[test]
    fn theorem2_family_list() {
        let fams = theorem2_families();
        assert!(fams.contains(&fam(3, 1)));
        assert!(fams.contains(&fam(61, 1)));
        assert!(fams.contains(&fam(60, 2)));
        assert!(fams.contains(&fam(3, 13)));
        assert!(!fams.contains(&fam(5, 3)), "t = m - 2 is excluded");
        assert!(!fams.contains(&fam(11, 1)), "9 is not prime");
    }

    #[test]
    fn small_suites_pass() {
        let opts = RunOptions {
            n_max: Some(40),
            ..RunOptions::default()
        };
        for suite in [Suite::Theorem3, Suite::Corollary1, Suite::Theorem4, Suite::Bridge] {
            let report = run_suite(suite, &opts);
            assert!(report.passed(), "{suite}: {:?}", report.failures);
            assert!(report.cases_run > 0);
        }
    }

    #[test]
    fn reports_do_not_depend_on_worker_count() {
        let run = |jobs| {
            let mut r = run_suite(
                Suite::Theorem2,
                &RunOptions {
                    n_max: Some(30),
                    jobs,
                    failure_budget: 5,
                },
            );
            r.elapsed_secs = 0.0;
            r
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn failure_budget_stops_early() {
        let report = run_suite(
            Suite::Theorem2,
            &RunOptions {
                n_max: Some(200),
                jobs: 2,
                failure_budget: 3,
            },
        );
        assert_eq!(report.failures.len(), 3);
        assert!(report.aborted);
    }

    #[test]
    fn scan_examples() {
        let r = scan_unsolvable(&fam(3, 2), 20).unwrap();
        assert_eq!(r.unsolvable, vec![1, 2, 4, 6, 10, 14, 16, 20]);
        assert!(r.disagreements.is_empty());

        let r = scan_unsolvable(&fam(3, 1), 10).unwrap();
        assert!(r.unsolvable.contains(&3));
        assert!(!r.unsolvable.contains(&4));

        let r = scan_unsolvable(&fam(5, 1), 10).unwrap();
        assert!(r.unsolvable.contains(&4));

        assert!(scan_unsolvable(&fam(3, 1), 0).unwrap().unsolvable.is_empty());
        assert!(scan_unsolvable(&fam(6, 1), 10).is_err());
        assert!(scan_unsolvable(&fam(9, 1), 10).is_err());
    }

    #[test]
    fn benchmark_counts_match() {
        for (m, t) in [(3, 2), (9, 1)] {
            let b = benchmark(&fam(m, t), 300).unwrap();
            assert!(b.counts_identical(), "({m},{t}) {:?}", b.mismatches);
        }
        assert_eq!(benchmark(&fam(9, 1), 5).unwrap().method, Method::Theorem4);
    }

    #[test]
    fn report_serializes() {
        let report = run_suite(Suite::Theorem3, &RunOptions { n_max: Some(5), ..Default::default() });
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
