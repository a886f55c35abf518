//! Exact 64-bit integer arithmetic: primality, factorization, p-adic
//! valuations, divisor counts and the Kronecker symbol.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Primes below this bound are removed by trial division before the rho splitter runs.
const TRIAL_BOUND: u64 = 1 << 12;

/// Witness set that makes Miller-Rabin deterministic below 3.3·10^24.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const DEFAULT_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

static SPLITTER_SEED: OnceLock<u64> = OnceLock::new();

/// Fixes the seed used by the randomized factor splitter for the rest of the
/// process. Returns `false` if a seed was already installed.
///
/// The seed only changes the order in which rho constants are tried, never a
/// factorization.
pub fn set_splitter_seed(seed: u64) -> bool {
    SPLITTER_SEED.set(seed).is_ok()
}

fn splitter_seed() -> u64 {
    SPLITTER_SEED.get().copied().unwrap_or(DEFAULT_SEED)
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_BOUND as usize;
        let mut composite = vec![false; limit];
        let mut primes = Vec::new();
        for i in 2..limit {
            if !composite[i] {
                primes.push(i as u64);
                for j in (i * i..limit).step_by(i) {
                    composite[j] = true;
                }
            }
        }
        primes
    })
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic primality test for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. `n` must be an odd composite.
fn rho_split(n: u64, rng: &mut SmallRng) -> u64 {
    const BATCH: u64 = 128;
    loop {
        let c = rng.random_range(1..n);
        let step = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;
        let mut y = rng.random_range(0..n);
        let (mut x, mut ys) = (y, y);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r <<= 1;
        }
        if g == n {
            loop {
                ys = step(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn split_into(n: u64, rng: &mut SmallRng, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_split(n, rng);
    split_into(d, rng, out);
    split_into(n / d, rng, out);
}

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive);
        }
        let mut rest = n;
        let mut factors = Vec::new();
        for &p in small_primes() {
            if p * p > rest {
                break;
            }
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
        }
        if rest > 1 {
            let mut large = Vec::new();
            let mut rng = SmallRng::seed_from_u64(splitter_seed() ^ n);
            split_into(rest, &mut rng, &mut large);
            large.sort_unstable();
            for p in large {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
        Ok(Self { value: n, factors })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factorization (0 when `p` does not divide).
    pub fn ord(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn divisor_count(&self) -> u64 {
        self.divisor_count_excluding(&PrimeSet::empty())
    }

    /// `∏ (1 + e)` over prime powers `p^e ∥ n` with `p ∉ excluded`.
    pub fn divisor_count_excluding(&self, excluded: &PrimeSet) -> u64 {
        self.factors
            .iter()
            .filter(|(p, _)| !excluded.contains(*p))
            .map(|&(_, e)| 1 + e as u64)
            .product()
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// A finite set of primes ignored by [`Factorization::divisor_count_excluding`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrimeSet(BTreeSet<u64>);

impl PrimeSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(Self(set))
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    Factorization::of(n)
}

/// Factorizes a value computed in 128-bit arithmetic, signalling overflow
/// past the supported width.
pub fn factorize_wide(n: u128) -> Result<Factorization> {
    let n = u64::try_from(n).map_err(|_| Error::Overflow)?;
    Factorization::of(n)
}

pub fn ord_p(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut n = n;
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    Ok(e)
}

pub fn divisor_count_excluding(n: u64, excluded: &PrimeSet) -> Result<u64> {
    Ok(factorize(n)?.divisor_count_excluding(excluded))
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
fn jacobi(a: u64, n: u64) -> i32 {
    debug_assert!(n % 2 == 1);
    let (mut a, mut n) = (a % n, n);
    let mut sign = 1;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = -sign;
        }
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        (a, n) = (n % a, a);
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Kronecker symbol `(a/k)`, defined for every pair of integers.
pub fn kronecker(a: i64, k: i64) -> i32 {
    if k == 0 {
        return i32::from(a == 1 || a == -1);
    }
    let mut sign = if k < 0 && a < 0 { -1 } else { 1 };
    let mut odd = k.unsigned_abs();
    let twos = odd.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
        odd >>= twos;
    }
    let residue = (a as i128).rem_euclid(odd as i128) as u64;
    sign * jacobi(residue, odd)
}

pub fn is_square(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

pub fn is_square_wide(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}
