//! Brute-force oracles.
//!
//! `r_{m,t}(n)` counts unordered pairs `{a, b}`, `a ≥ b ≥ 1`, with `a + b = n`
//! and `a·b = t·P(m, c)`. `r'_{m,t}(n)` counts nonnegative `(x, y)` with
//! `2(m-2)n² + t(m-4)² = 2(m-2)x² + t·y²`. Every representation maps to such a
//! pair via `(|a-b|, |2(m-2)c - (m-4)|)`, and [`representation_from_qpair`]
//! inverts that map where possible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygonal::{is_t_polygonal, is_valid_index, polygonal, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub a: u64,
    pub b: u64,
    pub c: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QPair {
    pub x: u64,
    pub y: u64,
}

/// All representations of `n`, sorted by descending `a`.
pub fn representations(family: &Family, n: u64) -> Vec<Representation> {
    if n < 2 {
        return Vec::new();
    }
    (n.div_ceil(2)..n)
        .rev()
        .filter_map(|a| {
            let b = n - a;
            is_t_polygonal(family, a * b).map(|c| Representation { a, b, c })
        })
        .collect()
}

pub fn r_brute(family: &Family, n: u64) -> usize {
    representations(family, n).len()
}

/// All nonnegative solutions `(x, y)` of the companion equation, by
/// increasing `x`.
pub fn qsolutions(family: &Family, n: u64) -> Vec<QPair> {
    let z = family.z(n);
    let lead = 2 * (family.m() as u128 - 2);
    let t = family.t() as u128;
    let mut out = Vec::new();
    let mut x: u128 = 0;
    while lead * x * x <= z {
        let rest = z - lead * x * x;
        if rest % t == 0 {
            let w = rest / t;
            let y = w.isqrt();
            if y * y == w {
                out.push(QPair { x: x as u64, y: y as u64 });
            }
        }
        x += 1;
    }
    out
}

pub fn r_prime_brute(family: &Family, n: u64) -> usize {
    qsolutions(family, n).len()
}

/// `y` coordinate attached to an index: `|2(m-2)c - (m-4)|`.
fn y_of_index(m: u64, c: i64) -> u64 {
    let (m, c) = (m as i128, c as i128);
    (2 * (m - 2) * c - (m - 4)).unsigned_abs() as u64
}

pub fn qpair_from_representation(family: &Family, n: u64, rep: &Representation) -> Result<QPair> {
    let invalid = |reason| Error::InvalidRepresentation {
        m: family.m(),
        t: family.t(),
        n,
        reason,
    };
    if rep.b < 1 || rep.a < rep.b {
        return Err(invalid("need a >= b >= 1"));
    }
    if rep.a.checked_add(rep.b) != Some(n) {
        return Err(invalid("a + b != n"));
    }
    if !is_valid_index(family.m(), rep.c) {
        return Err(invalid("index outside the valid domain"));
    }
    let target = polygonal(family.m(), rep.c)? as u128 * family.t() as u128;
    if rep.a as u128 * rep.b as u128 != target {
        return Err(invalid("a*b != t*P(m,c)"));
    }
    Ok(QPair {
        x: rep.a - rep.b,
        y: y_of_index(family.m(), rep.c),
    })
}

/// Inverse of [`qpair_from_representation`]: `((n+x)/2, (n-x)/2, c)` with `c`
/// the valid root of `y = |2(m-2)c - (m-4)|`.
///
/// Returns `None` when `x ≥ n`, when `n` and `x` differ in parity, or when no
/// valid integral index exists.
pub fn representation_from_qpair(family: &Family, n: u64, pair: &QPair) -> Option<Representation> {
    if pair.x >= n || (n - pair.x) % 2 != 0 {
        return None;
    }
    let a = (n + pair.x) / 2;
    let b = (n - pair.x) / 2;
    let m = family.m();
    let shift = m as i128 - 4;
    let denom = 2 * (m as i128 - 2);
    let y = pair.y as i128;
    let target = a as u128 * b as u128;
    [shift + y, shift - y]
        .into_iter()
        .filter(|num| num % denom == 0)
        .filter_map(|num| i64::try_from(num / denom).ok())
        .filter(|&c| is_valid_index(m, c))
        .find(|&c| {
            polygonal(m, c).is_ok_and(|p| p as u128 * family.t() as u128 == target)
        })
        .map(|c| Representation { a, b, c })
}
