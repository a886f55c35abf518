//! Polygonal numbers `P(m, c) = c((m-2)c - (m-4))/2` and exact inverses.
//!
//! Indices follow the injectivity convention: `c ≥ 1` when `m ∈ {3, 4}`, any
//! integer `c` when `m > 4` (generalized polygonal numbers).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Polygon order `m` together with the multiplier `t` of `a·b = t·P(m, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    m: u64,
    t: u64,
}

impl Family {
    pub fn new(m: u64, t: u64) -> Result<Self> {
        if m < 3 || t < 1 || m > 1 << 20 || t > 1 << 20 {
            return Err(Error::InvalidFamily { m, t });
        }
        Ok(Self { m, t })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `z = 2(m-2)n² + t(m-4)²`, the common value of both sides of the
    /// companion equation.
    pub fn z(&self, n: u64) -> u128 {
        let (m, t) = (self.m as u128, self.t as u128);
        let shift = (m as i128 - 4).unsigned_abs();
        2 * (m - 2) * (n as u128) * (n as u128) + t * shift * shift
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.m, self.t)
    }
}

pub fn is_valid_index(m: u64, c: i64) -> bool {
    m > 4 || c >= 1
}

pub fn polygonal(m: u64, c: i64) -> Result<u64> {
    if m < 3 {
        return Err(Error::InvalidFamily { m, t: 1 });
    }
    if !is_valid_index(m, c) {
        return Err(Error::IndexDomain { m, c });
    }
    let (m, c) = (m as i128, c as i128);
    let twice = c * ((m - 2) * c - (m - 4));
    u64::try_from(twice / 2).map_err(|_| Error::Overflow)
}

/// The unique valid index `c` with `P(m, c) = v`, if any.
///
/// Solves `(m-2)c² - (m-4)c - 2v = 0`; for `m > 4` the two roots have sum
/// `(m-4)/(m-2)`, so at most one of them is an integer.
pub fn polygonal_index(m: u64, v: u64) -> Option<i64> {
    if m < 3 {
        return None;
    }
    let lead = (m - 2) as u128;
    let shift = m as i128 - 4;
    let disc = shift.unsigned_abs().pow(2) + 8 * lead * v as u128;
    let root = disc.isqrt();
    if root * root != disc {
        return None;
    }
    let denom = 2 * lead as i128;
    [shift + root as i128, shift - root as i128]
        .into_iter()
        .filter(|num| num % denom == 0)
        .map(|num| num / denom)
        .find(|&c| c >= i64::MIN as i128 && c <= i64::MAX as i128 && is_valid_index(m, c as i64))
        .map(|c| c as i64)
}

/// The index `c` with `t·P(m, c) = v`, if any.
pub fn is_t_polygonal(family: &Family, v: u64) -> Option<i64> {
    if v % family.t != 0 {
        return None;
    }
    polygonal_index(family.m, v / family.t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn family_validation() {
        assert!(Family::new(3, 1).is_ok());
        assert_eq!(Family::new(2, 1), Err(Error::InvalidFamily { m: 2, t: 1 }));
        assert_eq!(Family::new(5, 0), Err(Error::InvalidFamily { m: 5, t: 0 }));
        assert_eq!(Family::new(3, 1).unwrap().z(4), 33);
        assert_eq!(Family::new(7, 1).unwrap().z(12), 1449);
    }

    #[test]
    fn polygonal_examples() {
        assert_eq!(polygonal(3, 2), Ok(3));
        assert_eq!(polygonal(5, -1), Ok(2));
        assert_eq!(polygonal(7, -3), Ok(27));
        assert_eq!(polygonal(3, 0), Err(Error::IndexDomain { m: 3, c: 0 }));
        assert_eq!(polygonal(4, -2), Err(Error::IndexDomain { m: 4, c: -2 }));
        assert_eq!(polygonal(6, 0), Ok(0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(polygonal_index(3, 6), Some(3));
        assert_eq!(polygonal_index(7, 27), Some(-3));
        assert_eq!(polygonal_index(5, 3), None);
        assert_eq!(polygonal_index(4, 49), Some(7));
        assert_eq!(polygonal_index(4, 50), None);
    }

    #[test]
    fn t_polygonal_examples() {
        let fam = |m, t| Family::new(m, t).unwrap();
        assert_eq!(is_t_polygonal(&fam(3, 1), 3), Some(2));
        assert_eq!(is_t_polygonal(&fam(3, 2), 12), Some(3));
        assert_eq!(is_t_polygonal(&fam(3, 5), 15), Some(2));
        assert_eq!(is_t_polygonal(&fam(3, 5), 12), None);
    }

    #[test]
    fn triangular_and_square_numbers() {
        for c in 1..=1000i64 {
            assert_eq!(polygonal(3, c).unwrap() as i64, c * (c + 1) / 2);
            assert_eq!(polygonal(4, c).unwrap() as i64, c * c);
        }
    }

    #[test]
    fn injective_on_valid_domain() {
        for m in 3..=60u64 {
            let mut seen = std::collections::HashMap::new();
            for c in -500..=500i64 {
                if !is_valid_index(m, c) {
                    continue;
                }
                let v = polygonal(m, c).unwrap();
                if let Some(prev) = seen.insert(v, c) {
                    panic!("P({m},{prev}) = P({m},{c}) = {v}");
                }
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        for m in 3..=60u64 {
            for c in -1000..=1000i64 {
                if !is_valid_index(m, c) {
                    continue;
                }
                let v = polygonal(m, c).unwrap();
                assert_eq!(polygonal_index(m, v), Some(c), "m={m} c={c}");
            }
        }
    }

    proptest! {
        #[test]
        fn inverse_finds_only_polygonal_values(m in 3u64..200, v in 1u64..1_000_000) {
            match polygonal_index(m, v) {
                Some(c) => prop_assert_eq!(polygonal(m, c).unwrap(), v),
                None => {
                    // No valid index in a window large enough to cover v.
                    let bound = (2 * v).isqrt() as i64 + 2;
                    for c in -bound..=bound {
                        if is_valid_index(m, c) {
                            prop_assert_ne!(polygonal(m, c).unwrap(), v);
                        }
                    }
                }
            }
        }
    }
}
