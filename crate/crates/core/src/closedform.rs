//! Closed forms for `r_{m,t}(n)` on the 24 supported families.
//!
//! Fourteen families reduce to a divisor count `d_A(z)` of a quadratic
//! polynomial `z = A·n² + B`, and each has a finite list of square
//! multipliers `s` such that `r = 0` exactly when `z ∈ s·ℙ` for some listed
//! `s`. The remaining ten families have discriminants with class group `Z4`
//! and are evaluated through the class functionals `F(I)`, `F(A)`, `F(A²)`.
//!
//! Every family also supports [`rprime_from_forms`], which recovers the
//! companion count `r'` from a representation count of `[t, 0, 2(m-2)]`.

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, factorize_wide, is_prime, is_square_wide, PrimeSet};
use crate::error::{Error, Result};
use crate::polygonal::Family;
use crate::qforms::{f_values, represent_count, ClassData, QuadForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Theorem3,
    Theorem4,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Theorem3 => "theorem3",
            Method::Theorem4 => "theorem4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    /// `r = ⌊(d_A(z) - 1)/2⌋`, or `d(z)/2 - 1` for `(3, 2)`.
    DivisorCount {
        unsolvable_multipliers: &'static [u64],
    },
    /// `r` from `F(I, z) ± 2F(A, z) + F(A², z)` with the listed classes.
    ClassFunctionals {
        generator: QuadForm,
        square: QuadForm,
    },
}

/// One supported `(m, t)` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub m: u64,
    pub t: u64,
    /// `z = z_lead·n² + z_const`.
    pub z_lead: u64,
    pub z_const: u64,
    pub d: i64,
    /// Primes ignored by the divisor count.
    pub excluded: &'static [u64],
    pub kind: CaseKind,
}

const fn divisor_case(
    m: u64,
    t: u64,
    z: (u64, u64),
    d: i64,
    excluded: &'static [u64],
    unsolvable_multipliers: &'static [u64],
) -> CaseDescriptor {
    CaseDescriptor {
        m,
        t,
        z_lead: z.0,
        z_const: z.1,
        d,
        excluded,
        kind: CaseKind::DivisorCount { unsolvable_multipliers },
    }
}

const fn functional_case(
    m: u64,
    t: u64,
    z: (u64, u64),
    d: i64,
    generator: [i64; 3],
    square: [i64; 3],
    excluded: &'static [u64],
) -> CaseDescriptor {
    CaseDescriptor {
        m,
        t,
        z_lead: z.0,
        z_const: z.1,
        d,
        excluded,
        kind: CaseKind::ClassFunctionals {
            generator: QuadForm::new(generator[0], generator[1], generator[2]),
            square: QuadForm::new(square[0], square[1], square[2]),
        },
    }
}

pub static CASES: [CaseDescriptor; 24] = [
    divisor_case(3, 1, (2, 1), -8, &[], &[1]),
    divisor_case(5, 1, (6, 1), -24, &[], &[1]),
    divisor_case(7, 1, (10, 9), -40, &[3], &[1, 9]),
    divisor_case(13, 1, (22, 81), -88, &[3], &[1, 9, 81]),
    divisor_case(31, 1, (58, 729), -232, &[3], &[1, 9, 81, 729]),
    divisor_case(3, 2, (1, 1), -4, &[], &[1]),
    divisor_case(8, 2, (3, 8), -24, &[2], &[1, 4, 8]),
    divisor_case(12, 2, (5, 32), -40, &[2], &[1, 4, 16, 32]),
    divisor_case(24, 2, (11, 200), -88, &[2, 5], &[1, 4, 8, 25, 100, 200]),
    divisor_case(60, 2, (29, 1568), -232, &[2, 7], &[1, 4, 16, 32, 49, 196, 784, 1568]),
    divisor_case(3, 3, (2, 3), -24, &[3], &[1, 3]),
    divisor_case(3, 5, (2, 5), -40, &[5], &[1, 5]),
    divisor_case(3, 11, (2, 11), -88, &[11], &[1, 11]),
    divisor_case(3, 29, (2, 29), -232, &[29], &[1, 29]),
    functional_case(9, 1, (14, 25), -56, [3, 2, 5], [2, 0, 7], &[]),
    functional_case(19, 1, (34, 225), -136, [5, 2, 7], [2, 0, 17], &[3]),
    functional_case(25, 1, (46, 441), -184, [5, 4, 10], [2, 0, 23], &[3, 7]),
    functional_case(43, 1, (82, 1521), -328, [7, 6, 13], [2, 0, 41], &[3]),
    functional_case(73, 1, (142, 4761), -568, [11, 2, 13], [2, 0, 71], &[3, 23]),
    functional_case(16, 2, (7, 72), -56, [3, 2, 5], [2, 0, 7], &[2]),
    functional_case(36, 2, (17, 512), -136, [5, 2, 7], [2, 0, 17], &[2]),
    functional_case(48, 2, (23, 968), -184, [5, 4, 10], [2, 0, 23], &[2]),
    functional_case(84, 2, (41, 3200), -328, [7, 6, 13], [2, 0, 41], &[2, 5]),
    functional_case(144, 2, (71, 9800), -568, [11, 2, 13], [2, 0, 71], &[2, 5, 7]),
];

impl CaseDescriptor {
    pub fn family(&self) -> Family {
        Family::new(self.m, self.t).expect("case table holds valid families")
    }

    pub fn z(&self, n: u64) -> Result<u64> {
        let z = self.z_lead as u128 * n as u128 * n as u128 + self.z_const as u128;
        u64::try_from(z).map_err(|_| Error::Overflow)
    }

    pub fn excluded_set(&self) -> PrimeSet {
        PrimeSet::new(self.excluded.iter().copied()).expect("case table lists primes")
    }

    pub fn method(&self) -> Method {
        match self.kind {
            CaseKind::DivisorCount { .. } => Method::Theorem3,
            CaseKind::ClassFunctionals { .. } => Method::Theorem4,
        }
    }

    /// The form whose representations of `z` are counted by `r'`:
    /// `[t, 0, 2(m-2)]` divided by its content.
    pub fn counting_form(&self) -> QuadForm {
        normalized_form(&self.family()).0
    }

    /// Class data with the generator and square classes from the table.
    pub fn class_data(&self) -> Result<ClassData> {
        match self.kind {
            CaseKind::ClassFunctionals { generator, square } => {
                ClassData::with_roles(self.d, generator, Some(square))
            }
            CaseKind::DivisorCount { .. } => ClassData::new(self.d),
        }
    }
}

pub fn descriptor(family: &Family) -> Option<&'static CaseDescriptor> {
    CASES.iter().find(|c| c.m == family.m() && c.t == family.t())
}

pub fn divisor_families() -> impl Iterator<Item = &'static CaseDescriptor> {
    CASES.iter().filter(|c| c.method() == Method::Theorem3)
}

pub fn functional_families() -> impl Iterator<Item = &'static CaseDescriptor> {
    CASES.iter().filter(|c| c.method() == Method::Theorem4)
}

fn lookup(family: &Family, method: Method) -> Result<&'static CaseDescriptor> {
    descriptor(family)
        .filter(|c| c.method() == method)
        .ok_or(Error::UnsupportedFamily {
            m: family.m(),
            t: family.t(),
        })
}

/// `r_{m,t}(n)` from the divisor-count formula.
pub fn r_divisor_formula(family: &Family, n: u64) -> Result<u64> {
    let case = lookup(family, Method::Theorem3)?;
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let count = factorize(case.z(n)?)?.divisor_count_excluding(&case.excluded_set());
    if (case.m, case.t) == (3, 2) {
        // n² + 1 is never a square for n ≥ 1, so its divisor count is even.
        Ok(count / 2 - 1)
    } else {
        Ok((count - 1) / 2)
    }
}

/// Whether `z` lies in one of the sets `s·ℙ` attached to the family.
pub fn unsolvable_by_prime_set(family: &Family, n: u64) -> Result<bool> {
    let case = lookup(family, Method::Theorem3)?;
    let CaseKind::DivisorCount { unsolvable_multipliers } = case.kind else {
        unreachable!("divisor families carry multipliers");
    };
    let z = case.z(n)?;
    Ok(unsolvable_multipliers
        .iter()
        .any(|&s| z % s == 0 && is_prime(z / s)))
}

fn normalized_form(family: &Family) -> (QuadForm, u64) {
    let t = family.t() as i64;
    let lead = 2 * (family.m() as i64 - 2);
    let raw = QuadForm::new(t, 0, lead);
    let g = raw.content();
    (QuadForm::new(t / g, 0, lead / g), g as u64)
}

/// `r'_{m,t}(n)` from `R([t, 0, 2(m-2)], z)`: `R/4`, or `(R + 2)/4` when
/// `(0, √(z/t))` is a solution.
///
/// A solution on the other axis (`y = 0`) leaves a remainder and is
/// reported as [`Error::NonIntegral`].
pub fn rprime_from_forms(family: &Family, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let z = family.z(n);
    let (form, g) = normalized_form(family);
    let reduced = u64::try_from(z / g as u128).map_err(|_| Error::Overflow)?;
    let r = represent_count(&form, reduced)?;
    let t = family.t() as u128;
    let on_axis = z % t == 0 && is_square_wide(z / t).is_some();
    let total = r + if on_axis { 2 } else { 0 };
    if total % 4 != 0 {
        return Err(Error::NonIntegral {
            m: family.m(),
            t: family.t(),
            n,
        });
    }
    Ok(total / 4)
}

/// `r_{m,t}(n)` for the cyclic-four families.
///
/// For `t = 1`, `r' = R(I, z)/4` and the class functionals enter as
/// `F(I) + 2F(A) + F(A²)`. For `t = 2` the halved equation is a
/// representation of `z` by `A² = [2, 0, (m-2)/2]`, so the sign of the
/// middle term flips: `F(I) - 2F(A) + F(A²)`. The square correction tests
/// `z` for `t = 1` and `2z` for `t = 2`.
pub fn r_class_functionals(family: &Family, n: u64) -> Result<u64> {
    let case = lookup(family, Method::Theorem4)?;
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let z = case.z(n)?;
    let fv = f_values(z, &case.class_data()?)?;
    let f_a2 = fv.f_a2.ok_or(Error::UnsupportedClassNumber { h: 4 })?;
    let (middle, axis_value) = if case.t == 1 { (2, z as u128) } else { (-2, 2 * z as u128) };
    let sum = fv.f_i + middle * fv.f_a + f_a2;
    let offset = if is_square_wide(axis_value).is_some() { 4 } else { 8 };
    let numerator = sum - offset;
    if numerator < 0 || numerator % 8 != 0 {
        return Err(Error::NonIntegral {
            m: case.m,
            t: case.t,
            n,
        });
    }
    Ok((numerator / 8) as u64)
}

/// `F(I, z)` as the divisor count `d_A(z)` listed for the family.
pub fn table_f_identity(family: &Family, n: u64) -> Result<u64> {
    let case = lookup(family, Method::Theorem4)?;
    Ok(factorize_wide(case.z(n)? as u128)?.divisor_count_excluding(&case.excluded_set()))
}

/// Closed-form `r_{m,t}(n)` and the route used.
pub fn closed_r(family: &Family, n: u64) -> Result<(u64, Method)> {
    let case = descriptor(family).ok_or(Error::UnsupportedFamily {
        m: family.m(),
        t: family.t(),
    })?;
    match case.method() {
        Method::Theorem3 => Ok((r_divisor_formula(family, n)?, Method::Theorem3)),
        _ => Ok((r_class_functionals(family, n)?, Method::Theorem4)),
    }
}
