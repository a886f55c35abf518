//! Positive-definite integral binary quadratic forms `ax² + bxy + cy²`.
//!
//! Covers reduction and class enumeration, exact representation counts over
//! the ellipse, Dirichlet's divisor-sum formula for `N(n, d)`, and the class
//! functionals `F(K, n)` used to split `N(n, d)` across classes when the class
//! group has order 2, 3 or is cyclic of order 4.
//!
//! Class roles (`I`, `A`, `A²`, `A³`) are assigned without composition: the
//! principal form is `I`, the unique non-principal ambiguous form of a cyclic
//! group of order 4 is `A²`, and `A`/`A³` are the two members of the
//! remaining mirror pair `[a, ±b, c]`. Mirror forms represent the same
//! integers, so the `A`/`A³` choice never changes a count.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, kronecker};
use crate::error::{Error, Result};

/// Discriminants with class number one.
pub const CLASS_NUMBER_ONE: [i64; 13] = [-3, -4, -7, -8, -11, -12, -16, -19, -27, -28, -43, -67, -163];

pub const CLASS_NUMBER_TWO: [i64; 29] = [
    -15, -20, -24, -32, -35, -36, -40, -48, -51, -52, -60, -64, -72, -75, -88, -91, -99, -100, -112, -115,
    -123, -147, -148, -187, -232, -235, -267, -403, -427,
];

pub const CLASS_NUMBER_THREE: [i64; 25] = [
    -23, -31, -44, -59, -76, -83, -92, -107, -108, -124, -139, -172, -211, -243, -268, -283, -307, -331,
    -379, -499, -547, -643, -652, -883, -907,
];

/// Discriminants whose form class group is cyclic of order 4.
pub const CYCLIC_FOUR: [i64; 50] = [
    -39, -55, -56, -63, -68, -80, -128, -136, -144, -155, -156, -171, -184, -196, -203, -208, -219, -220,
    -252, -256, -259, -275, -291, -292, -323, -328, -355, -363, -387, -388, -400, -475, -507, -568, -592,
    -603, -667, -723, -763, -772, -955, -1003, -1027, -1227, -1243, -1387, -1411, -1467, -1507, -1555,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    /// The form representing 1: `[1, 0, -d/4]` or `[1, 1, (1-d)/4]`.
    pub fn principal(d: i64) -> Result<Self> {
        validate_discriminant(d)?;
        let b = d.rem_euclid(2);
        Ok(Self::new(1, b, (b - d) / 4))
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn content(&self) -> i64 {
        gcd(gcd(self.a.unsigned_abs(), self.b.unsigned_abs()), self.c.unsigned_abs()) as i64
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.discriminant() < 0
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// `[a, -b, c]`, the image under `y → -y`.
    pub fn mirror(&self) -> Self {
        Self::new(self.a, -self.b, self.c)
    }

    /// The form `f(px + qy, rx + sy)`.
    pub fn substitute(&self, [[p, q], [r, s]]: [[i64; 2]; 2]) -> Self {
        let Self { a, b, c } = *self;
        Self::new(
            a * p * p + b * p * r + c * r * r,
            2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            a * q * q + b * q * s + c * s * s,
        )
    }

    pub fn is_reduced(&self) -> bool {
        let Self { a, b, c } = *self;
        b.abs() <= a && a <= c && !(b < 0 && (b == -a || a == c))
    }

    /// A reduced form equal to its own inverse class.
    pub fn is_ambiguous(&self) -> bool {
        self.b == 0 || self.b == self.a || self.a == self.c
    }
}

impl std::fmt::Display for QuadForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    H1,
    H2,
    H3,
    Z4,
    Other,
}

impl Structure {
    pub fn of(d: i64) -> Self {
        if CLASS_NUMBER_ONE.contains(&d) {
            Structure::H1
        } else if CLASS_NUMBER_TWO.contains(&d) {
            Structure::H2
        } else if CLASS_NUMBER_THREE.contains(&d) {
            Structure::H3
        } else if CYCLIC_FOUR.contains(&d) {
            Structure::Z4
        } else {
            Structure::Other
        }
    }
}

/// Role of a class in a cyclic class group `⟨A⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    I,
    A,
    A2,
    A3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRoles {
    pub identity: QuadForm,
    pub generator: QuadForm,
    pub square: Option<QuadForm>,
    pub cube: Option<QuadForm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassData {
    d: i64,
    reduced_forms: Vec<QuadForm>,
    structure: Structure,
    roles: Option<ClassRoles>,
}

pub fn validate_discriminant(d: i64) -> Result<()> {
    if d >= 0 || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(d));
    }
    Ok(())
}

/// Every primitive reduced form of discriminant `d`, ordered by `a`, then
/// `|b|`, positive `b` first.
fn enumerate_reduced(d: i64) -> Vec<QuadForm> {
    let mut forms = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in 1 - a..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let f = QuadForm::new(a, b, num / (4 * a));
            if f.is_reduced() && f.content() == 1 {
                forms.push(f);
            }
        }
        a += 1;
    }
    forms.sort_by_key(|f| (f.a, f.b.abs(), f.b < 0));
    forms
}

fn default_roles(forms: &[QuadForm], structure: Structure) -> Option<ClassRoles> {
    let identity = *forms.first()?;
    let rest = &forms[1..];
    match (structure, rest.len()) {
        (Structure::H2, 1) => Some(ClassRoles {
            identity,
            generator: rest[0],
            square: None,
            cube: None,
        }),
        (Structure::H3, 2) => {
            let generator = *rest.iter().find(|f| f.b > 0)?;
            Some(ClassRoles {
                identity,
                generator,
                square: Some(generator.mirror()),
                cube: None,
            })
        }
        (Structure::Z4, 3) => {
            let mut ambiguous = rest.iter().filter(|f| f.is_ambiguous());
            let square = *ambiguous.next()?;
            if ambiguous.next().is_some() {
                return None;
            }
            let generator = *rest.iter().find(|f| !f.is_ambiguous() && f.b > 0)?;
            Some(ClassRoles {
                identity,
                generator,
                square: Some(square),
                cube: Some(generator.mirror()),
            })
        }
        _ => None,
    }
}

/// Reduced forms, class number, structure tag and default roles.
pub fn reduced_forms(d: i64) -> Result<ClassData> {
    validate_discriminant(d)?;
    let reduced_forms = enumerate_reduced(d);
    let structure = Structure::of(d);
    let roles = default_roles(&reduced_forms, structure);
    Ok(ClassData {
        d,
        reduced_forms,
        structure,
        roles,
    })
}

impl ClassData {
    pub fn new(d: i64) -> Result<Self> {
        reduced_forms(d)
    }

    /// Class data with explicitly chosen generator and square classes. Both
    /// must be reduced forms of `d`.
    pub fn with_roles(d: i64, generator: QuadForm, square: Option<QuadForm>) -> Result<Self> {
        let mut data = reduced_forms(d)?;
        let known = |f: &QuadForm| data.reduced_forms.contains(f);
        if !known(&generator) || square.as_ref().is_some_and(|s| !known(s)) {
            return Err(Error::Hypothesis(format!("role forms are not reduced forms of discriminant {d}")));
        }
        let cube = (data.h() == 4).then(|| generator.mirror());
        data.roles = Some(ClassRoles {
            identity: data.reduced_forms[0],
            generator,
            square,
            cube,
        });
        Ok(data)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn h(&self) -> usize {
        self.reduced_forms.len()
    }

    pub fn forms(&self) -> &[QuadForm] {
        &self.reduced_forms
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn roles(&self) -> Option<&ClassRoles> {
        self.roles.as_ref()
    }

    pub fn ambiguous_count(&self) -> usize {
        self.reduced_forms.iter().filter(|f| f.is_ambiguous()).count()
    }

    /// `N(n, d)` as the sum of representation counts over all classes.
    pub fn total_count(&self, n: u64) -> u64 {
        self.reduced_forms
            .iter()
            .map(|f| represent_count(f, n).expect("reduced forms are positive definite"))
            .sum()
    }

    pub fn role_of(&self, form: &QuadForm) -> Option<Role> {
        let roles = self.roles.as_ref()?;
        if *form == roles.identity {
            Some(Role::I)
        } else if *form == roles.generator {
            Some(Role::A)
        } else if Some(*form) == roles.square {
            Some(Role::A2)
        } else if Some(*form) == roles.cube {
            Some(Role::A3)
        } else {
            None
        }
    }
}

pub fn conductor(d: i64) -> Result<u64> {
    validate_discriminant(d)?;
    let mut f = d.unsigned_abs().isqrt() as i64;
    while f > 1 {
        if d % (f * f) == 0 && matches!((d / (f * f)).rem_euclid(4), 0 | 1) {
            return Ok(f as u64);
        }
        f -= 1;
    }
    Ok(1)
}

pub fn is_fundamental(d: i64) -> bool {
    conductor(d) == Ok(1)
}

/// Exact number of integer pairs `(x, y)` with `f(x, y) = n`.
///
/// Non-primitive forms are reduced by their content `g`: `R(g·f, n)` is
/// `R(f, n/g)` when `g | n`, else 0.
pub fn represent_count(form: &QuadForm, n: u64) -> Result<u64> {
    if !form.is_positive_definite() {
        let QuadForm { a, b, c } = *form;
        return Err(Error::NotPositiveDefinite { a, b, c });
    }
    let g = form.content() as u64;
    if n % g != 0 {
        return Ok(0);
    }
    let n = (n / g) as i128;
    let (a, b, c) = (
        (form.a / g as i64) as i128,
        (form.b / g as i64) as i128,
        (form.c / g as i64) as i128,
    );
    let neg_d = 4 * a * c - b * b;
    // 4an = (2ax + by)² + |d|y² bounds y.
    let y_max = ((4 * a * n / neg_d) as u128).isqrt() as i128;
    let mut count = 0;
    for y in -y_max..=y_max {
        let disc = 4 * a * n - neg_d * y * y;
        if disc < 0 {
            continue;
        }
        let s = (disc as u128).isqrt() as i128;
        if s * s != disc {
            continue;
        }
        let roots: &[i128] = if s == 0 { &[-b * y] } else { &[-b * y + s, -b * y - s] };
        count += roots.iter().filter(|&&num| num % (2 * a) == 0).count() as u64;
    }
    Ok(count)
}

/// Number of automorphs of a form of discriminant `d`.
pub fn omega(d: i64) -> u64 {
    match d {
        -3 => 6,
        -4 => 4,
        d if d < 0 => 2,
        _ => 1,
    }
}

/// Dirichlet's formula `N(n, d) = ω(d) Σ_{k | n} (d/f² / k)`, valid for
/// `gcd(n, d) = 1`.
pub fn dirichlet_n(n: u64, d: i64) -> Result<u64> {
    validate_discriminant(d)?;
    if n == 0 {
        return Err(Error::NonPositive);
    }
    if gcd(n, d.unsigned_abs()) != 1 {
        return Err(Error::Hypothesis(format!("gcd({n}, {d}) != 1")));
    }
    let f = conductor(d)? as i64;
    let core = d / (f * f);
    let sum: i64 = factorize(n)?
        .divisors()
        .into_iter()
        .map(|k| kronecker(core, k as i64) as i64)
        .sum();
    Ok(omega(d) * sum as u64)
}

pub fn n_by_enumeration(n: u64, d: i64) -> Result<u64> {
    Ok(reduced_forms(d)?.total_count(n))
}

/// `R(I, n)` for class number one, through Dirichlet's formula.
pub fn principal_r(n: u64, d: i64) -> Result<u64> {
    let data = reduced_forms(d)?;
    if data.h() != 1 {
        return Err(Error::UnsupportedClassNumber { h: data.h() });
    }
    dirichlet_n(n, d)
}

/// Role of a class representing `p`, with `A` and `A³` reported as `A`.
pub fn prime_class(p: u64, data: &ClassData) -> Option<Role> {
    data.forms()
        .iter()
        .find(|f| represent_count(f, p).is_ok_and(|r| r > 0))
        .and_then(|f| data.role_of(f))
        .map(|role| if role == Role::A3 { Role::A } else { role })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FValues {
    pub f_i: i64,
    pub f_a: i64,
    /// Present when the class group is cyclic of order 4.
    pub f_a2: Option<i64>,
}

fn roles_for_functionals(data: &ClassData) -> Result<&ClassRoles> {
    if !matches!(data.h(), 2..=4) {
        return Err(Error::UnsupportedClassNumber { h: data.h() });
    }
    data.roles()
        .ok_or_else(|| Error::Hypothesis(format!("no class roles for discriminant {}", data.d())))
}

fn count(form: &QuadForm, n: u64) -> i64 {
    represent_count(form, n).expect("role forms are positive definite") as i64
}

/// `F(I, n) = N(n, d)/ω(d)`, through Dirichlet's formula when `gcd(n, d) = 1`.
pub fn f_identity(n: u64, data: &ClassData) -> Result<i64> {
    let d = data.d();
    let total = if gcd(n, d.unsigned_abs()) == 1 {
        dirichlet_n(n, d)?
    } else {
        data.total_count(n)
    };
    Ok((total / omega(d)) as i64)
}

/// Parity sign `(-1)^{Σ ord_p n}` over primes `p | n` represented by `A`.
pub fn genus_sign(n: u64, data: &ClassData) -> Result<i64> {
    let roles = roles_for_functionals(data)?;
    let odd = factorize(n)?
        .factors()
        .iter()
        .filter(|&&(p, _)| count(&roles.generator, p) > 0)
        .map(|&(_, e)| e)
        .sum::<u32>()
        % 2
        == 1;
    Ok(if odd { -1 } else { 1 })
}

/// `F(A², n)` from its class-count expansion, `(R(I) - 2R(A) + R(A²))/ω`.
pub fn f_square_direct(n: u64, data: &ClassData) -> Result<i64> {
    let roles = roles_for_functionals(data)?;
    let square = roles.square.filter(|_| data.h() == 4).ok_or(Error::UnsupportedClassNumber { h: data.h() })?;
    let value = count(&roles.identity, n) - 2 * count(&roles.generator, n) + count(&square, n);
    Ok(value / omega(data.d()) as i64)
}

/// `F(I, n)`, `F(A, n)` and, for cyclic groups of order 4, `F(A², n)`.
///
/// `F(A, n)` is `(R(I,n) - R(A,n))/ω` for `h ∈ {2, 3}` and
/// `(R(I,n) - R(A²,n))/ω` for `h = 4`; `F(A², n)` is `±F(I, n)` with the sign
/// from [`genus_sign`].
pub fn f_values(n: u64, data: &ClassData) -> Result<FValues> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let roles = roles_for_functionals(data)?;
    let w = omega(data.d()) as i64;
    let f_i = f_identity(n, data)?;
    let r_i = count(&roles.identity, n);
    match (data.h(), roles.square) {
        (4, Some(square)) => Ok(FValues {
            f_i,
            f_a: (r_i - count(&square, n)) / w,
            f_a2: Some(genus_sign(n, data)? * f_i),
        }),
        (2 | 3, _) => Ok(FValues {
            f_i,
            f_a: (r_i - count(&roles.generator, n)) / w,
            f_a2: None,
        }),
        (h, _) => Err(Error::UnsupportedClassNumber { h }),
    }
}

fn split_product(n: u64, core: i64) -> Result<u64> {
    Ok(factorize(n)?
        .factors()
        .iter()
        .filter(|&&(p, _)| kronecker(core, p as i64) == 1)
        .map(|&(_, e)| 1 + e as u64)
        .product())
}

/// `χ(n, d) = F(A, n) / ∏_{(d/f² / p) = 1} (1 + ord_p n)`.
pub fn chi(n: u64, d: i64) -> Result<Ratio<i64>> {
    let data = reduced_forms(d)?;
    if data.h() != 2 {
        return Err(Error::UnsupportedClassNumber { h: data.h() });
    }
    if d == -60 {
        return Err(Error::Hypothesis("d = -60 is excluded".into()));
    }
    let f = conductor(d)?;
    if gcd(n, f) != 1 {
        return Err(Error::Hypothesis(format!("gcd({n}, f={f}) != 1")));
    }
    let core = d / (f * f) as i64;
    let fv = f_values(n, &data)?;
    Ok(Ratio::new(fv.f_a, split_product(n, core)? as i64))
}

/// Closed forms `R(I, n) = (1 + χ)∏` and `R(A, n) = (1 - χ)∏` for a
/// fundamental `d ≠ -60` of class number 2, provided every prime with
/// `(d/p) = -1` divides `n` to an even power.
pub fn class_two_closed(n: u64, d: i64) -> Result<(u64, u64)> {
    if !is_fundamental(d) {
        return Err(Error::Hypothesis(format!("{d} is not fundamental")));
    }
    let fac = factorize(n)?;
    if let Some(&(p, _)) = fac
        .factors()
        .iter()
        .find(|&&(p, e)| e % 2 == 1 && kronecker(d, p as i64) == -1)
    {
        return Err(Error::Hypothesis(format!("({d}/{p}) = -1 with odd ord_{p}({n})")));
    }
    let chi = chi(n, d)?;
    let prod = Ratio::from_integer(split_product(n, d)? as i64);
    let one = Ratio::from_integer(1);
    let r_i = (one + chi) * prod;
    let r_a = (one - chi) * prod;
    if !r_i.is_integer() || !r_a.is_integer() || *r_i.numer() < 0 || *r_a.numer() < 0 {
        return Err(Error::Hypothesis(format!("non-integral class counts at n={n}, d={d}")));
    }
    Ok((r_i.to_integer() as u64, r_a.to_integer() as u64))
}

/// `R(I, n)` and `R(A², n)` from the class functionals when `H(d) ≅ Z4`.
pub fn cyclic_four_closed(n: u64, data: &ClassData) -> Result<(u64, u64)> {
    let d = data.d();
    if !is_fundamental(d) || data.structure() != Structure::Z4 {
        return Err(Error::Hypothesis(format!("{d} is not a fundamental discriminant with H(d) = Z4")));
    }
    let fv = f_values(n, data)?;
    let f_a2 = fv.f_a2.ok_or(Error::UnsupportedClassNumber { h: data.h() })?;
    let w = omega(d) as i64;
    let r_i = w * (fv.f_i + 2 * fv.f_a + f_a2);
    let r_a2 = w * (fv.f_i - 2 * fv.f_a + f_a2);
    if r_i % 4 != 0 || r_a2 % 4 != 0 || r_i < 0 || r_a2 < 0 {
        return Err(Error::Hypothesis(format!("non-integral class counts at n={n}, d={d}")));
    }
    Ok(((r_i / 4) as u64, (r_a2 / 4) as u64))
}

/// Solutions `(x, y)` of `c·x² + d·y² = n` with `x, y ≥ 1`, by increasing `x`.
pub fn diagonal_solutions(c: u64, d: u64, n: u64) -> Vec<(u64, u64)> {
    let mut found = Vec::new();
    let mut x = 1u64;
    while c * x * x < n {
        let rest = n - c * x * x;
        if rest % d == 0 {
            if let Some(y) = crate::arith::is_square(rest / d).filter(|&y| y >= 1) {
                found.push((x, y));
            }
        }
        x += 1;
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64) -> QuadForm {
        QuadForm::new(a, b, c)
    }

    /// Counts points in a square box far larger than the ellipse.
    fn box_count(f: &QuadForm, n: u64) -> u64 {
        let r = (4 * n as i64).isqrt() + 2;
        let mut k = 0;
        for x in -r..=r {
            for y in -r..=r {
                if f.eval(x, y) == n as i128 {
                    k += 1;
                }
            }
        }
        k
    }

    #[test]
    fn reduced_form_examples() {
        let d8 = reduced_forms(-8).unwrap();
        assert_eq!(d8.forms(), &[q(1, 0, 2)]);
        assert_eq!(d8.structure(), Structure::H1);

        let d56 = reduced_forms(-56).unwrap();
        assert_eq!(d56.forms(), &[q(1, 0, 14), q(2, 0, 7), q(3, 2, 5), q(3, -2, 5)]);
        assert_eq!(d56.structure(), Structure::Z4);
        let roles = d56.roles().unwrap();
        assert_eq!(roles.identity, q(1, 0, 14));
        assert_eq!(roles.generator, q(3, 2, 5));
        assert_eq!(roles.square, Some(q(2, 0, 7)));
        assert_eq!(roles.cube, Some(q(3, -2, 5)));

        let d24 = reduced_forms(-24).unwrap();
        assert_eq!(d24.forms(), &[q(1, 0, 6), q(2, 0, 3)]);
        assert_eq!(d24.h(), 2);

        assert_eq!(reduced_forms(-7).unwrap().forms(), &[q(1, 1, 2)]);
        assert_eq!(reduced_forms(-3).unwrap().forms(), &[q(1, 1, 1)]);
        assert_eq!(reduced_forms(-4).unwrap().forms(), &[q(1, 0, 1)]);
        assert_eq!(reduced_forms(-23).unwrap().forms(), &[q(1, 1, 6), q(2, 1, 3), q(2, -1, 3)]);
    }

    #[test]
    fn invalid_discriminants_rejected() {
        assert_eq!(reduced_forms(-5), Err(Error::InvalidDiscriminant(-5)));
        assert_eq!(reduced_forms(0), Err(Error::InvalidDiscriminant(0)));
        assert_eq!(reduced_forms(5), Err(Error::InvalidDiscriminant(5)));
        assert_eq!(conductor(-6), Err(Error::InvalidDiscriminant(-6)));
    }

    #[test]
    fn non_primitive_forms_are_skipped() {
        // -16 = disc of [2,0,2] as well, which is not primitive.
        assert_eq!(reduced_forms(-16).unwrap().forms(), &[q(1, 0, 4)]);
    }

    #[test]
    fn role_assignment_from_table() {
        let data = ClassData::with_roles(-184, q(5, 4, 10), Some(q(2, 0, 23))).unwrap();
        assert_eq!(data.role_of(&q(5, -4, 10)), Some(Role::A3));
        assert!(ClassData::with_roles(-56, q(3, 2, 6), None).is_err());
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(conductor(-8), Ok(1));
        assert_eq!(conductor(-16), Ok(2));
        assert_eq!(conductor(-12), Ok(2));
        assert_eq!(conductor(-99), Ok(3));
        assert_eq!(conductor(-400), Ok(10));
        assert!(is_fundamental(-56));
        assert!(!is_fundamental(-63));
    }

    #[test]
    fn represent_count_examples() {
        assert_eq!(represent_count(&q(1, 0, 2), 9), Ok(6));
        assert_eq!(represent_count(&q(1, 0, 14), 39), Ok(4));
        assert_eq!(represent_count(&q(3, 2, 5), 39), Ok(0));
        assert_eq!(represent_count(&q(2, 0, 2), 10), Ok(8));
        assert_eq!(represent_count(&q(2, 0, 2), 5), Ok(0));
        assert!(represent_count(&q(1, 3, 1), 5).is_err());
    }

    #[test]
    fn represent_count_matches_box_search() {
        for f in [q(1, 0, 1), q(1, 1, 1), q(3, 2, 5), q(2, -1, 3), q(5, 4, 10), q(4, 4, 3), q(6, 0, 9)] {
            for n in 1..=150 {
                assert_eq!(represent_count(&f, n).unwrap(), box_count(&f, n), "{f} n={n}");
            }
        }
    }

    #[test]
    fn mirror_classes_represent_equally() {
        for d in [-23, -39, -56, -136, -184, -328, -568] {
            for f in reduced_forms(d).unwrap().forms() {
                for n in 1..=2000 {
                    assert_eq!(represent_count(f, n), represent_count(&f.mirror(), n));
                }
            }
        }
    }

    fn unimodular_substitutions() -> Vec<[[i64; 2]; 2]> {
        let mut subs = Vec::new();
        'outer: for p in -3..=3i64 {
            for q in -3..=3 {
                for r in -3..=3 {
                    for s in -3..=3 {
                        if p * s - q * r == 1 && (p, q, r, s) != (1, 0, 0, 1) {
                            subs.push([[p, q], [r, s]]);
                            if subs.len() == 20 {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        subs
    }

    #[test]
    fn counts_invariant_under_unimodular_substitution() {
        let subs = unimodular_substitutions();
        assert_eq!(subs.len(), 20);
        for f in [q(1, 0, 2), q(3, 2, 5), q(2, 1, 3), q(5, 2, 7)] {
            for s in &subs {
                let g = f.substitute(*s);
                assert_eq!(g.discriminant(), f.discriminant());
                for n in 1..=500 {
                    assert_eq!(represent_count(&g, n), represent_count(&f, n), "{f} -> {g} n={n}");
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(-3), 6);
        assert_eq!(omega(-4), 4);
        assert_eq!(omega(-56), 2);
    }

    #[test]
    fn dirichlet_examples() {
        assert_eq!(dirichlet_n(9, -8), Ok(6));
        assert_eq!(dirichlet_n(25, -4), Ok(12));
        assert_eq!(dirichlet_n(39, -56), Ok(8));
        assert!(matches!(dirichlet_n(2, -8), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(n_by_enumeration(39, -56), Ok(8));
        assert_eq!(n_by_enumeration(1, -8), Ok(2));
        assert_eq!(n_by_enumeration(5, -8), Ok(0));
    }

    #[test]
    fn dirichlet_matches_enumeration_on_non_fundamental_discriminants() {
        for d in [-12, -16, -27, -28, -63, -99, -144] {
            let data = reduced_forms(d).unwrap();
            for n in 1..=600u64 {
                if gcd(n, d.unsigned_abs()) == 1 {
                    assert_eq!(dirichlet_n(n, d).unwrap(), data.total_count(n), "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn principal_examples() {
        assert_eq!(principal_r(9, -8), Ok(6));
        assert!(matches!(principal_r(2, -8), Err(Error::Hypothesis(_))));
        assert_eq!(principal_r(25, -4), Ok(12));
        assert_eq!(principal_r(9, -24), Err(Error::UnsupportedClassNumber { h: 2 }));
        assert_eq!(QuadForm::principal(-8), Ok(q(1, 0, 2)));
        assert_eq!(QuadForm::principal(-7), Ok(q(1, 1, 2)));
    }

    #[test]
    fn principal_form_carries_all_representations_for_class_number_one() {
        for d in CLASS_NUMBER_ONE {
            let principal = QuadForm::principal(d).unwrap();
            for n in 1..=500u64 {
                if gcd(n, d.unsigned_abs()) == 1 {
                    assert_eq!(principal_r(n, d).unwrap(), represent_count(&principal, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn prime_class_examples() {
        let data = reduced_forms(-56).unwrap();
        assert_eq!(prime_class(3, &data), Some(Role::A));
        assert_eq!(prime_class(23, &data), Some(Role::I));
        assert_eq!(prime_class(7, &data), Some(Role::A2));
        assert_eq!(prime_class(11, &data), None);
    }

    #[test]
    fn f_value_examples() {
        let d56 = reduced_forms(-56).unwrap();
        assert_eq!(f_values(39, &d56), Ok(FValues { f_i: 4, f_a: 0, f_a2: Some(4) }));
        assert_eq!(f_values(1, &d56), Ok(FValues { f_i: 1, f_a: 1, f_a2: Some(1) }));

        let d24 = reduced_forms(-24).unwrap();
        let r_i = represent_count(&q(1, 0, 6), 25).unwrap() as i64;
        let r_a = represent_count(&q(2, 0, 3), 25).unwrap() as i64;
        let fv = f_values(25, &d24).unwrap();
        assert_eq!(fv.f_a, (r_i - r_a) / 2);
        assert_eq!(fv.f_a2, None);

        assert_eq!(f_values(5, &reduced_forms(-8).unwrap()), Err(Error::UnsupportedClassNumber { h: 1 }));
    }

    #[test]
    fn genus_sign_matches_direct_square_functional() {
        for d in [-39, -55, -56, -68, -136, -184, -328, -568] {
            let data = reduced_forms(d).unwrap();
            for n in 1..=1500 {
                let fv = f_values(n, &data).unwrap();
                assert_eq!(fv.f_a2, Some(f_square_direct(n, &data).unwrap()), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn chi_examples() {
        let v = chi(25, -24).unwrap();
        assert!(v.numer().abs() <= *v.denom());
        assert_eq!(chi(1, -24), Ok(Ratio::from_integer(1)));
        assert!(matches!(chi(7, -60), Err(Error::Hypothesis(_))));
        assert_eq!(chi(7, -56), Err(Error::UnsupportedClassNumber { h: 4 }));
    }

    #[test]
    fn chi_is_bounded() {
        for d in [-15, -20, -24, -40, -88, -232] {
            for n in 1..=800 {
                let v = chi(n, d).unwrap();
                assert!(v.numer().abs() <= *v.denom(), "d={d} n={n} chi={v}");
            }
        }
    }

    #[test]
    fn class_two_closed_examples() {
        let pair = |d, n| {
            let data = reduced_forms(d).unwrap();
            let f = data.forms();
            (represent_count(&f[0], n).unwrap(), represent_count(&f[1], n).unwrap())
        };
        assert_eq!(class_two_closed(25, -24), Ok(pair(-24, 25)));
        assert_eq!(class_two_closed(49, -40), Ok(pair(-40, 49)));
        // (-24/13) = -1 and 13 divides once.
        assert_eq!(kronecker(-24, 13), -1);
        assert!(matches!(class_two_closed(13, -24), Err(Error::Hypothesis(_))));
        assert!(matches!(class_two_closed(7, -60), Err(Error::Hypothesis(_))));
        assert!(matches!(class_two_closed(7, -36), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn cyclic_four_closed_examples() {
        let d56 = reduced_forms(-56).unwrap();
        assert_eq!(cyclic_four_closed(39, &d56), Ok((4, 4)));
        assert_eq!(cyclic_four_closed(1, &d56), Ok((2, 0)));
        let d136 = reduced_forms(-136).unwrap();
        let expected = (
            represent_count(&q(1, 0, 34), 259).unwrap(),
            represent_count(&q(2, 0, 17), 259).unwrap(),
        );
        assert_eq!(cyclic_four_closed(259, &d136), Ok(expected));
        assert!(cyclic_four_closed(5, &reduced_forms(-24).unwrap()).is_err());
        assert!(cyclic_four_closed(5, &reduced_forms(-63).unwrap()).is_err());
    }

    #[test]
    fn diagonal_representation_example() {
        assert_eq!(diagonal_solutions(1, 2, 11), vec![(3, 1)]);
        assert_eq!(diagonal_solutions(1, 1, 25), vec![(3, 4), (4, 3)]);
        assert!(diagonal_solutions(2, 3, 4).is_empty());
    }
}
