//! Exact arithmetic in the cyclotomic field Q(ω) = Q[x]/Φ_m(x).
//!
//! An element is stored as a common denominator and an integer numerator
//! vector in the power basis ω⁰, …, ω^{φ(m)−1}. Small values live in machine
//! words; anything that overflows is promoted to big integers, so results are
//! always exact.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid group datum m = {m}: {reason}")]
    InvalidGroupDatum { m: u32, reason: &'static str },
    #[error("cannot parse coefficient {0:?}")]
    Parse(String),
    #[error("coefficient vector has length {got}, expected {expected}")]
    Length { got: usize, expected: usize },
}

/// The dihedral group parameters: D_m has order 2m, m = 4a, n = m/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupDatum {
    m: u32,
}

impl GroupDatum {
    /// Accepts only m = 4a ≥ 12.
    pub fn new(m: u32) -> Result<Self, ScalarError> {
        if !m.is_multiple_of(4) {
            return Err(ScalarError::InvalidGroupDatum { m, reason: "m must be divisible by 4" });
        }
        if m < 12 {
            return Err(ScalarError::InvalidGroupDatum { m, reason: "m must be at least 12" });
        }
        Ok(Self { m })
    }

    /// Accepts any even m ≥ 4, for experiments outside the classified range.
    pub fn new_unchecked(m: u32) -> Result<Self, ScalarError> {
        if m < 4 || !m.is_multiple_of(2) {
            return Err(ScalarError::InvalidGroupDatum { m, reason: "m must be even and at least 4" });
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.m / 2
    }

    pub fn a(&self) -> u32 {
        self.m / 4
    }

    /// ω^e as a field element.
    pub fn root_power(&self, e: i64) -> CycScalar {
        CycScalar::root_power(self.m, e)
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar::zero(self.m)
    }

    pub fn one(&self) -> CycScalar {
        CycScalar::one(self.m)
    }

    pub fn int(&self, v: i64) -> CycScalar {
        CycScalar::from_int(self.m, v)
    }

    /// Reduces an exponent into 0..m.
    pub fn modm(&self, e: i64) -> usize {
        e.rem_euclid(self.m as i64) as usize
    }
}

/// Per-m reduction data, built once and shared for the life of the process.
#[derive(Debug)]
pub struct Cyclotomic {
    m: u32,
    degree: usize,
    /// `powers[k]` is x^k reduced modulo Φ_m, for k < max(m, 2·degree).
    powers: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / den[dd];
        q[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    q
}

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

impl Cyclotomic {
    fn build(m: u32) -> Self {
        let phi = cyclotomic_polynomial(m);
        let degree = phi.len() - 1;
        let count = (m as usize).max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic relation
            let top = cur[degree - 1];
            for k in (1..degree).rev() {
                cur[k] = cur[k - 1] - top * phi[k];
            }
            cur[0] = -top * phi[0];
        }
        Self { m, degree, powers }
    }

    pub fn get(m: u32) -> &'static Cyclotomic {
        static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static Cyclotomic>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = reg.lock().expect("cyclotomic registry poisoned");
        guard.entry(m).or_insert_with(|| Box::leak(Box::new(Cyclotomic::build(m))))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// φ(m), the dimension of Q(ω) over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

type SmallNum = SmallVec<[i64; 8]>;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { den: i64, num: SmallNum },
    Big { den: BigInt, num: Vec<BigInt> },
}

/// An element of Q(ω) in canonical form.
#[derive(Clone)]
pub struct CycScalar {
    field: &'static Cyclotomic,
    repr: Repr,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.repr == other.repr
    }
}

impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.m.hash(state);
        self.repr.hash(state);
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// Canonicalizes an i128 numerator/denominator pair, demoting to i64 if possible.
fn normalize_wide(mut num: Vec<i128>, mut den: i128) -> Repr {
    if den < 0 {
        den = -den;
        for c in num.iter_mut() {
            *c = -*c;
        }
    }
    let mut g = den;
    for c in &num {
        if g == 1 {
            break;
        }
        g = gcd_i128(g, *c);
    }
    if num.iter().all(|c| *c == 0) {
        g = den;
    }
    if g > 1 {
        den /= g;
        for c in num.iter_mut() {
            *c /= g;
        }
    }
    let fits = i64::try_from(den).is_ok() && num.iter().all(|c| i64::try_from(*c).is_ok());
    if fits {
        Repr::Small { den: den as i64, num: num.into_iter().map(|c| c as i64).collect() }
    } else {
        Repr::Big { den: BigInt::from(den), num: num.into_iter().map(BigInt::from).collect() }
    }
}

fn normalize_big(mut num: Vec<BigInt>, mut den: BigInt) -> Repr {
    if den.is_negative() {
        den = -den;
        for c in num.iter_mut() {
            *c = -c.clone();
        }
    }
    if num.iter().all(|c| c.is_zero()) {
        den = BigInt::one();
    } else {
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            den /= &g;
            for c in num.iter_mut() {
                *c /= &g;
            }
        }
    }
    let small_den = den.to_i64();
    let small_num: Option<SmallNum> = num.iter().map(|c| c.to_i64()).collect();
    match (small_den, small_num) {
        (Some(d), Some(n)) => Repr::Small { den: d, num: n },
        _ => Repr::Big { den, num },
    }
}

impl Repr {
    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Repr::Small { den, num } => (num.iter().map(|c| BigInt::from(*c)).collect(), BigInt::from(*den)),
            Repr::Big { den, num } => (num.clone(), den.clone()),
        }
    }
}

impl CycScalar {
    pub fn zero(m: u32) -> Self {
        let field = Cyclotomic::get(m);
        Self { field, repr: Repr::Small { den: 1, num: SmallVec::from_elem(0, field.degree) } }
    }

    pub fn one(m: u32) -> Self {
        Self::from_int(m, 1)
    }

    pub fn from_int(m: u32, v: i64) -> Self {
        let mut s = Self::zero(m);
        if let Repr::Small { num, .. } = &mut s.repr {
            num[0] = v;
        }
        s
    }

    pub fn from_ratio(m: u32, p: i64, q: i64) -> Result<Self, ScalarError> {
        if q == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let field = Cyclotomic::get(m);
        let mut num = vec![0i128; field.degree];
        num[0] = p as i128;
        Ok(Self { field, repr: normalize_wide(num, q as i128) })
    }

    pub fn from_rational(m: u32, r: &BigRational) -> Self {
        let field = Cyclotomic::get(m);
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = r.numer().clone();
        Self { field, repr: normalize_big(num, r.denom().clone()) }
    }

    /// Builds an element from rational coefficients in the power basis.
    pub fn from_coeffs(m: u32, coeffs: &[BigRational]) -> Result<Self, ScalarError> {
        let field = Cyclotomic::get(m);
        if coeffs.len() != field.degree {
            return Err(ScalarError::Length { got: coeffs.len(), expected: field.degree });
        }
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Self { field, repr: normalize_big(num, den) })
    }

    /// ω^e, with e reduced mod m.
    pub fn root_power(m: u32, e: i64) -> Self {
        let field = Cyclotomic::get(m);
        let k = e.rem_euclid(m as i64) as usize;
        let num: SmallNum = field.powers[k].iter().copied().collect();
        Self { field, repr: Repr::Small { den: 1, num } }
    }

    pub fn m(&self) -> u32 {
        self.field.m
    }

    pub fn degree(&self) -> usize {
        self.field.degree
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num.iter().all(|c| *c == 0),
            Repr::Big { num, .. } => num.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small { den, num } => *den == 1 && num[0] == 1 && num[1..].iter().all(|c| *c == 0),
            Repr::Big { .. } => false,
        }
    }

    /// A cheap measure of coefficient size, used to pick elimination pivots.
    pub fn height(&self) -> u64 {
        match &self.repr {
            Repr::Small { den, num } => num.iter().fold(den.unsigned_abs(), |acc, c| acc.saturating_add(c.unsigned_abs())),
            Repr::Big { den, num } => num.iter().fold(den.bits(), |acc, c| acc + c.bits()).saturating_mul(1 << 20),
        }
    }

    /// The coefficient of ω^k as an exact rational.
    pub fn coeff(&self, k: usize) -> BigRational {
        let (num, den) = self.repr.to_big();
        BigRational::new(num[k].clone(), den)
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.degree()).map(|k| self.coeff(k)).collect()
    }

    /// Returns the value if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        let (num, den) = self.repr.to_big();
        if num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(num[0].clone(), den))
        } else {
            None
        }
    }

    fn is_rational_small(&self) -> Option<(i64, i64)> {
        match &self.repr {
            Repr::Small { den, num } if num[1..].iter().all(|c| *c == 0) => Some((num[0], *den)),
            _ => None,
        }
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field.m, other.field.m, "mixing scalars over different cyclotomic fields");
    }

    fn add_impl(&self, other: &Self, sign: i128) -> Self {
        self.check_field(other);
        let field = self.field;
        if let (Repr::Small { den: d1, num: n1 }, Repr::Small { den: d2, num: n2 }) = (&self.repr, &other.repr) {
            let (d1, d2) = (*d1 as i128, *d2 as i128);
            let g = gcd_i128(d1, d2);
            let (l1, l2) = (d2 / g, d1 / g);
            let num = n1
                .iter()
                .zip(n2.iter())
                .map(|(a, b)| *a as i128 * l1 + sign * (*b as i128) * l2)
                .collect();
            return Self { field, repr: normalize_wide(num, d1 * l1) };
        }
        let (n1, d1) = self.repr.to_big();
        let (n2, d2) = other.repr.to_big();
        let den = d1.lcm(&d2);
        let (l1, l2) = (&den / &d1, &den / &d2);
        let num = n1
            .iter()
            .zip(n2.iter())
            .map(|(a, b)| if sign > 0 { a * &l1 + b * &l2 } else { a * &l1 - b * &l2 })
            .collect();
        Self { field, repr: normalize_big(num, den) }
    }

    fn mul_small(&self, n1: &[i64], d1: i64, n2: &[i64], d2: i64) -> Option<Repr> {
        let deg = self.field.degree;
        let mut prod = vec![0i128; 2 * deg - 1];
        for (i, a) in n1.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in n2.iter().enumerate() {
                if *b != 0 {
                    prod[i + j] = prod[i + j].checked_add(*a as i128 * *b as i128)?;
                }
            }
        }
        let mut out = vec![0i128; deg];
        out.copy_from_slice(&prod[..deg]);
        for (j, c) in prod.iter().enumerate().skip(deg) {
            if *c == 0 {
                continue;
            }
            for (k, r) in self.field.powers[j].iter().enumerate() {
                if *r != 0 {
                    out[k] = out[k].checked_add(c.checked_mul(*r as i128)?)?;
                }
            }
        }
        Some(normalize_wide(out, d1 as i128 * d2 as i128))
    }

    fn mul_big(&self, other: &Self) -> Repr {
        let deg = self.field.degree;
        let (n1, d1) = self.repr.to_big();
        let (n2, d2) = other.repr.to_big();
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in n1.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in n2.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigInt> = prod[..deg].to_vec();
        for (j, c) in prod.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (k, r) in self.field.powers[j].iter().enumerate() {
                if *r != 0 {
                    out[k] += c * BigInt::from(*r);
                }
            }
        }
        normalize_big(out, d1 * d2)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_field(other);
        let field = self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(field.m);
        }
        if let (Repr::Small { den: d1, num: n1 }, Repr::Small { den: d2, num: n2 }) = (&self.repr, &other.repr) {
            let scaled = match (self.is_rational_small(), other.is_rational_small()) {
                (Some((p, q)), _) => Some((p, q, n2, *d2)),
                (_, Some((p, q))) => Some((p, q, n1, *d1)),
                _ => None,
            };
            if let Some((p, q, n, d)) = scaled {
                let num = n.iter().map(|c| *c as i128 * p as i128).collect();
                return Self { field, repr: normalize_wide(num, q as i128 * d as i128) };
            }
            if let Some(repr) = self.mul_small(n1, *d1, n2, *d2) {
                return Self { field, repr };
            }
        }
        Self { field, repr: self.mul_big(other) }
    }

    /// Matrix of multiplication by `self` on the power basis, columns = images of ω^j.
    fn mult_matrix(&self) -> Vec<Vec<BigRational>> {
        let deg = self.degree();
        let mut cols = Vec::with_capacity(deg);
        for j in 0..deg {
            let basis = Self::root_power(self.m(), j as i64);
            cols.push((self * &basis).coeffs());
        }
        (0..deg).map(|i| (0..deg).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.m(), &r.recip()));
        }
        let deg = self.degree();
        let mut a = self.mult_matrix();
        let mut rhs: Vec<BigRational> = (0..deg).map(|i| if i == 0 { BigRational::one() } else { BigRational::zero() }).collect();
        for col in 0..deg {
            let piv = (col..deg).find(|r| !a[*r][col].is_zero()).ok_or(ScalarError::DivisionByZero)?;
            a.swap(col, piv);
            rhs.swap(col, piv);
            let inv = a[col][col].recip();
            for j in col..deg {
                a[col][j] = &a[col][j] * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..deg {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..deg {
                        let t = &a[col][j] * &f;
                        a[r][j] -= t;
                    }
                    let t = &rhs[col] * &f;
                    rhs[r] -= t;
                }
            }
        }
        Self::from_coeffs(self.m(), &rhs)
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.m());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation, the automorphism ω ↦ ω^{m−1}.
    pub fn conj(&self) -> Self {
        let m = self.m();
        let mut acc = Self::zero(m);
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if !c.is_zero() {
                acc += &(&Self::from_rational(m, &c) * &Self::root_power(m, -(k as i64)));
            }
        }
        acc
    }

    /// Reduced "p/q" strings, one per power-basis coefficient.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs()
            .into_iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn from_strings(m: u32, items: &[String]) -> Result<Self, ScalarError> {
        let coeffs = items.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(m, &coeffs)
    }
}

/// Parses "p/q" or a bare integer "p".
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err())?;
    let q: BigInt = q.parse().map_err(|_| err())?;
    if q.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(p, q))
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match k {
                0 => format!("{c}"),
                1 if c.is_one() => "w".to_string(),
                1 => format!("{c}*w"),
                _ if c.is_one() => format!("w^{k}"),
                _ => format!("{c}*w^{k}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &'a CycScalar) -> CycScalar {
                let f: fn(&CycScalar, &CycScalar) -> CycScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &'a CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, 1));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, -1));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = self.add_impl(rhs, 1);
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = self.add_impl(rhs, -1);
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        let repr = match &self.repr {
            Repr::Small { den, num } => match num.iter().map(|c| c.checked_neg()).collect::<Option<SmallNum>>() {
                Some(num) => Repr::Small { den: *den, num },
                None => {
                    let (n, d) = self.repr.to_big();
                    normalize_big(n.into_iter().map(|c| -c).collect(), d)
                }
            },
            Repr::Big { den, num } => normalize_big(num.iter().map(|c| -c.clone()).collect(), den.clone()),
        };
        CycScalar { field: self.field, repr }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g12() -> GroupDatum {
        GroupDatum::new(12).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(16), vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
    }

    #[test]
    fn root_power_examples() {
        let g = g12();
        assert!(g.root_power(0).is_one());
        assert_eq!(g.root_power(6), g.int(-1));
        // ω⁴ = ω² − 1 from x⁴ − x² + 1
        let expected = &g.root_power(2) - &g.one();
        assert_eq!(g.root_power(4), expected);
    }

    #[test]
    fn field_operation_examples() {
        let g = g12();
        assert!((&g.one() + &g.int(-1)).is_zero());
        for e in 0..12 {
            assert_eq!(g.root_power(e).inverse().unwrap(), g.root_power(12 - e));
        }
        assert!((&g.root_power(3) * &g.root_power(9)).is_one());
        assert_eq!(g.zero().inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn minus_one_detection_matches_modular_predicate() {
        for m in [12u32, 16] {
            let g = GroupDatum::new(m).unwrap();
            let minus = g.int(-1);
            for i in 0..m as i64 {
                for k in 0..m as i64 {
                    let lhs = g.root_power(i * k) == minus;
                    assert_eq!(lhs, (i * k).rem_euclid(m as i64) == (m / 2) as i64);
                }
            }
        }
    }

    #[test]
    fn root_powers_have_order_dividing_m() {
        for m in [12u32, 16] {
            for e in 0..m as i64 {
                let w = CycScalar::root_power(m, e);
                assert!(w.pow(m).is_one());
                assert!((&w * &CycScalar::root_power(m, m as i64 - e)).is_one());
            }
        }
    }

    #[test]
    fn conjugation_inverts_roots() {
        for e in 0..16 {
            assert_eq!(CycScalar::root_power(16, e).conj(), CycScalar::root_power(16, -e));
        }
    }

    #[test]
    fn overflow_promotes_to_big_integers() {
        let big = CycScalar::from_ratio(12, i64::MAX, 3).unwrap();
        let sq = &big * &big;
        let back = sq.div(&big).unwrap();
        assert_eq!(back, big);
        let sum = &big + &big;
        assert_eq!(&sum - &big, big);
    }

    #[test]
    fn string_round_trip() {
        let g = g12();
        let x = &(&g.root_power(1) * &CycScalar::from_ratio(12, -3, 4).unwrap()) + &g.int(2);
        let s = x.to_strings();
        assert_eq!(s, vec!["2/1", "-3/4", "0/1", "0/1"]);
        assert_eq!(CycScalar::from_strings(12, &s).unwrap(), x);
    }

    #[test]
    fn invalid_group_data_rejected() {
        assert!(GroupDatum::new(10).is_err());
        assert!(GroupDatum::new(8).is_err());
        assert!(GroupDatum::new(14).is_err());
        assert!(GroupDatum::new_unchecked(10).is_ok());
    }

    fn arb_scalar(m: u32) -> impl Strategy<Value = CycScalar> {
        let deg = Cyclotomic::get(m).degree();
        (proptest::collection::vec((-20i64..20, 1i64..7), deg)).prop_map(move |cs| {
            let mut acc = CycScalar::zero(m);
            for (k, (p, q)) in cs.into_iter().enumerate() {
                let c = CycScalar::from_ratio(m, p, q).unwrap();
                acc += &(&c * &CycScalar::root_power(m, k as i64));
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn field_axioms(a in arb_scalar(12), b in arb_scalar(12), c in arb_scalar(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inverse().unwrap()).is_one());
            }
        }

        #[test]
        fn field_axioms_m16(a in arb_scalar(16), b in arb_scalar(16)) {
            prop_assert_eq!(&a * &b, &b * &a);
            if !b.is_zero() {
                prop_assert_eq!(a.div(&b).unwrap() * b.clone(), a.clone());
            }
        }
    }
}
