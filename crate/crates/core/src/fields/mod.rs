//! Exact coefficient domains: Q, cyclotomic fields Q(ζ_N) and finite fields
//! F_{p^e}, behind a single runtime field handle.
//!
//! A [`Field`] is a cheap reference-counted handle; every [`Fe`] carries the
//! handle of the field it lives in, so polynomial code never needs a separate
//! context argument for arithmetic.

mod cyclotomic;
pub(crate) mod finite;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::cyclotomic_polynomial;
pub use finite::{is_irreducible_mod_p, is_prime, prime_factors};
pub use roots::{nth_root, primitive_root_of_unity};

use crate::error::{Error, Result};
use cyclotomic::CycloCtx;
use finite::FiniteCtx;

pub type Rational = BigRational;

/// Which coefficient domain a computation runs over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldConfig {
    Rational,
    Cyclotomic { order: u32 },
    /// `modulus` is the monic defining polynomial over F_p, lowest degree first.
    Finite { p: u64, e: u32, modulus: Vec<u64> },
}

impl FieldConfig {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldConfig::Finite { p, .. } => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::Rational => write!(f, "rational"),
            FieldConfig::Cyclotomic { order } => write!(f, "cyclo:{order}"),
            FieldConfig::Finite { p, e, .. } if *e == 1 => write!(f, "finite:{p}"),
            FieldConfig::Finite { p, e, .. } => write!(f, "finite:{p}:{e}"),
        }
    }
}

/// F_p^e with the lexicographically smallest monic irreducible modulus.
pub fn build_extension(p: u64, e: u32) -> Result<FieldConfig> {
    let modulus = finite::smallest_irreducible(p, e)?;
    Ok(FieldConfig::Finite { p, e, modulus })
}

enum Kind {
    Rational,
    Cyclotomic(CycloCtx),
    Finite(FiniteCtx),
}

struct Inner {
    config: FieldConfig,
    kind: Kind,
}

/// Handle to a coefficient field.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.config == other.0.config
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.0.config)
    }
}

impl Field {
    pub fn rational() -> Field {
        Field(Arc::new(Inner {
            config: FieldConfig::Rational,
            kind: Kind::Rational,
        }))
    }

    pub fn cyclotomic(order: u32) -> Result<Field> {
        if order == 0 {
            return Err(Error::InvalidConfig("cyclotomic order must be positive".into()));
        }
        Ok(Field(Arc::new(Inner {
            config: FieldConfig::Cyclotomic { order },
            kind: Kind::Cyclotomic(CycloCtx::new(order)),
        })))
    }

    pub fn finite(p: u64, e: u32) -> Result<Field> {
        Field::new(build_extension(p, e)?)
    }

    pub fn new(config: FieldConfig) -> Result<Field> {
        match &config {
            FieldConfig::Rational => Ok(Field::rational()),
            FieldConfig::Cyclotomic { order } => Field::cyclotomic(*order),
            FieldConfig::Finite { p, e, modulus } => {
                if !is_prime(*p) {
                    return Err(Error::InvalidConfig(format!("{p} is not prime")));
                }
                if *e == 0 || modulus.len() != *e as usize + 1 || modulus[*e as usize] != 1 {
                    return Err(Error::InvalidConfig("modulus must be monic of degree e".into()));
                }
                if modulus.iter().any(|&c| c >= *p) || !is_irreducible_mod_p(modulus, *p) {
                    return Err(Error::InvalidConfig("modulus is not irreducible over F_p".into()));
                }
                Ok(Field(Arc::new(Inner {
                    kind: Kind::Finite(FiniteCtx::new(*p, modulus.clone())),
                    config,
                })))
            }
        }
    }

    pub fn config(&self) -> &FieldConfig {
        &self.0.config
    }

    pub fn characteristic(&self) -> u64 {
        self.0.config.characteristic()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, Kind::Finite(_))
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u128> {
        match &self.0.kind {
            Kind::Finite(c) => Some(c.order),
            _ => None,
        }
    }

    /// Degree over the prime field (φ(N) for cyclotomic fields).
    pub fn degree(&self) -> usize {
        match &self.0.kind {
            Kind::Rational => 1,
            Kind::Cyclotomic(c) => c.degree,
            Kind::Finite(c) => c.e,
        }
    }

    fn cyclo(&self) -> Option<&CycloCtx> {
        match &self.0.kind {
            Kind::Cyclotomic(c) => Some(c),
            _ => None,
        }
    }

    fn ff(&self) -> Option<&FiniteCtx> {
        match &self.0.kind {
            Kind::Finite(c) => Some(c),
            _ => None,
        }
    }

    fn wrap(&self, v: Value) -> Fe {
        Fe { field: self.clone(), v }
    }

    pub fn zero(&self) -> Fe {
        self.wrap(match &self.0.kind {
            Kind::Rational => Value::Q(BigRational::zero()),
            Kind::Cyclotomic(c) => Value::Cyc(c.zero()),
            Kind::Finite(c) => Value::Ff(c.zero()),
        })
    }

    pub fn one(&self) -> Fe {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Fe {
        self.from_rational(&BigRational::from_integer(n.clone()))
            .expect("integers embed in every field")
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Fe> {
        self.from_rational(&BigRational::new(num.into(), den.into()))
    }

    /// Image of a rational number; fails in characteristic p when p divides
    /// the denominator.
    pub fn from_rational(&self, r: &BigRational) -> Result<Fe> {
        Ok(self.wrap(match &self.0.kind {
            Kind::Rational => Value::Q(r.clone()),
            Kind::Cyclotomic(c) => {
                let mut v = c.zero();
                v[0] = r.clone();
                Value::Cyc(v)
            }
            Kind::Finite(c) => {
                let p = BigInt::from(c.p);
                let reduce = |x: &BigInt| -> u64 {
                    let m = ((x % &p) + &p) % &p;
                    u64::try_from(m).expect("residue fits in u64")
                };
                let num = reduce(r.numer());
                let den = reduce(r.denom());
                if den == 0 {
                    return Err(Error::CharDividesDenominator {
                        p: c.p,
                        d: u64::try_from(r.denom().clone()).unwrap_or(0),
                    });
                }
                let mut v = c.zero();
                v[0] = finite::mulmod(num, finite::invmod(den, c.p), c.p);
                Value::Ff(v)
            }
        }))
    }

    /// The field generator: ζ_N for cyclotomic fields, t for F_p[t]/(m);
    /// 1 for Q.
    pub fn generator(&self) -> Fe {
        match &self.0.kind {
            Kind::Rational => self.one(),
            Kind::Cyclotomic(c) => self.wrap(Value::Cyc(c.power(1).to_vec())),
            Kind::Finite(c) => {
                let mut v = vec![0u64; c.e + 1];
                v[1] = 1;
                finite::poly_reduce(&mut v, &c.modulus, c.p);
                v.resize(c.e, 0);
                self.wrap(Value::Ff(v))
            }
        }
    }

    /// ζ_N^k in a cyclotomic field.
    pub fn root_of_unity_power(&self, k: i64) -> Option<Fe> {
        self.cyclo().map(|c| self.wrap(Value::Cyc(c.power(k).to_vec())))
    }

    pub fn from_cyclo_coords(&self, coords: Vec<BigRational>) -> Option<Fe> {
        let c = self.cyclo()?;
        (coords.len() == c.degree).then(|| self.wrap(Value::Cyc(coords)))
    }

    /// Element of a finite field from coordinates over F_p (reduced mod p).
    pub fn from_ff_coords(&self, coords: &[u64]) -> Option<Fe> {
        let c = self.ff()?;
        (coords.len() == c.e).then(|| self.wrap(Value::Ff(coords.iter().map(|x| x % c.p).collect())))
    }

    /// All elements of a finite field in coordinate-lexicographic order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Fe> + '_> {
        let c = self.ff()?;
        Some((0..c.order).map(move |i| self.wrap(Value::Ff(c.element(i)))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Value {
    Q(BigRational),
    Cyc(Vec<BigRational>),
    Ff(Vec<u64>),
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct Fe {
    field: Field,
    v: Value,
}

impl PartialEq for Fe {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}
impl Eq for Fe {}

impl Hash for Fe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state)
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coordinate-lexicographic order; used for canonical choices and sorting.
impl Ord for Fe {
    fn cmp(&self, other: &Self) -> Ordering {
        self.v.cmp(&other.v)
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Fe {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.v {
            Value::Q(r) => r.is_zero(),
            Value::Cyc(v) => v.iter().all(|c| c.is_zero()),
            Value::Ff(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.v {
            Value::Q(r) => r.is_one(),
            Value::Cyc(v) => v[0].is_one() && CycloCtx::is_rational(v),
            Value::Ff(v) => v[0] == 1 && v[1..].iter().all(|&c| c == 0),
        }
    }

    /// The value as a rational number when it lies in the prime field of a
    /// characteristic-zero field.
    pub fn as_rational(&self) -> Option<BigRational> {
        match &self.v {
            Value::Q(r) => Some(r.clone()),
            Value::Cyc(v) if CycloCtx::is_rational(v) => Some(v[0].clone()),
            _ => None,
        }
    }

    /// The value as a residue when it lies in the prime field F_p.
    pub fn as_prime_residue(&self) -> Option<u64> {
        match &self.v {
            Value::Ff(v) if v[1..].iter().all(|&c| c == 0) => Some(v[0]),
            _ => None,
        }
    }

    pub fn cyclo_coords(&self) -> Option<&[BigRational]> {
        match &self.v {
            Value::Cyc(v) => Some(v),
            _ => None,
        }
    }

    pub fn ff_coords(&self) -> Option<&[u64]> {
        match &self.v {
            Value::Ff(v) => Some(v),
            _ => None,
        }
    }

    /// Map a prime-field (or rational) element into another field.
    pub fn embed_into(&self, target: &Field) -> Result<Fe> {
        if let Some(r) = self.as_rational() {
            return target.from_rational(&r);
        }
        if let Some(x) = self.as_prime_residue() {
            if target.characteristic() == self.field.characteristic() {
                return Ok(target.from_i64(x as i64));
            }
        }
        if &self.field == target {
            return Ok(self.clone());
        }
        Err(Error::BadFieldMismatch(format!(
            "cannot embed {self} from {} into {}",
            self.field.config(),
            target.config()
        )))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Fe {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_inv(&self) -> Option<Fe> {
        if self.is_zero() {
            return None;
        }
        let v = match (&self.v, &self.field.0.kind) {
            (Value::Q(r), _) => Value::Q(r.recip()),
            (Value::Cyc(a), Kind::Cyclotomic(c)) => Value::Cyc(c.inv(a)),
            (Value::Ff(a), Kind::Finite(c)) => Value::Ff(c.inv(a)),
            _ => unreachable!(),
        };
        Some(self.field.wrap(v))
    }

    pub fn pow(&self, k: u128) -> Fe {
        if let (Value::Ff(a), Kind::Finite(c)) = (&self.v, &self.field.0.kind) {
            return self.field.wrap(Value::Ff(c.pow(a, k)));
        }
        let mut r = self.field.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                r = &r * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        r
    }

    /// Integer power; negative exponents invert (panics on zero).
    pub fn powi(&self, k: i64) -> Fe {
        if k >= 0 {
            self.pow(k as u128)
        } else {
            self.inv().pow(k.unsigned_abs() as u128)
        }
    }

    /// a ↦ a^q for q a power of the characteristic p.
    pub fn frobenius(&self, q: u128) -> Result<Fe> {
        let c = self.field.ff().ok_or(Error::NotFiniteField)?;
        let p = c.p as u128;
        let mut k = q;
        while k > 1 && k % p == 0 {
            k /= p;
        }
        if k != 1 || q < p {
            return Err(Error::BadFieldMismatch(format!("{q} is not a power of {}", c.p)));
        }
        Ok(self.pow(q))
    }

    /// Multiplicative order of a nonzero element of a finite or cyclotomic
    /// field (None when infinite or zero).
    pub fn multiplicative_order(&self) -> Option<u128> {
        if self.is_zero() {
            return None;
        }
        match &self.field.0.kind {
            Kind::Finite(c) => {
                let mut n = c.order - 1;
                for r in prime_factors(n) {
                    while n % r == 0 && self.pow(n / r).is_one() {
                        n /= r;
                    }
                }
                Some(n)
            }
            Kind::Cyclotomic(c) => {
                let (scale, k) = c.as_scaled_root_of_unity(self.cyclo_coords().unwrap())?;
                if scale.is_one() {
                    let n = c.order as u128;
                    Some(n / num_integer::gcd(n, k as u128))
                } else if (-scale).is_one() {
                    let n = 2 * c.order as u128;
                    let k2 = (2 * k as u128 + c.order as u128) % n;
                    Some(n / num_integer::gcd(n, k2))
                } else {
                    None
                }
            }
            Kind::Rational => {
                let r = self.as_rational().unwrap();
                if r.is_one() {
                    Some(1)
                } else if (-r).is_one() {
                    Some(2)
                } else {
                    None
                }
            }
        }
    }

    /// Whether this element's text form is a single signed number (no
    /// parentheses needed when used as a coefficient).
    pub fn is_simple(&self) -> bool {
        match &self.v {
            Value::Q(_) => true,
            Value::Cyc(v) => CycloCtx::is_rational(v),
            Value::Ff(v) => v[1..].iter().all(|&c| c == 0),
        }
    }

    /// Whether the text form starts with a minus sign (characteristic zero,
    /// rational values only).
    pub fn is_negative_number(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_negative())
    }

    pub(crate) fn cyclo_scaled_root(&self) -> Option<(BigRational, u32)> {
        let c = self.field.cyclo()?;
        c.as_scaled_root_of_unity(self.cyclo_coords()?)
    }
}

fn binop(a: &Fe, b: &Fe, op: char) -> Fe {
    debug_assert!(a.field == b.field, "mixed fields {:?} / {:?}", a.field, b.field);
    let v = match (&a.v, &b.v, &a.field.0.kind) {
        (Value::Q(x), Value::Q(y), _) => Value::Q(match op {
            '+' => x + y,
            '-' => x - y,
            _ => x * y,
        }),
        (Value::Cyc(x), Value::Cyc(y), Kind::Cyclotomic(c)) => Value::Cyc(match op {
            '+' => x.iter().zip(y).map(|(s, t)| s + t).collect(),
            '-' => x.iter().zip(y).map(|(s, t)| s - t).collect(),
            _ => c.mul(x, y),
        }),
        (Value::Ff(x), Value::Ff(y), Kind::Finite(c)) => Value::Ff(match op {
            '+' => c.add(x, y),
            '-' => c.sub(x, y),
            _ => c.mul(x, y),
        }),
        _ => panic!("arithmetic across different fields"),
    };
    a.field.wrap(v)
}

macro_rules! impl_binop {
    ($tr:ident, $m:ident, $c:expr) => {
        impl $tr<&Fe> for &Fe {
            type Output = Fe;
            fn $m(self, rhs: &Fe) -> Fe {
                binop(self, rhs, $c)
            }
        }
        impl $tr<Fe> for Fe {
            type Output = Fe;
            fn $m(self, rhs: Fe) -> Fe {
                binop(&self, &rhs, $c)
            }
        }
        impl $tr<&Fe> for Fe {
            type Output = Fe;
            fn $m(self, rhs: &Fe) -> Fe {
                binop(&self, rhs, $c)
            }
        }
        impl $tr<Fe> for &Fe {
            type Output = Fe;
            fn $m(self, rhs: Fe) -> Fe {
                binop(self, &rhs, $c)
            }
        }
    };
}

impl_binop!(Add, add, '+');
impl_binop!(Sub, sub, '-');
impl_binop!(Mul, mul, '*');

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        let v = match (&self.v, &self.field.0.kind) {
            (Value::Q(x), _) => Value::Q(-x),
            (Value::Cyc(x), _) => Value::Cyc(x.iter().map(|c| -c).collect()),
            (Value::Ff(x), Kind::Finite(c)) => Value::Ff(c.neg(x)),
            _ => unreachable!(),
        };
        self.field.wrap(v)
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sum of `coeff*sym^k` terms, highest power first.
fn fmt_combination<I: Iterator<Item = (usize, String, bool)>>(terms: I, sym: &str) -> String {
    let mut out = String::new();
    for (k, mag, neg) in terms {
        let mono = match k {
            0 => String::new(),
            1 => sym.to_string(),
            _ => format!("{sym}^{k}"),
        };
        let body = if k == 0 {
            mag
        } else if mag == "1" {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Rationals as `a/b`; cyclotomic elements as combinations of `w^k`;
/// extension-field elements as polynomials in the generator `w`.
impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.v {
            Value::Q(r) => write!(f, "{}", fmt_rational(r)),
            Value::Cyc(v) => {
                let terms = v
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, fmt_rational(&c.abs()), c.is_negative()));
                write!(f, "{}", fmt_combination(terms, "w"))
            }
            Value::Ff(v) => {
                let terms = v
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| **c != 0)
                    .map(|(k, c)| (k, c.to_string(), false));
                write!(f, "{}", fmt_combination(terms, "w"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let q = Field::rational();
        let a = q.from_ratio(6, -4).unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!((&a + &q.from_ratio(3, 2).unwrap()).to_string(), "0");
    }

    #[test]
    fn cyclotomic_generator_order() {
        let k = Field::cyclotomic(24).unwrap();
        let z = k.generator();
        assert!(z.pow(24).is_one());
        assert!(!z.pow(12).is_one());
        assert_eq!(z.pow(12), -k.one());
        assert_eq!(z.multiplicative_order(), Some(24));
        assert_eq!(z.pow(6).multiplicative_order(), Some(4));
        assert_eq!((-k.one()).multiplicative_order(), Some(2));
    }

    #[test]
    fn finite_frobenius_f4() {
        let f4 = Field::finite(2, 2).unwrap();
        let g = f4.generator();
        assert_eq!(g.frobenius(2).unwrap(), &g + &f4.one());
        assert_eq!(f4.zero().frobenius(4).unwrap(), f4.zero());
        assert!(g.frobenius(3).is_err());
        let f7 = Field::finite(7, 1).unwrap();
        for a in f7.elements().unwrap() {
            assert_eq!(a.frobenius(7).unwrap(), a);
        }
    }

    #[test]
    fn rational_into_finite() {
        let f7 = Field::finite(7, 1).unwrap();
        assert_eq!(f7.from_ratio(1, 2).unwrap(), f7.from_i64(4));
        assert!(f7.from_ratio(1, 7).is_err());
    }

    #[test]
    fn display_forms() {
        let k = Field::cyclotomic(24).unwrap();
        let z = k.generator();
        let a = &z.pow(3) - &(&k.from_ratio(1, 2).unwrap() * &z) + k.from_i64(2);
        assert_eq!(a.to_string(), "w^3 - 1/2*w + 2");
        let f4 = Field::finite(2, 2).unwrap();
        assert_eq!((f4.generator() + f4.one()).to_string(), "w + 1");
    }
}
