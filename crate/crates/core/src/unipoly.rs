//! Dense univariate polynomials over any [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fields::{prime_factors, Fe, Field};
use crate::ring::{berkowitz, RingElem};

/// A univariate polynomial; `coeffs[i]` is the coefficient of `var^i` and
/// the last stored coefficient is nonzero (empty for the zero polynomial).
#[derive(Clone)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Fe>,
    var: char,
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for UniPoly {}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for UniPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
            var: 'x',
        }
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Fe) -> Self {
        let f = c.field().clone();
        Self::new(&f, vec![c])
    }

    pub fn x(field: &Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn monomial(c: Fe, k: usize) -> Self {
        let f = c.field().clone();
        let mut v = vec![f.zero(); k];
        v.push(c);
        Self::new(&f, v)
    }

    /// `var - a`.
    pub fn linear_root(a: &Fe) -> Self {
        Self::new(a.field(), vec![-a, a.field().one()])
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = var;
        self
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&Fe> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn scale(&self, c: &Fe) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect()).with_var(self.var)
    }

    pub fn eval(&self, a: &Fe) -> Fe {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * a) + c)
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Self::new(&self.field, v).with_var(self.var)
    }

    /// `f(c·x)`.
    pub fn scale_arg(&self, c: &Fe) -> Self {
        let mut pw = self.field.one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a * &pw);
            pw = &pw * c;
        }
        Self::new(&self.field, v).with_var(self.var)
    }

    /// `f(g(x))`.
    pub fn compose(&self, g: &UniPoly) -> Self {
        let mut acc = UniPoly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(c.clone());
        }
        acc.with_var(self.var)
    }

    /// Coefficients mapped into another field (prime-field/rational values only).
    pub fn embed_into(&self, target: &Field) -> Result<Self> {
        let v = self.coeffs.iter().map(|c| c.embed_into(target)).collect::<Result<_>>()?;
        Ok(Self::new(target, v).with_var(self.var))
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().unwrap().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(&self.field), self.clone());
        }
        let mut quo = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let c = &rem[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (k, dk) in d.coeffs.iter().enumerate() {
                rem[i + k] = &rem[i + k] - &(&c * dk);
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (
            UniPoly::new(&self.field, quo).with_var(self.var),
            UniPoly::new(&self.field, rem).with_var(self.var),
        )
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic().with_var(self.var)
    }

    /// `base^k mod m`.
    pub fn pow_mod(base: &UniPoly, mut k: u128, m: &UniPoly) -> UniPoly {
        let mut r = UniPoly::one(&m.field).rem(m);
        let mut b = base.rem(m);
        while k > 0 {
            if k & 1 == 1 {
                r = (&r * &b).rem(m);
            }
            k >>= 1;
            if k > 0 {
                b = (&b * &b).rem(m);
            }
        }
        r
    }

    pub fn pow(&self, k: usize) -> UniPoly {
        let mut r = UniPoly::one(&self.field);
        for _ in 0..k {
            r = &r * self;
        }
        r.with_var(self.var)
    }

    /// Res(f, g) = lc(f)^deg g · ∏ g(α) over the roots α of f, by the
    /// Euclidean remainder sequence over the field.
    pub fn resultant(&self, other: &UniPoly) -> Result<Fe> {
        let field = &self.field;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_zero() || other.is_zero() {
            let nz = if self.is_zero() { other } else { self };
            return Ok(if nz.is_constant() { field.one() } else { field.zero() });
        }
        let mut f = self.clone();
        let mut g = other.clone();
        let mut acc = field.one();
        loop {
            let m = f.degree().unwrap();
            let n = g.degree().unwrap();
            if n == 0 {
                return Ok(&acc * &g.coeffs[0].pow(m as u128));
            }
            if m == 0 {
                return Ok(&acc * &f.coeffs[0].pow(n as u128));
            }
            let r = f.rem(&g);
            if r.is_zero() {
                return Ok(field.zero());
            }
            let k = r.degree().unwrap();
            let sign = if (m * n) % 2 == 1 { -field.one() } else { field.one() };
            acc = &(&acc * &sign) * &g.lc().unwrap().pow((m - k) as u128);
            f = g;
            g = r;
        }
    }

    /// Sylvester matrix of `f` and `g` (rows: n shifts of f, then m shifts of g).
    pub fn sylvester_matrix(&self, other: &UniPoly) -> Vec<Vec<Fe>> {
        let m = self.degree().unwrap_or(0);
        let n = other.degree().unwrap_or(0);
        let size = m + n;
        let mut rows = Vec::with_capacity(size);
        for (poly, shifts, deg) in [(self, n, m), (other, m, n)] {
            for s in 0..shifts {
                let mut row = vec![self.field.zero(); size];
                for i in 0..=deg {
                    row[s + i] = poly.coeff(deg - i);
                }
                rows.push(row);
            }
        }
        rows
    }

    /// Characteristic polynomial of a square matrix, as a polynomial.
    pub fn charpoly(matrix: &[Vec<Fe>]) -> UniPoly {
        let field = matrix[0][0].field().clone();
        let mut cp = berkowitz(matrix);
        cp.reverse();
        UniPoly::new(&field, cp)
    }

    fn finite_order(&self) -> Result<u128> {
        self.field.order().ok_or(Error::NotFiniteField)
    }

    /// Rabin's test: f | x^{q^n} − x and gcd(x^{q^{n/r}} − x, f) = 1 for
    /// every prime r | n.
    pub fn is_irreducible(&self) -> Result<bool> {
        let q = self.finite_order()?;
        let n = match self.degree() {
            None | Some(0) => return Ok(false),
            Some(1) => return Ok(true),
            Some(n) => n,
        };
        let f = self.monic();
        let x = UniPoly::x(&self.field);
        let frob = |h: &UniPoly, times: usize| {
            let mut h = h.clone();
            for _ in 0..times {
                h = UniPoly::pow_mod(&h, q, &f);
            }
            h
        };
        if !(&frob(&x, n) - &x).rem(&f).is_zero() {
            return Ok(false);
        }
        for r in prime_factors(n as u128) {
            let h = frob(&x, n / r as usize);
            if !f.gcd(&(&h - &x)).is_constant() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Roots lying in the coefficient field, with multiplicities, in
    /// ascending element order.
    pub fn roots_in_field(&self) -> Result<Vec<(Fe, usize)>> {
        self.roots_in_field_seeded(0)
    }

    pub fn roots_in_field_seeded(&self, seed: u64) -> Result<Vec<(Fe, usize)>> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        let distinct = if self.field.is_finite() {
            if self.derivative().is_zero() {
                return Err(Error::InseparableInput);
            }
            self.finite_distinct_roots(seed)?
        } else if self.field.degree() == 1 {
            rational_roots(self)
        } else {
            cyclotomic_roots(self)
        };
        let mut out = Vec::with_capacity(distinct.len());
        for r in distinct {
            let lin = UniPoly::linear_root(&r);
            let mut cur = self.clone();
            let mut mult = 0;
            loop {
                let (q, rem) = cur.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                mult += 1;
                cur = q;
            }
            if mult > 0 {
                out.push((r, mult));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.dedup_by(|a, b| a.0 == b.0);
        Ok(out)
    }

    fn finite_distinct_roots(&self, seed: u64) -> Result<Vec<Fe>> {
        let q = self.finite_order()?;
        let f = self.monic();
        let x = UniPoly::x(&self.field);
        let xq = UniPoly::pow_mod(&x, q, &f);
        let h = f.gcd(&(&xq - &x));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut roots = Vec::new();
        split_linear(&h, q, &mut rng, &mut roots);
        Ok(roots)
    }

    /// Map every coefficient through `op`.
    pub fn map_coeffs(&self, op: impl Fn(&Fe) -> Fe) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(op).collect()).with_var(self.var)
    }
}

fn random_element(field: &Field, rng: &mut ChaCha8Rng) -> Fe {
    let p = field.characteristic();
    let coords: Vec<u64> = (0..field.degree()).map(|_| rng.gen_range(0..p)).collect();
    field.from_ff_coords(&coords).unwrap()
}

/// Equal-degree splitting of a product of distinct linear factors.
fn split_linear(h: &UniPoly, q: u128, rng: &mut ChaCha8Rng, out: &mut Vec<Fe>) {
    let d = match h.degree() {
        None | Some(0) => return,
        Some(d) => d,
    };
    if d == 1 {
        out.push(-&(&h.coeffs[0] * &h.coeffs[1].inv()));
        return;
    }
    let field = h.field.clone();
    let p = field.characteristic();
    loop {
        let r = UniPoly::new(&field, (0..d).map(|_| random_element(&field, rng)).collect());
        if r.is_constant() {
            continue;
        }
        let s = if p == 2 {
            // absolute trace r + r^2 + … + r^{q/2}
            let k = 128 - q.leading_zeros() - 1;
            let mut acc = r.rem(h);
            let mut cur = acc.clone();
            for _ in 1..k {
                cur = (&cur * &cur).rem(h);
                acc = &acc + &cur;
            }
            acc
        } else {
            &UniPoly::pow_mod(&r, (q - 1) / 2, h) - &UniPoly::one(&field)
        };
        let g = h.gcd(&s);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < d {
            let other = h.div_rem(&g).0;
            split_linear(&g, q, rng, out);
            split_linear(&other, q, rng, out);
            return;
        }
    }
}

fn integer_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u128()?;
    if n == 0 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if d > 50_000_000 {
            return None;
        }
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Distinct rational roots by the rational root theorem.
fn rational_roots(f: &UniPoly) -> Vec<Fe> {
    let field = &f.field;
    let rats: Vec<BigRational> = f.coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        out.push(field.zero());
    }
    let ints = &ints[low..];
    if ints.len() < 2 {
        return out;
    }
    let (Some(num_divs), Some(den_divs)) = (integer_divisors(&ints[0]), integer_divisors(ints.last().unwrap())) else {
        return out;
    };
    let eval = |r: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * r + BigRational::from_integer(c.clone()))
    };
    let mut seen = std::collections::BTreeSet::new();
    for s in &num_divs {
        for t in &den_divs {
            for sign in [1, -1] {
                let r = BigRational::new(s * sign, t.clone());
                if seen.insert(r.clone()) && eval(&r).is_zero() {
                    out.push(field.from_rational(&r).unwrap());
                }
            }
        }
    }
    out
}

/// Distinct roots in Q(ζ_N) of the shape c·ζ^k with rational c, plus any
/// root exposed as a remaining linear factor.
fn cyclotomic_roots(f: &UniPoly) -> Vec<Fe> {
    let field = &f.field;
    let order = match field.config() {
        crate::fields::FieldConfig::Cyclotomic { order } => *order as i64,
        _ => unreachable!(),
    };
    let q = Field::rational();
    let mut found: Vec<Fe> = Vec::new();
    for k in 0..order {
        // f(ζ^k s) split into coordinate polynomials over Q
        let mut coord_polys: Vec<Vec<Fe>> = vec![Vec::new(); field.degree()];
        for (j, c) in f.coeffs.iter().enumerate() {
            let scaled = c * &field.root_of_unity_power(k * j as i64).unwrap();
            for (slot, x) in coord_polys.iter_mut().zip(scaled.cyclo_coords().unwrap()) {
                slot.push(q.from_rational(x).unwrap());
            }
        }
        let g = coord_polys
            .into_iter()
            .fold(UniPoly::zero(&q), |acc, v| acc.gcd(&UniPoly::new(&q, v)));
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let zeta_k = field.root_of_unity_power(k).unwrap();
        for s in rational_roots(&g) {
            let r = &field.from_rational(&s.as_rational().unwrap()).unwrap() * &zeta_k;
            if !found.contains(&r) {
                found.push(r);
            }
        }
    }
    // peel off known roots; a leftover linear factor yields one more root
    let mut rest = f.clone();
    for r in &found {
        let lin = UniPoly::linear_root(r);
        loop {
            let (qq, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = qq;
        }
    }
    if rest.degree() == Some(1) {
        found.push(-&(&rest.coeffs[0] * &rest.coeffs[1].inv()));
    }
    found
}

impl RingElem for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero(&self.field).with_var(self.var)
    }
    fn one_like(&self) -> Self {
        UniPoly::one(&self.field).with_var(self.var)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        UniPoly::new(&self.field, v).with_var(self.var)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        UniPoly::new(&self.field, v).with_var(self.var)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.field).with_var(self.var);
        }
        let mut v = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = &v[i + j] + &(a * b);
                }
            }
        }
        UniPoly::new(&self.field, v).with_var(self.var)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.map_coeffs(|c| -c)
    }
}

/// `c_k*z^k + … + c_0`, highest degree first.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var.to_string();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), if k == 0 { String::new() } else if k == 1 { var.clone() } else { format!("{var}^{k}") }));
        write!(f, "{}", crate::fmt_terms(terms))
    }
}

/// Integer n-th root of a nonnegative big integer, if exact.
pub(crate) fn exact_integer_root(a: &BigInt, n: u32) -> Option<BigInt> {
    if a.is_negative() {
        return None;
    }
    let r = a.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *a).then_some(r)
}
