//! Truncated Puiseux series Σ c_u x^{u/n} known modulo x^T.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

use crate::bipoly::LaurentPoly;
use crate::error::{Error, Result};
use crate::fields::{nth_root, Fe, Field};

/// Exponents and truncation orders.
pub type Q64 = Ratio<i64>;

/// `None` stands for +∞ throughout.
fn min_opt(a: Option<Q64>, b: Option<Q64>) -> Option<Q64> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

fn add_opt(a: Option<Q64>, b: Option<Q64>) -> Option<Q64> {
    Some(a? + b?)
}

#[derive(Clone)]
pub struct PuiseuxSeries {
    field: Field,
    ram: u32,
    /// numerator u ↦ coefficient of x^{u/ram}; no zero coefficients.
    terms: BTreeMap<i64, Fe>,
    /// Known modulo x^prec; `None` means exact.
    prec: Option<Q64>,
}

fn check_ram(field: &Field, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("ramification must be positive".into()));
    }
    let p = field.characteristic();
    if p != 0 && n as u64 % p == 0 {
        return Err(Error::CharDividesDenominator { p, d: n as u64 });
    }
    Ok(())
}

impl PuiseuxSeries {
    /// Terms are (numerator, coefficient) pairs over `ram`; zero
    /// coefficients and terms at or beyond `prec` are dropped.
    pub fn new<I: IntoIterator<Item = (i64, Fe)>>(field: &Field, ram: u32, terms: I, prec: Option<Q64>) -> Result<Self> {
        check_ram(field, ram)?;
        let mut s = PuiseuxSeries {
            field: field.clone(),
            ram,
            terms: BTreeMap::new(),
            prec,
        };
        for (u, c) in terms {
            s.add_term(u, c);
        }
        s.trim();
        Ok(s)
    }

    pub fn zero(field: &Field) -> Self {
        PuiseuxSeries {
            field: field.clone(),
            ram: 1,
            terms: BTreeMap::new(),
            prec: None,
        }
    }

    pub fn constant(c: Fe) -> Self {
        let f = c.field().clone();
        Self::new(&f, 1, [(0, c)], None).unwrap()
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field.one())
    }

    /// c·x^e, exact.
    pub fn monomial(c: Fe, e: Q64) -> Result<Self> {
        let f = c.field().clone();
        Self::new(&f, *e.denom() as u32, [(*e.numer(), c)], None)
    }

    /// The series x.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field.one(), Q64::from_integer(1)).unwrap()
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        Self::new(l.field(), 1, l.terms().iter().map(|(e, c)| (*e, c.clone())), None).unwrap()
    }

    fn add_term(&mut self, u: i64, c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&u) {
            None => {
                self.terms.insert(u, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(u, s);
                }
            }
        }
    }

    fn trim(&mut self) {
        if let Some(t) = self.prec {
            let n = self.ram as i64;
            self.terms.retain(|u, _| Q64::new(*u, n) < t);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ramification(&self) -> u32 {
        self.ram
    }

    /// Numerator ↦ coefficient over the ramification.
    pub fn terms(&self) -> &BTreeMap<i64, Fe> {
        &self.terms
    }

    /// (exponent, coefficient) pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (Q64, &Fe)> {
        let n = self.ram as i64;
        self.terms.iter().map(move |(u, c)| (Q64::new(*u, n), c))
    }

    pub fn precision(&self) -> Option<Q64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// No known nonzero terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Option<Q64> {
        self.iter().next().map(|(e, _)| e)
    }

    pub fn leading(&self) -> Option<(Q64, Fe)> {
        self.iter().next().map(|(e, c)| (e, c.clone()))
    }

    pub fn coeff_at(&self, e: Q64) -> Fe {
        let n = self.ram as i64;
        if (e * Q64::from_integer(n)).is_integer() {
            if let Some(c) = self.terms.get(&(e * Q64::from_integer(n)).to_integer()) {
                return c.clone();
            }
        }
        self.field.zero()
    }

    /// A lower bound for the valuation of the true series.
    fn vlow(&self) -> Option<Q64> {
        self.valuation().or(self.prec)
    }

    /// The same series written over ramification `n` (a multiple of the
    /// current one).
    pub fn with_ramification(&self, n: u32) -> Result<Self> {
        if n % self.ram != 0 {
            return Err(Error::Invalid(format!("{n} is not a multiple of {}", self.ram)));
        }
        check_ram(&self.field, n)?;
        let k = (n / self.ram) as i64;
        Ok(PuiseuxSeries {
            field: self.field.clone(),
            ram: n,
            terms: self.terms.iter().map(|(u, c)| (u * k, c.clone())).collect(),
            prec: self.prec,
        })
    }

    /// Forget everything at or beyond x^t.
    pub fn truncate(&self, t: Q64) -> Self {
        let mut s = self.clone();
        s.prec = min_opt(s.prec, Some(t));
        s.trim();
        s
    }

    /// Coefficients agree for every exponent below `t`.
    pub fn agrees_below(&self, other: &PuiseuxSeries, t: Q64) -> bool {
        let a: Vec<(Q64, &Fe)> = self.iter().filter(|(e, _)| *e < t).collect();
        let b: Vec<(Q64, &Fe)> = other.iter().filter(|(e, _)| *e < t).collect();
        a == b
    }

    fn common(&self, other: &PuiseuxSeries) -> (PuiseuxSeries, PuiseuxSeries) {
        let n = self.ram.lcm(&other.ram);
        (self.with_ramification(n).unwrap(), other.with_ramification(n).unwrap())
    }

    pub fn add(&self, other: &PuiseuxSeries) -> PuiseuxSeries {
        let (mut a, b) = self.common(other);
        for (u, c) in b.terms {
            a.add_term(u, c);
        }
        a.prec = min_opt(self.prec, other.prec);
        a.trim();
        a
    }

    pub fn neg(&self) -> PuiseuxSeries {
        self.scale(&-self.field.one())
    }

    pub fn sub(&self, other: &PuiseuxSeries) -> PuiseuxSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fe) -> PuiseuxSeries {
        let mut s = self.clone();
        s.terms = self
            .terms
            .iter()
            .map(|(u, a)| (*u, a * c))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        if c.is_zero() {
            s.prec = None;
        }
        s
    }

    /// Cauchy product, known modulo x^{min(v_p + T_q, v_q + T_p)}.
    pub fn mul(&self, other: &PuiseuxSeries) -> PuiseuxSeries {
        let (a, b) = self.common(other);
        let prec = min_opt(add_opt(self.vlow(), other.prec), add_opt(other.vlow(), self.prec));
        let mut out = PuiseuxSeries {
            field: self.field.clone(),
            ram: a.ram,
            terms: BTreeMap::new(),
            prec,
        };
        let n = a.ram as i64;
        for (u1, c1) in &a.terms {
            for (u2, c2) in &b.terms {
                if prec.is_some_and(|t| Q64::new(u1 + u2, n) >= t) {
                    break;
                }
                out.add_term(u1 + u2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> PuiseuxSeries {
        let mut r = PuiseuxSeries::one(&self.field);
        let mut b = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                r = r.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// p^r = c^r x^{rv} (1 + u)^r for p = c x^v (1 + u), with c^{1/d} the
    /// canonical root.
    pub fn pow_rational(&self, r: Q64) -> Result<PuiseuxSeries> {
        self.pow_rational_with_root(r, None)
    }

    /// As [`pow_rational`](Self::pow_rational), with the d-th root of the
    /// leading coefficient supplied by the caller (d = denominator of r).
    pub fn pow_rational_with_root(&self, r: Q64, root: Option<&Fe>) -> Result<PuiseuxSeries> {
        let (v, c) = self.leading().ok_or(Error::ZeroInput)?;
        let (a, d) = (*r.numer(), *r.denom());
        let p = self.field.characteristic();
        if p != 0 && d as u64 % p == 0 {
            return Err(Error::CharDividesDenominator { p, d: d as u64 });
        }
        let croot = match root {
            Some(b) => {
                if b.pow(d as u128) != c {
                    return Err(Error::BadRootOrder);
                }
                b.clone()
            }
            None => nth_root(&c, d as u64)?,
        };
        let lead = croot.powi(a);
        let n = self.ram as i64;
        let new_ram = (d * n) as u32;
        let rv = r * v;
        let lead_num = (rv * Q64::from_integer(d * n)).to_integer();
        if self.terms.len() == 1 {
            let prec = self.prec.map(|t| rv + t - v);
            return PuiseuxSeries::new(&self.field, new_ram, [(lead_num, lead)], prec);
        }
        let Some(t) = self.prec else {
            if d == 1 && a >= 0 {
                return Ok(self.pow(a as u64));
            }
            return Err(Error::Unbounded);
        };
        // w = p / (c x^v) as a power series in x^{1/n}
        let vu = (v * Q64::from_integer(n)).to_integer();
        let k_len = ((t - v) * Q64::from_integer(n)).ceil().to_integer() as usize;
        let cinv = c.inv();
        let mut w = vec![self.field.zero(); k_len];
        for (u, coef) in &self.terms {
            let k = (u - vu) as usize;
            if k < k_len {
                w[k] = coef * &cinv;
            }
        }
        let s = dense_pow(&w, a, d as u64, &self.field)?;
        let terms = s
            .into_iter()
            .enumerate()
            .map(|(k, coef)| (lead_num + k as i64 * d, &coef * &lead));
        PuiseuxSeries::new(&self.field, new_ram, terms, Some(rv + t - v))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<PuiseuxSeries> {
        self.pow_rational(Q64::from_integer(-1))
    }

    /// Substitute `q` for x: Σ c_u q^{u/n}, with q^{1/n} the canonical root.
    pub fn compose(&self, q: &PuiseuxSeries) -> Result<PuiseuxSeries> {
        self.compose_with_root(q, None)
    }

    /// As [`compose`](Self::compose), with the n-th root of q's leading
    /// coefficient supplied by the caller.
    pub fn compose_with_root(&self, q: &PuiseuxSeries, root: Option<&Fe>) -> Result<PuiseuxSeries> {
        let vq = q.valuation().ok_or(Error::NonpositiveValuation)?;
        if !vq.is_positive() {
            return Err(Error::NonpositiveValuation);
        }
        let s = q.pow_rational_with_root(Q64::new(1, self.ram as i64), root)?;
        let mut acc = PuiseuxSeries::zero(&self.field);
        let mut pos = PuiseuxSeries::one(&self.field);
        let mut pos_exp = 0i64;
        let mut s_inv: Option<PuiseuxSeries> = None;
        for (u, c) in &self.terms {
            let power = if *u >= 0 {
                pos = pos.mul(&s.pow((*u - pos_exp) as u64));
                pos_exp = *u;
                pos.clone()
            } else {
                if s_inv.is_none() {
                    s_inv = Some(s.inv()?);
                }
                s_inv.as_ref().unwrap().pow(u.unsigned_abs())
            };
            acc = acc.add(&power.scale(c));
        }
        if let Some(tp) = self.prec {
            acc = acc.truncate(vq * tp);
        }
        Ok(acc)
    }

    /// c_u x^{u/n} ↦ c_u ω^{iu} x^{u/n}.
    pub fn conjugate(&self, omega: &Fe, i: i64) -> Result<PuiseuxSeries> {
        let n = self.ram as i64;
        if !omega.pow(n as u128).is_one() {
            return Err(Error::BadRootOrder);
        }
        let mut s = self.clone();
        s.terms = self
            .terms
            .iter()
            .map(|(u, c)| (*u, c * &omega.pow((i * u).rem_euclid(n) as u128)))
            .collect();
        Ok(s)
    }

    /// As a Laurent polynomial when every exponent is an integer.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let mut l = LaurentPoly::zero(&self.field);
        for (e, c) in self.iter() {
            if !e.is_integer() {
                return None;
            }
            l.add_term(e.to_integer(), c.clone());
        }
        Some(l)
    }

    /// Branch order: valuation, then the term sequence (exponent, coefficient).
    pub fn canonical_cmp(&self, other: &PuiseuxSeries) -> Ordering {
        let va = self.valuation();
        let vb = other.valuation();
        match (va, vb) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Greater,
            (Some(_), None) => return Ordering::Less,
            (Some(x), Some(y)) if x != y => return x.cmp(&y),
            _ => {}
        }
        self.iter().cmp(other.iter())
    }
}

/// w^{a/d} for a power series w in t with w(0) = 1, truncated to w's length.
/// The inverse d-th root comes from the Newton step y ← y + y(1 − w y^d)/d,
/// which needs no division except by d.
fn dense_pow(w: &[Fe], a: i64, d: u64, field: &Field) -> Result<Vec<Fe>> {
    let k = w.len();
    let dinv = field
        .from_i64(d as i64)
        .checked_inv()
        .ok_or(Error::CharDividesDenominator { p: field.characteristic(), d })?;
    let mut y = vec![field.zero(); k];
    y[0] = field.one();
    loop {
        let wy = dense_mul(w, &dense_pow_int(&y, d, field), k);
        let mut e: Vec<Fe> = wy.iter().map(|c| -c).collect();
        e[0] = &e[0] + &field.one();
        if e.iter().all(|c| c.is_zero()) {
            break;
        }
        let corr = dense_mul(&y, &e, k);
        for (yi, ci) in y.iter_mut().zip(corr) {
            *yi = &*yi + &(&ci * &dinv);
        }
    }
    if a >= 0 {
        let root = dense_mul(w, &dense_pow_int(&y, d - 1, field), k);
        Ok(dense_pow_int(&root, a as u64, field))
    } else {
        Ok(dense_pow_int(&y, a.unsigned_abs(), field))
    }
}

fn dense_mul(a: &[Fe], b: &[Fe], k: usize) -> Vec<Fe> {
    let field = a[0].field();
    let mut out = vec![field.zero(); k];
    for (i, x) in a.iter().enumerate().take(k) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(k - i) {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

fn dense_pow_int(a: &[Fe], mut e: u64, field: &Field) -> Vec<Fe> {
    let k = a.len();
    let mut r = vec![field.zero(); k];
    r[0] = field.one();
    let mut b = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            r = dense_mul(&r, &b, k);
        }
        e >>= 1;
        if e > 0 {
            b = dense_mul(&b, &b, k);
        }
    }
    r
}

/// Equal as series: same known terms and same truncation.
impl PartialEq for PuiseuxSeries {
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && self.iter().eq(other.iter())
    }
}

fn fmt_exp(e: Q64, ram: u32) -> String {
    if e.is_integer() {
        match e.to_integer() {
            0 => String::new(),
            1 => "x".into(),
            k => format!("x^{k}"),
        }
    } else {
        // keep the series' own denominator, e.g. x^(6/4)
        let k = ram as i64 / e.denom();
        format!("x^({}/{})", e.numer() * k, ram)
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = crate::fmt_terms(self.iter().map(|(e, c)| (c.clone(), fmt_exp(e, self.ram))));
        match self.prec {
            None => write!(f, "{body}"),
            Some(t) => {
                let o = if t.is_integer() {
                    format!("O(x^{})", t.to_integer())
                } else {
                    format!("O(x^({}/{}))", t.numer(), t.denom())
                };
                if self.is_zero() {
                    write!(f, "{o}")
                } else {
                    write!(f, "{body} + {o}")
                }
            }
        }
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Branches of a bivariate polynomial with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchSet {
    pub degree: usize,
    pub branches: Vec<(PuiseuxSeries, usize)>,
}

impl BranchSet {
    pub fn new(branches: Vec<(PuiseuxSeries, usize)>) -> Self {
        BranchSet {
            degree: branches.iter().map(|b| b.1).sum(),
            branches,
        }
    }

    /// Each branch repeated by its multiplicity.
    pub fn flatten(&self) -> Vec<PuiseuxSeries> {
        self.branches
            .iter()
            .flat_map(|(s, m)| std::iter::repeat_n(s.clone(), *m))
            .collect()
    }

    pub fn sort(&mut self) {
        self.branches.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    }

    /// Lowest truncation order among the branches (`None` if all exact).
    pub fn precision(&self) -> Option<Q64> {
        self.branches.iter().fold(None, |acc, (s, _)| min_opt(acc, s.precision()))
    }

    /// The y-coefficients (lowest first, last = 1) of ∏ (y − p_i).
    pub fn product_coeffs(&self, field: &Field) -> Vec<PuiseuxSeries> {
        product_of_linear_factors(&self.flatten(), field)
    }
}

/// y-coefficients of ∏ (y − r) over `roots`, multiplied pairwise in a
/// balanced tree.
pub fn product_of_linear_factors(roots: &[PuiseuxSeries], field: &Field) -> Vec<PuiseuxSeries> {
    let mut polys: Vec<Vec<PuiseuxSeries>> = roots.iter().map(|r| vec![r.neg(), PuiseuxSeries::one(field)]).collect();
    if polys.is_empty() {
        return vec![PuiseuxSeries::one(field)];
    }
    while polys.len() > 1 {
        let mut next = Vec::with_capacity(polys.len().div_ceil(2));
        let mut it = polys.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(series_poly_mul(&a, &b, field)),
                None => next.push(a),
            }
        }
        polys = next;
    }
    polys.pop().unwrap()
}

fn series_poly_mul(a: &[PuiseuxSeries], b: &[PuiseuxSeries], field: &Field) -> Vec<PuiseuxSeries> {
    let mut out = vec![PuiseuxSeries::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn series(terms: &[(i64, i64, i64)], prec: Option<Q64>) -> PuiseuxSeries {
        // (num, den, coeff)
        let f = q();
        let mut s = PuiseuxSeries::zero(&f);
        for &(u, n, c) in terms {
            s = s.add(&PuiseuxSeries::monomial(f.from_i64(c), Q64::new(u, n)).unwrap());
        }
        match prec {
            Some(t) => s.truncate(t),
            None => s,
        }
    }

    fn r(a: i64, b: i64) -> Q64 {
        Q64::new(a, b)
    }

    #[test]
    fn add_on_common_ramification() {
        let p = series(&[(3, 2, 1), (7, 4, 1)], None);
        let qq = series(&[(3, 2, 1), (5, 3, 1)], None);
        let s = p.add(&qq);
        assert_eq!(s.ramification(), 12);
        assert_eq!(s, series(&[(3, 2, 2), (5, 3, 1), (7, 4, 1)], None));
        assert_eq!(p.add(&PuiseuxSeries::zero(&q())), p);
        assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn mul_example() {
        let p = series(&[(3, 2, 1), (7, 4, 1)], None);
        let qq = series(&[(3, 2, 1), (5, 3, 1)], None);
        assert_eq!(p.mul(&qq), series(&[(3, 1, 1), (19, 6, 1), (13, 4, 1), (41, 12, 1)], None));
        assert_eq!(p.mul(&PuiseuxSeries::one(&q())), p);
        assert!(p.mul(&PuiseuxSeries::zero(&q())).is_zero());
        // truncation: min(v_p + T_q, v_q + T_p)
        let a = series(&[(1, 1, 1)], Some(r(3, 1)));
        let b = series(&[(2, 1, 1)], Some(r(4, 1)));
        assert_eq!(a.mul(&b).precision(), Some(r(5, 1)));
    }

    #[test]
    fn pow_rational_examples() {
        let p = series(&[(3, 2, 1), (10, 6, 1)], Some(r(4, 1)));
        let s = p.pow_rational(r(1, 4)).unwrap();
        assert_eq!(s.coeff_at(r(3, 8)), q().one());
        assert_eq!(s.coeff_at(r(3, 8) + r(1, 6)), q().from_ratio(1, 4).unwrap());
        assert_eq!(s.coeff_at(r(3, 8) + r(2, 6)), q().from_ratio(-3, 32).unwrap());
        assert_eq!(s.precision(), Some(r(3, 8) + r(4, 1) - r(3, 2)));
        let back = s.pow(4);
        assert!(back.agrees_below(&p, back.precision().unwrap()));

        assert_eq!(p.pow_rational(r(1, 1)).unwrap(), p);
        let x2 = series(&[(2, 1, 1)], None);
        assert_eq!(x2.pow_rational(r(3, 2)).unwrap(), series(&[(3, 1, 1)], None));
        assert_eq!(series(&[(1, 1, 1), (2, 1, 1)], None).pow_rational(r(1, 2)), Err(Error::Unbounded));
        assert!(matches!(series(&[(0, 1, 2)], None).pow_rational(r(1, 2)), Err(Error::NoSuchRoot(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let p = series(&[(1, 2, 2), (1, 1, -1), (5, 2, 3)], Some(r(5, 1)));
        let i = p.inv().unwrap();
        let prod = p.mul(&i);
        assert!(prod.agrees_below(&PuiseuxSeries::one(&q()), prod.precision().unwrap()));
    }

    #[test]
    fn compose_examples() {
        let k = Field::cyclotomic(24).unwrap();
        let one = k.one();
        let p = PuiseuxSeries::new(&k, 4, [(6, one.clone()), (7, one.clone())], None).unwrap();
        let qq = PuiseuxSeries::new(&k, 6, [(9, one.clone()), (10, one.clone())], None)
            .unwrap()
            .truncate(r(4, 1));
        let c = p.compose(&qq).unwrap();
        assert_eq!(c.coeff_at(r(54, 24)), one);
        assert_eq!(c.coeff_at(r(58, 24)), k.from_ratio(3, 2).unwrap());
        assert_eq!(c.coeff_at(r(62, 24)), k.from_ratio(3, 8).unwrap());
        assert_eq!(c.coeff_at(r(63, 24)), one);
        for (e, _) in c.iter().filter(|(e, _)| *e < r(63, 24)) {
            assert!([r(54, 24), r(58, 24), r(62, 24)].contains(&e), "unexpected exponent {e}");
        }

        let x = PuiseuxSeries::x(&q());
        let p2 = series(&[(1, 3, 1), (5, 2, -2)], None);
        assert_eq!(p2.compose(&x).unwrap(), p2);
        let t2 = series(&[(2, 1, 1)], None);
        assert_eq!(t2.compose(&series(&[(3, 1, 1)], None)).unwrap(), series(&[(6, 1, 1)], None));
        assert_eq!(t2.compose(&series(&[(0, 1, 1)], None)), Err(Error::NonpositiveValuation));
    }

    #[test]
    fn conjugate_examples() {
        let k = Field::cyclotomic(24).unwrap();
        let w1 = k.generator().pow(6);
        let p = PuiseuxSeries::new(&k, 4, [(6, k.one()), (7, k.one())], None).unwrap();
        for i in 0..4 {
            let c = p.conjugate(&w1, i).unwrap();
            assert_eq!(c.coeff_at(r(6, 4)), w1.pow((6 * i) as u128));
            assert_eq!(c.coeff_at(r(7, 4)), w1.pow((7 * i) as u128));
        }
        assert_eq!(p.conjugate(&w1, 0).unwrap(), p);
        let mut c = p.clone();
        for _ in 0..4 {
            c = c.conjugate(&w1, 1).unwrap();
        }
        assert_eq!(c, p);
        assert_eq!(p.conjugate(&k.generator(), 1), Err(Error::BadRootOrder));
    }

    #[test]
    fn char_guard() {
        let f3 = Field::finite(3, 1).unwrap();
        assert!(matches!(
            PuiseuxSeries::new(&f3, 3, [(1, f3.one())], None),
            Err(Error::CharDividesDenominator { p: 3, d: 3 })
        ));
    }

    #[test]
    fn display() {
        let p = series(&[(3, 2, 1), (7, 4, -1)], Some(r(4, 1)));
        assert_eq!(p.to_string(), "x^(6/4) - x^(7/4) + O(x^4)");
    }
}
