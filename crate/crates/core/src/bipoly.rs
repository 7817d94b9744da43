//! Bivariate polynomials monic in y with Laurent-polynomial coefficients in x.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fields::{Fe, Field};
use crate::ring::RingElem;
use crate::unipoly::UniPoly;

/// A finite sum Σ c_i x^i with integer (possibly negative) exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<i64, Fe>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::fmt_terms(self.terms.iter().map(|(e, c)| (c.clone(), x_mono(*e)))))
    }
}

fn x_mono(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{e}"),
    }
}

fn y_mono(e: u32) -> String {
    match e {
        0 => String::new(),
        1 => "y".into(),
        _ => format!("y^{e}"),
    }
}

fn join_mono(a: String, b: String) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ => format!("{a}*{b}"),
    }
}

impl LaurentPoly {
    pub fn zero(field: &Field) -> Self {
        LaurentPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(c: Fe, e: i64) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(e, c);
        p
    }

    pub fn constant(c: Fe) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_unipoly(u: &UniPoly) -> Self {
        let mut p = Self::zero(u.field());
        for (i, c) in u.coeffs().iter().enumerate() {
            p.add_term(i as i64, c.clone());
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<i64, Fe> {
        &self.terms
    }

    pub fn add_term(&mut self, e: i64, c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    pub fn coeff(&self, e: i64) -> Fe {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent present.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single term `c·x^k` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(Fe, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial().is_some_and(|(c, e)| e == 0 && c.is_one())
    }

    pub fn scale(&self, c: &Fe, shift: i64) -> Self {
        let mut out = Self::zero(&self.field);
        for (e, a) in &self.terms {
            out.add_term(e + shift, a * c);
        }
        out
    }

    pub fn eval(&self, x: &Fe) -> Fe {
        self.terms
            .iter()
            .fold(self.field.zero(), |acc, (e, c)| &acc + &(c * &x.powi(*e)))
    }

    /// As an ordinary polynomial, when no exponent is negative.
    pub fn to_unipoly(&self) -> Option<UniPoly> {
        if self.valuation().is_some_and(|v| v < 0) {
            return None;
        }
        let n = self.degree().map_or(0, |d| d as usize + 1);
        Some(UniPoly::new(&self.field, (0..n).map(|i| self.coeff(i as i64)).collect()))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-self.field.one(), 0)
    }
}

impl RingElem for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        LaurentPoly::constant(self.field.one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A general element of k[x, x^{-1}][y], keyed by (y-exponent, x-exponent).
/// This is the coefficient ring of the resultant computations.
#[derive(Clone, PartialEq, Eq)]
pub struct XyPoly {
    field: Field,
    terms: BTreeMap<(u32, i64), Fe>,
}

impl fmt::Debug for XyPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_xy(self.terms.iter().map(|(&(j, i), c)| (i, j, c.clone()))))
    }
}

/// Monomials sorted by y-degree descending, then x-degree ascending.
fn render_xy<I: Iterator<Item = (i64, u32, Fe)>>(terms: I) -> String {
    let mut v: Vec<(i64, u32, Fe)> = terms.collect();
    v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    crate::fmt_terms(v.into_iter().map(|(i, j, c)| (c, join_mono(x_mono(i), y_mono(j)))))
}

impl XyPoly {
    pub fn zero(field: &Field) -> Self {
        XyPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Fe) -> Self {
        let mut p = Self::zero(c.field());
        p.add_term(0, 0, c);
        p
    }

    pub fn y(field: &Field) -> Self {
        let mut p = Self::zero(field);
        p.add_term(0, 1, field.one());
        p
    }

    pub fn from_laurent(l: &LaurentPoly, yexp: u32) -> Self {
        let mut p = Self::zero(l.field());
        for (e, c) in l.terms() {
            p.add_term(*e, yexp, c.clone());
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn add_term(&mut self, xexp: i64, yexp: u32, c: Fe) {
        if c.is_zero() {
            return;
        }
        let key = (yexp, xexp);
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
        }
    }

    /// Terms as (xexp, yexp, coeff).
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &Fe)> {
        self.terms.iter().map(|(&(j, i), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|k| k.0)
    }

    pub fn y_coeff(&self, j: u32) -> LaurentPoly {
        let mut l = LaurentPoly::zero(&self.field);
        for (&(jj, i), c) in self.terms.range((j, i64::MIN)..=(j, i64::MAX)) {
            debug_assert_eq!(jj, j);
            l.add_term(i, c.clone());
        }
        l
    }

    pub fn eval(&self, x: &Fe, y: &Fe) -> Fe {
        self.terms
            .iter()
            .fold(self.field.zero(), |acc, (&(j, i), c)| &acc + &(&(c * &x.powi(i)) * &y.pow(j as u128)))
    }
}

impl Add<&XyPoly> for &XyPoly {
    type Output = XyPoly;
    fn add(self, rhs: &XyPoly) -> XyPoly {
        let mut out = self.clone();
        for (&(j, i), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub<&XyPoly> for &XyPoly {
    type Output = XyPoly;
    fn sub(self, rhs: &XyPoly) -> XyPoly {
        let mut out = self.clone();
        for (&(j, i), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul<&XyPoly> for &XyPoly {
    type Output = XyPoly;
    fn mul(self, rhs: &XyPoly) -> XyPoly {
        let mut out = XyPoly::zero(&self.field);
        for (&(j1, i1), c1) in &self.terms {
            for (&(j2, i2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &XyPoly {
    type Output = XyPoly;
    fn neg(self) -> XyPoly {
        let mut out = XyPoly::zero(&self.field);
        for (&(j, i), c) in &self.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl RingElem for XyPoly {
    fn zero_like(&self) -> Self {
        XyPoly::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        XyPoly::constant(self.field.one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// f(x, y) = y^m + a_1(x) y^{m−1} + … + a_m(x) with m ≥ 1.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePoly {
    field: Field,
    /// `coeffs[j]` is the coefficient of y^j; `coeffs[m]` is 1.
    coeffs: Vec<LaurentPoly>,
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_xy(self.terms().map(|(i, j, c)| (i, j, c.clone()))))
    }
}

impl BivariatePoly {
    /// From y-coefficients (index = y-degree). Trailing zero coefficients are
    /// dropped; the leading coefficient must be a unit monomial c·x^k, which
    /// is divided out.
    pub fn new(field: &Field, mut coeffs: Vec<LaurentPoly>) -> Result<Self> {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(Error::Invalid("y-degree must be positive".into()));
        }
        let (c, k) = coeffs.last().unwrap().as_monomial().ok_or(Error::NotMonic('y'))?;
        if !(c.is_one() && k == 0) {
            let inv = c.inv();
            coeffs = coeffs.iter().map(|a| a.scale(&inv, -k)).collect();
        }
        Ok(BivariatePoly {
            field: field.clone(),
            coeffs,
        })
    }

    pub fn from_xy(p: &XyPoly) -> Result<Self> {
        let m = p.y_degree().ok_or(Error::ZeroInput)?;
        Self::new(p.field(), (0..=m).map(|j| p.y_coeff(j)).collect())
    }

    /// From (xexp, yexp, coeff) triples.
    pub fn from_terms<I: IntoIterator<Item = (i64, u32, Fe)>>(field: &Field, terms: I) -> Result<Self> {
        let mut p = XyPoly::zero(field);
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        Self::from_xy(&p)
    }

    /// `y − a(x)` for a Laurent polynomial `a`.
    pub fn linear(a: &LaurentPoly) -> Self {
        let f = a.field().clone();
        BivariatePoly::new(&f, vec![-a, LaurentPoly::constant(f.one())]).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn y_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &LaurentPoly {
        &self.coeffs[j]
    }

    /// Terms as (xexp, yexp, coeff), y ascending then x ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &Fe)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(j, l)| l.terms().iter().map(move |(i, c)| (*i, j as u32, c)))
    }

    pub fn to_xy(&self) -> XyPoly {
        let mut p = XyPoly::zero(&self.field);
        for (i, j, c) in self.terms() {
            p.add_term(i, j, c.clone());
        }
        p
    }

    pub fn eval(&self, x: &Fe, y: &Fe) -> Fe {
        self.to_xy().eval(x, y)
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        BivariatePoly::from_xy(&(&self.to_xy() * &other.to_xy())).unwrap()
    }

    /// Lower convex hull of the support, walked from the y^m vertex down to
    /// the lowest y-degree present.
    pub fn newton_polygon(&self) -> NewtonPolygon {
        let mut pts: Vec<(i64, u32)> = Vec::new();
        for (j, l) in self.coeffs.iter().enumerate() {
            if let Some(v) = l.valuation() {
                pts.push((v, j as u32));
            }
        }
        let mut vertices = vec![*pts.last().unwrap()];
        let mut edges = Vec::new();
        let (mut a, mut b) = vertices[0];
        loop {
            let lower: Vec<&(i64, u32)> = pts.iter().filter(|p| p.1 < b).collect();
            if lower.is_empty() {
                break;
            }
            let gamma = lower
                .iter()
                .map(|&&(i, j)| Ratio::new(i - a, (b - j) as i64))
                .min()
                .unwrap();
            let level = Ratio::from_integer(a) + gamma * Ratio::from_integer(b as i64);
            let support: Vec<(i64, u32)> = pts
                .iter()
                .filter(|&&(i, j)| Ratio::from_integer(i) + gamma * Ratio::from_integer(j as i64) == level)
                .copied()
                .collect();
            let far = *support.iter().min_by_key(|p| p.1).unwrap();
            edges.push(NewtonEdge {
                slope: -gamma.recip_or_inf(),
                gamma,
                support: support.into_iter().rev().collect(),
            });
            vertices.push(far);
            (a, b) = far;
        }
        NewtonPolygon { vertices, edges }
    }

    /// `Some(n)` when every monomial has total degree n.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut n = None;
        for (i, j, _) in self.terms() {
            let d = i + j as i64;
            if d < 0 || n.is_some_and(|m| m != d) {
                return None;
            }
            n = Some(d);
        }
        n.map(|d| d as u32)
    }

    /// The same polynomial over `target` (prime-field or rational
    /// coefficients only).
    pub fn embed_into(&self, target: &Field) -> Result<Self> {
        let terms = self
            .terms()
            .map(|(i, j, c)| Ok((i, j, c.embed_into(target)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(target, terms)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// w_f(t) with t^j coefficient a_{n−j, j}, for f homogeneous with
    /// nonzero x^n and y^n coefficients.
    pub fn associated_poly(&self) -> Result<UniPoly> {
        let n = self
            .homogeneous_degree()
            .ok_or_else(|| Error::NotInMh(format!("{self} is not homogeneous")))?;
        if self.coeffs[0].coeff(n as i64).is_zero() {
            return Err(Error::NotInMh(format!("x^{n} coefficient of {self} is zero")));
        }
        let v = (0..=n as usize).map(|j| self.coeffs[j].coeff(n as i64 - j as i64)).collect();
        Ok(UniPoly::new(&self.field, v).with_var('t'))
    }

    /// Homogenisation of w(t) of degree n: x^n · w(y/x), made monic.
    pub fn homogenize(w: &UniPoly) -> Result<Self> {
        let n = w.degree().ok_or(Error::ZeroInput)? as i64;
        let field = w.field().clone();
        let coeffs = w
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| LaurentPoly::monomial(c.clone(), n - j as i64))
            .collect();
        Self::new(&field, coeffs)
    }

    /// The polynomials handed to the z-resultant: `(f(x, z), g(x, y − z))`
    /// for sums and `(f(x, z), z^{deg g} g(x, y/z))` for products, each as
    /// a list of z-coefficients in k[x^±][y].
    pub fn substitute_for_composition(&self, g: &BivariatePoly, mode: CompositionMode) -> (Vec<XyPoly>, Vec<XyPoly>) {
        let field = &self.field;
        let f_z: Vec<XyPoly> = self.coeffs.iter().map(|l| XyPoly::from_laurent(l, 0)).collect();
        let n = g.y_degree();
        let mut g_z = vec![XyPoly::zero(field); n + 1];
        match mode {
            CompositionMode::Sum => {
                // (y − z)^j = Σ_k binom(j,k) y^{j−k} (−z)^k
                for (j, b) in g.coeffs.iter().enumerate() {
                    let mut binom = 1u64;
                    for k in 0..=j {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        let c = field.from_i64(sign * binom as i64);
                        let term = XyPoly::from_laurent(&b.scale(&c, 0), (j - k) as u32);
                        g_z[k] = &g_z[k] + &term;
                        binom = binom * (j - k) as u64 / (k + 1) as u64;
                    }
                }
            }
            CompositionMode::Product => {
                for (j, b) in g.coeffs.iter().enumerate() {
                    g_z[n - j] = &g_z[n - j] + &XyPoly::from_laurent(b, j as u32);
                }
            }
        }
        (f_z, g_z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionMode {
    Sum,
    Product,
}

trait RecipOrInf {
    fn recip_or_inf(self) -> Self;
}

impl RecipOrInf for Ratio<i64> {
    /// Reciprocal; a horizontal edge (γ = 0) reports slope 0.
    fn recip_or_inf(self) -> Self {
        if self == Ratio::from_integer(0) {
            self
        } else {
            self.recip()
        }
    }
}

/// One edge of the Newton polygon. Points are (x-exponent, y-exponent);
/// `slope` is Δj/Δi and `gamma = −1/slope` is the x-valuation of the
/// branches the edge contributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonEdge {
    pub slope: Ratio<i64>,
    pub gamma: Ratio<i64>,
    /// Support points on the edge line, increasing i.
    pub support: Vec<(i64, u32)>,
}

impl NewtonEdge {
    /// Height of the edge (number of branches it accounts for).
    pub fn height(&self) -> u32 {
        self.support.first().unwrap().1 - self.support.last().unwrap().1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Increasing i, decreasing j.
    pub vertices: Vec<(i64, u32)>,
    pub edges: Vec<NewtonEdge>,
}
