//! Homogeneous bivariate polynomials over finite fields under ⊙.
//!
//! A homogeneous f of degree n, monic in y, factors as ∏ (y − a_i x) over
//! the algebraic closure; its associated polynomial w_f(t) = f(1, t) has the
//! a_i as roots. Composing branches y = ax and y = bx gives y = abx, so ⊙
//! on homogeneous polynomials is the composed multiplication of the
//! associated polynomials.

use num_integer::Integer;

use crate::bipoly::BivariatePoly;
use crate::compose_uni::{associate, composed_mul_uni, decompose_uni_with, DecomposeOptions, DiamondKind};
use crate::error::{Error, Result};
use crate::fields::{Fe, Field};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    NotMember(String),
    InMh,
    InMhMin,
}

impl Membership {
    pub fn label(&self) -> &'static str {
        match self {
            Membership::NotMember(_) => "not_member",
            Membership::InMh => "in_Mh",
            Membership::InMhMin => "in_Mhmin",
        }
    }
}

/// A homogeneous polynomial together with its associated polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousElement {
    poly: BivariatePoly,
    associated: UniPoly,
}

impl HomogeneousElement {
    /// Accepts members of M_{h,min}; anything else is `NotMember`.
    pub fn new(poly: BivariatePoly) -> Result<Self> {
        match membership(&poly)? {
            Membership::InMhMin => Ok(Self::from_parts(poly)?),
            Membership::InMh => Err(Error::NotMember(format!("{poly}: associated polynomial is reducible"))),
            Membership::NotMember(why) => Err(Error::NotMember(why)),
        }
    }

    /// From an associated polynomial w (monic, w(0) ≠ 0), without the
    /// membership degree bound.
    pub fn from_associated(w: &UniPoly) -> Result<Self> {
        if w.coeff(0).is_zero() {
            return Err(Error::ZeroRoot);
        }
        Self::from_parts(BivariatePoly::homogenize(w)?)
    }

    fn from_parts(poly: BivariatePoly) -> Result<Self> {
        let associated = poly.associated_poly()?;
        Ok(HomogeneousElement { poly, associated })
    }

    pub fn poly(&self) -> &BivariatePoly {
        &self.poly
    }

    pub fn associated(&self) -> &UniPoly {
        &self.associated
    }

    pub fn degree(&self) -> usize {
        self.poly.y_degree()
    }

    pub fn field(&self) -> &Field {
        self.poly.field()
    }
}

impl std::fmt::Display for HomogeneousElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Classify f against M_h (homogeneous of degree 0 < n < √p with nonzero
/// x^n and y^n coefficients) and M_{h,min} (w_f irreducible over the
/// declared field).
pub fn membership(f: &BivariatePoly) -> Result<Membership> {
    let field = f.field();
    if !field.is_finite() {
        return Err(Error::NotFiniteField);
    }
    let p = field.characteristic();
    let Some(n) = f.homogeneous_degree() else {
        return Ok(Membership::NotMember(format!("{f} is not homogeneous")));
    };
    let n = n as u64;
    if n == 0 || n * n >= p {
        return Ok(Membership::NotMember(format!("degree {n} is outside 0 < n < sqrt({p})")));
    }
    if f.coeff(0).coeff(n as i64).is_zero() {
        return Ok(Membership::NotMember(format!("x^{n} coefficient of {f} is zero")));
    }
    let w = f.associated_poly()?;
    Ok(if w.is_irreducible()? {
        Membership::InMhMin
    } else {
        Membership::InMh
    })
}

/// Degree d of the smallest subfield F_{p^d} containing the coefficients of f.
pub fn coefficient_subfield_degree(f: &BivariatePoly) -> Result<u32> {
    let field = f.field();
    if !field.is_finite() {
        return Err(Error::NotFiniteField);
    }
    let e = field.degree() as u32;
    let p = field.characteristic() as u128;
    let coeffs: Vec<Fe> = f.terms().map(|(_, _, c)| c.clone()).collect();
    for d in (1..=e).filter(|d| e % d == 0) {
        let q = p.pow(d);
        if coeffs.iter().all(|c| c.pow(q) == *c) {
            return Ok(d);
        }
    }
    Ok(e)
}

/// f ⊙ g through w_F = w_f • w_g.
pub fn homog_compose(f: &HomogeneousElement, g: &HomogeneousElement) -> Result<HomogeneousElement> {
    for h in [f, g] {
        if membership(&h.poly)? != Membership::InMhMin {
            return Err(Error::NotMember(h.poly.to_string()));
        }
    }
    let (m, n) = (f.degree(), g.degree());
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    let p = f.field().characteristic();
    if (m * n) as u64 >= p {
        return Err(Error::DegreeBoundExceeded { n: m * n, p });
    }
    let w = composed_mul_uni(&f.associated, &g.associated)?;
    HomogeneousElement::from_associated(&w)
}

/// y − ax.
pub fn unit_element(a: &Fe) -> Result<HomogeneousElement> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    HomogeneousElement::from_associated(&UniPoly::linear_root(a).with_var('t'))
}

/// a for f = y − ax.
pub fn unit_value(f: &HomogeneousElement) -> Option<Fe> {
    (f.degree() == 1).then(|| -&f.associated.coeff(0))
}

/// Facts about (M_{h,min,1}, ⊙) checked against (F_q^*, ·) over every pair
/// and triple of units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTableReport {
    pub order: usize,
    /// (y − ax) ⊙ (y − bx) = y − abx for all a, b.
    pub homomorphism: bool,
    pub identity: bool,
    pub inverses: bool,
    pub commutative: bool,
    pub associative: bool,
}

impl GroupTableReport {
    pub fn all_hold(&self) -> bool {
        self.homomorphism && self.identity && self.inverses && self.commutative && self.associative
    }
}

pub fn degree_one_group_table(field: &Field) -> Result<GroupTableReport> {
    if !field.is_finite() {
        return Err(Error::NotFiniteField);
    }
    let units: Vec<Fe> = field.elements().ok_or(Error::NotFiniteField)?.filter(|a| !a.is_zero()).collect();
    let elems = units.iter().map(|a| unit_element(a)).collect::<Result<Vec<_>>>()?;
    let q = units.len();
    let mut table = vec![vec![None; q]; q];
    let mut homomorphism = true;
    for i in 0..q {
        for j in 0..q {
            let c = homog_compose(&elems[i], &elems[j])?;
            let ab = &units[i] * &units[j];
            homomorphism &= unit_value(&c).as_ref() == Some(&ab);
            table[i][j] = units.iter().position(|u| Some(u) == unit_value(&c).as_ref());
        }
    }
    let e = units.iter().position(|u| u.is_one());
    let identity = e.is_some_and(|e| (0..q).all(|i| table[i][e] == Some(i) && table[e][i] == Some(i)));
    let inverses = e.is_some_and(|e| {
        (0..q).all(|i| {
            let inv = units[i].inv();
            let k = units.iter().position(|u| *u == inv);
            k.is_some_and(|k| table[i][k] == Some(e)) && (0..q).any(|k| table[i][k] == Some(e))
        })
    });
    let commutative = (0..q).all(|i| (0..q).all(|j| table[i][j] == table[j][i]));
    let associative = (0..q).all(|i| {
        (0..q).all(|j| {
            (0..q).all(|k| {
                let l = table[i][j].and_then(|ij| table[ij][k]);
                let r = table[j][k].and_then(|jk| table[i][jk]);
                l.is_some() && l == r
            })
        })
    });
    Ok(GroupTableReport {
        order: q,
        homomorphism,
        identity,
        inverses,
        commutative,
        associative,
    })
}

/// Some a ∈ F_q^* with f = (y − ax) ⊙ g, scanning units in element order.
pub fn is_associate(f: &HomogeneousElement, g: &HomogeneousElement) -> Result<Option<Fe>> {
    if f.degree() != g.degree() {
        return Ok(None);
    }
    for a in f.field().elements().ok_or(Error::NotFiniteField)? {
        if a.is_zero() {
            continue;
        }
        if associate(&g.associated, &a, DiamondKind::Multiplication)? == f.associated {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Another decomposition: `factors[permutation[i]] = (y − units[i] x) ⊙
/// primary[i]` with ∏ units = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogAlternate {
    pub factors: Vec<HomogeneousElement>,
    pub permutation: Vec<usize>,
    pub units: Vec<Fe>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomogDecomposition {
    /// Indecomposable factors with pairwise coprime degrees, by degree.
    pub factors: Vec<HomogeneousElement>,
    pub alternates: Vec<HomogAlternate>,
}

impl HomogDecomposition {
    /// ⊙ of the factors, in order.
    pub fn recompose(&self) -> Result<HomogeneousElement> {
        let mut it = self.factors.iter();
        let first = it.next().ok_or(Error::ZeroInput)?.clone();
        it.try_fold(first, |acc, f| {
            let w = composed_mul_uni(&acc.associated, &f.associated)?;
            HomogeneousElement::from_associated(&w)
        })
    }

    /// Every alternate relates to the primary factors by its units, and the
    /// units multiply to 1.
    pub fn certificates_hold(&self) -> Result<bool> {
        for alt in &self.alternates {
            let mut prod = self.factors[0].field().one();
            for (i, f) in self.factors.iter().enumerate() {
                let u = &alt.units[i];
                let moved = associate(&f.associated, u, DiamondKind::Multiplication)?;
                if moved != alt.factors[alt.permutation[i]].associated {
                    return Ok(false);
                }
                prod = &prod * u;
            }
            if !prod.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn homog_decompose(f: &HomogeneousElement) -> Result<HomogDecomposition> {
    homog_decompose_with(f, DecomposeOptions::default())
}

pub fn homog_decompose_with(f: &HomogeneousElement, opts: DecomposeOptions) -> Result<HomogDecomposition> {
    if membership(&f.poly)? != Membership::InMhMin {
        return Err(Error::NotMember(f.poly.to_string()));
    }
    let p = f.field().characteristic();
    if f.degree() as u64 >= p {
        return Err(Error::DegreeBoundExceeded { n: f.degree(), p });
    }
    if f.degree() == 1 {
        return Ok(HomogDecomposition {
            factors: vec![f.clone()],
            alternates: Vec::new(),
        });
    }
    let d = decompose_uni_with(&f.associated, DiamondKind::Multiplication, opts)?;
    let lift = |ws: &[UniPoly]| ws.iter().map(HomogeneousElement::from_associated).collect::<Result<Vec<_>>>();
    let factors = lift(&d.factors)?;
    let alternates = d
        .alternates
        .iter()
        .map(|a| {
            Ok(HomogAlternate {
                factors: lift(&a.factors)?,
                permutation: a.permutation.clone(),
                units: a.units.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomogDecomposition { factors, alternates })
}
