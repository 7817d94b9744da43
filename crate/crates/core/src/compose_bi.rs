//! Composed sum, multiplication and product of monic bivariate polynomials.
//!
//! For f = ∏ (y − p_i) and g = ∏ (y − q_j):
//!
//! * sum ⋆: ∏ (y − (p_i + q_j)), also equal to Res_z(f(x,z), g(x,y−z));
//! * multiplication •: ∏ (y − p_i q_j), also Res_z(f(x,z), z^{m₂} g(x,y/z));
//! * product ⊙: ∏ (y − p_i(q_j)), only available through branches.
//!
//! The resultant forms are computed as norms over k[x^±][y] and are exact.
//! The branch forms multiply m₁·m₂ truncated factors.

use num_traits::Signed;

use crate::bipoly::{BivariatePoly, CompositionMode, XyPoly};
use crate::error::{Error, Result};
use crate::fields::{Fe, Field};
use crate::newton_puiseux::expand_branches_seeded;
use crate::puiseux::{product_of_linear_factors, PuiseuxSeries, Q64};
use crate::ring::norm_mod_monic;

/// How many times the branch truncation is raised when the factors come out
/// less precise than requested.
const MAX_REFINE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BiOp {
    Sum,
    Mul,
    Product,
}

impl BiOp {
    pub fn name(self) -> &'static str {
        match self {
            BiOp::Sum => "composed_sum",
            BiOp::Mul => "composed_mul",
            BiOp::Product => "composed_product",
        }
    }

    fn combine(self, p: &PuiseuxSeries, q: &PuiseuxSeries) -> Result<PuiseuxSeries> {
        match self {
            BiOp::Sum => Ok(p.add(q)),
            BiOp::Mul => Ok(p.mul(q)),
            BiOp::Product => substitute(p, q, None),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComposedResult {
    pub op: BiOp,
    pub field: Field,
    /// Requested truncation.
    pub truncation: Q64,
    /// Roots of the result, row-major over (i, j).
    pub factored: Vec<PuiseuxSeries>,
    /// y-coefficients of ∏ (y − r), lowest first, each truncated at T.
    pub expanded: Vec<PuiseuxSeries>,
    pub exact: Option<BivariatePoly>,
    /// Lowest precision among the factors, capped at T (`None`: all exact).
    pub validity: Option<Q64>,
}

impl ComposedResult {
    pub fn degree(&self) -> usize {
        self.factored.len()
    }

    /// Bound up to which `expanded[k]` is known.
    pub fn coefficient_bound(&self, k: usize) -> Q64 {
        self.expanded[k].precision().map_or(self.truncation, |p| p.min(self.truncation))
    }

    /// Whether the expanded product matches `exact` below each coefficient's
    /// bound. Vacuously true without an exact form.
    pub fn agrees_with_exact(&self) -> bool {
        let Some(ex) = &self.exact else { return true };
        agrees_with(&self.expanded, ex, self.truncation)
    }
}

/// Coefficientwise comparison of series y-coefficients with a polynomial,
/// each below min(t, own precision).
pub fn agrees_with(expanded: &[PuiseuxSeries], p: &BivariatePoly, t: Q64) -> bool {
    expanded.len() == p.y_degree() + 1
        && expanded.iter().zip(p.coeffs()).all(|(c, pc)| {
            let bound = c.precision().map_or(t, |q| q.min(t));
            c.agrees_below(&PuiseuxSeries::from_laurent(pc), bound)
        })
}

fn check_fields(f: &BivariatePoly, g: &BivariatePoly) -> Result<Field> {
    if f.field() != g.field() {
        return Err(Error::BadFieldMismatch(format!("{:?} vs {:?}", f.field().config(), g.field().config())));
    }
    Ok(f.field().clone())
}

fn exact_via_norm(f: &BivariatePoly, g: &BivariatePoly, mode: CompositionMode) -> Result<BivariatePoly> {
    check_fields(f, g)?;
    let (fz, gz) = f.substitute_for_composition(g, mode);
    let r: XyPoly = norm_mod_monic(&fz, &gz);
    BivariatePoly::from_xy(&r)
}

/// Res_z(f(x,z), g(x,y−z)).
pub fn composed_sum_exact(f: &BivariatePoly, g: &BivariatePoly) -> Result<BivariatePoly> {
    exact_via_norm(f, g, CompositionMode::Sum)
}

/// Res_z(f(x,z), z^{m₂} g(x,y/z)).
pub fn composed_mul_exact(f: &BivariatePoly, g: &BivariatePoly) -> Result<BivariatePoly> {
    exact_via_norm(f, g, CompositionMode::Product)
}

pub fn composed_sum(f: &BivariatePoly, g: &BivariatePoly, t: Q64) -> Result<ComposedResult> {
    composed_seeded(BiOp::Sum, f, g, t, 0)
}

pub fn composed_mul(f: &BivariatePoly, g: &BivariatePoly, t: Q64) -> Result<ComposedResult> {
    composed_seeded(BiOp::Mul, f, g, t, 0)
}

pub fn composed_product(f: &BivariatePoly, g: &BivariatePoly, t: Q64) -> Result<ComposedResult> {
    composed_seeded(BiOp::Product, f, g, t, 0)
}

/// Any of the three operations; `seed` is passed to the branch expansion.
pub fn composed_seeded(op: BiOp, f: &BivariatePoly, g: &BivariatePoly, t: Q64, seed: u64) -> Result<ComposedResult> {
    let field = check_fields(f, g)?;
    if !t.is_positive() {
        return Err(Error::Invalid("truncation must be positive".into()));
    }
    if op == BiOp::Product {
        let f00 = f.coeff(0).coeff(0);
        let g00 = g.coeff(0).coeff(0);
        if !f00.is_zero() || !g00.is_zero() {
            return Err(Error::ConstantTermNonzero);
        }
    }
    let exact = match op {
        BiOp::Sum => Some(composed_sum_exact(f, g)?),
        BiOp::Mul => Some(composed_mul_exact(f, g)?),
        BiOp::Product => None,
    };

    let (mut tf, mut tg) = (t, t);
    let mut attempt = 0;
    loop {
        let ps = expand_branches_seeded(f, tf, seed)?.flatten();
        let qs = expand_branches_seeded(g, tg, seed)?.flatten();
        if op == BiOp::Product {
            if qs.iter().any(|q| q.valuation().is_some_and(|v| !v.is_positive())) {
                return Err(Error::NonpositiveValuation);
            }
        }
        let factored = ps
            .iter()
            .flat_map(|p| qs.iter().map(move |q| (p, q)))
            .map(|(p, q)| op.combine(p, q))
            .collect::<Result<Vec<_>>>()?;
        let expanded: Vec<PuiseuxSeries> = product_of_linear_factors(&factored, &field)
            .into_iter()
            .map(|c| c.truncate(t))
            .collect();
        let factor_prec = factored.iter().filter_map(|s| s.precision()).min();
        let coeff_prec = expanded.iter().filter_map(|s| s.precision()).min();
        let short = coeff_prec.filter(|p| *p < t);
        if short.is_none() || attempt == MAX_REFINE {
            return Ok(ComposedResult {
                op,
                field,
                truncation: t,
                factored,
                expanded,
                exact,
                validity: factor_prec.map(|p| p.min(t)),
            });
        }
        // Raise both truncations by the shortfall, scaled for composition
        // (p(q) loses precision in proportion to val(q)).
        let deficit = t - short.unwrap();
        tf = tf + deficit * Q64::from_integer(1 + attempt as i64);
        tg = tg + deficit * Q64::from_integer(1 + attempt as i64);
        attempt += 1;
    }
}

/// p(q) with q^{1/n} taken through `root` (the n-th root of q's leading
/// coefficient, n = ramification of p). A zero branch q gives p(0), which
/// needs every exponent of p to be positive.
pub fn substitute(p: &PuiseuxSeries, q: &PuiseuxSeries, root: Option<&Fe>) -> Result<PuiseuxSeries> {
    if !q.is_zero() {
        return p.compose_with_root(q, root);
    }
    let field = p.field();
    match p.valuation() {
        // p ≡ 0: p(q) = O(q^{T_p}); both exact means exactly zero
        None => Ok(match (p.precision(), q.precision()) {
            (Some(tp), Some(tq)) => PuiseuxSeries::zero(field).truncate(tp * tq),
            _ => PuiseuxSeries::zero(field),
        }),
        Some(v) if v.is_positive() => Ok(match q.precision() {
            Some(tq) => PuiseuxSeries::zero(field).truncate(v * tq),
            None => PuiseuxSeries::zero(field),
        }),
        Some(_) => Err(Error::NonpositiveValuation),
    }
}

impl std::fmt::Display for ComposedResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(ex) = &self.exact {
            return write!(f, "{ex}");
        }
        let mut parts = Vec::new();
        for (k, c) in self.expanded.iter().enumerate().rev() {
            if c.is_zero() && c.is_exact() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            let body = if c.is_exact() && *c == PuiseuxSeries::one(&self.field) && !mono.is_empty() {
                mono
            } else if mono.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{mono}")
            };
            parts.push(body);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::LaurentPoly;
    use crate::fields::primitive_root_of_unity;

    fn r(a: i64, b: i64) -> Q64 {
        Q64::new(a, b)
    }

    fn poly(field: &Field, terms: &[(i64, u32, i64)]) -> BivariatePoly {
        BivariatePoly::from_terms(field, terms.iter().map(|&(i, j, c)| (i, j, field.from_i64(c)))).unwrap()
    }

    fn quartic(field: &Field) -> BivariatePoly {
        poly(field, &[(0, 4, 1), (3, 2, -2), (5, 1, -4), (6, 0, 1), (7, 0, -1)])
    }

    fn sextic(field: &Field) -> BivariatePoly {
        poly(
            field,
            &[(0, 6, 1), (3, 4, -3), (5, 3, -2), (6, 2, 3), (8, 1, -6), (9, 0, -1), (10, 0, 1)],
        )
    }

    fn sorted(mut v: Vec<PuiseuxSeries>) -> Vec<PuiseuxSeries> {
        v.sort_by(|a, b| a.canonical_cmp(b));
        v
    }

    #[test]
    fn small_exact_examples() {
        let q = Field::rational();
        let y2x = poly(&q, &[(0, 2, 1), (1, 0, -1)]);
        let s = composed_sum(&y2x, &y2x, r(3, 1)).unwrap();
        assert_eq!(s.exact.as_ref().unwrap(), &poly(&q, &[(0, 4, 1), (1, 2, -4)]));
        assert!(s.agrees_with_exact());
        assert_eq!(s.degree(), 4);

        let yx = poly(&q, &[(0, 1, 1), (1, 0, -1)]);
        let m = composed_mul(&yx, &yx, r(4, 1)).unwrap();
        assert_eq!(m.exact.unwrap(), poly(&q, &[(0, 1, 1), (2, 0, -1)]));

        let a = poly(&q, &[(0, 1, 1), (2, 0, -1)]);
        let b = poly(&q, &[(0, 1, 1), (3, 0, -1)]);
        let c = composed_product(&a, &b, r(10, 1)).unwrap();
        assert!(agrees_with(&c.expanded, &poly(&q, &[(0, 1, 1), (6, 0, -1)]), r(10, 1)));
    }

    #[test]
    fn identities() {
        let k = Field::cyclotomic(24).unwrap();
        let f = quartic(&k);
        let t = r(3, 1);
        let e_sum = poly(&k, &[(0, 1, 1)]);
        assert_eq!(composed_sum_exact(&f, &e_sum).unwrap(), f);
        let e_mul = poly(&k, &[(0, 1, 1), (0, 0, -1)]);
        assert_eq!(composed_mul_exact(&f, &e_mul).unwrap(), f);
        let e_prod = poly(&k, &[(0, 1, 1), (1, 0, -1)]);
        let left = composed_product(&f, &e_prod, t).unwrap();
        let right = composed_product(&e_prod, &f, t).unwrap();
        assert!(agrees_with(&left.expanded, &f, t));
        assert!(agrees_with(&right.expanded, &f, t));
    }

    #[test]
    fn worked_sum_and_mul_factors() {
        let k = Field::cyclotomic(24).unwrap();
        let (f, g) = (quartic(&k), sextic(&k));
        let t = r(4, 1);
        let w1 = primitive_root_of_unity(&k, 4).unwrap();
        let w2 = primitive_root_of_unity(&k, 6).unwrap();
        let ser = |ram: u32, terms: Vec<(i64, Fe)>| PuiseuxSeries::new(&k, ram, terms, None).unwrap();

        let mut sums = Vec::new();
        let mut prods = Vec::new();
        for i in 1..=4u128 {
            for j in 1..=6u128 {
                let a6 = w1.pow(6 * i);
                let a7 = w1.pow(7 * i);
                let b9 = w2.pow(9 * j);
                let b10 = w2.pow(10 * j);
                sums.push(
                    ser(12, vec![(18, a6.clone()), (21, a7.clone()), (18, b9.clone()), (20, b10.clone())]).truncate(t),
                );
                prods.push(
                    ser(
                        12,
                        vec![(36, &a6 * &b9), (39, &a7 * &b9), (38, &a6 * &b10), (41, &a7 * &b10)],
                    )
                    .truncate(t),
                );
            }
        }
        let s = composed_sum(&f, &g, t).unwrap();
        assert_eq!(s.degree(), 24);
        assert_eq!(sorted(s.factored.clone()), sorted(sums));
        assert!(s.agrees_with_exact());
        let m = composed_mul(&f, &g, t).unwrap();
        assert_eq!(sorted(m.factored.iter().map(|p| p.truncate(t)).collect()), sorted(prods));
        assert!(m.agrees_with_exact());

        // rational inputs: the symmetric functions collapse back to Q[x]
        for c in s.exact.unwrap().coeffs().iter().chain(m.exact.unwrap().coeffs()) {
            assert!(c.terms().values().all(|v| v.as_rational().is_some()));
        }
    }

    #[test]
    fn worked_product_factors_and_root_choice() {
        let k = Field::cyclotomic(24).unwrap();
        let (f, g) = (quartic(&k), sextic(&k));
        let t = r(64, 24);
        let res = composed_product(&f, &g, t).unwrap();
        assert_eq!(res.degree(), 24);
        assert!(res.validity.unwrap() >= t);

        let w = k.generator();
        let w1 = w.pow(6);
        let w2 = w.pow(4);
        let p = PuiseuxSeries::new(&k, 4, [(6, k.one()), (7, k.one())], None).unwrap();
        let q = PuiseuxSeries::new(&k, 6, [(9, k.one()), (10, k.one())], None).unwrap().truncate(r(5, 1));
        let mut labelled = Vec::new();
        for i in 1..=4i64 {
            for j in 1..=6i64 {
                let pi = p.conjugate(&w1, i).unwrap();
                let qj = q.conjugate(&w2, j).unwrap();
                let root = w.pow((9 * j) as u128);
                let c = substitute(&pi, &qj, Some(&root)).unwrap();
                let e = |a: i64, b: i64| w.pow((a * i + b * j).rem_euclid(24) as u128);
                assert_eq!(c.coeff_at(r(54, 24)), e(12, 6));
                assert_eq!(c.coeff_at(r(58, 24)), &k.from_ratio(3, 2).unwrap() * &e(12, 10));
                assert_eq!(c.coeff_at(r(62, 24)), &k.from_ratio(3, 8).unwrap() * &e(12, 14));
                assert_eq!(c.coeff_at(r(63, 24)), e(18, 15));
                labelled.push(c.truncate(t));
            }
        }
        let got = sorted(res.factored.iter().map(|s| s.truncate(t)).collect());
        assert_eq!(got, sorted(labelled));
    }

    #[test]
    fn product_not_commutative() {
        let q = Field::rational();
        let a = poly(&q, &[(0, 1, 1), (2, 0, -1)]);
        let b = poly(&q, &[(0, 1, 1), (1, 0, -1), (2, 0, -1)]);
        let t = r(8, 1);
        let ab = composed_product(&a, &b, t).unwrap();
        let ba = composed_product(&b, &a, t).unwrap();
        assert!(agrees_with(&ab.expanded, &poly(&q, &[(0, 1, 1), (2, 0, -1), (3, 0, -2), (4, 0, -1)]), t));
        assert!(agrees_with(&ba.expanded, &poly(&q, &[(0, 1, 1), (2, 0, -1), (4, 0, -1)]), t));
    }

    #[test]
    fn product_errors() {
        let q = Field::rational();
        let a = poly(&q, &[(0, 1, 1), (0, 0, -1)]);
        let yx = poly(&q, &[(0, 1, 1), (1, 0, -1)]);
        assert_eq!(composed_product(&a, &yx, r(2, 1)).unwrap_err(), Error::ConstantTermNonzero);
        // g(0,0) = 0 but a branch y = 1 + x of y² − (1+x)y
        let g = poly(&q, &[(0, 2, 1), (0, 1, -1), (1, 1, -1)]);
        assert_eq!(composed_product(&yx, &g, r(2, 1)).unwrap_err(), Error::NonpositiveValuation);
        let f7 = Field::finite(7, 1).unwrap();
        let other = poly(&f7, &[(0, 1, 1)]);
        assert!(matches!(composed_sum(&yx, &other, r(1, 1)), Err(Error::BadFieldMismatch(_))));
    }

    #[test]
    fn linear_homomorphism() {
        let q = Field::rational();
        let la = LaurentPoly::from_unipoly(&crate::UniPoly::from_i64s(&q, &[0, 2, -1]));
        let mut lb = LaurentPoly::zero(&q);
        lb.add_term(-1, q.from_i64(3));
        lb.add_term(2, q.one());
        let a = BivariatePoly::linear(&la);
        let b = BivariatePoly::linear(&lb);
        assert_eq!(composed_sum_exact(&a, &b).unwrap(), BivariatePoly::linear(&(&la + &lb)));
        assert_eq!(composed_mul_exact(&a, &b).unwrap(), BivariatePoly::linear(&(&la * &lb)));
    }

    #[test]
    fn zero_branch_substitution() {
        let q = Field::rational();
        let f = poly(&q, &[(0, 2, 1), (1, 1, -1)]); // y(y − x)
        let g = poly(&q, &[(0, 2, 1), (2, 1, -1)]); // y(y − x²)
        let res = composed_product(&f, &g, r(5, 1)).unwrap();
        let expect = poly(&q, &[(0, 4, 1), (2, 3, -1)]); // y³(y − x²)
        assert!(agrees_with(&res.expanded, &expect, r(5, 1)));
    }
}
