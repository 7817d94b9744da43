//! Newton–Puiseux expansion of a monic f(x, y) into branches y = p_i(x).
//!
//! Each recursion level holds G(x, y′) = f(x, prefix + y′) and the number μ
//! of roots of G with valuation above the last exponent. An edge of slope
//! γ contributes the roots c of its characteristic polynomial; substituting
//! y′ = c x^γ + y″ and recursing refines those branches. Terms of G whose
//! γ-weighted valuation exceeds the edge level by at least μ(T − γ) cannot
//! move any small root modulo x^T and are dropped during the substitution.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use crate::bipoly::BivariatePoly;
use crate::error::{Error, Result};
use crate::fields::{primitive_root_of_unity, Fe, Field};
use crate::puiseux::{BranchSet, PuiseuxSeries, Q64};
use crate::unipoly::UniPoly;

/// Coefficient of y^j as a map exponent ↦ coefficient.
type Work = Vec<BTreeMap<Q64, Fe>>;

fn add_into(map: &mut BTreeMap<Q64, Fe>, e: Q64, c: Fe) {
    if c.is_zero() {
        return;
    }
    match map.remove(&e) {
        None => {
            map.insert(e, c);
        }
        Some(old) => {
            let s = &old + &c;
            if !s.is_zero() {
                map.insert(e, s);
            }
        }
    }
}

struct Expander {
    field: Field,
    t: Q64,
    seed: u64,
    out: Vec<(PuiseuxSeries, usize)>,
}

struct Edge {
    gamma: Q64,
    level: Q64,
    hi: usize,
    lo: usize,
}

/// Lower-hull edges of the part of `g` with y-degree ≤ μ, and the lowest
/// y-degree with a nonzero coefficient.
fn small_polygon(g: &Work, mu: usize) -> (Vec<Edge>, usize) {
    let pts: Vec<(Q64, usize)> = (0..=mu)
        .filter_map(|j| g[j].keys().next().map(|&s| (s, j)))
        .collect();
    let j0 = pts[0].1;
    let mut edges = Vec::new();
    let (mut a, mut b) = *pts.last().unwrap();
    while b > j0 {
        let gamma = pts
            .iter()
            .filter(|p| p.1 < b)
            .map(|&(i, j)| (i - a) / Q64::from_integer((b - j) as i64))
            .min()
            .unwrap();
        let level = a + gamma * Q64::from_integer(b as i64);
        let far = *pts
            .iter()
            .filter(|&&(i, j)| j < b && i + gamma * Q64::from_integer(j as i64) == level)
            .min_by_key(|p| p.1)
            .unwrap();
        edges.push(Edge {
            gamma,
            level,
            hi: b,
            lo: far.1,
        });
        (a, b) = far;
    }
    (edges, j0)
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl Expander {
    fn series(&self, prefix: &[(Q64, Fe)]) -> PuiseuxSeries {
        let ram = prefix.iter().fold(1i64, |acc, (e, _)| acc.lcm(e.denom()));
        let terms = prefix.iter().map(|(e, c)| ((*e * Q64::from_integer(ram)).to_integer(), c.clone()));
        PuiseuxSeries::new(&self.field, ram as u32, terms, Some(self.t)).expect("ramification checked by the characteristic guard")
    }

    fn recurse(&mut self, g: &Work, prefix: &mut Vec<(Q64, Fe)>, mu: usize) -> Result<()> {
        let (edges, j0) = small_polygon(g, mu);
        let mut rest = j0;
        for edge in edges {
            if edge.gamma >= self.t {
                rest += edge.hi - edge.lo;
                continue;
            }
            // characteristic polynomial Σ a_{s,j} c^{j − lo} over the edge
            let mut phi = vec![self.field.zero(); edge.hi - edge.lo + 1];
            for (j, slot) in phi.iter_mut().enumerate() {
                let jj = edge.lo + j;
                let s = edge.level - edge.gamma * Q64::from_integer(jj as i64);
                if let Some(c) = g[jj].get(&s) {
                    *slot = c.clone();
                }
            }
            let phi = UniPoly::new(&self.field, phi).with_var('c');
            let roots = phi.roots_in_field_seeded(self.seed)?;
            let found: usize = roots.iter().map(|r| r.1).sum();
            if found != edge.hi - edge.lo {
                return Err(Error::RootOutsideField(phi.to_string()));
            }
            for (c, nu) in roots {
                let g1 = self.substitute(g, &c, edge.gamma, edge.level, nu);
                prefix.push((edge.gamma, c));
                self.recurse(&g1, prefix, nu)?;
                prefix.pop();
            }
        }
        if rest > 0 {
            let s = self.series(prefix);
            self.out.push((s, rest));
        }
        Ok(())
    }

    /// G(x, c x^γ + y′), keeping terms whose γ-weight is below
    /// level + ν(T − γ).
    fn substitute(&self, g: &Work, c: &Fe, gamma: Q64, level: Q64, nu: usize) -> Work {
        let bound = level + Q64::from_integer(nu as i64) * (self.t - gamma);
        let mut out: Work = vec![BTreeMap::new(); g.len()];
        let cpow: Vec<Fe> = (0..g.len()).map(|k| c.pow(k as u128)).collect();
        for (j, gj) in g.iter().enumerate() {
            for (s, a) in gj {
                if *s + gamma * Q64::from_integer(j as i64) >= bound {
                    continue;
                }
                for k in 0..=j {
                    let coef = &(a * &cpow[j - k]) * &self.field.from_i64(binomial(j, k));
                    add_into(&mut out[k], *s + gamma * Q64::from_integer((j - k) as i64), coef);
                }
            }
        }
        out
    }
}

/// Branches of `f` modulo x^T, with multiplicities, sorted by valuation and
/// then coefficients. Characteristic roots are found with the default seed.
pub fn expand_branches(f: &BivariatePoly, t: Q64) -> Result<BranchSet> {
    expand_branches_seeded(f, t, 0)
}

pub fn expand_branches_seeded(f: &BivariatePoly, t: Q64, seed: u64) -> Result<BranchSet> {
    if t <= Q64::zero() {
        return Err(Error::Invalid("truncation must be positive".into()));
    }
    let m = f.y_degree();
    let p = f.field().characteristic();
    if p != 0 && p <= m as u64 {
        return Err(Error::CharTooSmall { p, m });
    }
    let g: Work = f
        .coeffs()
        .iter()
        .map(|l| l.terms().iter().map(|(e, c)| (Q64::from_integer(*e), c.clone())).collect())
        .collect();
    let mut ex = Expander {
        field: f.field().clone(),
        t,
        seed,
        out: Vec::new(),
    };
    ex.recurse(&g, &mut Vec::new(), m)?;
    let mut bs = BranchSet::new(ex.out);
    bs.sort();
    Ok(bs)
}

/// {p(ω^i x^{1/m}) : i = 1..m} for a primitive m-th root of unity ω.
pub fn conjugate_closure(primitive: &PuiseuxSeries, m: u32) -> Result<BranchSet> {
    let omega = primitive_root_of_unity(primitive.field(), m as u64)?;
    let p = if m % primitive.ramification() == 0 {
        primitive.with_ramification(m)?
    } else {
        primitive.clone()
    };
    let branches = (1..=m as i64)
        .map(|i| p.conjugate(&omega, i).map(|s| (s, 1)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchSet::new(branches))
}

/// Whether ∏ (y − p_i) agrees with `f` coefficientwise modulo x^T (each
/// coefficient compared up to its own known precision when that is lower).
pub fn verify_product(f: &BivariatePoly, branches: &BranchSet, t: Q64) -> bool {
    if branches.degree != f.y_degree() {
        return false;
    }
    let coeffs = branches.product_coeffs(f.field());
    coeffs.iter().zip(f.coeffs()).all(|(c, fc)| {
        let bound = c.precision().map_or(t, |p| p.min(t));
        c.agrees_below(&PuiseuxSeries::from_laurent(fc), bound)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::LaurentPoly;

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

    #[test]
    fn quartic_branches() {
        let k = Field::cyclotomic(24).unwrap();
        let bs = expand_branches(&quartic(&k), r(2, 1)).unwrap();
        assert_eq!(bs.degree, 4);
        let w1 = primitive_root_of_unity(&k, 4).unwrap();
        let prim = PuiseuxSeries::new(&k, 4, [(6, k.one()), (7, k.one())], None).unwrap();
        let mut expected: Vec<PuiseuxSeries> =
            (1..=4).map(|i| prim.conjugate(&w1, i).unwrap().truncate(r(2, 1))).collect();
        expected.sort_by(|a, b| a.canonical_cmp(b));
        let got: Vec<PuiseuxSeries> = bs.flatten();
        assert_eq!(got, expected);
        assert!(verify_product(&quartic(&k), &bs, r(2, 1)));
    }

    #[test]
    fn sextic_branches() {
        let k = Field::cyclotomic(24).unwrap();
        let bs = expand_branches(&sextic(&k), r(2, 1)).unwrap();
        assert_eq!(bs.degree, 6);
        let w2 = primitive_root_of_unity(&k, 6).unwrap();
        let prim = PuiseuxSeries::new(&k, 6, [(9, k.one()), (10, k.one())], None).unwrap();
        let mut expected: Vec<PuiseuxSeries> =
            (1..=6).map(|i| prim.conjugate(&w2, i).unwrap().truncate(r(2, 1))).collect();
        expected.sort_by(|a, b| a.canonical_cmp(b));
        assert_eq!(bs.flatten(), expected);
    }

    #[test]
    fn linear_input() {
        let q = Field::rational();
        let a = LaurentPoly::from_unipoly(&UniPoly::from_i64s(&q, &[1, -2, 0, 5]));
        let bs = expand_branches(&BivariatePoly::linear(&a), r(4, 1)).unwrap();
        assert_eq!(bs.branches.len(), 1);
        assert_eq!(bs.branches[0].0, PuiseuxSeries::from_laurent(&a).truncate(r(4, 1)));
    }

    #[test]
    fn root_outside_field() {
        let q = Field::rational();
        let f = poly(&q, &[(0, 2, 1), (1, 0, -2)]);
        assert!(matches!(expand_branches(&f, r(2, 1)), Err(Error::RootOutsideField(_))));
        let g = poly(&q, &[(0, 2, 1), (1, 0, 1)]);
        assert!(matches!(expand_branches(&g, r(2, 1)), Err(Error::RootOutsideField(_))));
        // y^2 - x has branches ±x^{1/2}, fine over Q
        let h = poly(&q, &[(0, 2, 1), (1, 0, -1)]);
        assert_eq!(expand_branches(&h, r(2, 1)).unwrap().degree, 2);
    }

    #[test]
    fn char_too_small() {
        let f3 = Field::finite(3, 1).unwrap();
        let f = poly(&f3, &[(0, 3, 1), (1, 0, 1)]);
        assert_eq!(expand_branches(&f, r(2, 1)), Err(Error::CharTooSmall { p: 3, m: 3 }));
    }

    #[test]
    fn conjugate_closure_examples() {
        let q = Field::rational();
        let half = PuiseuxSeries::monomial(q.one(), r(1, 2)).unwrap();
        let bs = conjugate_closure(&half, 2).unwrap();
        assert_eq!(bs.flatten(), vec![half.neg(), half.clone()]);
        assert_eq!(conjugate_closure(&half, 1).unwrap().flatten(), vec![half.clone()]);
        let x = PuiseuxSeries::x(&q);
        assert_eq!(conjugate_closure(&x, 1).unwrap().flatten(), vec![x]);

        let f = poly(&q, &[(0, 2, 1), (1, 0, -1)]);
        assert!(verify_product(&f, &bs, r(5, 1)));
        let wrong = BranchSet::new(vec![(half.clone(), 2)]);
        assert!(!verify_product(&f, &wrong, r(5, 1)));
    }

    #[test]
    fn repeated_factor_reported_with_multiplicity() {
        let q = Field::rational();
        // (y - x)^2 (y + x^2)
        let a = BivariatePoly::linear(&LaurentPoly::monomial(q.one(), 1));
        let b = BivariatePoly::linear(&LaurentPoly::monomial(-q.one(), 2));
        let f = a.mul(&a).mul(&b);
        let bs = expand_branches(&f, r(3, 1)).unwrap();
        assert_eq!(bs.degree, 3);
        assert_eq!(bs.branches.len(), 2);
        assert_eq!(bs.branches[0].1, 2);
        assert!(verify_product(&f, &bs, r(3, 1)));
    }
}
