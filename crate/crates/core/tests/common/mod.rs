#![allow(dead_code)]

use compoly::{BivariatePoly, Field, LaurentPoly, PuiseuxSeries, Q64};

pub fn r(a: i64, b: i64) -> Q64 {
    Q64::new(a, b)
}

pub fn poly(field: &Field, terms: &[(i64, u32, i64)]) -> BivariatePoly {
    BivariatePoly::from_terms(field, terms.iter().map(|&(i, j, c)| (i, j, field.from_i64(c)))).unwrap()
}

pub fn quartic(field: &Field) -> BivariatePoly {
    poly(field, &[(0, 4, 1), (3, 2, -2), (5, 1, -4), (6, 0, 1), (7, 0, -1)])
}

pub fn sextic(field: &Field) -> BivariatePoly {
    poly(
        field,
        &[(0, 6, 1), (3, 4, -3), (5, 3, -2), (6, 2, 3), (8, 1, -6), (9, 0, -1), (10, 0, 1)],
    )
}

pub fn laurent(field: &Field, terms: &[(i64, i64)]) -> LaurentPoly {
    let mut l = LaurentPoly::zero(field);
    for &(e, c) in terms {
        l.add_term(e, field.from_i64(c));
    }
    l
}

/// One factor of a random expandable polynomial over Q, with its roots.
#[derive(Clone, Debug)]
pub enum Piece {
    /// y − a(x), a a polynomial with coefficients (a0, a1, a2).
    Linear(i64, i64, i64),
    /// (y − s·x)² − x^k (1 + b x) with k ≥ 1: roots s·x ± x^{k/2}(1+bx)^{1/2}.
    Quadratic { s: i64, k: i64, b: i64 },
}

impl Piece {
    pub fn degree(&self) -> usize {
        match self {
            Piece::Linear(..) => 1,
            Piece::Quadratic { .. } => 2,
        }
    }

    pub fn poly(&self, q: &Field) -> BivariatePoly {
        match *self {
            Piece::Linear(a0, a1, a2) => poly(q, &[(0, 1, 1), (0, 0, -a0), (1, 0, -a1), (2, 0, -a2)]),
            Piece::Quadratic { s, k, b } => {
                // y² − 2s x y + s² x² − x^k − b x^{k+1}
                let mut terms = vec![(0, 2, 1), (1, 1, -2 * s), (2, 0, s * s), (k, 0, -1), (k + 1, 0, -b)];
                terms.retain(|t| t.2 != 0);
                let mut acc = compoly::XyPoly::zero(q);
                for (i, j, c) in terms {
                    acc.add_term(i, j, q.from_i64(c));
                }
                BivariatePoly::from_xy(&acc).unwrap()
            }
        }
    }

    /// Roots modulo x^t.
    pub fn roots(&self, q: &Field, t: Q64) -> Vec<PuiseuxSeries> {
        match *self {
            Piece::Linear(a0, a1, a2) => {
                vec![PuiseuxSeries::from_laurent(&laurent(q, &[(0, a0), (1, a1), (2, a2)])).truncate(t)]
            }
            Piece::Quadratic { s, k, b } => {
                let unit = PuiseuxSeries::from_laurent(&laurent(q, &[(0, 1), (1, b)])).truncate(t);
                let sq = unit.pow_rational(r(1, 2)).unwrap();
                let half = PuiseuxSeries::monomial(q.one(), r(k, 2)).unwrap().mul(&sq);
                let lin = PuiseuxSeries::from_laurent(&laurent(q, &[(1, s)]));
                vec![lin.add(&half).truncate(t), lin.sub(&half).truncate(t)]
            }
        }
    }
}

pub fn piece_strategy() -> impl proptest::strategy::Strategy<Value = Piece> {
    use proptest::prelude::*;
    prop_oneof![
        (-3i64..4, -3i64..4, -3i64..4).prop_map(|(a, b, c)| Piece::Linear(a, b, c)),
        (-2i64..3, 1i64..4, -2i64..3).prop_map(|(s, k, b)| Piece::Quadratic { s, k, b }),
    ]
}

/// Pieces with total y-degree at most `max`.
pub fn pieces_strategy(max: usize) -> impl proptest::strategy::Strategy<Value = Vec<Piece>> {
    use proptest::prelude::*;
    prop::collection::vec(piece_strategy(), 1..=max).prop_map(move |mut v| {
        while v.iter().map(Piece::degree).sum::<usize>() > max {
            v.pop();
        }
        v
    })
}

pub fn product(q: &Field, pieces: &[Piece]) -> BivariatePoly {
    pieces.iter().skip(1).fold(pieces[0].poly(q), |acc, p| acc.mul(&p.poly(q)))
}

pub fn sorted(mut v: Vec<PuiseuxSeries>) -> Vec<PuiseuxSeries> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v
}

/// Random monic polynomial of y-degree `m` with polynomial coefficients, over `field`.
pub fn random_monic(field: &Field, m: u32, coeffs: &[i64]) -> BivariatePoly {
    let mut acc = compoly::XyPoly::zero(field);
    acc.add_term(0, m, field.one());
    let mut it = coeffs.iter();
    for j in 0..m {
        for i in 0..3 {
            if let Some(&c) = it.next() {
                acc.add_term(i, j, field.from_i64(c));
            }
        }
    }
    BivariatePoly::from_xy(&acc).unwrap()
}
