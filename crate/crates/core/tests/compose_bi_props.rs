mod common;

use common::*;
use compoly::{
    agrees_with, composed_mul, composed_mul_exact, composed_product, composed_sum, composed_sum_exact, expand_branches,
    substitute, BivariatePoly, Field, PuiseuxSeries,
};
use proptest::prelude::*;

fn q() -> Field {
    Field::rational()
}

/// Pieces whose branches vanish at x = 0 and have leading coefficient ±1,
/// so square roots stay inside Q(ζ_16).
fn zero_pieces() -> impl Strategy<Value = Vec<Piece>> {
    let piece = prop_oneof![
        (prop::sample::select(vec![-1i64, 1]), -2i64..3).prop_map(|(a, b)| Piece::Linear(0, a, b)),
        (prop::sample::select(vec![-1i64, 0, 1]), 1i64..4, -2i64..3).prop_map(|(s, k, b)| {
            // leading coefficients stay ±1 only if s x is dominated by x^{k/2}
            Piece::Quadratic { s: if k == 1 { s } else { 0 }, k, b }
        }),
    ];
    prop::collection::vec(piece, 1..=2).prop_map(|mut v| {
        while v.iter().map(Piece::degree).sum::<usize>() > 2 {
            v.pop();
        }
        v
    })
}

fn laurent_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-3i64..4, -5i64..6), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_and_branch_routes_agree(a in pieces_strategy(3), b in pieces_strategy(3)) {
        let k = q();
        let (f, g) = (product(&k, &a), product(&k, &b));
        let t = r(3, 1);
        for res in [composed_sum(&f, &g, t).unwrap(), composed_mul(&f, &g, t).unwrap()] {
            prop_assert_eq!(res.degree(), f.y_degree() * g.y_degree());
            prop_assert!(res.agrees_with_exact());
            let exact = res.exact.as_ref().unwrap();
            // Galois collapse: rational inputs give Q[x^±] coefficients
            prop_assert!(exact.terms().all(|(_, _, c)| c.as_rational().is_some()));
        }
    }

    #[test]
    fn sum_and_mul_are_commutative_and_associative(a in prop::collection::vec(-3i64..4, 6), b in prop::collection::vec(-3i64..4, 6), c in prop::collection::vec(-3i64..4, 3)) {
        let k = q();
        let f = random_monic(&k, 2, &a);
        let g = random_monic(&k, 2, &b);
        let h = random_monic(&k, 1, &c);
        for op in [composed_sum_exact, composed_mul_exact] {
            prop_assert_eq!(op(&f, &g).unwrap(), op(&g, &f).unwrap());
            let l = op(&op(&f, &g).unwrap(), &h).unwrap();
            let rr = op(&f, &op(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(l, rr);
        }
    }

    #[test]
    fn identities_hold(a in prop::collection::vec(-3i64..4, 9), m in 1u32..4) {
        let k = q();
        let f = random_monic(&k, m, &a);
        prop_assert_eq!(composed_sum_exact(&f, &poly(&k, &[(0, 1, 1)])).unwrap(), f.clone());
        prop_assert_eq!(composed_mul_exact(&f, &poly(&k, &[(0, 1, 1), (0, 0, -1)])).unwrap(), f);
    }

    #[test]
    fn product_identity(a in zero_pieces()) {
        let k = Field::cyclotomic(16).unwrap();
        let f = product(&k, &a);
        let e = poly(&k, &[(0, 1, 1), (1, 0, -1)]);
        let t = r(3, 1);
        prop_assert!(agrees_with(&composed_product(&f, &e, t).unwrap().expanded, &f, t));
        prop_assert!(agrees_with(&composed_product(&e, &f, t).unwrap().expanded, &f, t));
    }

    #[test]
    fn product_is_associative_on_branches(a in zero_pieces(), b in zero_pieces(), c in zero_pieces()) {
        let k = Field::cyclotomic(16).unwrap();
        let t = r(4, 1);
        let br = |p: &[Piece]| expand_branches(&product(&k, p), t).unwrap().flatten();
        let (ps, qs, rs) = (br(&a), br(&b), br(&c));
        let mut left = Vec::new();
        let mut right = Vec::new();
        for p in &ps {
            for q in &qs {
                for s in &rs {
                    left.push(substitute(&substitute(p, q, None).unwrap(), s, None).unwrap());
                    right.push(substitute(p, &substitute(q, s, None).unwrap(), None).unwrap());
                }
            }
        }
        let bound = left.iter().chain(&right).filter_map(|s| s.precision()).min().unwrap_or(t).min(t);
        let cut = |v: Vec<PuiseuxSeries>| sorted(v.into_iter().map(|s| s.truncate(bound)).collect());
        prop_assert_eq!(cut(left), cut(right));
    }

    #[test]
    fn linear_factors_are_a_homomorphism(a in laurent_strategy(), b in laurent_strategy()) {
        let k = q();
        let (la, lb) = (laurent(&k, &a), laurent(&k, &b));
        let (fa, fb) = (BivariatePoly::linear(&la), BivariatePoly::linear(&lb));
        prop_assert_eq!(composed_sum_exact(&fa, &fb).unwrap(), BivariatePoly::linear(&(&la + &lb)));
        prop_assert_eq!(composed_mul_exact(&fa, &fb).unwrap(), BivariatePoly::linear(&(&la * &lb)));
    }
}

#[test]
fn worked_pair_routes_agree() {
    let k = Field::cyclotomic(24).unwrap();
    let (f, g) = (quartic(&k), sextic(&k));
    let t = r(4, 1);
    let s = composed_sum(&f, &g, t).unwrap();
    let m = composed_mul(&f, &g, t).unwrap();
    assert!(s.agrees_with_exact() && m.agrees_with_exact());
    assert_eq!(s.exact.as_ref().unwrap().y_degree(), 24);
    for res in [&s, &m] {
        for (e, _, c) in res.exact.as_ref().unwrap().terms() {
            assert!(e >= 0);
            assert!(c.as_rational().is_some());
        }
    }
}

#[test]
fn sum_of_square_roots() {
    let k = q();
    let y2x = poly(&k, &[(0, 2, 1), (1, 0, -1)]);
    assert_eq!(composed_sum_exact(&y2x, &y2x).unwrap(), poly(&k, &[(0, 4, 1), (1, 2, -4)]));
}
