use compoly::ring::determinant;
use compoly::{composed_uni, DiamondKind, Field, UniPoly};
use proptest::prelude::*;

fn poly(field: &Field, c: &[i64]) -> UniPoly {
    UniPoly::from_i64s(field, c)
}

fn monic(field: &Field, c: &[i64]) -> UniPoly {
    let mut v = c.to_vec();
    v.push(1);
    poly(field, &v)
}

fn num_lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// ∏∏ (x − α⋄β) from roots in a splitting field of both inputs.
fn by_roots(f: &UniPoly, g: &UniPoly, kind: DiamondKind) -> UniPoly {
    let p = f.field().characteristic();
    // every irreducible factor has degree ≤ max degree, so F_{p^lcm(1..=m)} splits both
    let m = f.degree().unwrap().max(g.degree().unwrap()) as u32;
    let e = (1..=m).fold(1u32, num_lcm);
    let big = Field::finite(p, e).unwrap();
    let rf = f.embed_into(&big).unwrap().roots_in_field().unwrap();
    let rg = g.embed_into(&big).unwrap().roots_in_field().unwrap();
    let mut prod = UniPoly::one(&big);
    for (a, ma) in &rf {
        for (b, mb) in &rg {
            for _ in 0..ma * mb {
                prod = &prod * &UniPoly::linear_root(&kind.apply(a, b));
            }
        }
    }
    prod
}

proptest! {
    #[test]
    fn division_identity(a in prop::collection::vec(-20i64..20, 1..7), b in prop::collection::vec(-20i64..20, 1..5)) {
        let q = Field::rational();
        let (a, b) = (poly(&q, &a), poly(&q, &b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.degree().unwrap_or(0) < b.degree().unwrap().max(1) || rem.is_zero());
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(0i64..7, 1..6), b in prop::collection::vec(0i64..7, 1..6), c in prop::collection::vec(0i64..7, 1..4)) {
        let k = Field::finite(7, 1).unwrap();
        let c = poly(&k, &c);
        prop_assume!(!c.is_zero());
        let (a, b) = (&poly(&k, &a) * &c, &poly(&k, &b) * &c);
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).is_zero());
        prop_assert!(b.rem(&g).is_zero());
        prop_assert!(g.degree() >= c.degree());
    }

    #[test]
    fn resultant_matches_sylvester(a in prop::collection::vec(-9i64..9, 2..6), b in prop::collection::vec(-9i64..9, 2..5)) {
        let q = Field::rational();
        let (a, b) = (poly(&q, &a), poly(&q, &b));
        prop_assume!(a.degree().unwrap_or(0) > 0 && b.degree().unwrap_or(0) > 0);
        prop_assert_eq!(a.resultant(&b).unwrap(), determinant(&a.sylvester_matrix(&b)));
    }

    #[test]
    fn composed_matches_root_oracle(p in prop::sample::select(vec![2u64, 3, 5]), a in prop::collection::vec(0i64..5, 1..4), b in prop::collection::vec(0i64..5, 1..3), mul in any::<bool>()) {
        let k = Field::finite(p, 1).unwrap();
        let (f, g) = (monic(&k, &a), monic(&k, &b));
        let kind = if mul { DiamondKind::Multiplication } else { DiamondKind::Addition };
        prop_assume!(!mul || (!f.coeff(0).is_zero() && !g.coeff(0).is_zero()));
        prop_assume!(!f.derivative().is_zero() && !g.derivative().is_zero());
        prop_assume!(f.gcd(&f.derivative()).degree() == Some(0) && g.gcd(&g.derivative()).degree() == Some(0));
        let h = composed_uni(&f, &g, kind).unwrap();
        let oracle = by_roots(&f, &g, kind);
        prop_assert_eq!(h.embed_into(oracle.field()).unwrap(), oracle);
    }

    #[test]
    fn frobenius_commutes(p in prop::sample::select(vec![2u64, 3, 5]), a in prop::collection::vec(0i64..5, 1..4), b in prop::collection::vec(0i64..5, 1..4), mul in any::<bool>()) {
        let k = Field::finite(p, 1).unwrap();
        let (f, g) = (monic(&k, &a), monic(&k, &b));
        let kind = if mul { DiamondKind::Multiplication } else { DiamondKind::Addition };
        prop_assume!(!mul || (!f.coeff(0).is_zero() && !g.coeff(0).is_zero()));
        let h = composed_uni(&f, &g, kind).unwrap();
        let xq = UniPoly::x(&k).pow(p as usize);
        prop_assert_eq!(h.pow(p as usize), h.compose(&xq));
    }

    #[test]
    fn composed_is_commutative_and_associative(a in prop::collection::vec(1i64..7, 1..3), b in prop::collection::vec(1i64..7, 1..3), c in prop::collection::vec(1i64..7, 1..3), mul in any::<bool>()) {
        let k = Field::finite(7, 1).unwrap();
        let (f, g, h) = (monic(&k, &a), monic(&k, &b), monic(&k, &c));
        let kind = if mul { DiamondKind::Multiplication } else { DiamondKind::Addition };
        let fg = composed_uni(&f, &g, kind).unwrap();
        prop_assert_eq!(&fg, &composed_uni(&g, &f, kind).unwrap());
        let left = composed_uni(&fg, &h, kind).unwrap();
        let right = composed_uni(&f, &composed_uni(&g, &h, kind).unwrap(), kind).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn irreducibility_finds_roots() {
    let k = Field::finite(5, 1).unwrap();
    for c in 0..5 {
        for d in 0..5 {
            let f = poly(&k, &[c, d, 1]);
            let has_root = (0..5).any(|x| (x * x + d * x + c) % 5 == 0);
            assert_eq!(f.is_irreducible().unwrap(), !has_root, "{f}");
        }
    }
}
