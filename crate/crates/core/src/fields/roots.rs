//! Canonical roots of unity and n-th roots.

use num_rational::BigRational;
use num_traits::Signed;

use super::{Fe, Field, FieldConfig};
use crate::error::{Error, Result};
use crate::unipoly::{exact_integer_root, UniPoly};

/// A primitive m-th root of unity in the field, chosen deterministically:
/// ζ_N^{N/m} in Q(ζ_N), and γ^{(q−1)/m} in F_q where γ is the first
/// generator of F_q^* in coordinate order.
pub fn primitive_root_of_unity(field: &Field, m: u64) -> Result<Fe> {
    if m == 0 {
        return Err(Error::InvalidConfig("root of unity order must be positive".into()));
    }
    if m == 1 {
        return Ok(field.one());
    }
    let missing = || Error::NoSuchRoot(format!("no primitive {m}-th root of unity in {}", field.config()));
    match field.config() {
        FieldConfig::Rational => {
            if m == 2 {
                Ok(-field.one())
            } else {
                Err(missing())
            }
        }
        FieldConfig::Cyclotomic { order } => {
            let n = *order as u64;
            if n % m == 0 {
                return Ok(field.root_of_unity_power((n / m) as i64).unwrap());
            }
            if n % 2 == 1 && (2 * n) % m == 0 {
                // Q(ζ_N) = Q(ζ_2N) for odd N
                for j in 0..n as i64 {
                    let cand = -field.root_of_unity_power(j).unwrap();
                    if cand.multiplicative_order() == Some(m as u128) {
                        return Ok(cand);
                    }
                }
            }
            Err(missing())
        }
        FieldConfig::Finite { .. } => {
            let q = field.order().unwrap();
            if (q - 1) % m as u128 != 0 {
                return Err(missing());
            }
            let gamma = field
                .elements()
                .unwrap()
                .find(|a| a.multiplicative_order() == Some(q - 1))
                .expect("F_q^* is cyclic");
            Ok(gamma.pow((q - 1) / m as u128))
        }
    }
}

fn rational_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    if r.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        return rational_nth_root(&-r, n).map(|x| -x);
    }
    Some(BigRational::new(
        exact_integer_root(r.numer(), n)?,
        exact_integer_root(r.denom(), n)?,
    ))
}

/// A canonical b with b^n = a.
///
/// * Q: the real root (positive for even n).
/// * Q(ζ_N): for a = c·ζ^k (c > 0 rational where possible) the root
///   c^{1/n}·ζ^j with the smallest j in 0..N; otherwise the root with the
///   lexicographically smallest coordinates.
/// * F_q: the root with the lexicographically smallest coordinates.
pub fn nth_root(a: &Fe, n: u64) -> Result<Fe> {
    if n == 0 {
        return Err(Error::InvalidConfig("root index must be positive".into()));
    }
    let field = a.field().clone();
    if a.is_zero() || n == 1 {
        return Ok(a.clone());
    }
    let missing = || Error::NoSuchRoot(format!("{a} has no {n}-th root in {}", field.config()));
    let n32 = u32::try_from(n).map_err(|_| missing())?;
    match field.config() {
        FieldConfig::Rational => {
            let r = rational_nth_root(&a.as_rational().unwrap(), n32).ok_or_else(missing)?;
            Ok(field.from_rational(&r).unwrap())
        }
        FieldConfig::Cyclotomic { order } => {
            let big_n = *order as u64;
            if let Some((c, k)) = a.cyclo_scaled_root() {
                if let Some(r) = rational_nth_root(&c, n32) {
                    if !(c.is_negative() && n % 2 == 0) {
                        for j in 0..big_n {
                            if (j * n) % big_n == k as u64 {
                                let z = field.root_of_unity_power(j as i64).unwrap();
                                return Ok(&field.from_rational(&r).unwrap() * &z);
                            }
                        }
                    }
                }
            }
            general_root(a, n)
        }
        FieldConfig::Finite { p, .. } => {
            // split off the p-part: x ↦ x^p is a bijection with inverse x^{q/p}
            let p = *p;
            let q = field.order().unwrap();
            let mut m = n;
            let mut b = a.clone();
            while m % p == 0 {
                m /= p;
                b = b.pow(q / p as u128);
            }
            if m == 1 {
                return Ok(b);
            }
            general_root(&b, m)
        }
    }
}

/// Smallest root of t^n − a among those found in the field.
fn general_root(a: &Fe, n: u64) -> Result<Fe> {
    let field = a.field();
    let poly = &UniPoly::monomial(field.one(), n as usize) - &UniPoly::constant(a.clone());
    poly.roots_in_field()?
        .into_iter()
        .map(|(r, _)| r)
        .min()
        .ok_or_else(|| Error::NoSuchRoot(format!("{a} has no {n}-th root in {}", field.config())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_examples() {
        let k = Field::cyclotomic(24).unwrap();
        assert_eq!(primitive_root_of_unity(&k, 24).unwrap(), k.generator());
        assert!(primitive_root_of_unity(&Field::rational(), 1).unwrap().is_one());
        let f7 = Field::finite(7, 1).unwrap();
        let z = primitive_root_of_unity(&f7, 6).unwrap();
        assert_eq!(z, f7.from_i64(3));
        // 3 has order 6 mod 7: powers 3,2,6,4,5,1
        let pows: Vec<u64> = (1..=6).map(|k| z.pow(k).as_prime_residue().unwrap()).collect();
        assert_eq!(pows, vec![3, 2, 6, 4, 5, 1]);
        assert!(matches!(primitive_root_of_unity(&f7, 4), Err(Error::NoSuchRoot(_))));
        assert!(matches!(primitive_root_of_unity(&k, 5), Err(Error::NoSuchRoot(_))));
        let k3 = Field::cyclotomic(3).unwrap();
        assert_eq!(primitive_root_of_unity(&k3, 6).unwrap().multiplicative_order(), Some(6));
    }

    #[test]
    fn nth_root_examples() {
        let q = Field::rational();
        assert!(nth_root(&q.one(), 4).unwrap().is_one());
        assert_eq!(nth_root(&q.from_ratio(-8, 27).unwrap(), 3).unwrap(), q.from_ratio(-2, 3).unwrap());
        assert!(nth_root(&q.from_i64(-4), 2).is_err());
        assert!(nth_root(&q.from_i64(2), 2).is_err());

        let k = Field::cyclotomic(24).unwrap();
        let z = k.generator();
        assert_eq!(nth_root(&z.pow(4), 2).unwrap(), z.pow(2));
        assert_eq!(nth_root(&-k.one(), 2).unwrap(), z.pow(6));
        assert_eq!(nth_root(&(&k.from_i64(9) * &z.pow(10)), 2).unwrap(), &k.from_i64(3) * &z.pow(5));

        // cube roots of 2 mod 43, by scanning every residue
        let f43 = Field::finite(43, 1).unwrap();
        let two = f43.from_i64(2);
        let scan: Vec<u64> = (1..43).filter(|x| (x * x * x) % 43 == 2).collect();
        assert!(!scan.is_empty());
        let r = nth_root(&two, 3).unwrap();
        assert_eq!(r.as_prime_residue(), Some(scan[0]));

        let f4 = Field::finite(2, 2).unwrap();
        let g = f4.generator();
        assert_eq!(nth_root(&g, 2).unwrap().pow(2), g);
    }
}
