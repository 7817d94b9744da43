//! Division-free linear algebra over commutative rings.
//!
//! The composed operations all reduce to a norm `N(G) = ∏ G(α)` over the
//! roots α of a monic polynomial, which is the determinant of the
//! multiplication-by-`G` matrix in `R[z]/(f)`. Berkowitz's algorithm computes
//! that determinant without dividing, so it works for coefficient rings such
//! as `k[x]` or `k[x^±1, y]`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::fields::Fe;

/// A commutative ring element that can manufacture its own 0 and 1.
pub trait RingElem: Clone
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Neg<Output = Self>,
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
}

impl RingElem for Fe {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero(&self) -> bool {
        Fe::is_zero(self)
    }
}

/// Characteristic polynomial det(tI − A), highest degree first
/// (`[1, c_1, …, c_n]`). `A` must be square and nonempty.
pub fn berkowitz<R>(a: &[Vec<R>]) -> Vec<R>
where
    R: RingElem,
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    let n = a.len();
    assert!(n > 0 && a.iter().all(|row| row.len() == n), "square matrix required");
    let zero = a[0][0].zero_like();
    let one = a[0][0].one_like();
    let mut poly = vec![one.clone()];
    for r in 0..n {
        // Column of the Toeplitz matrix: 1, −a_rr, −R·C, −R·A·C, …, −R·A^{r−1}·C
        let mut col = Vec::with_capacity(r + 2);
        col.push(one.clone());
        col.push(-&a[r][r]);
        let mut vec_c: Vec<R> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(zero.clone(), |acc, i| &acc + &(&a[r][i] * &vec_c[i]));
            col.push(-&rc);
            vec_c = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, j| &acc + &(&a[i][j] * &vec_c[j])))
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = zero.clone();
            for (j, pj) in poly.iter().enumerate() {
                if j > i {
                    break;
                }
                let t = &col[i - j];
                if !t.is_zero() && !pj.is_zero() {
                    acc = &acc + &(t * pj);
                }
            }
            next.push(acc);
        }
        poly = next;
    }
    poly
}

pub fn determinant<R>(a: &[Vec<R>]) -> R
where
    R: RingElem,
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    let n = a.len();
    let cp = berkowitz(a);
    if n % 2 == 0 {
        cp[n].clone()
    } else {
        -&cp[n]
    }
}

/// `∏ g(α)` over the roots α of the monic polynomial `modulus` (both given
/// lowest degree first over the ring `R`), i.e. `Res(modulus, g)`.
pub fn norm_mod_monic<R>(modulus: &[R], g: &[R]) -> R
where
    R: RingElem,
    for<'a> &'a R: Add<&'a R, Output = R> + Sub<&'a R, Output = R> + Mul<&'a R, Output = R> + Neg<Output = R>,
{
    let m = modulus.len() - 1;
    assert!(m >= 1, "modulus must have positive degree");
    let zero = modulus[0].zero_like();
    let reduce = |mut v: Vec<R>| -> Vec<R> {
        for i in (m..v.len()).rev() {
            let c = std::mem::replace(&mut v[i], zero.clone());
            if c.is_zero() {
                continue;
            }
            for k in 0..m {
                if !modulus[k].is_zero() {
                    v[i - m + k] = &v[i - m + k] - &(&c * &modulus[k]);
                }
            }
        }
        v.truncate(m);
        v.resize(m, zero.clone());
        v
    };
    let mut col = reduce(g.to_vec());
    let mut cols = Vec::with_capacity(m);
    for i in 0..m {
        cols.push(col.clone());
        if i + 1 < m {
            let mut shifted = Vec::with_capacity(m + 1);
            shifted.push(zero.clone());
            shifted.extend(col.into_iter());
            col = reduce(shifted);
        }
    }
    let matrix: Vec<Vec<R>> = (0..m).map(|i| (0..m).map(|j| cols[j][i].clone()).collect()).collect();
    determinant(&matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;

    fn cofactor_det(a: &[Vec<Fe>]) -> Fe {
        let n = a.len();
        if n == 1 {
            return a[0][0].clone();
        }
        let mut acc = a[0][0].field().zero();
        for j in 0..n {
            let minor: Vec<Vec<Fe>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &a[0][j] * &cofactor_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn berkowitz_matches_cofactor_expansion() {
        let q = Field::rational();
        let mut seed = 7i64;
        for n in 1..=5 {
            let a: Vec<Vec<Fe>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            seed = (seed * 1103515245 + 12345) % 2147483648;
                            q.from_i64(seed % 11 - 5)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&a), cofactor_det(&a), "n = {n}");
        }
    }

    #[test]
    fn norm_of_linear_modulus_is_evaluation() {
        let q = Field::rational();
        let i = |v: i64| q.from_i64(v);
        // modulus z - 3, g = z^2 + 1  ->  g(3) = 10
        assert_eq!(norm_mod_monic(&[i(-3), i(1)], &[i(1), i(0), i(1)]), i(10));
        // modulus z^2 - 1, g = z - 3  ->  (1-3)(-1-3) = 8
        assert_eq!(norm_mod_monic(&[i(-1), i(0), i(1)], &[i(-3), i(1)]), i(8));
    }
}
