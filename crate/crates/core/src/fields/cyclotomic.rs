//! Arithmetic in the cyclotomic field Q(ζ_N).
//!
//! Elements are coordinate vectors over the power basis 1, ζ, …, ζ^(φ(N)−1),
//! i.e. residues modulo the N-th cyclotomic polynomial Φ_N. Reduction is
//! canonical, so two elements are equal iff their coordinates are equal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quo = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (k, dk) in den.iter().enumerate() {
            rem[i + k] -= &c * dk;
        }
        quo[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quo
}

pub(crate) struct CycloCtx {
    pub order: u32,
    pub degree: usize,
    /// Φ_N without its leading 1, lowest degree first.
    phi: Vec<BigRational>,
    /// ζ^k reduced, for k in 0..N.
    powers: Vec<Vec<BigRational>>,
    /// Exponents k coprime to N, in increasing order (Galois group).
    units: Vec<u32>,
}

impl CycloCtx {
    pub fn new(order: u32) -> Self {
        let phi_int = cyclotomic_polynomial(order);
        let degree = phi_int.len() - 1;
        let phi: Vec<BigRational> = phi_int[..degree]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut ctx = CycloCtx {
            order,
            degree,
            phi,
            powers: Vec::new(),
            units: (1..=order)
                .filter(|k| num_integer::gcd(*k, order) == 1)
                .map(|k| k % order)
                .collect(),
        };
        ctx.units.sort_unstable();
        let mut cur = ctx.zero();
        cur[0] = BigRational::one();
        for _ in 0..order {
            ctx.powers.push(cur.clone());
            cur = ctx.mul_by_gen(&cur);
        }
        debug_assert_eq!(cur, ctx.powers[0], "ζ^N must reduce to 1");
        ctx
    }

    pub fn zero(&self) -> Vec<BigRational> {
        vec![BigRational::zero(); self.degree]
    }

    pub fn power(&self, k: i64) -> &[BigRational] {
        &self.powers[k.rem_euclid(self.order as i64) as usize]
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree;
        for i in (d..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (k, pk) in self.phi.iter().enumerate() {
                if !pk.is_zero() {
                    v[i - d + k] -= &c * pk;
                }
            }
        }
        v.truncate(d);
        v
    }

    fn mul_by_gen(&self, a: &[BigRational]) -> Vec<BigRational> {
        let mut v = Vec::with_capacity(a.len() + 1);
        v.push(BigRational::zero());
        v.extend(a.iter().cloned());
        self.reduce(v)
    }

    pub fn is_rational(a: &[BigRational]) -> bool {
        a.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if Self::is_rational(a) {
            return scale(b, &a[0]);
        }
        if Self::is_rational(b) {
            return scale(a, &b[0]);
        }
        let mut v = vec![BigRational::zero(); 2 * self.degree - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    v[i + j] += ai * bj;
                }
            }
        }
        self.reduce(v)
    }

    /// Image of `a` under the automorphism ζ ↦ ζ^k.
    fn galois(&self, a: &[BigRational], k: u32) -> Vec<BigRational> {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let p = self.power(i as i64 * k as i64);
            for (o, pj) in out.iter_mut().zip(p) {
                if !pj.is_zero() {
                    *o += ai * pj;
                }
            }
        }
        out
    }

    /// Inverse via the product of the nontrivial Galois conjugates over the norm.
    pub fn inv(&self, a: &[BigRational]) -> Vec<BigRational> {
        if Self::is_rational(a) {
            let mut out = self.zero();
            out[0] = a[0].recip();
            return out;
        }
        let mut prod = self.zero();
        prod[0] = BigRational::one();
        for &k in &self.units {
            if k == 1 {
                continue;
            }
            prod = self.mul(&prod, &self.galois(a, k));
        }
        let norm = self.mul(a, &prod);
        debug_assert!(Self::is_rational(&norm));
        scale(&prod, &norm[0].recip())
    }

    /// If `a = c·ζ^k` with rational `c`, returns `(c, k)` preferring `c > 0`
    /// and the smallest such `k`.
    pub fn as_scaled_root_of_unity(&self, a: &[BigRational]) -> Option<(BigRational, u32)> {
        let mut negative = None;
        for k in 0..self.order {
            let b = self.mul(a, self.power(-(k as i64)));
            if Self::is_rational(&b) && !b[0].is_zero() {
                if b[0].is_positive() {
                    return Some((b[0].clone(), k));
                }
                if negative.is_none() {
                    negative = Some((b[0].clone(), k));
                }
            }
        }
        negative
    }
}

fn scale(a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    if c.is_zero() {
        return vec![BigRational::zero(); a.len()];
    }
    a.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(24), ints(&[1, 0, 0, 0, -1, 0, 0, 0, 1]));
    }

    #[test]
    fn inverse_roundtrip() {
        let ctx = CycloCtx::new(24);
        let mut a = ctx.zero();
        a[0] = BigRational::from_integer(3.into());
        a[1] = BigRational::from_integer((-2).into());
        a[5] = BigRational::new(1.into(), 7.into());
        let prod = ctx.mul(&a, &ctx.inv(&a));
        let mut one = ctx.zero();
        one[0] = BigRational::one();
        assert_eq!(prod, one);
    }
}
