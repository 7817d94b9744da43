//! Arithmetic in F_{p^e} = F_p[t]/(m(t)) and the extension-building search.

use crate::error::{Error, Result};

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut k: u128, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        k >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero in F_{p}");
    powmod(a, p as u128 - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, increasing.
pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) struct FiniteCtx {
    pub p: u64,
    pub e: usize,
    /// Monic modulus, lowest degree first, length e + 1.
    pub modulus: Vec<u64>,
    pub order: u128,
}

impl FiniteCtx {
    pub fn new(p: u64, modulus: Vec<u64>) -> Self {
        let e = modulus.len() - 1;
        FiniteCtx {
            p,
            e,
            order: (p as u128).pow(e as u32),
            modulus,
        }
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.e]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(x, y)| {
                let s = x + y;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            })
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        if self.e == 1 {
            return vec![mulmod(a[0], b[0], p)];
        }
        let mut r = vec![0u128; 2 * self.e - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x as u128 * y as u128) % p as u128;
            }
        }
        let mut r: Vec<u64> = r.into_iter().map(|x| x as u64).collect();
        poly_reduce(&mut r, &self.modulus, p);
        r.resize(self.e, 0);
        r
    }

    pub fn pow(&self, a: &[u64], mut k: u128) -> Vec<u64> {
        let mut r = self.zero();
        r[0] = 1 % self.p;
        let mut base = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        r
    }

    pub fn inv(&self, a: &[u64]) -> Vec<u64> {
        assert!(a.iter().any(|&x| x != 0), "inverse of zero in F_q");
        if self.e == 1 {
            return vec![invmod(a[0], self.p)];
        }
        self.pow(a, self.order - 2)
    }

    /// The `index`-th element in coordinate-lexicographic order (constant
    /// coordinate most significant).
    pub fn element(&self, mut index: u128) -> Vec<u64> {
        let mut v = self.zero();
        for slot in v.iter_mut().rev() {
            *slot = (index % self.p as u128) as u64;
            index /= self.p as u128;
        }
        v
    }
}

// ---- polynomials over F_p as coefficient vectors (lowest degree first) ----

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

/// Reduce `r` in place modulo the monic polynomial `m`.
pub(crate) fn poly_reduce(r: &mut Vec<u64>, m: &[u64], p: u64) {
    let d = m.len() - 1;
    if d == 0 {
        r.clear();
        r.push(0);
        return;
    }
    for i in (d..r.len()).rev() {
        let c = r[i];
        if c == 0 {
            continue;
        }
        for k in 0..=d {
            r[i - d + k] = (r[i - d + k] + mulmod(p - c, m[k], p)) % p;
        }
    }
    r.truncate(d);
    if r.is_empty() {
        r.push(0);
    }
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_reduce(&mut r, m, p);
    r
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut r: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut r);
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !poly_is_zero(&b) {
        let inv = invmod(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| mulmod(c, inv, p)).collect();
        let mut r = a.clone();
        if r.len() >= monic.len() {
            poly_reduce(&mut r, &monic, p);
        }
        trim(&mut r);
        a = monic;
        b = r;
    }
    a
}

/// x^(p^k) mod m by repeated p-th powering.
fn x_pow_p_iter(m: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut r = vec![0, 1];
    poly_reduce(&mut r, m, p);
    for _ in 0..k {
        let mut acc = vec![1u64];
        let mut base = r.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, m, p);
            }
            base = poly_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        r = acc;
    }
    r
}

/// Rabin's irreducibility test for a monic polynomial over the prime field F_p.
pub fn is_irreducible_mod_p(m: &[u64], p: u64) -> bool {
    let n = m.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let full = x_pow_p_iter(m, p, n);
    if !poly_is_zero(&poly_sub(&full, &x, p)) {
        return false;
    }
    for r in prime_factors(n as u128) {
        let h = x_pow_p_iter(m, p, n / r as usize);
        let g = poly_gcd(m, &poly_sub(&h, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Smallest monic irreducible of degree `e` over F_p, comparing coefficient
/// vectors lexicographically from the constant term upward.
pub fn smallest_irreducible(p: u64, e: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidConfig(format!("{p} is not prime")));
    }
    if e == 0 {
        return Err(Error::InvalidConfig("extension degree must be positive".into()));
    }
    let e = e as usize;
    let total = (p as u128).pow(e as u32);
    // the constant term is the leading digit; for e > 1 a zero constant
    // means divisibility by x, so that whole block is skipped
    let start = if e > 1 { total / p as u128 } else { 0 };
    for idx in start..total {
        let mut m = vec![0u64; e + 1];
        let mut k = idx;
        for slot in m[..e].iter_mut().rev() {
            *slot = (k % p as u128) as u64;
            k /= p as u128;
        }
        m[e] = 1;
        if is_irreducible_mod_p(&m, p) {
            return Ok(m);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
