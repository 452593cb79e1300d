//! Dense polynomial arithmetic over Z/p for a small odd prime p, plus
//! distinct-degree and equal-degree factorization (Cantor-Zassenhaus).
//!
//! Only what the rational factorization driver needs; the "random"
//! elements of the equal-degree splitting come from a deterministic
//! counter so factorization is reproducible run to run.

use num_bigint::BigUint;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>, // lowest degree first, reduced mod p, trimmed
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl ZpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ZpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ZpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ZpPoly::new(p, vec![1])
    }

    pub fn var(p: u64) -> Self {
        ZpPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn make_monic(&self) -> ZpPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        let inv = invmod(self.lc(), self.p);
        ZpPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| mulmod(c, inv, self.p)).collect(),
        }
    }

    pub fn add(&self, rhs: &ZpPoly) -> ZpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + b) % self.p;
        }
        ZpPoly::new(self.p, coeffs)
    }

    pub fn sub(&self, rhs: &ZpPoly) -> ZpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *slot = (a + self.p - b) % self.p;
        }
        ZpPoly::new(self.p, coeffs)
    }

    pub fn mul(&self, rhs: &ZpPoly) -> ZpPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZpPoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        ZpPoly::new(self.p, coeffs)
    }

    pub fn rem(&self, b: &ZpPoly) -> ZpPoly {
        assert!(!b.is_zero(), "division by zero mod p");
        let db = b.degree().expect("nonzero");
        let mut r = self.coeffs.clone();
        let lb_inv = invmod(b.lc(), self.p);
        while r.len() > db {
            let lr = *r.last().expect("nonempty");
            if lr == 0 {
                r.pop();
                continue;
            }
            let q = mulmod(lr, lb_inv, self.p);
            let k = r.len() - 1 - db;
            for (i, &bc) in b.coeffs.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - mulmod(q, bc, self.p)) % self.p;
            }
            r.pop();
        }
        ZpPoly::new(self.p, r)
    }

    pub fn div_exact(&self, b: &ZpPoly) -> ZpPoly {
        assert!(!b.is_zero());
        let db = b.degree().expect("nonzero");
        let mut r = self.coeffs.clone();
        let lb_inv = invmod(b.lc(), self.p);
        let mut q = vec![0u64; r.len().saturating_sub(db)];
        while r.len() > db {
            let lr = *r.last().expect("nonempty");
            if lr == 0 {
                r.pop();
                continue;
            }
            let qc = mulmod(lr, lb_inv, self.p);
            let k = r.len() - 1 - db;
            q[k] = qc;
            for (i, &bc) in b.coeffs.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - mulmod(qc, bc, self.p)) % self.p;
            }
            r.pop();
        }
        debug_assert!(ZpPoly::new(self.p, r).is_zero(), "inexact division mod p");
        ZpPoly::new(self.p, q)
    }

    pub fn gcd(&self, rhs: &ZpPoly) -> ZpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*rhs = g, g monic.
    pub fn xgcd(&self, rhs: &ZpPoly) -> (ZpPoly, ZpPoly, ZpPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (ZpPoly::one(p), ZpPoly::zero(p));
        let (mut t0, mut t1) = (ZpPoly::zero(p), ZpPoly::one(p));
        while !r1.is_zero() {
            let q = r0.quot(&r1);
            let r = r0.sub(&q.mul(&r1));
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if !r0.is_zero() && r0.lc() != 1 {
            let inv = invmod(r0.lc(), p);
            let scale = ZpPoly::new(p, vec![inv]);
            r0 = r0.mul(&scale);
            s0 = s0.mul(&scale);
            t0 = t0.mul(&scale);
        }
        debug_assert_eq!(s0.mul(self).add(&t0.mul(rhs)), r0);
        (r0, s0, t0)
    }

    fn quot(&self, b: &ZpPoly) -> ZpPoly {
        let db = b.degree().expect("nonzero");
        if self.coeffs.len() <= db {
            return ZpPoly::zero(self.p);
        }
        let mut r = self.coeffs.clone();
        let lb_inv = invmod(b.lc(), self.p);
        let mut q = vec![0u64; r.len() - db];
        while r.len() > db {
            let lr = *r.last().expect("nonempty");
            if lr == 0 {
                r.pop();
                continue;
            }
            let qc = mulmod(lr, lb_inv, self.p);
            let k = r.len() - 1 - db;
            q[k] = qc;
            for (i, &bc) in b.coeffs.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - mulmod(qc, bc, self.p)) % self.p;
            }
            r.pop();
        }
        ZpPoly::new(self.p, q)
    }

    pub fn derivative(&self) -> ZpPoly {
        if self.coeffs.len() <= 1 {
            return ZpPoly::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mulmod(c, (k as u64) % self.p, self.p))
            .collect();
        ZpPoly::new(self.p, coeffs)
    }

    /// self^e mod f, square and multiply over the bits of e.
    pub fn pow_mod(&self, e: &BigUint, f: &ZpPoly) -> ZpPoly {
        let mut acc = ZpPoly::one(self.p);
        let mut base = self.rem(f);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(f);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(f);
            }
        }
        acc
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// returns pairs (product of all irreducible factors of degree d, d).
pub fn distinct_degree(f: &ZpPoly) -> Vec<(ZpPoly, usize)> {
    let p = f.p;
    let mut f = f.make_monic();
    let mut out = Vec::new();
    let mut h = ZpPoly::var(p);
    let mut d = 0usize;
    while f.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&BigUint::from(p), &f);
        let g = f.gcd(&h.sub(&ZpPoly::var(p)));
        if !g.is_one() {
            out.push((g.clone(), d));
            f = f.div_exact(&g);
            h = h.rem(&f);
        }
    }
    if f.degree().unwrap_or(0) > 0 {
        let d = f.degree().expect("nonconstant");
        out.push((f, d));
    }
    out
}

/// Equal-degree splitting: f is monic squarefree, a product of
/// irreducibles all of degree d. Candidates are enumerated
/// deterministically instead of sampled.
pub fn equal_degree(f: &ZpPoly, d: usize, counter: &mut u64) -> Vec<ZpPoly> {
    let deg = f.degree().expect("nonconstant input");
    if deg == d {
        return vec![f.make_monic()];
    }
    let p = f.p;
    let exponent = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let r = next_candidate(p, deg, counter);
        // a lucky gcd already splits
        let g = f.gcd(&r);
        if !g.is_one() && g.degree() != f.degree() {
            let rest = f.div_exact(&g);
            let mut out = equal_degree(&g, d, counter);
            out.extend(equal_degree(&rest, d, counter));
            return out;
        }
        let h = r.pow_mod(&exponent, f);
        let g = f.gcd(&h.sub(&ZpPoly::one(p)));
        if !g.is_one() && g.degree() != f.degree() {
            let rest = f.div_exact(&g);
            let mut out = equal_degree(&g, d, counter);
            out.extend(equal_degree(&rest, d, counter));
            return out;
        }
    }
}

/// Counter-indexed nonconstant polynomial of degree < deg, base-p digits.
fn next_candidate(p: u64, deg: usize, counter: &mut u64) -> ZpPoly {
    loop {
        *counter += 1;
        let mut c = *counter;
        let mut coeffs = Vec::with_capacity(deg);
        while c > 0 && coeffs.len() < deg {
            coeffs.push(c % p);
            c /= p;
        }
        let poly = ZpPoly::new(p, coeffs);
        if poly.degree().unwrap_or(0) >= 1 {
            return poly;
        }
    }
}
