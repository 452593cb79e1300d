//! Quadratic Hensel lifting of a modular factorization of a monic
//! integer polynomial, following the classical two-factor step (lift
//! `f = g*h` together with the Bezout pair) applied along a factor tree.
//!
//! Polynomials here are dense `Vec<BigInt>` with coefficients reduced
//! into `[0, m)`; the driver converts to symmetric representatives when
//! it recombines candidates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type IPoly = Vec<BigInt>;

fn trim(mut p: IPoly) -> IPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn reduce(p: &[BigInt], m: &BigInt) -> IPoly {
    trim(p.iter().map(|c| c.mod_floor_ref(m)).collect())
}

trait ModFloorRef {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt;
}

impl ModFloorRef for BigInt {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigInt::zero();
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor_ref(m));
    }
    trim(out)
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let zero = BigInt::zero();
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero);
        out.push(x.mod_floor_ref(m));
    }
    trim(out)
}

pub fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out.into_iter().map(|c| c.mod_floor_ref(m)).collect())
}

/// Division with remainder by a monic divisor, mod m.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (IPoly, IPoly) {
    let db = b.len() - 1;
    debug_assert!(b.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let mut r: IPoly = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let lr = r.last().expect("nonempty").clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let k = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            let t = (&lr * bc).mod_floor_ref(m);
            r[k + i] = (&r[k + i] - t).mod_floor_ref(m);
        }
        q[k] = lr;
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
    }
    (trim(q), trim(r))
}

/// One quadratic step: from `f = g*h (mod m)` with Bezout pair
/// `s*g + t*h = 1 (mod m)` to the same data mod `m^2`. All of f, g, h are
/// monic and stay monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (IPoly, IPoly, IPoly, IPoly) {
    let m2 = m * m;
    let e = sub(f, &mul(g, h, &m2), &m2);
    let (q, r) = divrem_monic(&mul(s, &e, &m2), h, &m2);
    let g1 = add(&add(g, &mul(t, &e, &m2), &m2), &mul(&q, g, &m2), &m2);
    let h1 = add(h, &r, &m2);
    let b = sub(
        &add(&mul(s, &g1, &m2), &mul(t, &h1, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = divrem_monic(&mul(s, &b, &m2), &h1, &m2);
    let s1 = sub(s, &d, &m2);
    let t1 = sub(&sub(t, &mul(t, &b, &m2), &m2), &mul(&c, &g1, &m2), &m2);
    (g1, h1, s1, t1)
}

/// Lift the factorization `f = prod(factors) (mod p)` of a monic integer
/// polynomial to modulus `p^(2^k) >= target`; returns the lifted monic
/// factors and the modulus actually reached.
pub fn lift_factorization(
    f: &[BigInt],
    factors: &[super::modp::ZpPoly],
    p: u64,
    target: &BigInt,
) -> (Vec<IPoly>, BigInt) {
    let mut modulus = BigInt::from(p);
    while modulus < *target {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_tree(&reduce(f, &modulus), factors, p, &modulus);
    (lifted, modulus)
}

fn lift_tree(f: &[BigInt], factors: &[super::modp::ZpPoly], p: u64, modulus: &BigInt) -> Vec<IPoly> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let g0 = left
        .iter()
        .fold(super::modp::ZpPoly::one(p), |acc, q| acc.mul(q));
    let h0 = right
        .iter()
        .fold(super::modp::ZpPoly::one(p), |acc, q| acc.mul(q));
    let (one, s0, t0) = g0.xgcd(&h0);
    debug_assert!(one.is_one(), "modular factors must be pairwise coprime");

    let mut m = BigInt::from(p);
    let mut g = zp_to_ipoly(&g0);
    let mut h = zp_to_ipoly(&h0);
    let mut s = zp_to_ipoly(&s0);
    let mut t = zp_to_ipoly(&t0);
    while m < *modulus {
        let (g1, h1, s1, t1) = hensel_step(&reduce(f, &(&m * &m)), &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    // m may exceed `modulus`; bring everything back down
    let g = reduce(&g, modulus);
    let h = reduce(&h, modulus);

    let mut out = lift_tree(&g, left, p, modulus);
    out.extend(lift_tree(&h, right, p, modulus));
    out
}

fn zp_to_ipoly(q: &super::modp::ZpPoly) -> IPoly {
    q.coeffs.iter().map(|&c| BigInt::from(c)).collect()
}

/// Convert a residue in [0, m) to the symmetric representative in
/// (-m/2, m/2].
pub fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let half = m >> 1;
    if c > &half {
        c - m
    } else {
        c.clone()
    }
}
