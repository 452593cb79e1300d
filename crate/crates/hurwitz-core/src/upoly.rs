//! Univariate polynomials over the rationals, exact.
//!
//! Coefficients are stored lowest degree first with the leading
//! coefficient nonzero; the zero polynomial is the empty vector and its
//! degree is `None` rather than an integer sentinel.
//!
//! The gcd goes through integer primitive parts and a primitive pseudo-
//! remainder sequence, so coefficients stay small where naive rational
//! Euclid explodes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    /// The variable itself, `z`.
    pub fn var() -> Self {
        UPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c * z^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UPoly::from_coeffs(coeffs)
    }

    /// Build from coefficients, lowest degree first; trailing zeros are
    /// trimmed so the representation is canonical.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UPoly::from_coeffs(coeffs.iter().map(|&c| crate::rat::rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree_nonzero(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rat::one() / lc))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = UPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
            .collect();
        UPoly::from_coeffs(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, g: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Coefficient reversal: `z^deg * p(1/z)`. Zero maps to zero.
    pub fn reversed(&self) -> UPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        UPoly::from_coeffs(coeffs)
    }

    /// Quotient and remainder with `deg r < deg b`. Errors on `b == 0`.
    pub fn div_rem(&self, b: &UPoly) -> Result<(UPoly, UPoly)> {
        if b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let db = b.degree_nonzero();
        let mut rem = self.coeffs.clone();
        if rem.len() < db + 1 {
            return Ok((UPoly::zero(), self.clone()));
        }
        let lb = b.leading_coeff();
        let mut quot = vec![Rat::zero(); rem.len() - db];
        while rem.len() >= db + 1 {
            let last = rem.last().expect("nonempty").clone();
            if last.is_zero() {
                rem.pop();
                continue;
            }
            let k = rem.len() - 1 - db;
            let q = last / lb.clone();
            for (i, bc) in b.coeffs.iter().enumerate() {
                let t = &q * bc;
                rem[k + i] -= t;
            }
            quot[k] = q;
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((UPoly::from_coeffs(quot), UPoly::from_coeffs(rem)))
    }

    /// Exact quotient; errors internally if the division leaves a remainder.
    pub fn exact_div(&self, b: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(b)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "exact division left remainder {r}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other
            .div_rem(self)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    /// Multiplicity of the (nonconstant) factor `q` in `self`.
    pub fn multiplicity_of(&self, q: &UPoly) -> usize {
        debug_assert!(!q.is_constant());
        let mut f = self.clone();
        let mut m = 0;
        if f.is_zero() {
            return 0;
        }
        loop {
            match f.div_rem(q) {
                Ok((quot, rem)) if rem.is_zero() => {
                    m += 1;
                    f = quot;
                }
                _ => return m,
            }
        }
    }

    /// Monic gcd via integer primitive parts and a primitive pseudo-
    /// remainder sequence. `gcd(f, 0)` is the monic normalization of `f`;
    /// `gcd(0, 0)` is an error.
    pub fn gcd(&self, other: &UPoly) -> Result<UPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let mut r0 = self.primitive_integer_coeffs();
        let mut r1 = other.primitive_integer_coeffs();
        if int_deg(&r0) < int_deg(&r1) {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_empty() {
            let rem = int_primitive_part(pseudo_rem(&r0, &r1));
            r0 = r1;
            r1 = rem;
        }
        Ok(UPoly::from_coeffs(
            r0.into_iter().map(Rat::from_integer).collect(),
        )
        .monic())
    }

    /// True if `gcd(f, f') ` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.is_one())
    }

    /// Yun's squarefree factorization: monic pairwise-coprime squarefree
    /// parts with their multiplicities, lowest multiplicity first, so that
    /// `f = lc(f) * prod q_i^{k_i}`.
    pub fn squarefree_factorization(&self) -> Result<Vec<(UPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let deriv = f.derivative();
        let d = f.gcd(&deriv)?;
        if d.is_one() {
            return Ok(vec![(f, 1)]);
        }
        let mut parts = Vec::new();
        let mut b = f.exact_div(&d)?;
        let c = deriv.exact_div(&d)?;
        let mut step = &c - &b.derivative();
        let mut i = 1usize;
        while !b.is_constant() {
            let a = b.gcd(&step)?;
            b = b.exact_div(&a)?;
            step = if step.is_zero() {
                &UPoly::zero() - &b.derivative()
            } else {
                &step.exact_div(&a)? - &b.derivative()
            };
            if !a.is_constant() {
                parts.push((a, i));
            }
            i += 1;
        }
        Ok(parts)
    }

    /// Write `f = content * prim` with `prim` an integer-coefficient
    /// polynomial that is primitive with positive leading coefficient.
    pub fn integer_content_and_primitive(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut num_gcd = BigInt::zero();
        for c in &ints {
            num_gcd = num_gcd.gcd(c);
        }
        if ints.last().expect("nonzero").is_negative() {
            num_gcd = -num_gcd;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &num_gcd).collect();
        (Rat::new(num_gcd, den_lcm), prim)
    }

    fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        self.integer_content_and_primitive().1
    }
}

fn int_deg(p: &[BigInt]) -> isize {
    p.len() as isize - 1
}

fn int_primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut g = BigInt::zero();
    for c in &p {
        g = g.gcd(c);
    }
    if p.last().expect("nonempty").is_negative() {
        g = -g;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder of `a` by `b` over the integers: scale `a` by powers
/// of `lc(b)` as needed so every cancellation step stays integral.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() > db {
        let lr = r.last().expect("nonempty").clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let k = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &lr * bc;
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
    }
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", format_rat(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_rat(&abs))?;
                }
                if k == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{k}")?;
                }
            }
        }
        Ok(())
    }
}
