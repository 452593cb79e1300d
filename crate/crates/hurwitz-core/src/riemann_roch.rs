//! Riemann-Roch spaces on the genus-0 line, with explicit bases.
//!
//! `L(D)` is the space of rational functions f with `(f) + D >= 0`; on
//! the line its dimension is `max(0, deg D + 1)` and a basis can be
//! written down directly: clear the finite part of D with a fixed
//! function, then multiply by powers of z. Linear independence holds by
//! construction because the order at infinity strictly decreases along
//! the basis. Every produced element is still re-verified against the
//! membership condition.
//!
//! The basis constructors are specific to genus 0 and say so in their
//! names; only the Euler characteristic takes the genus as a parameter.

use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::rat::rat_int;
use crate::ratfun::RatFun;
use crate::upoly::UPoly;

/// Basis of `L(D)` together with its dimension.
#[derive(Debug, Clone)]
pub struct LSpaceBasis {
    pub divisor: Divisor,
    pub basis: Vec<RatFun>,
    pub dimension: usize,
}

/// Basis of the differentials `omega` with `(omega) >= D`, each element
/// stored as the rational coefficient f of `omega = f dz`.
#[derive(Debug, Clone)]
pub struct OmegaBasis {
    pub divisor: Divisor,
    pub basis: Vec<RatFun>,
    pub dimension: usize,
}

/// Outcome of checking `dim L(D) - dim L(K - D) = deg D - g + 1` with
/// g = 0. The two sides are computed independently; imbalance cannot
/// happen and is reported as an internal error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannRochCheck {
    pub divisor_degree: i64,
    pub dim_l_d: usize,
    pub dim_l_k_minus_d: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Explicit basis of L(D) on the line.
///
/// For `deg D < 0` the space is zero. Otherwise, with `f0` the product of
/// `q^(-n_q)` over the finite places of D, the basis is
/// `{f0 * z^k : 0 <= k <= deg D}`.
pub fn lspace_basis_p1(divisor: &Divisor) -> Result<LSpaceBasis> {
    let deg = divisor.degree();
    if deg < 0 {
        return Ok(LSpaceBasis {
            divisor: divisor.clone(),
            basis: Vec::new(),
            dimension: 0,
        });
    }
    let mut num = UPoly::one();
    let mut den = UPoly::one();
    for (place, n) in divisor.support() {
        if let Place::Finite(q) = place {
            if n < 0 {
                num = &num * &q.pow((-n) as usize);
            } else {
                den = &den * &q.pow(n as usize);
            }
        }
    }
    let f0 = RatFun::new(num, den)?;
    let mut basis = Vec::with_capacity(deg as usize + 1);
    for k in 0..=deg as usize {
        let elem = &f0 * &RatFun::from_poly(UPoly::monomial(rat_int(1), k));
        // membership re-check: (elem) + D >= 0
        let pd = elem.principal_divisor()?;
        if !pd.add(divisor).is_effective() {
            return Err(Error::Internal(format!(
                "basis element {elem} fails membership for {divisor}"
            )));
        }
        basis.push(elem);
    }
    Ok(LSpaceBasis {
        divisor: divisor.clone(),
        dimension: basis.len(),
        basis,
    })
}

/// The divisor of dz on the line: a double pole at infinity.
pub fn canonical_divisor_p1() -> Divisor {
    Divisor::of(Place::Infinity, -2)
}

/// Basis of the differentials with `(omega) >= D`, as the image of
/// `L(K - D)` under `f -> f dz`.
pub fn omega_basis_p1(divisor: &Divisor) -> Result<OmegaBasis> {
    let l = lspace_basis_p1(&canonical_divisor_p1().sub(divisor))?;
    // (f dz) = (f) + K must dominate D; re-check each image element
    let k = canonical_divisor_p1();
    for f in &l.basis {
        let omega_div = f.principal_divisor()?.add(&k);
        if !omega_div.dominates(divisor) {
            return Err(Error::Internal(format!(
                "differential {f} dz fails (omega) >= {divisor}"
            )));
        }
    }
    Ok(OmegaBasis {
        divisor: divisor.clone(),
        dimension: l.dimension,
        basis: l.basis,
    })
}

/// Verify the genus-0 identity `dim L(D) - dim L(K-D) = deg D + 1`.
pub fn riemann_roch_verify_p1(divisor: &Divisor) -> Result<RiemannRochCheck> {
    let dim_l_d = lspace_basis_p1(divisor)?.dimension;
    let dim_l_k_minus_d = lspace_basis_p1(&canonical_divisor_p1().sub(divisor))?.dimension;
    let lhs = dim_l_d as i64 - dim_l_k_minus_d as i64;
    let rhs = euler_characteristic(divisor, 0);
    if lhs != rhs {
        return Err(Error::Internal(format!(
            "Riemann-Roch imbalance on {divisor}: {lhs} != {rhs}"
        )));
    }
    Ok(RiemannRochCheck {
        divisor_degree: divisor.degree(),
        dim_l_d,
        dim_l_k_minus_d,
        lhs,
        rhs,
    })
}

/// `chi(D) = deg D - g + 1`.
pub fn euler_characteristic(divisor: &Divisor, genus: u32) -> i64 {
    divisor.degree() - genus as i64 + 1
}
