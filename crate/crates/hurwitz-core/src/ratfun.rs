//! Rational functions of z: orders at places, principal divisors, linear
//! equivalence on the line, and residues of differentials `f dz`.
//!
//! Representatives are always reduced with a monic denominator, so
//! equality is plain structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::factor::factor;
use crate::rat::Rat;
use crate::series::PowerSeries;
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFun {
    num: UPoly,
    den: UPoly,
}

impl RatFun {
    /// Build `num/den`, reducing by the gcd and normalizing the
    /// denominator monic. Errors when `den` is zero.
    pub fn new(num: UPoly, den: UPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den)?;
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFun { num, den })
    }

    pub fn zero() -> RatFun {
        RatFun {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(UPoly::one())
    }

    pub fn constant(c: Rat) -> RatFun {
        RatFun::from_poly(UPoly::constant(c))
    }

    pub fn from_poly(num: UPoly) -> RatFun {
        RatFun {
            num,
            den: UPoly::one(),
        }
    }

    pub fn var() -> RatFun {
        RatFun::from_poly(UPoly::var())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn inverse(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFun) -> Result<RatFun> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, n: usize) -> RatFun {
        RatFun {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self) -> RatFun {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFun::new(num, den).expect("denominator is nonzero")
    }

    /// Exact evaluation; errors at a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Internal(format!(
                "evaluation at a pole z = {}",
                crate::rat::format_rat(x)
            )));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at a place. At a finite place this is the
    /// multiplicity in the numerator minus the multiplicity in the
    /// denominator; at infinity it is `deg den - deg num`.
    pub fn ord_at(&self, place: &Place) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(match place {
            Place::Finite(q) => {
                self.num.multiplicity_of(q) as i64 - self.den.multiplicity_of(q) as i64
            }
            Place::Infinity => {
                self.den.degree_nonzero() as i64 - self.num.degree_nonzero() as i64
            }
        })
    }

    /// The divisor of zeros minus poles, including the point at infinity.
    /// Its degree is exactly zero, re-checked on every call.
    pub fn principal_divisor(&self) -> Result<Divisor> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut div = Divisor::zero();
        for (q, k) in factor(&self.num)?.factors {
            div.add_place(Place::Finite(q), k as i64);
        }
        for (q, k) in factor(&self.den)?.factors {
            div.add_place(Place::Finite(q), -(k as i64));
        }
        div.add_place(
            Place::Infinity,
            self.den.degree_nonzero() as i64 - self.num.degree_nonzero() as i64,
        );
        if div.degree() != 0 {
            return Err(Error::Internal(format!(
                "principal divisor of {self} has degree {}",
                div.degree()
            )));
        }
        Ok(div)
    }
}

/// A witness `f` with `(f) = d1 - d2`, which exists on the line exactly
/// when the degrees agree; the infinity coefficient is absorbed by the
/// degree-zero constraint. Returns `None` on a degree mismatch.
pub fn linearly_equivalent_p1(d1: &Divisor, d2: &Divisor) -> Option<RatFun> {
    if d1.degree() != d2.degree() {
        return None;
    }
    let diff = d1.sub(d2);
    let mut num = UPoly::one();
    let mut den = UPoly::one();
    for (place, n) in diff.support() {
        if let Place::Finite(q) = place {
            if n > 0 {
                num = &num * &q.pow(n as usize);
            } else {
                den = &den * &q.pow((-n) as usize);
            }
        }
    }
    let witness = RatFun::new(num, den).expect("denominator nonzero");
    debug_assert_eq!(
        witness.principal_divisor().expect("witness nonzero"),
        diff
    );
    Some(witness)
}

/// Residue of the differential `f dz` at a rational finite place or at
/// infinity. Places of degree >= 2 would need trace forms and are
/// rejected.
pub fn residue_at(f: &RatFun, place: &Place) -> Result<Rat> {
    if f.is_zero() {
        return Ok(Rat::zero());
    }
    match place {
        Place::Finite(q) => {
            if q.degree_nonzero() != 1 {
                return Err(Error::UnsupportedPlace);
            }
            let m = f.den().multiplicity_of(q);
            if m == 0 {
                return Ok(Rat::zero());
            }
            let a = -q.coeff(0);
            // f = num / (q^m * g) with g(a) != 0; the residue is the
            // (m-1)-th Taylor coefficient of num/g at a
            let g = f.den().exact_div(&q.pow(m))?;
            let mut h = RatFun::new(f.num().clone(), g)?;
            for _ in 0..m - 1 {
                h = h.derivative();
            }
            let mut factorial = Rat::one();
            for k in 2..m {
                factorial *= Rat::from_integer(BigInt::from(k));
            }
            Ok(h.eval(&a)? / factorial)
        }
        Place::Infinity => {
            // substitute z = 1/t, dz = -dt/t^2: the residue at t = 0 is
            // minus the coefficient of t^(1-d) in rev(num)/rev(den), with
            // d = deg den - deg num
            let d = f.den().degree_nonzero() as i64 - f.num().degree_nonzero() as i64;
            let idx = 1 - d;
            if idx < 0 {
                return Ok(Rat::zero());
            }
            let trunc = idx as usize + 1;
            let rev_num = PowerSeries::from_upoly(&f.num().reversed(), trunc);
            let rev_den = PowerSeries::from_upoly(&f.den().reversed(), trunc);
            let u = rev_num.div(&rev_den)?;
            Ok(-u.coeff(idx as usize))
        }
    }
}

/// Sum the residues of `f dz` over every pole and infinity. Requires a
/// denominator that splits into degree-1 factors; the return value is
/// exactly zero by the residue theorem, and the caller is expected to
/// assert that.
pub fn residue_sum_check(f: &RatFun) -> Result<Rat> {
    if f.is_zero() {
        return Ok(Rat::zero());
    }
    let fac = factor(f.den())?;
    if fac.factors.iter().any(|(q, _)| q.degree() != Some(1)) {
        return Err(Error::NonSplitDenominator);
    }
    let mut sum = Rat::zero();
    for (q, _) in fac.factors {
        sum += residue_at(f, &Place::Finite(q))?;
    }
    sum += residue_at(f, &Place::Infinity)?;
    Ok(sum)
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::new(num, den).expect("denominator nonzero")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: (&self.num).neg(),
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        let num = &self.num * &rhs.num;
        let den = &self.den * &rhs.den;
        RatFun::new(num, den).expect("denominator nonzero")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}
