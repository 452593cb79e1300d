//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`: always reduced, denominator
//! positive, zero stored as 0/1. Everything in this crate computes over
//! `Rat`; no floating point appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// True if `x` is the square of a rational.
///
/// Both numerator and denominator of the reduced form must be perfect
/// integer squares (and the sign nonnegative).
pub fn is_rational_square(x: &Rat) -> bool {
    if x.is_negative() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    is_perfect_square(x.numer()) && is_perfect_square(x.denom())
}

/// True if `x = r^4` for some rational `r`.
pub fn is_rational_fourth_power(x: &Rat) -> bool {
    if x.is_negative() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    is_perfect_nth_power(x.numer(), 4) && is_perfect_nth_power(x.denom(), 4)
}

fn is_perfect_square(n: &BigInt) -> bool {
    is_perfect_nth_power(n, 2)
}

fn is_perfect_nth_power(n: &BigInt, k: u32) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.nth_root(k);
    num_traits::pow(r, k as usize) == *n
}

/// Format a rational the way the expression parser reads it back:
/// plain integer when the denominator is one, `p/q` otherwise.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
