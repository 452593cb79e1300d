//! Places and divisors of the rational function field in z.
//!
//! A place is a closed point of the projective line over Q: a monic
//! irreducible polynomial for the finite points (conjugate algebraic
//! points are bundled into one place of higher degree) or the point at
//! infinity. Degrees weight all counting, which is what keeps the
//! "principal divisors have degree zero" theorem exactly true over the
//! rationals.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    /// A monic irreducible polynomial of degree >= 1.
    Finite(UPoly),
    Infinity,
}

impl Place {
    /// Validating constructor for finite places: the polynomial is monic-
    /// normalized, then checked for irreducibility.
    pub fn finite(q: &UPoly) -> Result<Place> {
        if q.is_zero() || q.is_constant() {
            return Err(Error::ConstantPlace);
        }
        let q = q.monic();
        if !is_irreducible(&q)? {
            return Err(Error::NotIrreducible {
                poly: q.to_string(),
            });
        }
        Ok(Place::Finite(q))
    }

    /// A degree-1 place `z - a`.
    pub fn rational_point(a: crate::rat::Rat) -> Place {
        Place::Finite(UPoly::from_coeffs(vec![-a, crate::rat::rat_int(1)]))
    }

    pub fn infinity() -> Place {
        Place::Infinity
    }

    /// Residue degree: the polynomial degree for finite places, 1 at
    /// infinity.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(q) => q.degree_nonzero(),
            Place::Infinity => 1,
        }
    }

    pub fn polynomial(&self) -> Option<&UPoly> {
        match self {
            Place::Finite(q) => Some(q),
            Place::Infinity => None,
        }
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => std::cmp::Ordering::Equal,
            (Place::Infinity, _) => std::cmp::Ordering::Greater,
            (_, Place::Infinity) => std::cmp::Ordering::Less,
            (Place::Finite(a), Place::Finite(b)) => {
                a.degree().cmp(&b.degree()).then_with(|| a.cmp(b))
            }
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(q) => write!(f, "({q})"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// A finite formal integer combination of places. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    coeffs: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Divisor {
        Divisor::default()
    }

    /// `n * place`.
    pub fn of(place: Place, n: i64) -> Divisor {
        let mut d = Divisor::zero();
        d.add_place(place, n);
        d
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Place, i64)>) -> Divisor {
        let mut d = Divisor::zero();
        for (p, n) in pairs {
            d.add_place(p, n);
        }
        d
    }

    pub fn add_place(&mut self, place: Place, n: i64) {
        if n == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(place) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += n;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(n);
            }
        }
    }

    pub fn coefficient(&self, place: &Place) -> i64 {
        self.coeffs.get(place).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.coeffs.iter().map(|(p, &n)| (p, n))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_places(&self) -> usize {
        self.coeffs.len()
    }

    /// Degree: coefficients weighted by place degree.
    pub fn degree(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(p, &n)| n * p.degree() as i64)
            .sum()
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, n) in other.support() {
            out.add_place(p.clone(), n);
        }
        out
    }

    pub fn neg(&self) -> Divisor {
        Divisor {
            coeffs: self.coeffs.iter().map(|(p, &n)| (p.clone(), -n)).collect(),
        }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::zero();
        }
        Divisor {
            coeffs: self.coeffs.iter().map(|(p, &n)| (p.clone(), k * n)).collect(),
        }
    }

    /// All coefficients nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&n| n >= 0)
    }

    /// `self >= other` in the effectivity order.
    pub fn dominates(&self, other: &Divisor) -> bool {
        self.sub(other).is_effective()
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, n) in self.support() {
            if first {
                if n < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if n < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", n.abs(), p)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn z_place() -> Place {
        Place::rational_point(rat_int(0))
    }

    #[test]
    fn finite_place_validates_irreducibility() {
        assert!(Place::finite(&UPoly::from_int_coeffs(&[1, 0, 1])).is_ok());
        assert!(matches!(
            Place::finite(&UPoly::from_int_coeffs(&[-1, 0, 1])),
            Err(Error::NotIrreducible { .. })
        ));
        assert!(matches!(
            Place::finite(&UPoly::one()),
            Err(Error::ConstantPlace)
        ));
        // non-monic input is normalized
        let p = Place::finite(&UPoly::from_int_coeffs(&[2, 2])).unwrap();
        assert_eq!(p, Place::rational_point(rat_int(-1)));
    }

    #[test]
    fn degree_weights_by_place_degree() {
        // D = {(z^2+1): 1} has degree 2
        let p = Place::finite(&UPoly::from_int_coeffs(&[1, 0, 1])).unwrap();
        assert_eq!(Divisor::of(p, 1).degree(), 2);

        // D = {(z): 2, inf: 1} has degree 3 and is effective
        let d = Divisor::from_pairs([(z_place(), 2), (Place::Infinity, 1)]);
        assert_eq!(d.degree(), 3);
        assert!(d.is_effective());
        assert!(d.dominates(&Divisor::zero()));
        assert!(!Divisor::zero().dominates(&d));
    }

    #[test]
    fn group_laws_and_cancellation() {
        let d1 = Divisor::from_pairs([(z_place(), 2), (Place::Infinity, -1)]);
        let d2 = Divisor::from_pairs([(z_place(), -2), (Place::Infinity, 3)]);
        let sum = d1.add(&d2);
        // the (z) coefficients cancel and must not be stored
        assert_eq!(sum.num_places(), 1);
        assert_eq!(sum.coefficient(&Place::Infinity), 2);
        assert_eq!(sum.degree(), d1.degree() + d2.degree());
        assert!(d1.add(&d1.neg()).is_zero());
    }

    #[test]
    fn display_matches_cli_syntax() {
        let d = Divisor::from_pairs([
            (z_place(), 2),
            (
                Place::finite(&UPoly::from_int_coeffs(&[1, 0, 1])).unwrap(),
                1,
            ),
            (Place::Infinity, -3),
        ]);
        assert_eq!(d.to_string(), "2*(z) + 1*(z^2 + 1) - 3*inf");
        assert_eq!(Divisor::zero().to_string(), "0");
    }
}
