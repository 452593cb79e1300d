//! Superelliptic covers `w^m = f(z)`: geometric irreducibility check,
//! ramification profile over the line, and the genus via Riemann-Hurwitz.
//!
//! Roots of f are never enumerated. Ramification is computed per
//! squarefree factor: above a root of multiplicity k there are
//! `gcd(m, k)` points, each with ramification index `m / gcd(m, k) - 1`,
//! and above infinity the same rule applies with k replaced by `deg f`.
//! Everything is weighted by factor degree, which keeps the computation
//! exact over the rationals.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rat::is_rational_fourth_power;
use crate::upoly::UPoly;

/// The curve `w^m = f(z)`, validated geometrically irreducible at
/// construction; the squarefree factorization of f is cached.
#[derive(Debug, Clone)]
pub struct SuperCurve {
    m: u32,
    f: UPoly,
    squarefree_parts: Vec<(UPoly, usize)>,
}

impl SuperCurve {
    pub fn new(m: u32, f: UPoly) -> Result<SuperCurve> {
        if m < 2 {
            return Err(Error::SheetCountTooSmall { min: 2 });
        }
        if !check_geometric_irreducibility(m, &f)? {
            return Err(Error::ReducibleCurve {
                m,
                reason: reducibility_reason(m, &f)?,
            });
        }
        Ok(SuperCurve {
            m,
            squarefree_parts: f.squarefree_factorization()?,
            f,
        })
    }

    pub fn sheets(&self) -> u32 {
        self.m
    }

    pub fn f(&self) -> &UPoly {
        &self.f
    }
}

/// Is `w^m - f(z)` irreducible over the algebraic closure of Q joined
/// with z? True exactly when no prime divisor of m divides the gcd of
/// the multiplicities in the squarefree factorization of f.
///
/// When `4 | m` and f has the classical `-4 h^4` shape the standard
/// criterion needs its exceptional clause; this check refuses to decide
/// and errors out instead.
pub fn check_geometric_irreducibility(m: u32, f: &UPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        // constants are m-th powers over the algebraic closure
        return Ok(false);
    }
    let parts = f.squarefree_factorization()?;
    let mult_gcd = parts.iter().fold(0usize, |acc, (_, k)| acc.gcd(k));
    if m % 4 == 0 && mult_gcd % 4 == 0 && is_rational_fourth_power(&(-f.leading_coeff() / crate::rat::rat_int(4))) {
        return Err(Error::IndeterminateIrreducibility);
    }
    for q in prime_divisors(m) {
        if mult_gcd % q as usize == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn reducibility_reason(m: u32, f: &UPoly) -> Result<String> {
    let parts = f.squarefree_factorization()?;
    let mult_gcd = parts.iter().fold(0usize, |acc, (_, k)| acc.gcd(k));
    for q in prime_divisors(m) {
        if mult_gcd % q as usize == 0 {
            return Ok(format!(
                "every multiplicity in f is divisible by the prime {q} dividing m"
            ));
        }
    }
    Ok("f is constant".to_string())
}

fn prime_divisors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Base locus of a profile entry: the roots of a squarefree polynomial,
/// or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseLocus {
    Roots(UPoly),
    Infinity,
}

impl fmt::Display for BaseLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseLocus::Roots(q) => write!(f, "roots of {q}"),
            BaseLocus::Infinity => write!(f, "inf"),
        }
    }
}

/// One fiber class of the covering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub locus: BaseLocus,
    /// Number of geometric base points in the locus.
    pub base_weight: usize,
    /// Points of the curve above each base point: `gcd(m, k)`.
    pub points_per_root: u32,
    /// Ramification index of each such point: `m / gcd(m, k) - 1`.
    pub index_per_point: u32,
}

impl ProfileEntry {
    /// `sum over the fiber of (index + 1)`, which must equal the sheet
    /// count.
    pub fn fiber_degree(&self) -> u32 {
        self.points_per_root * (self.index_per_point + 1)
    }

    /// Contribution to the total ramification V.
    pub fn index_contribution(&self) -> i64 {
        self.base_weight as i64 * self.points_per_root as i64 * self.index_per_point as i64
    }
}

/// Complete branch data of `w^m = f(z)` over the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    pub sheets: u32,
    pub entries: Vec<ProfileEntry>,
    /// V, the sum of all ramification indices weighted by base degree.
    pub total_index: i64,
}

/// Branch data per squarefree factor and at infinity. The sheet-count
/// identity `sum(index + 1) = m` holds for every entry by construction
/// and is re-verified before returning.
pub fn ramification_profile(curve: &SuperCurve) -> Result<RamificationProfile> {
    let m = curve.m;
    let mut entries = Vec::new();
    for (q, k) in &curve.squarefree_parts {
        let d = m.gcd(&(*k as u32));
        entries.push(ProfileEntry {
            locus: BaseLocus::Roots(q.clone()),
            base_weight: q.degree_nonzero(),
            points_per_root: d,
            index_per_point: m / d - 1,
        });
    }
    let n = curve.f.degree_nonzero() as u32;
    let d = m.gcd(&n);
    entries.push(ProfileEntry {
        locus: BaseLocus::Infinity,
        base_weight: 1,
        points_per_root: d,
        index_per_point: m / d - 1,
    });
    let profile = RamificationProfile {
        sheets: m,
        total_index: entries.iter().map(ProfileEntry::index_contribution).sum(),
        entries,
    };
    if !sheet_count_identity_check(&profile) {
        return Err(Error::Internal(
            "a fiber does not sum to the sheet count".to_string(),
        ));
    }
    Ok(profile)
}

/// Every fiber satisfies `sum(index + 1) = m`.
pub fn sheet_count_identity_check(profile: &RamificationProfile) -> bool {
    profile
        .entries
        .iter()
        .all(|e| e.fiber_degree() == profile.sheets)
}

/// `g = m(0 - 1) + 1 + V/2` over the genus-0 base. An odd V or a
/// negative result signals an internal profile bug.
pub fn genus_superelliptic(curve: &SuperCurve) -> Result<i64> {
    let profile = ramification_profile(curve)?;
    genus_from_profile(&profile)
}

pub fn genus_from_profile(profile: &RamificationProfile) -> Result<i64> {
    let v = profile.total_index;
    if v % 2 != 0 {
        return Err(Error::OddRamificationTotal { v });
    }
    let genus = -(profile.sheets as i64) + 1 + v / 2;
    if genus < 0 {
        return Err(Error::NegativeGenus { genus });
    }
    Ok(genus)
}
