//! The Riemann-Hurwitz genus formula for arbitrary covering data, and
//! the end-to-end genus computation of the Kowalewski curve
//! `(w^2 - 1)((w^2 - 1) z^4 - p(z)) + c = 0` with `p = a z^2 - 2b z - 1`.
//!
//! For a degree-m covering of a genus-`g(Y)` surface with ramification
//! total V, the covering surface has
//! `g(X) = m (g(Y) - 1) + 1 + V/2`, equivalently
//! `2 g(X) - 2 = m (2 g(Y) - 2) + V`.

use crate::error::{Error, Result};
use crate::hyperelliptic::HypCurve;
use crate::rat::{rat_int, Rat};
use crate::upoly::UPoly;
use num_traits::Zero;

/// Validated covering data: sheet count, base genus, ramification total.
/// Construction enforces that V is a nonnegative even sum of positive
/// indices and that the resulting genus is a nonnegative integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoveringData {
    sheets: u32,
    base_genus: u32,
    total_index: i64,
}

impl CoveringData {
    pub fn from_total(sheets: u32, base_genus: u32, total_index: i64) -> Result<CoveringData> {
        if sheets < 1 {
            return Err(Error::SheetCountTooSmall { min: 1 });
        }
        if total_index < 0 {
            return Err(Error::NonPositiveRamificationIndex { index: total_index });
        }
        if total_index % 2 != 0 {
            return Err(Error::OddRamificationTotal { v: total_index });
        }
        let data = CoveringData {
            sheets,
            base_genus,
            total_index,
        };
        let genus = data.genus_unchecked();
        if genus < 0 {
            return Err(Error::NegativeGenus { genus });
        }
        Ok(data)
    }

    pub fn from_indices(sheets: u32, base_genus: u32, indices: &[i64]) -> Result<CoveringData> {
        if let Some(&bad) = indices.iter().find(|&&i| i <= 0) {
            return Err(Error::NonPositiveRamificationIndex { index: bad });
        }
        CoveringData::from_total(sheets, base_genus, indices.iter().sum())
    }

    pub fn sheets(&self) -> u32 {
        self.sheets
    }

    pub fn base_genus(&self) -> u32 {
        self.base_genus
    }

    pub fn total_index(&self) -> i64 {
        self.total_index
    }

    fn genus_unchecked(&self) -> i64 {
        self.sheets as i64 * (self.base_genus as i64 - 1) + 1 + self.total_index / 2
    }
}

/// `g(X) = m (g(Y) - 1) + 1 + V/2`.
pub fn rh_genus(data: &CoveringData) -> i64 {
    data.genus_unchecked()
}

/// Everything the Kowalewski pipeline verifies on the way to the genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KowalewskiGenus {
    pub genus: i64,
    /// Quotient curve `u^2 = q(z)` with `q = p^2 - 4 c z^4`.
    pub quotient_rhs: UPoly,
    pub base_genus: u32,
    /// The four ramification points solve `r(z) = z^4 + p(z) + c = 0`.
    pub branch_poly: UPoly,
    pub branch_count: u32,
}

/// Genus of the Kowalewski curve for nonzero parameters (a, b, c).
///
/// The quotient by the involution `w -> -w` is the elliptic curve
/// `u^2 = p^2(z) - 4 c z^4`; the curve double-covers it with four branch
/// points cut out by `z^4 + p(z) + c`. Both quartics must be honestly
/// squarefree of degree 4, otherwise the parameters are degenerate and
/// the computation refuses with the failing certificate.
pub fn kowalewski_genus(a: &Rat, b: &Rat, c: &Rat) -> Result<KowalewskiGenus> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::DegenerateParameters {
            certificate: "a, b, c must all be nonzero".to_string(),
        });
    }
    // p(z) = a z^2 - 2 b z - 1
    let p = UPoly::from_coeffs(vec![rat_int(-1), -(b + b), a.clone()]);

    // q = p^2 - 4 c z^4, the quotient curve right-hand side
    let q = &(&p * &p) - &UPoly::monomial(c * rat_int(4), 4);
    if q.degree() != Some(4) {
        return Err(Error::DegenerateParameters {
            certificate: format!(
                "a^2 - 4c = 0: deg(p^2 - 4c z^4) = {} < 4",
                q.degree().map_or(0, |d| d)
            ),
        });
    }
    if !q.is_squarefree()? {
        return Err(Error::DegenerateParameters {
            certificate: format!("quotient quartic {q} has repeated roots"),
        });
    }
    let base = HypCurve::new(q.clone())?;
    let base_genus = base.genus();
    if base_genus != 1 {
        return Err(Error::Internal(format!(
            "squarefree quartic quotient has genus {base_genus} != 1"
        )));
    }

    // r = z^4 + p + c cuts out the four ramification points
    let r = &(&UPoly::monomial(rat_int(1), 4) + &p) + &UPoly::constant(c.clone());
    debug_assert_eq!(r.degree(), Some(4));
    if !r.is_squarefree()? {
        return Err(Error::DegenerateParameters {
            certificate: format!("branch quartic {r} has repeated roots"),
        });
    }
    let branch_count = r.degree_nonzero() as u32;

    let data = CoveringData::from_total(2, base_genus, branch_count as i64)?;
    Ok(KowalewskiGenus {
        genus: rh_genus(&data),
        quotient_rhs: q,
        base_genus,
        branch_poly: r,
        branch_count,
    })
}
