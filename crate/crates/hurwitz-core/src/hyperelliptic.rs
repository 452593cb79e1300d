//! Hyperelliptic models `w^2 = p(z)` with p squarefree of degree >= 3:
//! genus, branch places, differential orders by chart analysis, bases of
//! `L(m*infinity)` on odd models, and gap sequences.
//!
//! Chart conventions used throughout (and by the Wronskian machinery in
//! the `wronskian` submodule):
//!
//! * at a branch point over a root `a` of p: `z = a + t^2`, so
//!   `ord t(z - a) = 2`, `ord t(w) = 1`, `ord t(dz) = 1`;
//! * at an ordinary finite point: `z - a` is the uniformizer and w is a
//!   unit on each of the two points of the fiber;
//! * at infinity on an odd model (`n = 2g + 1`): `z = t^-2`, a single
//!   point with `ord t(w) = -(2g + 1)`;
//! * at infinity on an even model (`n = 2g + 2`): two points with
//!   `z = 1/t` and `ord t(w) = -(g + 1)` at each.

pub mod wronskian;

use std::fmt;


use crate::error::{Error, Result};
use crate::factor::factor;
use crate::rat::rat_int;
use crate::ratfun::RatFun;
use crate::upoly::UPoly;

/// The curve `w^2 = p(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypCurve {
    p: UPoly,
    n: usize,
    genus: u32,
    odd: bool,
}

impl HypCurve {
    /// Validates the model: `deg p >= 3` and p squarefree (no repeated
    /// roots, the precondition for a smooth double cover).
    pub fn new(p: UPoly) -> Result<HypCurve> {
        let n = match p.degree() {
            Some(n) if n >= 3 => n,
            _ => return Err(Error::DegreeTooSmall),
        };
        if !p.is_squarefree()? {
            return Err(Error::NotSquarefree {
                poly: p.to_string(),
            });
        }
        Ok(HypCurve {
            genus: ((n - 1) / 2) as u32,
            odd: n % 2 == 1,
            n,
            p,
        })
    }

    pub fn p(&self) -> &UPoly {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_odd_model(&self) -> bool {
        self.odd
    }
}

/// `g = floor((n - 1) / 2)` for `w^2 = p_n(z)`.
pub fn genus_hyp(curve: &HypCurve) -> u32 {
    curve.genus()
}

/// Place classes on the curve, keyed by what sits below them on the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePlace {
    /// One ramified point (e = 2) over each root of this irreducible
    /// factor of p.
    Branch(UPoly),
    /// The full two-point fiber over each root of an irreducible
    /// polynomial coprime to p.
    AboveFinite(UPoly),
    /// The single ramified point at infinity of an odd model.
    InfinityOdd,
    /// The pair of points at infinity of an even model.
    InfinityEvenPair,
}

impl CurvePlace {
    /// Number of curve points in the class.
    pub fn point_count(&self) -> usize {
        match self {
            CurvePlace::Branch(q) => q.degree_nonzero(),
            CurvePlace::AboveFinite(q) => 2 * q.degree_nonzero(),
            CurvePlace::InfinityOdd => 1,
            CurvePlace::InfinityEvenPair => 2,
        }
    }
}

impl fmt::Display for CurvePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePlace::Branch(q) => write!(f, "branch ({q})"),
            CurvePlace::AboveFinite(q) => write!(f, "fiber over ({q})"),
            CurvePlace::InfinityOdd => write!(f, "inf (ramified)"),
            CurvePlace::InfinityEvenPair => write!(f, "inf (pair)"),
        }
    }
}

/// The ramification locus: one `Branch` place per irreducible factor of
/// p, plus the point at infinity exactly when the degree is odd. The
/// total number of branch points is always `2g + 2`.
pub fn branch_places(curve: &HypCurve) -> Result<Vec<CurvePlace>> {
    let mut out: Vec<CurvePlace> = factor(curve.p())?
        .factors
        .into_iter()
        .map(|(q, _)| CurvePlace::Branch(q))
        .collect();
    if curve.is_odd_model() {
        out.push(CurvePlace::InfinityOdd);
    }
    let count: usize = out.iter().map(CurvePlace::point_count).sum();
    if count != 2 * curve.genus() as usize + 2 {
        return Err(Error::Internal(format!(
            "branch point count {count} != 2g+2"
        )));
    }
    Ok(out)
}

/// A function `A(z) + B(z) w` on the curve; multiplication rewrites
/// `w^2` to `p(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFun {
    pub plain: RatFun,
    pub w_coeff: RatFun,
}

impl CurveFun {
    pub fn new(plain: RatFun, w_coeff: RatFun) -> CurveFun {
        CurveFun { plain, w_coeff }
    }

    pub fn zero() -> CurveFun {
        CurveFun::new(RatFun::zero(), RatFun::zero())
    }

    pub fn one() -> CurveFun {
        CurveFun::from_ratfun(RatFun::one())
    }

    pub fn from_ratfun(f: RatFun) -> CurveFun {
        CurveFun::new(f, RatFun::zero())
    }

    pub fn w() -> CurveFun {
        CurveFun::new(RatFun::zero(), RatFun::one())
    }

    pub fn is_zero(&self) -> bool {
        self.plain.is_zero() && self.w_coeff.is_zero()
    }

    pub fn add(&self, rhs: &CurveFun) -> CurveFun {
        CurveFun::new(&self.plain + &rhs.plain, &self.w_coeff + &rhs.w_coeff)
    }

    pub fn sub(&self, rhs: &CurveFun) -> CurveFun {
        CurveFun::new(&self.plain - &rhs.plain, &self.w_coeff - &rhs.w_coeff)
    }

    pub fn neg(&self) -> CurveFun {
        CurveFun::new(-&self.plain, -&self.w_coeff)
    }

    /// `(a1 + b1 w)(a2 + b2 w) = (a1 a2 + b1 b2 p) + (a1 b2 + a2 b1) w`.
    pub fn mul(&self, rhs: &CurveFun, curve: &HypCurve) -> CurveFun {
        let p = RatFun::from_poly(curve.p().clone());
        let plain = &(&self.plain * &rhs.plain) + &(&(&self.w_coeff * &rhs.w_coeff) * &p);
        let w_coeff = &(&self.plain * &rhs.w_coeff) + &(&self.w_coeff * &rhs.plain);
        CurveFun::new(plain, w_coeff)
    }

    /// `(a - b w) / (a^2 - b^2 p)`; the norm cannot vanish because a
    /// squarefree p of degree >= 3 is not the square of a rational
    /// function.
    pub fn inverse(&self, curve: &HypCurve) -> Result<CurveFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        let p = RatFun::from_poly(curve.p().clone());
        let norm = &(&self.plain * &self.plain)
            - &(&(&self.w_coeff * &self.w_coeff) * &p);
        let norm_inv = norm.inverse()?;
        Ok(CurveFun::new(
            &self.plain * &norm_inv,
            &(-&self.w_coeff) * &norm_inv,
        ))
    }

    /// Derivative in the z chart: `(a + b w)' = a' + (b' + b p'/(2p)) w`.
    pub fn derivative(&self, curve: &HypCurve) -> CurveFun {
        let correction = RatFun::new(
            curve.p().derivative().scale(&crate::rat::rat(1, 2)),
            curve.p().clone(),
        )
        .expect("p nonzero");
        CurveFun::new(
            self.plain.derivative(),
            &self.w_coeff.derivative() + &(&self.w_coeff * &correction),
        )
    }

    /// Order at a place class, per point above.
    ///
    /// Uses `ord(w) = 1` at branch points, `-(2g+1)` at odd-model
    /// infinity, `-(g+1)` at each even-model infinite point. Where the
    /// plain and w parts could cancel (same candidate order over an
    /// unramified place), the computation refuses to guess.
    pub fn ord_at(&self, curve: &HypCurve, place: &CurvePlace) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let g = curve.genus() as i64;
        let ratfun_ord = |f: &RatFun, q: &UPoly| -> i64 {
            f.num().multiplicity_of(q) as i64 - f.den().multiplicity_of(q) as i64
        };
        let ratfun_ord_inf = |f: &RatFun| -> i64 {
            f.den().degree_nonzero() as i64 - f.num().degree_nonzero() as i64
        };
        let (plain_ord, w_ord) = match place {
            CurvePlace::Branch(q) => (
                (!self.plain.is_zero()).then(|| 2 * ratfun_ord(&self.plain, q)),
                (!self.w_coeff.is_zero()).then(|| 2 * ratfun_ord(&self.w_coeff, q) + 1),
            ),
            CurvePlace::AboveFinite(q) => (
                (!self.plain.is_zero()).then(|| ratfun_ord(&self.plain, q)),
                (!self.w_coeff.is_zero()).then(|| ratfun_ord(&self.w_coeff, q)),
            ),
            CurvePlace::InfinityOdd => {
                if !curve.is_odd_model() {
                    return Err(Error::EvenModelUnsupported);
                }
                (
                    (!self.plain.is_zero()).then(|| 2 * ratfun_ord_inf(&self.plain)),
                    (!self.w_coeff.is_zero())
                        .then(|| 2 * ratfun_ord_inf(&self.w_coeff) - (2 * g + 1)),
                )
            }
            CurvePlace::InfinityEvenPair => (
                (!self.plain.is_zero()).then(|| ratfun_ord_inf(&self.plain)),
                (!self.w_coeff.is_zero()).then(|| ratfun_ord_inf(&self.w_coeff) - (g + 1)),
            ),
        };
        match (plain_ord, w_ord) {
            (Some(a), None) => Ok(a),
            (None, Some(b)) => Ok(b),
            (Some(a), Some(b)) if a != b => Ok(a.min(b)),
            (Some(a), Some(_)) => match place {
                // at branch points and odd-model infinity the parities of
                // the two parts always differ, so this arm is unreachable
                CurvePlace::Branch(_) | CurvePlace::InfinityOdd => Ok(a),
                _ => Err(Error::AmbiguousLocalOrder),
            },
            (None, None) => Err(Error::ZeroFunction),
        }
    }
}

impl fmt::Display for CurveFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.w_coeff.is_zero() {
            return write!(f, "{}", self.plain);
        }
        let w_part = if self.w_coeff == RatFun::one() {
            "w".to_string()
        } else {
            format!("{}*w", self.w_coeff)
        };
        if self.plain.is_zero() {
            write!(f, "{w_part}")
        } else {
            write!(f, "{} + {w_part}", self.plain)
        }
    }
}

/// Order of `omega = q(z) dz / w` at each point of a place class, by the
/// chart rules in the module docs.
pub fn diff_order_at(curve: &HypCurve, q: &UPoly, place: &CurvePlace) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let g = curve.genus() as i64;
    let dq = q.degree_nonzero() as i64;
    Ok(match place {
        // ord(q) = 2 mult, ord(dz) = 1, ord(w) = 1
        CurvePlace::Branch(b) => 2 * q.multiplicity_of(b) as i64,
        CurvePlace::AboveFinite(b) => q.multiplicity_of(b) as i64,
        CurvePlace::InfinityOdd => {
            if !curve.is_odd_model() {
                return Err(Error::EvenModelUnsupported);
            }
            // ord(q) = -2 deg q, ord(dz) = -3, ord(w) = -(2g+1)
            2 * g - 2 - 2 * dq
        }
        CurvePlace::InfinityEvenPair => {
            if curve.is_odd_model() {
                return Err(Error::Internal(
                    "even-model infinity queried on an odd model".to_string(),
                ));
            }
            // per point: ord(q) = -deg q, ord(dz) = -2, ord(w) = -(g+1)
            g - 1 - dq
        }
    })
}

/// Total degree of the divisor of `q(z) dz / w`: orders at every branch
/// place, every fiber over a factor of q, and infinity, each weighted by
/// the number of points in the class.
pub fn diff_divisor_degree(curve: &HypCurve, q: &UPoly) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut total = 0i64;
    let mut seen = Vec::new();
    for (b, _) in factor(curve.p())?.factors {
        let place = CurvePlace::Branch(b.clone());
        total += place.point_count() as i64 * diff_order_at(curve, q, &place)?;
        seen.push(b);
    }
    for (b, _) in factor(q)?.factors {
        if seen.contains(&b) {
            continue; // already counted as a branch place
        }
        let place = CurvePlace::AboveFinite(b);
        total += place.point_count() as i64 * diff_order_at(curve, q, &place)?;
    }
    let inf = if curve.is_odd_model() {
        CurvePlace::InfinityOdd
    } else {
        CurvePlace::InfinityEvenPair
    };
    total += inf.point_count() as i64 * diff_order_at(curve, q, &inf)?;
    Ok(total)
}

/// Degree of the canonical divisor, computed as the divisor of `dz/w`
/// over all place classes; must come out as `2g - 2`.
pub fn canonical_degree_check(curve: &HypCurve) -> Result<i64> {
    let total = diff_divisor_degree(curve, &UPoly::one())?;
    let expected = 2 * curve.genus() as i64 - 2;
    if total != expected {
        return Err(Error::Internal(format!(
            "canonical degree {total} != {expected}"
        )));
    }
    Ok(total)
}

/// The g holomorphic differentials `z^i dz / w`, `0 <= i <= g-1`, each
/// verified effective at every relevant place class.
pub fn holo_diff_basis(curve: &HypCurve) -> Result<Vec<UPoly>> {
    let mut out = Vec::new();
    for i in 0..curve.genus() as usize {
        let q = UPoly::monomial(rat_int(1), i);
        for (b, _) in factor(curve.p())?.factors {
            if diff_order_at(curve, &q, &CurvePlace::Branch(b))? < 0 {
                return Err(Error::Internal(format!("z^{i} dz/w not holomorphic")));
            }
        }
        if i > 0 && diff_order_at(curve, &q, &CurvePlace::AboveFinite(UPoly::var()))? < 0 {
            return Err(Error::Internal(format!("z^{i} dz/w not holomorphic")));
        }
        let inf = if curve.is_odd_model() {
            CurvePlace::InfinityOdd
        } else {
            CurvePlace::InfinityEvenPair
        };
        if diff_order_at(curve, &q, &inf)? < 0 {
            return Err(Error::Internal(format!(
                "z^{i} dz/w has a pole at infinity"
            )));
        }
        out.push(q);
    }
    Ok(out)
}

/// Basis of `L(m * infinity)` on an odd model.
#[derive(Debug, Clone)]
pub struct InfinityLBasis {
    pub pole_bound: u32,
    pub basis: Vec<CurveFun>,
    pub dimension: usize,
}

/// Monomial basis `{z^i : 2i <= m} + {z^j w : 2j + 2g + 1 <= m}` of the
/// functions with a pole of order at most m at the single point at
/// infinity. Each element's pole order is re-verified. For
/// `m >= 2g - 1` the dimension is exactly `m - g + 1`.
pub fn lspace_infinity_basis(curve: &HypCurve, m: u32) -> Result<InfinityLBasis> {
    if !curve.is_odd_model() {
        return Err(Error::EvenModelUnsupported);
    }
    let g = curve.genus() as i64;
    let mut basis = Vec::new();
    let mut i = 0i64;
    while 2 * i <= m as i64 {
        basis.push(CurveFun::from_ratfun(RatFun::from_poly(UPoly::monomial(
            rat_int(1),
            i as usize,
        ))));
        i += 1;
    }
    let mut j = 0i64;
    while 2 * j + 2 * g + 1 <= m as i64 {
        basis.push(CurveFun::new(
            RatFun::zero(),
            RatFun::from_poly(UPoly::monomial(rat_int(1), j as usize)),
        ));
        j += 1;
    }
    for f in &basis {
        let ord = f.ord_at(curve, &CurvePlace::InfinityOdd)?;
        if ord < -(m as i64) {
            return Err(Error::Internal(format!(
                "basis element {f} has pole order {} > {m} at infinity",
                -ord
            )));
        }
    }
    if m as i64 >= 2 * g - 1 {
        let expected = (m as i64 - g + 1) as usize;
        if basis.len() != expected {
            return Err(Error::Internal(format!(
                "dim L({m}*inf) = {} != {expected}",
                basis.len()
            )));
        }
    }
    Ok(InfinityLBasis {
        pole_bound: m,
        dimension: basis.len(),
        basis,
    })
}

/// The g pole orders that cannot occur at infinity: m is a gap exactly
/// when `dim L(m*inf) = dim L((m-1)*inf)`. For a hyperelliptic odd model
/// these are the odd numbers `1, 3, ..., 2g-1`; since that differs from
/// `{1, ..., g}` as soon as g >= 2, infinity is then a Weierstrass point.
pub fn gap_sequence_at_infinity(curve: &HypCurve) -> Result<Vec<u32>> {
    if !curve.is_odd_model() {
        return Err(Error::EvenModelUnsupported);
    }
    let g = curve.genus();
    let mut gaps = Vec::new();
    let mut prev = lspace_infinity_basis(curve, 0)?.dimension;
    for m in 1..=2 * g {
        let dim = lspace_infinity_basis(curve, m)?.dimension;
        if dim == prev {
            gaps.push(m);
        } else if dim != prev + 1 {
            return Err(Error::Internal(format!(
                "dim L({m}*inf) jumped by more than one"
            )));
        }
        prev = dim;
    }
    if gaps.len() != g as usize {
        return Err(Error::Internal(format!(
            "{} gaps found, expected g = {g}",
            gaps.len()
        )));
    }
    Ok(gaps)
}

/// Is the gap sequence different from the generic `{1, ..., g}`?
pub fn is_weierstrass_gap_sequence(gaps: &[u32]) -> bool {
    gaps.iter()
        .enumerate()
        .any(|(i, &m)| m != i as u32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn curve(coeffs: &[i64]) -> HypCurve {
        HypCurve::new(UPoly::from_int_coeffs(coeffs)).unwrap()
    }

    /// w^2 = z^5 - 1, genus 2.
    fn g2_curve() -> HypCurve {
        curve(&[-1, 0, 0, 0, 0, 1])
    }

    #[test]
    fn genus_from_degree() {
        assert_eq!(g2_curve().genus(), 2); // n = 5
        assert_eq!(curve(&[-1, 0, 0, 0, 0, 0, 1]).genus(), 2); // n = 6
        assert_eq!(curve(&[0, -1, 0, 1]).genus(), 1); // n = 3, elliptic
        assert!(matches!(
            HypCurve::new(UPoly::from_int_coeffs(&[0, 0, 1])),
            Err(Error::DegreeTooSmall)
        ));
        // repeated roots are rejected at construction
        let sq = &UPoly::from_int_coeffs(&[-1, 1]).pow(2) * &UPoly::from_int_coeffs(&[2, 1]);
        assert!(matches!(
            HypCurve::new(sq),
            Err(Error::NotSquarefree { .. })
        ));
    }

    #[test]
    fn branch_counting_both_parities() {
        // w^2 = z^5 - 1: finite branch weight 5 plus ramified infinity
        let places = branch_places(&g2_curve()).unwrap();
        let total: usize = places.iter().map(CurvePlace::point_count).sum();
        assert_eq!(total, 6);
        assert!(places.contains(&CurvePlace::InfinityOdd));

        // w^2 = z^6 - 1: six finite branch points, infinity unramified
        let places = branch_places(&curve(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let total: usize = places.iter().map(CurvePlace::point_count).sum();
        assert_eq!(total, 6);
        assert!(!places.contains(&CurvePlace::InfinityOdd));

        // elliptic: w^2 = z(z-1)(z-2)
        let c = curve(&[0, 2, -3, 1]);
        let places = branch_places(&c).unwrap();
        let total: usize = places.iter().map(CurvePlace::point_count).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn differential_orders_on_g2() {
        let c = g2_curve();
        // dz/w: order 0 at branch places, 2 at infinity, total 2g-2 = 2
        let one = UPoly::one();
        for place in branch_places(&c).unwrap() {
            if matches!(place, CurvePlace::Branch(_)) {
                assert_eq!(diff_order_at(&c, &one, &place).unwrap(), 0);
            }
        }
        assert_eq!(
            diff_order_at(&c, &one, &CurvePlace::InfinityOdd).unwrap(),
            2
        );
        assert_eq!(diff_divisor_degree(&c, &one).unwrap(), 2);

        // z dz/w: order 1 at each of the two points over z = 0, 0 at infinity
        let q = UPoly::var();
        assert_eq!(
            diff_order_at(&c, &q, &CurvePlace::AboveFinite(UPoly::var())).unwrap(),
            1
        );
        assert_eq!(diff_order_at(&c, &q, &CurvePlace::InfinityOdd).unwrap(), 0);
        assert_eq!(diff_divisor_degree(&c, &q).unwrap(), 2);

        // elliptic holomorphic differential is nowhere zero
        let e = curve(&[0, 2, -3, 1]);
        assert_eq!(diff_divisor_degree(&e, &UPoly::one()).unwrap(), 0);
    }

    #[test]
    fn canonical_degree_all_small_genera() {
        // odd and even models for g = 1..4
        for g in 1..=4usize {
            let odd_deg = 2 * g + 1;
            let even_deg = 2 * g + 2;
            for n in [odd_deg, even_deg] {
                // z^n - z is squarefree for n >= 2
                let mut coeffs = vec![0i64; n + 1];
                coeffs[1] = -1;
                coeffs[n] = 1;
                let c = curve(&coeffs);
                assert_eq!(c.genus() as usize, g);
                assert_eq!(canonical_degree_check(&c).unwrap(), 2 * g as i64 - 2);
            }
        }
    }

    #[test]
    fn holomorphic_basis_has_dimension_g() {
        let c = g2_curve();
        let basis = holo_diff_basis(&c).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis, vec![UPoly::one(), UPoly::var()]);
        let e = curve(&[0, 2, -3, 1]);
        assert_eq!(holo_diff_basis(&e).unwrap().len(), 1);
    }

    #[test]
    fn curvefun_algebra_respects_relation() {
        let c = g2_curve();
        let w = CurveFun::w();
        let w2 = w.mul(&w, &c);
        assert_eq!(w2, CurveFun::from_ratfun(RatFun::from_poly(c.p().clone())));

        let f = CurveFun::new(
            RatFun::from_poly(UPoly::from_int_coeffs(&[1, 2])),
            RatFun::constant(rat(1, 3)),
        );
        let finv = f.inverse(&c).unwrap();
        assert_eq!(f.mul(&finv, &c), CurveFun::one());
    }

    #[test]
    fn infinity_lspace_dimensions_g2() {
        let c = g2_curve();
        let b = lspace_infinity_basis(&c, 0).unwrap();
        assert_eq!(b.dimension, 1);

        // m = 5: {1, z, z^2, w}
        let b = lspace_infinity_basis(&c, 5).unwrap();
        assert_eq!(b.dimension, 4);
        let names: Vec<String> = b.basis.iter().map(|f| f.to_string()).collect();
        assert_eq!(names, vec!["1", "z", "z^2", "w"]);

        // m = 3: {1, z}, dimension m - g + 1 = 2
        let b = lspace_infinity_basis(&c, 3).unwrap();
        assert_eq!(b.dimension, 2);

        // even models are refused
        assert!(matches!(
            lspace_infinity_basis(&curve(&[-1, 0, 0, 0, 0, 0, 1]), 3),
            Err(Error::EvenModelUnsupported)
        ));
    }

    #[test]
    fn gap_sequences() {
        assert_eq!(gap_sequence_at_infinity(&g2_curve()).unwrap(), vec![1, 3]);
        // g = 3: w^2 = z^7 - z
        let c = curve(&[0, -1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(gap_sequence_at_infinity(&c).unwrap(), vec![1, 3, 5]);
        // g = 1: gaps {1} = {1, ..., g}, not a Weierstrass point
        let e = curve(&[0, 2, -3, 1]);
        let gaps = gap_sequence_at_infinity(&e).unwrap();
        assert_eq!(gaps, vec![1]);
        assert!(!is_weierstrass_gap_sequence(&gaps));
        assert!(is_weierstrass_gap_sequence(&[1, 3]));
    }

    #[test]
    fn curvefun_orders_at_infinity() {
        let c = g2_curve();
        // ord(z^i) = -2i, ord(z^j w) = -(2j + 2g + 1)
        let z2 = CurveFun::from_ratfun(RatFun::from_poly(UPoly::monomial(rat_int(1), 2)));
        assert_eq!(z2.ord_at(&c, &CurvePlace::InfinityOdd).unwrap(), -4);
        let zw = CurveFun::new(RatFun::zero(), RatFun::var());
        assert_eq!(zw.ord_at(&c, &CurvePlace::InfinityOdd).unwrap(), -7);
        // w at a branch place has order 1
        let b = CurvePlace::Branch(UPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(CurveFun::w().ord_at(&c, &b).unwrap(), 1);
    }
}
