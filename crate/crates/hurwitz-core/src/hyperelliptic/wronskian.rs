//! Wronskians of function systems on a hyperelliptic curve and their
//! vanishing orders at branch points — the Weierstrass point detector.
//!
//! The symbolic Wronskian `W(f_1, ..., f_k) = det(f_j^(i))` is computed
//! exactly in the z chart with the closure rule
//! `(A + Bw)' = A' + (B' + B p'/(2p)) w`.
//!
//! Orders at a rational branch point or at odd-model infinity expand the
//! holomorphic differentials in the local chart as truncated series pairs
//! `A + B v` (`v^2` a known unit series) and take the order of the series
//! determinant. The default truncation is `2g + 4` terms, doubled once if
//! the order is still indeterminate.

use super::{CurveFun, CurvePlace, HypCurve};
use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};
use crate::series::{LocalPair, PowerSeries};
use crate::upoly::UPoly;

/// `det(f_j^{(k-1)})` for the given functions, derivatives taken in the
/// z chart.
pub fn wronskian(curve: &HypCurve, fs: &[CurveFun]) -> Result<CurveFun> {
    if fs.is_empty() {
        return Err(Error::Internal("Wronskian of an empty system".to_string()));
    }
    let n = fs.len();
    let mut rows: Vec<Vec<CurveFun>> = vec![fs.to_vec()];
    for k in 1..n {
        let prev = &rows[k - 1];
        rows.push(prev.iter().map(|f| f.derivative(curve)).collect());
    }
    Ok(curvefun_det(&rows, curve))
}

fn curvefun_det(m: &[Vec<CurveFun>], curve: &HypCurve) -> CurveFun {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = CurveFun::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<CurveFun>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&curvefun_det(&minor, curve), curve);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Order of the Wronskian of the holomorphic differentials at a place,
/// in the local chart of that place. Supported places: a rational
/// branch point (degree-1 factor of p) and odd-model infinity.
pub fn wronskian_order_at(curve: &HypCurve, place: &CurvePlace) -> Result<i64> {
    let default_trunc = 2 * curve.genus() as usize + 4;
    match wronskian_order_with_trunc(curve, place, default_trunc)? {
        Some(ord) => Ok(ord as i64),
        None => match wronskian_order_with_trunc(curve, place, 2 * default_trunc)? {
            Some(ord) => Ok(ord as i64),
            None => Err(Error::TruncationInsufficient),
        },
    }
}

fn wronskian_order_with_trunc(
    curve: &HypCurve,
    place: &CurvePlace,
    trunc: usize,
) -> Result<Option<usize>> {
    let fs = chart_coefficients(curve, place, trunc)?;
    let n = fs.len();
    let mut rows: Vec<Vec<LocalPair>> = vec![fs];
    for k in 1..n {
        let prev = &rows[k - 1];
        let next: Result<Vec<LocalPair>> = prev.iter().map(|f| f.derivative()).collect();
        rows.push(next?);
    }
    localpair_det(&rows).ord()
}

/// Chart coefficients f_j with `omega_j = f_j(t) dt` for the holomorphic
/// basis `z^j dz / w`, expanded at the requested place.
fn chart_coefficients(
    curve: &HypCurve,
    place: &CurvePlace,
    trunc: usize,
) -> Result<Vec<LocalPair>> {
    let g = curve.genus() as usize;
    if g == 0 {
        return Err(Error::Internal("no holomorphic differentials".to_string()));
    }
    match place {
        CurvePlace::Branch(q) => {
            if q.degree() != Some(1) {
                return Err(Error::IrrationalBranchPoint);
            }
            let a = -q.coeff(0);
            // p = (z - a) u with u(a) != 0; chart z = a + t^2, w = t v,
            // v^2 = u(a + t^2); then f_j = 2 (a + t^2)^j v / V
            let u = curve.p().exact_div(q)?;
            let vsq = PowerSeries::from_upoly_in_t_squared(&shift_poly(&u, &a), trunc);
            let vsq_inv = vsq.recip()?;
            let base = UPoly::from_coeffs(vec![a, rat_int(1)]); // a + s
            let mut out = Vec::with_capacity(g);
            for j in 0..g {
                let numer =
                    PowerSeries::from_upoly_in_t_squared(&base.pow(j), trunc).scale(&rat_int(2));
                out.push(LocalPair::new(
                    PowerSeries::zero(trunc),
                    numer.mul(&vsq_inv),
                    vsq.clone(),
                ));
            }
            Ok(out)
        }
        CurvePlace::InfinityOdd => {
            if !curve.is_odd_model() {
                return Err(Error::EvenModelUnsupported);
            }
            // chart z = t^-2, w = t^-(2g+1) v with v^2 = rev(p)(t^2);
            // then f_j = -2 t^(2g-2-2j) v / V
            let vsq = PowerSeries::from_upoly_in_t_squared(&curve.p().reversed(), trunc);
            let vsq_inv = vsq.recip()?;
            let mut out = Vec::with_capacity(g);
            for j in 0..g {
                let shift = 2 * (g - 1 - j);
                let numer = vsq_inv.scale(&rat_int(-2)).shift_up(shift);
                out.push(LocalPair::new(
                    PowerSeries::zero(trunc),
                    numer,
                    vsq.clone(),
                ));
            }
            Ok(out)
        }
        _ => Err(Error::UnsupportedPlace),
    }
}

/// Taylor shift: the polynomial `q(a + s)` in s.
fn shift_poly(q: &UPoly, a: &Rat) -> UPoly {
    q.compose(&UPoly::from_coeffs(vec![a.clone(), rat_int(1)]))
}

fn localpair_det(m: &[Vec<LocalPair>]) -> LocalPair {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..n {
        let minor: Vec<Vec<LocalPair>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&localpair_det(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}
