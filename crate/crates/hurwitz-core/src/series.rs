//! Truncated power series over the rationals, and local expansions of
//! curve functions as pairs `A(t) + B(t)*v` where `v^2` is a known series.
//!
//! A `PowerSeries` with `trunc() == N` is known modulo `t^N`. Truncation
//! shrinks under derivatives and is never silently re-grown; callers that
//! hit an indeterminate order must retry with a larger budget.

use crate::error::{Error, Result};
use crate::rat::{is_rational_square, Rat};
use crate::upoly::UPoly;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>, // coefficient of t^i at index i; length = truncation order
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> PowerSeries {
        PowerSeries { coeffs }
    }

    pub fn zero(trunc: usize) -> PowerSeries {
        PowerSeries {
            coeffs: vec![Rat::zero(); trunc],
        }
    }

    pub fn constant(c: Rat, trunc: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(trunc);
        if trunc > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// A polynomial truncated to the first `trunc` coefficients.
    pub fn from_upoly(p: &UPoly, trunc: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); trunc];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            *slot = p.coeff(i);
        }
        PowerSeries { coeffs }
    }

    /// Spread polynomial coefficients onto even powers: `p` evaluated at
    /// `t^2`, truncated.
    pub fn from_upoly_in_t_squared(p: &UPoly, trunc: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); trunc];
        for (i, c) in p.coeffs().iter().enumerate() {
            if 2 * i < trunc {
                coeffs[2 * i] = c.clone();
            }
        }
        PowerSeries { coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Index of the first nonzero coefficient, `None` if the series is
    /// zero to its truncation order.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero_to_trunc(&self) -> bool {
        self.ord().is_none()
    }

    pub fn truncate_to(&self, n: usize) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().take(n).cloned().collect(),
        }
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.trunc().min(rhs.trunc());
        PowerSeries {
            coeffs: (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        }
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.trunc().min(rhs.trunc());
        PowerSeries {
            coeffs: (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        }
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.trunc().min(rhs.trunc());
        let mut coeffs = vec![Rat::zero(); n];
        for i in 0..n {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..n - i {
                let c = self.coeff(i) * rhs.coeff(j);
                coeffs[i + j] += c;
            }
        }
        PowerSeries { coeffs }
    }

    /// Shift by `t^k` (multiply), keeping the truncation honest.
    pub fn shift_up(&self, k: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); self.trunc()];
        for i in 0..self.trunc().saturating_sub(k) {
            coeffs[i + k] = self.coeff(i);
        }
        PowerSeries { coeffs }
    }

    pub fn derivative(&self) -> PowerSeries {
        if self.coeffs.len() <= 1 {
            return PowerSeries::zero(0);
        }
        PowerSeries {
            coeffs: (1..self.trunc())
                .map(|i| self.coeff(i) * Rat::from_integer(i.into()))
                .collect(),
        }
    }

    /// Multiplicative inverse of a unit series (nonzero constant term).
    pub fn recip(&self) -> Result<PowerSeries> {
        let a0 = self.coeff(0);
        if self.trunc() == 0 || a0.is_zero() {
            return Err(Error::Internal(
                "reciprocal of a non-unit power series".to_string(),
            ));
        }
        let n = self.trunc();
        let mut out = vec![Rat::zero(); n];
        out[0] = Rat::from_integer(1.into()) / a0.clone();
        for k in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += self.coeff(j) * out[k - j].clone();
            }
            out[k] = -acc / a0.clone();
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        Ok(self.mul(&rhs.recip()?.truncate_to(self.trunc().min(rhs.trunc()))))
    }
}

/// A local expansion `A(t) + B(t)*v` with `v` a formal square root:
/// `v^2 = vsq`, a unit power series. Used for charts at branch points
/// where the square root of the defining polynomial need not be rational.
#[derive(Debug, Clone)]
pub struct LocalPair {
    pub plain: PowerSeries,
    pub root_part: PowerSeries,
    vsq: PowerSeries,
}

impl LocalPair {
    pub fn new(plain: PowerSeries, root_part: PowerSeries, vsq: PowerSeries) -> LocalPair {
        LocalPair {
            plain,
            root_part,
            vsq,
        }
    }

    pub fn zero_like(&self) -> LocalPair {
        let t = self.plain.trunc().min(self.root_part.trunc());
        LocalPair {
            plain: PowerSeries::zero(t),
            root_part: PowerSeries::zero(t),
            vsq: self.vsq.clone(),
        }
    }

    pub fn add(&self, rhs: &LocalPair) -> LocalPair {
        LocalPair {
            plain: self.plain.add(&rhs.plain),
            root_part: self.root_part.add(&rhs.root_part),
            vsq: self.vsq.clone(),
        }
    }

    pub fn sub(&self, rhs: &LocalPair) -> LocalPair {
        LocalPair {
            plain: self.plain.sub(&rhs.plain),
            root_part: self.root_part.sub(&rhs.root_part),
            vsq: self.vsq.clone(),
        }
    }

    /// `(a1 + b1 v)(a2 + b2 v) = (a1 a2 + b1 b2 v^2) + (a1 b2 + a2 b1) v`.
    pub fn mul(&self, rhs: &LocalPair) -> LocalPair {
        let plain = self
            .plain
            .mul(&rhs.plain)
            .add(&self.root_part.mul(&rhs.root_part).mul(&self.vsq));
        let root_part = self
            .plain
            .mul(&rhs.root_part)
            .add(&self.root_part.mul(&rhs.plain));
        LocalPair {
            plain,
            root_part,
            vsq: self.vsq.clone(),
        }
    }

    /// Derivative with `v' = v * vsq' / (2 vsq)`.
    pub fn derivative(&self) -> Result<LocalPair> {
        let vsq = &self.vsq;
        let correction = vsq
            .derivative()
            .div(&vsq.scale(&crate::rat::rat_int(2)))?;
        let root_part = self
            .root_part
            .derivative()
            .add(&self.root_part.mul(&correction));
        Ok(LocalPair {
            plain: self.plain.derivative(),
            root_part,
            vsq: self.vsq.clone(),
        })
    }

    /// Order in t, treating `v` as a unit: the minimum of the orders of
    /// the two parts.
    ///
    /// `Ok(None)` means the pair is zero to its truncation order and the
    /// caller should retry with more terms. When both parts lead at the
    /// same order and `v` could be a rational series (constant term of
    /// `v^2` a rational square), the leading terms could cancel and the
    /// computation refuses to guess.
    pub fn ord(&self) -> Result<Option<usize>> {
        let oa = self.plain.ord();
        let ob = self.root_part.ord();
        match (oa, ob) {
            (None, None) => Ok(None),
            (Some(k), None) => {
                if k < self.root_part.trunc() {
                    Ok(Some(k))
                } else {
                    Ok(None)
                }
            }
            (None, Some(k)) => {
                if k < self.plain.trunc() {
                    Ok(Some(k))
                } else {
                    Ok(None)
                }
            }
            (Some(ka), Some(kb)) if ka != kb => Ok(Some(ka.min(kb))),
            (Some(ka), Some(_)) => {
                if is_rational_square(&self.vsq.coeff(0)) {
                    Err(Error::AmbiguousLocalOrder)
                } else {
                    Ok(Some(ka))
                }
            }
        }
    }
}
