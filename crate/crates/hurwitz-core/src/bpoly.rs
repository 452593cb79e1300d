//! Bivariate polynomials F(w, z) over the rationals.
//!
//! Sparse representation: a map from exponent pairs (power of w, power of
//! z) to nonzero coefficients. The resultant in w is the Sylvester
//! determinant with F's coefficient rows on top, computed fraction-free
//! over the polynomial ring so the sign convention is bit-exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, Rat};
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BPoly {
    pub fn zero() -> Self {
        BPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BPoly::term(Rat::one(), 0, 0)
    }

    pub fn constant(c: Rat) -> Self {
        BPoly::term(c, 0, 0)
    }

    pub fn var_w() -> Self {
        BPoly::term(Rat::one(), 1, 0)
    }

    pub fn var_z() -> Self {
        BPoly::term(Rat::one(), 0, 1)
    }

    /// `c * w^i * z^j`.
    pub fn term(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BPoly { terms }
    }

    /// A polynomial in z alone.
    pub fn from_upoly_z(p: &UPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (j, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert((0, j as u32), c.clone());
            }
        }
        BPoly { terms }
    }

    /// Build from the coefficients of powers of w, lowest power first.
    pub fn from_w_coeffs(coeffs: &[UPoly]) -> Self {
        let mut out = BPoly::zero();
        for (i, p) in coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(c.clone(), i as u32, j as u32);
                }
            }
        }
        out
    }

    fn add_term(&mut self, c: Rat, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent pairs with nonzero coefficient, (w power, z power).
    pub fn support(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.terms.keys().copied()
    }

    pub fn deg_w(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_z(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Coefficient of `w^i`, as a polynomial in z.
    pub fn coeff_of_w(&self, i: u32) -> UPoly {
        let mut coeffs = Vec::new();
        for (&(wi, zj), c) in &self.terms {
            if wi == i {
                let j = zj as usize;
                if coeffs.len() <= j {
                    coeffs.resize(j + 1, Rat::zero());
                }
                coeffs[j] = c.clone();
            }
        }
        UPoly::from_coeffs(coeffs)
    }

    /// Leading coefficient with respect to w.
    pub fn leading_coeff_w(&self) -> UPoly {
        match self.deg_w() {
            Some(d) => self.coeff_of_w(d),
            None => UPoly::zero(),
        }
    }

    /// The whole polynomial as a UPoly in z, if no w appears.
    pub fn as_upoly_in_z(&self) -> Option<UPoly> {
        if self.deg_w().unwrap_or(0) > 0 {
            return None;
        }
        Some(self.coeff_of_w(0))
    }

    /// Partial derivative with respect to w.
    pub fn derivative_w(&self) -> BPoly {
        let mut out = BPoly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(c * Rat::from_integer(i.into()), i - 1, j);
            }
        }
        out
    }

    pub fn pow(&self, mut n: usize) -> BPoly {
        let mut base = self.clone();
        let mut acc = BPoly::one();
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

    /// Exact evaluation at rational (w, z).
    pub fn eval(&self, w: &Rat, z: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            acc += c * num_traits::pow(w.clone(), i as usize) * num_traits::pow(z.clone(), j as usize);
        }
        acc
    }

    /// Specialize z to a rational value; the result is a polynomial in w
    /// (returned over the shared UPoly type, variable renamed implicitly).
    pub fn specialize_z(&self, z0: &Rat) -> UPoly {
        let d = self.deg_w().unwrap_or(0);
        let coeffs = (0..=d).map(|i| self.coeff_of_w(i).eval(z0)).collect();
        UPoly::from_coeffs(coeffs)
    }
}

impl Add for &BPoly {
    type Output = BPoly;
    fn add(self, rhs: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Sub for &BPoly {
    type Output = BPoly;
    fn sub(self, rhs: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(-c, i, j);
        }
        out
    }
}

impl Neg for &BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        BPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &BPoly {
    type Output = BPoly;
    fn mul(self, rhs: &BPoly) -> BPoly {
        let mut out = BPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }
}

impl fmt::Display for BPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
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
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(format_rat(&abs));
            }
            if i > 0 {
                factors.push(if i == 1 { "w".into() } else { format!("w^{i}") });
            }
            if j > 0 {
                factors.push(if j == 1 { "z".into() } else { format!("z^{j}") });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Resultant of F and G with respect to w: the determinant of the
/// Sylvester matrix with F's coefficient rows on top, an exact polynomial
/// in z. Both inputs must have positive degree in w.
pub fn resultant_w(f: &BPoly, g: &BPoly) -> Result<UPoly> {
    let m = f.deg_w().filter(|&d| d > 0).ok_or(Error::ZeroDegreeInW)? as usize;
    let n = g.deg_w().filter(|&d| d > 0).ok_or(Error::ZeroDegreeInW)? as usize;
    let size = m + n;
    let f_desc: Vec<UPoly> = (0..=m).rev().map(|i| f.coeff_of_w(i as u32)).collect();
    let g_desc: Vec<UPoly> = (0..=n).rev().map(|i| g.coeff_of_w(i as u32)).collect();
    let mut matrix = vec![vec![UPoly::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f_desc.iter().enumerate() {
            matrix[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g_desc.iter().enumerate() {
            matrix[n + row][row + k] = c.clone();
        }
    }
    poly_matrix_det(matrix)
}

/// Discriminant of F with respect to w:
/// `(-1)^{n(n-1)/2} * Res_w(F, dF/dw) / lc_w(F)` for `n = deg_w F`.
pub fn discriminant_w(f: &BPoly) -> Result<UPoly> {
    let n = f.deg_w().filter(|&d| d > 0).ok_or(Error::ZeroDegreeInW)? as usize;
    if n == 1 {
        return Ok(UPoly::one());
    }
    let res = resultant_w(f, &f.derivative_w())?;
    let lc = f.leading_coeff_w();
    let quot = res.exact_div(&lc)?;
    if (n * (n - 1) / 2) % 2 == 1 {
        Ok((&UPoly::zero() - &quot).clone())
    } else {
        Ok(quot)
    }
}

/// Fraction-free (Bareiss) determinant of a matrix of polynomials. All
/// intermediate divisions are exact in the polynomial ring.
fn poly_matrix_det(mut m: Vec<Vec<UPoly>>) -> Result<UPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(UPoly::one());
    }
    let mut sign = false;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(UPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = UPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { (&det).neg() } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_int, Rat};
    use num_traits::{One, Zero};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent oracle: scalar resultant as the Sylvester determinant
    /// over the rationals, by plain Gaussian elimination.
    fn sylvester_resultant_scalar(f: &UPoly, g: &UPoly) -> Rat {
        let m = f.degree_nonzero();
        let n = g.degree_nonzero();
        let size = m + n;
        let mut a = vec![vec![Rat::zero(); size]; size];
        for row in 0..n {
            for k in 0..=m {
                a[row][row + k] = f.coeff(m - k);
            }
        }
        for row in 0..m {
            for k in 0..=n {
                a[n + row][row + k] = g.coeff(n - k);
            }
        }
        let mut det = Rat::one();
        for col in 0..size {
            let pivot = (col..size).find(|&r| !a[r][col].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= p.clone();
            for r in col + 1..size {
                let factor = a[r][col].clone() / p.clone();
                for c in col..size {
                    let t = &factor * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
        det
    }

    fn w2_minus(p: &UPoly) -> BPoly {
        &BPoly::term(Rat::one(), 2, 0) - &BPoly::from_upoly_z(p)
    }

    #[test]
    fn discriminant_of_hyperelliptic_shape() {
        // disc_w(w^2 - p(z)) = 4 p(z), against the Sylvester oracle
        let p = UPoly::from_int_coeffs(&[-1, 0, 0, 0, 0, 1]); // z^5 - 1
        let disc = discriminant_w(&w2_minus(&p)).unwrap();
        assert_eq!(disc, p.scale(&rat_int(4)));

        // b^2 - 4ac for w^2 - z gives 4z
        let disc = discriminant_w(&w2_minus(&UPoly::var())).unwrap();
        assert_eq!(disc, UPoly::monomial(rat_int(4), 1));
    }

    #[test]
    fn linear_resultant_sign_convention() {
        // Res_w(w - z, w + z) = 2z with F's rows on top
        let f = &BPoly::var_w() - &BPoly::var_z();
        let g = &BPoly::var_w() + &BPoly::var_z();
        assert_eq!(
            resultant_w(&f, &g).unwrap(),
            UPoly::monomial(rat_int(2), 1)
        );
        assert!(matches!(
            resultant_w(&f, &BPoly::one()),
            Err(Error::ZeroDegreeInW)
        ));
    }

    #[test]
    fn resultant_matches_scalar_sylvester_oracle() {
        let mut rng = StdRng::seed_from_u64(2024);
        for _ in 0..40 {
            let dw_f = rng.random_range(1..=3u32);
            let dw_g = rng.random_range(1..=3u32);
            let f = random_bpoly(&mut rng, dw_f, 2);
            let g = random_bpoly(&mut rng, dw_g, 2);
            if f.deg_w() != Some(dw_f) || g.deg_w() != Some(dw_g) {
                continue;
            }
            let res = resultant_w(&f, &g).unwrap();
            for _ in 0..3 {
                let z0 = rat_int(rng.random_range(-6..=6));
                let fs = f.specialize_z(&z0);
                let gs = g.specialize_z(&z0);
                // specialization commutes with the resultant only when the
                // leading coefficients survive
                if fs.degree() != Some(dw_f as usize) || gs.degree() != Some(dw_g as usize) {
                    continue;
                }
                assert_eq!(res.eval(&z0), sylvester_resultant_scalar(&fs, &gs));
            }
        }
    }

    #[test]
    fn resultant_vanishes_iff_specialized_gcd_nonconstant() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 50 {
            let dw_f = rng.random_range(1..=3u32);
            let dw_g = rng.random_range(1..=3u32);
            let f = random_bpoly(&mut rng, dw_f, 2);
            let g = random_bpoly(&mut rng, dw_g, 2);
            if f.deg_w().unwrap_or(0) == 0 || g.deg_w().unwrap_or(0) == 0 {
                continue;
            }
            let res = resultant_w(&f, &g).unwrap();
            let z0 = rat_int(rng.random_range(-8..=8));
            let fs = f.specialize_z(&z0);
            let gs = g.specialize_z(&z0);
            if fs.degree() != f.deg_w().map(|d| d as usize)
                || gs.degree() != g.deg_w().map(|d| d as usize)
            {
                continue; // leading coefficient vanished; property does not apply
            }
            let gcd_nonconstant = !fs.gcd(&gs).unwrap().is_one();
            assert_eq!(res.eval(&z0).is_zero(), gcd_nonconstant);
            checked += 1;
        }
    }

    fn random_bpoly(rng: &mut StdRng, dw: u32, dz: u32) -> BPoly {
        let mut out = BPoly::zero();
        for i in 0..=dw {
            for j in 0..=dz {
                let c = rng.random_range(-4..=4i64);
                if c != 0 {
                    out = &out + &BPoly::term(rat_int(c), i, j);
                }
            }
        }
        // make sure the intended w-degree is present
        out = &out + &BPoly::term(rat_int(1), dw, 0);
        out
    }
}
