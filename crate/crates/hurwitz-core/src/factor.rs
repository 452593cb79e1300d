//! Factorization of univariate polynomials into irreducibles over the
//! rationals.
//!
//! The route is the classical one: Yun's squarefree decomposition, then
//! for each squarefree part a Zassenhaus round — reduce mod a good small
//! prime, factor there, Hensel-lift to a modulus beyond the Mignotte
//! bound, and recombine lifted factors by subsets of increasing size.
//! Degree-1 inputs short-circuit the whole machine.
//!
//! Everything is exact; the only probabilistic-looking piece, the
//! equal-degree splitting, runs on a deterministic counter.

mod hensel;
mod modp;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::upoly::UPoly;

/// `f = unit * prod factors[i].0 ^ factors[i].1` with monic irreducible
/// factors, sorted by (degree, coefficients) for deterministic output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UPoly, usize)>,
}

impl Factorization {
    /// Multiply the factorization back out (used by tests and internal
    /// sanity checks).
    pub fn expand(&self) -> UPoly {
        let mut acc = UPoly::constant(self.unit.clone());
        for (q, k) in &self.factors {
            acc = &acc * &q.pow(*k);
        }
        acc
    }
}

/// Factor a nonzero polynomial into monic irreducibles over Q.
pub fn factor(f: &UPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Factorization {
            unit: f.leading_coeff(),
            factors: Vec::new(),
        });
    }
    let mut factors: Vec<(UPoly, usize)> = Vec::new();
    for (part, mult) in f.squarefree_factorization()? {
        for irr in factor_squarefree_monic(&part)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.cmp(&b.0))
            .then_with(|| a.1.cmp(&b.1))
    });
    let result = Factorization {
        unit: f.leading_coeff(),
        factors,
    };
    if result.expand() != *f {
        return Err(Error::Internal(format!(
            "factorization of {f} does not multiply back"
        )));
    }
    Ok(result)
}

/// Is `f` irreducible over Q? Constants are not irreducible.
pub fn is_irreducible(f: &UPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(false);
    }
    if f.degree() == Some(1) {
        return Ok(true);
    }
    let fac = factor(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Rational roots of `f` with multiplicities, read off the degree-1
/// irreducible factors.
pub fn rational_roots(f: &UPoly) -> Result<Vec<(Rat, usize)>> {
    let fac = factor(f)?;
    let mut roots: Vec<(Rat, usize)> = fac
        .factors
        .into_iter()
        .filter(|(q, _)| q.degree() == Some(1))
        .map(|(q, k)| (-q.coeff(0), k))
        .collect();
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

/// Factor a monic squarefree polynomial into monic irreducibles.
fn factor_squarefree_monic(g: &UPoly) -> Result<Vec<UPoly>> {
    debug_assert!(g.is_monic());
    let d = g.degree_nonzero();
    if d == 1 {
        return Ok(vec![g.clone()]);
    }

    // clear denominators: prim = L * g has integer coefficients, lc = L
    let (_, prim) = g.integer_content_and_primitive();
    let scale = prim.last().expect("nonzero").clone();

    // monicize: h(x) = L^(d-1) * prim(x/L), monic with integer
    // coefficients h_i = prim_i * L^(d-1-i)
    let mut h = vec![BigInt::zero(); d + 1];
    h[d] = BigInt::one();
    let mut power = BigInt::one();
    for i in (0..d).rev() {
        h[i] = &prim[i] * &power;
        power *= &scale;
    }

    let monic_factors = factor_monic_squarefree_int(&h)?;

    // substitute x -> L*z and renormalize each factor to monic over Q
    let scale_rat = Rat::from_integer(scale);
    let subst = UPoly::monomial(scale_rat, 1);
    let mut out = Vec::new();
    for fac in monic_factors {
        let q = UPoly::from_coeffs(fac.into_iter().map(Rat::from_integer).collect());
        out.push(q.compose(&subst).monic());
    }
    let mut check = UPoly::one();
    for q in &out {
        check = &check * q;
    }
    if check != *g {
        return Err(Error::Internal(format!(
            "squarefree factorization of {g} does not multiply back"
        )));
    }
    Ok(out)
}

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
];

/// Zassenhaus on a monic squarefree integer polynomial.
fn factor_monic_squarefree_int(h: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let d = h.len() - 1;
    if d == 1 {
        return Ok(vec![h.to_vec()]);
    }

    // a prime where h stays squarefree; only divisors of disc(h) fail
    let mut chosen = None;
    for &p in PRIMES {
        let hp = to_zp(h, p);
        if hp.degree() != Some(d) {
            continue; // cannot happen for monic h, kept for clarity
        }
        if hp.gcd(&hp.derivative()).is_one() {
            chosen = Some(p);
            break;
        }
    }
    let p = chosen.ok_or_else(|| {
        Error::Internal("no good prime found for factorization".to_string())
    })?;

    // factor mod p
    let hp = to_zp(h, p).make_monic();
    let mut modular: Vec<modp::ZpPoly> = Vec::new();
    let mut counter = 0u64;
    for (prod, deg) in modp::distinct_degree(&hp) {
        modular.extend(modp::equal_degree(&prod, deg, &mut counter));
    }
    if modular.len() == 1 {
        return Ok(vec![h.to_vec()]);
    }

    // Hensel lift past twice the Mignotte-style coefficient bound
    let norm_sq: BigInt = h.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << d) * (norm_sq.sqrt() + 1);
    let target = &bound * 4;
    let (lifted, modulus) = hensel::lift_factorization(h, &modular, p, &target);

    // subset recombination, smallest subsets first
    let r = lifted.len();
    let mut masks: Vec<u32> = (1..(1u32 << r)).collect();
    masks.sort_by_key(|m| m.count_ones());
    let mut used: u32 = 0;
    let mut remaining = UPoly::from_coeffs(h.iter().cloned().map(Rat::from_integer).collect());
    let mut out = Vec::new();
    for mask in masks {
        if mask & used != 0 {
            continue;
        }
        if remaining.is_one() {
            break;
        }
        let mut cand = vec![BigInt::one()];
        for (i, fac) in lifted.iter().enumerate() {
            if mask & (1 << i) != 0 {
                cand = hensel::mul(&cand, fac, &modulus);
            }
        }
        let cand: Vec<BigInt> = cand.iter().map(|c| hensel::symmetric(c, &modulus)).collect();
        let cand_poly = UPoly::from_coeffs(cand.iter().cloned().map(Rat::from_integer).collect());
        if let Ok((quot, rem)) = remaining.div_rem(&cand_poly) {
            if rem.is_zero() {
                out.push(cand);
                remaining = quot;
                used |= mask;
            }
        }
    }
    if !remaining.is_one() {
        return Err(Error::Internal(
            "recombination left a nontrivial cofactor".to_string(),
        ));
    }
    Ok(out)
}

fn to_zp(h: &[BigInt], p: u64) -> modp::ZpPoly {
    let pb = BigInt::from(p);
    let coeffs = h
        .iter()
        .map(|c| {
            let r = c % &pb;
            let r = if r.is_negative() { r + &pb } else { r };
            u64::try_from(r).expect("residue fits in u64")
        })
        .collect();
    modp::ZpPoly::new(p, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn zpow(k: usize) -> UPoly {
        UPoly::monomial(rat_int(1), k)
    }

    #[test]
    fn factors_cyclotomic_split() {
        // z^5 - 1 = (z - 1)(z^4 + z^3 + z^2 + z + 1)
        let f = &zpow(5) - &UPoly::one();
        let fac = factor(&f).unwrap();
        assert_eq!(fac.unit, rat_int(1));
        assert_eq!(
            fac.factors,
            vec![
                (UPoly::from_int_coeffs(&[-1, 1]), 1),
                (UPoly::from_int_coeffs(&[1, 1, 1, 1, 1]), 1),
            ]
        );
    }

    #[test]
    fn factors_the_minus_four_fourth_power_classic() {
        // z^4 + 4 = (z^2 - 2z + 2)(z^2 + 2z + 2)
        let f = &zpow(4) + &UPoly::constant(rat_int(4));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(q, k)| q.degree() == Some(2) && *k == 1));
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn keeps_irreducibles_whole() {
        assert!(is_irreducible(&UPoly::from_int_coeffs(&[1, 0, 1])).unwrap()); // z^2+1
        assert!(is_irreducible(&UPoly::from_int_coeffs(&[-2, 0, 0, 1])).unwrap()); // z^3-2
        assert!(is_irreducible(&UPoly::from_int_coeffs(&[1, 1, 1, 1, 1])).unwrap());
        assert!(!is_irreducible(&UPoly::from_int_coeffs(&[-1, 0, 1])).unwrap()); // z^2-1
        assert!(!is_irreducible(&UPoly::one()).unwrap());
    }

    #[test]
    fn handles_rational_coefficients_and_multiplicity() {
        // (2/3) * (z - 1/2)^2 * (z^2 + 1)
        let lin = UPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)]);
        let quad = UPoly::from_int_coeffs(&[1, 0, 1]);
        let f = &(&lin.pow(2) * &quad) * &UPoly::constant(rat(2, 3));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.unit, rat(2, 3));
        assert_eq!(fac.factors, vec![(lin, 2), (quad, 1)]);
    }

    #[test]
    fn rational_roots_of_split_polynomial() {
        // z^2(z - 3)(z^2 + 1): roots 0 (twice) and 3
        let f = &(&zpow(2) * &UPoly::from_int_coeffs(&[-3, 1]))
            * &UPoly::from_int_coeffs(&[1, 0, 1]);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![(rat_int(0), 2), (rat_int(3), 1)]);
    }

    #[test]
    fn monicization_with_nontrivial_denominator_lcm() {
        // the squarefree part has denominator lcm 30 and splits into
        // pieces of degree 1, 1, 2
        let f = &(&UPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)])
            * &UPoly::from_coeffs(vec![rat(1, 3), rat_int(1)]))
            * &UPoly::from_coeffs(vec![rat(1, 5), rat_int(0), rat_int(1)]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.factors.len(), 3);
        // and an irreducible quadratic with rational coefficients stays whole
        let q = UPoly::from_coeffs(vec![rat(1, 2), rat(1, 2), rat_int(1)]);
        assert!(is_irreducible(&q).unwrap());
    }

    #[test]
    fn random_products_multiply_back() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..25 {
            let n = rng.random_range(1..=4usize);
            let mut f = UPoly::constant(rat_int(rng.random_range(1..=3)));
            for _ in 0..n {
                let deg = rng.random_range(1..=3usize);
                let mut coeffs: Vec<Rat> =
                    (0..deg).map(|_| rat_int(rng.random_range(-3..=3))).collect();
                coeffs.push(rat_int(1));
                f = &f * &UPoly::from_coeffs(coeffs).pow(rng.random_range(1..=2));
            }
            let fac = factor(&f).unwrap();
            assert_eq!(fac.expand(), f, "failed on {f}");
            for (q, _) in &fac.factors {
                assert!(is_irreducible(q).unwrap(), "{q} not irreducible");
            }
        }
    }
}
