//! Acceptance suite: one test per criterion, each printing a PASS line.
//! All arithmetic is exact, so every comparison is strict equality.
//! The CLI conformance criterion lives in the CLI crate's own
//! acceptance target.

use hurwitz_core::bpoly::BPoly;
use hurwitz_core::divisor::{Divisor, Place};
use hurwitz_core::factor::is_irreducible;
use hurwitz_core::hyperelliptic::{
    branch_places, canonical_degree_check, gap_sequence_at_infinity, genus_hyp,
    lspace_infinity_basis, wronskian::wronskian_order_at, CurvePlace, HypCurve,
};
use hurwitz_core::parse;
use hurwitz_core::plane_curve::{genus_simple_branching, interior_lattice_count, newton_polygon};
use hurwitz_core::rat::{rat, rat_int, Rat};
use hurwitz_core::ratfun::{residue_sum_check, RatFun};
use hurwitz_core::riemann_hurwitz::kowalewski_genus;
use hurwitz_core::riemann_roch::{canonical_divisor_p1, lspace_basis_p1, riemann_roch_verify_p1};
use hurwitz_core::superelliptic::{genus_superelliptic, ramification_profile, SuperCurve};
use hurwitz_core::upoly::UPoly;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_squarefree(rng: &mut StdRng, degree: usize) -> UPoly {
    loop {
        let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.random_range(-5..=5)).collect();
        coeffs.push(rng.random_range(1..=3));
        let f = UPoly::from_int_coeffs(&coeffs);
        if f.is_squarefree().unwrap() {
            return f;
        }
    }
}

#[test]
fn criterion_01_hyperelliptic_genus_family() {
    let mut rng = StdRng::seed_from_u64(101);
    for n in 3..=12usize {
        for _ in 0..3 {
            let f = random_squarefree(&mut rng, n);
            let curve = SuperCurve::new(2, f).unwrap();
            assert_eq!(
                genus_superelliptic(&curve).unwrap(),
                ((n - 1) / 2) as i64,
                "degree {n}"
            );
        }
    }
    println!("PASS criterion 1: genus(w^2 = f_n) = floor((n-1)/2) for n = 3..12");
}

#[test]
fn criterion_02_quartic_example() {
    let (m, f) = parse::parse_curve_equation("w^4 = z^4 - 1").unwrap();
    let curve = SuperCurve::new(m, f).unwrap();
    let profile = ramification_profile(&curve).unwrap();
    assert_eq!(profile.total_index, 12);
    assert_eq!(genus_superelliptic(&curve).unwrap(), 3);
    println!("PASS criterion 2: w^4 = z^4 - 1 has V = 12 and genus 3");
}

#[test]
fn criterion_03_fermat_family() {
    for n in 2..=10u32 {
        let f = &UPoly::one() - &UPoly::monomial(rat_int(1), n as usize);
        let curve = SuperCurve::new(n, f).unwrap();
        let genus = genus_superelliptic(&curve).unwrap();
        let expected = ((n as i64 - 1) * (n as i64 - 2)) / 2;
        assert_eq!(genus, expected, "Fermat n = {n}");
        if n >= 3 {
            assert!(genus >= 1);
        }
        // the polygon bound coincides on this family
        let fermat = parse::parse_bpoly(&format!("w^{n} + z^{n} - 1")).unwrap();
        let bound = interior_lattice_count(&newton_polygon(&fermat).unwrap()).unwrap();
        assert_eq!(bound, expected);
    }
    println!("PASS criterion 3: Fermat genus (n-1)(n-2)/2 for n = 2..10, polygon bound equal");
}

#[test]
fn criterion_04_trigonal_example() {
    // a concrete generic instance of w^3 + p2 w^2 + p4 w + p6; the
    // discriminant is verified squarefree of degree 12, never assumed
    let f = parse::parse_bpoly("w^3 + z^2*w^2 + (z^4 + z)*w + z^6 + 1").unwrap();
    let result = genus_simple_branching(&f, 0).unwrap();
    assert_eq!(result.discriminant_degree, 12);
    assert_eq!(result.genus, 4);
    let bound = interior_lattice_count(&newton_polygon(&f).unwrap()).unwrap();
    assert_eq!(bound, 4);
    println!("PASS criterion 4: trigonal instance has squarefree degree-12 discriminant, genus 4, polygon bound 4");
}

#[test]
fn criterion_05_kowalewski_sweep() {
    let mut rng = StdRng::seed_from_u64(505);
    let mut accepted = 0;
    let mut rejected = Vec::new();
    for i in 0..50 {
        let mut draw = || loop {
            let n = rng.random_range(-4..=4i64);
            if n != 0 {
                return rat(n, rng.random_range(1..=3i64));
            }
        };
        let (a, b, c) = (draw(), draw(), draw());
        match kowalewski_genus(&a, &b, &c) {
            Ok(result) => {
                assert_eq!(result.base_genus, 1, "quotient must be elliptic");
                assert_eq!(result.genus, 3, "sample {i}");
                accepted += 1;
            }
            Err(e) => rejected.push(format!("sample {i}: {e}")),
        }
    }
    for r in &rejected {
        println!("  rejected {r}");
    }
    assert!(accepted >= 45, "only {accepted} generic samples out of 50");
    println!("PASS criterion 5: kowalewski genus 3 on {accepted}/50 samples, degenerates rejected with certificates");
}

#[test]
fn criterion_06_canonical_degree() {
    for g in 1..=4usize {
        for n in [2 * g + 1, 2 * g + 2] {
            let mut coeffs = vec![0i64; n + 1];
            coeffs[1] = -1;
            coeffs[n] = 1;
            let curve = HypCurve::new(UPoly::from_int_coeffs(&coeffs)).unwrap();
            assert_eq!(genus_hyp(&curve) as usize, g);
            assert_eq!(canonical_degree_check(&curve).unwrap(), 2 * g as i64 - 2);
        }
    }
    assert_eq!(canonical_divisor_p1().degree(), -2);
    println!("PASS criterion 6: deg K = 2g - 2 on hyperelliptic g = 1..4 and the line");
}

fn random_place(rng: &mut StdRng) -> Place {
    if rng.random_range(0..5) == 0 {
        return Place::Infinity;
    }
    let degree = rng.random_range(1..=3usize);
    loop {
        let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.random_range(-4..=4)).collect();
        coeffs.push(1);
        let q = UPoly::from_int_coeffs(&coeffs);
        if is_irreducible(&q).unwrap() {
            return Place::finite(&q).unwrap();
        }
    }
}

#[test]
fn criterion_07_riemann_roch_on_the_line() {
    let mut rng = StdRng::seed_from_u64(707);
    for _ in 0..200 {
        let mut divisor = Divisor::zero();
        let places = rng.random_range(0..=4usize);
        for _ in 0..places {
            divisor.add_place(random_place(&mut rng), rng.random_range(-3..=3i64));
        }
        if !(-6..=6).contains(&divisor.degree()) {
            continue;
        }
        let check = riemann_roch_verify_p1(&divisor).unwrap();
        assert_eq!(check.lhs, check.rhs, "imbalance on {divisor}");
        assert_eq!(
            check.dim_l_d as i64,
            (divisor.degree() + 1).max(0),
            "dimension formula on {divisor}"
        );
    }
    println!("PASS criterion 7: Riemann-Roch balances on 200 random divisors");
}

fn random_ratfun(rng: &mut StdRng) -> RatFun {
    loop {
        let deg_n = rng.random_range(0..=4usize);
        let deg_d = rng.random_range(0..=4usize);
        let num: Vec<i64> = (0..=deg_n).map(|_| rng.random_range(-4..=4)).collect();
        let den: Vec<i64> = (0..=deg_d).map(|_| rng.random_range(-4..=4)).collect();
        let num = UPoly::from_int_coeffs(&num);
        let den = UPoly::from_int_coeffs(&den);
        if num.is_zero() || den.is_zero() {
            continue;
        }
        let f = RatFun::new(num, den).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

#[test]
fn criterion_08_principal_divisor_law() {
    let mut rng = StdRng::seed_from_u64(808);
    for _ in 0..200 {
        let f = random_ratfun(&mut rng);
        let g = random_ratfun(&mut rng);
        let df = f.principal_divisor().unwrap();
        let dg = g.principal_divisor().unwrap();
        assert_eq!(df.degree(), 0);
        let product = &f * &g;
        if product.is_zero() {
            continue;
        }
        assert_eq!(
            product.principal_divisor().unwrap(),
            df.add(&dg),
            "(fg) != (f) + (g) for f = {f}, g = {g}"
        );
    }
    println!("PASS criterion 8: deg (f) = 0 and (fg) = (f) + (g) on 200 random functions");
}

#[test]
fn criterion_09_gap_sequences_and_dimensions() {
    for g in [2u32, 3] {
        let n = 2 * g as usize + 1;
        let mut coeffs = vec![0i64; n + 1];
        coeffs[1] = -1;
        coeffs[n] = 1;
        let curve = HypCurve::new(UPoly::from_int_coeffs(&coeffs)).unwrap();
        let gaps = gap_sequence_at_infinity(&curve).unwrap();
        let expected: Vec<u32> = (0..g).map(|k| 2 * k + 1).collect();
        assert_eq!(gaps, expected, "gaps at genus {g}");
        for m in (2 * g - 1)..=(4 * g) {
            let basis = lspace_infinity_basis(&curve, m).unwrap();
            assert_eq!(
                basis.dimension as i64,
                m as i64 - g as i64 + 1,
                "dim L({m} inf) at genus {g}"
            );
        }
    }
    println!("PASS criterion 9: gap sequence {{1, 3, ..., 2g-1}} and dim L(m inf) = m - g + 1");
}

#[test]
fn criterion_10_wronskian_weights() {
    // w^2 = z(z-1)(z-2)(z-3)(z-4)
    let mut p = UPoly::var();
    for a in 1..=4 {
        p = &p * &UPoly::from_int_coeffs(&[-a, 1]);
    }
    let curve = HypCurve::new(p).unwrap();
    let g = genus_hyp(&curve) as i64;
    let places = branch_places(&curve).unwrap();
    assert_eq!(places.len(), 6);
    let mut total = 0;
    for place in &places {
        let ord = wronskian_order_at(&curve, place).unwrap();
        assert_eq!(ord, 1, "order at {place}");
        total += ord * place.point_count() as i64;
    }
    assert_eq!(total, g * g * g - g);
    assert_eq!(total, 6);
    println!("PASS criterion 10: Wronskian orders all 1, total g^3 - g = 6");
}

#[test]
fn criterion_11_residue_theorem() {
    let mut rng = StdRng::seed_from_u64(1111);
    for _ in 0..100 {
        // denominator: product of distinct linear factors with small
        // multiplicities, so it splits over the rationals
        let k = rng.random_range(1..=3usize);
        let mut roots: Vec<i64> = Vec::new();
        while roots.len() < k {
            let a = rng.random_range(-4..=4);
            if !roots.contains(&a) {
                roots.push(a);
            }
        }
        let mut den = UPoly::one();
        for a in &roots {
            den = &den * &UPoly::from_int_coeffs(&[-a, 1]).pow(rng.random_range(1..=2));
        }
        let deg_n = rng.random_range(0..=6usize);
        let num: Vec<i64> = (0..=deg_n).map(|_| rng.random_range(-5..=5)).collect();
        let num = UPoly::from_int_coeffs(&num);
        if num.is_zero() {
            continue;
        }
        let f = RatFun::new(num, den).unwrap();
        let sum = residue_sum_check(&f).unwrap();
        assert_eq!(sum, Rat::zero(), "nonzero residue sum for {f}");
    }
    println!("PASS criterion 11: residue sum exactly 0 on 100 random split differentials");
}

// Criterion 12 (CLI conformance) is the acceptance target of the
// hurwitz-cli crate: the binary is only visible from there.
#[test]
fn criterion_12_see_cli_crate() {
    let poly = parse::parse_bpoly("w^2 - (z^5 - 1)").unwrap();
    assert_eq!(poly.deg_w(), Some(2));
    println!("PASS criterion 12: delegated to the hurwitz-cli acceptance target");
}
