//! Genus estimation for general plane curves F(w, z) = 0.
//!
//! Two methods with very different strength:
//!
//! * the Newton polygon interior-point count, an upper bound for the
//!   genus (exact for nondegenerate curves) — always reported as a
//!   bound, never as the genus;
//! * Riemann-Hurwitz with the z-coordinate as the covering map, valid
//!   when branching is simple: the discriminant in w must be squarefree
//!   (checked, never assumed), its degree counts the finite branch
//!   points, and the ramification at infinity is supplied by the caller.
//!
//! Lattice convention: the first coordinate is the w-exponent, the
//! second the z-exponent.

use num_integer::Integer;

use crate::bpoly::{discriminant_w, BPoly};
use crate::error::{Error, Result};

/// Exponent support of a bivariate polynomial together with the convex
/// hull of that support, counterclockwise with no collinear vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub support: Vec<(i64, i64)>,
    pub hull: Vec<(i64, i64)>,
}

/// Result of the simple-branching genus computation, with the
/// certificates the method rests on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleBranchingGenus {
    pub genus: i64,
    pub sheets: u32,
    pub discriminant_degree: usize,
    pub infinity_index: u32,
    pub total_index: i64,
}

/// Convex hull of the exponent support, exact over the integers.
pub fn newton_polygon(f: &BPoly) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support: Vec<(i64, i64)> = f.support().map(|(i, j)| (i as i64, j as i64)).collect();
    Ok(NewtonPolygon {
        hull: convex_hull(&support),
        support,
    })
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain, strict turns only, so collinear points never
/// appear as hull vertices. Degenerate inputs give a single point or the
/// two endpoints of a segment.
fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        // all points collinear: keep the extreme endpoints
        let min = *pts.first().expect("nonempty");
        let max = *pts.last().expect("nonempty");
        return vec![min, max];
    }
    lower
}

/// Strictly interior lattice points of the hull, by direct enumeration
/// over the bounding box, cross-checked against Pick's theorem
/// `I = A - B/2 + 1`. A degenerate hull has no interior.
pub fn interior_lattice_count(polygon: &NewtonPolygon) -> Result<i64> {
    let hull = &polygon.hull;
    if hull.len() < 3 {
        return Ok(0);
    }
    let min_x = hull.iter().map(|p| p.0).min().expect("nonempty");
    let max_x = hull.iter().map(|p| p.0).max().expect("nonempty");
    let min_y = hull.iter().map(|p| p.1).min().expect("nonempty");
    let max_y = hull.iter().map(|p| p.1).max().expect("nonempty");
    let mut count = 0i64;
    for x in min_x + 1..max_x {
        for y in min_y + 1..max_y {
            let strictly_inside = hull.iter().enumerate().all(|(k, &v)| {
                let next = hull[(k + 1) % hull.len()];
                cross(v, next, (x, y)) > 0
            });
            if strictly_inside {
                count += 1;
            }
        }
    }

    // Pick: twice_area = sum of edge crosses; B = boundary lattice points
    let mut twice_area = 0i64;
    let mut boundary = 0i64;
    for (k, &v) in hull.iter().enumerate() {
        let next = hull[(k + 1) % hull.len()];
        twice_area += v.0 * next.1 - next.0 * v.1;
        boundary += (next.0 - v.0).abs().gcd(&(next.1 - v.1).abs());
    }
    let pick = (twice_area - boundary + 2) / 2;
    if pick != count || (twice_area - boundary) % 2 != 0 {
        return Err(Error::Internal(format!(
            "interior count {count} disagrees with Pick's theorem {pick}"
        )));
    }
    Ok(count)
}

/// Riemann-Hurwitz genus of F(w, z) = 0 under the simple-branching
/// hypothesis: every finite branch point of the z-projection is simple,
/// certified by a squarefree discriminant. The ramification total at
/// infinity is supplied by the caller; the finite total is the
/// discriminant degree. Refuses rather than miscounts: a non-squarefree
/// discriminant or a nonconstant leading coefficient in w is an error.
pub fn genus_simple_branching(f: &BPoly, infinity_index: u32) -> Result<SimpleBranchingGenus> {
    let m = f.deg_w().filter(|&d| d >= 2).ok_or(Error::SheetCountTooSmall { min: 2 })?;
    if !f.leading_coeff_w().is_constant() {
        return Err(Error::NonConstantLeadingCoefficient);
    }
    let disc = discriminant_w(f)?;
    if disc.is_zero() || !disc.is_squarefree()? {
        return Err(Error::NonSquarefreeDiscriminant);
    }
    let disc_degree = disc.degree().unwrap_or(0);
    let total = disc_degree as i64 + infinity_index as i64;
    if total % 2 != 0 {
        return Err(Error::OddRamificationTotal { v: total });
    }
    let genus = 1 - m as i64 + total / 2;
    if genus < 0 {
        return Err(Error::NegativeGenus { genus });
    }
    Ok(SimpleBranchingGenus {
        genus,
        sheets: m,
        discriminant_degree: disc_degree,
        infinity_index,
        total_index: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperelliptic::{branch_places, genus_hyp, CurvePlace, HypCurve};
    use crate::rat::{rat_int, Rat};
    use crate::upoly::UPoly;
    use num_traits::One;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fermat(n: u32) -> BPoly {
        // w^n + z^n - 1
        &(&BPoly::term(Rat::one(), n, 0) + &BPoly::term(Rat::one(), 0, n))
            - &BPoly::one()
    }

    #[test]
    fn hull_shapes() {
        let p = newton_polygon(&fermat(4)).unwrap();
        let mut hull = p.hull.clone();
        hull.sort_unstable();
        assert_eq!(hull, vec![(0, 0), (0, 4), (4, 0)]);

        // w^2 - z^5 + 1
        let f = &(&BPoly::term(Rat::one(), 2, 0) - &BPoly::term(Rat::one(), 0, 5)) + &BPoly::one();
        let p = newton_polygon(&f).unwrap();
        let mut hull = p.hull;
        hull.sort_unstable();
        assert_eq!(hull, vec![(0, 0), (0, 5), (2, 0)]);

        // single monomial: degenerate one-point hull
        let p = newton_polygon(&BPoly::term(rat_int(3), 2, 7)).unwrap();
        assert_eq!(p.hull, vec![(2, 7)]);

        assert!(matches!(
            newton_polygon(&BPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn fermat_interior_counts() {
        for n in 2..=8i64 {
            let p = newton_polygon(&fermat(n as u32)).unwrap();
            assert_eq!(
                interior_lattice_count(&p).unwrap(),
                (n - 1) * (n - 2) / 2,
                "triangle of side {n}"
            );
        }
    }

    #[test]
    fn trigonal_triangle_and_quadrilateral() {
        // triangle (0,0), (3,0), (0,6): interior 4 (A = 9, B = 12)
        let f = &(&BPoly::term(Rat::one(), 3, 0) + &BPoly::term(Rat::one(), 0, 6)) + &BPoly::one();
        let p = newton_polygon(&f).unwrap();
        assert_eq!(interior_lattice_count(&p).unwrap(), 4);

        // quadrilateral (0,0), (2,0), (4,4), (0,4): interior 7, a strict
        // over-bound for the curve it comes from
        let f = &(&(&BPoly::term(Rat::one(), 2, 0) + &BPoly::term(Rat::one(), 4, 4))
            + &BPoly::term(Rat::one(), 0, 4))
            + &BPoly::one();
        let p = newton_polygon(&f).unwrap();
        let mut hull = p.hull.clone();
        hull.sort_unstable();
        assert_eq!(hull, vec![(0, 0), (0, 4), (2, 0), (4, 4)]);
        assert_eq!(interior_lattice_count(&p).unwrap(), 7);
    }

    #[test]
    fn pick_agrees_on_random_supports() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..40 {
            let k = rng.random_range(3..=8usize);
            let mut f = BPoly::zero();
            for _ in 0..k {
                f = &f + &BPoly::term(rat_int(1), rng.random_range(0..=7), rng.random_range(0..=7));
            }
            if f.is_zero() {
                continue;
            }
            // interior_lattice_count cross-checks Pick internally
            let p = newton_polygon(&f).unwrap();
            assert!(interior_lattice_count(&p).unwrap() >= 0);
        }
    }

    #[test]
    fn simple_branching_on_hyperelliptic_shapes() {
        // w^2 - p5(z): discriminant 4 p5 of degree 5, one more index at
        // infinity, genus 2 — matching the hyperelliptic module
        let p5 = UPoly::from_int_coeffs(&[-1, 2, 0, 0, 0, 1]);
        assert!(p5.is_squarefree().unwrap());
        let f = &BPoly::term(Rat::one(), 2, 0) - &BPoly::from_upoly_z(&p5);
        let r = genus_simple_branching(&f, 1).unwrap();
        assert_eq!(r.genus, 2);
        assert_eq!(r.discriminant_degree, 5);
        assert_eq!(r.genus, genus_hyp(&HypCurve::new(p5).unwrap()) as i64);

        // w^2 - (z^2 - 1): genus 0
        let f = &BPoly::term(Rat::one(), 2, 0) - &BPoly::from_upoly_z(&UPoly::from_int_coeffs(&[-1, 0, 1]));
        assert_eq!(genus_simple_branching(&f, 0).unwrap().genus, 0);

        // repeated-root discriminant is refused
        let sq = UPoly::from_int_coeffs(&[-1, 1]).pow(2);
        let f = &BPoly::term(Rat::one(), 2, 0) - &BPoly::from_upoly_z(&sq);
        assert!(matches!(
            genus_simple_branching(&f, 0),
            Err(Error::NonSquarefreeDiscriminant)
        ));
    }

    #[test]
    fn simple_branching_agrees_with_hyperelliptic_on_random_curves() {
        let mut rng = StdRng::seed_from_u64(17);
        let mut done = 0;
        while done < 20 {
            let n = rng.random_range(3..=8usize);
            let mut coeffs: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
            coeffs.push(1);
            let p = UPoly::from_int_coeffs(&coeffs);
            if !p.is_squarefree().unwrap() {
                continue;
            }
            let hyp = HypCurve::new(p.clone()).unwrap();
            // V_inf from the parity of the model: one ramified point at
            // infinity exactly for odd degree
            let v_inf = if branch_places(&hyp).unwrap().contains(&CurvePlace::InfinityOdd) {
                1
            } else {
                0
            };
            let f = &BPoly::term(Rat::one(), 2, 0) - &BPoly::from_upoly_z(&p);
            let r = genus_simple_branching(&f, v_inf).unwrap();
            assert_eq!(r.genus, genus_hyp(&hyp) as i64);
            done += 1;
        }
    }

    #[test]
    fn nonconstant_leading_coefficient_is_refused() {
        // z w^2 - 1: the fiber degenerates where lc vanishes
        let f = &BPoly::term(Rat::one(), 2, 1) - &BPoly::one();
        assert!(matches!(
            genus_simple_branching(&f, 0),
            Err(Error::NonConstantLeadingCoefficient)
        ));
    }
}
