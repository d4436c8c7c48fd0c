mod common;

use banach_geom_core::daugavet::{daugavet_residual, operator_norm, OperatorMatrix};
use banach_geom_core::faces::{a0_set, d_region, distance_to_set, duality_map, exposed_face, hausdorff, FaceSet};
use banach_geom_core::farthest::{far_set, farthest_distance, farthest_points, hull_vertices, PointSet, TIE_TOL};
use banach_geom_core::properties::{check_acs, check_hs_slices, check_rotund, check_smooth, slice_profile};
use banach_geom_core::{Functional, NormFamily, NormedSpace, ProbeConfig, Vector};
use common::*;
use proptest::prelude::*;

fn space(i: usize) -> NormedSpace {
    catalogue().swap_remove(i % 9).1
}

fn coords() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, 3)
}

fn nonzero(c: &[f64], dim: usize) -> Option<Vector> {
    let x = v(&c[..dim]);
    (x.coords().iter().map(|t| t.abs()).fold(0.0, f64::max) > 1e-3).then_some(x)
}

fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

fn add(a: &Vector, b: &Vector) -> Vector {
    v(&a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn norm_axioms(i in 0usize..9, a in coords(), b in coords(), s in -5.0f64..5.0) {
        let sp = space(i);
        let n = sp.dim();
        let (x, y) = (v(&a[..n]), v(&b[..n]));
        let (nx, ny) = (sp.norm(&x).unwrap(), sp.norm(&y).unwrap());
        prop_assert!(nx >= 0.0);
        prop_assert!(sp.norm(&add(&x, &y)).unwrap() <= (nx + ny) * (1.0 + 1e-12) + 1e-15);
        let scaled = sp.norm(&x.scaled(s)).unwrap();
        prop_assert!((scaled - s.abs() * nx).abs() <= 1e-12 * (1.0 + scaled));
    }

    #[test]
    fn subgradient_norms_the_point(i in 0usize..9, a in coords()) {
        let sp = space(i);
        let Some(x) = nonzero(&a, sp.dim()) else { return Ok(()) };
        let g = sp.subgradient(&x).unwrap();
        let nx = sp.norm(&x).unwrap();
        prop_assert!((sp.dual_norm(&g).unwrap() - 1.0).abs() <= 1e-9);
        prop_assert!((g.apply(&x).unwrap() - nx).abs() <= 1e-9 * (1.0 + nx));
    }

    #[test]
    fn lp_duality(p in prop::sample::select(vec![1.0, 1.5, 2.0, 3.0, 7.0, f64::INFINITY]), dim in 1usize..4, a in coords()) {
        let primal = NormedSpace::lp(dim, p).unwrap();
        let dual = NormedSpace::lp(dim, conjugate(p)).unwrap();
        let g = Functional::new(a[..dim].to_vec()).unwrap();
        let d = primal.dual_norm(&g).unwrap();
        let e = dual.norm(&v(&a[..dim])).unwrap();
        if p == 1.0 || p == 2.0 || p.is_infinite() {
            prop_assert!((d - e).abs() <= 1e-15 * (1.0 + e));
        } else {
            prop_assert!((d - e).abs() <= 1e-10 * (1.0 + e));
        }
    }

    #[test]
    fn vertex_and_facet_descriptions_agree(a in coords()) {
        let hexv = hexagon();
        let facets = hexv.dual_vertices().unwrap().iter().map(|c| Functional::new(c.clone()).unwrap()).collect();
        let hexh = NormedSpace::new(2, NormFamily::PolytopeH { facets }).unwrap();
        let x = v(&a[..2]);
        prop_assert!((hexv.norm(&x).unwrap() - hexh.norm(&x).unwrap()).abs() <= 1e-10);
    }

    #[test]
    fn vertex_description_matches_lp_cube(dim in 1usize..4, a in coords()) {
        let cube = linf(dim);
        let vertices = cube.ball_vertices().unwrap().iter().map(|c| v(c)).collect();
        let poly = NormedSpace::new(dim, NormFamily::PolytopeV { vertices }).unwrap();
        let x = v(&a[..dim]);
        prop_assert!((poly.norm(&x).unwrap() - cube.norm(&x).unwrap()).abs() <= 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exposed_faces_lie_in_a0(i in 0usize..9, a in coords()) {
        let sp = space(i);
        let Some(x) = nonzero(&a, sp.dim()) else { return Ok(()) };
        let x = sp.normalize(&x).unwrap();
        let a0 = a0_set(&sp, &x).unwrap();
        for p in a0.points() {
            prop_assert!((sp.norm(&add(&x, p)).unwrap() - 2.0).abs() <= 2e-9 + a0.mesh());
        }
        for g in duality_map(&sp, &x).unwrap().extremes {
            let face = exposed_face(&sp, &g).unwrap();
            for p in face.points() {
                let d = distance_to_set(&sp, p, &a0).unwrap();
                prop_assert!(d.distance <= 1e-9 + d.error_bound + a0.mesh(), "{:?} {}", p, d.distance);
            }
        }
    }

    #[test]
    fn hausdorff_is_a_metric(i in 0usize..9, a in coords(), b in coords(), c in coords()) {
        let sp = space(i);
        let n = sp.dim();
        let (Some(x), Some(y), Some(z)) = (nonzero(&a, n), nonzero(&b, n), nonzero(&c, n)) else { return Ok(()) };
        let face = |w: &Vector| exposed_face(&sp, &sp.subgradient(w).unwrap()).unwrap();
        let (fx, fy, fz) = (face(&x), face(&y), face(&z));
        let xy = hausdorff(&sp, &fx, &fy).unwrap();
        let yx = hausdorff(&sp, &fy, &fx).unwrap();
        let yz = hausdorff(&sp, &fy, &fz).unwrap();
        let xz = hausdorff(&sp, &fx, &fz).unwrap();
        let slack = xy.error_bound + yz.error_bound + xz.error_bound + 1e-9;
        prop_assert!(xy.value >= 0.0);
        prop_assert!((xy.value - yx.value).abs() <= xy.error_bound + yx.error_bound + 1e-9);
        prop_assert!(xz.value <= xy.value + yz.value + slack);
        prop_assert!(hausdorff(&sp, &fx, &fx).unwrap().value <= 1e-9);
    }

    #[test]
    fn rank_one_norming_operators_satisfy_daugavet(i in 0usize..9, a in coords(), s in 0.01f64..5.0) {
        let sp = space(i);
        let Some(y) = nonzero(&a, sp.dim()) else { return Ok(()) };
        let y = sp.normalize(&y).unwrap();
        let c = ProbeConfig::default();
        for f in duality_map(&sp, &y).unwrap().extremes {
            let t = OperatorMatrix::rank_one(f.coeffs(), y.coords()).scaled(s);
            let r = daugavet_residual(&sp, &t, &c).unwrap();
            prop_assert!(r.abs() <= 1e-9, "{r}");
        }
    }

    #[test]
    fn operator_norms_are_submultiplicative(i in 0usize..9, a in prop::collection::vec(-2.0f64..2.0, 9), b in prop::collection::vec(-2.0f64..2.0, 9)) {
        let sp = space(i);
        let n = sp.dim();
        let c = ProbeConfig::default();
        let s = OperatorMatrix::from_row_major(n, a[..n * n].to_vec()).unwrap();
        let t = OperatorMatrix::from_row_major(n, b[..n * n].to_vec()).unwrap();
        let ns = operator_norm(&sp, &s, &c).unwrap();
        let nt = operator_norm(&sp, &t, &c).unwrap();
        let nst = operator_norm(&sp, &s.mul(&t), &c).unwrap();
        if ns.exact && nt.exact {
            prop_assert!(nst.value <= ns.value * nt.value * (1.0 + 1e-12) + 1e-9);
        }
        prop_assert!(daugavet_residual(&sp, &t, &c).unwrap() >= -1e-9 || !nt.exact);
    }

    #[test]
    fn farthest_distance_is_lipschitz(i in 0usize..9, pts in prop::collection::vec(coords(), 1..12), a in coords(), b in coords()) {
        let sp = space(i);
        let n = sp.dim();
        let k = PointSet::from_coords(pts.iter().map(|p| p[..n].to_vec()).collect(), "k").unwrap();
        let (x, y) = (v(&a[..n]), v(&b[..n]));
        let gap = (farthest_distance(&sp, &x, &k).unwrap() - farthest_distance(&sp, &y, &k).unwrap()).abs();
        let xy = sp.norm(&add(&x, &y.scaled(-1.0))).unwrap();
        prop_assert!(gap <= xy + 1e-12);
    }

    #[test]
    fn far_points_are_hull_vertices(i in 0usize..9, pts in prop::collection::vec(coords(), 1..10), seed in 0u64..1000) {
        let sp = space(i);
        let n = sp.dim();
        let raw: Vec<Vec<f64>> = pts.iter().map(|p| p[..n].to_vec()).collect();
        let k = PointSet::from_coords(raw.clone(), "k").unwrap();
        let hull = hull_vertices(&raw).unwrap();
        for j in far_set(&sp, &k, 64, TIE_TOL, seed).unwrap() {
            let dup = hull.iter().any(|&h| raw[h] == raw[j]);
            prop_assert!(hull.contains(&j) || dup, "{j} not in {hull:?}");
        }
    }

    #[test]
    fn attaining_points_outside_hull_are_vertices(pts in prop::collection::vec(coords(), 3..10), dir in 0.0f64..std::f64::consts::TAU) {
        let sp = l2(2);
        let raw: Vec<Vec<f64>> = pts.iter().map(|p| p[..2].to_vec()).collect();
        let k = PointSet::from_coords(raw.clone(), "k").unwrap();
        let hull = hull_vertices(&raw).unwrap();
        let x = v(&[20.0 * dir.cos(), 20.0 * dir.sin()]);
        for j in farthest_points(&sp, &x, &k, TIE_TOL).unwrap().attaining {
            prop_assert!(hull.iter().any(|&h| raw[h] == raw[j]));
        }
    }
}

#[test]
fn identity_has_norm_one_everywhere() {
    let c = ProbeConfig::default();
    for (label, sp) in catalogue() {
        assert_eq!(operator_norm(&sp, &OperatorMatrix::identity(sp.dim()), &c).unwrap().value, 1.0, "{label}");
    }
}

#[test]
fn polytope_faces_match_brute_force() {
    for sp in [hexagon(), linf(3), l1(3)] {
        for g in sp.dual_sphere_sample(64, 1) {
            let verts = sp.ball_vertices().unwrap();
            let top = verts.iter().map(|p| g.apply(&v(p)).unwrap()).fold(f64::MIN, f64::max);
            let expect: Vec<Vec<f64>> =
                verts.iter().filter(|p| g.apply(&v(p)).unwrap() >= top - 1e-9).cloned().collect();
            let face: FaceSet = exposed_face(&sp, &g).unwrap();
            let got: Vec<Vec<f64>> = face.points().iter().map(|p| p.coords().to_vec()).collect();
            assert_eq!(sorted(got), sorted(expect));
        }
    }
}

#[test]
fn acs_routes_agree_in_the_plane() {
    let c = ProbeConfig { samples: 2000, ..ProbeConfig::default() };
    for (label, sp) in catalogue().into_iter().filter(|(_, s)| s.dim() == 2) {
        let acs = check_acs(&sp, &c).unwrap().status.holds();
        let rotund = check_rotund(&sp, &c).unwrap().status.holds();
        let smooth = check_smooth(&sp, &c).unwrap().status.holds();
        assert_eq!(acs, rotund || smooth, "{label}");
        if rotund || smooth {
            assert!(acs, "{label}");
        }
    }
}

#[test]
fn failing_certificates_reverify() {
    let c = ProbeConfig { samples: 2000, ..ProbeConfig::default() };
    for (label, sp) in catalogue() {
        for v in [check_rotund(&sp, &c).unwrap(), check_smooth(&sp, &c).unwrap(), check_acs(&sp, &c).unwrap()] {
            if let Some(cert) = &v.certificate {
                assert!(cert.reverify(&sp, &c).unwrap(), "{label} {}", v.property);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn stadium_gauge_solves_its_defining_equation(a in coords()) {
        let sp = stadium();
        let Some(x) = nonzero(&a, 2) else { return Ok(()) };
        let t = sp.norm(&x).unwrap();
        let (p, q) = (x.coords()[0] / t, x.coords()[1] / t);
        let dx = (p.abs() - 0.5).max(0.0);
        prop_assert!(((dx * dx + q * q).sqrt() - 1.0).abs() <= 1e-12);
    }
}

/// Points with `|x + y| >= 2 - tol` lie in `D[x, tol / 2]`, so their distance
/// to `A_0(x)` is bounded by that region's Hausdorff distance to it.
#[test]
fn tangent_sphere_points_lie_near_a0() {
    let tol = 1e-9;
    for (label, sp) in catalogue() {
        for x in sp.sphere_sample(6, 2) {
            let a0 = a0_set(&sp, &x).unwrap();
            let h = hausdorff(&sp, &d_region(&sp, &x, tol / 2.0, 64, 5).unwrap(), &a0).unwrap();
            for y in sp.sphere_sample(4000, 3) {
                if sp.norm(&add(&x, &y)).unwrap() >= 2.0 - tol {
                    let d = distance_to_set(&sp, &y, &a0).unwrap();
                    let bound = h.value + h.error_bound + a0.mesh() + d.error_bound + 1e-9;
                    assert!(d.distance <= bound, "{label} {x:?} {y:?} {} > {bound}", d.distance);
                }
            }
        }
    }
}

#[test]
fn density_fraction_is_reproducible_across_seeds() {
    let sq =
        PointSet::from_coords(vec![vec![1.0, 1.0], vec![1.0, -1.0], vec![-1.0, 1.0], vec![-1.0, -1.0]], "sq").unwrap();
    let cfg = ProbeConfig::default();
    let fr: Vec<f64> = (0..4)
        .map(|s| {
            banach_geom_core::farthest::density_experiment(&linf(2), &sq, &cfg.clone().with_seed(s)).unwrap().fraction
        })
        .collect();
    let spread = fr.iter().copied().fold(f64::MIN, f64::max) - fr.iter().copied().fold(f64::MAX, f64::min);
    assert!(spread <= 0.01, "{fr:?}");
}

#[test]
fn hs_passes_everywhere_with_stable_rates() {
    let cfg = ProbeConfig::default();
    let other = cfg.clone().with_seed(7);
    for (label, sp) in catalogue() {
        let a = check_hs_slices(&sp, &cfg).unwrap();
        let b = check_hs_slices(&sp, &other).unwrap();
        assert!(a.verdict.status.holds() && b.verdict.status.holds(), "{label}");
        let (ea, eb) = (a.worst_rate_exponent, b.worst_rate_exponent);
        assert!((ea - eb).abs() <= 0.2 * ea.max(eb), "{label}: exponents {ea} vs {eb}");
        for g in sp.dual_sphere_sample(8, 11) {
            let ca = slice_profile(&sp, &g, &cfg.delta_schedule, &cfg).unwrap().rate_constant();
            let cb = slice_profile(&sp, &g, &cfg.delta_schedule, &other).unwrap().rate_constant();
            assert!((ca - cb).abs() <= 0.2 * ca.max(cb) + 1e-12, "{label} {g:?}: {ca} vs {cb}");
        }
    }
}
