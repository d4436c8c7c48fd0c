mod common;

use banach_geom_core::farthest::{
    density_experiment, far_set, farthest_distance, farthest_points, hull_equality_check, PointSet, TIE_TOL,
};
use banach_geom_core::{rng, GeomError, ProbeConfig, Status};
use common::*;

fn square() -> PointSet {
    PointSet::from_coords(vec![vec![1.0, 1.0], vec![1.0, -1.0], vec![-1.0, 1.0], vec![-1.0, -1.0]], "square").unwrap()
}

fn with_centroid() -> PointSet {
    let mut p = square().points().to_vec();
    p.push(v(&[0.0, 0.0]));
    PointSet::new(p, "square+centroid").unwrap()
}

fn random_set(n: usize, seed: u64) -> PointSet {
    let mut r = rng::stream(seed, "points", 0);
    let pts = (0..n).map(|_| rng::gaussian_vec(&mut r, 2)).collect();
    PointSet::from_coords(pts, "random").unwrap()
}

#[test]
fn farthest_distances() {
    assert_close(farthest_distance(&l2(2), &v(&[2.0, 0.0]), &square()).unwrap(), 10f64.sqrt(), 1e-12);
    assert_eq!(farthest_distance(&linf(2), &v(&[2.0, 0.0]), &square()).unwrap(), 3.0);
    let single = PointSet::from_coords(vec![vec![0.3, 0.4]], "x").unwrap();
    assert_eq!(farthest_distance(&l2(2), &v(&[0.3, 0.4]), &single).unwrap(), 0.0);
}

#[test]
fn empty_set_is_an_error() {
    assert_eq!(PointSet::from_coords(vec![], "none").unwrap_err(), GeomError::EmptySet);
}

#[test]
fn attaining_sets_and_ties() {
    let r = farthest_points(&l2(2), &v(&[2.0, 0.0]), &square(), TIE_TOL).unwrap();
    assert_eq!(
        sorted(r.attaining.iter().map(|&i| square().points()[i].coords().to_vec()).collect()),
        vec![vec![-1.0, -1.0], vec![-1.0, 1.0]]
    );
    assert!(!r.unique);
    let r = farthest_points(&l2(2), &v(&[2.0, 0.1]), &square(), TIE_TOL).unwrap();
    assert_eq!(r.attaining, vec![3]);
    assert!(r.unique);
}

#[test]
fn far_sets() {
    let two = PointSet::from_coords(vec![vec![0.0, 0.0], vec![1.0, 2.0]], "pair").unwrap();
    assert_eq!(far_set(&l2(2), &two, 100, TIE_TOL, 0).unwrap(), vec![0, 1]);
    assert_eq!(far_set(&l2(2), &square(), 100, TIE_TOL, 0).unwrap(), vec![0, 1, 2, 3]);
    assert_eq!(far_set(&l2(2), &with_centroid(), 1000, TIE_TOL, 0).unwrap(), vec![0, 1, 2, 3]);
}

#[test]
fn euclidean_uniqueness_is_dense() {
    let r = density_experiment(&l2(2), &random_set(20, 5), &ProbeConfig::default()).unwrap();
    assert_eq!(r.total, 10_000);
    assert!(r.fraction >= 0.99, "{}", r.fraction);
    assert!(r.warning.is_none());
    let single = PointSet::from_coords(vec![vec![1.0, 1.0]], "x").unwrap();
    assert_eq!(density_experiment(&l2(2), &single, &ProbeConfig::default()).unwrap().fraction, 1.0);
}

#[test]
fn square_ties_have_positive_area() {
    let c = ProbeConfig::default();
    let a = density_experiment(&linf(2), &square(), &c).unwrap();
    let b = density_experiment(&linf(2), &square(), &c.with_seed(9)).unwrap();
    assert!(a.fraction < 0.95, "{}", a.fraction);
    assert!((a.fraction - b.fraction).abs() < 0.02);
    assert!(a.warning.is_some());
}

#[test]
fn hull_equality_examples() {
    let c = ProbeConfig::default();
    assert_eq!(hull_equality_check(&l2(2), &square(), &c).unwrap().status, Status::HoldsNumerical);
    assert_eq!(hull_equality_check(&l2(2), &with_centroid(), &c).unwrap().status, Status::HoldsNumerical);
    let c = ProbeConfig { samples: 200, ..c };
    for trial in 0..30 {
        let v = hull_equality_check(&l2(2), &random_set(20, trial), &c).unwrap();
        assert!(v.status.holds(), "trial {trial}: {v:?}");
    }
}

#[test]
fn hull_equality_is_euclidean_only() {
    let c = ProbeConfig::default();
    assert!(matches!(hull_equality_check(&linf(2), &square(), &c), Err(GeomError::Unsupported(_))));
}
