#![allow(dead_code)]

use banach_geom_core::{Functional, NormFamily, NormedSpace, Vector};

pub fn l2(dim: usize) -> NormedSpace {
    NormedSpace::lp(dim, 2.0).unwrap()
}

pub fn l1(dim: usize) -> NormedSpace {
    NormedSpace::lp(dim, 1.0).unwrap()
}

pub fn linf(dim: usize) -> NormedSpace {
    NormedSpace::lp(dim, f64::INFINITY).unwrap()
}

pub fn hexagon() -> NormedSpace {
    let vertices = (0..6)
        .map(|k| {
            let t = std::f64::consts::PI / 3.0 * k as f64;
            Vector::new(vec![t.cos(), t.sin()]).unwrap()
        })
        .collect();
    NormedSpace::new(2, NormFamily::PolytopeV { vertices }).unwrap()
}

pub fn lens() -> NormedSpace {
    NormedSpace::new(2, NormFamily::Lens { offset: 0.5, radius: 1.0 }).unwrap()
}

pub fn stadium() -> NormedSpace {
    NormedSpace::new(2, NormFamily::Stadium { half_length: 0.5, radius: 1.0 }).unwrap()
}

pub fn one_two(dim: usize) -> NormedSpace {
    NormedSpace::new(dim, NormFamily::OneTwoMix).unwrap()
}

/// The nine standard spaces, labelled.
pub fn catalogue() -> Vec<(&'static str, NormedSpace)> {
    vec![
        ("l2_2", l2(2)),
        ("l1_2", l1(2)),
        ("linf_2", linf(2)),
        ("hexagon", hexagon()),
        ("lens_default", lens()),
        ("stadium_default", stadium()),
        ("one_two_mix_2", one_two(2)),
        ("l2_3", l2(3)),
        ("linf_3", linf(3)),
    ]
}

pub fn v(c: &[f64]) -> Vector {
    Vector::new(c.to_vec()).unwrap()
}

pub fn f(c: &[f64]) -> Functional {
    Functional::new(c.to_vec()).unwrap()
}

pub fn assert_close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
}

pub fn assert_vec_close(a: &[f64], b: &[f64], tol: f64) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
    }
}

/// Sorted copy of a point list, for set comparisons.
pub fn sorted(mut pts: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    for p in pts.iter_mut() {
        for c in p.iter_mut() {
            *c = (*c * 1e9).round() / 1e9 + 0.0;
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts
}
