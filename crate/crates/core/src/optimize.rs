//! One-dimensional and spherical search routines used where no closed form
//! is available.

use alloc::vec::Vec;

use crate::linalg;
use crate::rng;
use crate::space::NormedSpace;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimization of a unimodal function on `[a, b]`. The
/// endpoints are evaluated too, so monotone functions are handled exactly.
pub fn golden_min(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, iters: usize) -> (f64, f64) {
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    for t in [a, b] {
        let v = f(t);
        if v < best.1 {
            best = (t, v);
        }
    }
    best
}

pub fn golden_max(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, iters: usize) -> (f64, f64) {
    let (t, v) = golden_min(|t| -f(t), a, b, iters);
    (t, -v)
}

const NESTED_ITERS: usize = 72;

/// Minimum of a convex `phi` over the simplex spanned by affinely
/// independent `verts`.
///
/// Works by nested golden sections: the restriction of the minimum to the
/// slab `{(1 - t) v_0 + t y : y in conv(v_1..)}` is convex in `t`.
pub fn simplex_min(verts: &[Vec<f64>], phi: &mut dyn FnMut(&[f64]) -> f64) -> f64 {
    match verts.len() {
        0 => f64::INFINITY,
        1 => phi(&verts[0]),
        2 => golden_min(|t| phi(&linalg::lerp(&verts[0], &verts[1], t)), 0.0, 1.0, NESTED_ITERS).1,
        _ => {
            let (head, tail) = verts.split_first().unwrap();
            golden_min(
                |t| {
                    let inner: Vec<Vec<f64>> = tail.iter().map(|v| linalg::lerp(head, v, t)).collect();
                    simplex_min(&inner, phi)
                },
                0.0,
                1.0,
                NESTED_ITERS,
            )
            .1
        }
    }
}

/// Minimum of a convex `phi` over `conv(verts)`, splitting into affinely
/// independent sub-simplices (Carathéodory) when necessary.
pub fn hull_min(verts: &[Vec<f64>], phi: &mut dyn FnMut(&[f64]) -> f64) -> f64 {
    if verts.len() <= 1 {
        return simplex_min(verts, phi);
    }
    let diffs: Vec<Vec<f64>> = verts[1..].iter().map(|v| linalg::sub(v, &verts[0])).collect();
    let m = linalg::rank(&diffs, 1e-10);
    if m + 1 == verts.len() {
        return simplex_min(verts, phi);
    }
    let mut best = f64::INFINITY;
    linalg::for_each_combination(verts.len(), m + 1, |idx| {
        let sub: Vec<Vec<f64>> = idx.iter().map(|&i| verts[i].clone()).collect();
        let d: Vec<Vec<f64>> = sub[1..].iter().map(|v| linalg::sub(v, &sub[0])).collect();
        if linalg::rank(&d, 1e-10) == m {
            best = best.min(simplex_min(&sub, phi));
        }
        true
    });
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    Maximize,
    Minimize,
}

/// Settings for a search over the unit sphere of a space.
#[derive(Clone, Debug)]
pub struct SphereSearch {
    /// Planar: number of angular grid points. Higher dimensions: random probes.
    pub grid: usize,
    /// Number of local refinements started from the best probes.
    pub starts: usize,
    pub seed: u64,
}

impl Default for SphereSearch {
    fn default() -> Self {
        Self { grid: 2048, starts: 64, seed: 0 }
    }
}

/// Best value of `phi` over the unit sphere found by the search, with the point.
#[derive(Clone, Debug)]
pub struct SphereOptimum {
    pub value: f64,
    pub point: Vec<f64>,
    /// Largest norm-distance between consecutive planar grid points (0 above dimension 2).
    pub mesh: f64,
}

fn on_sphere(space: &NormedSpace, u: &[f64]) -> Vec<f64> {
    linalg::scale(u, 1.0 / space.norm_raw(u))
}

/// Multistart search of `phi` over the sphere of `space`. `extra` points are
/// evaluated and used as additional starting points.
pub fn extremize_on_sphere(
    space: &NormedSpace,
    goal: Goal,
    phi: &dyn Fn(&[f64]) -> f64,
    search: &SphereSearch,
    extra: &[Vec<f64>],
) -> SphereOptimum {
    let sign = if goal == Goal::Maximize { -1.0 } else { 1.0 };
    let cost = |x: &[f64]| sign * phi(x);
    let dim = space.dim();
    let mut best = match dim {
        1 => {
            let a = on_sphere(space, &[1.0]);
            let b = on_sphere(space, &[-1.0]);
            let (va, vb) = (cost(&a), cost(&b));
            if va <= vb {
                (va, a, 0.0)
            } else {
                (vb, b, 0.0)
            }
        }
        2 => planar_search(space, &cost, search),
        _ => spatial_search(space, &cost, search, extra),
    };
    for p in extra {
        let x = on_sphere(space, p);
        let v = cost(&x);
        if v < best.0 {
            best = (v, x, best.2);
        }
    }
    if dim == 2 && !extra.is_empty() {
        for p in extra {
            let theta = libm::atan2(p[1], p[0]);
            let h = core::f64::consts::TAU / search.grid.max(8) as f64;
            let (t, v) =
                golden_min(|t| cost(&on_sphere(space, &[libm::cos(t), libm::sin(t)])), theta - h, theta + h, 90);
            if v < best.0 {
                best = (v, on_sphere(space, &[libm::cos(t), libm::sin(t)]), best.2);
            }
        }
    }
    SphereOptimum { value: sign * best.0, point: best.1, mesh: best.2 }
}

fn planar_search(space: &NormedSpace, cost: &dyn Fn(&[f64]) -> f64, search: &SphereSearch) -> (f64, Vec<f64>, f64) {
    let n = search.grid.max(8);
    let step = core::f64::consts::TAU / n as f64;
    let phase = {
        let mut r = rng::stream(search.seed, "sphere-search", 0);
        rng::uniform(&mut r, 0.0, step)
    };
    let point = |t: f64| on_sphere(space, &[libm::cos(t), libm::sin(t)]);
    let mut values = Vec::with_capacity(n);
    let mut mesh: f64 = 0.0;
    let mut prev = point(phase - step);
    for i in 0..n {
        let x = point(phase + step * i as f64);
        mesh = mesh.max(space.norm_raw(&linalg::sub(&x, &prev)));
        values.push(cost(&x));
        prev = x;
    }
    let mut minima: Vec<(f64, usize)> = (0..n)
        .filter(|&i| {
            let v = values[i];
            v <= values[(i + n - 1) % n] && v <= values[(i + 1) % n]
        })
        .map(|i| (values[i], i))
        .collect();
    minima.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    minima.truncate(search.starts.max(1));
    let mut best = (f64::INFINITY, Vec::new());
    for (_, i) in minima {
        let centre = phase + step * i as f64;
        let (t, v) = golden_min(|t| cost(&point(t)), centre - step, centre + step, 90);
        if v < best.0 {
            best = (v, point(t));
        }
    }
    (best.0, best.1, mesh)
}

fn spatial_search(
    space: &NormedSpace,
    cost: &dyn Fn(&[f64]) -> f64,
    search: &SphereSearch,
    extra: &[Vec<f64>],
) -> (f64, Vec<f64>, f64) {
    let dim = space.dim();
    let mut probes: Vec<(f64, Vec<f64>)> = Vec::new();
    for i in 0..dim {
        for s in [1.0, -1.0] {
            let mut e = alloc::vec![0.0; dim];
            e[i] = s;
            let x = on_sphere(space, &e);
            probes.push((cost(&x), x));
        }
    }
    for p in extra {
        let x = on_sphere(space, p);
        probes.push((cost(&x), x));
    }
    for i in 0..search.grid {
        let mut r = rng::stream(search.seed, "sphere-search", i as u64);
        let x = on_sphere(space, &rng::gaussian_vec(&mut r, dim));
        probes.push((cost(&x), x));
    }
    probes.sort_by(|a, b| a.0.total_cmp(&b.0));
    probes.truncate(search.starts.max(1));
    let mut best = (f64::INFINITY, Vec::new());
    for (v0, x0) in probes {
        let (v, x) = pattern_descent(space, cost, v0, x0);
        if v < best.0 {
            best = (v, x);
        }
    }
    (best.0, best.1, 0.0)
}

/// Compass search along tangent directions, retracting onto the sphere.
fn pattern_descent(space: &NormedSpace, cost: &dyn Fn(&[f64]) -> f64, mut v: f64, mut x: Vec<f64>) -> (f64, Vec<f64>) {
    let mut h = 0.2;
    let mut evals = 0;
    while h > 1e-13 && evals < 20_000 {
        let mut improved = false;
        for dir in linalg::complement_basis(&x) {
            for s in [h, -h] {
                let y = on_sphere(space, &linalg::axpy(&x, s, &dir));
                let w = cost(&y);
                evals += 1;
                if w < v {
                    v = w;
                    x = y;
                    improved = true;
                    break;
                }
            }
            if improved {
                break;
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    (v, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn golden_finds_kinked_minimum() {
        let (t, v) = golden_min(|t| (t - 0.3).abs(), 0.0, 1.0, 80);
        assert!((t - 0.3).abs() < 1e-14 && v < 1e-14);
        let (t, _) = golden_min(|t| t, 0.0, 1.0, 10);
        assert_eq!(t, 0.0);
    }

    #[test]
    fn simplex_min_projects_onto_triangle() {
        let tri = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
        let mut d = |p: &[f64]| linalg::euclid(p);
        let v = simplex_min(&tri, &mut d);
        assert!((v - libm::sqrt(0.5)).abs() < 1e-12);
    }

    #[test]
    fn hull_min_handles_coplanar_square() {
        let sq = vec![vec![1.0, 1.0, 1.0], vec![1.0, -1.0, 1.0], vec![-1.0, 1.0, 1.0], vec![-1.0, -1.0, 1.0]];
        let mut d = |p: &[f64]| linalg::euclid(&linalg::sub(p, &[0.5, 0.25, 0.0]));
        assert!((hull_min(&sq, &mut d) - 1.0).abs() < 1e-10);
    }
}
