//! Exposed faces, duality maps, `A_0(x)`, slices, the regions `D[x, delta]`
//! and Hausdorff distances between them.
//!
//! Sets are either exact (a union of convex polytopes given by vertices) or
//! sampled clouds carrying a mesh bound.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg;
use crate::optimize;
use crate::rng;
use crate::space::{enumerate_vertices, Functional, NormedSpace, Vector};

/// Points sampled along each boundary curve of a sampled region.
const RIM_STEPS: usize = 64;
/// Angular scan resolution used to bracket the end of a boundary curve.
const RIM_SCAN: usize = 256;
/// Extra random tangent directions for regions in dimension 3 and up.
const RIM_RANDOM_TANGENTS: usize = 8;
const EDGE_SUBDIVISIONS: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub enum Representation {
    /// Convex hull of the listed vertices.
    Polytope { vertices: Vec<Vector> },
    /// Union of convex hulls, e.g. `A_0(x)` at a vertex of a polytope ball.
    Union { pieces: Vec<Vec<Vector>> },
    /// Finite sample; every point of the true set is within `mesh` of it.
    Cloud { points: Vec<Vector>, mesh: f64 },
}

/// A subset of the unit ball: an exposed face, `A_0(x)`, or a sampled set.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceSet {
    pub representation: Representation,
    pub exposing: Option<Functional>,
}

impl FaceSet {
    pub fn polytope(vertices: Vec<Vector>) -> Self {
        Self { representation: Representation::Polytope { vertices }, exposing: None }
    }

    pub fn cloud(points: Vec<Vector>, mesh: f64) -> Self {
        Self { representation: Representation::Cloud { points, mesh }, exposing: None }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.representation, Representation::Cloud { .. })
    }

    /// All listed points: vertices of every piece, or the cloud.
    pub fn points(&self) -> Vec<&Vector> {
        match &self.representation {
            Representation::Polytope { vertices } => vertices.iter().collect(),
            Representation::Union { pieces } => pieces.iter().flatten().collect(),
            Representation::Cloud { points, .. } => points.iter().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.points().is_empty()
    }

    pub fn mesh(&self) -> f64 {
        match &self.representation {
            Representation::Cloud { mesh, .. } => *mesh,
            _ => 0.0,
        }
    }
}

/// A set of functionals: the extreme points of a face of the dual ball.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalSet {
    /// Sorted ascending lexicographically.
    pub extremes: Vec<Functional>,
    pub anchor: Vector,
}

impl FunctionalSet {
    pub fn is_singleton(&self) -> bool {
        self.extremes.len() == 1
    }

    pub fn centroid(&self) -> Functional {
        let raw: Vec<Vec<f64>> = self.extremes.iter().map(|f| f.coeffs().to_vec()).collect();
        Functional::from_raw(linalg::centroid(&raw))
    }

    /// Largest dual-norm distance between two extreme points.
    pub fn diameter(&self, space: &NormedSpace) -> f64 {
        let mut d: f64 = 0.0;
        for (i, f) in self.extremes.iter().enumerate() {
            for g in &self.extremes[i + 1..] {
                d = d.max(space.dual_norm_raw(&linalg::sub(f.coeffs(), g.coeffs())));
            }
        }
        d
    }
}

/// Points of a slice or of `D[x, delta]`. When `pieces` is nonempty their
/// union is the region exactly; otherwise `points` is a cloud with `mesh`.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionSample {
    pub points: Vec<Vector>,
    pub defining: String,
    pub pieces: Vec<Vec<Vector>>,
    pub mesh: f64,
}

impl RegionSample {
    pub fn is_exact(&self) -> bool {
        !self.pieces.is_empty()
    }

    /// The points on the unit sphere (`C[x, delta]` from `D[x, delta]`).
    pub fn on_sphere(&self, space: &NormedSpace) -> Vec<Vector> {
        let tol = space.tol();
        self.points.iter().filter(|p| (space.norm_raw(p.coords()) - 1.0).abs() <= tol).cloned().collect()
    }
}

/// Internal form of a set for distance computations.
#[derive(Clone, Debug)]
pub enum Geometry {
    Pieces(Vec<Vec<Vec<f64>>>),
    Cloud { points: Vec<Vec<f64>>, mesh: f64 },
}

pub trait Shape {
    fn geometry(&self) -> Geometry;
}

impl Shape for FaceSet {
    fn geometry(&self) -> Geometry {
        let raw = |vs: &[Vector]| vs.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>();
        match &self.representation {
            Representation::Polytope { vertices } => Geometry::Pieces(alloc::vec![raw(vertices)]),
            Representation::Union { pieces } => Geometry::Pieces(pieces.iter().map(|p| raw(p)).collect()),
            Representation::Cloud { points, mesh } => Geometry::Cloud { points: raw(points), mesh: *mesh },
        }
    }
}

impl Shape for RegionSample {
    fn geometry(&self) -> Geometry {
        let raw = |vs: &[Vector]| vs.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>();
        if self.is_exact() {
            Geometry::Pieces(self.pieces.iter().map(|p| raw(p)).collect())
        } else {
            Geometry::Cloud { points: raw(&self.points), mesh: self.mesh }
        }
    }
}

impl Shape for Geometry {
    fn geometry(&self) -> Geometry {
        self.clone()
    }
}

impl Geometry {
    fn is_empty(&self) -> bool {
        match self {
            Geometry::Pieces(p) => p.iter().all(|q| q.is_empty()),
            Geometry::Cloud { points, .. } => points.is_empty(),
        }
    }
}

/// Distance from a point to a set, with an additive error bound (zero for
/// exact sets).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SetDistance {
    pub distance: f64,
    pub error_bound: f64,
}

/// Norm distance from `x` to the convex hull of `verts`.
pub fn distance_to_hull(space: &NormedSpace, x: &[f64], verts: &[Vec<f64>]) -> f64 {
    match verts.len() {
        0 => f64::INFINITY,
        1 => space.norm_raw(&linalg::sub(x, &verts[0])),
        _ => {
            let direct = verts.iter().map(|v| space.norm_raw(&linalg::sub(x, v))).fold(f64::INFINITY, f64::min);
            if direct == 0.0 {
                return 0.0;
            }
            let mut phi = |y: &[f64]| space.norm_raw(&linalg::sub(x, y));
            optimize::hull_min(verts, &mut phi).min(direct)
        }
    }
}

fn point_to(space: &NormedSpace, x: &[f64], target: &Geometry) -> f64 {
    match target {
        Geometry::Pieces(pieces) => pieces.iter().map(|p| distance_to_hull(space, x, p)).fold(f64::INFINITY, f64::min),
        Geometry::Cloud { points, .. } => {
            points.iter().map(|p| space.norm_raw(&linalg::sub(x, p))).fold(f64::INFINITY, f64::min)
        }
    }
}

pub fn distance_to_set(space: &NormedSpace, x: &Vector, set: &impl Shape) -> Result<SetDistance> {
    space.check_dim(x.dim())?;
    let g = set.geometry();
    if g.is_empty() {
        return Err(GeomError::EmptySet);
    }
    let error_bound = match &g {
        Geometry::Cloud { mesh, .. } => *mesh,
        Geometry::Pieces(_) => 0.0,
    };
    Ok(SetDistance { distance: point_to(space, x.coords(), &g), error_bound })
}

/// Both directed distances and their maximum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HausdorffReport {
    pub value: f64,
    /// `sup_{a in A} d(a, B)`.
    pub forward: f64,
    /// `sup_{b in B} d(b, A)`.
    pub backward: f64,
    /// Additive bound on `|value - true value|`.
    pub error_bound: f64,
}

impl HausdorffReport {
    pub fn is_exact(&self) -> bool {
        self.error_bound == 0.0
    }
}

pub fn hausdorff(space: &NormedSpace, a: &impl Shape, b: &impl Shape) -> Result<HausdorffReport> {
    let (ga, gb) = (a.geometry(), b.geometry());
    if ga.is_empty() || gb.is_empty() {
        return Err(GeomError::EmptySet);
    }
    let (forward, ef) = directed(space, &ga, &gb);
    let (backward, eb) = directed(space, &gb, &ga);
    Ok(HausdorffReport { value: forward.max(backward), forward, backward, error_bound: ef.max(eb) })
}

/// `sup_{a in from} d(a, to)` and an error bound.
pub fn directed(space: &NormedSpace, from: &Geometry, to: &Geometry) -> (f64, f64) {
    let sup = |pts: &mut dyn Iterator<Item = &Vec<f64>>| pts.map(|p| point_to(space, p, to)).fold(0.0, f64::max);
    match (from, to) {
        (Geometry::Cloud { points, mesh }, _) => {
            let extra = if let Geometry::Cloud { mesh, .. } = to { *mesh } else { 0.0 };
            (sup(&mut points.iter()), mesh + extra)
        }
        (Geometry::Pieces(src), Geometry::Pieces(dst)) if dst.len() == 1 => {
            // The distance to a convex set is convex, so its sup over a polytope sits at a vertex.
            (sup(&mut src.iter().flatten()), 0.0)
        }
        (Geometry::Pieces(src), Geometry::Pieces(dst)) => {
            let lower = sup(&mut src.iter().flatten());
            let upper = src
                .iter()
                .map(|p| {
                    dst.iter()
                        .map(|q| p.iter().map(|v| distance_to_hull(space, v, q)).fold(0.0, f64::max))
                        .fold(f64::INFINITY, f64::min)
                })
                .fold(0.0, f64::max);
            if upper - lower <= 1e-12 * upper.max(1.0) {
                return (lower, 0.0);
            }
            let dense: Vec<Vec<f64>> = src.iter().flat_map(|p| densify(p)).collect();
            let lower = lower.max(sup(&mut dense.iter()));
            (lower, (upper - lower).max(0.0))
        }
        (Geometry::Pieces(src), Geometry::Cloud { mesh, .. }) => {
            let mut spacing: f64 = 0.0;
            let mut dense = Vec::new();
            for p in src {
                spacing = spacing.max(subdivision_spacing(space, p));
                dense.extend(densify(p));
            }
            (sup(&mut dense.iter()), mesh + spacing)
        }
    }
}

/// Vertices, points along every vertex pair and the centroid.
fn densify(verts: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out = verts.to_vec();
    for (i, a) in verts.iter().enumerate() {
        for b in &verts[i + 1..] {
            for k in 1..EDGE_SUBDIVISIONS {
                out.push(linalg::lerp(a, b, k as f64 / EDGE_SUBDIVISIONS as f64));
            }
        }
    }
    if verts.len() > 2 {
        out.push(linalg::centroid(verts));
    }
    out
}

fn subdivision_spacing(space: &NormedSpace, verts: &[Vec<f64>]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in verts.iter().enumerate() {
        for b in &verts[i + 1..] {
            d = d.max(space.norm_raw(&linalg::sub(a, b)));
        }
    }
    d / EDGE_SUBDIVISIONS as f64
}

fn to_vectors(raw: Vec<Vec<f64>>) -> Vec<Vector> {
    raw.into_iter().map(Vector::from_raw).collect()
}

/// The exposed face `S(X, f, 0)` of the unit ball.
pub fn exposed_face(space: &NormedSpace, f: &Functional) -> Result<FaceSet> {
    space.require_on_dual_sphere(f)?;
    let verts = space.face_vertices_raw(f.coeffs())?;
    Ok(FaceSet { representation: Representation::Polytope { vertices: to_vectors(verts) }, exposing: Some(f.clone()) })
}

/// The duality map `J(x)` at a unit vector `x`.
pub fn duality_map(space: &NormedSpace, x: &Vector) -> Result<FunctionalSet> {
    space.require_on_sphere(x)?;
    let ext = space.support_extremes_raw(x.coords())?;
    Ok(FunctionalSet { extremes: ext.into_iter().map(Functional::from_raw).collect(), anchor: x.clone() })
}

/// `A_0(x)`, the union of the faces exposed by the extreme points of `J(x)`.
pub fn a0_set(space: &NormedSpace, x: &Vector) -> Result<FaceSet> {
    let j = duality_map(space, x)?;
    let mut pieces: Vec<Vec<Vec<f64>>> = Vec::new();
    for g in &j.extremes {
        let face = space.face_vertices_raw(g.coeffs())?;
        if !pieces.contains(&face) {
            pieces.push(face);
        }
    }
    let exposing = if j.is_singleton() { Some(j.extremes[0].clone()) } else { None };
    let representation = if pieces.len() == 1 {
        Representation::Polytope { vertices: to_vectors(pieces.pop().unwrap()) }
    } else {
        Representation::Union { pieces: pieces.into_iter().map(to_vectors).collect() }
    };
    Ok(FaceSet { representation, exposing })
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(GeomError::OutOfRange(format!("delta = {delta} is outside [0, 1]")));
    }
    Ok(())
}

/// The slice `S(X, f, delta) = {y in B_X : f(y) >= 1 - delta}`, exactly for
/// polyhedral balls, otherwise sampled along the boundary curves leaving the
/// face. `count` uniform ball samples passing the inequality are added.
pub fn slice_region(space: &NormedSpace, f: &Functional, delta: f64, count: usize, seed: u64) -> Result<RegionSample> {
    space.require_on_dual_sphere(f)?;
    check_delta(delta)?;
    let defining = format!("slice f = {:?}, delta = {delta}", f.coeffs());
    let fc = f.coeffs().to_vec();
    let level = 1.0 - delta;
    let inside = |y: &[f64]| linalg::dot(&fc, y) >= level;
    let random = ball_samples(space, count, seed, "slice", &inside);
    if delta == 0.0 {
        let face = to_vectors(space.face_vertices_raw(&fc)?);
        let mut points = face.clone();
        points.extend(random);
        return Ok(RegionSample { points, defining, pieces: alloc::vec![face], mesh: 0.0 });
    }

    if let Some(dual) = space.dual_vertices() {
        let mut cons: Vec<(Vec<f64>, f64)> = dual.iter().map(|a| (a.clone(), 1.0)).collect();
        cons.push((linalg::scale(&fc, -1.0), -level));
        let verts = enumerate_vertices(space.dim(), &cons, 1e-10)?;
        let mut points = to_vectors(verts.clone());
        points.extend(random);
        return Ok(RegionSample { points, defining, pieces: alloc::vec![to_vectors(verts)], mesh: 0.0 });
    }

    let face = space.face_vertices_raw(&fc)?;
    let on_curve = |y: &[f64]| linalg::dot(&fc, y) >= level;
    let mut points: Vec<Vec<f64>> = densify(&face);
    let mut mesh = subdivision_spacing(space, &face);
    for anchor in anchors(&face) {
        for w in tangents(space, &anchor, seed) {
            let (curve, m) = rim_curve(space, &anchor, &w, &on_curve);
            mesh = mesh.max(m);
            points.extend(curve);
        }
    }
    let mut points = to_vectors(points);
    points.extend(random);
    Ok(RegionSample { points, defining, pieces: Vec::new(), mesh })
}

/// `D[x, delta] = {y in B_X : |(x + y) / 2| >= 1 - delta}`.
///
/// Polyhedral balls give a union of slices `{a . y >= 2 - 2 delta - a . x}`,
/// one for each dual vertex `a`. Otherwise the region is sampled along its
/// two boundary parts (the sphere and the level set `|x + y| = 2 - 2 delta`)
/// plus `count` samples, half uniform in the ball and half concentrated near
/// `A_0(x)`.
pub fn d_region(space: &NormedSpace, x: &Vector, delta: f64, count: usize, seed: u64) -> Result<RegionSample> {
    space.require_on_sphere(x)?;
    check_delta(delta)?;
    let defining = format!("D[x, delta], x = {:?}, delta = {delta}", x.coords());
    let xc = x.coords().to_vec();
    let level = 2.0 - 2.0 * delta;
    let tol = space.tol();
    let inside = |y: &[f64]| space.norm_raw(&linalg::add(&xc, y)) >= level;
    let a0 = a0_set(space, x)?;
    let a0_pieces: Vec<Vec<Vec<f64>>> = match a0.geometry() {
        Geometry::Pieces(p) => p,
        Geometry::Cloud { .. } => unreachable!("A_0 is computed exactly"),
    };

    let mut random = ball_samples(space, count.div_ceil(2), seed, "d-region", &inside);
    random.extend(near_samples(space, &a0_pieces, count / 2, 4.0 * delta, seed, &inside));
    if delta == 0.0 {
        let pieces: Vec<Vec<Vector>> = a0_pieces.into_iter().map(to_vectors).collect();
        let mut points: Vec<Vector> = pieces.iter().flatten().cloned().collect();
        points.extend(random);
        return Ok(RegionSample { points, defining, pieces, mesh: 0.0 });
    }

    if let Some(dual) = space.dual_vertices() {
        let mut pieces = Vec::new();
        for a in dual {
            let t = level - linalg::dot(a, &xc);
            if t > 1.0 + tol {
                continue;
            }
            let mut cons: Vec<(Vec<f64>, f64)> = dual.iter().map(|b| (b.clone(), 1.0)).collect();
            cons.push((linalg::scale(a, -1.0), -t.min(1.0)));
            let verts = enumerate_vertices(space.dim(), &cons, 1e-10)?;
            if !verts.is_empty() {
                pieces.push(to_vectors(verts));
            }
        }
        let mut points: Vec<Vector> = pieces.iter().flatten().cloned().collect();
        points.extend(random);
        return Ok(RegionSample { points, defining, pieces, mesh: 0.0 });
    }

    let on_curve = |y: &[f64]| space.norm_raw(&linalg::add(&xc, y)) >= level;
    let mut points: Vec<Vec<f64>> = Vec::new();
    let mut mesh: f64 = 0.0;
    for piece in &a0_pieces {
        points.extend(densify(piece));
        mesh = mesh.max(subdivision_spacing(space, piece));
        for anchor in anchors(piece) {
            for w in tangents(space, &anchor, seed) {
                let (curve, m) = rim_curve(space, &anchor, &w, &on_curve);
                mesh = mesh.max(m);
                // Radial projection of the sphere arc onto the level set stays in the ball.
                let level_curve: Vec<Vec<f64>> = curve
                    .iter()
                    .map(|q| {
                        let s = linalg::add(&xc, q);
                        let lam = level / space.norm_raw(&s);
                        linalg::axpy(&linalg::scale(&xc, -1.0), lam, &s)
                    })
                    .collect();
                for pair in level_curve.windows(2) {
                    mesh = mesh.max(space.norm_raw(&linalg::sub(&pair[0], &pair[1])));
                }
                points.extend(curve);
                points.extend(level_curve);
            }
        }
    }
    let mut points = to_vectors(points);
    points.extend(random);
    Ok(RegionSample { points, defining, pieces: Vec::new(), mesh })
}

/// The sphere part `C[x, delta]` of `D[x, delta]`.
pub fn c_region(space: &NormedSpace, x: &Vector, delta: f64, count: usize, seed: u64) -> Result<Vec<Vector>> {
    Ok(d_region(space, x, delta, count, seed)?.on_sphere(space))
}

fn anchors(face: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out = face.to_vec();
    if face.len() > 1 {
        out.push(linalg::centroid(face));
    }
    out
}

/// Euclidean unit tangents at `a`: both signs of an orthonormal complement
/// basis, plus a few random ones from dimension 3 on.
fn tangents(space: &NormedSpace, a: &[f64], seed: u64) -> Vec<Vec<f64>> {
    let basis = linalg::complement_basis(a);
    let mut out: Vec<Vec<f64>> = Vec::new();
    for w in &basis {
        out.push(w.clone());
        out.push(linalg::scale(w, -1.0));
    }
    if space.dim() >= 3 {
        for i in 0..RIM_RANDOM_TANGENTS {
            let mut r = rng::stream(seed, "rim-tangent", i as u64);
            let g = rng::gaussian_vec(&mut r, space.dim());
            let mut w = alloc::vec![0.0; space.dim()];
            for b in &basis {
                w = linalg::axpy(&w, linalg::dot(&g, b), b);
            }
            let l = linalg::euclid(&w);
            if l > 1e-12 {
                out.push(linalg::scale(&w, 1.0 / l));
            }
        }
    }
    out
}

/// Points `q(t) = normalize(cos t * a + sin t * w)` for `t` in `[0, t*]`,
/// where `t*` is where `keep` first fails, and the largest gap between them.
fn rim_curve(space: &NormedSpace, a: &[f64], w: &[f64], keep: &dyn Fn(&[f64]) -> bool) -> (Vec<Vec<f64>>, f64) {
    let q = |t: f64| {
        let y = linalg::axpy(&linalg::scale(a, libm::cos(t)), libm::sin(t), w);
        linalg::scale(&y, 1.0 / space.norm_raw(&y))
    };
    let step = core::f64::consts::PI / RIM_SCAN as f64;
    let mut end = core::f64::consts::PI;
    for k in 1..=RIM_SCAN {
        let t = step * k as f64;
        if !keep(&q(t)) {
            let (mut lo, mut hi) = (t - step, t);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if keep(&q(mid)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            end = lo;
            break;
        }
    }
    let pts: Vec<Vec<f64>> = (0..=RIM_STEPS).map(|k| q(end * k as f64 / RIM_STEPS as f64)).collect();
    let mesh = pts.windows(2).map(|p| space.norm_raw(&linalg::sub(&p[0], &p[1]))).fold(0.0, f64::max);
    (pts, mesh)
}

/// Last point of [`rim_curve`].
pub(crate) fn rim_end(space: &NormedSpace, a: &[f64], w: &[f64], keep: &dyn Fn(&[f64]) -> bool) -> Vec<f64> {
    rim_curve(space, a, w, keep).0.pop().expect("curve has points")
}

/// Uniform-radius ball samples `r^(1/n) u` passing `keep`, from at most
/// `64 * count` attempts.
fn ball_samples(
    space: &NormedSpace,
    count: usize,
    seed: u64,
    label: &str,
    keep: &dyn Fn(&[f64]) -> bool,
) -> Vec<Vector> {
    let n = space.dim();
    let mut out = Vec::new();
    let mut i = 0u64;
    while out.len() < count && i < 64 * count as u64 {
        let mut r = rng::stream(seed, label, i);
        let g = rng::gaussian_vec(&mut r, n);
        let len = space.norm_raw(&g);
        i += 1;
        if len == 0.0 {
            continue;
        }
        let radius = libm::pow(rng::open01(&mut r), 1.0 / n as f64);
        let y = linalg::scale(&g, radius / len);
        if keep(&y) {
            out.push(Vector::from_raw(y));
        }
    }
    out
}

/// Samples `p + rho g` near points `p` of the pieces, pulled back into the ball.
fn near_samples(
    space: &NormedSpace,
    pieces: &[Vec<Vec<f64>>],
    count: usize,
    radius: f64,
    seed: u64,
    keep: &dyn Fn(&[f64]) -> bool,
) -> Vec<Vector> {
    let pts: Vec<Vec<f64>> = pieces.iter().flat_map(|p| densify(p)).collect();
    let mut out = Vec::new();
    if pts.is_empty() || radius == 0.0 {
        return out;
    }
    for i in 0..count {
        let mut r = rng::stream(seed, "d-region-near", i as u64);
        let base = &pts[i % pts.len()];
        let g = rng::gaussian_vec(&mut r, space.dim());
        let rho = radius * rng::open01(&mut r) / space.norm_raw(&g).max(1e-300);
        let mut y = linalg::axpy(base, rho, &g);
        let n = space.norm_raw(&y);
        if n > 1.0 {
            y = linalg::scale(&y, 1.0 / n);
        }
        if keep(&y) {
            out.push(Vector::from_raw(y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn linf() -> NormedSpace {
        NormedSpace::lp(2, f64::INFINITY).unwrap()
    }

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn a0_at_square_corner_is_two_edges() {
        let a0 = a0_set(&linf(), &v(&[1.0, 1.0])).unwrap();
        match a0.representation {
            Representation::Union { pieces } => assert_eq!(pieces.len(), 2),
            other => panic!("expected a union, got {other:?}"),
        }
    }

    #[test]
    fn slice_of_square_is_exact_triangle() {
        let f = Functional::new(vec![0.5, 0.5]).unwrap();
        let s = slice_region(&linf(), &f, 0.1, 0, 1).unwrap();
        assert!(s.is_exact());
        assert_eq!(s.pieces[0].len(), 3);
        let face = exposed_face(&linf(), &f).unwrap();
        let h = hausdorff(&linf(), &s, &face).unwrap();
        assert!((h.value - 0.2).abs() < 1e-12);
    }

    #[test]
    fn d_region_of_square_corner_is_two_strips() {
        let s = linf();
        let d = d_region(&s, &v(&[1.0, 1.0]), 0.05, 0, 1).unwrap();
        assert_eq!(d.pieces.len(), 2);
        let a0 = a0_set(&s, &v(&[1.0, 1.0])).unwrap();
        let h = hausdorff(&s, &d, &a0).unwrap();
        assert!((h.value - 0.1).abs() < 1e-9, "{h:?}");
    }

    #[test]
    fn euclidean_cap_rim() {
        let s = NormedSpace::lp(2, 2.0).unwrap();
        let f = Functional::new(vec![1.0, 0.0]).unwrap();
        let r = slice_region(&s, &f, 0.5, 0, 1).unwrap();
        let ys: Vec<f64> = r.points.iter().map(|p| p.coords()[1]).collect();
        let spread = ys.iter().copied().fold(f64::MIN, f64::max) - ys.iter().copied().fold(f64::MAX, f64::min);
        assert!((spread - libm::sqrt(3.0)).abs() < 1e-9);
    }
}
