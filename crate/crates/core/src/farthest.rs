//! Farthest points of finite sets: `F_K(x)`, `Far K`, uniqueness density and
//! the hull equality `co K = co Far K`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg;
use crate::rng;
use crate::space::{NormFamily, NormedSpace, Vector};
use crate::verdict::{Certificate, ProbeConfig, Status, Verdict};

/// Absolute tolerance for ties between farthest distances.
pub const TIE_TOL: f64 = 1e-6;
/// Far-field queries sit at this multiple of the diameter.
const FAR_FIELD: f64 = 1e6;

/// A nonempty finite set of points of a common dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<Vector>,
    pub label: String,
}

impl PointSet {
    pub fn new(points: Vec<Vector>, label: impl Into<String>) -> Result<Self> {
        let first = points.first().ok_or(GeomError::EmptySet)?;
        let dim = first.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(GeomError::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        Ok(Self { points, label: label.into() })
    }

    pub fn from_coords(points: Vec<Vec<f64>>, label: impl Into<String>) -> Result<Self> {
        let pts = points.into_iter().map(Vector::new).collect::<Result<Vec<_>>>()?;
        Self::new(pts, label)
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn raw(&self) -> Vec<Vec<f64>> {
        self.points.iter().map(|p| p.coords().to_vec()).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FarthestReport {
    pub query: Vector,
    pub far_distance: f64,
    /// Indices into the point set of every point within `tol` of the maximum.
    pub attaining: Vec<usize>,
    /// True when the attaining points collapse to one after clustering at `tol`.
    pub unique: bool,
}

fn check_set(space: &NormedSpace, k: &PointSet) -> Result<()> {
    space.check_dim(k.dim())
}

pub fn farthest_distance(space: &NormedSpace, x: &Vector, k: &PointSet) -> Result<f64> {
    space.check_dim(x.dim())?;
    check_set(space, k)?;
    Ok(k.points.iter().map(|p| space.norm_raw(&linalg::sub(x.coords(), p.coords()))).fold(0.0, f64::max))
}

pub fn farthest_points(space: &NormedSpace, x: &Vector, k: &PointSet, tol: f64) -> Result<FarthestReport> {
    space.check_dim(x.dim())?;
    check_set(space, k)?;
    Ok(farthest_raw(space, x.coords(), &k.points, tol))
}

fn farthest_raw(space: &NormedSpace, x: &[f64], pts: &[Vector], tol: f64) -> FarthestReport {
    let d: Vec<f64> = pts.iter().map(|p| space.norm_raw(&linalg::sub(x, p.coords()))).collect();
    let top = d.iter().copied().fold(0.0, f64::max);
    let attaining: Vec<usize> = (0..pts.len()).filter(|&i| d[i] >= top - tol).collect();
    let first = pts[attaining[0]].coords();
    let unique = attaining.iter().all(|&i| linalg::close(pts[i].coords(), first, tol));
    FarthestReport { query: Vector::from_raw(x.to_vec()), far_distance: top, attaining, unique }
}

fn centroid_and_diameter(space: &NormedSpace, pts: &[Vec<f64>]) -> (Vec<f64>, f64) {
    let mut diam: f64 = 0.0;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            diam = diam.max(space.norm_raw(&linalg::sub(a, b)));
        }
    }
    (linalg::centroid(pts), diam)
}

/// Sampled `Far K`: indices of points that are farthest from some query.
///
/// Queries are `query_samples` random points in the ball of radius
/// `3 diam(K)` about the centroid, points on the rays from the centroid
/// through each point of `K`, and (in dimensions 2 and 3) far-field points
/// whose norming functional lies inside the normal cone of each hull vertex.
pub fn far_set(space: &NormedSpace, k: &PointSet, query_samples: usize, tol: f64, seed: u64) -> Result<Vec<usize>> {
    check_set(space, k)?;
    let pts = k.raw();
    let n = k.dim();
    let (c, diam) = centroid_and_diameter(space, &pts);
    let mut hit = vec![false; pts.len()];
    let mut visit = |x: &[f64]| {
        for i in farthest_raw(space, x, &k.points, tol).attaining {
            hit[i] = true;
        }
    };
    if diam == 0.0 {
        visit(&c);
    }
    for i in 0..query_samples {
        let mut r = rng::stream(seed, "far-set", i as u64);
        let g = rng::gaussian_vec(&mut r, n);
        let len = space.norm_raw(&g);
        if len == 0.0 {
            continue;
        }
        let radius = 3.0 * diam * libm::pow(rng::open01(&mut r), 1.0 / n as f64);
        visit(&linalg::axpy(&c, radius / len, &g));
    }
    for p in &pts {
        let d = linalg::sub(p, &c);
        let len = space.norm_raw(&d);
        if len == 0.0 {
            continue;
        }
        for t in [-1.0, -3.0, -10.0, 1.0, 3.0] {
            visit(&linalg::axpy(&c, t * diam / len, &d));
        }
    }
    if (2..=3).contains(&n) && diam > 0.0 {
        for normal in vertex_normals(&pts)? {
            let u = space.face_vertices_raw(&normal)?.into_iter().next().expect("faces are nonempty");
            visit(&linalg::axpy(&c, -FAR_FIELD * diam, &u));
        }
    }
    Ok((0..pts.len()).filter(|&i| hit[i]).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    /// Share of queries with a unique farthest point.
    pub fraction: f64,
    pub unique: usize,
    pub total: usize,
    pub seed: u64,
    pub tol: f64,
    /// Set when the space is not known to be HLUR.
    pub warning: Option<String>,
}

/// Share of `cfg.samples` uniform queries in the box of side `4 diam(K)`
/// about the centroid whose farthest point in `K` is unique.
pub fn density_experiment(space: &NormedSpace, k: &PointSet, cfg: &ProbeConfig) -> Result<DensityReport> {
    cfg.validate()?;
    check_set(space, k)?;
    let pts = k.raw();
    let (c, diam) = centroid_and_diameter(space, &pts);
    let seed = rng::subseed(cfg.seed, "density");
    let mut unique = 0;
    for i in 0..cfg.samples {
        let mut r = rng::stream(seed, "query", i as u64);
        let x: Vec<f64> = c.iter().map(|ci| ci + 2.0 * diam * rng::uniform(&mut r, -1.0, 1.0)).collect();
        if farthest_raw(space, &x, &k.points, TIE_TOL).unique {
            unique += 1;
        }
    }
    let warning = (!(space.rotund_by_family() || space.smooth_by_family()))
        .then(|| format!("{} is neither rotund nor smooth, hence not HLUR", space.family()));
    Ok(DensityReport {
        fraction: unique as f64 / cfg.samples as f64,
        unique,
        total: cfg.samples,
        seed: cfg.seed,
        tol: TIE_TOL,
        warning,
    })
}

/// Compares the hull vertices of `K` with the sampled `Far K`. Euclidean
/// spaces of dimension 2 and 3 only.
pub fn hull_equality_check(space: &NormedSpace, k: &PointSet, cfg: &ProbeConfig) -> Result<Verdict> {
    cfg.validate()?;
    check_set(space, k)?;
    let euclidean = matches!(space.family(), NormFamily::Lp { p } if *p == 2.0);
    if !euclidean || !(2..=3).contains(&space.dim()) {
        return Err(GeomError::Unsupported(format!(
            "hull equality needs a Euclidean space of dimension 2 or 3, got {} in dimension {}",
            space.family(),
            space.dim()
        )));
    }
    let pts = k.raw();
    let hull = hull_vertices(&pts)?;
    let far = far_set(space, k, cfg.samples, TIE_TOL, rng::subseed(cfg.seed, "hull-equality"))?;
    let matches =
        |a: &[usize], b: &[usize]| a.iter().all(|&i| b.iter().any(|&j| linalg::close(&pts[i], &pts[j], 1e-9)));
    let samples = cfg.samples + 5 * pts.len();
    if matches(&hull, &far) && matches(&far, &hull) {
        return Ok(Verdict::new("hull-equality", Status::HoldsNumerical, cfg, samples, cfg.tol)
            .note(format!("{} hull vertices, all farthest from some query", hull.len())));
    }
    let to_vecs = |idx: &[usize]| idx.iter().map(|&i| Vector::from_raw(pts[i].clone())).collect();
    Ok(Verdict::new("hull-equality", Status::Fails, cfg, samples, -1.0)
        .with_certificate(Certificate::HullMismatch { hull: to_vecs(&hull), far: to_vecs(&far) }))
}

const HULL_TOL: f64 = 1e-12;

/// Indices of the convex-hull vertices of a point set in dimension 1 to 3.
pub fn hull_vertices(pts: &[Vec<f64>]) -> Result<Vec<usize>> {
    let n = pts.first().ok_or(GeomError::EmptySet)?.len();
    let scale = pts.iter().map(|p| linalg::max_abs(p)).fold(1.0, f64::max);
    let tol = HULL_TOL * scale;
    let mut idx = match n {
        1 => {
            let lo = (0..pts.len()).min_by(|&a, &b| pts[a][0].total_cmp(&pts[b][0])).unwrap();
            let hi = (0..pts.len()).max_by(|&a, &b| pts[a][0].total_cmp(&pts[b][0])).unwrap();
            if (pts[lo][0] - pts[hi][0]).abs() <= tol {
                vec![lo]
            } else {
                vec![lo, hi]
            }
        }
        2 => hull_2d(pts, tol),
        3 => hull_facets_3d(pts, tol).into_iter().flat_map(|f| f.vertices).collect(),
        _ => return Err(GeomError::Unsupported(format!("convex hulls in dimension {n}"))),
    };
    idx.sort_unstable();
    idx.dedup();
    let unique = dedupe_indices(pts, &idx, tol);
    Ok(unique)
}

fn dedupe_indices(pts: &[Vec<f64>], idx: &[usize], tol: f64) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &i in idx {
        if !out.iter().any(|&j| linalg::close(&pts[i], &pts[j], tol)) {
            out.push(i);
        }
    }
    out
}

fn cross2(o: &[f64], a: &[f64], b: &[f64]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Andrew's monotone chain, counter-clockwise, collinear points dropped.
fn hull_2d(pts: &[Vec<f64>], tol: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| linalg::lex_cmp(&pts[a], &pts[b]));
    order.dedup_by(|a, b| linalg::close(&pts[*a], &pts[*b], tol));
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 { order.clone() } else { order.iter().rev().copied().collect() };
        for &i in &seq {
            while hull.len() >= start + 2
                && cross2(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[i]) <= tol
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

struct Facet {
    normal: Vec<f64>,
    vertices: Vec<usize>,
}

fn cross3(a: &[f64], b: &[f64]) -> Vec<f64> {
    vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Supporting planes through point triples, with the hull vertices of the
/// points on each plane.
fn hull_facets_3d(pts: &[Vec<f64>], tol: f64) -> Vec<Facet> {
    let mut facets: Vec<Facet> = Vec::new();
    let m = pts.len();
    if m < 4 {
        return vec![Facet { normal: vec![0.0; 3], vertices: (0..m).collect() }];
    }
    linalg::for_each_combination(m, 3, |t| {
        let (a, b, c) = (&pts[t[0]], &pts[t[1]], &pts[t[2]]);
        let nrm = cross3(&linalg::sub(b, a), &linalg::sub(c, a));
        let len = linalg::euclid(&nrm);
        if len <= tol {
            return true;
        }
        let nrm = linalg::scale(&nrm, 1.0 / len);
        let off = linalg::dot(&nrm, a);
        let side: Vec<f64> = pts.iter().map(|p| linalg::dot(&nrm, p) - off).collect();
        let above = side.iter().any(|s| *s > tol);
        let below = side.iter().any(|s| *s < -tol);
        if above && below {
            return true;
        }
        let outward = if above { linalg::scale(&nrm, -1.0) } else { nrm };
        if facets.iter().any(|f| linalg::close(&f.normal, &outward, 1e-9)) {
            return true;
        }
        let on: Vec<usize> = (0..m).filter(|&i| side[i].abs() <= tol).collect();
        let basis = linalg::complement_basis(&outward);
        let planar: Vec<Vec<f64>> =
            on.iter().map(|&i| vec![linalg::dot(&pts[i], &basis[0]), linalg::dot(&pts[i], &basis[1])]).collect();
        let vertices = hull_2d(&planar, tol).into_iter().map(|j| on[j]).collect();
        facets.push(Facet { normal: outward, vertices });
        true
    });
    if facets.is_empty() {
        // Coplanar input: the planar hull in the common plane.
        let d1 = linalg::sub(&pts[1], &pts[0]);
        let mut normal = vec![0.0; 3];
        for p in &pts[2..] {
            let c = cross3(&d1, &linalg::sub(p, &pts[0]));
            if linalg::euclid(&c) > tol {
                normal = c;
                break;
            }
        }
        let basis = linalg::complement_basis(&normal);
        let planar: Vec<Vec<f64>> =
            pts.iter().map(|p| vec![linalg::dot(p, &basis[0]), linalg::dot(p, &basis[1])]).collect();
        return vec![Facet { normal, vertices: hull_2d(&planar, tol) }];
    }
    facets
}

/// One Euclidean direction inside the normal cone of each hull vertex.
fn vertex_normals(pts: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = pts[0].len();
    let scale = pts.iter().map(|p| linalg::max_abs(p)).fold(1.0, f64::max);
    let tol = HULL_TOL * scale;
    let mut out = Vec::new();
    match n {
        2 => {
            let h = hull_2d(pts, tol);
            if h.len() < 3 {
                for &i in &h {
                    let other = &pts[h[(h.iter().position(|&j| j == i).unwrap() + 1) % h.len()]];
                    out.push(linalg::sub(&pts[i], other));
                }
                return Ok(out);
            }
            let m = h.len();
            for k in 0..m {
                let (prev, cur, next) = (&pts[h[(k + m - 1) % m]], &pts[h[k]], &pts[h[(k + 1) % m]]);
                let e1 = linalg::sub(cur, prev);
                let e2 = linalg::sub(next, cur);
                // Outward normals of a counter-clockwise polygon.
                let n1 = linalg::scale(&[e1[1], -e1[0]], 1.0 / linalg::euclid(&e1));
                let n2 = linalg::scale(&[e2[1], -e2[0]], 1.0 / linalg::euclid(&e2));
                out.push(linalg::add(&n1, &n2));
            }
        }
        3 => {
            let facets = hull_facets_3d(pts, tol);
            let mut verts: Vec<usize> = facets.iter().flat_map(|f| f.vertices.iter().copied()).collect();
            verts.sort_unstable();
            verts.dedup();
            for v in verts {
                let mut s = vec![0.0; 3];
                for f in facets.iter().filter(|f| f.vertices.contains(&v)) {
                    s = linalg::add(&s, &f.normal);
                }
                if linalg::euclid(&s) == 0.0 {
                    s = linalg::sub(&pts[v], &linalg::centroid(pts));
                }
                out.push(s);
            }
        }
        _ => {}
    }
    Ok(out.into_iter().filter(|v| linalg::euclid(v) > 0.0).collect())
}
