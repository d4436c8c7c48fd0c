//! Rotundity, smoothness, ACS and HLUR checks, slice shrinkage, convergence
//! of `D[x, delta]` to `A_0(x)`, and sequence probes.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{GeomError, Result};
use crate::faces::{self, Geometry};
use crate::linalg;
use crate::rng;
use crate::space::{Functional, NormFamily, NormedSpace, Vector};
use crate::verdict::{Certificate, ProbeConfig, Status, Verdict};

fn vector(raw: Vec<f64>) -> Vector {
    Vector::from_raw(raw)
}

fn functional(raw: Vec<f64>) -> Functional {
    Functional::from_raw(raw)
}

/// Pair of points with the largest distance under `dist`.
fn widest_pair(points: &[Vec<f64>], dist: impl Fn(&[f64]) -> f64) -> Option<(usize, usize, f64)> {
    let mut best: Option<(usize, usize, f64)> = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = dist(&linalg::sub(&points[i], &points[j]));
            if best.is_none_or(|b| d > b.2) {
                best = Some((i, j, d));
            }
        }
    }
    best
}

fn ones(n: usize) -> Vec<f64> {
    vec![1.0; n]
}

fn axis(n: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[i] = 1.0;
    e
}

/// `l_1` or `l_inf` above the tabulated dimension.
fn large_corner_family(space: &NormedSpace) -> Option<f64> {
    match space.family() {
        NormFamily::Lp { p } if space.polyhedron().is_none() && (*p == 1.0 || p.is_infinite()) => Some(*p),
        _ => None,
    }
}

/// Strict convexity: every exposed face is a single point.
pub fn check_rotund(space: &NormedSpace, cfg: &ProbeConfig) -> Result<Verdict> {
    cfg.validate()?;
    let tol = cfg.tol;
    let n = space.dim();
    if space.rotund_by_family() {
        return Ok(Verdict::new("rotund", Status::HoldsExact, cfg, 0, tol)
            .note(format!("{} is strictly convex by classification", space.family())));
    }
    let mut candidates: Vec<Vec<f64>> = match (space.dual_vertices(), space.family()) {
        (Some(dual), _) => dual.to_vec(),
        (None, NormFamily::Stadium { radius, .. }) => vec![vec![0.0, 1.0 / radius]],
        (None, _) => match large_corner_family(space) {
            Some(p) if p.is_infinite() => vec![axis(n, 0)],
            _ => vec![ones(n)],
        },
    };
    let checked = candidates.len();
    for f in candidates.drain(..) {
        let face = match space.face_vertices_raw(&f) {
            Ok(face) => face,
            Err(GeomError::Unsupported(_)) => corner_face(space),
            Err(e) => return Err(e),
        };
        if let Some((i, j, d)) = widest_pair(&face, |v| space.norm_raw(v)) {
            if d > tol {
                let h = space.dual_norm_raw(&f);
                let cert = Certificate::FaceDiameter {
                    functional: functional(linalg::scale(&f, 1.0 / h)),
                    a: vector(face[i].clone()),
                    b: vector(face[j].clone()),
                    diameter: d,
                };
                return Ok(Verdict::new("rotund", Status::Fails, cfg, checked, tol - d).with_certificate(cert));
            }
        }
    }
    Ok(Verdict::new("rotund", Status::HoldsExact, cfg, checked, tol).note("every facet is a single point"))
}

/// Two vertices of the face of the first candidate functional for `l_1` /
/// `l_inf` in high dimension.
fn corner_face(space: &NormedSpace) -> Vec<Vec<f64>> {
    let n = space.dim();
    match large_corner_family(space) {
        Some(p) if p.is_infinite() => {
            let mut b = ones(n);
            b[1] = -1.0;
            vec![ones(n), b]
        }
        _ => vec![axis(n, 0), axis(n, 1)],
    }
}

/// Smoothness: every unit vector has a single norming functional.
pub fn check_smooth(space: &NormedSpace, cfg: &ProbeConfig) -> Result<Verdict> {
    cfg.validate()?;
    let tol = cfg.tol;
    let n = space.dim();
    if space.smooth_by_family() {
        return Ok(Verdict::new("smooth", Status::HoldsExact, cfg, 0, tol)
            .note(format!("{} is smooth by classification", space.family())));
    }
    let points = space.distinguished_points();
    for x in &points {
        let ext = match space.support_extremes_raw(x) {
            Ok(e) => e,
            Err(GeomError::Unsupported(_)) if large_corner_family(space) == Some(1.0) => {
                let mut g = ones(n);
                g[1] = -1.0;
                vec![ones(n), g]
            }
            Err(e) => return Err(e),
        };
        if let Some((i, j, d)) = widest_pair(&ext, |v| space.dual_norm_raw(v)) {
            if d > tol {
                let cert = Certificate::NonSmooth {
                    point: vector(x.clone()),
                    f: functional(ext[i].clone()),
                    g: functional(ext[j].clone()),
                    distance: d,
                };
                return Ok(Verdict::new("smooth", Status::Fails, cfg, points.len(), tol - d).with_certificate(cert));
            }
        }
    }
    Ok(Verdict::new("smooth", Status::HoldsExact, cfg, points.len(), tol)
        .note("every vertex has a single norming functional"))
}

struct TangentSearch {
    violation: Option<Certificate>,
    margin: f64,
    pairs: usize,
}

impl TangentSearch {
    fn new(tol: f64) -> Self {
        Self { violation: None, margin: tol, pairs: 0 }
    }

    /// Records `f(y)` for a tangent pair; returns true on a violation.
    fn visit(&mut self, x: &[f64], y: &[f64], f: &[f64], tol: f64) -> bool {
        self.pairs += 1;
        let value = linalg::dot(f, y);
        let margin = value - (1.0 - tol);
        self.margin = self.margin.min(margin);
        if margin < 0.0 {
            self.violation = Some(Certificate::Tangency {
                x: vector(x.to_vec()),
                y: vector(y.to_vec()),
                f: functional(f.to_vec()),
                value,
            });
            return true;
        }
        false
    }
}

/// Centroid first, then the listed points.
fn centroid_first(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(points.len() + 1);
    if points.len() > 1 {
        out.push(linalg::centroid(points));
    }
    out.extend(points.iter().cloned());
    out
}

fn exhaustive_tangents(space: &NormedSpace, tol: f64) -> Result<TangentSearch> {
    let mut search = TangentSearch::new(tol);
    let ball = space.ball_vertices().expect("polyhedral").to_vec();
    for x in &ball {
        let ext = space.support_extremes_raw(x)?;
        let fs = centroid_first(&ext);
        for g in &ext {
            let face = space.face_vertices_raw(g)?;
            let ys = centroid_first(&face);
            for f in &fs {
                for y in &ys {
                    if search.visit(x, y, f, tol) {
                        return Ok(search);
                    }
                }
            }
        }
    }
    Ok(search)
}

fn sampled_tangents(space: &NormedSpace, cfg: &ProbeConfig) -> Result<TangentSearch> {
    let tol = cfg.tol;
    let mut search = TangentSearch::new(tol);
    let mut gs = space.distinguished_functionals();
    gs.extend(
        space.dual_sphere_sample(cfg.samples, rng::subseed(cfg.seed, "acs")).into_iter().map(|f| f.into_coeffs()),
    );
    for g in &gs {
        let face = space.face_vertices_raw(g)?;
        let pts = centroid_first(&face);
        for x in &pts {
            let ext = space.support_extremes_raw(x)?;
            for f in centroid_first(&ext) {
                for y in &pts {
                    if search.visit(x, y, &f, tol) {
                        return Ok(search);
                    }
                }
            }
        }
    }
    Ok(search)
}

/// Corner witnesses for `l_1` / `l_inf` above the tabulated dimension.
fn corner_tangency(space: &NormedSpace) -> Certificate {
    let n = space.dim();
    if large_corner_family(space) == Some(f64::INFINITY) {
        let x = ones(n);
        let f = linalg::scale(&ones(n), 1.0 / n as f64);
        let mut y = vec![-1.0; n];
        y[0] = 1.0;
        let value = linalg::dot(&f, &y);
        Certificate::Tangency { x: vector(x), y: vector(y), f: functional(f), value }
    } else {
        Certificate::Tangency { x: vector(axis(n, 0)), y: vector(axis(n, 1)), f: functional(axis(n, 0)), value: 0.0 }
    }
}

/// Alternatively convex or smooth: `|x + y| = 2` and `f(x) = 1` force `f(y) = 1`.
///
/// Polyhedral balls are searched exhaustively over ball vertices, their
/// norming functionals and the faces those expose; this finds the failure
/// whenever one exists. Other families are classified (rotund or smooth
/// implies ACS) and the classification is cross-checked by sampling faces.
pub fn check_acs(space: &NormedSpace, cfg: &ProbeConfig) -> Result<Verdict> {
    cfg.validate()?;
    let tol = cfg.tol;
    if space.is_polyhedral() && space.dim() > 1 && space.ball_vertices().is_none() {
        let c = corner_tangency(space);
        return Ok(Verdict::new("acs", Status::Fails, cfg, 1, -1.0).with_certificate(c));
    }
    let search =
        if space.ball_vertices().is_some() { exhaustive_tangents(space, tol)? } else { sampled_tangents(space, cfg)? };
    if let Some(c) = search.violation {
        let mut v = Verdict::new("acs", Status::Fails, cfg, search.pairs, search.margin).with_certificate(c);
        if space.rotund_by_family() || space.smooth_by_family() {
            v.status = Status::Inconclusive;
            v = v.note("violation found in a space classified rotund or smooth");
        }
        return Ok(v);
    }
    if space.ball_vertices().is_some() {
        return Ok(Verdict::new("acs", Status::HoldsExact, cfg, search.pairs, search.margin)
            .note("exhaustive over ball vertices and their faces"));
    }
    let reason = match (space.rotund_by_family(), space.smooth_by_family()) {
        (true, true) => "rotund and smooth, hence ACS",
        (true, false) => "rotund, hence ACS",
        (false, true) => "smooth, hence ACS",
        (false, false) => "",
    };
    if reason.is_empty() {
        return Ok(Verdict::new("acs", Status::HoldsNumerical, cfg, search.pairs, search.margin)
            .note("no tangent pair violated ACS"));
    }
    Ok(Verdict::new("acs", Status::HoldsExact, cfg, search.pairs, search.margin)
        .note(reason)
        .note(format!("{} sampled tangent pairs agree", search.pairs)))
}

/// HLUR via ACS, cross-checked in the plane against "rotund or smooth".
pub fn check_hlur(space: &NormedSpace, cfg: &ProbeConfig) -> Result<Verdict> {
    let acs = check_acs(space, cfg)?;
    let mut v = Verdict { property: String::from("hlur"), ..acs.clone() };
    v.notes = vec![format!("ACS route: {}", acs.status)];
    if space.dim() > 2 {
        return Ok(v);
    }
    let rot = check_rotund(space, cfg)?;
    let smooth = check_smooth(space, cfg)?;
    let second = rot.status.holds() || smooth.status.holds();
    v.notes.push(format!("rotund: {}, smooth: {}", rot.status, smooth.status));
    if acs.status == Status::Inconclusive || second != acs.status.holds() {
        v.status = Status::Inconclusive;
        v.notes.push(String::from("the ACS route and the rotund-or-smooth route disagree"));
    }
    Ok(v)
}

/// Properties automatic in finite dimensions (CLUR, KK, NSC and relatives).
pub fn check_finite_dimensional(property: &str, cfg: &ProbeConfig) -> Verdict {
    Verdict::new(property, Status::HoldsExact, cfg, 0, cfg.tol)
        .note("automatic in finite dimensions: bounded sequences have convergent subsequences")
}

/// Distances along a decreasing schedule, with their error bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct Profile {
    pub deltas: Vec<f64>,
    pub distances: Vec<f64>,
    pub error_bounds: Vec<f64>,
    /// Distance at `delta = 0`.
    pub at_zero: f64,
}

impl Profile {
    /// Smallest step `d_k - d_{k+1}` after allowing for error bounds;
    /// negative when the profile increases somewhere.
    pub fn monotonicity_slack(&self) -> f64 {
        let mut slack = f64::INFINITY;
        for k in 0..self.distances.len().saturating_sub(1) {
            let allowance = self.error_bounds[k] + self.error_bounds[k + 1] + 1e-12;
            slack = slack.min(self.distances[k] - self.distances[k + 1] + allowance);
        }
        slack
    }

    pub fn is_monotone(&self) -> bool {
        self.monotonicity_slack() >= 0.0
    }

    /// Log-log slope over the second half of the schedule.
    pub fn rate_exponent(&self) -> f64 {
        let n = self.distances.len();
        if n < 2 {
            return f64::NAN;
        }
        let (i, j) = (n / 2, n - 1);
        let (a, b) = (self.distances[i], self.distances[j]);
        if b <= 0.0 {
            return f64::INFINITY;
        }
        libm::log(a / b) / libm::log(self.deltas[i] / self.deltas[j])
    }

    /// `distance ~ constant * delta^exponent` at the end of the schedule.
    pub fn rate_constant(&self) -> f64 {
        let e = self.rate_exponent();
        let n = self.distances.len();
        if n == 0 || !e.is_finite() {
            return 0.0;
        }
        self.distances[n - 1] / libm::pow(self.deltas[n - 1], e)
    }

    pub fn last(&self) -> f64 {
        self.distances.last().copied().unwrap_or(f64::NAN)
    }

    /// Nonincreasing, vanishing at `delta = 0`, and strictly shrinking along the schedule.
    pub fn converges(&self, tol: f64) -> bool {
        let shrinking = self.distances.first().is_some_and(|&d0| self.last() < d0 || d0 <= 10.0 * tol);
        self.is_monotone() && self.at_zero <= 10.0 * tol && shrinking && self.rate_exponent() > 0.0
    }
}

/// `H(S(X, f, delta), S(X, f, 0))` along `deltas`.
pub fn slice_profile(space: &NormedSpace, f: &Functional, deltas: &[f64], cfg: &ProbeConfig) -> Result<Profile> {
    let face = faces::exposed_face(space, f)?;
    let seed = rng::subseed(cfg.seed, "hs-slices");
    let eval = |d: f64| -> Result<faces::HausdorffReport> {
        let s = faces::slice_region(space, f, d, 0, seed)?;
        faces::hausdorff(space, &s, &face)
    };
    let mut p =
        Profile { deltas: deltas.to_vec(), distances: Vec::new(), error_bounds: Vec::new(), at_zero: eval(0.0)?.value };
    for &d in deltas {
        let h = eval(d)?;
        p.distances.push(h.value);
        p.error_bounds.push(h.error_bound);
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HsReport {
    pub verdict: Verdict,
    pub profiles: Vec<(Functional, Profile)>,
    /// Largest rate constant over the sampled functionals.
    pub worst_rate_constant: f64,
    /// Smallest rate exponent over the sampled functionals.
    pub worst_rate_exponent: f64,
}

/// Every exposed face is strongly exposed: slices shrink onto their faces.
pub fn check_hs_slices(space: &NormedSpace, cfg: &ProbeConfig) -> Result<HsReport> {
    cfg.validate()?;
    let fs = space.dual_sphere_sample(cfg.functionals.max(1), rng::subseed(cfg.seed, "hs-functionals"));
    let mut profiles = Vec::with_capacity(fs.len());
    let mut worst: Option<usize> = None;
    let mut margin = f64::INFINITY;
    let (mut constant, mut exponent): (f64, f64) = (0.0, f64::INFINITY);
    for f in fs {
        let p = slice_profile(space, &f, &cfg.delta_schedule, cfg)?;
        margin = margin.min(p.monotonicity_slack());
        constant = constant.max(p.rate_constant());
        exponent = exponent.min(p.rate_exponent());
        if worst.is_none() && !p.converges(cfg.tol) {
            worst = Some(profiles.len());
        }
        profiles.push((f, p));
    }
    let final_max = profiles.iter().map(|(_, p)| p.last()).fold(0.0, f64::max);
    let mut verdict = match worst {
        Some(i) => {
            let (f, p) = &profiles[i];
            Verdict::new("hs", Status::Fails, cfg, profiles.len(), margin).with_certificate(Certificate::SliceProfile {
                functional: f.clone(),
                deltas: p.deltas.clone(),
                distances: p.distances.clone(),
            })
        }
        None => Verdict::new("hs", Status::HoldsNumerical, cfg, profiles.len(), margin),
    };
    verdict = verdict
        .note(format!("largest final distance {final_max:e} at delta = {:e}", cfg.delta_schedule.last().unwrap()))
        .note(format!("rate exponent >= {exponent:.4}, rate constant <= {constant:.4}"));
    Ok(HsReport { verdict, profiles, worst_rate_constant: constant, worst_rate_exponent: exponent })
}

/// Whether `x`'s norming functionals all expose the same face.
pub fn face_coincidence(space: &NormedSpace, x: &Vector, cfg: &ProbeConfig) -> Result<Verdict> {
    let j = faces::duality_map(space, x)?;
    let tol = cfg.tol;
    let mut ext: Vec<Functional> = j.extremes.clone();
    ext.sort_by(|a, b| linalg::lex_cmp(b.coeffs(), a.coeffs()));
    let mut worst = 0.0;
    let mut pairs = 0;
    let mut cert = None;
    for i in 0..ext.len() {
        let fi = space.face_vertices_raw(ext[i].coeffs())?;
        for g in &ext[i + 1..] {
            let fg = space.face_vertices_raw(g.coeffs())?;
            let h = faces::hausdorff(space, &Geometry::Pieces(vec![fi.clone()]), &Geometry::Pieces(vec![fg]))?;
            pairs += 1;
            if h.value > worst {
                worst = h.value;
                if h.value > tol && cert.is_none() {
                    cert = Some(Certificate::FaceCoincidence {
                        x: x.clone(),
                        f: ext[i].clone(),
                        g: g.clone(),
                        distance: h.value,
                    });
                }
            }
        }
    }
    Ok(match cert {
        Some(c) => Verdict::new("face-coincidence", Status::Fails, cfg, pairs, tol - worst).with_certificate(c),
        None if j.is_singleton() => {
            Verdict::new("face-coincidence", Status::HoldsExact, cfg, 0, tol).note("J(x) is a single functional")
        }
        None => Verdict::new("face-coincidence", Status::HoldsExact, cfg, pairs, tol - worst),
    })
}

/// `H(D[x, delta], A_0(x))` along `deltas`.
pub fn region_profile(space: &NormedSpace, x: &Vector, deltas: &[f64], cfg: &ProbeConfig) -> Result<Profile> {
    let a0 = faces::a0_set(space, x)?;
    let seed = rng::subseed(cfg.seed, "d-regions");
    let count = cfg.samples.min(64);
    let eval = |d: f64| -> Result<faces::HausdorffReport> {
        let r = faces::d_region(space, x, d, count, seed)?;
        faces::hausdorff(space, &r, &a0)
    };
    let mut p =
        Profile { deltas: deltas.to_vec(), distances: Vec::new(), error_bounds: Vec::new(), at_zero: eval(0.0)?.value };
    for &d in deltas {
        let h = eval(d)?;
        p.distances.push(h.value);
        p.error_bounds.push(h.error_bound);
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DsetReport {
    pub verdict: Verdict,
    pub profile: Profile,
    pub face_coincidence: Verdict,
    pub hlur: Status,
    /// False when the space is HLUR but one of the two conclusions failed.
    pub consistent: bool,
}

/// Convergence `D[x, 1/n] -> A_0(x)` together with face coincidence at `x`.
/// The schedule entries are read as `1/n`.
pub fn dset_convergence(space: &NormedSpace, x: &Vector, cfg: &ProbeConfig) -> Result<DsetReport> {
    cfg.validate()?;
    let face = face_coincidence(space, x, cfg)?;
    let profile = region_profile(space, x, &cfg.delta_schedule, cfg)?;
    let hlur = check_hlur(space, cfg)?.status;
    let converges = profile.converges(cfg.tol);
    let margin = profile.monotonicity_slack().min(face.stats.worst_margin);
    let mut verdict = if !face.status.holds() {
        let mut v = Verdict::new("dset-convergence", Status::Fails, cfg, profile.deltas.len(), margin);
        v.certificate = face.certificate.clone();
        v
    } else if !converges {
        Verdict::new("dset-convergence", Status::Fails, cfg, profile.deltas.len(), margin).with_certificate(
            Certificate::RegionProfile {
                x: x.clone(),
                deltas: profile.deltas.clone(),
                distances: profile.distances.clone(),
            },
        )
    } else {
        Verdict::new("dset-convergence", Status::HoldsNumerical, cfg, profile.deltas.len(), margin)
    };
    verdict = verdict
        .note(format!("face coincidence: {}", face.status))
        .note(format!("D-region distances {}", if converges { "shrink to zero" } else { "do not shrink to zero" }))
        .note(format!("final distance {:e}", profile.last()));
    let consistent = !(hlur.holds() && !verdict.status.holds());
    if !consistent {
        verdict = verdict.note("the space is HLUR but a conclusion failed");
    }
    Ok(DsetReport { verdict, profile, face_coincidence: face, hlur, consistent })
}

/// How a probe sequence approaches `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Points `normalize(v - delta x)` near the far vertex `v` of a face of `x`.
    FaceWalk,
    /// Boundary points of `C[x, delta]` along fresh random tangents.
    RandomTangent,
    /// Boundary points of `C[x, delta]` along one fixed tangent.
    CapShrink,
}

impl GeneratorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorKind::FaceWalk => "face-walk",
            GeneratorKind::RandomTangent => "random-tangent",
            GeneratorKind::CapShrink => "cap-shrink",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GeneratorKind {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "face-walk" => Ok(GeneratorKind::FaceWalk),
            "random-tangent" => Ok(GeneratorKind::RandomTangent),
            "cap-shrink" => Ok(GeneratorKind::CapShrink),
            other => Err(GeomError::UnknownGenerator(String::from(other))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeStep {
    pub point: Vector,
    /// `|x_n + x|`.
    pub sum_norm: f64,
    /// `d(x_n, S(X, f, 0))` for each reported functional.
    pub face_distances: Vec<f64>,
    /// `f(x_n)` for each reported functional.
    pub functional_values: Vec<f64>,
    /// `|x_n - x|`.
    pub distance_to_anchor: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeReport {
    pub anchor: Vector,
    pub generator: Option<GeneratorKind>,
    /// Extreme points of `J(x)`, followed by their centroid when there are several.
    pub functionals: Vec<Functional>,
    pub steps: Vec<ProbeStep>,
}

/// Generates `x_n` on the sphere with `|x_n + x| = 2 - 2 delta_n` (or on a
/// face of `x` for the face walk) and measures them.
pub fn sequence_probe(space: &NormedSpace, x: &Vector, kind: GeneratorKind, cfg: &ProbeConfig) -> Result<ProbeReport> {
    cfg.validate()?;
    space.require_on_sphere(x)?;
    let xc = x.coords();
    let seed = rng::subseed(cfg.seed, "sequence-probe");
    let mut points = Vec::with_capacity(cfg.delta_schedule.len());
    match kind {
        GeneratorKind::FaceWalk => {
            let j = space.support_extremes_raw(xc)?;
            let face = space.face_vertices_raw(&j[0])?;
            let far = face
                .iter()
                .map(|v| (space.norm_raw(&linalg::sub(v, xc)), v))
                .fold((f64::NEG_INFINITY, &face[0]), |a, b| if b.0 > a.0 { b } else { a })
                .1
                .clone();
            for &d in &cfg.delta_schedule {
                let y = linalg::axpy(&far, -d, xc);
                points.push(vector(linalg::scale(&y, 1.0 / space.norm_raw(&y))));
            }
        }
        GeneratorKind::CapShrink | GeneratorKind::RandomTangent => {
            let fixed = linalg::complement_basis(xc).into_iter().next().unwrap_or_else(|| axis(space.dim(), 0));
            for (k, &d) in cfg.delta_schedule.iter().enumerate() {
                let w = if kind == GeneratorKind::CapShrink {
                    fixed.clone()
                } else {
                    let mut r = rng::stream(seed, "random-tangent", k as u64);
                    random_tangent(xc, &mut r)
                };
                let level = 2.0 - 2.0 * d;
                let keep = |y: &[f64]| space.norm_raw(&linalg::add(xc, y)) >= level;
                points.push(vector(faces::rim_end(space, xc, &w, &keep)));
            }
        }
    }
    let mut report = probe_points(space, x, &points)?;
    report.generator = Some(kind);
    Ok(report)
}

fn random_tangent(x: &[f64], r: &mut impl rand::Rng) -> Vec<f64> {
    let basis = linalg::complement_basis(x);
    loop {
        let g = rng::gaussian_vec(r, x.len());
        let mut w = vec![0.0; x.len()];
        for b in &basis {
            w = linalg::axpy(&w, linalg::dot(&g, b), b);
        }
        let l = linalg::euclid(&w);
        if l > 1e-12 {
            return linalg::scale(&w, 1.0 / l);
        }
    }
}

/// Measures an explicit sequence against `x`.
pub fn probe_points(space: &NormedSpace, x: &Vector, points: &[Vector]) -> Result<ProbeReport> {
    let j = faces::duality_map(space, x)?;
    let mut functionals = j.extremes.clone();
    if functionals.len() > 1 {
        functionals.push(j.centroid());
    }
    let mut face_sets = Vec::with_capacity(functionals.len());
    for f in &functionals {
        face_sets.push(faces::FaceSet::polytope(
            space.face_vertices_raw(f.coeffs())?.into_iter().map(Vector::from_raw).collect(),
        ));
    }
    let mut steps = Vec::with_capacity(points.len());
    for p in points {
        space.check_dim(p.dim())?;
        let mut face_distances = Vec::with_capacity(face_sets.len());
        for fs in &face_sets {
            face_distances.push(faces::distance_to_set(space, p, fs)?.distance);
        }
        let mut functional_values = Vec::with_capacity(functionals.len());
        for f in &functionals {
            functional_values.push(f.apply(p)?);
        }
        steps.push(ProbeStep {
            point: p.clone(),
            sum_norm: space.norm(&(p + x))?,
            face_distances,
            functional_values,
            distance_to_anchor: space.norm(&(p - x))?,
        });
    }
    Ok(ProbeReport { anchor: x.clone(), generator: None, functionals, steps })
}
