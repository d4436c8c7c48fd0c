//! Operator norms, the Daugavet equation `|I + T| = 1 + |T|`, approximate
//! eigenvalue residuals and the anti-Daugavet probe.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg;
use crate::optimize::{self, Goal, SphereSearch};
use crate::rng;
use crate::space::{NormFamily, NormedSpace, Vector};
use crate::verdict::{Certificate, ProbeConfig, Status, Verdict};

/// Grid used to screen candidates before the full grid confirms a failure.
const SCREEN_GRID: usize = 4096;
/// Random operators tried per candidate budget unit before giving up.
const RANDOM_ATTEMPTS_DIVISOR: usize = 10;

/// A square matrix acting on coordinate vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl OperatorMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(GeomError::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            if r.len() != dim {
                return Err(GeomError::DimensionMismatch { expected: dim, found: r.len() });
            }
            entries.extend(r);
        }
        Self::from_row_major(dim, entries)
    }

    pub fn from_row_major(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(GeomError::ZeroDimension);
        }
        if entries.len() != dim * dim {
            return Err(GeomError::DimensionMismatch { expected: dim * dim, found: entries.len() });
        }
        if let Some(i) = entries.iter().position(|e| !e.is_finite()) {
            return Err(GeomError::NonFinite(i));
        }
        Ok(Self { dim, entries })
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, 1.0)
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![0.0; dim * dim] }
    }

    pub fn scalar(dim: usize, s: f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = s;
        }
        m
    }

    /// `x -> f(x) y`.
    pub fn rank_one(f: &[f64], y: &[f64]) -> Self {
        let dim = f.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for yi in y {
            entries.extend(f.iter().map(|fj| yi * fj));
        }
        Self { dim, entries }
    }

    /// `Some(s)` when the matrix is `s I`.
    pub fn as_scalar(&self) -> Option<f64> {
        let s = self.get(0, 0);
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == if i == j { s } else { 0.0 })).then_some(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.entries.chunks(self.dim).map(|r| linalg::dot(r, x)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Self { dim: self.dim, entries }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|e| e * s).collect() }
    }

    /// Composition `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Self { dim: n, entries }
    }

    pub fn plus_identity(&self) -> Self {
        self.add(&Self::identity(self.dim))
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        Self { dim: n, entries }
    }

    /// `(u, v)` with `T = u v^T`, when `T` has rank at most one.
    pub fn rank_one_factors(&self) -> Option<(Vec<f64>, Vec<f64>)> {
        let rows = self.rows();
        let scale = linalg::max_abs(&self.entries);
        if scale == 0.0 {
            return Some((vec![0.0; self.dim], vec![0.0; self.dim]));
        }
        let (k, _) = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i, linalg::max_abs(r)))
            .fold((0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
        let v = rows[k].clone();
        let vv = linalg::dot(&v, &v);
        let u: Vec<f64> = rows.iter().map(|r| linalg::dot(r, &v) / vv).collect();
        let back = Self::rank_one(&v, &u);
        let err = self.entries.iter().zip(&back.entries).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        (err <= 1e-14 * scale).then_some((u, v))
    }

    /// Real eigenvalues, when cheaply available: dimension 1 and 2 in
    /// closed form, symmetric matrices by Jacobi rotations.
    pub fn real_eigenvalues(&self) -> Option<Vec<f64>> {
        let n = self.dim;
        if n == 1 {
            return Some(vec![self.entries[0]]);
        }
        if n == 2 {
            let (a, b, c, d) = (self.get(0, 0), self.get(0, 1), self.get(1, 0), self.get(1, 1));
            let tr = a + d;
            let disc = (a - d) * (a - d) + 4.0 * b * c;
            if disc < 0.0 {
                return Some(Vec::new());
            }
            let s = libm::sqrt(disc);
            return Some(vec![(tr - s) / 2.0, (tr + s) / 2.0]);
        }
        if *self == self.transpose() {
            return Some(linalg::symmetric_eigenvalues(&self.entries, n));
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorNorm {
    pub value: f64,
    /// False when `value` is the best of a multistart search (a lower bound).
    pub exact: bool,
}

fn check_operator(space: &NormedSpace, t: &OperatorMatrix) -> Result<()> {
    if t.dim() != space.dim() {
        return Err(GeomError::DimensionMismatch { expected: space.dim(), found: t.dim() });
    }
    Ok(())
}

/// `sup |T x| / |x|`.
pub fn operator_norm(space: &NormedSpace, t: &OperatorMatrix, cfg: &ProbeConfig) -> Result<OperatorNorm> {
    check_operator(space, t)?;
    let n = t.dim();
    let exact = |value| Ok(OperatorNorm { value, exact: true });
    if let Some(s) = t.as_scalar() {
        return exact(s.abs());
    }
    if let NormFamily::Lp { p } = space.family() {
        if *p == 1.0 {
            return exact((0..n).map(|j| (0..n).map(|i| t.get(i, j).abs()).sum::<f64>()).fold(0.0, f64::max));
        }
        if p.is_infinite() {
            return exact((0..n).map(|i| (0..n).map(|j| t.get(i, j).abs()).sum::<f64>()).fold(0.0, f64::max));
        }
        if *p == 2.0 {
            let gram = t.transpose().mul(t);
            let top = linalg::symmetric_eigenvalues(gram.entries(), n).into_iter().fold(0.0, f64::max);
            return exact(libm::sqrt(top));
        }
    }
    if let Some(ball) = space.ball_vertices() {
        return exact(ball.iter().map(|v| space.norm_raw(&t.apply(v))).fold(0.0, f64::max));
    }
    if let Some((u, v)) = t.rank_one_factors() {
        return exact(space.norm_raw(&u) * space.dual_norm_raw(&v));
    }
    let search = SphereSearch { grid: 2048, starts: 64, seed: rng::subseed(cfg.seed, "operator-norm") };
    let phi = |x: &[f64]| space.norm_raw(&t.apply(x));
    let best = optimize::extremize_on_sphere(space, Goal::Maximize, &phi, &search, &space.distinguished_points());
    Ok(OperatorNorm { value: best.value, exact: false })
}

/// `1 + |T| - |I + T|`; the Daugavet equation holds when this is within tolerance of 0.
pub fn daugavet_residual(space: &NormedSpace, t: &OperatorMatrix, cfg: &ProbeConfig) -> Result<f64> {
    let a = operator_norm(space, t, cfg)?.value;
    let b = operator_norm(space, &t.plus_identity(), cfg)?.value;
    Ok(1.0 + a - b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenResidual {
    /// Smallest `|T x - lambda x|` found on the unit sphere.
    pub value: f64,
    pub witness: Vector,
    /// `|T| + |lambda|`, a Lipschitz constant of the residual.
    pub lipschitz: f64,
    /// Largest norm gap between consecutive grid points (planar grids only).
    pub mesh: Option<f64>,
    /// `min over grid - lipschitz * mesh`, a certified lower bound of the infimum.
    pub lower_bound: Option<f64>,
}

/// `inf_{|x| = 1} |T x - lambda x|` on a grid of `cfg.eigen_grid` points in
/// the plane (refined by golden section), by multistart elsewhere.
pub fn approx_eigen_residual(
    space: &NormedSpace,
    t: &OperatorMatrix,
    lambda: f64,
    cfg: &ProbeConfig,
) -> Result<EigenResidual> {
    eigen_residual_on_grid(space, t, lambda, cfg.eigen_grid, cfg)
}

fn eigen_residual_on_grid(
    space: &NormedSpace,
    t: &OperatorMatrix,
    lambda: f64,
    grid: usize,
    cfg: &ProbeConfig,
) -> Result<EigenResidual> {
    check_operator(space, t)?;
    let lipschitz = operator_norm(space, t, cfg)?.value + lambda.abs();
    Ok(eigen_residual_with(space, t, lambda, lipschitz, grid, cfg))
}

fn eigen_residual_with(
    space: &NormedSpace,
    t: &OperatorMatrix,
    lambda: f64,
    lipschitz: f64,
    grid: usize,
    cfg: &ProbeConfig,
) -> EigenResidual {
    let residual = |x: &[f64]| space.norm_raw(&linalg::axpy(&t.apply(x), -lambda, x));
    if space.dim() != 2 {
        let search = SphereSearch { grid: grid.min(20_000), starts: 64, seed: rng::subseed(cfg.seed, "eigen") };
        let best =
            optimize::extremize_on_sphere(space, Goal::Minimize, &residual, &search, &space.distinguished_points());
        return EigenResidual {
            value: best.value,
            witness: Vector::from_raw(best.point),
            lipschitz,
            mesh: None,
            lower_bound: None,
        };
    }
    let point = |th: f64| {
        let d = [libm::cos(th), libm::sin(th)];
        let n = space.norm_raw(&d);
        [d[0] / n, d[1] / n]
    };
    let step = core::f64::consts::TAU / grid as f64;
    let mut prev = point(-step);
    let mut mesh: f64 = 0.0;
    let (mut best, mut best_k) = (f64::INFINITY, 0usize);
    for k in 0..grid {
        let x = point(step * k as f64);
        mesh = mesh.max(space.norm_raw(&[x[0] - prev[0], x[1] - prev[1]]));
        let r = residual(&x);
        if r < best - 1e-14 {
            best = r;
            best_k = k;
        }
        prev = x;
    }
    let centre = step * best_k as f64;
    let (th, refined) = optimize::golden_min(|th| residual(&point(th)), centre - step, centre + step, 90);
    let (value, witness) = if refined < best { (refined, point(th)) } else { (best, point(centre)) };
    EigenResidual {
        value,
        witness: Vector::from_raw(witness.to_vec()),
        lipschitz,
        mesh: Some(mesh),
        lower_bound: Some((best - lipschitz * mesh).max(0.0)),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub op_norm: f64,
    pub op_norm_exact: bool,
    pub daugavet_residual: f64,
    pub eigen_residual_at_norm: f64,
    pub witness: Option<Vector>,
    pub lipschitz: f64,
    pub mesh: Option<f64>,
    pub eigen_lower_bound: Option<f64>,
    /// Distance from `|T|` to the nearest real eigenvalue, when known.
    pub eigen_gap: Option<f64>,
}

pub fn spectrum_report(space: &NormedSpace, t: &OperatorMatrix, cfg: &ProbeConfig) -> Result<SpectrumReport> {
    spectrum_report_on_grid(space, t, cfg, cfg.eigen_grid)
}

fn spectrum_report_on_grid(
    space: &NormedSpace,
    t: &OperatorMatrix,
    cfg: &ProbeConfig,
    grid: usize,
) -> Result<SpectrumReport> {
    check_operator(space, t)?;
    let norm = operator_norm(space, t, cfg)?;
    let plus = operator_norm(space, &t.plus_identity(), cfg)?;
    Ok(spectrum_from_norms(space, t, norm, plus, cfg, grid))
}

fn spectrum_from_norms(
    space: &NormedSpace,
    t: &OperatorMatrix,
    norm: OperatorNorm,
    plus: OperatorNorm,
    cfg: &ProbeConfig,
    grid: usize,
) -> SpectrumReport {
    let e = eigen_residual_with(space, t, norm.value, 2.0 * norm.value, grid, cfg);
    let eigen_gap =
        t.real_eigenvalues().map(|ev| ev.iter().map(|l| (l - norm.value).abs()).fold(f64::INFINITY, f64::min));
    SpectrumReport {
        op_norm: norm.value,
        op_norm_exact: norm.exact && plus.exact,
        daugavet_residual: 1.0 + norm.value - plus.value,
        eigen_residual_at_norm: e.value,
        witness: Some(e.witness),
        lipschitz: e.lipschitz,
        mesh: e.mesh,
        eigen_lower_bound: e.lower_bound,
        eigen_gap,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AntiDaugavetReport {
    pub verdict: Verdict,
    /// Daugavet-satisfying candidates whose eigen residual was measured.
    pub checked: usize,
    /// Candidates discarded because they missed the Daugavet equation.
    pub filtered: usize,
    pub max_eigen_residual: f64,
    /// The refuting operator, or the candidate with the largest residual.
    pub worst: Option<(OperatorMatrix, SpectrumReport)>,
}

/// Operators expected to satisfy the Daugavet equation, in probing order:
/// `f (x) y` with `f` norming a distinguished point `z` and `y` in `A_0(z)`
/// (nilpotent ones first), scalar multiples of the identity, then rank-one
/// norming operators `s f (x) y` with `f` in `J(y)`.
fn structured_candidates(space: &NormedSpace, cfg: &ProbeConfig) -> Result<Vec<OperatorMatrix>> {
    let tol = cfg.tol;
    let (mut shears, mut others) = (Vec::new(), Vec::new());
    for z in space.distinguished_points() {
        let ext = space.support_extremes_raw(&z)?;
        let fs = centroid_then(&ext);
        for g in ext.iter().rev() {
            let face = space.face_vertices_raw(g)?;
            let ys = centroid_then(&face);
            for f in &fs {
                for y in &ys {
                    let t = OperatorMatrix::rank_one(f, y);
                    if linalg::dot(f, y).abs() <= tol {
                        shears.push(t);
                    } else {
                        others.push(t);
                    }
                }
            }
        }
    }
    let mut out = shears;
    out.extend(others);
    out.dedup();
    for s in [0.5, 1.0, 2.0] {
        out.push(OperatorMatrix::scalar(space.dim(), s));
    }
    let seed = rng::subseed(cfg.seed, "daugavet");
    let ys = space.sphere_sample(cfg.candidates.saturating_sub(out.len()), seed);
    for (i, y) in ys.iter().enumerate() {
        let mut r = rng::stream(seed, "rank-one-scale", i as u64);
        let s = 5.0 * rng::open01(&mut r);
        let ext = space.support_extremes_raw(y.coords())?;
        let f = &ext[i % ext.len()];
        out.push(OperatorMatrix::rank_one(f, y.coords()).scaled(s));
    }
    Ok(out)
}

fn centroid_then(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out = points.to_vec();
    if points.len() > 1 {
        out.push(linalg::centroid(points));
    }
    out
}

/// Anti-Daugavet: every operator with `|I + T| = 1 + |T|` has `|T|` in its
/// approximate point spectrum. Fails on the first candidate whose residual
/// at `lambda = |T|` reaches `cfg.eigen_threshold` on the full grid.
pub fn anti_daugavet_probe(space: &NormedSpace, cfg: &ProbeConfig) -> Result<AntiDaugavetReport> {
    cfg.validate()?;
    let mut candidates = structured_candidates(space, cfg)?;
    let seed = rng::subseed(cfg.seed, "daugavet-random");
    let n = space.dim();
    for i in 0..cfg.candidates / RANDOM_ATTEMPTS_DIVISOR {
        let mut r = rng::stream(seed, "random-operator", i as u64);
        let t = OperatorMatrix::from_row_major(n, rng::gaussian_vec(&mut r, n * n))?;
        candidates.push(t);
    }
    let mut report = AntiDaugavetReport {
        verdict: Verdict::new("anti-daugavet", Status::HoldsNumerical, cfg, 0, cfg.eigen_threshold),
        checked: 0,
        filtered: 0,
        max_eigen_residual: 0.0,
        worst: None,
    };
    for t in candidates {
        let norm = operator_norm(space, &t, cfg)?;
        let plus = operator_norm(space, &t.plus_identity(), cfg)?;
        let d = 1.0 + norm.value - plus.value;
        if d.abs() > cfg.tol {
            report.filtered += 1;
            continue;
        }
        report.checked += 1;
        let screen = spectrum_from_norms(space, &t, norm, plus, cfg, SCREEN_GRID.min(cfg.eigen_grid));
        let suspicious = screen.eigen_residual_at_norm >= 0.5 * cfg.eigen_threshold;
        let full = if suspicious && cfg.eigen_grid > SCREEN_GRID {
            spectrum_from_norms(space, &t, norm, plus, cfg, cfg.eigen_grid)
        } else {
            screen
        };
        if full.eigen_residual_at_norm > report.max_eigen_residual || report.worst.is_none() {
            report.max_eigen_residual = report.max_eigen_residual.max(full.eigen_residual_at_norm);
            report.worst = Some((t.clone(), full.clone()));
        }
        if full.eigen_residual_at_norm >= cfg.eigen_threshold {
            let cert = Certificate::AntiDaugavet {
                operator: t,
                op_norm: full.op_norm,
                daugavet_residual: d,
                eigen_residual: full.eigen_residual_at_norm,
                witness: full.witness.clone().expect("grid search returns a witness"),
            };
            report.verdict = Verdict::new(
                "anti-daugavet",
                Status::Fails,
                cfg,
                report.checked,
                cfg.eigen_threshold - full.eigen_residual_at_norm,
            )
            .with_certificate(cert)
            .note(format!("eigen residual {:.6} at lambda = |T| = {:.6}", full.eigen_residual_at_norm, full.op_norm));
            return Ok(report);
        }
    }
    report.verdict = Verdict::new(
        "anti-daugavet",
        Status::HoldsNumerical,
        cfg,
        report.checked,
        cfg.eigen_threshold - report.max_eigen_residual,
    )
    .note(format!(
        "{} Daugavet operators checked, {} discarded, largest eigen residual {:e}",
        report.checked, report.filtered, report.max_eigen_residual
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ProbeConfig {
        ProbeConfig::default()
    }

    #[test]
    fn rank_one_orientation() {
        let t = OperatorMatrix::rank_one(&[0.0, 1.0], &[1.0, 0.0]);
        assert_eq!(t.rows(), vec![vec![0.0, 1.0], vec![0.0, 0.0]]);
        let (u, v) = t.rank_one_factors().unwrap();
        assert_eq!(OperatorMatrix::rank_one(&v, &u), t);
    }

    #[test]
    fn closed_form_norms() {
        let t = OperatorMatrix::new(vec![vec![1.0, -2.0], vec![3.0, 0.5]]).unwrap();
        let l1 = NormedSpace::lp(2, 1.0).unwrap();
        let linf = NormedSpace::lp(2, f64::INFINITY).unwrap();
        assert_eq!(operator_norm(&l1, &t, &cfg()).unwrap().value, 4.0);
        assert_eq!(operator_norm(&linf, &t, &cfg()).unwrap().value, 3.5);
    }

    #[test]
    fn eigenvalues_of_two_by_two() {
        let t = OperatorMatrix::new(vec![vec![2.0, 1.0], vec![0.0, 3.0]]).unwrap();
        assert_eq!(t.real_eigenvalues().unwrap(), vec![2.0, 3.0]);
        let r = OperatorMatrix::new(vec![vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(r.real_eigenvalues().unwrap().is_empty());
    }
}
