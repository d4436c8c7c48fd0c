//! Outcomes of property checks and the witnesses that back failures.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::daugavet::{self, OperatorMatrix};
use crate::error::{GeomError, Result};
use crate::faces;
use crate::linalg;
use crate::space::{Functional, NormedSpace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    /// Backed by a classification or an exhaustive combinatorial argument.
    HoldsExact,
    /// No violation found by sampling or on a finite schedule.
    HoldsNumerical,
    Fails,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::HoldsExact => "holds-exact",
            Status::HoldsNumerical => "holds-numerical",
            Status::Fails => "fails",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Status::HoldsExact | Status::HoldsNumerical)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "holds-exact" => Ok(Status::HoldsExact),
            "holds-numerical" => Ok(Status::HoldsNumerical),
            "fails" => Ok(Status::Fails),
            "inconclusive" => Ok(Status::Inconclusive),
            other => Err(GeomError::InvalidConfig(format!("unknown status {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stats {
    pub samples: usize,
    pub seed: u64,
    /// Signed slack of the tightest check: positive when the property held
    /// with room to spare, negative by the size of the worst violation.
    pub worst_margin: f64,
}

/// A concrete witness. Failing verdicts always carry one.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Two distinct unit vectors normed by the same functional.
    FaceDiameter { functional: Functional, a: Vector, b: Vector, diameter: f64 },
    /// Two distinct norming functionals of the same unit vector.
    NonSmooth { point: Vector, f: Functional, g: Functional, distance: f64 },
    /// `|x + y| = 2` and `f(x) = 1` but `f(y) < 1`.
    Tangency { x: Vector, y: Vector, f: Functional, value: f64 },
    /// Two norming functionals of `x` exposing different faces.
    FaceCoincidence { x: Vector, f: Functional, g: Functional, distance: f64 },
    /// Slice-to-face distances that fail to shrink.
    SliceProfile { functional: Functional, deltas: Vec<f64>, distances: Vec<f64> },
    /// `D[x, delta]`-to-`A_0(x)` distances that fail to shrink.
    RegionProfile { x: Vector, deltas: Vec<f64>, distances: Vec<f64> },
    /// An operator satisfying the Daugavet equation whose norm is not an
    /// approximate eigenvalue.
    AntiDaugavet {
        operator: OperatorMatrix,
        op_norm: f64,
        daugavet_residual: f64,
        eigen_residual: f64,
        witness: Vector,
    },
    /// Hull vertices of a point set that no sampled query exposed as farthest.
    HullMismatch { hull: Vec<Vector>, far: Vec<Vector> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::FaceDiameter { .. } => "face-diameter",
            Certificate::NonSmooth { .. } => "non-smooth",
            Certificate::Tangency { .. } => "tangency",
            Certificate::FaceCoincidence { .. } => "face-coincidence",
            Certificate::SliceProfile { .. } => "slice-profile",
            Certificate::RegionProfile { .. } => "region-profile",
            Certificate::AntiDaugavet { .. } => "anti-daugavet",
            Certificate::HullMismatch { .. } => "hull-mismatch",
        }
    }

    /// Recomputes the violation from the definitions. `Ok(true)` means the
    /// witness reproduces it with margin at least `cfg.tol`.
    pub fn reverify(&self, space: &NormedSpace, cfg: &ProbeConfig) -> Result<bool> {
        let tol = cfg.tol;
        let on_sphere = |v: &Vector| -> Result<bool> { Ok((space.norm(v)? - 1.0).abs() <= tol) };
        let on_dual = |f: &Functional| -> Result<bool> { Ok((space.dual_norm(f)? - 1.0).abs() <= tol) };
        match self {
            Certificate::FaceDiameter { functional, a, b, .. } => {
                let d = space.norm(&(a - b))?;
                Ok(on_sphere(a)?
                    && on_sphere(b)?
                    && on_dual(functional)?
                    && functional.apply(a)? >= 1.0 - tol
                    && functional.apply(b)? >= 1.0 - tol
                    && d >= tol)
            }
            Certificate::NonSmooth { point, f, g, .. } => {
                let d = space.dual_norm(&(f - g))?;
                Ok(on_sphere(point)?
                    && on_dual(f)?
                    && on_dual(g)?
                    && f.apply(point)? >= 1.0 - tol
                    && g.apply(point)? >= 1.0 - tol
                    && d >= tol)
            }
            Certificate::Tangency { x, y, f, .. } => Ok(on_sphere(x)?
                && on_sphere(y)?
                && space.norm(&(x + y))? >= 2.0 - tol
                && on_dual(f)?
                && f.apply(x)? >= 1.0 - tol
                && f.apply(y)? <= 1.0 - tol),
            Certificate::FaceCoincidence { x, f, g, .. } => {
                if !(on_sphere(x)? && on_dual(f)? && on_dual(g)?) {
                    return Ok(false);
                }
                if f.apply(x)? < 1.0 - tol || g.apply(x)? < 1.0 - tol {
                    return Ok(false);
                }
                let h = faces::hausdorff(space, &faces::exposed_face(space, f)?, &faces::exposed_face(space, g)?)?;
                Ok(h.value - h.error_bound >= tol)
            }
            Certificate::SliceProfile { functional, deltas, .. } => {
                let p = crate::properties::slice_profile(space, functional, deltas, cfg)?;
                Ok(!p.converges(cfg.tol))
            }
            Certificate::RegionProfile { x, deltas, .. } => {
                let p = crate::properties::region_profile(space, x, deltas, cfg)?;
                Ok(!p.converges(cfg.tol))
            }
            Certificate::AntiDaugavet { operator, witness, .. } => {
                let r = daugavet::daugavet_residual(space, operator, cfg)?;
                let norm = daugavet::operator_norm(space, operator, cfg)?.value;
                let e = daugavet::approx_eigen_residual(space, operator, norm, cfg)?;
                let certified = e.lower_bound.unwrap_or(e.value);
                Ok(on_sphere(witness)? && r.abs() <= tol && certified >= cfg.eigen_threshold)
            }
            Certificate::HullMismatch { hull, far } => {
                let pts: Vec<Vec<f64>> = hull.iter().chain(far).map(|v| v.coords().to_vec()).collect();
                let hv = crate::farthest::hull_vertices(&pts)?;
                let far_raw: Vec<Vec<f64>> = far.iter().map(|v| v.coords().to_vec()).collect();
                Ok(hv.iter().any(|&i| !far_raw.iter().any(|q| linalg::close(q, &pts[i], 1e-9))))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub property: String,
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub stats: Stats,
    /// Human-readable derivations and diagnostics.
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(property: &str, status: Status, cfg: &ProbeConfig, samples: usize, worst_margin: f64) -> Self {
        Self {
            property: String::from(property),
            status,
            certificate: None,
            stats: Stats { samples, seed: cfg.seed, worst_margin },
            notes: Vec::new(),
        }
    }

    pub fn with_certificate(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

/// Sampling and threshold settings shared by all checks.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbeConfig {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Strictly decreasing, positive values of `delta` (or `1/n`).
    pub delta_schedule: Vec<f64>,
    /// Unit functionals examined by the slice-shrinkage check.
    pub functionals: usize,
    /// Daugavet-satisfying operators examined by the anti-Daugavet probe.
    pub candidates: usize,
    /// Planar sphere grid size for approximate eigenvalue residuals.
    pub eigen_grid: usize,
    /// Eigen residual at or above which an operator refutes anti-Daugavet.
    pub eigen_threshold: f64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        Self {
            samples: 10_000,
            seed: 0,
            tol: 1e-9,
            delta_schedule: dyadic_schedule(1, 20),
            functionals: 32,
            candidates: 1000,
            eigen_grid: 1_000_000,
            eigen_threshold: 0.1,
        }
    }
}

/// `2^-first, ..., 2^-last`.
pub fn dyadic_schedule(first: u32, last: u32) -> Vec<f64> {
    (first..=last).map(|k| libm::ldexp(1.0, -(k as i32))).collect()
}

impl ProbeConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(GeomError::InvalidConfig(m));
        if self.samples == 0 {
            return bad(String::from("samples must be at least 1"));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return bad(format!("tol must be positive, got {}", self.tol));
        }
        if self.delta_schedule.is_empty() {
            return bad(String::from("delta schedule is empty"));
        }
        if self.delta_schedule.iter().any(|d| !(d.is_finite() && *d > 0.0 && *d <= 1.0)) {
            return bad(String::from("delta schedule entries must lie in (0, 1]"));
        }
        if self.delta_schedule.windows(2).any(|w| w[1] >= w[0]) {
            return bad(String::from("delta schedule must be strictly decreasing"));
        }
        if self.eigen_grid < 8 {
            return bad(String::from("eigen grid needs at least 8 points"));
        }
        if self.eigen_threshold.is_nan() || self.eigen_threshold <= 0.0 {
            return bad(String::from("eigen threshold must be positive"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        let c = ProbeConfig::default();
        c.validate().unwrap();
        assert_eq!(c.delta_schedule.len(), 20);
        assert_eq!(c.delta_schedule[0], 0.5);
        assert_eq!(*c.delta_schedule.last().unwrap(), 1.0 / 1048576.0);
    }

    #[test]
    fn schedule_must_decrease() {
        let c = ProbeConfig { delta_schedule: alloc::vec![0.5, 0.5], ..ProbeConfig::default() };
        assert!(c.validate().is_err());
    }

    #[test]
    fn status_round_trips() {
        for s in [Status::HoldsExact, Status::HoldsNumerical, Status::Fails, Status::Inconclusive] {
            assert_eq!(s.as_str().parse::<Status>().unwrap(), s);
        }
    }
}
