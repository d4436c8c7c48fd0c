//! Normed spaces: norm and dual-norm oracles, support functionals, exposed
//! faces and sphere sampling.

mod bodies;
mod family;
mod polyhedron;
mod vector;

pub use bodies::{conjugate, lp_norm, one_two_dual, one_two_norm, Lens, Stadium};
pub use family::NormFamily;
pub use polyhedron::{enumerate_vertices, sort_descending, Polyhedron};
pub use vector::{Functional, Vector};

use alloc::format;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg;
use crate::rng;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Cube and cross-polytope vertex tables are built up to this dimension.
const MAX_TABLE_DIM: usize = 12;
/// Closed-form subdifferentials with more than `2^MAX_FREE_SIGNS` vertices are refused.
const MAX_FREE_SIGNS: usize = 16;

/// A finite-dimensional real normed space. Immutable once built.
#[derive(Clone, Debug)]
pub struct NormedSpace {
    dim: usize,
    family: NormFamily,
    tol: f64,
    poly: Option<Polyhedron>,
}

impl PartialEq for NormedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.family == other.family && self.tol == other.tol
    }
}

impl NormedSpace {
    pub fn new(dim: usize, family: NormFamily) -> Result<Self> {
        if dim == 0 {
            return Err(GeomError::ZeroDimension);
        }
        family.validate(dim)?;
        let poly = match &family {
            NormFamily::PolytopeV { vertices } => {
                let pts: Vec<Vec<f64>> = vertices.iter().map(|v| v.coords().to_vec()).collect();
                Some(Polyhedron::from_ball_points(dim, &pts)?)
            }
            NormFamily::PolytopeH { facets } => {
                let pts: Vec<Vec<f64>> = facets.iter().map(|f| f.coeffs().to_vec()).collect();
                Some(Polyhedron::from_facet_normals(dim, &pts)?)
            }
            NormFamily::Lp { p } if *p == 1.0 && dim <= MAX_TABLE_DIM => Some(Polyhedron::cross_polytope(dim)),
            NormFamily::Lp { p } if p.is_infinite() && dim <= MAX_TABLE_DIM => Some(Polyhedron::cube(dim)),
            _ => None,
        };
        Ok(Self { dim, family, tol: DEFAULT_TOL, poly })
    }

    pub fn lp(dim: usize, p: f64) -> Result<Self> {
        Self::new(dim, NormFamily::Lp { p })
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(GeomError::InvalidConfig(format!("tolerance must be positive, got {tol}")));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family(&self) -> &NormFamily {
        &self.family
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Vertex data when the ball is a polytope (and small enough to tabulate).
    pub fn polyhedron(&self) -> Option<&Polyhedron> {
        self.poly.as_ref()
    }

    pub fn is_polyhedral(&self) -> bool {
        self.poly.is_some() || matches!(self.family, NormFamily::Lp { p } if p == 1.0 || p.is_infinite())
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.dim {
            Ok(())
        } else {
            Err(GeomError::DimensionMismatch { expected: self.dim, found })
        }
    }

    pub fn norm(&self, x: &Vector) -> Result<f64> {
        self.check_dim(x.dim())?;
        Ok(self.norm_raw(x.coords()))
    }

    /// Norm of a coordinate slice of the right length.
    pub fn norm_raw(&self, x: &[f64]) -> f64 {
        match &self.family {
            NormFamily::Lp { p } => lp_norm(x, *p),
            NormFamily::OneTwoMix => one_two_norm(x),
            NormFamily::Lens { offset, radius } => Lens { offset: *offset, radius: *radius }.gauge(x),
            NormFamily::Stadium { half_length, radius } => {
                Stadium { half_length: *half_length, radius: *radius }.gauge(x)
            }
            NormFamily::PolytopeV { .. } | NormFamily::PolytopeH { .. } => {
                let poly = self.poly.as_ref().expect("polytope families carry vertex data");
                poly.dual_vertices().iter().map(|a| linalg::dot(a, x)).fold(0.0, f64::max)
            }
        }
    }

    pub fn dual_norm(&self, f: &Functional) -> Result<f64> {
        self.check_dim(f.dim())?;
        Ok(self.dual_norm_raw(f.coeffs()))
    }

    pub fn dual_norm_raw(&self, f: &[f64]) -> f64 {
        match &self.family {
            NormFamily::Lp { p } => lp_norm(f, conjugate(*p)),
            NormFamily::OneTwoMix => one_two_dual(f),
            NormFamily::Lens { offset, radius } => Lens { offset: *offset, radius: *radius }.support(f),
            NormFamily::Stadium { half_length, radius } => {
                Stadium { half_length: *half_length, radius: *radius }.support(f)
            }
            NormFamily::PolytopeV { .. } | NormFamily::PolytopeH { .. } => {
                let poly = self.poly.as_ref().expect("polytope families carry vertex data");
                poly.ball_vertices().iter().map(|v| linalg::dot(f, v)).fold(0.0, f64::max)
            }
        }
    }

    /// A norming functional of `x`: the lexicographically smallest extreme
    /// point of the subdifferential.
    pub fn subgradient(&self, x: &Vector) -> Result<Functional> {
        self.check_dim(x.dim())?;
        if x.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        let ext = self.support_extremes_raw(x.coords())?;
        Ok(Functional::from_raw(ext.into_iter().next().expect("subdifferential is nonempty")))
    }

    /// Extreme points of `J(x / |x|)`, sorted ascending lexicographically.
    pub fn support_extremes_raw(&self, x: &[f64]) -> Result<Vec<Vec<f64>>> {
        let n = self.norm_raw(x);
        if n == 0.0 {
            return Err(GeomError::ZeroVector);
        }
        let u = linalg::scale(x, 1.0 / n);
        let tol = self.tol;
        let mut out = match &self.family {
            NormFamily::Lp { p } if *p == 1.0 => free_sign_vertices(&u, tol, |c| c.abs() > tol)?,
            NormFamily::Lp { p } if p.is_infinite() => signed_axes(&u, 1.0 - tol),
            NormFamily::Lp { p } => alloc::vec![bodies::lp_gradient(&u, *p)],
            NormFamily::OneTwoMix => {
                let zeros = u.iter().filter(|c| c.abs() <= tol * linalg::max_abs(&u)).count();
                if zeros > MAX_FREE_SIGNS {
                    return Err(GeomError::Unsupported(format!("subdifferential with 2^{zeros} vertices")));
                }
                bodies::one_two_support_extremes(&u, tol)
            }
            NormFamily::Lens { offset, radius } => Lens { offset: *offset, radius: *radius }.support_extremes(&u, tol),
            NormFamily::Stadium { half_length, radius } => {
                Stadium { half_length: *half_length, radius: *radius }.support_extremes(&u)
            }
            NormFamily::PolytopeV { .. } | NormFamily::PolytopeH { .. } => {
                let poly = self.poly.as_ref().expect("polytope families carry vertex data");
                let vals: Vec<f64> = poly.dual_vertices().iter().map(|a| linalg::dot(a, &u)).collect();
                let top = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                poly.dual_vertices()
                    .iter()
                    .zip(&vals)
                    .filter(|(_, v)| **v >= top - tol)
                    .map(|(a, _)| a.clone())
                    .collect()
            }
        };
        out.sort_by(|a, b| linalg::lex_cmp(a, b));
        Ok(linalg::dedupe(out, tol))
    }

    /// Vertices of the exposed face of `f / |f|*`, sorted descending lexicographically.
    pub fn face_vertices_raw(&self, f: &[f64]) -> Result<Vec<Vec<f64>>> {
        let h = self.dual_norm_raw(f);
        if h == 0.0 {
            return Err(GeomError::ZeroVector);
        }
        let g = linalg::scale(f, 1.0 / h);
        let tol = self.tol;
        let mut out = match &self.family {
            NormFamily::Lp { p } if *p == 1.0 => signed_axes(&g, 1.0 - tol),
            NormFamily::Lp { p } if p.is_infinite() => free_sign_vertices(&g, tol, |c| c.abs() > tol)?,
            NormFamily::Lp { p } => alloc::vec![bodies::lp_support_point(&g, *p)],
            NormFamily::OneTwoMix => alloc::vec![bodies::one_two_support_point(&g)],
            NormFamily::Lens { offset, radius } => {
                alloc::vec![Lens { offset: *offset, radius: *radius }.support_point(&g)]
            }
            NormFamily::Stadium { half_length, radius } => {
                Stadium { half_length: *half_length, radius: *radius }.face_vertices(&g, tol)
            }
            NormFamily::PolytopeV { .. } | NormFamily::PolytopeH { .. } => {
                let poly = self.poly.as_ref().expect("polytope families carry vertex data");
                poly.ball_vertices().iter().filter(|v| linalg::dot(&g, v) >= 1.0 - tol).cloned().collect()
            }
        };
        sort_descending(&mut out);
        Ok(linalg::dedupe(out, tol))
    }

    /// Vertices of the unit ball, when it is a tabulated polytope.
    pub fn ball_vertices(&self) -> Option<&[Vec<f64>]> {
        self.poly.as_ref().map(|p| p.ball_vertices())
    }

    /// Vertices of the dual unit ball, when the ball is a tabulated polytope.
    pub fn dual_vertices(&self) -> Option<&[Vec<f64>]> {
        self.poly.as_ref().map(|p| p.dual_vertices())
    }

    pub fn normalize(&self, x: &Vector) -> Result<Vector> {
        let n = self.norm(x)?;
        if n == 0.0 {
            return Err(GeomError::ZeroVector);
        }
        Ok(x.scaled(1.0 / n))
    }

    pub fn normalize_functional(&self, f: &Functional) -> Result<Functional> {
        let n = self.dual_norm(f)?;
        if n == 0.0 {
            return Err(GeomError::ZeroVector);
        }
        Ok(f.scaled(1.0 / n))
    }

    /// Accepts `x` as a point of the unit sphere within tolerance.
    pub fn require_on_sphere(&self, x: &Vector) -> Result<()> {
        let n = self.norm(x)?;
        if (n - 1.0).abs() > self.tol {
            return Err(GeomError::NotOnSphere { norm: n });
        }
        Ok(())
    }

    pub fn require_on_dual_sphere(&self, f: &Functional) -> Result<()> {
        let n = self.dual_norm(f)?;
        if (n - 1.0).abs() > self.tol {
            return Err(GeomError::NotOnDualSphere { norm: n });
        }
        Ok(())
    }

    /// `count` points of the unit sphere: Gaussian directions, radially
    /// normalized. Point `i` depends only on `(seed, i)`.
    pub fn sphere_sample(&self, count: usize, seed: u64) -> Vec<Vector> {
        (0..count)
            .map(|i| {
                let mut r = rng::stream(seed, "sphere", i as u64);
                Vector::from_raw(self.gaussian_direction(&mut r, |v| self.norm_raw(v)))
            })
            .collect()
    }

    /// Like [`sphere_sample`](Self::sphere_sample) on the dual sphere.
    pub fn dual_sphere_sample(&self, count: usize, seed: u64) -> Vec<Functional> {
        (0..count)
            .map(|i| {
                let mut r = rng::stream(seed, "dual-sphere", i as u64);
                Functional::from_raw(self.gaussian_direction(&mut r, |v| self.dual_norm_raw(v)))
            })
            .collect()
    }

    fn gaussian_direction(&self, r: &mut impl rand::Rng, norm: impl Fn(&[f64]) -> f64) -> Vec<f64> {
        loop {
            let g = rng::gaussian_vec(r, self.dim);
            let n = norm(&g);
            if n > 1e-300 {
                return linalg::scale(&g, 1.0 / n);
            }
        }
    }

    /// Rotundity decided from the family alone.
    pub fn rotund_by_family(&self) -> bool {
        if self.dim == 1 {
            return true;
        }
        match self.family {
            NormFamily::Lp { p } => p > 1.0 && p.is_finite(),
            NormFamily::OneTwoMix | NormFamily::Lens { .. } => true,
            NormFamily::Stadium { .. } | NormFamily::PolytopeV { .. } | NormFamily::PolytopeH { .. } => false,
        }
    }

    /// Smoothness decided from the family alone.
    pub fn smooth_by_family(&self) -> bool {
        if self.dim == 1 {
            return true;
        }
        match self.family {
            NormFamily::Lp { p } => p > 1.0 && p.is_finite(),
            NormFamily::Stadium { .. } => true,
            NormFamily::OneTwoMix
            | NormFamily::Lens { .. }
            | NormFamily::PolytopeV { .. }
            | NormFamily::PolytopeH { .. } => false,
        }
    }

    /// Points where non-smoothness or flatness lives: ball vertices, Lens
    /// corners, OneTwoMix axis points, Stadium flat endpoints.
    pub fn distinguished_points(&self) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = match &self.family {
            _ if self.poly.is_some() => self.poly.as_ref().unwrap().ball_vertices().to_vec(),
            NormFamily::Lens { offset, radius } => {
                Lens { offset: *offset, radius: *radius }.corners().into_iter().collect()
            }
            NormFamily::Stadium { half_length, radius } => {
                let (c, r) = (*half_length, *radius);
                alloc::vec![alloc::vec![c, r], alloc::vec![-c, r], alloc::vec![c, -r], alloc::vec![-c, -r]]
            }
            _ => {
                let mut v = Vec::new();
                for i in 0..self.dim {
                    for s in [1.0, -1.0] {
                        let mut e = alloc::vec![0.0; self.dim];
                        e[i] = s;
                        v.push(linalg::scale(&e, 1.0 / self.norm_raw(&e)));
                    }
                }
                v
            }
        };
        sort_descending(&mut out);
        out
    }

    /// Functionals exposing the distinguished faces: dual vertices for
    /// polytopes, flat normals for the stadium, and the norming functionals
    /// of the distinguished points otherwise.
    pub fn distinguished_functionals(&self) -> Vec<Vec<f64>> {
        if let Some(poly) = &self.poly {
            return poly.dual_vertices().to_vec();
        }
        let mut out = Vec::new();
        for x in self.distinguished_points() {
            if let Ok(ext) = self.support_extremes_raw(&x) {
                out.extend(ext);
            }
        }
        let mut out = linalg::dedupe(out, self.tol);
        sort_descending(&mut out);
        out
    }
}

/// `s_i e_i` for every coordinate with `|u_i| >= level`.
fn signed_axes(u: &[f64], level: f64) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    for (i, c) in u.iter().enumerate() {
        if c.abs() >= level {
            let mut e = alloc::vec![0.0; u.len()];
            e[i] = c.signum();
            out.push(e);
        }
    }
    out
}

/// Sign vectors agreeing with `u` where `fixed` holds and free elsewhere.
fn free_sign_vertices(u: &[f64], _tol: f64, fixed: impl Fn(f64) -> bool) -> Result<Vec<Vec<f64>>> {
    let free: Vec<usize> = (0..u.len()).filter(|&i| !fixed(u[i])).collect();
    if free.len() > MAX_FREE_SIGNS {
        return Err(GeomError::Unsupported(format!("face with 2^{} vertices", free.len())));
    }
    let base: Vec<f64> = u.iter().map(|c| if fixed(*c) { c.signum() } else { 0.0 }).collect();
    Ok((0..1usize << free.len())
        .map(|mask| {
            let mut v = base.clone();
            for (bit, &i) in free.iter().enumerate() {
                v[i] = if mask >> bit & 1 == 1 { -1.0 } else { 1.0 };
            }
            v
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn linf_faces_and_duality() {
        let s = NormedSpace::lp(2, f64::INFINITY).unwrap();
        assert_eq!(s.support_extremes_raw(&[1.0, 1.0]).unwrap(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(s.face_vertices_raw(&[1.0, 0.0]).unwrap(), vec![vec![1.0, 1.0], vec![1.0, -1.0]]);
        assert_eq!(s.face_vertices_raw(&[0.5, 0.5]).unwrap(), vec![vec![1.0, 1.0]]);
        assert_eq!(s.ball_vertices().unwrap()[0], vec![1.0, 1.0]);
        assert_eq!(s.dual_vertices().unwrap()[0], vec![1.0, 0.0]);
    }

    #[test]
    fn l1_closed_forms() {
        let s = NormedSpace::lp(2, 1.0).unwrap();
        assert_eq!(s.support_extremes_raw(&[1.0, 0.0]).unwrap(), vec![vec![1.0, -1.0], vec![1.0, 1.0]]);
        assert_eq!(s.face_vertices_raw(&[1.0, 1.0]).unwrap(), vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
    }

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(NormedSpace::lp(0, 2.0).unwrap_err(), GeomError::ZeroDimension);
    }

    #[test]
    fn dual_sphere_samples_have_unit_dual_norm() {
        let s = NormedSpace::new(2, NormFamily::Lens { offset: 0.5, radius: 1.0 }).unwrap();
        for f in s.dual_sphere_sample(50, 3) {
            assert!((s.dual_norm(&f).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}
