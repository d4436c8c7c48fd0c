//! Vertex enumeration for the symmetric polytopes of the catalogue.
//!
//! Both representations of a polyhedral ball are kept: the vertices of the
//! ball and the vertices of the dual ball (the facet normals, scaled so that
//! the facet reads `a . x = 1`). Each is obtained from the other as the
//! basic feasible solutions of `{a : a . v <= 1}`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::linalg;

/// Above this many candidate bases enumeration is refused.
const MAX_BASES: u128 = 4_000_000;

/// Vertices of `{x : a_k . x <= b_k}`, deduplicated and sorted in descending
/// lexicographic order.
pub fn enumerate_vertices(dim: usize, constraints: &[(Vec<f64>, f64)], tol: f64) -> Result<Vec<Vec<f64>>> {
    if linalg::binomial(constraints.len(), dim) > MAX_BASES {
        return Err(GeomError::Unsupported(format!(
            "vertex enumeration over {} constraints in dimension {dim}",
            constraints.len()
        )));
    }
    let scale = constraints.iter().map(|(a, b)| linalg::max_abs(a).max(b.abs())).fold(1.0, f64::max);
    let mut found: Vec<Vec<f64>> = Vec::new();
    let mut m = alloc::vec![0.0; dim * dim];
    let mut rhs = alloc::vec![0.0; dim];
    linalg::for_each_combination(constraints.len(), dim, |idx| {
        for (r, &k) in idx.iter().enumerate() {
            m[r * dim..(r + 1) * dim].copy_from_slice(&constraints[k].0);
            rhs[r] = constraints[k].1;
        }
        if let Some(x) = linalg::solve(&m, &rhs, 1e-12) {
            let feasible =
                constraints.iter().all(|(a, b)| linalg::dot(a, &x) <= b + tol * scale.max(linalg::max_abs(&x)));
            if feasible {
                found.push(x);
            }
        }
        true
    });
    let mut vs = linalg::dedupe(found, 1e-9 * scale);
    sort_descending(&mut vs);
    Ok(vs)
}

pub fn sort_descending(points: &mut [Vec<f64>]) {
    points.sort_by(|a, b| linalg::lex_cmp(b, a));
}

/// Both vertex lists of a symmetric polytope ball.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyhedron {
    ball: Vec<Vec<f64>>,
    dual: Vec<Vec<f64>>,
}

impl Polyhedron {
    pub fn from_ball_points(dim: usize, points: &[Vec<f64>]) -> Result<Self> {
        let tol = 1e-10;
        let dual = enumerate_vertices(dim, &unit_constraints(points), tol)?;
        let ball = enumerate_vertices(dim, &unit_constraints(&dual), tol)?;
        Self::checked(ball, dual)
    }

    pub fn from_facet_normals(dim: usize, normals: &[Vec<f64>]) -> Result<Self> {
        let tol = 1e-10;
        let ball = enumerate_vertices(dim, &unit_constraints(normals), tol)?;
        let dual = enumerate_vertices(dim, &unit_constraints(&ball), tol)?;
        Self::checked(ball, dual)
    }

    /// Trusted vertex lists (cube / cross-polytope).
    pub(crate) fn from_parts(mut ball: Vec<Vec<f64>>, mut dual: Vec<Vec<f64>>) -> Self {
        sort_descending(&mut ball);
        sort_descending(&mut dual);
        Self { ball, dual }
    }

    fn checked(ball: Vec<Vec<f64>>, dual: Vec<Vec<f64>>) -> Result<Self> {
        if ball.is_empty() || dual.is_empty() {
            return Err(GeomError::InvalidFamily("polytope ball is unbounded or degenerate".into()));
        }
        Ok(Self { ball, dual })
    }

    /// Vertices of the unit ball, descending lexicographic order.
    pub fn ball_vertices(&self) -> &[Vec<f64>] {
        &self.ball
    }

    /// Vertices of the dual unit ball (facet normals), descending lexicographic order.
    pub fn dual_vertices(&self) -> &[Vec<f64>] {
        &self.dual
    }

    pub fn cube(dim: usize) -> Self {
        let ball = (0..1usize << dim)
            .map(|mask| (0..dim).map(|i| if mask >> i & 1 == 1 { -1.0 } else { 1.0 }).collect())
            .collect();
        Self::from_parts(ball, cross(dim))
    }

    pub fn cross_polytope(dim: usize) -> Self {
        let c = Self::cube(dim);
        Self::from_parts(c.dual, c.ball)
    }
}

fn cross(dim: usize) -> Vec<Vec<f64>> {
    let mut v = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        for s in [1.0, -1.0] {
            let mut e = alloc::vec![0.0; dim];
            e[i] = s;
            v.push(e);
        }
    }
    v
}

fn unit_constraints(normals: &[Vec<f64>]) -> Vec<(Vec<f64>, f64)> {
    normals.iter().map(|a| (a.clone(), 1.0)).collect()
}
