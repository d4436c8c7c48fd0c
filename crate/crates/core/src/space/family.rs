use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::vector::{Functional, Vector};
use crate::error::{GeomError, Result};
use crate::linalg;

/// The catalogue of norm constructions.
#[derive(Clone, Debug, PartialEq)]
pub enum NormFamily {
    /// `l_p` norm, `p` in `[1, inf]` (`f64::INFINITY` for the max norm).
    Lp { p: f64 },
    /// Ball given as the convex hull of a symmetric point list.
    PolytopeV { vertices: Vec<Vector> },
    /// Ball given as `{x : f(x) <= 1 for every listed f}`, a symmetric list.
    PolytopeH { facets: Vec<Functional> },
    /// `sqrt(|x|_1^2 + |x|_2^2)`.
    OneTwoMix,
    /// Planar lens: intersection of the discs of radius `radius` centred at
    /// `(offset, 0)` and `(-offset, 0)`.
    Lens { offset: f64, radius: f64 },
    /// Planar stadium: points within `radius` of the segment `[(-half_length, 0), (half_length, 0)]`.
    Stadium { half_length: f64, radius: f64 },
}

impl NormFamily {
    pub fn kind(&self) -> &'static str {
        match self {
            NormFamily::Lp { .. } => "lp",
            NormFamily::PolytopeV { .. } => "polytope_v",
            NormFamily::PolytopeH { .. } => "polytope_h",
            NormFamily::OneTwoMix => "one_two_mix",
            NormFamily::Lens { .. } => "lens",
            NormFamily::Stadium { .. } => "stadium",
        }
    }

    pub(crate) fn validate(&self, dim: usize) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(GeomError::InvalidFamily(msg));
        match self {
            NormFamily::Lp { p } => {
                if p.is_nan() || *p < 1.0 {
                    return bad(format!("p = {p} is outside [1, inf]"));
                }
            }
            NormFamily::PolytopeV { vertices } => {
                let pts: Vec<Vec<f64>> = vertices.iter().map(|v| v.coords().to_vec()).collect();
                check_symmetric_list(dim, &pts, "vertex")?;
            }
            NormFamily::PolytopeH { facets } => {
                if dim > 3 {
                    return Err(GeomError::Unsupported(format!(
                        "polytope_h in dimension {dim}; supply polytope_v above dimension 3"
                    )));
                }
                let pts: Vec<Vec<f64>> = facets.iter().map(|f| f.coeffs().to_vec()).collect();
                check_symmetric_list(dim, &pts, "facet")?;
            }
            NormFamily::OneTwoMix => {}
            NormFamily::Lens { offset, radius } => {
                if dim != 2 {
                    return bad(format!("lens requires dimension 2, got {dim}"));
                }
                if !(offset.is_finite() && radius.is_finite() && *offset > 0.0 && radius > offset) {
                    return bad(format!("lens needs R > d > 0, got d = {offset}, R = {radius}"));
                }
            }
            NormFamily::Stadium { half_length, radius } => {
                if dim != 2 {
                    return bad(format!("stadium requires dimension 2, got {dim}"));
                }
                if !(half_length.is_finite() && radius.is_finite() && *half_length > 0.0 && *radius > 0.0) {
                    return bad(format!("stadium needs c, r > 0, got c = {half_length}, r = {radius}"));
                }
            }
        }
        Ok(())
    }
}

fn check_symmetric_list(dim: usize, pts: &[Vec<f64>], what: &str) -> Result<()> {
    if pts.is_empty() {
        return Err(GeomError::InvalidFamily(format!("empty {what} list")));
    }
    for p in pts {
        if p.len() != dim {
            return Err(GeomError::DimensionMismatch { expected: dim, found: p.len() });
        }
    }
    let scale = pts.iter().map(|p| linalg::max_abs(p)).fold(0.0, f64::max);
    for p in pts {
        let neg = linalg::scale(p, -1.0);
        if !pts.iter().any(|q| linalg::close(q, &neg, 1e-9 * scale.max(1.0))) {
            return Err(GeomError::InvalidFamily(format!(
                "{what} list is not symmetric: missing the negative of {p:?}"
            )));
        }
    }
    if linalg::rank(pts, 1e-10) < dim {
        return Err(GeomError::InvalidFamily(format!("{what} list does not span the space")));
    }
    Ok(())
}

impl fmt::Display for NormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormFamily::Lp { p } if p.is_infinite() => write!(f, "l_inf"),
            NormFamily::Lp { p } => write!(f, "l_{p}"),
            NormFamily::PolytopeV { vertices } => write!(f, "polytope ({} vertices)", vertices.len()),
            NormFamily::PolytopeH { facets } => write!(f, "polytope ({} facets)", facets.len()),
            NormFamily::OneTwoMix => write!(f, "sqrt(|x|_1^2 + |x|_2^2)"),
            NormFamily::Lens { offset, radius } => write!(f, "lens (d = {offset}, R = {radius})"),
            NormFamily::Stadium { half_length, radius } => write!(f, "stadium (c = {half_length}, r = {radius})"),
        }
    }
}
