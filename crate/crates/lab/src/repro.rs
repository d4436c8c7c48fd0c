use banach_geom_core::faces::{distance_to_set, exposed_face, Representation};
use banach_geom_core::{Functional, Vector};
use serde_json::{json, Value};

use crate::catalogue::SpaceCatalogue;
use crate::error::{LabError, Result};
use crate::json;

pub const REPRO_TOL: f64 = 1e-12;

/// The square example: `x = (1, 1)`, `x_n = (eps, 1)`, `x* = (1/2, 1/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReproReport {
    pub epsilon: f64,
    pub norm_sum: f64,
    pub functional_value: f64,
    pub distance: f64,
    pub face: Vec<Vec<f64>>,
    pub asserted: bool,
}

impl ReproReport {
    pub fn to_json(&self) -> Value {
        json!({
            "epsilon": json::num(self.epsilon),
            "norm_sum": json::num(self.norm_sum),
            "functional_value": json::num(self.functional_value),
            "distance": json::num(self.distance),
            "face": self.face,
            "asserted": self.asserted,
        })
    }
}

/// With `perturb = None` the exact values `2, 1, 1` are asserted.
pub fn repro_example_5_5(catalogue: &SpaceCatalogue, perturb: Option<f64>) -> Result<ReproReport> {
    let space = catalogue.get("linf_2")?;
    let eps = perturb.unwrap_or(0.0);
    let x = Vector::new(vec![1.0, 1.0])?;
    let xn = Vector::new(vec![eps, 1.0])?;
    let f = Functional::new(vec![0.5, 0.5])?;
    let sum = Vector::new(vec![xn.coords()[0] + 1.0, 2.0])?;
    let face = exposed_face(space, &f)?;
    let vertices = match &face.representation {
        Representation::Polytope { vertices } => vertices.iter().map(|v| v.coords().to_vec()).collect(),
        _ => return Err(LabError::Assertion("face of (1/2, 1/2) is not a polytope".into())),
    };
    let report = ReproReport {
        epsilon: eps,
        norm_sum: space.norm(&sum)?,
        functional_value: f.apply(&x)?,
        distance: distance_to_set(space, &xn, &face)?.distance,
        face: vertices,
        asserted: perturb.is_none(),
    };
    if report.asserted {
        let checks = [
            ("norm_sum", report.norm_sum, 2.0),
            ("functional_value", report.functional_value, 1.0),
            ("distance", report.distance, 1.0),
        ];
        for (name, got, want) in checks {
            if (got - want).abs() > REPRO_TOL {
                return Err(LabError::Assertion(format!("{name} = {got}, expected {want}")));
            }
        }
        if report.face != [vec![1.0, 1.0]] {
            return Err(LabError::Assertion(format!("face = {:?}, expected [[1, 1]]", report.face)));
        }
    }
    Ok(report)
}
