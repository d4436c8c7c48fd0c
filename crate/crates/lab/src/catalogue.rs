use std::collections::BTreeMap;
use std::f64::consts::PI;

use banach_geom_core::{NormFamily, NormedSpace, Vector};
use serde_json::Value;

use crate::error::{format_err, LabError, Result};
use crate::json;

pub const BUILTIN_LABELS: [&str; 9] =
    ["l2_2", "l1_2", "linf_2", "hexagon", "lens_default", "stadium_default", "one_two_mix_2", "l2_3", "linf_3"];

/// Named spaces, iterated in label order.
#[derive(Clone, Debug)]
pub struct SpaceCatalogue {
    spaces: BTreeMap<String, NormedSpace>,
}

fn builtin(label: &str) -> Option<NormedSpace> {
    let s = match label {
        "l2_2" => NormedSpace::lp(2, 2.0),
        "l1_2" => NormedSpace::lp(2, 1.0),
        "linf_2" => NormedSpace::lp(2, f64::INFINITY),
        "hexagon" => {
            let vertices = (0..6)
                .map(|k| {
                    let t = PI / 3.0 * k as f64;
                    Vector::new(vec![t.cos(), t.sin()]).unwrap()
                })
                .collect();
            NormedSpace::new(2, NormFamily::PolytopeV { vertices })
        }
        "lens_default" => NormedSpace::new(2, NormFamily::Lens { offset: 0.5, radius: 1.0 }),
        "stadium_default" => NormedSpace::new(2, NormFamily::Stadium { half_length: 0.5, radius: 1.0 }),
        "one_two_mix_2" => NormedSpace::new(2, NormFamily::OneTwoMix),
        "l2_3" => NormedSpace::lp(3, 2.0),
        "linf_3" => NormedSpace::lp(3, f64::INFINITY),
        _ => return None,
    };
    Some(s.expect("built-in spaces are valid"))
}

impl SpaceCatalogue {
    pub fn builtins() -> Self {
        let spaces = BUILTIN_LABELS.iter().map(|l| (l.to_string(), builtin(l).unwrap())).collect();
        Self { spaces }
    }

    pub fn empty() -> Self {
        Self { spaces: BTreeMap::new() }
    }

    /// Adds or replaces a space.
    pub fn insert(&mut self, label: impl Into<String>, space: NormedSpace) {
        self.spaces.insert(label.into(), space);
    }

    /// Adds every entry of a JSON object mapping labels to space descriptors.
    pub fn extend_from_json(&mut self, doc: &Value) -> Result<()> {
        let Some(map) = doc.as_object() else {
            return format_err("a catalogue document is an object of label: descriptor");
        };
        for (label, desc) in map {
            self.insert(label.clone(), json::read_space(desc)?);
        }
        Ok(())
    }

    pub fn get(&self, label: &str) -> Result<&NormedSpace> {
        self.spaces.get(label).ok_or_else(|| LabError::UnknownSpace(label.to_string()))
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.spaces.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &NormedSpace)> {
        self.spaces.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }
}

impl Default for SpaceCatalogue {
    fn default() -> Self {
        Self::builtins()
    }
}
