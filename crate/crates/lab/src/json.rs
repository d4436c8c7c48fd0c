//! JSON documents: space descriptors, operators, point sets and reports.
//!
//! Keys come out sorted (serde_json's default map is ordered), floats that
//! are not finite are written as the strings `"inf"`, `"-inf"` and `"nan"`.

use banach_geom_core::daugavet::{AntiDaugavetReport, OperatorMatrix, SpectrumReport};
use banach_geom_core::faces::{FaceSet, FunctionalSet, HausdorffReport, RegionSample, Representation};
use banach_geom_core::farthest::{DensityReport, FarthestReport, PointSet};
use banach_geom_core::properties::{DsetReport, HsReport, ProbeReport, Profile};
use banach_geom_core::{Certificate, Functional, NormFamily, NormedSpace, Status, Vector, Verdict};
use serde_json::{json, Map, Value};

use crate::error::{format_err, LabError, Result};

/// Serializes with sorted keys and a trailing newline.
pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x.is_nan() {
        json!("nan")
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

pub fn read_num(v: &Value) -> Result<f64> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| LabError::Format(format!("bad number {n}"))),
        Value::String(s) => match s.as_str() {
            "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
            "-inf" | "-infinity" => Ok(f64::NEG_INFINITY),
            "nan" => Ok(f64::NAN),
            other => other.parse().map_err(|_| LabError::Format(format!("bad number {other:?}"))),
        },
        other => format_err(format!("expected a number, got {other}")),
    }
}

fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().copied().map(num).collect())
}

pub fn read_nums(v: &Value) -> Result<Vec<f64>> {
    match v {
        Value::Array(a) => a.iter().map(read_num).collect(),
        other => format_err(format!("expected an array of numbers, got {other}")),
    }
}

fn read_rows(v: &Value) -> Result<Vec<Vec<f64>>> {
    match v {
        Value::Array(a) => a.iter().map(read_nums).collect(),
        other => format_err(format!("expected an array of arrays, got {other}")),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| LabError::Format(format!("missing field `{key}`")))
}

pub fn vector(x: &Vector) -> Value {
    nums(x.coords())
}

pub fn functional(f: &Functional) -> Value {
    nums(f.coeffs())
}

fn vectors(xs: &[Vector]) -> Value {
    Value::Array(xs.iter().map(vector).collect())
}

fn functionals(fs: &[Functional]) -> Value {
    Value::Array(fs.iter().map(functional).collect())
}

pub fn read_vector(v: &Value) -> Result<Vector> {
    Ok(Vector::new(read_nums(v)?)?)
}

pub fn read_functional(v: &Value) -> Result<Functional> {
    Ok(Functional::new(read_nums(v)?)?)
}

fn read_vectors(v: &Value) -> Result<Vec<Vector>> {
    read_rows(v)?.into_iter().map(|r| Ok(Vector::new(r)?)).collect()
}

pub fn status(s: Status) -> Value {
    json!(s.as_str())
}

// Spaces.

pub fn family(f: &NormFamily) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(f.kind()));
    match f {
        NormFamily::Lp { p } => {
            m.insert("p".into(), num(*p));
        }
        NormFamily::PolytopeV { vertices } => {
            m.insert("vertices".into(), vectors(vertices));
        }
        NormFamily::PolytopeH { facets } => {
            m.insert("facets".into(), functionals(facets));
        }
        NormFamily::OneTwoMix => {}
        NormFamily::Lens { offset, radius } => {
            m.insert("d".into(), num(*offset));
            m.insert("R".into(), num(*radius));
        }
        NormFamily::Stadium { half_length, radius } => {
            m.insert("c".into(), num(*half_length));
            m.insert("r".into(), num(*radius));
        }
    }
    Value::Object(m)
}

pub fn read_family(v: &Value) -> Result<NormFamily> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| LabError::Format("`kind` must be a string".into()))?;
    Ok(match kind {
        "lp" => NormFamily::Lp { p: read_num(field(v, "p")?)? },
        "polytope_v" => NormFamily::PolytopeV { vertices: read_vectors(field(v, "vertices")?)? },
        "polytope_h" => NormFamily::PolytopeH {
            facets: read_rows(field(v, "facets")?)?
                .into_iter()
                .map(|r| Ok(Functional::new(r)?))
                .collect::<Result<_>>()?,
        },
        "one_two_mix" => NormFamily::OneTwoMix,
        "lens" => NormFamily::Lens { offset: read_num(field(v, "d")?)?, radius: read_num(field(v, "R")?)? },
        "stadium" => NormFamily::Stadium { half_length: read_num(field(v, "c")?)?, radius: read_num(field(v, "r")?)? },
        other => return format_err(format!("unknown family kind {other:?}")),
    })
}

/// `{"dim": n, "family": {...}}`.
pub fn space(s: &NormedSpace) -> Value {
    json!({ "dim": s.dim(), "family": family(s.family()) })
}

/// Accepts an optional `"tol"` next to `dim` and `family`.
pub fn read_space(v: &Value) -> Result<NormedSpace> {
    let dim = field(v, "dim")?.as_u64().ok_or_else(|| LabError::Format("`dim` must be a positive integer".into()))?;
    let s = NormedSpace::new(dim as usize, read_family(field(v, "family")?)?)?;
    match v.get("tol") {
        Some(t) => Ok(s.with_tol(read_num(t)?)?),
        None => Ok(s),
    }
}

pub fn operator(t: &OperatorMatrix) -> Value {
    Value::Array(t.rows().iter().map(|r| nums(r)).collect())
}

/// Row-major nested arrays, `[[a, b], [c, d]]`.
pub fn read_operator(v: &Value) -> Result<OperatorMatrix> {
    Ok(OperatorMatrix::new(read_rows(v)?)?)
}

pub fn point_set(k: &PointSet) -> Value {
    vectors(k.points())
}

pub fn read_point_set(v: &Value, label: &str) -> Result<PointSet> {
    Ok(PointSet::from_coords(read_rows(v)?, label)?)
}

// Sets.

pub fn face_set(s: &FaceSet) -> Value {
    let mut m = Map::new();
    let (tag, points) = match &s.representation {
        Representation::Polytope { vertices } => ("polytope", vectors(vertices)),
        Representation::Union { pieces } => {
            m.insert("pieces".into(), Value::Array(pieces.iter().map(|p| vectors(p)).collect()));
            let all: Vec<Vector> = pieces.iter().flatten().cloned().collect();
            ("union", vectors(&all))
        }
        Representation::Cloud { points, .. } => ("cloud", vectors(points)),
    };
    m.insert("representation".into(), json!(tag));
    m.insert("points".into(), points);
    m.insert("mesh".into(), num(s.mesh()));
    m.insert("exposing".into(), s.exposing.as_ref().map_or(Value::Null, functional));
    Value::Object(m)
}

pub fn functional_set(s: &FunctionalSet) -> Value {
    json!({
        "anchor": vector(&s.anchor),
        "extremes": functionals(&s.extremes),
        "singleton": s.is_singleton(),
    })
}

pub fn region(r: &RegionSample) -> Value {
    let mut m = Map::new();
    if r.is_exact() {
        m.insert("representation".into(), json!("union"));
        m.insert("pieces".into(), Value::Array(r.pieces.iter().map(|p| vectors(p)).collect()));
    } else {
        m.insert("representation".into(), json!("cloud"));
    }
    m.insert("points".into(), vectors(&r.points));
    m.insert("mesh".into(), num(r.mesh));
    m.insert("defining".into(), json!(r.defining));
    Value::Object(m)
}

pub fn hausdorff(h: &HausdorffReport) -> Value {
    json!({
        "value": num(h.value),
        "forward": num(h.forward),
        "backward": num(h.backward),
        "error_bound": num(h.error_bound),
    })
}

// Verdicts and certificates.

pub fn certificate(c: &Certificate) -> Value {
    let mut v = match c {
        Certificate::FaceDiameter { functional: f, a, b, diameter } => json!({
            "functional": functional(f), "a": vector(a), "b": vector(b), "diameter": num(*diameter),
        }),
        Certificate::NonSmooth { point, f, g, distance } => json!({
            "point": vector(point), "f": functional(f), "g": functional(g), "distance": num(*distance),
        }),
        Certificate::Tangency { x, y, f, value } => json!({
            "x": vector(x), "y": vector(y), "f": functional(f), "value": num(*value),
        }),
        Certificate::FaceCoincidence { x, f, g, distance } => json!({
            "x": vector(x), "f": functional(f), "g": functional(g), "distance": num(*distance),
        }),
        Certificate::SliceProfile { functional: f, deltas, distances } => json!({
            "functional": functional(f), "deltas": nums(deltas), "distances": nums(distances),
        }),
        Certificate::RegionProfile { x, deltas, distances } => json!({
            "x": vector(x), "deltas": nums(deltas), "distances": nums(distances),
        }),
        Certificate::AntiDaugavet { operator: t, op_norm, daugavet_residual, eigen_residual, witness } => json!({
            "operator": operator(t),
            "op_norm": num(*op_norm),
            "daugavet_residual": num(*daugavet_residual),
            "eigen_residual": num(*eigen_residual),
            "witness": vector(witness),
        }),
        Certificate::HullMismatch { hull, far } => json!({ "hull": vectors(hull), "far": vectors(far) }),
    };
    v["kind"] = json!(c.kind());
    v
}

pub fn read_certificate(v: &Value) -> Result<Certificate> {
    let kind = field(v, "kind")?.as_str().ok_or_else(|| LabError::Format("`kind` must be a string".into()))?;
    let vec = |k: &str| read_vector(field(v, k)?);
    let fun = |k: &str| read_functional(field(v, k)?);
    let x = |k: &str| read_num(field(v, k)?);
    let xs = |k: &str| read_nums(field(v, k)?);
    Ok(match kind {
        "face-diameter" => Certificate::FaceDiameter {
            functional: fun("functional")?,
            a: vec("a")?,
            b: vec("b")?,
            diameter: x("diameter")?,
        },
        "non-smooth" => {
            Certificate::NonSmooth { point: vec("point")?, f: fun("f")?, g: fun("g")?, distance: x("distance")? }
        }
        "tangency" => Certificate::Tangency { x: vec("x")?, y: vec("y")?, f: fun("f")?, value: x("value")? },
        "face-coincidence" => {
            Certificate::FaceCoincidence { x: vec("x")?, f: fun("f")?, g: fun("g")?, distance: x("distance")? }
        }
        "slice-profile" => Certificate::SliceProfile {
            functional: fun("functional")?,
            deltas: xs("deltas")?,
            distances: xs("distances")?,
        },
        "region-profile" => {
            Certificate::RegionProfile { x: vec("x")?, deltas: xs("deltas")?, distances: xs("distances")? }
        }
        "anti-daugavet" => Certificate::AntiDaugavet {
            operator: read_operator(field(v, "operator")?)?,
            op_norm: x("op_norm")?,
            daugavet_residual: x("daugavet_residual")?,
            eigen_residual: x("eigen_residual")?,
            witness: vec("witness")?,
        },
        "hull-mismatch" => {
            Certificate::HullMismatch { hull: read_vectors(field(v, "hull")?)?, far: read_vectors(field(v, "far")?)? }
        }
        other => return format_err(format!("unknown certificate kind {other:?}")),
    })
}

/// Exactly `property`, `status`, `certificate` and `stats`.
pub fn verdict(v: &Verdict) -> Value {
    json!({
        "property": v.property,
        "status": status(v.status),
        "certificate": v.certificate.as_ref().map_or(Value::Null, certificate),
        "stats": {
            "samples": v.stats.samples,
            "seed": v.stats.seed,
            "worst_margin": num(v.stats.worst_margin),
        },
    })
}

// Reports.

pub fn profile(p: &Profile) -> Value {
    json!({
        "deltas": nums(&p.deltas),
        "distances": nums(&p.distances),
        "error_bounds": nums(&p.error_bounds),
        "at_zero": num(p.at_zero),
        "monotone": p.is_monotone(),
        "rate_exponent": num(p.rate_exponent()),
        "rate_constant": num(p.rate_constant()),
    })
}

pub fn hs_report(r: &HsReport) -> Value {
    json!({
        "verdict": verdict(&r.verdict),
        "profiles": r.profiles.iter().map(|(f, p)| json!({ "functional": functional(f), "profile": profile(p) })).collect::<Vec<_>>(),
        "worst_rate_constant": num(r.worst_rate_constant),
        "worst_rate_exponent": num(r.worst_rate_exponent),
    })
}

pub fn dset_report(r: &DsetReport) -> Value {
    json!({
        "verdict": verdict(&r.verdict),
        "profile": profile(&r.profile),
        "face_coincidence": verdict(&r.face_coincidence),
        "hlur": status(r.hlur),
        "consistent": r.consistent,
    })
}

pub fn probe_report(r: &ProbeReport) -> Value {
    json!({
        "anchor": vector(&r.anchor),
        "generator": r.generator.map_or(Value::Null, |g| json!(g.as_str())),
        "functionals": functionals(&r.functionals),
        "steps": r.steps.iter().map(|s| json!({
            "point": vector(&s.point),
            "sum_norm": num(s.sum_norm),
            "face_distances": nums(&s.face_distances),
            "functional_values": nums(&s.functional_values),
            "distance_to_anchor": num(s.distance_to_anchor),
        })).collect::<Vec<_>>(),
    })
}

pub fn spectrum(r: &SpectrumReport) -> Value {
    json!({
        "op_norm": num(r.op_norm),
        "op_norm_exact": r.op_norm_exact,
        "daugavet_residual": num(r.daugavet_residual),
        "eigen_residual_at_norm": num(r.eigen_residual_at_norm),
        "witness": r.witness.as_ref().map_or(Value::Null, vector),
        "lipschitz": num(r.lipschitz),
        "mesh": opt_num(r.mesh),
        "eigen_lower_bound": opt_num(r.eigen_lower_bound),
        "eigen_gap": opt_num(r.eigen_gap),
    })
}

pub fn anti_daugavet(r: &AntiDaugavetReport) -> Value {
    json!({
        "verdict": verdict(&r.verdict),
        "checked": r.checked,
        "filtered": r.filtered,
        "max_eigen_residual": num(r.max_eigen_residual),
        "worst": r.worst.as_ref().map_or(Value::Null, |(t, s)| json!({ "operator": operator(t), "spectrum": spectrum(s) })),
    })
}

pub fn farthest(r: &FarthestReport, k: &PointSet) -> Value {
    json!({
        "query": vector(&r.query),
        "far_distance": num(r.far_distance),
        "attaining": r.attaining.iter().map(|&i| vector(&k.points()[i])).collect::<Vec<_>>(),
        "attaining_indices": r.attaining,
        "unique": r.unique,
    })
}

pub fn density(r: &DensityReport) -> Value {
    json!({
        "fraction": num(r.fraction),
        "unique": r.unique,
        "total": r.total,
        "seed": r.seed,
        "tol": num(r.tol),
        "warning": r.warning,
    })
}
