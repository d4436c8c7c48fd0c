use banach_geom_core::daugavet::anti_daugavet_probe;
use banach_geom_core::properties::{
    check_acs, check_finite_dimensional, check_hlur, check_hs_slices, check_rotund, check_smooth,
};
use banach_geom_core::{Certificate, ProbeConfig, Status, Verdict};

use crate::catalogue::SpaceCatalogue;
use crate::error::{LabError, Result};

pub const PROPERTIES: [&str; 9] = ["rotund", "smooth", "acs", "hlur", "hs", "anti-daugavet", "clur", "kk", "nsc"];

/// Process exit status for a verdict: 0 holds, 1 fails, 2 inconclusive.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::HoldsExact | Status::HoldsNumerical => 0,
        Status::Fails => 1,
        Status::Inconclusive => 2,
    }
}

pub fn run_check(catalogue: &SpaceCatalogue, label: &str, property: &str, cfg: &ProbeConfig) -> Result<Verdict> {
    if !PROPERTIES.contains(&property) {
        return Err(LabError::UnknownProperty(property.to_string()));
    }
    let space = catalogue.get(label)?;
    Ok(match property {
        "rotund" => check_rotund(space, cfg)?,
        "smooth" => check_smooth(space, cfg)?,
        "acs" => check_acs(space, cfg)?,
        "hlur" => check_hlur(space, cfg)?,
        "hs" => check_hs_slices(space, cfg)?.verdict,
        "anti-daugavet" => anti_daugavet_probe(space, cfg)?.verdict,
        other => check_finite_dimensional(other, cfg),
    })
}

/// Verify mode: recomputes a certificate against the named space. The
/// verdict fails, carrying the certificate, when the violation reproduces,
/// and is inconclusive otherwise.
pub fn run_verify(
    catalogue: &SpaceCatalogue,
    label: &str,
    property: &str,
    certificate: Certificate,
    cfg: &ProbeConfig,
) -> Result<Verdict> {
    if !PROPERTIES.contains(&property) {
        return Err(LabError::UnknownProperty(property.to_string()));
    }
    let space = catalogue.get(label)?;
    let ok = certificate.reverify(space, cfg)?;
    let status = if ok { Status::Fails } else { Status::Inconclusive };
    Ok(Verdict::new(property, status, cfg, 1, if ok { -cfg.tol } else { 0.0 }).with_certificate(certificate))
}
