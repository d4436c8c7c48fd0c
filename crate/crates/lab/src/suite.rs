use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use banach_geom_core::{ProbeConfig, Status, Verdict};
use serde_json::{json, Value};

use crate::catalogue::SpaceCatalogue;
use crate::check::run_check;
use crate::error::Result;
use crate::json;

pub const SUITE_PROPERTIES: [&str; 6] = ["rotund", "smooth", "acs", "hlur", "hs", "anti-daugavet"];

#[derive(Clone, Debug)]
pub struct SpaceRow {
    pub label: String,
    pub dim: usize,
    pub verdicts: BTreeMap<String, Verdict>,
    /// False for any failing certificate that did not reproduce.
    pub certificates_reverify: bool,
    pub elapsed: Duration,
}

impl SpaceRow {
    pub fn status(&self, property: &str) -> Status {
        self.verdicts[property].status
    }

    fn holds(&self, property: &str) -> bool {
        self.status(property).holds()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub seed: u64,
    pub config: ProbeConfig,
    pub rows: Vec<SpaceRow>,
    pub cross_check_failures: Vec<String>,
    /// Wall time; kept out of the JSON so reports stay byte-identical.
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cross_check_failures.is_empty()
    }

    pub fn row(&self, label: &str) -> Option<&SpaceRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn to_json(&self) -> Value {
        let spaces: serde_json::Map<String, Value> = self
            .rows
            .iter()
            .map(|r| {
                let verdicts: serde_json::Map<String, Value> =
                    r.verdicts.iter().map(|(k, v)| (k.clone(), json::verdict(v))).collect();
                (
                    r.label.clone(),
                    json!({ "dim": r.dim, "verdicts": verdicts, "certificates_reverify": r.certificates_reverify }),
                )
            })
            .collect();
        let hlur: serde_json::Map<String, Value> =
            self.rows.iter().map(|r| (r.label.clone(), json::status(r.status("hlur")))).collect();
        json!({
            "seed": self.seed,
            "config": {
                "samples": self.config.samples,
                "tol": json::num(self.config.tol),
                "functionals": self.config.functionals,
                "candidates": self.config.candidates,
                "eigen_grid": self.config.eigen_grid,
                "eigen_threshold": json::num(self.config.eigen_threshold),
                "delta_schedule": self.config.delta_schedule.iter().copied().map(json::num).collect::<Vec<_>>(),
            },
            "spaces": spaces,
            "hlur": hlur,
            "cross_check_failures": self.cross_check_failures,
            "passed": self.passed(),
        })
    }

    pub fn timing_table(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&format!("{:<16} {:>8.2}s\n", r.label, r.elapsed.as_secs_f64()));
        }
        s.push_str(&format!("{:<16} {:>8.2}s\n", "total", self.elapsed.as_secs_f64()));
        s
    }
}

fn run_row(catalogue: &SpaceCatalogue, label: &str, cfg: &ProbeConfig) -> Result<SpaceRow> {
    let start = Instant::now();
    let space = catalogue.get(label)?;
    let mut verdicts = BTreeMap::new();
    let mut reverify = true;
    for p in SUITE_PROPERTIES {
        let v = run_check(catalogue, label, p, cfg)?;
        if v.status == Status::Fails {
            reverify &= match &v.certificate {
                Some(c) => c.reverify(space, cfg)?,
                None => false,
            };
        }
        verdicts.insert(p.to_string(), v);
    }
    Ok(SpaceRow {
        label: label.to_string(),
        dim: space.dim(),
        verdicts,
        certificates_reverify: reverify,
        elapsed: start.elapsed(),
    })
}

fn cross_checks(row: &SpaceRow) -> Vec<String> {
    let mut out = Vec::new();
    let l = &row.label;
    for (p, v) in &row.verdicts {
        if v.status == Status::Inconclusive {
            out.push(format!("{l}: {p} is inconclusive"));
        }
    }
    let (rotund, smooth, acs, hlur) = (row.holds("rotund"), row.holds("smooth"), row.holds("acs"), row.holds("hlur"));
    if row.dim <= 2 && acs != (rotund || smooth) {
        out.push(format!("{l}: acs {acs} but rotund-or-smooth {}", rotund || smooth));
    }
    if row.dim <= 2 && hlur != (rotund || smooth) {
        out.push(format!("{l}: hlur {hlur} but rotund-or-smooth {}", rotund || smooth));
    }
    if hlur != acs {
        out.push(format!("{l}: hlur {hlur} but acs {acs}"));
    }
    if rotund && !acs {
        out.push(format!("{l}: rotund but not acs"));
    }
    if smooth && !acs {
        out.push(format!("{l}: smooth but not acs"));
    }
    let anti = row.holds("anti-daugavet");
    if anti != hlur {
        out.push(format!("{l}: anti-daugavet {anti} but hlur {hlur}"));
    }
    if !row.holds("hs") {
        out.push(format!("{l}: slices do not shrink onto their faces"));
    }
    if !row.certificates_reverify {
        out.push(format!("{l}: a failure certificate does not reverify"));
    }
    out
}

/// Runs every suite property on every space (one worker per space) and
/// collects the consistency failures, ordered by label.
pub fn run_suite(catalogue: &SpaceCatalogue, cfg: &ProbeConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let labels: Vec<&str> = catalogue.labels().collect();
    let rows: Vec<Result<SpaceRow>> = std::thread::scope(|s| {
        let handles: Vec<_> = labels.iter().map(|l| s.spawn(move || run_row(catalogue, l, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("suite worker panicked")).collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let cross_check_failures = rows.iter().flat_map(cross_checks).collect();
    Ok(SuiteReport { seed: cfg.seed, config: cfg.clone(), rows, cross_check_failures, elapsed: start.elapsed() })
}
