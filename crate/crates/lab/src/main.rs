use std::path::PathBuf;
use std::process::ExitCode;

use banach_geom::error::{format_err, LabError, Result};
use banach_geom::{check, json, repro, suite, SpaceCatalogue};
use banach_geom_core::daugavet::{anti_daugavet_probe, spectrum_report};
use banach_geom_core::farthest::{density_experiment, far_set, farthest_points, hull_equality_check, TIE_TOL};
use banach_geom_core::properties::{dset_convergence, sequence_probe, GeneratorKind};
use banach_geom_core::{NormFamily, ProbeConfig, Status};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "banach-geom", version, about = "Geometry checks on finite-dimensional normed spaces")]
struct Cli {
    /// Root seed for every random stream.
    #[arg(long, global = true, env = "BANACH_GEOM_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// JSON object of extra `label: space descriptor` entries.
    #[arg(long, global = true)]
    catalogue: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe catalogue spaces.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// Run a property check, or re-verify a certificate with --verify.
    Check {
        label: String,
        property: String,
        /// Certificate JSON, inline or `@path`.
        #[arg(long)]
        verify: Option<String>,
    },
    /// D-region convergence at a point, or a sequence probe with --generator.
    Converge {
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        generator: Option<String>,
    },
    /// Spectrum report for --matrix, or the anti-Daugavet probe without it.
    Daugavet {
        label: String,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Farthest points of --points from --query; without a query, the far
    /// set, uniqueness density and (Euclidean) hull check.
    Farthest {
        label: String,
        #[arg(long)]
        points: String,
        #[arg(long, allow_hyphen_values = true)]
        query: Option<String>,
    },
    /// Reproduce a worked example.
    Repro {
        example: String,
        /// Move `x_n` to `(eps, 1)` and report without asserting.
        #[arg(long)]
        perturb: Option<f64>,
    },
    /// Every check on every catalogue space plus the consistency cross-checks.
    Suite,
}

#[derive(Subcommand, Debug)]
enum SpaceAction {
    Info { label: String },
    List,
}

fn config(cli: &Cli) -> Result<ProbeConfig> {
    let mut cfg = ProbeConfig::default().with_seed(cli.seed);
    if let Some(n) = cli.samples {
        cfg.samples = n;
    }
    if let Some(t) = cli.tol {
        cfg.tol = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn load_catalogue(cli: &Cli) -> Result<SpaceCatalogue> {
    let mut c = SpaceCatalogue::builtins();
    if let Some(path) = &cli.catalogue {
        c.extend_from_json(&read_json_file(path)?)?;
    }
    Ok(c)
}

fn read_json_file(path: &PathBuf) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|source| LabError::Io { path: path.display().to_string(), source })?;
    Ok(serde_json::from_str(&text)?)
}

/// Inline JSON, `@path`, or a comma-separated list of numbers.
fn parse_arg(s: &str) -> Result<Value> {
    if let Some(path) = s.strip_prefix('@') {
        return read_json_file(&PathBuf::from(path));
    }
    let t = s.trim();
    if t.starts_with('[') || t.starts_with('{') {
        return Ok(serde_json::from_str(t)?);
    }
    let xs = t
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| LabError::Format(format!("bad number {p:?} in {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!(xs))
}

struct Outcome {
    report: Value,
    code: u8,
}

fn verdict_code(s: Status) -> u8 {
    check::exit_code(s) as u8
}

fn run(cli: &Cli) -> Result<Outcome> {
    let catalogue = load_catalogue(cli)?;
    let cfg = config(cli)?;
    match &cli.command {
        Command::Space { action: SpaceAction::List } => {
            let spaces: serde_json::Map<String, Value> =
                catalogue.iter().map(|(l, s)| (l.to_string(), json::space(s))).collect();
            Ok(Outcome { report: Value::Object(spaces), code: 0 })
        }
        Command::Space { action: SpaceAction::Info { label } } => {
            let s = catalogue.get(label)?;
            let report = json!({
                "label": label,
                "descriptor": json::space(s),
                "tol": json::num(s.tol()),
                "polyhedral": s.is_polyhedral(),
                "rotund_by_family": s.rotund_by_family(),
                "smooth_by_family": s.smooth_by_family(),
                "ball_vertices": s.ball_vertices().map(|v| json!(v)),
                "dual_vertices": s.dual_vertices().map(|v| json!(v)),
            });
            Ok(Outcome { report, code: 0 })
        }
        Command::Check { label, property, verify } => {
            let v = match verify {
                Some(c) => {
                    let cert = json::read_certificate(&parse_arg(c)?)?;
                    check::run_verify(&catalogue, label, property, cert, &cfg)?
                }
                None => check::run_check(&catalogue, label, property, &cfg)?,
            };
            Ok(Outcome { code: verdict_code(v.status), report: json::verdict(&v) })
        }
        Command::Converge { label, point, generator } => {
            let s = catalogue.get(label)?;
            let x = s.normalize(&json::read_vector(&parse_arg(point)?)?)?;
            match generator {
                Some(g) => {
                    let kind: GeneratorKind = g.parse()?;
                    let r = sequence_probe(s, &x, kind, &cfg)?;
                    Ok(Outcome { report: json::probe_report(&r), code: 0 })
                }
                None => {
                    let r = dset_convergence(s, &x, &cfg)?;
                    Ok(Outcome { code: verdict_code(r.verdict.status), report: json::dset_report(&r) })
                }
            }
        }
        Command::Daugavet { label, matrix } => {
            let s = catalogue.get(label)?;
            match matrix {
                Some(m) => {
                    let t = json::read_operator(&parse_arg(m)?)?;
                    let r = spectrum_report(s, &t, &cfg)?;
                    let report = json!({ "operator": json::operator(&t), "spectrum": json::spectrum(&r) });
                    Ok(Outcome { report, code: 0 })
                }
                None => {
                    let r = anti_daugavet_probe(s, &cfg)?;
                    Ok(Outcome { code: verdict_code(r.verdict.status), report: json::anti_daugavet(&r) })
                }
            }
        }
        Command::Farthest { label, points, query } => {
            let s = catalogue.get(label)?;
            let k = json::read_point_set(&parse_arg(points)?, "points")?;
            match query {
                Some(q) => {
                    let x = json::read_vector(&parse_arg(q)?)?;
                    let r = farthest_points(s, &x, &k, TIE_TOL)?;
                    Ok(Outcome { report: json::farthest(&r, &k), code: 0 })
                }
                None => {
                    let far = far_set(s, &k, cfg.samples, TIE_TOL, cfg.seed)?;
                    let density = density_experiment(s, &k, &cfg)?;
                    let euclidean =
                        matches!(s.family(), NormFamily::Lp { p } if *p == 2.0) && (2..=3).contains(&s.dim());
                    let hull = if euclidean { Some(hull_equality_check(s, &k, &cfg)?) } else { None };
                    let report = json!({
                        "points": json::point_set(&k),
                        "far_set": far.iter().map(|&i| json::vector(&k.points()[i])).collect::<Vec<_>>(),
                        "far_indices": far,
                        "density": json::density(&density),
                        "hull_equality": hull.as_ref().map_or(Value::Null, json::verdict),
                    });
                    let code = hull.map_or(0, |v| verdict_code(v.status));
                    Ok(Outcome { report, code })
                }
            }
        }
        Command::Repro { example, perturb } => {
            if example != "example-5-5" {
                return format_err(format!("unknown example {example:?}; available: example-5-5"));
            }
            match repro::repro_example_5_5(&catalogue, *perturb) {
                Ok(r) => Ok(Outcome { report: r.to_json(), code: 0 }),
                Err(LabError::Assertion(m)) => {
                    eprintln!("banach-geom: {m}");
                    Ok(Outcome { report: json!({ "assertion": m }), code: 1 })
                }
                Err(e) => Err(e),
            }
        }
        Command::Suite => {
            let r = suite::run_suite(&catalogue, &cfg)?;
            eprint!("{}", r.timing_table());
            for f in &r.cross_check_failures {
                eprintln!("cross-check failed: {f}");
            }
            Ok(Outcome { code: if r.passed() { 0 } else { 1 }, report: r.to_json() })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = json::canonical(&out.report);
            print!("{text}");
            if let Some(path) = &cli.json_out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("banach-geom: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("banach-geom: {e}");
            ExitCode::from(2)
        }
    }
}
