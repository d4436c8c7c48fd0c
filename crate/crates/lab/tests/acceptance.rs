//! Acceptance criteria, one PASS/FAIL line each. Tolerances and budgets are
//! fixed here; a failing line is reported as measured.

use std::process::Command;
use std::time::{Duration, Instant};

use banach_geom::{repro_example_5_5, run_check, SpaceCatalogue, BUILTIN_LABELS};
use banach_geom_core::daugavet::{anti_daugavet_probe, approx_eigen_residual, daugavet_residual, OperatorMatrix};
use banach_geom_core::faces::{a0_set, duality_map};
use banach_geom_core::farthest::{density_experiment, hull_equality_check, PointSet};
use banach_geom_core::properties::{face_coincidence, region_profile, slice_profile};
use banach_geom_core::verdict::dyadic_schedule;
use banach_geom_core::{rng, Certificate, Functional, ProbeConfig, Status, Vector};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.2}s]", o.detail, took.as_secs_f64());
    if let Some(b) = budget {
        if took >= b {
            o.pass = false;
            o.detail = format!("{} over budget {:.0}s", o.detail, b.as_secs_f64());
        }
    }
    o
}

fn v(c: &[f64]) -> Vector {
    Vector::new(c.to_vec()).unwrap()
}

fn random_k(seed: u64, trial: u64) -> PointSet {
    let mut r = rng::stream(seed, "acceptance-k", trial);
    let pts = (0..20).map(|_| vec![rng::uniform(&mut r, -1.0, 1.0), rng::uniform(&mut r, -1.0, 1.0)]).collect();
    PointSet::from_coords(pts, "random-20").unwrap()
}

fn c1_square_example(cat: &SpaceCatalogue) -> Outcome {
    match repro_example_5_5(cat, None) {
        Ok(r) => outcome(
            true,
            format!(
                "norm_sum={} functional_value={} distance={} face={:?}",
                r.norm_sum, r.functional_value, r.distance, r.face
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn c2_route_agreement(cat: &SpaceCatalogue, cfg: &ProbeConfig) -> Outcome {
    let expected = [
        ("l2_2", true),
        ("lens_default", true),
        ("stadium_default", true),
        ("one_two_mix_2", true),
        ("l1_2", false),
        ("linf_2", false),
        ("hexagon", false),
    ];
    let mut problems = Vec::new();
    for label in BUILTIN_LABELS {
        let space = cat.get(label).unwrap();
        let st = |p: &str| run_check(cat, label, p, cfg).unwrap();
        let (rotund, smooth, acs, hlur) = (st("rotund"), st("smooth"), st("acs"), st("hlur"));
        if space.dim() == 2 && acs.status.holds() != (rotund.status.holds() || smooth.status.holds()) {
            problems
                .push(format!("{label}: acs {} vs rotund {} / smooth {}", acs.status, rotund.status, smooth.status));
        }
        for verdict in [&rotund, &smooth, &acs, &hlur] {
            if verdict.status == Status::Fails {
                let ok = verdict.certificate.as_ref().is_some_and(|c| c.reverify(space, cfg).unwrap());
                if !ok {
                    problems.push(format!("{label}: {} certificate does not reverify", verdict.property));
                }
            }
        }
        if let Some((_, want)) = expected.iter().find(|(l, _)| *l == label) {
            if hlur.status.holds() != *want {
                problems.push(format!("{label}: hlur {}", hlur.status));
            }
        }
    }
    let detail = if problems.is_empty() { "9 spaces, hlur table matches".to_string() } else { problems.join("; ") };
    outcome(problems.is_empty(), detail)
}

/// `min max(|x_2 - x_1|, |x_2|)` on a uniform 10^6-point walk around the square.
fn shear_oracle() -> f64 {
    let n = 1_000_000;
    let mut best = f64::INFINITY;
    for k in 0..n {
        let s = 8.0 * k as f64 / n as f64;
        let (side, u) = ((s / 2.0) as usize, s % 2.0 - 1.0);
        let (x1, x2) = match side {
            0 => (1.0, u),
            1 => (-u, 1.0),
            2 => (-1.0, -u),
            _ => (u, -1.0),
        };
        best = best.min((x2 - x1).abs().max(x2.abs()));
    }
    best
}

fn c3_anti_daugavet(cat: &SpaceCatalogue, cfg: &ProbeConfig) -> Outcome {
    let linf = cat.get("linf_2").unwrap();
    let shear = OperatorMatrix::new(vec![vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
    let mut problems = Vec::new();
    let r = anti_daugavet_probe(linf, cfg).unwrap();
    match &r.verdict.certificate {
        Some(Certificate::AntiDaugavet { operator, daugavet_residual: d, eigen_residual, .. })
            if r.verdict.status == Status::Fails =>
        {
            if *operator != shear {
                problems.push(format!("linf_2 refuted by {:?}", operator.rows()));
            }
            if *d != 0.0 {
                problems.push(format!("daugavet residual {d}"));
            }
            if (eigen_residual - 0.5).abs() > 1e-4 {
                problems.push(format!("eigen residual {eigen_residual}"));
            }
        }
        _ => problems.push(format!("linf_2 probe {}", r.verdict.status)),
    }
    let direct = daugavet_residual(linf, &shear, cfg).unwrap();
    let e = approx_eigen_residual(linf, &shear, 1.0, cfg).unwrap();
    let oracle = shear_oracle();
    if direct != 0.0 || (e.value - 0.5).abs() > 1e-4 || (e.value - oracle).abs() > 1e-4 {
        problems.push(format!("shear: residual {direct}, eigen {} vs oracle {oracle}", e.value));
    }
    let l2 = anti_daugavet_probe(cat.get("l2_2").unwrap(), cfg).unwrap();
    if l2.verdict.status != Status::HoldsNumerical || l2.checked < 1000 || l2.max_eigen_residual >= 1e-6 {
        problems.push(format!(
            "l2_2 {} with {} candidates, max residual {:e}",
            l2.verdict.status, l2.checked, l2.max_eigen_residual
        ));
    }
    let detail = if problems.is_empty() {
        format!(
            "shear eigen residual {} (oracle {oracle}); l2_2 {} candidates, max {:e}",
            e.value, l2.checked, l2.max_eigen_residual
        )
    } else {
        problems.join("; ")
    };
    outcome(problems.is_empty(), detail)
}

fn c4_rank_one(cat: &SpaceCatalogue, cfg: &ProbeConfig) -> Outcome {
    let labels: Vec<&str> = cat.labels().collect();
    let mut worst: f64 = 0.0;
    for i in 0..100u64 {
        let mut r = rng::stream(cfg.seed, "acceptance-rank-one", i);
        let label = labels[(rng::open01(&mut r) * labels.len() as f64) as usize % labels.len()];
        let space = cat.get(label).unwrap();
        let y = space.sphere_sample(1, rng::subseed(cfg.seed, label) ^ i).remove(0);
        let j = duality_map(space, &y).unwrap();
        let f = &j.extremes[(rng::open01(&mut r) * j.extremes.len() as f64) as usize % j.extremes.len()];
        let s = 5.0 * rng::open01(&mut r);
        let t = OperatorMatrix::rank_one(f.coeffs(), y.coords()).scaled(s);
        worst = worst.max(daugavet_residual(space, &t, cfg).unwrap().abs());
    }
    outcome(worst <= 1e-9, format!("100 tuples, worst |residual| {worst:e}"))
}

fn c5_slices(cat: &SpaceCatalogue, cfg: &ProbeConfig) -> Outcome {
    let deltas = dyadic_schedule(1, 20);
    let mut non_monotone = Vec::new();
    let mut worst_final: (f64, String) = (0.0, String::new());
    for (label, space) in cat.iter() {
        for g in space.dual_sphere_sample(32, rng::subseed(cfg.seed, "acceptance-hs")) {
            let p = slice_profile(space, &g, &deltas, cfg).unwrap();
            if !p.is_monotone() {
                non_monotone.push(label.to_string());
            }
            if p.last() > worst_final.0 {
                worst_final = (p.last(), label.to_string());
            }
        }
    }
    let linf = cat.get("linf_2").unwrap();
    let p = slice_profile(linf, &Functional::new(vec![0.5, 0.5]).unwrap(), &deltas, cfg).unwrap();
    let twice = p.deltas.iter().zip(&p.distances).map(|(d, h)| (h - 2.0 * d).abs()).fold(0.0, f64::max);
    non_monotone.dedup();
    let pass = non_monotone.is_empty() && worst_final.0 <= 1e-8 && twice <= 1e-9;
    outcome(
        pass,
        format!(
            "non-monotone: {:?}; largest H at delta=2^-20 is {:e} ({}), required <= 1e-8; linf_2 |H - 2 delta| <= {twice:e}",
            non_monotone, worst_final.0, worst_final.1
        ),
    )
}

fn c6_region_convergence(cat: &SpaceCatalogue, cfg: &ProbeConfig) -> (Outcome, Outcome) {
    let schedule = dyadic_schedule(1, 10);
    let mut worst: (f64, String) = (0.0, String::new());
    let mut singleton = true;
    for label in ["l2_2", "one_two_mix_2"] {
        let space = cat.get(label).unwrap();
        for x in space.sphere_sample(4, rng::subseed(cfg.seed, "acceptance-dset")) {
            singleton &= a0_set(space, &x).unwrap().points().len() == 1;
            let p = region_profile(space, &x, &schedule, cfg).unwrap();
            if p.last() > worst.0 {
                worst = (p.last(), label.to_string());
            }
        }
    }
    let a = outcome(
        singleton && worst.0 <= 1e-3,
        format!(
            "A0 singleton: {singleton}; largest H(D[x,1/n], A0(x)) at n=2^10 is {:.4} ({}), required <= 1e-3",
            worst.0, worst.1
        ),
    );
    let linf = cat.get("linf_2").unwrap();
    let fc = face_coincidence(linf, &v(&[1.0, 1.0]), cfg).unwrap();
    let b = match &fc.certificate {
        Some(c @ Certificate::FaceCoincidence { distance, .. }) if fc.status == Status::Fails => outcome(
            *distance == 2.0 && c.reverify(linf, cfg).unwrap(),
            format!("linf_2 at (1,1): faces at distance {distance}"),
        ),
        _ => outcome(false, format!("linf_2 face coincidence {}", fc.status)),
    };
    (a, b)
}

fn c7_farthest(cat: &SpaceCatalogue, cfg: &ProbeConfig) -> Outcome {
    let l2 = cat.get("l2_2").unwrap();
    let mut fractions = Vec::new();
    for seed in 0..5 {
        let c = cfg.clone().with_seed(seed);
        fractions.push(density_experiment(l2, &random_k(seed, 0), &c).unwrap().fraction);
    }
    let mut holds = 0;
    for trial in 0..1000 {
        if hull_equality_check(l2, &random_k(cfg.seed, 1 + trial), cfg).unwrap().status.holds() {
            holds += 1;
        }
    }
    let min = fractions.iter().copied().fold(1.0, f64::min);
    outcome(min >= 0.99 && holds == 1000, format!("density fractions {fractions:?}; hull equality {holds}/1000"))
}

fn c8_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_banach-geom"))
            .args(["suite", "--seed", "42"])
            .env_remove("BANACH_GEOM_SEED")
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    outcome(
        same && a.status.success(),
        format!("{} bytes, identical: {same}, exit {:?}", a.stdout.len(), a.status.code()),
    )
}

fn main() {
    let cat = SpaceCatalogue::builtins();
    let cfg = ProbeConfig::default();
    let secs = |s| Some(Duration::from_secs(s));
    let mut lines = vec![
        ("1", timed(secs(1), || c1_square_example(&cat))),
        ("2", timed(secs(30), || c2_route_agreement(&cat, &cfg))),
        ("3", timed(secs(60), || c3_anti_daugavet(&cat, &cfg))),
        ("4", timed(None, || c4_rank_one(&cat, &cfg))),
        ("5", timed(None, || c5_slices(&cat, &cfg))),
    ];
    let start = Instant::now();
    let (a, b) = c6_region_convergence(&cat, &cfg);
    let took = format!(" [{:.2}s]", start.elapsed().as_secs_f64());
    lines.push(("6a", Outcome { detail: a.detail + &took, ..a }));
    lines.push(("6b", Outcome { detail: b.detail + &took, ..b }));
    lines.push(("7", timed(secs(60), || c7_farthest(&cat, &cfg))));
    lines.push(("8", timed(None, c8_determinism)));
    let mut failed = 0;
    for (id, o) in &lines {
        println!("{} criterion {id}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
