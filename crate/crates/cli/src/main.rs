use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use petty::certificate::{equilateral_with_center, equilateral_without_center, fourteen_point_set};
use petty::config::point_to_json;
use petty::equilateral::{
    build_quintuple, feasibility_endpoints, no_center_evidence_for_set, section,
};
use petty::svg::discs_to_svg;
use petty::{
    census, check_bounds, maximize_min_distance, one_angular_distance, verify_certificate, Config,
    PettyError, SearchConfig, Separation,
};

const SEED_ENV: &str = "PETTY_SEED";

#[derive(Parser)]
#[command(
    name = "petty",
    version,
    about = "Separated and equilateral sets in the Petty space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the claim of a configuration file.
    Verify { config: PathBuf },
    /// Per-zone counts and bound violations of a sphere configuration.
    Census { config: PathBuf },
    /// 1-angular distance between two latitude heights.
    Angular {
        #[arg(allow_negative_numbers = true)]
        z1: f64,
        #[arg(allow_negative_numbers = true)]
        z2: f64,
    },
    /// Maximise the minimum pairwise distance of n sphere points.
    Search(SearchArgs),
    /// Build a 5-point equilateral set for a submersion d.
    Equilateral(EquilateralArgs),
    /// Endpoints of the feasible submersion interval.
    Endpoints,
    /// Numerical search for a center of a point set.
    CenterCheck {
        config: PathBuf,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Discs cut from the balls of radius 1/2 by the plane z = z0.
    CrossSection {
        config: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Write the built-in certificates to a directory.
    Bundled {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 14)]
    n: usize,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 200_000)]
    iters: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    freeze_poles: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct EquilateralArgs {
    #[command(subcommand)]
    sub: Option<EquilateralSub>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Subcommand)]
enum EquilateralSub {
    /// Same as the top-level `endpoints` command.
    Endpoints,
}

/// A command failure with its exit code.
struct Failure {
    code: u8,
    payload: Value,
}

impl From<PettyError> for Failure {
    fn from(e: PettyError) -> Self {
        let (code, kind) = match &e {
            PettyError::InvalidInput(_) => (2, "invalid-input"),
            PettyError::Parse(_) => (2, "parse"),
            PettyError::Io(_) => (2, "io"),
            PettyError::Domain(_) => (1, "domain"),
            PettyError::NoSolution { .. } | PettyError::NoAngle { .. } => (1, "no-solution"),
            PettyError::Infeasible { .. } => (1, "infeasible"),
            PettyError::Numerical(_) => (1, "numerical"),
        };
        Failure {
            code,
            payload: json!({"error": kind, "message": e.to_string()}),
        }
    }
}

type Outcome = Result<(bool, Value), Failure>;

fn resolve_seed(flag: Option<u64>, default: u64) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::from(PettyError::InvalidInput(format!(
                "{SEED_ENV}={v:?} is not an unsigned integer"
            )))
        }),
        Err(_) => Ok(default),
    }
}

fn load(path: &Path) -> Result<Config, Failure> {
    Ok(Config::load(path)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::from(PettyError::from(e)))
}

fn verify(path: &Path) -> Outcome {
    let c = load(path)?;
    let check = verify_certificate(&c)?;
    if !check.ok {
        eprintln!("verification failed for {}", path.display());
    }
    let mut payload = check.to_json();
    payload["claim"] = json!(c.claim.as_str());
    payload["points"] = json!(c.len());
    Ok((check.ok, payload))
}

fn census_cmd(path: &Path) -> Outcome {
    let c = load(path)?;
    let cen = census(c.points(), c.tolerance())?;
    let violations = check_bounds(&cen, c.claim.is_separation());
    for v in &violations {
        eprintln!("bound violated: {} (count {})", v.rule(), v.count);
    }
    let payload = json!({
        "census": cen.to_json(),
        "separated": c.claim.is_separation(),
        "violations": violations.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
    });
    Ok((violations.is_empty(), payload))
}

fn angular(z1: f64, z2: f64) -> Outcome {
    let t = one_angular_distance(z1, z2)?;
    Ok((
        true,
        json!({"z1": z1, "z2": z2, "theta_rad": t, "theta_deg": t.to_degrees()}),
    ))
}

fn search(a: &SearchArgs) -> Outcome {
    let cfg = SearchConfig {
        n: a.n,
        restarts: a.restarts,
        iterations: a.iters,
        seed: resolve_seed(a.seed, SearchConfig::default().seed)?,
        freeze_poles: a.freeze_poles,
        ..SearchConfig::default()
    };
    let report = maximize_min_distance(&cfg)?;
    eprintln!(
        "n = {}: min distance {:.12} ({}) in {:.1} s",
        cfg.n,
        report.min_pairwise_distance,
        report.achieved.as_str(),
        report.wall_time.as_secs_f64()
    );
    let mut payload = report.to_json();
    let cen = census(report.best.points(), report.best.tolerance())?;
    let violations = check_bounds(&cen, report.achieved != Separation::Below1);
    payload["census"] = cen.to_json();
    payload["violations"] = json!(violations.iter().map(|v| v.to_json()).collect::<Vec<_>>());
    if let Some(out) = &a.out {
        write_file(out, &pretty(&payload))?;
    }
    Ok((violations.is_empty(), payload))
}

fn endpoints() -> Outcome {
    let iv = feasibility_endpoints();
    Ok((true, json!({"d1": iv.d1, "d2": iv.d2})))
}

fn equilateral(a: &EquilateralArgs) -> Outcome {
    if let Some(EquilateralSub::Endpoints) = a.sub {
        return endpoints();
    }
    let Some(d) = a.d else {
        return Err(PettyError::InvalidInput(
            "equilateral needs --d or the endpoints subcommand".into(),
        )
        .into());
    };
    let q = build_quintuple(d, a.tol)?;
    let c = q.to_configuration(a.tol)?;
    let doc = c.to_json();
    if let Some(out) = &a.out {
        write_file(out, &pretty(&doc))?;
    }
    Ok((
        true,
        json!({"configuration": doc, "max_distance_error": q.max_distance_error(), "boundary": q.boundary}),
    ))
}

fn center_check(path: &Path, restarts: usize, seed: Option<u64>) -> Outcome {
    let c = load(path)?;
    let seed = resolve_seed(seed, 1)?;
    let slab = c.meta.get("slab").and_then(|v| {
        let a = v.as_array()?;
        Some((a.first()?.as_f64()?, a.get(1)?.as_f64()?))
    });
    let ev = no_center_evidence_for_set(c.points(), slab, restarts, seed)?;
    Ok((
        true,
        json!({
            "lower_estimate": ev.lower_estimate,
            "best_point": point_to_json(&ev.best_point),
            "best_restart": ev.best_restart,
            "restarts": restarts,
            "seed": seed,
            "slab": slab.map(|(lo, hi)| vec![lo, hi]),
        }),
    ))
}

fn cross_section(path: &Path, z0: f64, svg: Option<&Path>) -> Outcome {
    let c = load(path)?;
    let (discs, pairs) = section(c.points(), 0.5, z0);
    if let Some(p) = svg {
        write_file(p, &discs_to_svg(&discs, z0))?;
    }
    let discs_json: Vec<Value> = discs
        .iter()
        .map(|d| {
            d.map_or(
                Value::Null,
                |d| json!({"cx": d.cx, "cy": d.cy, "rho": d.rho}),
            )
        })
        .collect();
    let pairs_json: Vec<Value> = pairs
        .iter()
        .map(|p| {
            let dist = c.points()[p.i].distance(&c.points()[p.j]);
            json!({"i": p.i, "j": p.j, "distance": dist, "in_contact_band": p.in_contact_band, "gap": p.gap})
        })
        .collect();
    Ok((
        true,
        json!({"z": z0, "radius": 0.5, "discs": discs_json, "pairs": pairs_json}),
    ))
}

fn bundled(dir: &Path) -> Outcome {
    std::fs::create_dir_all(dir).map_err(|e| Failure::from(PettyError::from(e)))?;
    let mut files = Vec::new();
    for (name, c) in [
        ("fourteen-point.json", fourteen_point_set()),
        ("equilateral-with-center.json", equilateral_with_center()),
        (
            "equilateral-without-center.json",
            equilateral_without_center(),
        ),
    ] {
        let path = dir.join(name);
        c.save(&path)?;
        files.push(path.display().to_string());
    }
    Ok((true, json!({"files": files})))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialise") + "\n"
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Census { .. } => "census",
        Command::Angular { .. } => "angular",
        Command::Search(_) => "search",
        Command::Equilateral(_) => "equilateral",
        Command::Endpoints => "endpoints",
        Command::CenterCheck { .. } => "center-check",
        Command::CrossSection { .. } => "cross-section",
        Command::Bundled { .. } => "bundled",
    }
}

fn emit(command: &str, ok: bool, payload: Value, started: Instant) {
    let doc = json!({
        "command": command,
        "ok": ok,
        "payload": payload,
        "elapsed_ms": started.elapsed().as_millis() as u64,
    });
    println!("{}", serde_json::to_string(&doc).expect("values serialise"));
}

fn main() -> ExitCode {
    let started = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            eprint!("{e}");
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return ExitCode::SUCCESS;
            }
            emit(
                "usage",
                false,
                json!({"error": "usage", "message": e.kind().to_string()}),
                started,
            );
            return ExitCode::from(2);
        }
    };
    let name = command_name(&cli.command);
    let outcome = match &cli.command {
        Command::Verify { config } => verify(config),
        Command::Census { config } => census_cmd(config),
        Command::Angular { z1, z2 } => angular(*z1, *z2),
        Command::Search(a) => search(a),
        Command::Equilateral(a) => equilateral(a),
        Command::Endpoints => endpoints(),
        Command::CenterCheck {
            config,
            restarts,
            seed,
        } => center_check(config, *restarts, *seed),
        Command::CrossSection { config, z, svg } => cross_section(config, *z, svg.as_deref()),
        Command::Bundled { dir } => bundled(dir),
    };
    match outcome {
        Ok((ok, payload)) => {
            emit(name, ok, payload, started);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            if let Some(m) = f.payload.get("message").and_then(Value::as_str) {
                eprintln!("error: {m}");
            }
            emit(name, false, f.payload, started);
            ExitCode::from(f.code)
        }
    }
}
