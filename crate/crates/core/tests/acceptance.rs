//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::f64::consts::{FRAC_PI_2, SQRT_2};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use petty::certificate::{
    equatorial_triangle, equilateral_center, equilateral_with_center, equilateral_without_center,
    fourteen_point_set, triangle_apex,
};
use petty::equilateral::{
    build_quintuple, center_spread, endpoint_cubic, equilateral_triangle_on_ellipse,
    extend_triangle_to_four, feasibility_endpoints, inflated_box, no_center_evidence, section,
    EllipseFamily,
};
use petty::search::restart_rng;
use petty::{
    census, check_bounds, maximize_min_distance, middle_point_minimality, one_angular_distance,
    verify_certificate, Claim, Point, SearchConfig, Separation,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fourteen_point_certificate() -> Check {
    let started = Instant::now();
    let c = fourteen_point_set();
    let check = verify_certificate(&c).map_err(|e| e.to_string())?;
    let pts = c.points();
    let mut pairs = 0;
    let mut margin = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            pairs += 1;
            margin = margin.min(pts[i].distance(&pts[j]) - 1.0);
        }
    }
    let elapsed = started.elapsed();
    ensure(c.claim == Claim::SeparatedGt1 && check.ok, || {
        format!("verification failed: {check:?}")
    })?;
    ensure(pairs == 91 && margin > 0.0, || {
        format!("{pairs} pairs, margin {margin:e}")
    })?;
    ensure(check.max_norm_error <= 1e-12, || {
        format!("norm error {:e}", check.max_norm_error)
    })?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "91 distances > 1, margin {margin:.6e}, norm error {:.1e}, {elapsed:?}",
        check.max_norm_error
    ))
}

fn angular_table() -> Check {
    let t = |a: f64, b: f64| one_angular_distance(a, b).map_err(|e| e.to_string());
    let rows: [(f64, f64, f64, Option<f64>); 6] = [
        (0.5, 1.0 / 3.0, FRAC_PI_2, None),
        (1.0 / 3.0, 0.25, (1.0f64 / 6.0).acos(), Some(80.405)),
        (1.0 / 3.0, -1.0 / 3.0, (7.0f64 / 8.0).acos(), Some(28.955)),
        (1.0 / 3.0, -0.25, (5.0f64 / 6.0).acos(), Some(33.557)),
        (-0.25, 0.25, (7.0f64 / 9.0).acos(), Some(38.94)),
        (0.5, 0.25, (1.0f64 / 3.0).acos(), Some(70.528)),
    ];
    let mut worst: f64 = 0.0;
    for (z1, z2, expect, lower_deg) in rows {
        let got = t(z1, z2)?;
        worst = worst.max((got - expect).abs());
        ensure((got - expect).abs() <= 1e-9, || {
            format!("theta({z1}, {z2}) = {got}, expected {expect}")
        })?;
        if let Some(lb) = lower_deg {
            ensure(got.to_degrees() > lb, || {
                format!("theta({z1}, {z2}) = {}° not > {lb}°", got.to_degrees())
            })?;
        }
    }
    Ok(format!(
        "6 values, max error {worst:.1e} rad, all degree bounds exceeded"
    ))
}

fn nested_pair_monotonicity() -> Check {
    let mut rng = restart_rng(2024, 0);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..100_000 {
        let mut z: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-0.5..=0.5));
        z.sort_by(f64::total_cmp);
        // z'1 <= z1 <= z2 <= z'2
        let inner = one_angular_distance(z[1], z[2]).map_err(|e| e.to_string())?;
        let outer = one_angular_distance(z[0], z[3]).map_err(|e| e.to_string())?;
        let violation = outer - inner;
        worst = worst.max(violation);
        ensure(violation <= 1e-12, || {
            format!("theta{:?} inner {inner} < outer {outer}", z)
        })?;
    }
    Ok(format!(
        "100000 nested pairs, largest outer - inner {worst:.2e}"
    ))
}

fn middle_point() -> Check {
    let mut rng = restart_rng(2024, 1);
    for _ in 0..1000 {
        let z1 = rng.gen_range(0.0..0.5);
        let z2 = -rng.gen_range(0.0..0.5);
        let ok = middle_point_minimality(z1, z2, 101).map_err(|e| e.to_string())?;
        ensure(ok, || format!("minimum not at the middle for ({z1}, {z2})"))?;
    }
    Ok("1000 random pairs at 101 samples".into())
}

fn search_reproduction() -> Check {
    let cfg = SearchConfig {
        n: 14,
        restarts: 32,
        iterations: 200_000,
        seed: 7,
        ..SearchConfig::default()
    };
    let started = Instant::now();
    let report = maximize_min_distance(&cfg).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let cen = census(report.best.points(), report.best.tolerance()).map_err(|e| e.to_string())?;
    let violations = check_bounds(&cen, report.achieved != Separation::Below1);
    let check = verify_certificate(&report.best).map_err(|e| e.to_string())?;

    let mut recorded = Vec::new();
    for n in [15, 16] {
        let r =
            maximize_min_distance(&SearchConfig { n, ..cfg.clone() }).map_err(|e| e.to_string())?;
        recorded.push(format!("n={n}: {:.6}", r.min_pairwise_distance));
    }

    ensure(
        report.min_pairwise_distance > 1.0 && report.achieved == Separation::Gt1,
        || format!("best minimum {:.12}", report.min_pairwise_distance),
    )?;
    ensure(check.ok, || {
        format!("emitted configuration does not verify: {check:?}")
    })?;
    ensure(violations.is_empty(), || {
        format!("bound violations {violations:?}")
    })?;
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "n=14 min {:.9} (seed 7, restart {}), {:.1}s; recorded {}",
        report.min_pairwise_distance,
        report.best_restart,
        elapsed.as_secs_f64(),
        recorded.join(", ")
    ))
}

fn endpoints() -> Check {
    let iv = feasibility_endpoints();
    let d1 = (SQRT_2 - 1.0) / 4.0;
    ensure((iv.d1 - d1).abs() <= 1e-14, || format!("d1 = {}", iv.d1))?;
    ensure((iv.d2 - 0.09574).abs() <= 5e-6, || {
        format!("d2 = {}", iv.d2)
    })?;
    ensure(endpoint_cubic(iv.d2).abs() <= 1e-12, || {
        format!("cubic(d2) = {:e}", endpoint_cubic(iv.d2))
    })?;
    Ok(format!("d1 = {:.16}, d2 = {:.16}", iv.d1, iv.d2))
}

fn quintuples() -> Check {
    let mut worst: f64 = 0.0;
    for d in [0.097, 0.100, 0.103] {
        let q = build_quintuple(d, 1e-10).map_err(|e| format!("d = {d}: {e}"))?;
        let mut pairs = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                let err = (q.points[i].distance(&q.points[j]) - 1.0).abs();
                worst = worst.max(err);
                pairs += 1;
                ensure(err <= 1e-9, || {
                    format!("d = {d}: pair ({i}, {j}) off by {err:e}")
                })?;
            }
        }
        ensure(pairs == 10, || "wrong pair count".into())?;
    }
    for d in [0.05, 0.15, 0.25] {
        ensure(build_quintuple(d, 1e-10).is_err(), || {
            format!("d = {d} accepted")
        })?;
        let found = equilateral_triangle_on_ellipse(
            &EllipseFamily::new(d).map_err(|e| e.to_string())?,
            1e-10,
        )
        .map_err(|e| e.to_string())?;
        ensure(found.is_empty(), || {
            format!("d = {d}: {} triangles found", found.len())
        })?;
    }
    let mut feasible = Vec::new();
    for k in 0..=100 {
        let d = 0.05 + 0.001 * k as f64;
        let e = EllipseFamily::new(d).map_err(|e| e.to_string())?;
        if !equilateral_triangle_on_ellipse(&e, 1e-10)
            .map_err(|e| e.to_string())?
            .is_empty()
        {
            feasible.push(d);
        }
    }
    let iv = feasibility_endpoints();
    let (lo, hi) = match (feasible.first(), feasible.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Err("sweep found no feasible d".into()),
    };
    let contiguous = feasible
        .windows(2)
        .all(|w| (w[1] - w[0] - 0.001).abs() < 1e-9);
    ensure(contiguous, || {
        format!("feasible set is not an interval: {feasible:?}")
    })?;
    ensure(
        (lo - iv.d2).abs() <= 0.001 && (hi - iv.d1).abs() <= 0.001,
        || format!("sweep interval [{lo}, {hi}] vs [{}, {}]", iv.d2, iv.d1),
    )?;
    Ok(format!(
        "max distance error {worst:.1e}; sweep feasible on [{lo:.3}, {hi:.3}]"
    ))
}

fn four_point_sets() -> Check {
    let with = equilateral_with_center();
    ensure(
        verify_certificate(&with).map_err(|e| e.to_string())?.ok,
        || "centered set does not verify".into(),
    )?;
    let k = equilateral_center();
    let spread = center_spread(with.points(), &k);
    ensure(spread <= 1e-12, || format!("spread at center {spread:e}"))?;
    let mu = 1.0 - SQRT_2 / 4.0;
    for a in with.points() {
        ensure((a.distance(&k) - mu).abs() <= 1e-12, || {
            format!("distance to center {}", a.distance(&k))
        })?;
    }

    let without = equilateral_without_center();
    ensure(
        verify_certificate(&without).map_err(|e| e.to_string())?.ok,
        || "non-centered set does not verify".into(),
    )?;
    let found =
        extend_triangle_to_four(&equatorial_triangle(), 1e-10).map_err(|e| e.to_string())?;
    let d = triangle_apex();
    let has = |target: Point| found.iter().any(|p| p.distance(&target) <= 1e-10);
    ensure(has(d), || format!("D not recovered; found {found:?}"))?;
    ensure(has(-d), || {
        let far = equatorial_triangle()[2].distance(&-d);
        let mirror = if has(d.reflect_xy()) {
            "recovered"
        } else {
            "missing"
        };
        format!(
            "-D not recovered: its distance to (0, √3/2, 0) is {far:.6}, so it is not a fourth point; \
             extensions found: {}; mirror image (0, √3/6, √3/3 - 1) {mirror}",
            found.len()
        )
    })?;
    Ok(format!(
        "center spread {spread:.1e}; {} extensions found",
        found.len()
    ))
}

/// Minimum of the center spread over a grid of spacing `h` covering the
/// bounding box of `set` inflated by 1.
fn grid_spread_min(set: &[Point], h: f64) -> f64 {
    let (lo, hi) = inflated_box(set, 1.0);
    let steps = |k: usize| ((hi[k] - lo[k]) / h).ceil() as usize;
    let (nx, ny, nz) = (steps(0), steps(1), steps(2));
    let mut best = f64::INFINITY;
    for i in 0..=nx {
        let x = lo[0] + h * i as f64;
        for j in 0..=ny {
            let y = lo[1] + h * j as f64;
            for l in 0..=nz {
                let p = Point::new(x, y, lo[2] + h * l as f64);
                best = best.min(center_spread(set, &p));
            }
        }
    }
    best
}

fn no_center() -> Check {
    let mut lines = Vec::new();
    for (idx, d) in [0.097, 0.100, 0.103].into_iter().enumerate() {
        let started = Instant::now();
        let q = build_quintuple(d, 1e-10).map_err(|e| e.to_string())?;
        let ev = no_center_evidence(&q, 64, 1).map_err(|e| e.to_string())?;
        let mut note = format!("d={d}: {:.4}", ev.lower_estimate);
        if idx == 1 {
            let h = 0.01;
            let grid = grid_spread_min(&q.points, h);
            // The spread is 2-Lipschitz and every point of the box lies within
            // (√2/2 + 1/2)·h of a node.
            let floor = grid - 2.0 * (SQRT_2 / 2.0 + 0.5) * h;
            ensure(grid > 1e-3, || format!("grid minimum {grid:e}"))?;
            ensure(ev.lower_estimate <= grid + 1e-12, || {
                format!(
                    "search estimate {} above grid minimum {grid}",
                    ev.lower_estimate
                )
            })?;
            note += &format!(" (grid {grid:.4}, box floor {floor:.4})");
        }
        let elapsed = started.elapsed();
        ensure(ev.lower_estimate > 1e-3, || {
            format!("d = {d}: estimate {:e}", ev.lower_estimate)
        })?;
        ensure(elapsed < Duration::from_secs(30), || {
            format!("d = {d} took {elapsed:?}")
        })?;
        lines.push(note);
    }
    Ok(lines.join("; "))
}

fn section_tangency() -> Check {
    let q = build_quintuple(0.10, 1e-10).map_err(|e| e.to_string())?;
    let (lo, hi) = q.slab();
    let mut checked = 0;
    let mut worst: f64 = 0.0;
    for k in 0..20 {
        let z0 = lo + (hi - lo) * (k as f64 + 0.5) / 20.0;
        let (_, pairs) = section(&q.points, 0.5, z0);
        for p in pairs {
            let (a, b) = (q.points[p.i], q.points[p.j]);
            let unit = (a.distance(&b) - 1.0).abs() <= 1e-9;
            if unit && (a.z - b.z).abs() <= 0.5 && p.in_contact_band {
                checked += 1;
                worst = worst.max(p.gap.abs());
                ensure(p.gap.abs() <= 1e-9, || {
                    format!("z0 = {z0}: pair ({}, {}) gap {:e}", p.i, p.j, p.gap)
                })?;
            }
        }
    }
    ensure(checked > 0, || "no pair was checked".into())?;
    Ok(format!(
        "{checked} disc pairs over 20 heights, max gap {worst:.1e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fourteen-point certificate", fourteen_point_certificate),
        ("angular table", angular_table),
        ("nested-pair monotonicity", nested_pair_monotonicity),
        ("middle-point minimality", middle_point),
        ("kissing search n=14", search_reproduction),
        ("feasibility endpoints", endpoints),
        ("quintuple construction", quintuples),
        ("four-point equilateral sets", four_point_sets),
        ("no-center evidence", no_center),
        ("section tangency", section_tangency),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS AC{} {name}: {detail} [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL AC{} {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
