use petty::angular::{angular_sum_bound, regular_form};
use petty::{
    census, check_bounds, maximize_min_distance, verify_certificate, Config, Point, SearchConfig,
    Separation,
};

fn run(n: usize, seed: u64, freeze_poles: bool) -> petty::SearchReport {
    maximize_min_distance(&SearchConfig {
        n,
        restarts: 4,
        iterations: 20_000,
        seed,
        freeze_poles,
        ..SearchConfig::default()
    })
    .unwrap()
}

#[test]
fn separated_outputs_obey_zone_bounds_and_the_angular_sum() {
    let mut separated = 0;
    for n in [6, 9, 12, 13, 14] {
        for (seed, poles) in [(1, false), (2, true)] {
            let report = run(n, seed, poles);
            if report.achieved == Separation::Below1 {
                continue;
            }
            separated += 1;
            let best = &report.best;
            assert!(verify_certificate(best).unwrap().ok);
            let cen = census(best.points(), best.tolerance()).unwrap();
            assert!(check_bounds(&cen, true).is_empty(), "n = {n}: {:?}", cen);

            let band: Vec<Point> = best
                .points()
                .iter()
                .copied()
                .filter(|p| p.z.abs() <= 0.5 && p.r() > 0.0)
                .collect();
            if band.len() >= 2 {
                let sum = angular_sum_bound(&regular_form(&band).unwrap()).unwrap();
                assert!(sum.satisfied, "n = {n}: sum {}", sum.sum);
            }
        }
    }
    assert!(separated >= 6);
}

#[test]
fn reports_round_trip_through_json() {
    let report = run(10, 3, false);
    let text = serde_json::to_string(&report.to_json()).unwrap();
    let back = Config::from_json_str(&text).unwrap();
    assert_eq!(back.points(), report.best.points());
    assert_eq!(back.claim, report.best.claim);
    assert_eq!(
        verify_certificate(&back).unwrap().ok,
        verify_certificate(&report.best).unwrap().ok
    );
}

#[test]
fn same_seed_same_report() {
    let a = run(12, 9, false);
    let b = run(12, 9, false);
    assert!(a.same_outcome(&b));
    let c = run(12, 10, false);
    assert!(!a.same_outcome(&c));
}

#[test]
fn too_many_points_are_not_claimed_separated() {
    let report = run(20, 1, false);
    assert_eq!(report.achieved, Separation::Below1);
    assert_eq!(report.best.claim, petty::Claim::None);
}
