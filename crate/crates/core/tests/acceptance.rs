//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use hampreserve_core::experiments::{run_suite, SuiteReport};
use hampreserve_core::preserve::one_cycle_bound;

const SEED: u64 = 20_240_601;

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn suite(name: &str, trials: Option<usize>, jobs: usize) -> SuiteReport {
    match run_suite(name, trials, SEED, jobs) {
        Ok(r) => r,
        Err(e) => panic!("suite {name} could not start: {e}"),
    }
}

fn first_failures(r: &SuiteReport) -> String {
    r.failures().take(3).map(|t| format!("[{}: {}]", t.label, t.detail)).collect::<Vec<_>>().join(" ")
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn decomposition_equivalence() -> Outcome {
    let r = suite("pairs-exhaustive", None, jobs());
    let passed = r.passed() && r.wall_seconds < 300.0;
    Outcome {
        name: "decomposition iff conditions, all graphs n<=7 with 2-8 edges",
        passed,
        detail: format!("{}/{} cells, {:.1}s {}", r.pass_count(), r.trials.len(), r.wall_seconds, first_failures(&r)),
    }
}

fn max_pairs_formula() -> Outcome {
    let r = suite("pairs-max", Some(1000), jobs());
    Outcome {
        name: "maximum edge-pair count equals brute force, 1000 graphs n<=8",
        passed: r.passed() && r.trials.len() == 1000 && r.trials.iter().all(|t| t.n <= 8),
        detail: format!("{}/{} {}", r.pass_count(), r.trials.len(), first_failures(&r)),
    }
}

fn dirac_extraction() -> Outcome {
    // Serial, so per-instance times are not inflated by sharing cores.
    let r = suite("dirac-extraction", Some(500), 1);
    let at_200 = r.max_seconds_at(200);
    let in_range = r.trials.iter().all(|t| (10..=200).contains(&t.n));
    Outcome {
        name: "Dirac extraction, 500 instances n in [10,200], < 1s at n=200",
        passed: r.passed() && r.trials.len() == 500 && in_range && at_200.is_some_and(|t| t < 1.0),
        detail: format!("{}/{}, slowest at n=200 {:.3}s {}", r.pass_count(), r.trials.len(), at_200.unwrap_or(f64::NAN), first_failures(&r)),
    }
}

fn disjoint_paths() -> Outcome {
    let r = suite("disjoint-paths", Some(200), jobs());
    Outcome {
        name: "edge-disjoint Hamiltonian paths under the partition condition, 200 instances",
        passed: r.passed() && r.trials.len() == 200,
        detail: format!("{}/{} {}", r.pass_count(), r.trials.len(), first_failures(&r)),
    }
}

fn single_cycle_pipeline() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 2..=5 {
        let r = suite(&format!("preserve-k{k}"), Some(100), 1);
        let median = r.percentile(0.5);
        let sized = r.trials.iter().all(|t| t.n >= one_cycle_bound(k) && t.n <= 200);
        let families = ["dirac", "barbell n", "barbell-rich"]
            .iter()
            .all(|f| r.trials.iter().any(|t| t.label.contains(f)));
        let good = r.passed() && r.trials.len() == 100 && sized && families && median < 5.0;
        ok &= good;
        parts.push(format!("k={k} {}/{} median {:.3}s{}", r.pass_count(), r.trials.len(), median, if good { String::new() } else { format!(" {}", first_failures(&r)) }));
    }
    Outcome { name: "one preserving cycle, k=2..5, 100 verified instances each", passed: ok, detail: parts.join("; ") }
}

fn exact_preservation() -> Outcome {
    let r = suite("exact", Some(50), jobs());
    Outcome {
        name: "exact preservation, kappa in {2,3}, ell in {1,2,3}, 50 each",
        passed: r.passed() && r.trials.len() == 300,
        detail: format!("{}/{} {}", r.pass_count(), r.trials.len(), first_failures(&r)),
    }
}

fn order_seven_tightness() -> Outcome {
    let r = suite("n7-tightness", None, jobs());
    for note in r.notes.iter().filter(|n| !n.starts_with("order 6 failure")) {
        println!("      note: {note}");
    }
    Outcome {
        name: "every 2-connected Dirac graph of order 7 keeps 2-connectivity",
        passed: r.passed(),
        detail: format!("{}/{} classes {}", r.pass_count(), r.trials.len(), first_failures(&r)),
    }
}

fn degree_tightness() -> Outcome {
    let r = suite("degree-tightness", None, 1);
    Outcome {
        name: "identified-clique family has the stated degree and connectivity",
        passed: r.passed() && r.trials.len() == 3,
        detail: format!("{}/{} {}", r.pass_count(), r.trials.len(), first_failures(&r)),
    }
}

fn kappa_equivalence() -> Outcome {
    let r = suite("kappa-oracle", Some(2000), jobs());
    Outcome {
        name: "connectivity equals brute force, 2000 samples plus catalog n<=6",
        passed: r.passed() && r.trials.len() == 2000 + 5,
        detail: format!("{}/{} {}", r.pass_count(), r.trials.len(), first_failures(&r)),
    }
}

fn main() {
    let criteria: [fn() -> Outcome; 9] = [
        decomposition_equivalence,
        max_pairs_formula,
        dirac_extraction,
        disjoint_paths,
        single_cycle_pipeline,
        exact_preservation,
        order_seven_tightness,
        degree_tightness,
        kappa_equivalence,
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let o = c();
        failed += usize::from(!o.passed);
        println!(
            "{} {} ({:.1}s): {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
