//! One line per acceptance criterion. Exits nonzero if any fails.
//! `ACCEPTANCE_ONLY=3,7` restricts the run.

use std::process::ExitCode;

use signed_hom::cli::suite::{criterion, CRITERIA};

const SEED: u64 = 42;

fn main() -> ExitCode {
    let only: Option<Vec<usize>> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut failed = 0;
    for k in 1..=CRITERIA.len() {
        if only.as_ref().is_some_and(|o| !o.contains(&k)) {
            continue;
        }
        let e = criterion(k, SEED);
        let status = if e.pass { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {k:>2} {:<24} {} | expected: {} | computed: {} | {} ms",
            e.name,
            e.instance,
            e.expected,
            e.computed,
            e.elapsed_ms.unwrap_or(0)
        );
        if !e.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
