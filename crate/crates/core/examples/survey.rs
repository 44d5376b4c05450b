//! Classifies every numerical semigroup up to a Frobenius bound and reports
//! whether any cyclotomic one fails to be a complete intersection.
//!
//! cargo run --release --example survey -- 25 4

use cyclotomic_sgp::survey::{run_survey, SurveyConfig};

pub fn run_example(max_frobenius: u64, workers: usize) -> Result<(), Box<dyn std::error::Error>> {
    let mut config = SurveyConfig::new(max_frobenius);
    config.workers = workers;
    let report = run_survey(&config)?;
    println!(
        "F <= {}: {} semigroups, {} symmetric, {} cyclotomic, {} complete intersections ({:.2}s)",
        report.bound,
        report.totals.semigroups,
        report.totals.symmetric,
        report.totals.cyclotomic,
        report.totals.ci,
        report.runtime_secs
    );
    for (f, t) in report.histogram.iter().filter(|(_, t)| t.cyclotomic > 0) {
        println!(
            "  F = {f:>3}: {:>7} semigroups, {:>4} cyclotomic",
            t.semigroups, t.cyclotomic
        );
    }
    if report.conjecture_holds() {
        println!("every cyclotomic semigroup in range is a complete intersection");
    } else {
        for r in &report.counterexamples {
            println!("counterexample: {:?}", r.min_gens);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let bound = args.next().map(|a| a.parse()).transpose()?.unwrap_or(15);
    let workers = args.next().map(|a| a.parse()).transpose()?.unwrap_or(1);
    run_example(bound, workers)
}
