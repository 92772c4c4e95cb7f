//! Run the nine-identity generating-function suite coefficient-exactly.
//!
//! Run with: cargo run --release --example identity_suite

use kbg::gfcat::{run_identity_suite, CheckOutcome};

fn main() {
    for p in [2u64, 3, 5] {
        let report = run_identity_suite(p, 64).unwrap();
        println!("p = {}, degree {}:", report.p, report.degree);
        for c in &report.checks {
            match &c.outcome {
                CheckOutcome::Pass => println!("  ok   {} {}", c.index, c.name),
                CheckOutcome::Skipped { reason } => {
                    println!("  skip {} {} ({})", c.index, c.name, reason)
                }
                CheckOutcome::Fail { location, expected, actual } => println!(
                    "  FAIL {} {} at {}: expected {} got {}",
                    c.index, c.name, location, expected, actual
                ),
            }
        }
        assert!(report.all_pass());
    }
    println!("all identities hold coefficient-exactly");
}
