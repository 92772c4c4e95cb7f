//! The rank sequences as partition counts: r̃(p, S_n) via the knapsack
//! DP, the Weyl B convolution, the Weyl D even-parts refinement, and
//! the bundled OEIS fixtures as regression data.
//!
//! Run with: cargo run --release --example partition_sequences

use kbg::cli::oeis_regression;
use kbg::families::{weyl_b_r_tilde, weyl_d_r_tilde, PartitionTable};

fn main() {
    let t2 = PartitionTable::build(2, 16).unwrap();
    let t3 = PartitionTable::build(3, 16).unwrap();
    println!("n, r~(2,S_n), r~(3,S_n), r~(2,WB_n), r~(2,WD_n)");
    for n in 0..=16usize {
        let wd = if n >= 2 {
            weyl_d_r_tilde(2, n as u64).unwrap().to_string()
        } else {
            "-".into()
        };
        println!(
            "{:2}  {:6}  {:6}  {:8}  {:8}",
            n,
            t2.r_tilde(n),
            t3.r_tilde(n),
            weyl_b_r_tilde(2, n as u64).unwrap(),
            wd,
        );
    }

    println!("\nOEIS fixture regression (n = 0..63):");
    let report = oeis_regression(63).unwrap();
    for c in &report.checks {
        println!(
            "  {} {}: {}",
            if c.pass { "ok" } else { "FAIL" },
            c.sequence,
            c.description
        );
    }
}
