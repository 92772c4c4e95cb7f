//! Growth of the symmetric-group ranks: log r̃(p, S_n) approaches
//! log²n / (2 log p). The exact DP supplies the ranks; the ratios creep
//! toward 1.
//!
//! Run with: cargo run --release --example asymptotics

use kbg::analytic::asymptotic_trend;

fn main() {
    for p in [2u64, 3] {
        println!("p = {}:", p);
        let pts = asymptotic_trend(p, &[100, 1_000, 10_000, 100_000, 1_000_000]).unwrap();
        for t in &pts {
            println!(
                "  n = {:>8}   log r~ = {:>9.3}   ratio to log²n/(2 log p) = {:.5}",
                t.n, t.log_r_tilde, t.ratio
            );
        }
    }
}
