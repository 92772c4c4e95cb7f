//! The Mellin transform of log ÕGF(p, A, e^{-t}) equals
//! Γ(s) ζ(s+1) / (1 − p^{-s}); compare the truncated double sum with
//! the closed form, tail bounds included.
//!
//! Run with: cargo run --release --example mellin_check

use kbg::analytic::{closed_form_f, mellin_report};
use num::complex::Complex64;

fn main() {
    println!("p  s   double-sum        closed-form       |err|      tail bound");
    for c in mellin_report(&[2, 3], &[2.0, 3.0], 60, 200_000, 1e-6).unwrap() {
        println!(
            "{}  {}  {:<16.12} {:<16.12} {:.2e}  {:.2e}  {}",
            c.p,
            c.s_re,
            c.lhs_re,
            c.rhs_re,
            c.abs_err,
            c.tail_bound,
            if c.pass { "ok" } else { "FAIL" }
        );
    }

    // the geometric factor 1/(1 - p^{-s}) against the p -> infinity limit
    let s = Complex64::new(2.0, 0.0);
    println!("\nclosed form at growing p (limit is Γ(2)ζ(3) ≈ 1.20206):");
    for p in [2u64, 3, 5, 11, 101] {
        println!("  p={:<4} F = {:.9}", p, closed_form_f(p, s).unwrap().re);
    }
}
