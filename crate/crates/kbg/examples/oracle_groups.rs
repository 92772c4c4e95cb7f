//! Enumerate a few groups from generators, list their conjugacy class
//! data, and compare the brute-force rank profile with the closed form.
//!
//! Run with: cargo run --release --example oracle_groups

use kbg::families::{rank_profile, GroupSpec};
use kbg::oracle::{conjugacy_classes, rank_profile_bruteforce, realize, DEFAULT_CAP};

fn main() {
    for spec in ["dic:2", "sl2:3", "binO", "weylD:4", "exc:WF4"] {
        let spec: GroupSpec = spec.parse().unwrap();
        let table = realize(&spec, DEFAULT_CAP).unwrap();
        let classes = conjugacy_classes(&table);
        println!("{}  order {}  classes {}", spec, table.order(), classes.len());
        let mut sizes: Vec<(u64, u64)> =
            classes.iter().map(|c| (c.element_order, c.size)).collect();
        sizes.sort_unstable();
        let line: Vec<String> = sizes
            .iter()
            .map(|(ord, size)| format!("{}x(ord {})", size, ord))
            .collect();
        println!("  classes: {}", line.join(", "));

        let primes = spec.support_primes();
        let enumerated = rank_profile_bruteforce(&table, &primes);
        for &p in &primes {
            print!("  r({}) = {}", p, enumerated.rank(p));
        }
        println!();
        match rank_profile(&spec, Some(&primes)) {
            Ok(closed) => {
                let agree = closed.agrees_on(&enumerated, &primes);
                println!("  closed form agrees: {}", agree);
            }
            Err(_) => println!("  (fixture-backed group)"),
        }
        println!();
    }
}
