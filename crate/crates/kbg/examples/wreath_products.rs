//! Wreath products: the conjugacy classes of G ≀ S_n of prime-power
//! element order are counted by the r̃(p,G)-th power of the symmetric
//! ÕGF, and the enumeration oracle confirms it.
//!
//! Run with: cargo run --release --example wreath_products

use kbg::families::{rank_profile, spec_r_tilde, wreath_r_tilde, GroupSpec};
use kbg::oracle::{rank_profile_bruteforce, realize, DEFAULT_CAP};

fn main() {
    // coefficient table of ÕGF(p, A, x)^r for a few inner ranks
    println!("colored-partition counts (p = 2): coefficient n of ATilde^r");
    print!("  n:");
    for n in 0..=8u64 {
        print!("{:7}", n);
    }
    println!();
    for r in [1u64, 2, 3, 5] {
        print!("r={}:", r);
        for n in 0..=8u64 {
            print!("{:7}", wreath_r_tilde(2, r, n).unwrap());
        }
        println!();
    }

    println!("\noracle confirmation on enumerable instances:");
    for spec in ["wreath(cyc:2,4)", "wreath(dic:2,3)", "wreath(sl2:3,2)"] {
        let spec: GroupSpec = spec.parse().unwrap();
        let primes = spec.support_primes();
        let table = realize(&spec, DEFAULT_CAP).unwrap();
        let enumerated = rank_profile_bruteforce(&table, &primes);
        let closed = rank_profile(&spec, Some(&primes)).unwrap();
        println!(
            "  {} (order {}): agree = {}",
            spec,
            table.order(),
            closed.agrees_on(&enumerated, &primes)
        );
        if let GroupSpec::Wreath(inner, _) = &spec {
            for &p in &primes {
                println!(
                    "    p={}: r~(inner) = {}, r~(wreath) = {}",
                    p,
                    spec_r_tilde(inner, p).unwrap(),
                    enumerated.r_tilde(p)
                );
            }
        }
    }
}
