//! K⁰(BG) for the Platonic groups, the exceptional Weyl groups, and the
//! H₃/H₄ Coxeter groups, straight from the closed forms and fixtures.
//!
//! Run with: cargo run --release --example rank_tables

use kbg::families::{exceptional_profile, rank_profile, ExceptionalName, GroupSpec};
use kbg::ktheory::KZeroDescriptor;

fn main() {
    println!("exceptional groups (fixture tables):");
    for name in ExceptionalName::ALL {
        let profile = exceptional_profile(name);
        let d = KZeroDescriptor::from_profile(&profile);
        println!("  K0(B {:4}) = {:<44} K1 = {}", name.as_str(), d.render(), d.k_one());
    }

    println!("\nfamily instances (closed forms):");
    for spec in [
        "cyc:12",
        "bincyc:6",
        "dic:4",
        "sym:10",
        "weylB:6",
        "weylD:6",
        "prod(cyc:4,cyc:9)",
        "wreath(dic:2,3)",
    ] {
        let spec: GroupSpec = spec.parse().unwrap();
        let profile = rank_profile(&spec, None).unwrap();
        let d = KZeroDescriptor::from_profile(&profile);
        println!("  K0(B {:18}) = {}", spec.to_string(), d.render());
    }
}
