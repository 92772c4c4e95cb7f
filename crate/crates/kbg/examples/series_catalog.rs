//! Tour of the generating-function catalog: exact coefficients of the
//! rank series and the bivariate objects behind the identities.
//!
//! Run with: cargo run --release --example series_catalog

use kbg::gfcat::{build_series, BuiltSeries, SeriesFamilyId};
use num::{BigRational, One};

fn show(label: &str, id: SeriesFamilyId, p: u64, degree: usize) {
    match build_series(id, p, degree).unwrap() {
        BuiltSeries::Uni(s) => {
            let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            println!("{:<26} [{}]", label, coeffs.join(", "));
        }
        BuiltSeries::Bi(s) => {
            let (nx, nv) = s.bounds();
            println!("{:<26} bivariate, bounds ({}, {})", label, nx, nv);
        }
    }
}

fn main() {
    show("CycTilde p=3", SeriesFamilyId::CycTilde, 3, 8);
    show("BinCycTilde p=2", SeriesFamilyId::BinCycTilde, 2, 8);
    show("BinDihTilde p=2", SeriesFamilyId::BinDihTilde, 2, 8);
    show("ATilde p=2", SeriesFamilyId::ATilde, 2, 8);
    show("AOgf p=2", SeriesFamilyId::AOgf, 2, 8);
    show("BTilde p=2", SeriesFamilyId::BTilde, 2, 8);
    show("DTilde p=2", SeriesFamilyId::DTilde, 2, 8);
    show("WreathTilde(3) p=2", SeriesFamilyId::WreathTilde(3), 2, 8);
    show("BiCycTilde p=2", SeriesFamilyId::BiCycTilde, 2, 8);
    show("GSeries", SeriesFamilyId::GSeries, 2, 8);
    show("LittleG p=2", SeriesFamilyId::LittleG, 2, 8);

    // the G(x, u) slices at u = ±1: full count and the 1 - x collapse
    if let BuiltSeries::Bi(g) = build_series(SeriesFamilyId::GSeries, 2, 8).unwrap() {
        let at_one = g.eval_second(&BigRational::one());
        let at_minus = g.eval_second(&(-BigRational::one()));
        println!("\nG(x, 1)  = {:?}", at_one.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
        println!("G(x, -1) = {:?}", at_minus.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
}
