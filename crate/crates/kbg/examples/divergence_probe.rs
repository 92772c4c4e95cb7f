//! g(p, A, x, 1) diverges as x approaches any root of unity of order
//! coprime to p; watch |g| climb along rays toward ζ_l.
//!
//! Run with: cargo run --release --example divergence_probe

use kbg::analytic::divergence_probe;

fn main() {
    let radii = [0.9, 0.99, 0.999];
    println!("|g(p, r·ζ_l, cutoff 20)| along r = {:?}", radii);
    for (p, l) in [(2u64, 3u64), (2, 5), (3, 2), (3, 4), (2, 1)] {
        let mags = divergence_probe(p, l, &radii, 20).unwrap();
        let increasing = mags.windows(2).all(|w| w[0] < w[1]);
        println!(
            "  p={} l={}:  {:.6}  {:.6}  {:.6}   increasing: {}",
            p, l, mags[0], mags[1], mags[2], increasing
        );
    }
    // the hypothesis gcd(l, p) = 1 is enforced
    assert!(divergence_probe(2, 4, &radii, 20).is_err());
    println!("(l sharing a factor with p is rejected, as the lemma requires)");
}
