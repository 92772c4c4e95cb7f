//! Regenerate the complex-plane figure data: g(p, A, x, 1) sampled over
//! the open unit disk with both sums cut off at 20, one CSV per prime.
//!
//! Run with: cargo run --release --example figure_grid

use kbg::analytic::{figure_grid, grid_to_csv};

fn main() {
    for p in [2u64, 3] {
        let points = figure_grid(p, 20, 400).unwrap();
        let path = format!("g_p{}_grid.csv", p);
        std::fs::write(&path, grid_to_csv(&points)).unwrap();
        println!("wrote {} ({} samples inside the unit disk)", path, points.len());
    }
    println!("columns: re_x,im_x,re_g,im_g — plot re_g to see the divergence loci");
}
