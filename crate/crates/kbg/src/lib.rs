//! Exact computation of the topological K-theory of classifying spaces
//! of finite groups.
//!
//! For a finite group G, K⁰(BG) is ℤ times a product of p-local
//! summands whose multiplicity r(p, G) counts the conjugacy classes of
//! elements of order p^d, d ≥ 1 (and K¹(BG) = 0). This crate computes
//! those ranks for the cyclic, binary cyclic, binary dihedral,
//! symmetric, hyperoctahedral (Weyl B/D) and wreath-product families,
//! together with fixture tables for the exceptional Weyl and Coxeter
//! groups, through three mutually checking layers:
//!
//! * [`families`] — closed-form formulas and partition-counting DPs;
//! * [`gfcat`] — the same numbers as coefficients of exact rational
//!   generating functions, with a coefficient-exact identity suite;
//! * [`oracle`] — brute-force enumeration of the groups themselves,
//!   conjugacy classes included.
//!
//! A fourth, floating-point layer ([`analytic`]) verifies the Mellin
//! closed form Γ(s)ζ(s+1)/(1−p^{−s}), probes the divergences of the
//! partition-series logarithm near roots of unity, regenerates the
//! complex-plane figure grids, and checks the log²n/(2 log p) growth of
//! the symmetric-group ranks.
//!
//! ## Running the examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release --example rank_tables
//! cargo run --release --example identity_suite
//! cargo run --release --example oracle_groups
//! ```
//!
//! The thin `kbg` binary exposes the same functionality as subcommands
//! (`rank`, `series`, `verify`, `oracle`, `figure`, `mellin`, `trend`).

pub mod analytic;
pub mod arith;
pub mod cli;
pub mod families;
pub mod gfcat;
pub mod ktheory;
pub mod oracle;
pub mod series;

pub use families::{GroupSpec, RankProfile};
pub use ktheory::KZeroDescriptor;
pub use series::{BiTruncSeries, TruncSeries};
