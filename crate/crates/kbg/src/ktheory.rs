//! Assemble and render the K-theory statement from a rank profile:
//! K⁰(BG) = ℤ × ∏_p (ℤ_(p))^{r(p,G)} and K¹(BG) = 0.

use num::{BigUint, Zero};
use serde::{Deserialize, Serialize};

use crate::families::RankProfile;

/// Rendered form of K⁰(BG). The free rank is always 1, primes appear in
/// increasing order, zero local ranks are omitted, and K¹ is the zero
/// group for every finite G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KZeroDescriptor {
    pub group: String,
    pub free_rank: u32,
    /// (prime, rank) with rank ≥ 1 only, primes strictly increasing.
    pub local_ranks: Vec<(u64, BigUint)>,
}

impl KZeroDescriptor {
    pub fn from_profile(profile: &RankProfile) -> Self {
        let local_ranks = profile
            .ranks
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .map(|(&p, r)| (p, r.clone()))
            .collect();
        KZeroDescriptor { group: profile.group.clone(), free_rank: 1, local_ranks }
    }

    /// "Z x Z_(2)^1 x Z_(3)^2"; exponent 1 is printed explicitly and the
    /// trivial group renders as a bare "Z".
    pub fn render(&self) -> String {
        let mut out = String::from("Z");
        for (p, r) in &self.local_ranks {
            out.push_str(&format!(" x Z_({})^{}", p, r));
        }
        out
    }

    /// K¹(BG) is the zero group for every finite G.
    pub fn k_one(&self) -> &'static str {
        "0"
    }

    pub fn record(&self) -> KZeroRecord {
        KZeroRecord {
            group: self.group.clone(),
            free_rank: self.free_rank.to_string(),
            local_ranks: self
                .local_ranks
                .iter()
                .map(|(p, r)| (p.to_string(), r.to_string()))
                .collect(),
            k1: self.k_one().to_string(),
        }
    }
}

/// Machine-readable form; exact integers travel as decimal strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct KZeroRecord {
    pub group: String,
    pub free_rank: String,
    pub local_ranks: Vec<(String, String)>,
    pub k1: String,
}
