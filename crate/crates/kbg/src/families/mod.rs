//! Closed-form rank counts r̃(p, G) for every group family, plus the
//! bundled fixture tables for the exceptional groups.
//!
//! Conventions: r(p, G) counts conjugacy classes whose elements have
//! order p^d with d ≥ 1; r̃(p, G) = r(p, G) + 1 also admits the identity
//! class. All values are exact big integers.

pub mod fixtures;
pub mod spec;
pub mod sweep;

use std::collections::BTreeMap;

use num::{BigUint, One, Zero};
use thiserror::Error;

use crate::arith::{is_prime, p_part};
pub use spec::{ExceptionalName, GroupSpec, SpecParseError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error(transparent)]
    Spec(#[from] SpecParseError),
}

/// Per-prime rank counts for one group: the computable content of
/// K⁰(BG).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    /// Display label of the group the profile belongs to.
    pub group: String,
    pub order: Option<BigUint>,
    /// prime → r(p, G); absent primes have rank 0.
    pub ranks: BTreeMap<u64, BigUint>,
    /// Total conjugacy class count when known (the oracle fills this in).
    pub total_classes: Option<u64>,
}

impl RankProfile {
    pub fn rank(&self, p: u64) -> BigUint {
        self.ranks.get(&p).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn r_tilde(&self, p: u64) -> BigUint {
        self.rank(p) + BigUint::one()
    }

    /// Equality of ranks over a given prime set (class totals ignored).
    pub fn agrees_on(&self, other: &RankProfile, primes: &[u64]) -> bool {
        primes.iter().all(|&p| self.rank(p) == other.rank(p))
    }
}

fn require_prime(p: u64) -> Result<(), FamilyError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(FamilyError::NotPrime(p))
    }
}

/// r̃(p, Z_{n+1}) = p^{ν_p(n+1)} (sequence-indexed: n is the position in
/// the cyclic family, the group has order n+1).
pub fn cyclic_r_tilde(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    cyclic_order_r_tilde(p, n + 1)
}

/// r̃ of the cyclic group of order k: p^{ν_p(k)}.
pub fn cyclic_order_r_tilde(p: u64, k: u64) -> Result<BigUint, FamilyError> {
    require_prime(p)?;
    if k == 0 {
        return Err(FamilyError::InvalidParameter("cyclic order 0".into()));
    }
    Ok(BigUint::from(p_part(k, p).expect("prime checked")))
}

/// r̃(p, Z_{2(n+1)}), the binary-cyclic sequence.
pub fn binary_cyclic_r_tilde(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    cyclic_order_r_tilde(p, 2 * (n + 1))
}

/// r̃(p, G × H) = r̃(p, G) · r̃(p, H): the order of a pair is the lcm of
/// the orders, and an lcm of p-powers is a p-power.
pub fn product_r_tilde(a: &BigUint, b: &BigUint) -> BigUint {
    a * b
}

/// Combine two profiles into the profile of the direct product.
pub fn product_profile(a: &RankProfile, b: &RankProfile) -> RankProfile {
    let mut primes: Vec<u64> = a.ranks.keys().chain(b.ranks.keys()).copied().collect();
    primes.sort_unstable();
    primes.dedup();
    let mut ranks = BTreeMap::new();
    for p in primes {
        let rt = product_r_tilde(&a.r_tilde(p), &b.r_tilde(p));
        let r = rt - BigUint::one();
        if !r.is_zero() {
            ranks.insert(p, r);
        }
    }
    RankProfile {
        group: format!("prod({},{})", a.group, b.group),
        order: match (&a.order, &b.order) {
            (Some(x), Some(y)) => Some(x * y),
            _ => None,
        },
        ranks,
        total_classes: None,
    }
}

/// r̃(p, BinDih_n) for the order-4n dicyclic group, computed from the
/// conjugacy-class inventory: identity; the central a^n; the paired
/// classes {a^m, a^{2n−m}}; and two classes of order-4 elements off the
/// cyclic part.
///
/// For p = 2 this is 3 + 2^{ν₂(2n)−1}; the source proposition's
/// simplified line ([`binary_dihedral_r_tilde_proposition_line`]) is
/// smaller by one and disagrees with enumeration.
pub fn binary_dihedral_r_tilde(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    require_prime(p)?;
    if n == 0 {
        return Err(FamilyError::InvalidParameter("binary dihedral needs n >= 1".into()));
    }
    let pp = p_part(2 * n, p).expect("prime checked");
    if p == 2 {
        // 1 (identity) + 1 (a^n) + 2 (the two order-4 classes) + paired
        // a^m classes of 2-power order: (2^{nu2(2n)} - 2)/2.
        Ok(BigUint::from(4 + (pp - 2) / 2))
    } else {
        Ok(BigUint::from(1 + (pp - 1) / 2))
    }
}

/// The source proposition's simplified r̃(2, BinDih_n) line,
/// 2 + 2^{ν₂(2n)−1}. Kept for reference; enumeration contradicts it
/// (see [`BINARY_DIHEDRAL_DISCREPANCY_NOTE`]). For odd p the
/// proposition agrees with the derivation.
pub fn binary_dihedral_r_tilde_proposition_line(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    let derived = binary_dihedral_r_tilde(p, n)?;
    if p == 2 {
        Ok(derived - BigUint::one())
    } else {
        Ok(derived)
    }
}

/// The documented binary-dihedral discrepancy, emitted by the oracle
/// sweep report.
pub const BINARY_DIHEDRAL_DISCREPANCY_NOTE: &str = "note: binary dihedral, p = 2: the simplified line r~(2, BinDih_n) = 2 + 1/(2|2n|_2) \
disagrees by 1 with the class-inventory derivation r(2, BinDih_n) = 1 + 2 + (r(2, Z_2n) - 1)/2, \
which gives r~ = 3 + 1/(2|2n|_2); enumeration confirms the derivation (the quaternion group \
dic:2 has 5 conjugacy classes, all of 2-power element order), so the derivation-consistent \
value is used.";

/// Table of partition counts q_p(0..=max): partitions into parts from
/// {1, p, p², ...}. q_p(n) = r̃(p, S_n). Unbounded-knapsack DP with big
/// integers; this is the performance-critical path for the asymptotic
/// checks, which reach n = 10⁶.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    p: u64,
    values: Vec<BigUint>,
}

impl PartitionTable {
    pub fn build(p: u64, max: usize) -> Result<Self, FamilyError> {
        require_prime(p)?;
        let mut dp = vec![BigUint::zero(); max + 1];
        dp[0] = BigUint::one();
        let mut part = 1usize;
        loop {
            for m in part..=max {
                let (lo, hi) = dp.split_at_mut(m);
                hi[0] += &lo[m - part];
            }
            match part.checked_mul(p as usize) {
                Some(next) if next <= max => part = next,
                _ => break,
            }
        }
        Ok(PartitionTable { p, values: dp })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// r̃(p, S_n) = number of partitions of n into p-power parts.
    pub fn r_tilde(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// r̃(p, S_n); convenience wrapper that builds the DP table up to n.
pub fn symmetric_r_tilde(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    Ok(PartitionTable::build(p, n as usize)?.r_tilde(n as usize).clone())
}

/// Partitions of n into 2-power parts with an even number of parts.
/// Boundary: 1 at n = 0 (the empty partition), 0 at n = 1.
pub fn even_parts_count(n: u64) -> BigUint {
    even_parts_table(n as usize)[n as usize].clone()
}

/// DP tracking the parity of the number of parts.
pub(crate) fn even_parts_table(max: usize) -> Vec<BigUint> {
    // dp[m] = (even-count, odd-count)
    let mut dp = vec![(BigUint::zero(), BigUint::zero()); max + 1];
    dp[0].0 = BigUint::one();
    let mut part = 1usize;
    while part <= max.max(1) {
        for m in part..=max {
            let (lo, hi) = dp.split_at_mut(m);
            let (ref prev_even, ref prev_odd) = lo[m - part];
            hi[0].0 += prev_odd;
            hi[0].1 += prev_even;
        }
        match part.checked_mul(2) {
            Some(next) if next <= max => part = next,
            _ => break,
        }
    }
    dp.into_iter().map(|(e, _)| e).collect()
}

/// Partitions of n into 2-power parts all of which exceed 1; halving the
/// parts shows this equals r̃(2, S_{n/2}) for even n and 0 for odd n.
pub fn even_lengths_count(n: u64) -> BigUint {
    if n % 2 == 0 {
        symmetric_r_tilde(2, n / 2).expect("2 is prime")
    } else {
        BigUint::zero()
    }
}

fn even_lengths_from_table(table2: &PartitionTable, n: u64) -> BigUint {
    debug_assert_eq!(table2.prime(), 2);
    if n % 2 == 0 {
        table2.r_tilde((n / 2) as usize).clone()
    } else {
        BigUint::zero()
    }
}

/// r̃(p, W(B_n)): for p = 2 the convolution Σ r̃(2,S_m)·r̃(2,S_{n−m})
/// over pairs of partitions (positive and negative cycles); for odd p
/// a signed permutation of p-power order has no negative cycles and the
/// count reduces to the symmetric group.
pub fn weyl_b_r_tilde(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    require_prime(p)?;
    let n = n as usize;
    if p == 2 {
        let t = PartitionTable::build(2, n)?;
        Ok((0..=n).map(|m| t.r_tilde(m) * t.r_tilde(n - m)).sum())
    } else {
        symmetric_r_tilde(p, n as u64)
    }
}

/// r̃(p, W(D_n)) for n ≥ 2. For p = 2 the negative-cycle partition must
/// have an even number of parts, plus the doubled classes of all-even
/// positive cycle type; for odd p only the symmetric-group term
/// survives.
pub fn weyl_d_r_tilde(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    require_prime(p)?;
    if n < 2 {
        return Err(FamilyError::InvalidParameter("W(D_n) needs n >= 2".into()));
    }
    weyl_d_r_tilde_unchecked(p, n)
}

/// The same formula without the n ≥ 2 guard; the series layer uses this
/// to fill low-degree coefficients of the D-family generating function.
pub(crate) fn weyl_d_r_tilde_unchecked(p: u64, n: u64) -> Result<BigUint, FamilyError> {
    let n = n as usize;
    if p == 2 {
        let t = PartitionTable::build(2, n)?;
        let ep = even_parts_table(n);
        let conv: BigUint = (0..=n).map(|m| t.r_tilde(m) * &ep[n - m]).sum();
        Ok(conv + even_lengths_from_table(&t, n as u64))
    } else {
        symmetric_r_tilde(p, n as u64)
    }
}

/// r̃(p, G ≀ S_n) given r̃(p, G): the number of r̃(p,G)-colored
/// partitions of n into p-power parts (each part carries the conjugacy
/// class of G decorating its cycle).
pub fn wreath_r_tilde(p: u64, inner_r_tilde: u64, n: u64) -> Result<BigUint, FamilyError> {
    require_prime(p)?;
    let n = n as usize;
    let mut dp = vec![BigUint::zero(); n + 1];
    dp[0] = BigUint::one();
    let mut part = 1usize;
    loop {
        for _ in 0..inner_r_tilde {
            for m in part..=n {
                let (lo, hi) = dp.split_at_mut(m);
                hi[0] += &lo[m - part];
            }
        }
        match part.checked_mul(p as usize) {
            Some(next) if next <= n => part = next,
            _ => break,
        }
    }
    Ok(dp[n].clone())
}

/// The bundled fixture profile for an exceptional group.
pub fn exceptional_profile(name: ExceptionalName) -> RankProfile {
    let table = fixtures::parse_exceptional_profiles(fixtures::EXCEPTIONAL_PROFILES)
        .expect("bundled fixture parses");
    table[&name].clone()
}

/// Closed-form (or fixture) rank profile for a group spec, over the
/// given primes (defaults to the primes dividing |G|).
pub fn rank_profile(spec: &GroupSpec, primes: Option<&[u64]>) -> Result<RankProfile, FamilyError> {
    let default = spec.support_primes();
    let primes: Vec<u64> = match primes {
        Some(ps) => ps.to_vec(),
        None => default,
    };
    for &p in &primes {
        require_prime(p)?;
    }
    let mut ranks = BTreeMap::new();
    for &p in &primes {
        let rt = spec_r_tilde(spec, p)?;
        let r = rt - BigUint::one();
        if !r.is_zero() {
            ranks.insert(p, r);
        }
    }
    Ok(RankProfile {
        group: spec.to_string(),
        order: Some(spec.order()),
        ranks,
        total_classes: None,
    })
}

/// r̃(p, G) for any spec, dispatching to the family formulas.
pub fn spec_r_tilde(spec: &GroupSpec, p: u64) -> Result<BigUint, FamilyError> {
    match spec {
        GroupSpec::Cyclic(k) => cyclic_order_r_tilde(p, *k),
        GroupSpec::BinaryCyclic(k) => cyclic_order_r_tilde(p, 2 * *k),
        GroupSpec::BinaryDihedral(n) => binary_dihedral_r_tilde(p, *n),
        GroupSpec::Symmetric(n) => symmetric_r_tilde(p, *n as u64),
        GroupSpec::WeylB(n) => weyl_b_r_tilde(p, *n as u64),
        GroupSpec::WeylD(n) => weyl_d_r_tilde(p, *n as u64),
        GroupSpec::Wreath(inner, n) => {
            let inner_rt: u64 = spec_r_tilde(inner, p)?
                .try_into()
                .map_err(|_| FamilyError::InvalidParameter("inner r~ too large".into()))?;
            wreath_r_tilde(p, inner_rt, *n as u64)
        }
        GroupSpec::Product(a, b) => {
            Ok(product_r_tilde(&spec_r_tilde(a, p)?, &spec_r_tilde(b, p)?))
        }
        GroupSpec::SL2(q) => {
            // No closed form in the source material; SL(2,3) and SL(2,5)
            // are the binary tetrahedral/icosahedral fixtures.
            match q {
                3 => Ok(exceptional_profile(ExceptionalName::BinT).r_tilde(p)),
                5 => Ok(exceptional_profile(ExceptionalName::BinI).r_tilde(p)),
                _ => Err(FamilyError::InvalidParameter(format!(
                    "no closed form for sl2:{}; use the enumeration oracle",
                    q
                ))),
            }
        }
        GroupSpec::Exceptional(name) => Ok(exceptional_profile(*name).r_tilde(p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn cyclic_values() {
        assert_eq!(cyclic_r_tilde(2, 7).unwrap(), b(8));
        assert_eq!(cyclic_r_tilde(5, 3).unwrap(), b(1));
        assert!(cyclic_r_tilde(4, 3).is_err());
        // footnote sequence: r~(2, Cyc_n) = 2^{nu2(n+1)}
        let expect = [1u64, 2, 1, 4, 1, 2, 1, 8, 1, 2, 1, 4];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(cyclic_r_tilde(2, n as u64).unwrap(), b(*e));
        }
    }

    #[test]
    fn binary_cyclic_values() {
        assert_eq!(binary_cyclic_r_tilde(2, 0).unwrap(), b(2));
        assert_eq!(binary_cyclic_r_tilde(3, 2).unwrap(), b(3));
        assert_eq!(binary_cyclic_r_tilde(3, 0).unwrap(), b(1));
    }

    #[test]
    fn binary_dihedral_values() {
        // p=3, n=3: 1 + (3 - 1)/2 = 2
        assert_eq!(binary_dihedral_r_tilde(3, 3).unwrap(), b(2));
        // quaternion group: 5 classes, all 2-power order
        assert_eq!(binary_dihedral_r_tilde(2, 2).unwrap(), b(5));
        assert_eq!(binary_dihedral_r_tilde(5, 1).unwrap(), b(1));
        assert!(binary_dihedral_r_tilde(2, 0).is_err());
        // the proposition's simplified line sits one below at p=2
        assert_eq!(binary_dihedral_r_tilde_proposition_line(2, 2).unwrap(), b(4));
        assert_eq!(
            binary_dihedral_r_tilde_proposition_line(3, 3).unwrap(),
            binary_dihedral_r_tilde(3, 3).unwrap()
        );
    }

    #[test]
    fn symmetric_against_exhaustive_listing() {
        // Independent oracle: enumerate partitions into p-power parts
        // recursively, counting each multiset once.
        fn count(n: u64, max_part: u64, p: u64) -> u64 {
            if n == 0 {
                return 1;
            }
            let mut total = 0;
            let mut part = 1u64;
            while part <= n.min(max_part) {
                total += count(n - part, part, p);
                part *= p;
            }
            total
        }
        for p in [2u64, 3, 5] {
            for n in 0..=24u64 {
                assert_eq!(
                    symmetric_r_tilde(p, n).unwrap(),
                    b(count(n, n.max(1), p)),
                    "p={} n={}",
                    p,
                    n
                );
            }
        }
        // frozen prefix, p=2
        let expect = [1u64, 1, 2, 2, 4, 4, 6, 6, 10];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(symmetric_r_tilde(2, n as u64).unwrap(), b(*e));
        }
        // p=3, n=3: partitions 3 and 1+1+1
        assert_eq!(symmetric_r_tilde(3, 3).unwrap(), b(2));
    }

    #[test]
    fn symmetric_nondecreasing() {
        for p in [2u64, 3, 5] {
            let t = PartitionTable::build(p, 200).unwrap();
            for n in 1..=200usize {
                assert!(t.r_tilde(n) >= t.r_tilde(n - 1), "p={} n={}", p, n);
            }
        }
    }

    #[test]
    fn weyl_b_values() {
        assert_eq!(weyl_b_r_tilde(2, 2).unwrap(), b(5));
        assert_eq!(weyl_b_r_tilde(3, 4).unwrap(), symmetric_r_tilde(3, 4).unwrap());
        assert_eq!(weyl_b_r_tilde(2, 0).unwrap(), b(1));
    }

    #[test]
    fn weyl_d_values() {
        assert_eq!(weyl_d_r_tilde(2, 2).unwrap(), b(4));
        assert_eq!(weyl_d_r_tilde(2, 3).unwrap(), b(4));
        // W(D4): 10 classes of 2-power order, 1 of 3-power order
        assert_eq!(weyl_d_r_tilde(2, 4).unwrap(), b(11));
        assert_eq!(weyl_d_r_tilde(3, 4).unwrap(), symmetric_r_tilde(3, 4).unwrap());
        assert!(weyl_d_r_tilde(2, 1).is_err());
    }

    #[test]
    fn even_parts_and_lengths() {
        assert_eq!(even_parts_count(0), b(1));
        assert_eq!(even_parts_count(1), b(0));
        assert_eq!(even_parts_count(2), b(1));
        // exhaustive: 4 = 2+2 = 1+1+1+1 (even counts), 4 and 2+1+1 are odd
        assert_eq!(even_parts_count(4), b(2));
        let t = PartitionTable::build(2, 64).unwrap();
        // half identity for n >= 2
        for n in 2..=64u64 {
            assert_eq!(
                even_parts_count(n) * b(2),
                t.r_tilde(n as usize).clone(),
                "n={}",
                n
            );
        }
        assert_eq!(even_lengths_count(3), b(0));
        assert_eq!(even_lengths_count(6), t.r_tilde(3).clone());
        assert_eq!(even_lengths_from_table(&t, 6), even_lengths_count(6));
    }

    #[test]
    fn wreath_values() {
        // inner Z2 at p=2 realizes W(B_n)
        for n in 0..=12u64 {
            assert_eq!(
                wreath_r_tilde(2, 2, n).unwrap(),
                weyl_b_r_tilde(2, n).unwrap(),
                "n={}",
                n
            );
        }
        // trivial inner: first power
        for n in 0..=12u64 {
            assert_eq!(wreath_r_tilde(3, 1, n).unwrap(), symmetric_r_tilde(3, n).unwrap());
        }
        // inner SL(2,3) (r~(2)=3), n=2, p=2
        assert_eq!(wreath_r_tilde(2, 3, 2).unwrap(), b(9));
    }

    #[test]
    fn exceptional_values() {
        let bino = exceptional_profile(ExceptionalName::BinO);
        assert_eq!(bino.rank(2), b(5));
        assert_eq!(bino.rank(3), b(1));
        let we8 = exceptional_profile(ExceptionalName::WE8);
        assert_eq!(we8.rank(2), b(31));
        assert_eq!(we8.rank(3), b(6));
        assert_eq!(we8.rank(5), b(2));
        assert_eq!(we8.rank(7), b(1));
        let h4 = exceptional_profile(ExceptionalName::H4);
        assert_eq!(h4.rank(2), b(6));
        assert_eq!(h4.rank(3), b(2));
        assert_eq!(h4.rank(5), b(5));
    }

    #[test]
    fn product_rule() {
        // A4 x Z2 at p = 2 doubles r~
        let a4 = exceptional_profile(ExceptionalName::A4);
        let z2 = rank_profile(&GroupSpec::Cyclic(2), None).unwrap();
        let prod = product_profile(&a4, &z2);
        assert_eq!(prod.r_tilde(2), a4.r_tilde(2) * b(2));
        assert_eq!(prod.r_tilde(3), a4.r_tilde(3));
        // G x trivial
        let triv = rank_profile(&GroupSpec::Cyclic(1), None).unwrap();
        let same = product_profile(&a4, &triv);
        assert_eq!(same.ranks, a4.ranks);
        // product of cyclics: coefficient formula
        let spec: GroupSpec = "prod(cyc:4,cyc:6)".parse().unwrap();
        let prof = rank_profile(&spec, None).unwrap();
        assert_eq!(prof.r_tilde(2), b(8)); // 4 * 2
        assert_eq!(prof.r_tilde(3), b(3));
    }

    #[test]
    fn profile_dispatch() {
        let prof = rank_profile(&"wreath(sl2:3,2)".parse().unwrap(), None).unwrap();
        assert_eq!(prof.r_tilde(2), b(9));
        assert_eq!(prof.r_tilde(3), b(6));
        assert_eq!(prof.order, Some(BigUint::from(1152u32)));
        // requested prime not dividing the order: rank 0, omitted
        let prof = rank_profile(&"cyc:8".parse().unwrap(), Some(&[2, 5])).unwrap();
        assert_eq!(prof.rank(5), b(0));
        assert!(!prof.ranks.contains_key(&5));
        assert!(rank_profile(&"cyc:8".parse().unwrap(), Some(&[6])).is_err());
    }
}
