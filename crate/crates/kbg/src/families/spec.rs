//! Symbolic descriptors for the group families, with the parseable
//! string grammar used by the CLI:
//!
//! ```text
//! cyc:k        cyclic group of order k (k >= 1)
//! bincyc:k     cyclic group of order 2k (binary lift of cyc:k)
//! dic:n        binary dihedral (dicyclic) group of order 4n (n >= 1)
//! sym:n        symmetric group S_n
//! weylB:n      hyperoctahedral group, signed permutations of n points
//! weylD:n      even-sign subgroup of weylB:n (n >= 2)
//! sl2:q        SL(2, q) over the prime field F_q
//! binO         binary octahedral group (unit quaternions)
//! binI         binary icosahedral group (= SL(2,5))
//! exc:NAME     exceptional fixture entry (A4, S4, ..., WE8, H3, H4)
//! prod(a,b)    direct product
//! wreath(a,n)  wreath product a ≀ S_n
//! ```

use std::fmt;
use std::str::FromStr;

use num::BigUint;
use num::One;

use crate::arith::is_prime;

/// Names of the groups carried as fixture tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum ExceptionalName {
    A4,
    S4,
    S5,
    A5,
    BinT,
    BinI,
    BinO,
    WD4,
    WF4,
    WG2,
    WE6,
    WE7,
    WE8,
    H3,
    H4,
}

impl ExceptionalName {
    pub const ALL: [ExceptionalName; 15] = [
        ExceptionalName::A4,
        ExceptionalName::S4,
        ExceptionalName::S5,
        ExceptionalName::A5,
        ExceptionalName::BinT,
        ExceptionalName::BinI,
        ExceptionalName::BinO,
        ExceptionalName::WD4,
        ExceptionalName::WF4,
        ExceptionalName::WG2,
        ExceptionalName::WE6,
        ExceptionalName::WE7,
        ExceptionalName::WE8,
        ExceptionalName::H3,
        ExceptionalName::H4,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ExceptionalName::A4 => "A4",
            ExceptionalName::S4 => "S4",
            ExceptionalName::S5 => "S5",
            ExceptionalName::A5 => "A5",
            ExceptionalName::BinT => "BinT",
            ExceptionalName::BinI => "BinI",
            ExceptionalName::BinO => "BinO",
            ExceptionalName::WD4 => "WD4",
            ExceptionalName::WF4 => "WF4",
            ExceptionalName::WG2 => "WG2",
            ExceptionalName::WE6 => "WE6",
            ExceptionalName::WE7 => "WE7",
            ExceptionalName::WE8 => "WE8",
            ExceptionalName::H3 => "H3",
            ExceptionalName::H4 => "H4",
        }
    }

    /// The four entries whose ranks are fixture-only: no concrete
    /// representation is bundled, so the enumeration oracle refuses them.
    pub fn fixture_only(&self) -> bool {
        matches!(
            self,
            ExceptionalName::WE6 | ExceptionalName::WE7 | ExceptionalName::WE8 | ExceptionalName::H4
        )
    }
}

impl FromStr for ExceptionalName {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ExceptionalName::ALL
            .iter()
            .copied()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| SpecParseError::UnknownExceptional(s.to_string()))
    }
}

impl fmt::Display for ExceptionalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SpecParseError {
    #[error("unknown group spec {0:?}")]
    Unknown(String),
    #[error("unknown exceptional name {0:?}")]
    UnknownExceptional(String),
    #[error("bad parameter in {0:?}: {1}")]
    BadParameter(String, String),
    #[error("unbalanced parentheses in {0:?}")]
    Unbalanced(String),
}

/// Symbolic family descriptor. `Cyclic(k)` is the cyclic group of
/// order k; sequence indexing (Cyc_n = Z_{n+1}) lives in the series
/// layer, not here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    BinaryCyclic(u64),
    BinaryDihedral(u64),
    Symmetric(u32),
    WeylB(u32),
    WeylD(u32),
    SL2(u64),
    Wreath(Box<GroupSpec>, u32),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Exceptional(ExceptionalName),
}

impl GroupSpec {
    /// Validates the documented parameter ranges.
    pub fn validate(&self) -> Result<(), SpecParseError> {
        let bad = |what: &str, why: &str| {
            Err(SpecParseError::BadParameter(what.to_string(), why.to_string()))
        };
        match self {
            GroupSpec::Cyclic(k) | GroupSpec::BinaryCyclic(k) if *k == 0 => {
                bad(&self.to_string(), "order must be >= 1")
            }
            GroupSpec::BinaryDihedral(n) if *n == 0 => bad(&self.to_string(), "needs n >= 1"),
            GroupSpec::WeylD(n) if *n < 2 => {
                bad(&self.to_string(), "W(D_n) is degenerate below n = 2")
            }
            GroupSpec::SL2(q) if !is_prime(*q) => bad(&self.to_string(), "q must be prime"),
            GroupSpec::Wreath(inner, _) => inner.validate(),
            GroupSpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// |G| as an exact integer.
    pub fn order(&self) -> BigUint {
        match self {
            GroupSpec::Cyclic(k) => BigUint::from(*k),
            GroupSpec::BinaryCyclic(k) => BigUint::from(2 * *k),
            GroupSpec::BinaryDihedral(n) => BigUint::from(4 * *n),
            GroupSpec::Symmetric(n) => factorial(*n),
            GroupSpec::WeylB(n) => factorial(*n) << *n,
            GroupSpec::WeylD(n) => factorial(*n) << (*n - 1),
            GroupSpec::SL2(q) => {
                let q = BigUint::from(*q);
                &q * (&q * &q - BigUint::one())
            }
            GroupSpec::Wreath(inner, n) => inner.order().pow(*n) * factorial(*n),
            GroupSpec::Product(a, b) => a.order() * b.order(),
            GroupSpec::Exceptional(name) => BigUint::from(exceptional_order(*name)),
        }
    }

    /// Primes dividing |G|; the default prime set for rank profiles.
    pub fn support_primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = match self {
            GroupSpec::Cyclic(k) => prime_factors(*k),
            GroupSpec::BinaryCyclic(k) => prime_factors(2 * *k),
            GroupSpec::BinaryDihedral(n) => prime_factors(4 * *n),
            GroupSpec::Symmetric(n) => primes_up_to(*n as u64),
            GroupSpec::WeylB(n) | GroupSpec::WeylD(n) => {
                let mut v = primes_up_to(*n as u64);
                if !v.contains(&2) {
                    v.push(2);
                }
                v
            }
            GroupSpec::SL2(q) => prime_factors(q * (q * q - 1)),
            GroupSpec::Wreath(inner, n) => {
                let mut v = inner.support_primes();
                v.extend(primes_up_to(*n as u64));
                v
            }
            GroupSpec::Product(a, b) => {
                let mut v = a.support_primes();
                v.extend(b.support_primes());
                v
            }
            GroupSpec::Exceptional(name) => prime_factors(exceptional_order(*name)),
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub(crate) fn exceptional_order(name: ExceptionalName) -> u64 {
    match name {
        ExceptionalName::A4 | ExceptionalName::WG2 => 12,
        ExceptionalName::S4 | ExceptionalName::BinT => 24,
        ExceptionalName::A5 => 60,
        ExceptionalName::S5 | ExceptionalName::BinI | ExceptionalName::H3 => 120,
        ExceptionalName::BinO => 48,
        ExceptionalName::WD4 => 192,
        ExceptionalName::WF4 => 1152,
        ExceptionalName::WE6 => 51840,
        ExceptionalName::WE7 => 2903040,
        ExceptionalName::WE8 => 696729600,
        ExceptionalName::H4 => 14400,
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(k) => write!(f, "cyc:{}", k),
            GroupSpec::BinaryCyclic(k) => write!(f, "bincyc:{}", k),
            GroupSpec::BinaryDihedral(n) => write!(f, "dic:{}", n),
            GroupSpec::Symmetric(n) => write!(f, "sym:{}", n),
            GroupSpec::WeylB(n) => write!(f, "weylB:{}", n),
            GroupSpec::WeylD(n) => write!(f, "weylD:{}", n),
            GroupSpec::SL2(q) => write!(f, "sl2:{}", q),
            GroupSpec::Wreath(inner, n) => write!(f, "wreath({},{})", inner, n),
            GroupSpec::Product(a, b) => write!(f, "prod({},{})", a, b),
            GroupSpec::Exceptional(ExceptionalName::BinO) => write!(f, "binO"),
            GroupSpec::Exceptional(name) => write!(f, "exc:{}", name),
        }
    }
}

/// Split "a,b" at the top-level comma (commas inside parentheses are
/// part of the operands).
fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (ix, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..ix], &s[ix + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for GroupSpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_num = |tail: &str| -> Result<u64, SpecParseError> {
            tail.parse::<u64>()
                .map_err(|e| SpecParseError::BadParameter(s.to_string(), e.to_string()))
        };
        let spec = if let Some(tail) = s.strip_prefix("cyc:") {
            GroupSpec::Cyclic(parse_num(tail)?)
        } else if let Some(tail) = s.strip_prefix("bincyc:") {
            GroupSpec::BinaryCyclic(parse_num(tail)?)
        } else if let Some(tail) = s.strip_prefix("dic:") {
            GroupSpec::BinaryDihedral(parse_num(tail)?)
        } else if let Some(tail) = s.strip_prefix("sym:") {
            GroupSpec::Symmetric(parse_num(tail)? as u32)
        } else if let Some(tail) = s.strip_prefix("weylB:") {
            GroupSpec::WeylB(parse_num(tail)? as u32)
        } else if let Some(tail) = s.strip_prefix("weylD:") {
            GroupSpec::WeylD(parse_num(tail)? as u32)
        } else if let Some(tail) = s.strip_prefix("sl2:") {
            GroupSpec::SL2(parse_num(tail)?)
        } else if s == "binO" {
            GroupSpec::Exceptional(ExceptionalName::BinO)
        } else if s == "binI" {
            GroupSpec::Exceptional(ExceptionalName::BinI)
        } else if let Some(tail) = s.strip_prefix("exc:") {
            GroupSpec::Exceptional(tail.parse()?)
        } else if let Some(body) = s.strip_prefix("prod(").and_then(|t| t.strip_suffix(')')) {
            let (a, b) = split_top_comma(body).ok_or_else(|| SpecParseError::Unbalanced(s.into()))?;
            GroupSpec::Product(Box::new(a.parse()?), Box::new(b.parse()?))
        } else if let Some(body) = s.strip_prefix("wreath(").and_then(|t| t.strip_suffix(')')) {
            let (a, n) = split_top_comma(body).ok_or_else(|| SpecParseError::Unbalanced(s.into()))?;
            GroupSpec::Wreath(Box::new(a.parse()?), parse_num(n.trim())? as u32)
        } else {
            return Err(SpecParseError::Unknown(s.to_string()));
        };
        spec.validate()?;
        Ok(spec)
    }
}
