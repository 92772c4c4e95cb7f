//! Bundled fixture tables: OEIS b-files for the regression sequences and
//! the exceptional rank profiles, both in plain text formats.
//!
//! b-file format: one `n a(n)` pair per line, `#` starts a comment.
//! Profile format: `NAME order=N p:r p:r ...` per line.

use std::collections::BTreeMap;

use num::BigUint;

use super::spec::ExceptionalName;
use super::{FamilyError, RankProfile};

pub const A018819: &str = include_str!("../../fixtures/A018819.txt");
pub const A062051: &str = include_str!("../../fixtures/A062051.txt");
pub const A006519: &str = include_str!("../../fixtures/A006519.txt");
pub const EXCEPTIONAL_PROFILES: &str = include_str!("../../fixtures/exceptional_profiles.txt");

/// Parse a b-file into (n, a(n)) rows, preserving file order.
pub fn parse_b_file(text: &str) -> Result<Vec<(u64, BigUint)>, FamilyError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let n = it
            .next()
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| FamilyError::Fixture(format!("line {}: bad index", lineno + 1)))?;
        let a = it
            .next()
            .and_then(|t| t.parse::<BigUint>().ok())
            .ok_or_else(|| FamilyError::Fixture(format!("line {}: bad value", lineno + 1)))?;
        rows.push((n, a));
    }
    Ok(rows)
}

/// Look up a(n) in parsed b-file rows.
pub fn b_file_value(rows: &[(u64, BigUint)], n: u64) -> Option<&BigUint> {
    rows.iter().find(|(m, _)| *m == n).map(|(_, a)| a)
}

/// Parse the exceptional profile table.
pub fn parse_exceptional_profiles(
    text: &str,
) -> Result<BTreeMap<ExceptionalName, RankProfile>, FamilyError> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let err = |msg: &str| FamilyError::Fixture(format!("line {}: {}", lineno + 1, msg));
        let name: ExceptionalName = it
            .next()
            .ok_or_else(|| err("missing name"))?
            .parse()
            .map_err(|_| err("unknown name"))?;
        let mut ranks = BTreeMap::new();
        for tok in it {
            let (p, r) = tok.split_once(':').ok_or_else(|| err("expected p:r"))?;
            let p: u64 = p.parse().map_err(|_| err("bad prime"))?;
            let r: BigUint = r.parse().map_err(|_| err("bad rank"))?;
            ranks.insert(p, r);
        }
        out.insert(
            name,
            RankProfile {
                group: name.to_string(),
                order: Some(BigUint::from(super::spec::exceptional_order(name))),
                ranks,
                total_classes: None,
            },
        );
    }
    Ok(out)
}
