//! Command-line surface: stable, scriptable access to every layer.
//!
//! Exit codes: 0 success (all requested checks pass), 1 verification
//! failure, 2 argument parse error, 3 bad or unrealizable group spec,
//! 4 enumeration cap exceeded, 5 domain error. Exact integers in JSON
//! output are decimal strings so consumers never lose precision.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analytic;
use crate::families::{self, fixtures, sweep, GroupSpec, PartitionTable, RankProfile};
use crate::gfcat::{self, BuiltSeries, CheckOutcome, SeriesFamilyId};
use crate::ktheory::KZeroDescriptor;
use crate::oracle;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BAD_SPEC: i32 = 3;
pub const EXIT_CAP_EXCEEDED: i32 = 4;
pub const EXIT_DOMAIN: i32 = 5;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV_VAR: &str = "KBG_ORACLE_CAP";

#[derive(Debug, Parser)]
#[command(name = "kbg", version, about = "rank data for the K-theory of classifying spaces of finite groups", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form (or fixture) rank profile and the rendered K-groups.
    Rank(RankArgs),
    /// Coefficients of one generating function from the catalog.
    Series(SeriesArgs),
    /// Run a verification suite (identities | oracle | oeis).
    Verify(VerifyArgs),
    /// Enumerate a group and report its brute-force rank profile.
    Oracle(OracleArgs),
    /// Sample g(p, A, x, 1) over the unit disk and emit the CSV grid.
    Figure(FigureArgs),
    /// Compare the truncated Mellin double sum with Γ(s)ζ(s+1)/(1-p^{-s}).
    Mellin(MellinArgs),
    /// Growth of log r̃(p, S_n) against log²n/(2 log p).
    Trend(TrendArgs),
}

#[derive(Debug, Args)]
struct RankArgs {
    /// Group spec, e.g. sym:5, dic:3, exc:WE8, wreath(dic:2,3).
    #[arg(long)]
    group: String,
    /// Comma-separated primes (defaults to the primes dividing |G|).
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    /// cyc | bincyc | bindih | a | aogf | b | d | bicyc | g | littleg | wreath:R
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long, default_value_t = 16)]
    degree: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// identities | oracle | oeis
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long, default_value_t = 64)]
    degree: usize,
    /// Enumeration cap for the oracle suite.
    #[arg(long)]
    cap: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    group: String,
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Enumeration cap (overrides KBG_ORACLE_CAP and the 10^6 default).
    #[arg(long)]
    cap: Option<u64>,
    /// Also list the conjugacy classes (size and element order).
    #[arg(long)]
    classes: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long, default_value_t = 20)]
    cutoff: usize,
    /// Grid subdivisions per axis (points per axis = resolution + 1).
    #[arg(long, default_value_t = 400)]
    resolution: usize,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Debug, Args)]
struct MellinArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3])]
    p: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_values_t = [2.0f64, 3.0])]
    s: Vec<f64>,
    #[arg(long, default_value_t = 60)]
    jmax: usize,
    #[arg(long, default_value_t = 200_000)]
    kmax: usize,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct TrendArgs {
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long, value_delimiter = ',', default_values_t = [1_000u64, 10_000, 100_000, 1_000_000])]
    checkpoints: Vec<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Entry point used by the binary and by tests: parses `argv`, writes
/// results to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/version output with exit code 0
            if e.exit_code() == 0 {
                let _ = write!(out, "{}", e);
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e);
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Rank(a) => cmd_rank(a, out),
        Command::Series(a) => cmd_series(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Oracle(a) => cmd_oracle(a, out),
        Command::Figure(a) => cmd_figure(a, out),
        Command::Mellin(a) => cmd_mellin(a, out),
        Command::Trend(a) => cmd_trend(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

struct CmdError {
    code: i32,
    message: String,
}

impl CmdError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CmdError { code, message: message.into() }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::new(EXIT_DOMAIN, format!("io error: {}", e))
    }
}

impl From<oracle::OracleError> for CmdError {
    fn from(e: oracle::OracleError) -> Self {
        let code = match &e {
            oracle::OracleError::CapExceeded { .. } => EXIT_CAP_EXCEEDED,
            oracle::OracleError::FixtureOnly(_) | oracle::OracleError::InvalidParameter(_) => {
                EXIT_BAD_SPEC
            }
            oracle::OracleError::RepresentationMismatch(_) => EXIT_BAD_SPEC,
        };
        CmdError::new(code, e.to_string())
    }
}

impl From<families::FamilyError> for CmdError {
    fn from(e: families::FamilyError) -> Self {
        CmdError::new(EXIT_DOMAIN, e.to_string())
    }
}

impl From<analytic::AnalyticError> for CmdError {
    fn from(e: analytic::AnalyticError) -> Self {
        CmdError::new(EXIT_DOMAIN, e.to_string())
    }
}

impl From<gfcat::GfcatError> for CmdError {
    fn from(e: gfcat::GfcatError) -> Self {
        CmdError::new(EXIT_DOMAIN, e.to_string())
    }
}

fn parse_spec(s: &str) -> Result<GroupSpec, CmdError> {
    s.parse::<GroupSpec>()
        .map_err(|e| CmdError::new(EXIT_BAD_SPEC, e.to_string()))
}

fn effective_cap(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
    })
    .unwrap_or(oracle::DEFAULT_CAP)
}

fn ranks_as_strings(profile: &RankProfile, primes: &[u64]) -> BTreeMap<String, String> {
    primes
        .iter()
        .map(|&p| (p.to_string(), profile.rank(p).to_string()))
        .collect()
}

/// Machine record for rank/oracle profiles; exact integers as strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProfileRecord {
    pub group: String,
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<String>,
    pub r: BTreeMap<String, String>,
    pub k0: String,
    pub k1: String,
}

fn profile_record(profile: &RankProfile, primes: &[u64]) -> ProfileRecord {
    let desc = KZeroDescriptor::from_profile(profile);
    ProfileRecord {
        group: profile.group.clone(),
        order: profile.order.as_ref().map(|o| o.to_string()),
        classes: profile.total_classes.map(|c| c.to_string()),
        r: ranks_as_strings(profile, primes),
        k0: desc.render(),
        k1: desc.k_one().to_string(),
    }
}

fn cmd_rank<W: Write>(a: RankArgs, out: &mut W) -> Result<i32, CmdError> {
    let spec = parse_spec(&a.group)?;
    let primes = if a.primes.is_empty() { None } else { Some(a.primes.as_slice()) };
    let profile = families::rank_profile(&spec, primes)
        .map_err(|e| CmdError::new(EXIT_DOMAIN, e.to_string()))?;
    let used: Vec<u64> = match primes {
        Some(ps) => ps.to_vec(),
        None => spec.support_primes(),
    };
    match a.format {
        Format::Text => {
            writeln!(out, "{}", KZeroDescriptor::from_profile(&profile).render())?;
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&profile_record(&profile, &used)).unwrap())?;
        }
        Format::Csv => {
            writeln!(out, "prime,rank")?;
            for p in &used {
                writeln!(out, "{},{}", p, profile.rank(*p))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_family(s: &str) -> Result<SeriesFamilyId, CmdError> {
    let id = match s {
        "cyc" => SeriesFamilyId::CycTilde,
        "bincyc" => SeriesFamilyId::BinCycTilde,
        "bindih" => SeriesFamilyId::BinDihTilde,
        "a" => SeriesFamilyId::ATilde,
        "aogf" => SeriesFamilyId::AOgf,
        "b" => SeriesFamilyId::BTilde,
        "d" => SeriesFamilyId::DTilde,
        "bicyc" => SeriesFamilyId::BiCycTilde,
        "g" => SeriesFamilyId::GSeries,
        "littleg" => SeriesFamilyId::LittleG,
        other => {
            if let Some(r) = other.strip_prefix("wreath:") {
                let r: u64 = r
                    .parse()
                    .map_err(|_| CmdError::new(EXIT_USAGE, format!("bad wreath r~ in {:?}", other)))?;
                SeriesFamilyId::WreathTilde(r)
            } else {
                return Err(CmdError::new(EXIT_USAGE, format!("unknown series family {:?}", other)));
            }
        }
    };
    Ok(id)
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct SeriesRecord {
    family: String,
    p: u64,
    degree: usize,
    /// univariate coefficients as exact strings
    #[serde(skip_serializing_if = "Option::is_none")]
    coeffs: Option<Vec<String>>,
    /// bivariate coefficients, row i = x-degree, column j = second variable
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<Vec<Vec<String>>>,
}

fn cmd_series<W: Write>(a: SeriesArgs, out: &mut W) -> Result<i32, CmdError> {
    let id = parse_family(&a.family)?;
    let built = gfcat::build_series(id, a.p, a.degree)?;
    match (&built, a.format) {
        (BuiltSeries::Uni(s), Format::Text) => {
            for (n, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{} {}", n, c)?;
            }
        }
        (BuiltSeries::Uni(s), Format::Csv) => {
            writeln!(out, "n,coeff")?;
            for (n, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{},{}", n, c)?;
            }
        }
        (BuiltSeries::Uni(s), Format::Json) => {
            let rec = SeriesRecord {
                family: a.family.clone(),
                p: a.p,
                degree: a.degree,
                coeffs: Some(s.coeffs().iter().map(|c| c.to_string()).collect()),
                grid: None,
            };
            writeln!(out, "{}", serde_json::to_string(&rec).unwrap())?;
        }
        (BuiltSeries::Bi(s), fmt) => {
            let (nx, nv) = s.bounds();
            match fmt {
                Format::Text => {
                    for i in 0..=nx {
                        for j in 0..=nv {
                            let c = s.coeff(i, j);
                            if !num::Zero::is_zero(c) {
                                writeln!(out, "{} {} {}", i, j, c)?;
                            }
                        }
                    }
                }
                Format::Csv => {
                    writeln!(out, "i,j,coeff")?;
                    for i in 0..=nx {
                        for j in 0..=nv {
                            writeln!(out, "{},{},{}", i, j, s.coeff(i, j))?;
                        }
                    }
                }
                Format::Json => {
                    let grid: Vec<Vec<String>> = (0..=nx)
                        .map(|i| (0..=nv).map(|j| s.coeff(i, j).to_string()).collect())
                        .collect();
                    let rec = SeriesRecord {
                        family: a.family.clone(),
                        p: a.p,
                        degree: a.degree,
                        coeffs: None,
                        grid: Some(grid),
                    };
                    writeln!(out, "{}", serde_json::to_string(&rec).unwrap())?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// OEIS regression outcomes for the bundled b-files.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OeisCheck {
    pub sequence: String,
    pub description: String,
    pub checked: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OeisReport {
    pub checks: Vec<OeisCheck>,
}

impl OeisReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// The three fixture regressions: r̃(2,S_n) against A018819,
/// r(3,S_n)+1 against A062051 (the sequence counts the partitions, i.e.
/// the r̃ values), and r̃(2,Cyc_n) against A006519 shifted by one.
pub fn oeis_regression(max_n: u64) -> Result<OeisReport, families::FamilyError> {
    let mut checks = Vec::new();

    let t2 = PartitionTable::build(2, max_n as usize)?;
    let a018819 = fixtures::parse_b_file(fixtures::A018819)?;
    let mut mism = None;
    for n in 0..=max_n {
        let fix = fixtures::b_file_value(&a018819, n)
            .ok_or_else(|| families::FamilyError::Fixture(format!("A018819 missing n={}", n)))?;
        if t2.r_tilde(n as usize) != fix {
            mism = Some(format!("n={}: computed {}, fixture {}", n, t2.r_tilde(n as usize), fix));
            break;
        }
    }
    checks.push(OeisCheck {
        sequence: "A018819".into(),
        description: "r~(2, S_n) = partitions of n into powers of 2".into(),
        checked: (max_n + 1) as usize,
        pass: mism.is_none(),
        first_mismatch: mism,
    });

    let t3 = PartitionTable::build(3, max_n as usize)?;
    let a062051 = fixtures::parse_b_file(fixtures::A062051)?;
    let mut mism = None;
    for n in 0..=max_n {
        let fix = fixtures::b_file_value(&a062051, n)
            .ok_or_else(|| families::FamilyError::Fixture(format!("A062051 missing n={}", n)))?;
        // the sequence counts partitions into powers of 3 = r(3,S_n) + 1
        if t3.r_tilde(n as usize) != fix {
            mism = Some(format!("n={}: computed {}, fixture {}", n, t3.r_tilde(n as usize), fix));
            break;
        }
    }
    checks.push(OeisCheck {
        sequence: "A062051".into(),
        description: "r(3, S_n) + 1 = partitions of n into powers of 3".into(),
        checked: (max_n + 1) as usize,
        pass: mism.is_none(),
        first_mismatch: mism,
    });

    let a006519 = fixtures::parse_b_file(fixtures::A006519)?;
    let mut mism = None;
    for n in 0..=max_n {
        let fix = fixtures::b_file_value(&a006519, n + 1)
            .ok_or_else(|| families::FamilyError::Fixture(format!("A006519 missing n={}", n + 1)))?;
        let computed = families::cyclic_r_tilde(2, n)?;
        if &computed != fix {
            mism = Some(format!("n={}: computed {}, fixture {}", n, computed, fix));
            break;
        }
    }
    checks.push(OeisCheck {
        sequence: "A006519".into(),
        description: "r~(2, Cyc_n) = A006519(n+1), highest power of 2 dividing n+1".into(),
        checked: (max_n + 1) as usize,
        pass: mism.is_none(),
        first_mismatch: mism,
    });

    Ok(OeisReport { checks })
}

fn cmd_verify<W: Write>(a: VerifyArgs, out: &mut W) -> Result<i32, CmdError> {
    match a.suite.as_str() {
        "identities" => {
            let report = gfcat::run_identity_suite(a.p, a.degree)?;
            match a.format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&report).unwrap())?;
                }
                _ => {
                    for c in &report.checks {
                        match &c.outcome {
                            CheckOutcome::Pass => writeln!(out, "ok {} {}", c.index, c.name)?,
                            CheckOutcome::Skipped { reason } => {
                                writeln!(out, "ok {} {} (skipped: {})", c.index, c.name, reason)?
                            }
                            CheckOutcome::Fail { location, expected, actual } => writeln!(
                                out,
                                "FAIL {} {} at {}: expected {}, got {}",
                                c.index, c.name, location, expected, actual
                            )?,
                        }
                    }
                    writeln!(
                        out,
                        "identity suite p={} degree={}: {}",
                        report.p,
                        report.degree,
                        if report.all_pass() { "all checks pass" } else { "FAILURES" }
                    )?;
                }
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        "oracle" => {
            let cap = effective_cap(a.cap);
            let instances = sweep::default_instances();
            let report = sweep::run(&instances, cap)?;
            match a.format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&report).unwrap())?;
                }
                _ => {
                    for note in &report.notes {
                        writeln!(out, "{}", note)?;
                    }
                    for e in &report.entries {
                        writeln!(
                            out,
                            "{} {} order={} r=[{}] {}",
                            if e.agree { "ok" } else { "FAIL" },
                            e.group,
                            e.order,
                            e.primes
                                .iter()
                                .zip(&e.oracle)
                                .map(|(p, r)| format!("{}:{}", p, r))
                                .collect::<Vec<_>>()
                                .join(" "),
                            if e.agree { "" } else { "closed form disagrees" },
                        )?;
                    }
                    writeln!(
                        out,
                        "oracle sweep: {}/{} instances agree",
                        report.entries.len() - report.failures,
                        report.entries.len()
                    )?;
                }
            }
            Ok(if report.all_agree() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        "oeis" => {
            let report = oeis_regression(63)?;
            match a.format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string(&report).unwrap())?;
                }
                _ => {
                    for c in &report.checks {
                        match &c.first_mismatch {
                            None => writeln!(
                                out,
                                "ok {} ({} terms): {}",
                                c.sequence, c.checked, c.description
                            )?,
                            Some(m) => {
                                writeln!(out, "FAIL {}: {}", c.sequence, m)?
                            }
                        }
                    }
                }
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        other => Err(CmdError::new(
            EXIT_USAGE,
            format!("unknown suite {:?} (expected identities, oracle, or oeis)", other),
        )),
    }
}

fn cmd_oracle<W: Write>(a: OracleArgs, out: &mut W) -> Result<i32, CmdError> {
    let spec = parse_spec(&a.group)?;
    let cap = effective_cap(a.cap);
    let table = oracle::realize(&spec, cap)?;
    let primes = if a.primes.is_empty() { spec.support_primes() } else { a.primes.clone() };
    let mut profile = oracle::rank_profile_bruteforce(&table, &primes);
    profile.group = spec.to_string();
    match a.format {
        Format::Text => {
            writeln!(out, "group {}", profile.group)?;
            writeln!(out, "order {}", table.order())?;
            writeln!(out, "classes {}", profile.total_classes.unwrap_or_default())?;
            for p in &primes {
                writeln!(out, "r({}) = {}", p, profile.rank(*p))?;
            }
            writeln!(out, "K0 = {}", KZeroDescriptor::from_profile(&profile).render())?;
            writeln!(out, "K1 = 0")?;
            if a.classes {
                for c in oracle::conjugacy_classes(&table) {
                    writeln!(out, "class size={} order={}", c.size, c.element_order)?;
                }
            }
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&profile_record(&profile, &primes)).unwrap())?;
        }
        Format::Csv => {
            writeln!(out, "prime,rank")?;
            for p in &primes {
                writeln!(out, "{},{}", p, profile.rank(*p))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_figure<W: Write>(a: FigureArgs, out: &mut W) -> Result<i32, CmdError> {
    let points = analytic::figure_grid(a.p, a.cutoff, a.resolution)?;
    let csv = analytic::grid_to_csv(&points);
    match a.out {
        Some(path) => std::fs::write(&path, csv)
            .map_err(|e| CmdError::new(EXIT_DOMAIN, format!("writing {}: {}", path, e)))?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_mellin<W: Write>(a: MellinArgs, out: &mut W) -> Result<i32, CmdError> {
    let checks = analytic::mellin_report(&a.p, &a.s, a.jmax, a.kmax, a.tol)?;
    let all_pass = checks.iter().all(|c| c.pass);
    match a.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&checks).unwrap())?;
        }
        Format::Csv => {
            writeln!(out, "p,s,lhs,rhs,abs_err,tail_bound,pass")?;
            for c in &checks {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    c.p, c.s_re, c.lhs_re, c.rhs_re, c.abs_err, c.tail_bound, c.pass
                )?;
            }
        }
        Format::Text => {
            for c in &checks {
                writeln!(
                    out,
                    "{} p={} s={} double-sum={:.9} closed-form={:.9} err={:.2e} tail<={:.2e}",
                    if c.pass { "ok" } else { "FAIL" },
                    c.p,
                    c.s_re,
                    c.lhs_re,
                    c.rhs_re,
                    c.abs_err,
                    c.tail_bound
                )?;
            }
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_trend<W: Write>(a: TrendArgs, out: &mut W) -> Result<i32, CmdError> {
    let points = analytic::asymptotic_trend(a.p, &a.checkpoints)?;
    // pass when the ratios move monotonically toward 1 and the last one
    // lands in [0.5, 1.5]
    let toward_one = points
        .windows(2)
        .all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs());
    let last = points.last().map(|t| t.ratio).unwrap_or(f64::NAN);
    let pass = toward_one && (0.5..=1.5).contains(&last);
    match a.format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&points).unwrap())?;
        }
        Format::Csv => {
            writeln!(out, "n,log_r_tilde,ratio")?;
            for t in &points {
                writeln!(out, "{},{},{}", t.n, t.log_r_tilde, t.ratio)?;
            }
        }
        Format::Text => {
            for t in &points {
                writeln!(
                    out,
                    "n={} log r~ = {:.4} ratio = {:.6}",
                    t.n, t.log_r_tilde, t.ratio
                )?;
            }
            writeln!(
                out,
                "trend p={}: {}",
                a.p,
                if pass { "ratios approach 1" } else { "FAIL" }
            )?;
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// Convenience used by the binary.
pub fn main_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("kbg".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rank_text_matches_table() {
        let (code, out, _) = run_cli(&["rank", "--group", "exc:WE8", "--format", "text"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "Z x Z_(2)^31 x Z_(3)^6 x Z_(5)^2 x Z_(7)^1");
    }

    #[test]
    fn oracle_json_profile() {
        let (code, out, _) =
            run_cli(&["oracle", "--group", "dic:2", "--primes", "2", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let rec: ProfileRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(rec.order.as_deref(), Some("8"));
        assert_eq!(rec.classes.as_deref(), Some("5"));
        assert_eq!(rec.r["2"], "4");
        assert_eq!(rec.k1, "0");
    }

    #[test]
    fn verify_identities_exit_codes() {
        let (code, out, _) =
            run_cli(&["verify", "--suite", "identities", "--p", "2", "--degree", "16"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().filter(|l| l.starts_with("ok ")).count(), 9);
    }

    #[test]
    fn verify_oeis() {
        let (code, out, _) = run_cli(&["verify", "--suite", "oeis"]);
        assert_eq!(code, EXIT_OK, "{}", out);
        assert_eq!(out.lines().filter(|l| l.starts_with("ok ")).count(), 3);
    }

    #[test]
    fn bad_inputs_have_distinct_codes() {
        let (code, _, err) = run_cli(&["rank", "--group", "nope:1"]);
        assert_eq!(code, EXIT_BAD_SPEC);
        assert!(err.contains("unknown group spec"));
        let (code, _, _) = run_cli(&["oracle", "--group", "sym:5", "--cap", "10"]);
        assert_eq!(code, EXIT_CAP_EXCEEDED);
        let (code, _, _) = run_cli(&["oracle", "--group", "exc:WE8"]);
        assert_eq!(code, EXIT_BAD_SPEC);
        let (code, _, _) = run_cli(&["verify", "--suite", "bogus"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = run_cli(&["not-a-command"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn series_formats() {
        let (code, out, _) =
            run_cli(&["series", "--family", "cyc", "--p", "3", "--degree", "8", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        let last = out.lines().last().unwrap();
        assert_eq!(last, "8,9");
        let (code, out, _) =
            run_cli(&["series", "--family", "a", "--p", "2", "--degree", "8", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let rec: SeriesRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(rec.coeffs.unwrap().last().unwrap(), "10");
        let (code, _, _) = run_cli(&["series", "--family", "nope", "--p", "2"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn mellin_and_trend_pass() {
        let (code, out, _) = run_cli(&["mellin", "--kmax", "20000", "--format", "text"]);
        assert_eq!(code, EXIT_OK, "{}", out);
        let (code, out, _) = run_cli(&[
            "trend",
            "--p",
            "2",
            "--checkpoints",
            "100,1000,10000",
            "--format",
            "csv",
        ]);
        assert_eq!(code, EXIT_OK, "{}", out);
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn report_json_roundtrips() {
        let report = gfcat::run_identity_suite(3, 12).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: gfcat::SuiteReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);

        let oeis = oeis_regression(16).unwrap();
        let json = serde_json::to_string(&oeis).unwrap();
        let back: OeisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, oeis);

        let instances: Vec<GroupSpec> = vec!["cyc:4".parse().unwrap(), "dic:2".parse().unwrap()];
        let sw = sweep::run(&instances, oracle::DEFAULT_CAP).unwrap();
        let json = serde_json::to_string(&sw).unwrap();
        let back: sweep::SweepReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sw);
    }

    #[test]
    fn figure_spot_value() {
        let (code, out, _) =
            run_cli(&["figure", "--p", "2", "--cutoff", "20", "--resolution", "8"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("re_x,im_x,re_g,im_g\n"));
        // x = 0.5 row exists at resolution 8 and carries g ~ 1.0493
        let row = out
            .lines()
            .find(|l| l.starts_with("0.5,0,"))
            .expect("grid row at 0.5");
        let val: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert!((val - 1.049_296_9).abs() < 1e-6);
    }

    #[test]
    fn help_is_exit_zero() {
        let (code, out, _) = run_cli(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("rank"));
    }
}
