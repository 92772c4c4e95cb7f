//! Floating-point layer: Mellin closed-form verification, divergence
//! probes near roots of unity, figure-grid regeneration, and the
//! asymptotic growth check for the symmetric-group ranks.
//!
//! Everything else in the crate is exact; this module is deliberate
//! double precision with explicit tolerances and reported tail bounds.

use num::complex::Complex64;
use num::{BigUint, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::is_prime;
use crate::families::PartitionTable;

#[derive(Debug, Error, PartialEq)]
pub enum AnalyticError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("outside the convergence domain: {0}")]
    Domain(String),
    #[error("too close to a pole: {0}")]
    PoleProximity(String),
    #[error("l = {l} must be coprime to p = {p}")]
    NotCoprime { l: u64, p: u64 },
    #[error("radii must be strictly increasing inside (0, 1)")]
    BadRadii,
}

fn check_prime(p: u64) -> Result<(), AnalyticError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(AnalyticError::NotPrime(p))
    }
}

// Lanczos approximation, g = 7, 9 coefficients. Relative error on the
// tested domain is far below the module's 1e-9 targets.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(s) for complex s (Lanczos; reflection formula for Re(s) < 1/2).
pub fn gamma(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        let pi = std::f64::consts::PI;
        Complex64::new(pi, 0.0) / ((Complex64::new(pi, 0.0) * s).sin() * gamma(Complex64::new(1.0, 0.0) - s))
    } else {
        let z = s - Complex64::new(1.0, 0.0);
        let mut x = Complex64::new(LANCZOS[0], 0.0);
        for (i, c) in LANCZOS.iter().enumerate().skip(1) {
            x += Complex64::new(*c, 0.0) / (z + Complex64::new(i as f64, 0.0));
        }
        let t = z + Complex64::new(7.5, 0.0);
        let sqrt_two_pi = (2.0 * std::f64::consts::PI).sqrt();
        Complex64::new(sqrt_two_pi, 0.0) * t.powc(z + Complex64::new(0.5, 0.0)) * (-t).exp() * x
    }
}

/// ζ(s) by Borwein's alternating-series acceleration (through the eta
/// function). Accurate to ~1e-14 for Re(s) ≥ 1/2 away from s = 1.
pub fn zeta(s: Complex64) -> Complex64 {
    let n = 48usize;
    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0f64; // i = 0 summand of the inner sum, times n
    let mut acc = 1.0f64;
    d[0] = 1.0;
    for i in 1..=n {
        // ratio between consecutive summands
        term *= 4.0 * ((n + i - 1) as f64) * ((n - i + 1) as f64)
            / ((2 * i - 1) as f64 * (2 * i) as f64);
        acc += term;
        d[i] = acc;
    }
    let dn = d[n];
    let mut eta = Complex64::zero();
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let base = Complex64::new((k + 1) as f64, 0.0);
        eta += Complex64::new(sign * (d[k] - dn), 0.0) * (-s * base.ln()).exp();
    }
    eta /= Complex64::new(-dn, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let two_pow = ((one - s) * Complex64::new(2.0f64.ln(), 0.0)).exp();
    eta / (one - two_pow)
}

/// One Mellin comparison: truncated double sum vs closed form.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MellinCheck {
    pub p: u64,
    pub s_re: f64,
    pub s_im: f64,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub abs_err: f64,
    pub tail_bound: f64,
    pub pass: bool,
}

/// Γ(s) Σ_{j ≤ j_max, k ≤ k_max} (k p^j)^{-s}/k with a rigorous bound on
/// the discarded tail. The double sum factors as
/// (Σ_j p^{-js})(Σ_k k^{-s-1}).
pub fn dirichlet_f(
    p: u64,
    s: Complex64,
    j_max: usize,
    k_max: usize,
) -> Result<(Complex64, f64), AnalyticError> {
    check_prime(p)?;
    let sigma = s.re;
    if sigma <= 0.0 {
        return Err(AnalyticError::Domain(
            "the Dirichlet sum needs Re(s) > 0".into(),
        ));
    }
    if j_max == 0 || k_max == 0 {
        return Err(AnalyticError::Domain("j_max and k_max must be >= 1".into()));
    }
    let pf = p as f64;
    let mut j_sum = Complex64::zero();
    for j in 0..=j_max {
        j_sum += (-s * Complex64::new((j as f64) * pf.ln(), 0.0)).exp();
    }
    let mut k_sum = Complex64::zero();
    let s_plus = s + Complex64::new(1.0, 0.0);
    for k in 1..=k_max {
        k_sum += (-s_plus * Complex64::new((k as f64).ln(), 0.0)).exp();
    }
    let gam = gamma(s);
    let value = gam * j_sum * k_sum;

    // tails: geometric in j, integral comparison in k
    let gam_abs = gam.norm();
    let zeta_sigma1 = zeta(Complex64::new(sigma + 1.0, 0.0)).re;
    let geo = 1.0 / (1.0 - pf.powf(-sigma));
    let j_tail = gam_abs * zeta_sigma1 * pf.powf(-((j_max + 1) as f64) * sigma) * geo;
    let k_tail = gam_abs * geo * (k_max as f64).powf(-sigma) / sigma;
    Ok((value, j_tail + k_tail))
}

/// Γ(s) ζ(s+1) / (1 − p^{-s}), rejecting the pole neighbourhoods.
pub fn closed_form_f(p: u64, s: Complex64) -> Result<Complex64, AnalyticError> {
    check_prime(p)?;
    if s.norm() < 0.25 {
        return Err(AnalyticError::PoleProximity(
            "s near 0: Γ(s) and ζ(s+1) both blow up".into(),
        ));
    }
    let pf = p as f64;
    let denom = Complex64::new(1.0, 0.0) - (-s * Complex64::new(pf.ln(), 0.0)).exp();
    if denom.norm() < 1e-9 {
        return Err(AnalyticError::PoleProximity("1 - p^{-s} vanishes".into()));
    }
    Ok(gamma(s) * zeta(s + Complex64::new(1.0, 0.0)) / denom)
}

/// Compare the truncated sum against the closed form on a (p, s) grid.
pub fn mellin_report(
    ps: &[u64],
    ss: &[f64],
    j_max: usize,
    k_max: usize,
    tol: f64,
) -> Result<Vec<MellinCheck>, AnalyticError> {
    let mut out = Vec::new();
    for &p in ps {
        for &s_re in ss {
            let s = Complex64::new(s_re, 0.0);
            let (lhs, tail) = dirichlet_f(p, s, j_max, k_max)?;
            let rhs = closed_form_f(p, s)?;
            let abs_err = (lhs - rhs).norm();
            out.push(MellinCheck {
                p,
                s_re,
                s_im: 0.0,
                lhs_re: lhs.re,
                lhs_im: lhs.im,
                rhs_re: rhs.re,
                rhs_im: rhs.im,
                abs_err,
                tail_bound: tail,
                pass: abs_err <= tol && tail <= tol / 10.0,
            });
        }
    }
    Ok(out)
}

/// g(p, A, x, 1) with both indices truncated at `cutoff`:
/// Σ_{j=0}^{cutoff} Σ_{k=1}^{cutoff} x^{k p^j}/k. Needs |x| < 1.
pub fn g_numeric(p: u64, x: Complex64, cutoff: usize) -> Result<Complex64, AnalyticError> {
    check_prime(p)?;
    if cutoff == 0 {
        return Err(AnalyticError::Domain("cutoff must be >= 1".into()));
    }
    if x.norm() >= 1.0 {
        return Err(AnalyticError::Domain("g(p,A,x,1) needs |x| < 1".into()));
    }
    let mut total = Complex64::zero();
    let mut x_power = x; // x^{p^j}
    for _j in 0..=cutoff {
        let mut pw = Complex64::new(1.0, 0.0);
        let mut inner = Complex64::zero();
        for k in 1..=cutoff {
            pw *= x_power;
            inner += pw / Complex64::new(k as f64, 0.0);
        }
        total += inner;
        // x^{p^{j+1}} = (x^{p^j})^p
        let mut next = Complex64::new(1.0, 0.0);
        for _ in 0..p {
            next *= x_power;
        }
        x_power = next;
        if x_power.norm() < 1e-300 {
            break;
        }
    }
    Ok(total)
}

/// |g| along the ray toward the primitive l-th root of unity, one entry
/// per radius. The root of unity must avoid the p-power lattice, i.e.
/// gcd(l, p) = 1, which is exactly the divergence hypothesis.
pub fn divergence_probe(
    p: u64,
    l: u64,
    radii: &[f64],
    cutoff: usize,
) -> Result<Vec<f64>, AnalyticError> {
    check_prime(p)?;
    if l == 0 || num::integer::gcd(l, p) != 1 {
        return Err(AnalyticError::NotCoprime { l, p });
    }
    if radii.is_empty()
        || radii.iter().any(|r| !(0.0 < *r && *r < 1.0))
        || radii.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(AnalyticError::BadRadii);
    }
    let theta = 2.0 * std::f64::consts::PI / l as f64;
    let root = Complex64::new(theta.cos(), theta.sin());
    radii
        .iter()
        .map(|&r| g_numeric(p, root.scale(r), cutoff).map(|v| v.norm()))
        .collect()
}

/// One sample of g(p, A, x, 1) on the figure grid.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GridPoint {
    pub re_x: f64,
    pub im_x: f64,
    pub re_g: f64,
    pub im_g: f64,
}

/// Sample g(p, A, x, 1) on the square grid with `resolution`
/// subdivisions per axis over [-1, 1]²; points with |x| ≥ 1 are
/// omitted. Row-major: the imaginary coordinate varies in the outer
/// loop. `resolution` even and divisible by 4 puts x = 0.5 on the grid.
pub fn figure_grid(
    p: u64,
    cutoff: usize,
    resolution: usize,
) -> Result<Vec<GridPoint>, AnalyticError> {
    check_prime(p)?;
    if resolution < 2 {
        return Err(AnalyticError::Domain("resolution must be >= 2".into()));
    }
    let coord = |i: usize| -1.0 + 2.0 * (i as f64) / (resolution as f64);
    let mut out = Vec::new();
    for iy in 0..=resolution {
        let im = coord(iy);
        for ix in 0..=resolution {
            let re = coord(ix);
            let x = Complex64::new(re, im);
            if x.norm() >= 1.0 {
                continue;
            }
            let g = g_numeric(p, x, cutoff)?;
            out.push(GridPoint { re_x: re, im_x: im, re_g: g.re, im_g: g.im });
        }
    }
    Ok(out)
}

/// Render grid points as the CSV interchange format.
pub fn grid_to_csv(points: &[GridPoint]) -> String {
    let mut s = String::from("re_x,im_x,re_g,im_g\n");
    for pt in points {
        s.push_str(&format!("{},{},{},{}\n", pt.re_x, pt.im_x, pt.re_g, pt.im_g));
    }
    s
}

/// Natural log of a big integer, safe for values beyond f64 range.
pub fn big_ln(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 53 {
        let mut x = 0u64;
        for (i, d) in v.to_u64_digits().into_iter().enumerate() {
            x |= d << (64 * i);
        }
        (x as f64).ln()
    } else {
        let shift = bits - 53;
        let top: BigUint = v >> shift;
        let mantissa = top.to_u64_digits()[0] as f64;
        mantissa.ln() + (shift as f64) * std::f64::consts::LN_2
    }
}

/// One asymptotic checkpoint for log r̃(p, S_n) ≈ log²n / (2 log p).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TrendPoint {
    pub n: u64,
    pub log_r_tilde: f64,
    /// log r̃(p,S_n) · 2 log p / log² n; approaches 1 from below in the
    /// tested range.
    pub ratio: f64,
}

/// Exact-DP ranks at the checkpoints, with the leading-order ratio.
pub fn asymptotic_trend(p: u64, checkpoints: &[u64]) -> Result<Vec<TrendPoint>, AnalyticError> {
    check_prime(p)?;
    if checkpoints.is_empty() || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AnalyticError::Domain(
            "checkpoints must be strictly increasing".into(),
        ));
    }
    let max = *checkpoints.last().unwrap() as usize;
    let table = PartitionTable::build(p, max).map_err(|e| AnalyticError::Domain(e.to_string()))?;
    Ok(checkpoints
        .iter()
        .map(|&n| {
            let log_rt = big_ln(table.r_tilde(n as usize));
            let ln_n = (n as f64).ln();
            TrendPoint {
                n,
                log_r_tilde: log_rt,
                ratio: log_rt * 2.0 * (p as f64).ln() / (ln_n * ln_n),
            }
        })
        .collect())
}
