//! Truncated formal power series with exact rational coefficients, in one
//! and two variables.
//!
//! A [`TruncSeries`] with degree bound N stores coefficients c_0..c_N and
//! every operation is coefficient-exact below the bound; truncation is the
//! only approximation anywhere in this module. The second variable of a
//! [`BiTruncSeries`] plays the role of z (shift tracking), u (part-count
//! marker) or y (second cyclic index) depending on the caller.

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("degree bound mismatch: {0} vs {1}")]
    BoundMismatch(usize, usize),
    #[error("constant term must be 1")]
    ConstantTermNotOne,
    #[error("constant term must be 0")]
    ConstantTermNotZero,
    #[error("monomial step must be positive")]
    ZeroStep,
    #[error("substitution power must be positive")]
    ZeroPower,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Univariate truncated series: coefficients of x^0 .. x^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(bound: usize) -> Self {
        TruncSeries { coeffs: vec![BigRational::zero(); bound + 1] }
    }

    pub fn one(bound: usize) -> Self {
        let mut s = Self::zero(bound);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncSeries { coeffs }
    }

    pub fn from_fn(bound: usize, f: impl Fn(usize) -> BigRational) -> Self {
        TruncSeries { coeffs: (0..=bound).map(f).collect() }
    }

    /// 1 - x, handy for the type-D identities.
    pub fn one_minus_x(bound: usize) -> Self {
        let mut s = Self::one(bound);
        if bound >= 1 {
            s.coeffs[1] = -BigRational::one();
        }
        s
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn check_bound(&self, other: &Self) -> Result<(), SeriesError> {
        if self.degree_bound() == other.degree_bound() {
            Ok(())
        } else {
            Err(SeriesError::BoundMismatch(self.degree_bound(), other.degree_bound()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bound(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bound(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common bound.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bound(other)?;
        let n = self.degree_bound();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// The geometric series 1/(1 - x^k): coefficient 1 at multiples of k.
    /// A step beyond the bound leaves just the constant series 1.
    pub fn geometric(step: usize, bound: usize) -> Result<Self, SeriesError> {
        if step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        Ok(Self::from_fn(bound, |m| if m % step == 0 { rat(1) } else { rat(0) }))
    }

    /// Multiply in place by 1/(1 - x^k) via c_m += c_{m-k}. Linear time,
    /// used to assemble the partition products without full convolutions.
    pub fn mul_geometric(&mut self, step: usize) -> Result<(), SeriesError> {
        if step == 0 {
            return Err(SeriesError::ZeroStep);
        }
        for m in step..self.coeffs.len() {
            let prev = self.coeffs[m - step].clone();
            self.coeffs[m] += prev;
        }
        Ok(())
    }

    /// Formal logarithm; requires constant term 1.
    ///
    /// From a·l' = a' one gets l_n = a_n − (1/n) Σ_{i=1}^{n-1} (n−i) a_i l_{n−i}.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let bound = self.degree_bound();
        let mut l = vec![BigRational::zero(); bound + 1];
        for n in 1..=bound {
            let mut s = BigRational::zero();
            for i in 1..n {
                if !self.coeffs[i].is_zero() && !l[n - i].is_zero() {
                    s += &self.coeffs[i] * &l[n - i] * rat((n - i) as i64);
                }
            }
            l[n] = &self.coeffs[n] - s / rat(n as i64);
        }
        Ok(TruncSeries { coeffs: l })
    }

    /// Formal exponential; requires constant term 0.
    ///
    /// From e' = a'·e: e_n = (1/n) Σ_{i=1}^{n} i a_i e_{n−i}.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let bound = self.degree_bound();
        let mut e = vec![BigRational::zero(); bound + 1];
        e[0] = BigRational::one();
        for n in 1..=bound {
            let mut s = BigRational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !e[n - i].is_zero() {
                    s += &self.coeffs[i] * &e[n - i] * rat(i as i64);
                }
            }
            e[n] = s / rat(n as i64);
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// Substitute x → x^p: coefficient a_m moves to degree p·m.
    pub fn substitute_power(&self, p: usize) -> Result<Self, SeriesError> {
        if p == 0 {
            return Err(SeriesError::ZeroPower);
        }
        let bound = self.degree_bound();
        let mut out = vec![BigRational::zero(); bound + 1];
        for (m, a) in self.coeffs.iter().enumerate() {
            match m.checked_mul(p) {
                Some(t) if t <= bound => out[t] = a.clone(),
                _ => break,
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// −log(1−x) = Σ_{k≥1} x^k/k, the Mercator series.
    pub fn mercator(bound: usize) -> Self {
        Self::from_fn(bound, |m| {
            if m == 0 {
                BigRational::zero()
            } else {
                BigRational::new(1.into(), (m as i64).into())
            }
        })
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// n-th power via repeated multiplication.
    pub fn pow(&self, n: u64) -> Result<Self, SeriesError> {
        let mut out = Self::one(self.degree_bound());
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// First index where the two series differ, with both values.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, BigRational, BigRational)> {
        let n = self.degree_bound().min(other.degree_bound());
        (0..=n).find_map(|m| {
            if self.coeffs[m] != other.coeffs[m] {
                Some((m, self.coeffs[m].clone(), other.coeffs[m].clone()))
            } else {
                None
            }
        })
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

/// Bivariate truncated series with rectangular storage:
/// coefficient of x^i · v^j at `coeffs[i * (nv + 1) + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiTruncSeries {
    nx: usize,
    nv: usize,
    coeffs: Vec<BigRational>,
}

impl BiTruncSeries {
    pub fn zero(nx: usize, nv: usize) -> Self {
        BiTruncSeries { nx, nv, coeffs: vec![BigRational::zero(); (nx + 1) * (nv + 1)] }
    }

    pub fn one(nx: usize, nv: usize) -> Self {
        let mut s = Self::zero(nx, nv);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_fn(nx: usize, nv: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        let mut s = Self::zero(nx, nv);
        for i in 0..=nx {
            for j in 0..=nv {
                s.coeffs[i * (nv + 1) + j] = f(i, j);
            }
        }
        s
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.nx, self.nv)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.coeffs[i * (self.nv + 1) + j]
    }

    pub fn coeff_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.coeffs[i * (self.nv + 1) + j]
    }

    /// Embed a univariate series as the v-degree-0 slice.
    pub fn embed_first(uni: &TruncSeries, nv: usize) -> Self {
        let mut s = Self::zero(uni.degree_bound(), nv);
        for (i, c) in uni.coeffs().iter().enumerate() {
            *s.coeff_mut(i, 0) = c.clone();
        }
        s
    }

    /// Outer product: coefficient (i, j) = a_i · b_j.
    pub fn tensor(a: &TruncSeries, b: &TruncSeries) -> Self {
        Self::from_fn(a.degree_bound(), b.degree_bound(), |i, j| a.coeff(i) * b.coeff(j))
    }

    fn check_bounds(&self, other: &Self) -> Result<(), SeriesError> {
        if self.nx != other.nx {
            return Err(SeriesError::BoundMismatch(self.nx, other.nx));
        }
        if self.nv != other.nv {
            return Err(SeriesError::BoundMismatch(self.nv, other.nv));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bounds(other)?;
        Ok(BiTruncSeries {
            nx: self.nx,
            nv: self.nv,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bounds(other)?;
        Ok(BiTruncSeries {
            nx: self.nx,
            nv: self.nv,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Full 2D Cauchy product; quadratic in each bound, used only at the
    /// small bounds of the identity tests.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_bounds(other)?;
        let mut out = Self::zero(self.nx, self.nv);
        for i1 in 0..=self.nx {
            for j1 in 0..=self.nv {
                let a = self.coeff(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(self.nx - i1) {
                    for j2 in 0..=(self.nv - j1) {
                        let b = other.coeff(i2, j2);
                        if !b.is_zero() {
                            *out.coeff_mut(i1 + i2, j1 + j2) += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiply in place by 1/(1 − v^sv · x^sx) via the linear recurrence
    /// c_{i,j} += c_{i−sx, j−sv}.
    pub fn mul_geometric(&mut self, sx: usize, sv: usize) -> Result<(), SeriesError> {
        if sx == 0 && sv == 0 {
            return Err(SeriesError::ZeroStep);
        }
        for i in 0..=self.nx {
            for j in 0..=self.nv {
                if i >= sx && j >= sv {
                    let prev = self.coeff(i - sx, j - sv).clone();
                    *self.coeff_mut(i, j) += prev;
                }
            }
        }
        Ok(())
    }

    /// Substitute x → x^p in the first variable.
    pub fn substitute_power_first(&self, p: usize) -> Result<Self, SeriesError> {
        if p == 0 {
            return Err(SeriesError::ZeroPower);
        }
        let mut out = Self::zero(self.nx, self.nv);
        for i in 0..=self.nx {
            match i.checked_mul(p) {
                Some(t) if t <= self.nx => {
                    for j in 0..=self.nv {
                        *out.coeff_mut(t, j) = self.coeff(i, j).clone();
                    }
                }
                _ => break,
            }
        }
        Ok(out)
    }

    /// Multiply by v: shift the second index up by one, truncating.
    pub fn shift_second(&self) -> Self {
        let mut out = Self::zero(self.nx, self.nv);
        for i in 0..=self.nx {
            for j in 0..self.nv {
                *out.coeff_mut(i, j + 1) = self.coeff(i, j).clone();
            }
        }
        out
    }

    /// Substitute an exact rational for the second variable, summing
    /// every stored v-degree.
    pub fn eval_second(&self, value: &BigRational) -> TruncSeries {
        let mut out = vec![BigRational::zero(); self.nx + 1];
        for (i, c) in out.iter_mut().enumerate() {
            let mut acc = BigRational::zero();
            for j in (0..=self.nv).rev() {
                acc = acc * value + self.coeff(i, j);
            }
            *c = acc;
        }
        TruncSeries::from_coeffs(out)
    }

    /// Diagonal slice d_n = c_{n,n}.
    pub fn diagonal(&self) -> TruncSeries {
        let n = self.nx.min(self.nv);
        TruncSeries::from_fn(n, |m| self.coeff(m, m).clone())
    }

    pub fn first_difference(
        &self,
        other: &Self,
    ) -> Option<(usize, usize, BigRational, BigRational)> {
        let nx = self.nx.min(other.nx);
        let nv = self.nv.min(other.nv);
        for i in 0..=nx {
            for j in 0..=nv {
                if self.coeff(i, j) != other.coeff(i, j) {
                    return Some((i, j, self.coeff(i, j).clone(), other.coeff(i, j).clone()));
                }
            }
        }
        None
    }
}
