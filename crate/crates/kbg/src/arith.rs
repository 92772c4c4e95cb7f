//! Exact scalar arithmetic: p-adic valuation and norm, quadratic-field
//! numbers `a + b√d` for d ∈ {2, 5}, and quaternions over them.
//!
//! Everything here is immutable and exact; floating point lives in
//! [`crate::analytic`] only.

use num::rational::Rational64;
use num::{BigRational, BigInt, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("p-adic valuation of 0 is infinite")]
    ZeroValuation,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("mixed quadratic fields: sqrt({0}) vs sqrt({1})")]
    MixedField(i64, i64),
    #[error("unsupported quadratic field sqrt({0}); only d in {{2, 5}}")]
    UnsupportedField(i64),
}

/// Deterministic trial-division primality test; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest v with p^v | n.
pub fn p_adic_valuation(n: u64, p: u64) -> Result<u32, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let mut n = n;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    Ok(v)
}

/// p^{ν_p(n)}, the reciprocal of the p-adic norm. This is the integer
/// that appears in all the cyclic-family rank formulas.
pub fn p_part(n: u64, p: u64) -> Result<u64, ArithError> {
    Ok(p.pow(p_adic_valuation(n, p)?))
}

/// The p-adic norm |n|_p = p^{-ν_p(n)} as an exact rational.
pub fn p_adic_norm(n: u64, p: u64) -> Result<BigRational, ArithError> {
    let part = p_part(n, p)?;
    Ok(BigRational::new(BigInt::one(), BigInt::from(part)))
}

/// Element a + b√d of the real quadratic field ℚ(√d), d ∈ {2, 5}.
///
/// d = 2 carries the binary octahedral coordinates ((±1±i)/√2 types),
/// d = 5 the golden-ratio coordinates of the binary icosahedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadNum {
    pub a: Rational64,
    pub b: Rational64,
    pub d: i64,
}

impl QuadNum {
    pub fn new(a: Rational64, b: Rational64, d: i64) -> Result<Self, ArithError> {
        if d != 2 && d != 5 {
            return Err(ArithError::UnsupportedField(d));
        }
        Ok(QuadNum { a, b, d })
    }

    pub fn rational(a: Rational64, d: i64) -> Result<Self, ArithError> {
        QuadNum::new(a, Rational64::zero(), d)
    }

    pub fn zero(d: i64) -> Self {
        QuadNum { a: Rational64::zero(), b: Rational64::zero(), d }
    }

    pub fn one(d: i64) -> Self {
        QuadNum { a: Rational64::one(), b: Rational64::zero(), d }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_field(&self, other: &QuadNum) -> Result<(), ArithError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(ArithError::MixedField(self.d, other.d))
        }
    }

    pub fn add(&self, other: &QuadNum) -> Result<QuadNum, ArithError> {
        self.check_field(other)?;
        Ok(QuadNum { a: self.a + other.a, b: self.b + other.b, d: self.d })
    }

    pub fn sub(&self, other: &QuadNum) -> Result<QuadNum, ArithError> {
        self.check_field(other)?;
        Ok(QuadNum { a: self.a - other.a, b: self.b - other.b, d: self.d })
    }

    /// (a₁ + b₁√d)(a₂ + b₂√d) = (a₁a₂ + b₁b₂d) + (a₁b₂ + b₁a₂)√d.
    pub fn mul(&self, other: &QuadNum) -> Result<QuadNum, ArithError> {
        self.check_field(other)?;
        Ok(QuadNum {
            a: self.a * other.a + self.b * other.b * Rational64::from_integer(self.d),
            b: self.a * other.b + self.b * other.a,
            d: self.d,
        })
    }

    pub fn neg(&self) -> QuadNum {
        QuadNum { a: -self.a, b: -self.b, d: self.d }
    }

    /// Galois conjugate a − b√d.
    pub fn conjugate(&self) -> QuadNum {
        QuadNum { a: self.a, b: -self.b, d: self.d }
    }

    /// self · conjugate(self) = a² − d·b², always rational.
    pub fn field_norm(&self) -> Rational64 {
        self.a * self.a - Rational64::from_integer(self.d) * self.b * self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

/// Quaternion w + xi + yj + zk with coefficients in one ℚ(√d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quat {
    pub w: QuadNum,
    pub x: QuadNum,
    pub y: QuadNum,
    pub z: QuadNum,
}

impl Quat {
    pub fn new(w: QuadNum, x: QuadNum, y: QuadNum, z: QuadNum) -> Result<Self, ArithError> {
        let q = Quat { w, x, y, z };
        q.field()?;
        Ok(q)
    }

    pub fn identity(d: i64) -> Self {
        Quat { w: QuadNum::one(d), x: QuadNum::zero(d), y: QuadNum::zero(d), z: QuadNum::zero(d) }
    }

    /// The common field of the four coefficients.
    pub fn field(&self) -> Result<i64, ArithError> {
        let d = self.w.d;
        for c in [&self.x, &self.y, &self.z] {
            if c.d != d {
                return Err(ArithError::MixedField(d, c.d));
            }
        }
        Ok(d)
    }

    /// Hamilton product; both operands must live over the same √d.
    pub fn mul(&self, o: &Quat) -> Result<Quat, ArithError> {
        let d = self.field()?;
        let od = o.field()?;
        if d != od {
            return Err(ArithError::MixedField(d, od));
        }
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&o.w, &o.x, &o.y, &o.z);
        let m = |a: &QuadNum, b: &QuadNum| a.mul(b).expect("same field");
        let add = |a: QuadNum, b: QuadNum| a.add(&b).expect("same field");
        let sub = |a: QuadNum, b: QuadNum| a.sub(&b).expect("same field");
        Ok(Quat {
            w: sub(sub(sub(m(w1, w2), m(x1, x2)), m(y1, y2)), m(z1, z2)),
            x: sub(add(add(m(w1, x2), m(x1, w2)), m(y1, z2)), m(z1, y2)),
            y: add(add(sub(m(w1, y2), m(x1, z2)), m(y1, w2)), m(z1, x2)),
            z: add(sub(add(m(w1, z2), m(x1, y2)), m(y1, x2)), m(z1, w2)),
        })
    }

    /// Quaternion conjugate w − xi − yj − zk; the inverse of a unit.
    pub fn conjugate(&self) -> Quat {
        Quat { w: self.w, x: self.x.neg(), y: self.y.neg(), z: self.z.neg() }
    }

    /// w² + x² + y² + z² as an element of ℚ(√d). Multiplicative.
    pub fn norm(&self) -> QuadNum {
        let sq = |c: &QuadNum| c.mul(c).expect("same field");
        sq(&self.w)
            .add(&sq(&self.x))
            .and_then(|s| s.add(&sq(&self.y)))
            .and_then(|s| s.add(&sq(&self.z)))
            .expect("same field")
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == QuadNum::one(self.w.d)
    }
}
