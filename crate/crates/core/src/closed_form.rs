//! Closed-form coefficient formulas for copy-scaled series.
//!
//! Writing `d1 = d_1(a)` and `nu = log_a(d1)`, the first coefficients of
//! `E^(a^n)` admit closed forms built entirely out of powers of `d1`: every
//! factor the general solution writes as `(N/a^m)^nu` equals `d1^(n-m)`
//! exactly, so no logarithm or real exponentiation is ever evaluated here.
//! The `d1 = 1` case makes those formulas divide by zero and is reported as
//! a typed singular error — the recurrence engine remains the reference
//! behavior there.
//!
//! The two-coefficient base-2 family is special: with `d_1(2) = 2` the
//! whole series collapses to `d_j(N) = d_2(2)^(j-1) C(N, j)`, which
//! [`binomial_family`] evaluates exactly.

use crate::combinatorics::binomial;
use crate::scalar::Coeff;
use crate::series::SeedSeries;
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("closed form is singular at d1 = 1 (it divides by d1 - 1)")]
    SingularInput,
    #[error("the fourth-order closed form requires a two-coefficient seed (d3 = 0)")]
    NotTwoCoefficient,
    #[error("binomial family requires a power-of-two copy count, got {0}")]
    NotPowerOfTwo(u64),
    #[error("binomial family index j={index} is outside 1..={copies}")]
    IndexBeyondDegree { copies: u64, index: u64 },
    #[error("seed summary requires d1 > 0, got {0}")]
    NonpositiveD1(String),
    #[error("seed summary base must be at least 2, got {0}")]
    BadBase(u32),
}

/// First-order additivity classification of a seed: the comparison is
/// `d1` against `a` itself (equivalently `nu` against 1), done in exact
/// arithmetic for rational scalars and to 1e-12 relative for floats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Additivity {
    #[serde(rename = "subadditive")]
    Subadditive,
    #[serde(rename = "additive-first-order")]
    AdditiveFirstOrder,
    #[serde(rename = "superadditive")]
    Superadditive,
}

/// The data the closed forms consume: base `a` and the first three seed
/// coefficients. `nu = log_a(d1)` is derived at construction and kept for
/// reporting only; all computation uses `d1` directly.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedSummary<T> {
    base: u32,
    d1: T,
    d2: T,
    d3: T,
    nu: f64,
}

impl<T: Coeff> SeedSummary<T> {
    pub fn new(base: u32, d1: T, d2: T, d3: T) -> Result<Self, ClosedFormError> {
        if base < 2 {
            return Err(ClosedFormError::BadBase(base));
        }
        if d1 <= T::zero() {
            return Err(ClosedFormError::NonpositiveD1(d1.to_string()));
        }
        let nu = d1.to_f64().ln() / f64::from(base).ln();
        Ok(Self { base, d1, d2, d3, nu })
    }

    /// Summarizes a validated seed by its first three coefficients.
    pub fn from_seed(seed: &SeedSeries<T>) -> Self {
        Self::new(
            seed.base(),
            seed.coefficient(1),
            seed.coefficient(2),
            seed.coefficient(3),
        )
        .expect("a validated seed always summarizes")
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn d1(&self) -> &T {
        &self.d1
    }

    pub fn d2(&self) -> &T {
        &self.d2
    }

    pub fn d3(&self) -> &T {
        &self.d3
    }

    /// The scaling exponent `log_a(d1)`, as a float, for reporting.
    pub fn nu(&self) -> f64 {
        self.nu
    }

    fn d1_pow(&self, m: u32) -> T {
        num_traits::pow(self.d1.clone(), m as usize)
    }
}

/// `d_1(a^n) = d1^n`, the exact form of `N^nu`.
pub fn closed_form_d1<T: Coeff>(s: &SeedSummary<T>, n: u32) -> T {
    s.d1_pow(n)
}

/// The second-order coefficient `d2 * d1^(n-1) * (d1^n - 1) / (d1 - 1)`.
pub fn closed_form_d2<T: Coeff>(s: &SeedSummary<T>, n: u32) -> Result<T, ClosedFormError> {
    if n == 0 {
        return Ok(T::zero());
    }
    if s.d1.is_one() {
        return Err(ClosedFormError::SingularInput);
    }
    let one = T::one();
    Ok(s.d2.clone() * s.d1_pow(n - 1) * (s.d1_pow(n) - one.clone()) / (s.d1.clone() - one))
}

/// The third-order coefficient,
/// `d3 d1^(n-1) (d1^2n - 1)/(d1^2 - 1) + 2 d2^2 d1^(n-1) (d1^n - 1)(d1^(n-1) - 1) / ((d1 - 1)(d1^2 - 1))`.
pub fn closed_form_d3<T: Coeff>(s: &SeedSummary<T>, n: u32) -> Result<T, ClosedFormError> {
    if n == 0 {
        return Ok(T::zero());
    }
    // d1 > 0 is enforced, so d1^2 = 1 also collapses to d1 = 1.
    if s.d1.is_one() {
        return Err(ClosedFormError::SingularInput);
    }
    let one = T::one();
    let two = T::from_integer(2);
    let d1sq = s.d1_pow(2);
    let growth = s.d1_pow(n - 1);
    let first = s.d3.clone() * growth.clone() * (s.d1_pow(2 * n) - one.clone())
        / (d1sq.clone() - one.clone());
    let second = two
        * s.d2.clone()
        * s.d2.clone()
        * growth
        * (s.d1_pow(n) - one.clone())
        * (s.d1_pow(n - 1) - one.clone())
        / ((s.d1.clone() - one.clone()) * (d1sq - one));
    Ok(first + second)
}

/// The fourth-order coefficient of a *two-coefficient* seed,
/// `d2^3 (N/a^3)^nu ((N^nu-1)/(a^nu-1)^2)((N^nu-a^nu)/(a^2nu-1))((N^nu(5+a^nu)-1-5a^2nu)/(1+a^nu+a^2nu))`,
/// with every `nu`-power rewritten as a power of `d1`.
pub fn closed_form_d4_two_coeff<T: Coeff>(
    s: &SeedSummary<T>,
    n: u32,
) -> Result<T, ClosedFormError> {
    if !s.d3.is_zero() {
        return Err(ClosedFormError::NotTwoCoefficient);
    }
    if n <= 1 {
        // d_4(1) = 0 and a two-coefficient seed has d_4(a) = 0.
        return Ok(T::zero());
    }
    if s.d1.is_one() {
        return Err(ClosedFormError::SingularInput);
    }
    let one = T::one();
    let five = T::from_integer(5);
    let d1sq = s.d1_pow(2);
    // (N/a^3)^nu * (N^nu - a^nu) = d1^(n-2) * (d1^(n-1) - 1).
    let numerator = s.d2.clone()
        * s.d2.clone()
        * s.d2.clone()
        * s.d1_pow(n - 2)
        * (s.d1_pow(n) - one.clone())
        * (s.d1_pow(n - 1) - one.clone())
        * (s.d1_pow(n) * (five.clone() + s.d1.clone()) - one.clone() - five * d1sq.clone());
    let gap = s.d1.clone() - one.clone();
    let denominator =
        gap.clone() * gap * (d1sq.clone() - one.clone()) * (one + s.d1.clone() + d1sq);
    Ok(numerator / denominator)
}

/// `d_j(N) = d2^(j-1) C(N, j)` for the two-coefficient base-2 family with
/// `d_1(2) = 2`. Exact whenever the scalar is exact.
pub fn binomial_family<T: Coeff>(
    d2_of_2: &T,
    copies: u64,
    index: u64,
) -> Result<T, ClosedFormError> {
    if copies == 0 || !copies.is_power_of_two() {
        return Err(ClosedFormError::NotPowerOfTwo(copies));
    }
    if index == 0 || index > copies {
        return Err(ClosedFormError::IndexBeyondDegree { copies, index });
    }
    let weight = num_traits::pow(d2_of_2.clone(), (index - 1) as usize);
    let count = BigInt::from(binomial(copies, index));
    Ok(weight * T::from_bigint(&count))
}

/// Subadditive, additive (to first order), or superadditive, by comparing
/// `d1` with `a`. The trichotomy is preserved under scaling: `d_1(N) = d1^n`
/// against `N = a^n` sorts the same way for every `n`.
pub fn classify_additivity<T: Coeff>(s: &SeedSummary<T>) -> Additivity {
    let base = T::from_integer(i64::from(s.base));
    if s.d1.approx_eq(&base, 1e-12) {
        Additivity::AdditiveFirstOrder
    } else if s.d1 < base {
        Additivity::Subadditive
    } else {
        Additivity::Superadditive
    }
}

/// The third-order truncation `d_1(N) e + d_2(N) e^2 + d_3(N) e^3`,
/// evaluated in Horner form.
pub fn third_order_expansion<T: Coeff>(
    s: &SeedSummary<T>,
    n: u32,
    e: &T,
) -> Result<T, ClosedFormError> {
    let t1 = closed_form_d1(s, n);
    let t2 = closed_form_d2(s, n)?;
    let t3 = closed_form_d3(s, n)?;
    Ok(e.clone() * (t1 + e.clone() * (t2 + e.clone() * t3)))
}
