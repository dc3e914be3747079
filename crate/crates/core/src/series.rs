//! Maclaurin-coefficient engine for copy-scaling measures.
//!
//! A measure that depends only on its single-copy value `e` obeys the
//! composition law `E^(N) = E^(N/K) ∘ E^(K)` on the copy grid
//! `P_a = {1, a, a^2, ...}`. Given the expansion of `E^(a)` (the *seed*),
//! every `E^(a^n)` is determined: this module generates those coefficients
//! by iterating the composition recurrence
//!
//! `d_j(N) = sum_l d_l(N/a) * [coefficient of e^j in (E^(a)(e))^l]`,
//!
//! where the inner bracket is the sum over all compositions of `j` into `l`
//! parts of the corresponding seed-coefficient products. The bracket is
//! evaluated through truncated polynomial powers, which groups the
//! composition sum by multinomial instead of walking the `2^(j-1)` tuples
//! one by one; the tuple-by-tuple sum is kept as a test oracle.
//!
//! Polynomial seeds of degree `L(a)` stay polynomial with the exact degree
//! law `L(a^n) = L(a)^n`. Infinite seeds are handled through a mandatory
//! truncation order `T`; outputs are then correct through order `T` because
//! `d_j` only ever reads seed coefficients of order `<= j`.

use crate::scalar::{Coeff, CoeffValue};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on generated series length; the degree law is exponential in `n`.
pub const MAX_SERIES_LEN: usize = 4096;

/// Evaluation points beyond this hint trigger a warning: convergence of a
/// truncated expansion is only locally guaranteed around `e = 0`.
pub const RADIUS_HINT: f64 = 1.0;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("seed base must be at least 2, got {0}")]
    BadBase(u32),
    #[error("seed series must store at least one coefficient")]
    EmptySeed,
    #[error("seed series requires d_1 > 0, got {0}")]
    NonpositiveLeadingCoefficient(String),
    #[error("degree law overflow: series would need {required} coefficients (cap {cap})")]
    DegreeOverflow { required: u128, cap: usize },
    #[error("seed degree must be at least 1")]
    ZeroDegree,
    #[error("truncation order {requested} exceeds the seed's stored order {available}")]
    TruncationBeyondSeed { requested: usize, available: usize },
    #[error("truncation order must be at least 1")]
    ZeroTruncation,
    #[error("an infinite seed requires an explicit truncation order")]
    MissingTruncation,
    #[error("copy count {base}^{exponent} overflows")]
    CopyCountOverflow { base: u32, exponent: u32 },
    #[error("series evaluation requires e >= 0")]
    NegativeArgument,
    #[error("composition-law split requires 0 < k < n, got n={n}, k={k}")]
    BadSplit { n: u32, k: u32 },
}

/// The expansion of a measure at the base copy count `a`: coefficients
/// `d_1(a), d_2(a), ...` with `d_0 = 0` implicit and `d_1(a) > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedSeries<T> {
    base: u32,
    coeffs: Vec<T>,
    finite: bool,
}

impl<T: Coeff> SeedSeries<T> {
    /// A polynomial seed: the stored coefficients are the entire series,
    /// so the degree law applies exactly.
    pub fn polynomial(base: u32, coeffs: Vec<T>) -> Result<Self, SeriesError> {
        Self::validate(base, &coeffs)?;
        Ok(Self { base, coeffs, finite: true })
    }

    /// An infinite seed stored through order `coeffs.len()`; scaling such a
    /// seed requires an explicit truncation no deeper than what is stored.
    pub fn truncated(base: u32, coeffs: Vec<T>) -> Result<Self, SeriesError> {
        Self::validate(base, &coeffs)?;
        Ok(Self { base, coeffs, finite: false })
    }

    fn validate(base: u32, coeffs: &[T]) -> Result<(), SeriesError> {
        if base < 2 {
            return Err(SeriesError::BadBase(base));
        }
        let head = coeffs.first().ok_or(SeriesError::EmptySeed)?;
        // d_1(a) = 0 makes the scaling exponent log_a(d_1) undefined; such
        // seeds are rejected outright instead of guessing a limit.
        if *head <= T::zero() {
            return Err(SeriesError::NonpositiveLeadingCoefficient(head.to_string()));
        }
        Ok(())
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// Degree `L(a)` for polynomial seeds, `None` for infinite ones.
    pub fn degree(&self) -> Option<usize> {
        self.finite.then_some(self.coeffs.len())
    }

    /// Seed coefficient `d_j(a)` (1-based), zero beyond the stored order.
    pub fn coefficient(&self, j: usize) -> T {
        if j >= 1 && j <= self.coeffs.len() {
            self.coeffs[j - 1].clone()
        } else {
            T::zero()
        }
    }

    /// Expands the seed to `N = a^n` copies by iterating the composition
    /// recurrence one base-`a` step at a time. Every intermediate exponent
    /// is kept in a call-local table; nothing is shared across calls.
    ///
    /// For polynomial seeds `truncation` is optional and, when given, caps
    /// the output at that order. Infinite seeds must supply it.
    pub fn scale_coefficients(
        &self,
        exponent: u32,
        truncation: Option<usize>,
    ) -> Result<ScaledSeries<T>, SeriesError> {
        if let Some(t) = truncation {
            if t == 0 {
                return Err(SeriesError::ZeroTruncation);
            }
            if !self.finite && t > self.coeffs.len() {
                return Err(SeriesError::TruncationBeyondSeed {
                    requested: t,
                    available: self.coeffs.len(),
                });
            }
        }
        if !self.finite && truncation.is_none() {
            return Err(SeriesError::MissingTruncation);
        }
        let copies = checked_copies(self.base, exponent)?;
        if exponent == 0 {
            return Ok(ScaledSeries::identity(self.base));
        }

        // Formal length of E^(a^m); saturates at u128::MAX, which is fine
        // because everything is clamped to the target below.
        let formal_len = |m: u32| -> u128 {
            if self.finite {
                (self.coeffs.len() as u128).saturating_pow(m)
            } else {
                u128::MAX
            }
        };
        let full = formal_len(exponent);
        let target = match truncation {
            Some(t) => (t as u128).min(full),
            None => full,
        };
        if target > MAX_SERIES_LEN as u128 {
            return Err(SeriesError::DegreeOverflow { required: full, cap: MAX_SERIES_LEN });
        }
        let truncated = target < full;
        let target = target as usize;

        let clamp = |m: u32| formal_len(m).min(target as u128) as usize;
        let mut coeffs: Vec<T> = self.coeffs.iter().take(clamp(1)).cloned().collect();
        for m in 2..=exponent {
            coeffs = compose_step(&coeffs, &self.coeffs, clamp(m));
        }
        Ok(ScaledSeries {
            base: self.base,
            exponent,
            copies,
            coeffs,
            truncated,
        })
    }

    /// `d_3(a^n)` through the dedicated third-order recurrence
    /// `d_3(N) = d_1(N/a) d_3(a) + d_3(N/a) d_1(a)^3 + 2 d_2(N/a) d_1(a) d_2(a)`,
    /// tracking only the first three coefficients. Cross-checks the full
    /// engine and the closed form.
    pub fn third_order_recurrence(&self, exponent: u32) -> T {
        let s1 = self.coefficient(1);
        let s2 = self.coefficient(2);
        let s3 = self.coefficient(3);
        if exponent == 0 {
            return T::zero();
        }
        let two = T::from_integer(2);
        let (mut p1, mut p2, mut p3) = (s1.clone(), s2.clone(), s3.clone());
        for _ in 1..exponent {
            let next3 = p1.clone() * s3.clone()
                + p3 * s1.clone() * s1.clone() * s1.clone()
                + two.clone() * p2.clone() * s1.clone() * s2.clone();
            let next2 = p1.clone() * s2.clone() + p2 * s1.clone() * s1.clone();
            p1 = p1 * s1.clone();
            p2 = next2;
            p3 = next3;
        }
        p3
    }

    /// Checks `E^(a^n)(e) = E^(a^(n-k))(E^(a^k)(e))` over a grid of
    /// evaluation points. For polynomial seeds in exact arithmetic the
    /// residual is identically zero; for truncated seeds it reports the
    /// truncation remainder instead of asserting.
    pub fn check_composition_law(
        &self,
        n: u32,
        k: u32,
        e_grid: &[T],
        tol: f64,
    ) -> Result<CompositionLawReport<T>, SeriesError> {
        if k == 0 || k >= n {
            return Err(SeriesError::BadSplit { n, k });
        }
        let truncation = (!self.finite).then_some(self.coeffs.len());
        let whole = self.scale_coefficients(n, truncation)?;
        let inner = self.scale_coefficients(k, truncation)?;
        let outer = self.scale_coefficients(n - k, truncation)?;

        let mut residuals = Vec::with_capacity(e_grid.len());
        let mut max_residual = 0.0f64;
        for e in e_grid {
            if *e < T::zero() {
                return Err(SeriesError::NegativeArgument);
            }
            // Polynomial identity check: the inner value may leave the
            // measure's domain for sign-mixed seeds, so evaluate formally.
            let lhs = whole.horner(e);
            let rhs = outer.horner(&inner.horner(e));
            let residual = (lhs - rhs).abs();
            max_residual = max_residual.max(residual.to_f64());
            residuals.push((e.clone(), residual));
        }
        Ok(CompositionLawReport {
            copies: whole.copies(),
            split: inner.copies(),
            pass: max_residual <= tol,
            max_residual,
            residuals,
        })
    }
}

/// Coefficients of `E^(N)` for `N = a^n`, generated from a seed.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledSeries<T> {
    base: u32,
    exponent: u32,
    copies: u64,
    coeffs: Vec<T>,
    truncated: bool,
}

impl<T: Coeff> ScaledSeries<T> {
    /// The one-copy identity `E^(1)(e) = e`.
    pub fn identity(base: u32) -> Self {
        Self {
            base,
            exponent: 0,
            copies: 1,
            coeffs: vec![T::one()],
            truncated: false,
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn copies(&self) -> u64 {
        self.copies
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    /// `d_j(N)` (1-based), zero beyond the stored length.
    pub fn coefficient(&self, j: usize) -> T {
        if j >= 1 && j <= self.coeffs.len() {
            self.coeffs[j - 1].clone()
        } else {
            T::zero()
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the stored coefficients are a truncation rather than the
    /// full polynomial.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Evaluates `sum_j d_j(N) e^j` in nested Horner form. Rejects `e < 0`;
    /// warns (without failing) when `e` exceeds [`RADIUS_HINT`].
    pub fn evaluate(&self, e: &T) -> Result<T, SeriesError> {
        if *e < T::zero() {
            return Err(SeriesError::NegativeArgument);
        }
        if e.to_f64() > RADIUS_HINT {
            log::warn!(
                "evaluating a copy-scaled series at e = {} beyond the convergence hint {}",
                e,
                RADIUS_HINT
            );
        }
        Ok(self.horner(e))
    }

    fn horner(&self, e: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * e.clone() + c.clone();
        }
        acc * e.clone()
    }

    pub fn to_series_file(&self) -> SeriesFile {
        SeriesFile {
            base: self.base,
            exponent: self.exponent,
            coefficients: self.coeffs.iter().map(Coeff::to_coeff_value).collect(),
            truncated: self.truncated,
        }
    }

    pub fn from_series_file(file: &SeriesFile) -> Result<Self, String> {
        let coeffs = file
            .coefficients
            .iter()
            .map(T::from_coeff_value)
            .collect::<Result<Vec<_>, _>>()?;
        let copies = checked_copies(file.base, file.exponent)
            .map_err(|e| e.to_string())?;
        Ok(Self {
            base: file.base,
            exponent: file.exponent,
            copies,
            coeffs,
            truncated: file.truncated,
        })
    }
}

/// JSON form of a series: `{base, exponent, coefficients}` with rationals
/// encoded as `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesFile {
    pub base: u32,
    pub exponent: u32,
    pub coefficients: Vec<CoeffValue>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

/// Residuals of the composition-law check on a grid of points.
#[derive(Debug, Clone)]
pub struct CompositionLawReport<T> {
    pub copies: u64,
    pub split: u64,
    pub residuals: Vec<(T, T)>,
    pub max_residual: f64,
    pub pass: bool,
}

/// The exact degree law `L(a^n) = L(a)^n` for polynomial seeds, with
/// overflow past [`MAX_SERIES_LEN`] reported as an error.
pub fn degree_law(seed_degree: usize, exponent: u32) -> Result<usize, SeriesError> {
    if seed_degree == 0 {
        return Err(SeriesError::ZeroDegree);
    }
    let required = (seed_degree as u128).saturating_pow(exponent);
    if required > MAX_SERIES_LEN as u128 {
        return Err(SeriesError::DegreeOverflow { required, cap: MAX_SERIES_LEN });
    }
    Ok(required as usize)
}

fn checked_copies(base: u32, exponent: u32) -> Result<u64, SeriesError> {
    u64::from(base)
        .checked_pow(exponent)
        .ok_or(SeriesError::CopyCountOverflow { base, exponent })
}

/// One recurrence step: coefficients of `outer ∘ inner` through `out_len`.
///
/// Both operands are constant-free (`index i` holds the `e^(i+1)`
/// coefficient), so the power table `inner^l` starts at degree `l` and the
/// loop can stop once `l` exceeds the output order.
fn compose_step<T: Coeff>(outer: &[T], inner: &[T], out_len: usize) -> Vec<T> {
    let mut acc = vec![T::zero(); out_len];
    let mut power: Vec<T> = inner.iter().take(out_len).cloned().collect();
    for (idx, d_l) in outer.iter().enumerate() {
        let l = idx + 1;
        if l > out_len {
            break;
        }
        if l > 1 {
            power = mul_truncated(&power, inner, out_len);
        }
        if d_l.is_zero() {
            continue;
        }
        for (i, p) in power.iter().enumerate() {
            if !p.is_zero() {
                acc[i] += d_l.clone() * p.clone();
            }
        }
    }
    acc
}

/// Truncated product of two constant-free series (index i ↔ degree i+1).
fn mul_truncated<T: Coeff>(a: &[T], b: &[T], out_len: usize) -> Vec<T> {
    let mut out = vec![T::zero(); out_len];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let k = i + j + 1;
            if k >= out_len {
                break;
            }
            out[k] += ai.clone() * bj.clone();
        }
    }
    out
}
