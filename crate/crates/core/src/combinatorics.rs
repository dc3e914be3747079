//! Exact integer combinatorics: ordered compositions, big-integer binomial
//! coefficients, and the even-split convolution identity that underpins the
//! binomial coefficient family.
//!
//! A composition of `j` into `l` parts is an *ordered* tuple of strictly
//! positive integers summing to `j`; there are `C(j-1, l-1)` of them. All
//! counting here is big-integer exact — `C(64, 32)` already overflows 60
//! bits and the convolution identity is checked over thousands of such
//! values.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("compositions of {total} into {parts} parts: need 1 <= parts <= total")]
    BadShape { total: u32, parts: u32 },
    #[error("convolution identity needs an even copy count, got {0}")]
    OddCopyCount(u64),
    #[error("convolution identity needs 1 <= j <= {copies}, got j={index}")]
    IndexOutOfRange { copies: u64, index: u64 },
}

/// An ordered tuple of strictly positive integers with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being composed (sum of the parts).
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Streaming enumerator over the compositions of `total` into `parts`
/// parts, in lexicographic order of the part tuples.
///
/// Composition counts grow as `2^(total-1)`, so prefer this over the
/// materialized [`compositions`] when only a scan is needed.
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Composition { parts: current })
    }
}

/// Lexicographic successor, or `None` after the last tuple `(total-parts+1, 1, ..., 1)`.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    // Rightmost part > 1 is the donor; the slot before it gets incremented
    // and the tail is refilled with the smallest admissible suffix.
    let donor = parts.iter().rposition(|&p| p > 1)?;
    if donor == 0 {
        return None;
    }
    let mut next = parts.to_vec();
    next[donor - 1] += 1;
    let tail_sum: u32 = parts[donor..].iter().sum::<u32>() - 1;
    let tail_len = next.len() - donor;
    for slot in &mut next[donor..] {
        *slot = 1;
    }
    let last = next.len() - 1;
    next[last] = tail_sum - (tail_len as u32 - 1);
    Some(next)
}

pub fn compositions_iter(total: u32, parts: u32) -> Result<Compositions, CombinatoricsError> {
    if parts == 0 || parts > total {
        return Err(CombinatoricsError::BadShape { total, parts });
    }
    // Lexicographically smallest tuple: all ones, remainder on the last part.
    let mut first = vec![1u32; parts as usize];
    first[parts as usize - 1] = total - parts + 1;
    Ok(Compositions { next: Some(first) })
}

/// All compositions of `total` into `parts` parts, lexicographically sorted.
pub fn compositions(total: u32, parts: u32) -> Result<Vec<Composition>, CombinatoricsError> {
    Ok(compositions_iter(total, parts)?.collect())
}

/// Number of compositions of `total` into `parts` parts: `C(total-1, parts-1)`.
pub fn count_compositions(total: u32, parts: u32) -> Result<BigUint, CombinatoricsError> {
    if parts == 0 || parts > total {
        return Err(CombinatoricsError::BadShape { total, parts });
    }
    Ok(binomial(u64::from(total) - 1, u64::from(parts) - 1))
}

/// Exact big-integer binomial coefficient; `k > n` yields 0.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // Exact at every step: acc holds C(n, i) and C(n, i+1) is integral.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Both sides of the even-split convolution identity
/// `sum_k C(N/2, k) C(N/2 - k, j - 2k) 2^(j-2k) = C(N, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionIdentity {
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub equal: bool,
}

/// Evaluates the convolution identity exactly for even `copies` and
/// `1 <= index <= copies`. The left side sums over the number of 2-parts in
/// a {1,2}-composition of `index`; the right side is `C(copies, index)`.
pub fn subset_convolution_identity(
    copies: u64,
    index: u64,
) -> Result<ConvolutionIdentity, CombinatoricsError> {
    if copies == 0 || copies % 2 != 0 {
        return Err(CombinatoricsError::OddCopyCount(copies));
    }
    if index == 0 || index > copies {
        return Err(CombinatoricsError::IndexOutOfRange { copies, index });
    }
    let half = copies / 2;
    let mut lhs = BigUint::zero();
    for k in 0..=index / 2 {
        let term = binomial(half, k) * binomial(half - k, index - 2 * k);
        lhs += term << (index - 2 * k);
    }
    let rhs = binomial(copies, index);
    let equal = lhs == rhs;
    Ok(ConvolutionIdentity { lhs, rhs, equal })
}
