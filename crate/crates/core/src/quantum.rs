//! Density matrices, coherence quantifiers, and tensor-power oracles.
//!
//! Coherence here is relative to the storage basis: the stored entries ARE
//! the chosen-basis representation, and no rotation is ever applied. Two
//! quantifiers are computed — the l1 sum `c = sum_{i != j} |rho_ij|` and
//! the l2 sum `c2 = sum_{i != j} |rho_ij|^2` — together with the purity
//! `p = Tr rho^2 = sum_{ij} |rho_ij|^2`.
//!
//! Over `N` independent copies both quantifiers collapse to closed forms:
//!
//! * l1: `(1 + c)^N - 1`, a function of `c` alone (any dimension);
//! * l2: `p^N - (p - c2)^N`, which drags in the purity and is therefore
//!   not a function of `c2` alone.
//!
//! The derivation behind the l2 form is usually written for qubits, but
//! the two sums it uses (`sum |rho_ij|^2 = p`, `sum_l |rho_ll|^2 = p - c2`)
//! are dimension-independent, so it is implemented for any `d`.
//! [`DensityMatrix::brute_force_coherence`] materializes `rho^{tensor N}`
//! and recomputes both norms entry by entry, serving as the independent
//! oracle for these closed forms.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hermiticity / trace / eigenvalue validation tolerance, one order above
/// the round-off accumulated at the kron size cap.
pub const VALIDATION_TOL: f64 = 1e-10;

/// Default cap on the row count of a materialized tensor power
/// (d=2 up to N=12, d=3 up to N=7, d=4 up to N=6).
pub const DEFAULT_KRON_LIMIT: usize = 4096;

#[derive(Debug, Error)]
pub enum StateError {
    #[error("density matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("density matrix dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("not Hermitian: |rho[{i},{j}] - conj(rho[{j},{i}])| = {deviation:.3e}")]
    NotHermitian { i: usize, j: usize, deviation: f64 },
    #[error("trace must be 1, deviation {0:.3e}")]
    TraceNotOne(f64),
    #[error("not positive semidefinite: min eigenvalue {0:.3e}")]
    NotPositiveSemidefinite(f64),
    #[error("tensor power needs {required} rows, above the limit {limit}")]
    KronTooLarge { required: u128, limit: usize },
    #[error("l2 closed form needs 0 < p <= 1 and 0 <= p - c2 <= 1, got c2={c2}, p={p}")]
    BadCoherenceInputs { c2: f64, p: f64 },
    #[error("state file: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Which off-diagonal norm to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoherenceNorm {
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "l2")]
    L2,
}

impl std::str::FromStr for CoherenceNorm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "l1" => Ok(Self::L1),
            "l2" => Ok(Self::L2),
            other => Err(format!("unknown norm {other:?}, expected l1 or l2")),
        }
    }
}

/// The three basis-relative scalars of a state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoherenceSummary {
    pub c: f64,
    pub c2: f64,
    pub purity: f64,
}

/// A validated d x d density matrix (Hermitian, unit trace; positive
/// semidefiniteness only in strict mode). Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity and unit trace (non-strict mode).
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self, StateError> {
        validate(&entries)?;
        Ok(Self { entries })
    }

    /// [`DensityMatrix::new`] plus the positive-semidefiniteness check.
    pub fn new_strict(entries: DMatrix<Complex64>) -> Result<Self, StateError> {
        let state = Self::new(entries)?;
        let min = state.min_eigenvalue();
        if min < -VALIDATION_TOL {
            return Err(StateError::NotPositiveSemidefinite(min));
        }
        Ok(state)
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, StateError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
            return Err(StateError::NotSquare { rows: dim, cols });
        }
        let entries = DMatrix::from_fn(dim, dim, |i, j| rows[i][j]);
        Self::new(entries)
    }

    /// A qubit `[[a, b], [conj(b), 1-a]]`.
    pub fn qubit(a: f64, b: Complex64) -> Result<Self, StateError> {
        let entries = DMatrix::from_row_slice(
            2,
            2,
            &[Complex64::new(a, 0.0), b, b.conj(), Complex64::new(1.0 - a, 0.0)],
        );
        Self::new(entries)
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self, StateError> {
        let p = Complex64::new(1.0 / dim as f64, 0.0);
        Self::new(DMatrix::from_diagonal_element(dim, dim, p))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// `c = sum_{i != j} |rho_ij|`, the off-diagonal absolute sum.
    ///
    /// The equivalent form `sum_{ij} |rho_ij| - 1` additionally relies on a
    /// nonnegative diagonal, which non-strict validation does not check, so
    /// the off-diagonal sum is always the value returned.
    pub fn l1_coherence(&self) -> f64 {
        self.off_diagonal_sum(|z| (z.re * z.re + z.im * z.im).sqrt())
    }

    /// `c2 = sum_{i != j} |rho_ij|^2`.
    pub fn l2_coherence(&self) -> f64 {
        self.off_diagonal_sum(|z| z.re * z.re + z.im * z.im)
    }

    /// `Tr rho^2 = sum_{ij} |rho_ij|^2` for Hermitian `rho`.
    pub fn purity(&self) -> f64 {
        let mut sum = KahanSum::default();
        for chunk in self.entries.as_slice().chunks(4096) {
            sum.add(sum_block(chunk, |z| z.re * z.re + z.im * z.im));
        }
        sum.value()
    }

    /// Sum of `f` over the off-diagonal entries, column by column (the
    /// storage order), splitting each column around its diagonal slot.
    /// Block sums are combined with compensation; at the 4096^2 kron sizes
    /// the accumulated error stays orders below the 1e-10 oracle window.
    fn off_diagonal_sum(&self, f: impl Fn(&Complex64) -> f64 + Copy) -> f64 {
        let d = self.dim();
        let data = self.entries.as_slice();
        let mut sum = KahanSum::default();
        for j in 0..d {
            let column = &data[j * d..(j + 1) * d];
            sum.add(sum_block(&column[..j], f));
            sum.add(sum_block(&column[j + 1..], f));
        }
        sum.value()
    }

    pub fn coherence_summary(&self) -> CoherenceSummary {
        CoherenceSummary {
            c: self.l1_coherence(),
            c2: self.l2_coherence(),
            purity: self.purity(),
        }
    }

    /// Smallest eigenvalue (Hermitian eigendecomposition).
    pub fn min_eigenvalue(&self) -> f64 {
        self.entries
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .fold(f64::INFINITY, |m, &v| m.min(v))
    }

    /// Tensor product with another state.
    pub fn kron(&self, other: &DensityMatrix) -> Result<DensityMatrix, StateError> {
        let required = self.dim() as u128 * other.dim() as u128;
        if required > DEFAULT_KRON_LIMIT as u128 {
            return Err(StateError::KronTooLarge { required, limit: DEFAULT_KRON_LIMIT });
        }
        DensityMatrix::new(kron_raw(&self.entries, &other.entries))
    }

    /// `rho^{tensor copies}` under the default size cap.
    ///
    /// Row `i` of the result indexes the base-d big-endian digit string
    /// `(i_1 ... i_N)`; any fixed convention yields the same coherence
    /// values, this one makes golden matrices reproducible.
    pub fn kron_power(&self, copies: u32) -> Result<DensityMatrix, StateError> {
        self.kron_power_with_limit(copies, DEFAULT_KRON_LIMIT)
    }

    pub fn kron_power_with_limit(
        &self,
        copies: u32,
        limit: usize,
    ) -> Result<DensityMatrix, StateError> {
        let copies = copies.max(1);
        let required = (self.dim() as u128).saturating_pow(copies);
        if required > limit as u128 {
            return Err(StateError::KronTooLarge { required, limit });
        }
        let mut acc = self.entries.clone();
        for _ in 1..copies {
            acc = kron_raw(&acc, &self.entries);
        }
        // Only the final product is validated; intermediates are raw.
        DensityMatrix::new(acc)
    }

    /// Reference oracle: materializes the tensor power and sums the chosen
    /// norm entry by entry.
    pub fn brute_force_coherence(
        &self,
        copies: u32,
        norm: CoherenceNorm,
    ) -> Result<f64, StateError> {
        let power = self.kron_power(copies)?;
        Ok(match norm {
            CoherenceNorm::L1 => power.l1_coherence(),
            CoherenceNorm::L2 => power.l2_coherence(),
        })
    }
}

fn validate(entries: &DMatrix<Complex64>) -> Result<(), StateError> {
    let (rows, cols) = entries.shape();
    if rows != cols {
        return Err(StateError::NotSquare { rows, cols });
    }
    if rows < 2 {
        return Err(StateError::DimensionTooSmall(rows));
    }
    // Hermiticity over the lower triangle, in tiles so the mirrored reads
    // stay cache-resident at the 4096^2 kron sizes.
    const TILE: usize = 64;
    let data = entries.as_slice();
    let tol_sq = VALIDATION_TOL * VALIDATION_TOL;
    for jb in (0..rows).step_by(TILE) {
        for ib in (jb..rows).step_by(TILE) {
            for j in jb..(jb + TILE).min(rows) {
                for i in ib.max(j)..(ib + TILE).min(rows) {
                    let lower = data[j * rows + i];
                    let upper = data[i * rows + j];
                    let re = lower.re - upper.re;
                    let im = lower.im + upper.im;
                    if re * re + im * im > tol_sq {
                        return Err(StateError::NotHermitian {
                            i,
                            j,
                            deviation: (re * re + im * im).sqrt(),
                        });
                    }
                }
            }
        }
    }
    let trace: Complex64 = (0..rows).map(|i| data[i * rows + i]).sum();
    let deviation = (trace - Complex64::new(1.0, 0.0)).norm();
    if deviation > VALIDATION_TOL {
        return Err(StateError::TraceNotOne(deviation));
    }
    Ok(())
}

/// Tensor product in flat column-major form: writes each output column
/// sequentially, reading one scalar of `a` against one column of `b`.
fn kron_raw(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (a_rows, a_cols) = a.shape();
    let (b_rows, b_cols) = b.shape();
    let out_rows = a_rows * b_rows;
    let mut data = vec![Complex64::new(0.0, 0.0); out_rows * a_cols * b_cols];
    let a_data = a.as_slice();
    let b_data = b.as_slice();
    for j_a in 0..a_cols {
        for j_b in 0..b_cols {
            let column = (j_a * b_cols + j_b) * out_rows;
            for i_a in 0..a_rows {
                let scale = a_data[j_a * a_rows + i_a];
                let destination = column + i_a * b_rows;
                let source = j_b * b_rows;
                for i_b in 0..b_rows {
                    data[destination + i_b] = scale * b_data[source + i_b];
                }
            }
        }
    }
    DMatrix::from_vec(out_rows, a_cols * b_cols, data)
}

/// `(1 + c)^N - 1`, the N-copy l1 coherence as a function of the
/// single-copy value alone.
pub fn l1_n_copies_closed(c: f64, copies: u32) -> f64 {
    (1.0 + c).powi(copies as i32) - 1.0
}

/// `p^N - (p - c2)^N`, the N-copy l2 sum; depends on the purity as well.
pub fn l2_n_copies_closed(c2: f64, purity: f64, copies: u32) -> Result<f64, StateError> {
    let slack = 1e-12;
    let gap = purity - c2;
    if purity <= 0.0 || purity > 1.0 + slack || gap < -slack || gap > 1.0 + slack {
        return Err(StateError::BadCoherenceInputs { c2, p: purity });
    }
    Ok(purity.powi(copies as i32) - gap.powi(copies as i32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StateKind {
    #[serde(rename = "pure")]
    Pure,
    #[serde(rename = "mixed")]
    Mixed,
}

impl std::str::FromStr for StateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pure" => Ok(Self::Pure),
            "mixed" => Ok(Self::Mixed),
            other => Err(format!("unknown state kind {other:?}, expected pure or mixed")),
        }
    }
}

/// Deterministic random state: a normalized Gaussian vector's outer product
/// (pure) or a trace-normalized Ginibre square `G G†` (mixed, generically
/// full rank).
pub fn random_state(dim: usize, kind: StateKind, rng_seed: u64) -> DensityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    random_state_with(dim, kind, &mut rng)
}

/// As [`random_state`], drawing from a caller-owned generator.
pub fn random_state_with<R: Rng + ?Sized>(
    dim: usize,
    kind: StateKind,
    rng: &mut R,
) -> DensityMatrix {
    let entries = match kind {
        StateKind::Pure => {
            let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            DMatrix::from_fn(dim, dim, |i, j| v[i] * v[j].conj() / (norm * norm))
        }
        StateKind::Mixed => {
            let g = DMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng));
            let s = &g * g.adjoint();
            let trace: f64 = (0..dim).map(|i| s[(i, i)].re).sum();
            s / Complex64::new(trace, 0.0)
        }
    };
    DensityMatrix::new(entries).expect("generated states are valid by construction")
}

/// A random qubit of exactly the requested purity: the diagonal is solved
/// from `a^2 + (1-a)^2 = p - c2` with `c2` drawn uniformly from the
/// admissible range `[0, p - 1/2]` and a uniform off-diagonal phase.
pub fn random_fixed_purity_qubit<R: Rng + ?Sized>(
    purity: f64,
    rng: &mut R,
) -> Result<DensityMatrix, StateError> {
    if !(0.5..=1.0).contains(&purity) {
        return Err(StateError::BadCoherenceInputs { c2: 0.0, p: purity });
    }
    let c2: f64 = rng.random::<f64>() * (purity - 0.5);
    let phase: f64 = rng.random::<f64>() * std::f64::consts::TAU;
    fixed_purity_qubit(purity, c2, phase)
}

/// The qubit with `2|b|^2 = c2`, purity exactly `purity`, and off-diagonal
/// phase `phase`. Requires `0 <= c2 <= purity - 1/2`.
pub fn fixed_purity_qubit(purity: f64, c2: f64, phase: f64) -> Result<DensityMatrix, StateError> {
    let diag_sq = purity - c2;
    if !(0.0..=1.0).contains(&c2) || diag_sq < 0.5 - 1e-12 || purity > 1.0 + 1e-12 {
        return Err(StateError::BadCoherenceInputs { c2, p: purity });
    }
    let a = 0.5 * (1.0 + (2.0 * diag_sq - 1.0).max(0.0).sqrt());
    let b = Complex64::from_polar((c2 / 2.0).sqrt(), phase);
    DensityMatrix::qubit(a, b)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Compensated (Kahan) accumulator; the 4096^2-entry oracle sums need the
/// extra digits to stay inside the 1e-10 agreement window.
#[derive(Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, value: f64) {
        let y = value - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn plus_state() -> DensityMatrix {
        let h = Complex64::new(0.5, 0.0);
        DensityMatrix::from_rows(vec![vec![h, h], vec![h, h]]).unwrap()
    }

    fn witness_qubit() -> DensityMatrix {
        DensityMatrix::qubit(0.5, Complex64::new(0.3, 0.0)).unwrap()
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        let bad_trace = DMatrix::from_diagonal_element(2, 2, Complex64::new(1.0, 0.0));
        assert!(matches!(
            DensityMatrix::new(bad_trace),
            Err(StateError::TraceNotOne(_))
        ));

        let non_hermitian = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.1, 0.0),
                Complex64::new(0.5, 0.0),
            ],
        );
        assert!(matches!(
            DensityMatrix::new(non_hermitian),
            Err(StateError::NotHermitian { .. })
        ));

        let tiny = DMatrix::from_diagonal_element(1, 1, Complex64::new(1.0, 0.0));
        assert!(matches!(
            DensityMatrix::new(tiny),
            Err(StateError::DimensionTooSmall(1))
        ));
    }

    #[test]
    fn strict_mode_checks_eigenvalues() {
        // Hermitian, unit trace, but indefinite.
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(1.2, 0.0),
                Complex64::new(0.8, 0.0),
                Complex64::new(0.8, 0.0),
                Complex64::new(-0.2, 0.0),
            ],
        );
        assert!(DensityMatrix::new(m.clone()).is_ok());
        assert!(matches!(
            DensityMatrix::new_strict(m),
            Err(StateError::NotPositiveSemidefinite(_))
        ));
        assert!(DensityMatrix::new_strict(plus_state().entries().clone()).is_ok());
    }

    #[test]
    fn l1_examples() {
        assert_eq!(DensityMatrix::maximally_mixed(2).unwrap().l1_coherence(), 0.0);
        assert_relative_eq!(plus_state().l1_coherence(), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn l2_and_purity_examples() {
        let rho = witness_qubit();
        assert_relative_eq!(rho.l2_coherence(), 0.18, max_relative = 1e-15);
        assert_relative_eq!(rho.purity(), 0.68, max_relative = 1e-15);
        assert_relative_eq!(plus_state().l2_coherence(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(plus_state().purity(), 1.0, max_relative = 1e-15);
        assert_eq!(DensityMatrix::maximally_mixed(3).unwrap().l2_coherence(), 0.0);
        assert_relative_eq!(
            DensityMatrix::maximally_mixed(2).unwrap().purity(),
            0.5,
            max_relative = 1e-15
        );
    }

    #[test]
    fn kron_power_examples() {
        let rho = witness_qubit();
        let once = rho.kron_power(1).unwrap();
        assert_eq!(once, rho);

        let mixed2 = DensityMatrix::maximally_mixed(2)
            .unwrap()
            .kron_power(2)
            .unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { 0.25 } else { 0.0 };
                assert_relative_eq!(mixed2.entry(i, j).re, expected, max_relative = 1e-15);
                assert_eq!(mixed2.entry(i, j).im, 0.0);
            }
        }

        let plus2 = plus_state().kron_power(2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_relative_eq!(plus2.entry(i, j).re, 0.25, max_relative = 1e-15);
            }
        }

        assert!(matches!(
            witness_qubit().kron_power(13),
            Err(StateError::KronTooLarge { .. })
        ));
    }

    #[test]
    fn brute_force_examples() {
        let diag = DensityMatrix::maximally_mixed(3).unwrap();
        assert_eq!(diag.brute_force_coherence(4, CoherenceNorm::L1).unwrap(), 0.0);

        let plus3 = plus_state()
            .brute_force_coherence(3, CoherenceNorm::L1)
            .unwrap();
        assert_relative_eq!(plus3, 7.0, max_relative = 1e-12);

        let l2_four = witness_qubit()
            .brute_force_coherence(4, CoherenceNorm::L2)
            .unwrap();
        assert_relative_eq!(l2_four, 0.68f64.powi(4) - 0.5f64.powi(4), epsilon = 1e-12);
        assert_relative_eq!(l2_four, 0.15131376, epsilon = 1e-12);
    }

    #[test]
    fn closed_forms() {
        assert_relative_eq!(l1_n_copies_closed(0.3, 1), 0.3, max_relative = 1e-15);
        assert_relative_eq!(
            l1_n_copies_closed(0.3, 2),
            2.0 * 0.3 + 0.09,
            max_relative = 1e-15
        );
        assert_eq!(l1_n_copies_closed(1.0, 4), 15.0);

        assert_relative_eq!(
            l2_n_copies_closed(0.18, 0.68, 1).unwrap(),
            0.18,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            l2_n_copies_closed(0.18, 0.68, 2).unwrap(),
            2.0 * 0.68 * 0.18 - 0.18 * 0.18,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            l2_n_copies_closed(0.5, 1.0, 2).unwrap(),
            0.75,
            max_relative = 1e-15
        );
        assert!(l2_n_copies_closed(0.5, 0.2, 2).is_err());
        assert!(l2_n_copies_closed(0.1, 1.2, 2).is_err());
    }

    #[test]
    fn random_states_are_valid_and_deterministic() {
        for seed in 0..100u64 {
            let pure = random_state(2, StateKind::Pure, seed);
            assert_relative_eq!(pure.purity(), 1.0, epsilon = 1e-12);
            let mixed = random_state(3, StateKind::Mixed, seed);
            assert!(mixed.purity() < 1.0);
            assert!(mixed.purity() >= 1.0 / 3.0 - 1e-12);
            let summary = mixed.coherence_summary();
            assert!(summary.purity - summary.c2 >= 0.0);
            assert!(summary.purity - summary.c2 <= 1.0);
        }
        let a = random_state(4, StateKind::Mixed, 7);
        let b = random_state(4, StateKind::Mixed, 7);
        assert_eq!(a.entries(), b.entries());
    }

    #[test]
    fn fixed_purity_qubits_hit_their_targets() {
        let rho = fixed_purity_qubit(0.68, 0.18, 0.0).unwrap();
        assert_relative_eq!(rho.purity(), 0.68, epsilon = 1e-12);
        assert_relative_eq!(rho.l2_coherence(), 0.18, epsilon = 1e-12);
        assert_relative_eq!(rho.entry(0, 0).re, 0.5, epsilon = 1e-12);

        let pure = fixed_purity_qubit(1.0, 0.18, 0.0).unwrap();
        assert_relative_eq!(pure.purity(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(pure.l2_coherence(), 0.18, epsilon = 1e-12);
        assert_relative_eq!(pure.entry(0, 0).re, 0.9, epsilon = 1e-12);

        assert!(fixed_purity_qubit(0.68, 0.3, 0.0).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let rho = random_fixed_purity_qubit(0.8, &mut rng).unwrap();
            assert_relative_eq!(rho.purity(), 0.8, epsilon = 1e-12);
            assert!(rho.min_eigenvalue() >= -1e-12);
        }
    }
}
