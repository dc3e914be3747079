//! Copy-scaling laws for quantum resource measures.
//!
//! Some figures of merit evaluated on `N` independent copies of a state
//! depend only on the single-copy value `e` — additively (`N e`) in the
//! simplest case, nonlinearly in general. Such measures obey the
//! composition law `E^(N) = E^(N/K) ∘ E^(K)` on the copy grid
//! `P_a = {1, a, a^2, ...}`, and once the Maclaurin expansion of `E^(a)`
//! is known, every `E^(a^n)` follows from a coefficient recurrence.
//!
//! The crate provides, in matching modules:
//!
//! * [`combinatorics`] — ordered integer compositions and exact
//!   big-integer binomials, including the convolution identity behind the
//!   binomial coefficient family;
//! * [`series`] — the coefficient engine: scaling a seed expansion to
//!   `a^n` copies (exact rational or float), the degree law, evaluation,
//!   and composition-law residuals;
//! * [`closed_form`] — closed forms for the first four coefficients, the
//!   base-2 binomial family `d_j(N) = d_2(2)^(j-1) C(N,j)`, and the
//!   additivity classifier;
//! * [`quantum`] — density matrices with l1/l2 coherence sums, purity,
//!   and brute-force tensor-power oracles: the l1 sum scales as
//!   `(1+c)^N - 1` (a true function of `c`), while the l2 sum scales as
//!   `p^N - (p - c2)^N` and is not a function of `c2` alone;
//! * [`harness`] — scalability suites that compare predictions against
//!   brute-force truth on concrete state families and report verdicts
//!   with witnesses;
//! * [`state_io`] — JSON/CSV density-matrix files.

pub mod closed_form;
pub mod combinatorics;
pub mod harness;
pub mod quantum;
pub mod scalar;
pub mod series;
pub mod state_io;

pub use closed_form::{Additivity, ClosedFormError, SeedSummary};
pub use combinatorics::{CombinatoricsError, Composition};
pub use harness::{
    HarnessError, LabeledState, MeasureUnderTest, ScalabilityReport, SuiteConfig, Verdict,
};
pub use quantum::{
    CoherenceNorm, CoherenceSummary, DensityMatrix, StateError, StateKind,
};
pub use scalar::{Coeff, CoeffValue};
pub use series::{ScaledSeries, SeedSeries, SeriesError, SeriesFile};

/// Exact rational scalar used by the coefficient pipelines.
pub type Rational = num_rational::BigRational;
