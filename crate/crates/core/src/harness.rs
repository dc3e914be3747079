//! Scalability testing of measures on concrete states.
//!
//! A measure is a candidate "function of the single-copy value" when its
//! N-copy truth `E(rho^{tensor N})` can be predicted from `e = E(rho)` and
//! `N` alone. The harness probes this two ways:
//!
//! * definition residuals `|true(rho, N) - predicted(e, N)|`, plus direct
//!   collision evidence — two states sharing `e` but disagreeing in truth;
//! * composition residuals `|true(rho, N) - predicted(predicted(e, K), N/K)|`
//!   along the splits of the power-of-two copy grid.
//!
//! The built-in l1 measure passes both; the l2 quantity fails both on mixed
//! states (its truth drags in the purity) and passes on pure states, where
//! its predicted series is the alternating binomial family.
//!
//! Verdicts read "consistent-with-1S", never "is-1S": a finite test cannot
//! prove scalability, only fail to refute it.

use crate::quantum::{
    fixed_purity_qubit, l1_n_copies_closed, random_state_with, CoherenceNorm, DensityMatrix,
    StateError, StateKind,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default residual tolerance: two orders above accumulated float error at
/// the kron size cap, three below the smallest genuine l2 violation seen on
/// generic mixed qubits.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Two states "collide" when their single-copy values agree this closely.
pub const COLLISION_E_TOL: f64 = 1e-9;

/// Purity of the engineered fixed-purity witness family.
pub const DEFAULT_REFERENCE_PURITY: f64 = 0.68;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },
    #[error(transparent)]
    State(#[from] StateError),
}

fn config_err(field: &str, message: impl Into<String>) -> HarnessError {
    HarnessError::Config { field: field.into(), message: message.into() }
}

type SingleCopyFn = Box<dyn Fn(&DensityMatrix) -> f64 + Send + Sync>;
type NCopyTrueFn = Box<dyn Fn(&DensityMatrix, u32) -> Result<f64, StateError> + Send + Sync>;
type NCopyPredictedFn = Box<dyn Fn(f64, u32) -> f64 + Send + Sync>;

/// A measure under scalability test: its single-copy value, its N-copy
/// truth (brute force or closed form), and the candidate prediction
/// `E^(N)(e)`. Construct with [`MeasureUnderTest::new`] to plug in any
/// measure; `l1`, `l2`, and `l2_pure` ship built in.
pub struct MeasureUnderTest {
    name: String,
    single_copy: SingleCopyFn,
    n_copy_true: NCopyTrueFn,
    n_copy_predicted: NCopyPredictedFn,
}

impl MeasureUnderTest {
    pub fn new(
        name: impl Into<String>,
        single_copy: SingleCopyFn,
        n_copy_true: NCopyTrueFn,
        n_copy_predicted: NCopyPredictedFn,
    ) -> Self {
        Self { name: name.into(), single_copy, n_copy_true, n_copy_predicted }
    }

    /// l1 coherence with the binomial prediction `(1+e)^N - 1`.
    pub fn l1() -> Self {
        Self::new(
            "l1",
            Box::new(DensityMatrix::l1_coherence),
            Box::new(|rho, n| rho.brute_force_coherence(n, CoherenceNorm::L1)),
            Box::new(|e, n| l1_n_copies_closed(e, n)),
        )
    }

    /// l2 quantity with the fixed-purity candidate
    /// `p0^N - (p0 - e)^N`; the truth is still the brute-force value, so
    /// any purity other than `p0` shows up as a residual.
    pub fn l2(reference_purity: f64) -> Self {
        Self::new(
            "l2",
            Box::new(DensityMatrix::l2_coherence),
            Box::new(|rho, n| rho.brute_force_coherence(n, CoherenceNorm::L2)),
            Box::new(move |e, n| {
                reference_purity.powi(n as i32) - (reference_purity - e).powi(n as i32)
            }),
        )
    }

    /// l2 restricted to pure states: prediction `1 - (1 - e)^N`.
    pub fn l2_pure() -> Self {
        Self::new(
            "l2-pure",
            Box::new(DensityMatrix::l2_coherence),
            Box::new(|rho, n| rho.brute_force_coherence(n, CoherenceNorm::L2)),
            Box::new(|e, n| 1.0 - (1.0 - e).powi(n as i32)),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn single_copy(&self, rho: &DensityMatrix) -> f64 {
        (self.single_copy)(rho)
    }

    pub fn n_copy_true(&self, rho: &DensityMatrix, copies: u32) -> Result<f64, StateError> {
        (self.n_copy_true)(rho, copies)
    }

    pub fn n_copy_predicted(&self, e: f64, copies: u32) -> f64 {
        (self.n_copy_predicted)(e, copies)
    }
}

/// A state with a stable identifier for reports.
pub struct LabeledState {
    pub id: String,
    pub state: DensityMatrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct DefinitionCheck {
    pub state_id: String,
    pub copies: u32,
    pub single_copy: f64,
    pub true_value: f64,
    pub predicted: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CollisionEvidence {
    pub state_a: String,
    pub state_b: String,
    pub copies: u32,
    pub e_a: f64,
    pub e_b: f64,
    pub true_a: f64,
    pub true_b: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DefinitionOutcome {
    pub checks: Vec<DefinitionCheck>,
    pub collisions: Vec<CollisionEvidence>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionCheck {
    pub state_id: String,
    pub copies: u32,
    pub split: u32,
    pub single_copy: f64,
    pub true_value: f64,
    pub composed: f64,
    pub residual: f64,
}

/// Residuals of the defining property at each `(state, N)`, plus collision
/// evidence: pairs with equal single-copy values (within
/// [`COLLISION_E_TOL`]) whose truths differ beyond `tol`.
pub fn test_definition(
    measure: &MeasureUnderTest,
    states: &[LabeledState],
    copies: &[u32],
    tol: f64,
) -> Result<DefinitionOutcome, StateError> {
    let per_state: Vec<(f64, Vec<(u32, f64)>)> = states
        .par_iter()
        .map(|labeled| {
            let e = measure.single_copy(&labeled.state);
            let truths = copies
                .iter()
                .map(|&n| Ok((n, measure.n_copy_true(&labeled.state, n)?)))
                .collect::<Result<Vec<_>, StateError>>()?;
            Ok((e, truths))
        })
        .collect::<Result<_, StateError>>()?;

    let mut checks = Vec::new();
    for (labeled, (e, truths)) in states.iter().zip(&per_state) {
        for &(n, truth) in truths {
            let predicted = measure.n_copy_predicted(*e, n);
            checks.push(DefinitionCheck {
                state_id: labeled.id.clone(),
                copies: n,
                single_copy: *e,
                true_value: truth,
                predicted,
                residual: (truth - predicted).abs(),
            });
        }
    }

    let mut collisions = Vec::new();
    for i in 0..states.len() {
        for j in i + 1..states.len() {
            let (e_a, truths_a) = &per_state[i];
            let (e_b, truths_b) = &per_state[j];
            if (e_a - e_b).abs() > COLLISION_E_TOL {
                continue;
            }
            for (&(n, true_a), &(_, true_b)) in truths_a.iter().zip(truths_b) {
                let gap = (true_a - true_b).abs();
                if gap > tol {
                    collisions.push(CollisionEvidence {
                        state_a: states[i].id.clone(),
                        state_b: states[j].id.clone(),
                        copies: n,
                        e_a: *e_a,
                        e_b: *e_b,
                        true_a,
                        true_b,
                        gap,
                    });
                }
            }
        }
    }
    Ok(DefinitionOutcome { checks, collisions })
}

/// Residuals of the composition law at exponents `0 < k < n` on the base-2
/// grid: compares the truth at `N = 2^n` with the prediction chained
/// through `K = 2^k`.
pub fn test_composition(
    measure: &MeasureUnderTest,
    states: &[LabeledState],
    n: u32,
    k: u32,
) -> Result<Vec<CompositionCheck>, HarnessError> {
    if k == 0 || k >= n {
        return Err(config_err("splits", format!("need 0 < k < n, got n={n} k={k}")));
    }
    let copies = 2u32.pow(n);
    let split = 2u32.pow(k);
    let outer = copies / split;
    states
        .par_iter()
        .map(|labeled| {
            let e = measure.single_copy(&labeled.state);
            let truth = measure.n_copy_true(&labeled.state, copies)?;
            let composed = measure.n_copy_predicted(measure.n_copy_predicted(e, split), outer);
            Ok(CompositionCheck {
                state_id: labeled.id.clone(),
                copies,
                split,
                single_copy: e,
                true_value: truth,
                composed,
                residual: (truth - composed).abs(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "consistent-with-1S")]
    ConsistentWith1S,
    #[serde(rename = "not-1S")]
    Not1S,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ConsistentWith1S => write!(f, "consistent-with-1S"),
            Verdict::Not1S => write!(f, "not-1S"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub state_id: String,
    pub kind: String,
    pub copies: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<u32>,
    pub single_copy: f64,
    pub purity: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalabilityReport {
    pub measure: String,
    pub family: String,
    pub tolerance: f64,
    pub definition_checks: Vec<DefinitionCheck>,
    pub composition_checks: Vec<CompositionCheck>,
    pub collisions: Vec<CollisionEvidence>,
    pub max_residual_definition: f64,
    pub max_residual_composition: f64,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl ScalabilityReport {
    /// Human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("measure:   {}\n", self.measure));
        out.push_str(&format!("family:    {}\n", self.family));
        out.push_str(&format!("tolerance: {:.3e}\n", self.tolerance));
        out.push_str(&format!(
            "checks:    {} definition, {} composition, {} collision pairs\n",
            self.definition_checks.len(),
            self.composition_checks.len(),
            self.collisions.len()
        ));
        out.push_str(&format!(
            "max residual (definition):  {:.6e}\n",
            self.max_residual_definition
        ));
        out.push_str(&format!(
            "max residual (composition): {:.6e}\n",
            self.max_residual_composition
        ));
        out.push_str(&format!("verdict:   {}\n", self.verdict));
        if !self.witnesses.is_empty() {
            out.push_str("witnesses:\n");
            for w in &self.witnesses {
                let split = w.split.map_or(String::new(), |k| format!(" K={k}"));
                out.push_str(&format!(
                    "  [{}] {} N={}{} e={:.6} purity={:.6} residual={:.6e}\n",
                    w.kind, w.state_id, w.copies, split, w.single_copy, w.purity, w.residual
                ));
            }
        }
        for c in &self.collisions {
            out.push_str(&format!(
                "collision: {} vs {} at N={}: e={:.9}/{:.9}, true={:.9}/{:.9}, gap={:.6e}\n",
                c.state_a, c.state_b, c.copies, c.e_a, c.e_b, c.true_a, c.true_b, c.gap
            ));
        }
        out
    }
}

fn default_dim() -> usize {
    2
}

fn default_samples() -> usize {
    100
}

fn default_copies() -> Vec<u32> {
    vec![2, 4, 8]
}

fn default_splits() -> Vec<u32> {
    vec![2, 4]
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

/// Suite configuration, deserializable from JSON. `copies` is the list of
/// copy counts N and `splits` the list of K values; both must be powers of
/// two, and every divisor pair `K | N` with `1 < K < N` gets a composition
/// check.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub measure: String,
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default)]
    pub family: Option<StateKind>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_copies")]
    pub copies: Vec<u32>,
    #[serde(default = "default_splits")]
    pub splits: Vec<u32>,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Reference purity `p0` for the l2 prediction and its engineered
    /// witnesses; ignored by the other measures.
    #[serde(default)]
    pub reference_purity: Option<f64>,
}

/// Runs a full suite: builds the state family, evaluates definition and
/// composition residuals, and assembles the verdict. Deterministic (and
/// byte-identical as JSON) for a fixed config.
pub fn run_suite(config: &SuiteConfig) -> Result<ScalabilityReport, HarnessError> {
    let (measure, default_family) = match config.measure.as_str() {
        "l1" => (MeasureUnderTest::l1(), StateKind::Mixed),
        "l2" => (
            MeasureUnderTest::l2(config.reference_purity.unwrap_or(DEFAULT_REFERENCE_PURITY)),
            StateKind::Mixed,
        ),
        "l2-pure" => (MeasureUnderTest::l2_pure(), StateKind::Pure),
        other => {
            return Err(config_err(
                "measure",
                format!("unknown measure {other:?}, expected l1, l2, or l2-pure"),
            ))
        }
    };
    if config.dim < 2 {
        return Err(config_err("dim", "dimension must be at least 2"));
    }
    if config.samples == 0 {
        return Err(config_err("samples", "need at least one sample"));
    }
    if config.copies.is_empty() {
        return Err(config_err("copies", "need at least one copy count"));
    }
    for &n in &config.copies {
        if n == 0 || !n.is_power_of_two() {
            return Err(config_err("copies", format!("{n} is not a power of two")));
        }
        let rows = (config.dim as u128).saturating_pow(n);
        if rows > crate::quantum::DEFAULT_KRON_LIMIT as u128 {
            return Err(config_err(
                "copies",
                format!(
                    "dim^N = {}^{} exceeds the brute-force limit {}",
                    config.dim,
                    n,
                    crate::quantum::DEFAULT_KRON_LIMIT
                ),
            ));
        }
    }
    for &k in &config.splits {
        if k < 2 || !k.is_power_of_two() {
            return Err(config_err("splits", format!("{k} is not a power of two >= 2")));
        }
    }
    if !(0.0..f64::INFINITY).contains(&config.tolerance) {
        return Err(config_err("tolerance", "must be nonnegative"));
    }
    let family = config.family.unwrap_or(default_family);
    let reference_purity = config.reference_purity.unwrap_or(DEFAULT_REFERENCE_PURITY);
    if config.measure == "l2" && !(0.5..=1.0).contains(&reference_purity) {
        return Err(config_err("reference_purity", "must lie in [1/2, 1]"));
    }

    // Engineered collision pair: equal c2, purities p0 and 1. Collisions
    // are generated by construction, not awaited from random sampling.
    let mut states: Vec<LabeledState> = Vec::new();
    if config.measure == "l2" && config.dim == 2 && family == StateKind::Mixed {
        let c2 = reference_purity - 0.5;
        states.push(LabeledState {
            id: "witness-fixed-purity".into(),
            state: fixed_purity_qubit(reference_purity, c2, 0.0)?,
        });
        states.push(LabeledState {
            id: "witness-pure".into(),
            state: fixed_purity_qubit(1.0, c2, 0.0)?,
        });
    }
    let kind_name = match family {
        StateKind::Pure => "pure",
        StateKind::Mixed => "mixed",
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for i in 0..config.samples {
        states.push(LabeledState {
            id: format!("{kind_name}-{i:03}"),
            state: random_state_with(config.dim, family, &mut rng),
        });
    }
    let family_desc = if states.len() > config.samples {
        format!(
            "{} random {kind_name} states of dimension {} (seed {}) + engineered equal-c2 pair at purities {} and 1",
            config.samples, config.dim, config.seed, reference_purity
        )
    } else {
        format!(
            "{} random {kind_name} states of dimension {} (seed {})",
            config.samples, config.dim, config.seed
        )
    };

    let definition = test_definition(&measure, &states, &config.copies, config.tolerance)?;
    let mut composition = Vec::new();
    for &n in &config.copies {
        for &k in &config.splits {
            if k < n && n % k == 0 {
                composition.extend(test_composition(
                    &measure,
                    &states,
                    n.trailing_zeros(),
                    k.trailing_zeros(),
                )?);
            }
        }
    }

    let max_residual_definition = definition
        .checks
        .iter()
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    let max_residual_composition = composition
        .iter()
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    let verdict = if max_residual_definition <= config.tolerance
        && max_residual_composition <= config.tolerance
    {
        Verdict::ConsistentWith1S
    } else {
        Verdict::Not1S
    };

    let purity_of = |id: &str| {
        states
            .iter()
            .find(|s| s.id == id)
            .map(|s| s.state.purity())
            .unwrap_or(f64::NAN)
    };
    let mut witnesses = Vec::new();
    if let Some(worst) = definition
        .checks
        .iter()
        .max_by(|a, b| a.residual.total_cmp(&b.residual))
    {
        witnesses.push(Witness {
            state_id: worst.state_id.clone(),
            kind: "definition".into(),
            copies: worst.copies,
            split: None,
            single_copy: worst.single_copy,
            purity: purity_of(&worst.state_id),
            residual: worst.residual,
        });
    }
    if let Some(worst) = composition
        .iter()
        .max_by(|a, b| a.residual.total_cmp(&b.residual))
    {
        witnesses.push(Witness {
            state_id: worst.state_id.clone(),
            kind: "composition".into(),
            copies: worst.copies,
            split: Some(worst.split),
            single_copy: worst.single_copy,
            purity: purity_of(&worst.state_id),
            residual: worst.residual,
        });
    }

    Ok(ScalabilityReport {
        measure: measure.name().to_string(),
        family: family_desc,
        tolerance: config.tolerance,
        definition_checks: definition.checks,
        composition_checks: composition,
        collisions: definition.collisions,
        max_residual_definition,
        max_residual_composition,
        verdict,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::random_state;

    fn label(states: Vec<DensityMatrix>) -> Vec<LabeledState> {
        states
            .into_iter()
            .enumerate()
            .map(|(i, state)| LabeledState { id: format!("s{i:02}"), state })
            .collect()
    }

    #[test]
    fn l1_definition_residuals_vanish() {
        let states = label((0..20).map(|i| random_state(2, StateKind::Mixed, i)).collect());
        let outcome =
            test_definition(&MeasureUnderTest::l1(), &states, &[1, 2, 4, 8], 1e-9).unwrap();
        for check in &outcome.checks {
            assert!(check.residual <= 1e-10, "{check:?}");
        }
        assert!(outcome.collisions.is_empty());
    }

    #[test]
    fn single_copy_checks_are_exact_by_construction() {
        let states = label(vec![random_state(3, StateKind::Mixed, 5)]);
        for measure in [MeasureUnderTest::l1(), MeasureUnderTest::l2_pure()] {
            let outcome = test_definition(&measure, &states, &[1], 1e-9).unwrap();
            assert!(outcome.checks[0].residual <= 1e-12);
        }
    }

    #[test]
    fn l2_collision_pair_is_detected() {
        let states = vec![
            LabeledState {
                id: "mixed".into(),
                state: fixed_purity_qubit(0.68, 0.18, 0.0).unwrap(),
            },
            LabeledState {
                id: "pure".into(),
                state: fixed_purity_qubit(1.0, 0.18, 0.0).unwrap(),
            },
        ];
        let outcome =
            test_definition(&MeasureUnderTest::l2(0.68), &states, &[2], 1e-9).unwrap();
        assert_eq!(outcome.collisions.len(), 1);
        let collision = &outcome.collisions[0];
        assert!((collision.true_a - 0.2124).abs() < 1e-12);
        assert!((collision.true_b - 0.3276).abs() < 1e-12);
        assert!((collision.gap - 0.1152).abs() < 1e-12);
    }

    #[test]
    fn l1_composition_residuals_vanish() {
        let states = label((0..10).map(|i| random_state(2, StateKind::Mixed, i)).collect());
        let checks = test_composition(&MeasureUnderTest::l1(), &states, 2, 1).unwrap();
        for check in &checks {
            assert!(check.residual <= 1e-10, "{check:?}");
        }
    }

    #[test]
    fn l2_composition_fails_at_fixed_purity_and_passes_pure() {
        let witness = vec![LabeledState {
            id: "witness".into(),
            state: fixed_purity_qubit(0.68, 0.18, 0.0).unwrap(),
        }];
        let checks = test_composition(&MeasureUnderTest::l2(0.68), &witness, 2, 1).unwrap();
        assert!((checks[0].residual - 0.09243648).abs() < 1e-9, "{checks:?}");

        let pure = label((0..10).map(|i| random_state(2, StateKind::Pure, i)).collect());
        let checks = test_composition(&MeasureUnderTest::l2_pure(), &pure, 2, 1).unwrap();
        for check in &checks {
            assert!(check.residual <= 1e-10, "{check:?}");
        }
    }

    #[test]
    fn split_validation() {
        let states = label(vec![random_state(2, StateKind::Mixed, 1)]);
        assert!(test_composition(&MeasureUnderTest::l1(), &states, 2, 0).is_err());
        assert!(test_composition(&MeasureUnderTest::l1(), &states, 2, 2).is_err());
    }

    #[test]
    fn suite_verdicts() {
        let l1 = SuiteConfig {
            measure: "l1".into(),
            dim: 2,
            family: None,
            samples: 25,
            seed: 7,
            copies: vec![2, 4, 8],
            splits: vec![2, 4],
            tolerance: DEFAULT_TOLERANCE,
            reference_purity: None,
        };
        let report = run_suite(&l1).unwrap();
        assert_eq!(report.verdict, Verdict::ConsistentWith1S);

        let l2 = SuiteConfig { measure: "l2".into(), ..l1.clone() };
        let report = run_suite(&l2).unwrap();
        assert_eq!(report.verdict, Verdict::Not1S);
        assert!(!report.collisions.is_empty());
        assert!(report.max_residual_composition > 1e-3);

        let l2_pure = SuiteConfig { measure: "l2-pure".into(), ..l1.clone() };
        let report = run_suite(&l2_pure).unwrap();
        assert_eq!(report.verdict, Verdict::ConsistentWith1S);
    }

    #[test]
    fn reports_are_reproducible() {
        let config = SuiteConfig {
            measure: "l2".into(),
            dim: 2,
            family: None,
            samples: 10,
            seed: 99,
            copies: vec![2, 4],
            splits: vec![2],
            tolerance: DEFAULT_TOLERANCE,
            reference_purity: None,
        };
        let a = serde_json::to_string(&run_suite(&config).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(&config).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn config_errors_name_their_field() {
        let bad = SuiteConfig {
            measure: "l3".into(),
            dim: 2,
            family: None,
            samples: 1,
            seed: 0,
            copies: vec![2],
            splits: vec![2],
            tolerance: 1e-9,
            reference_purity: None,
        };
        let err = run_suite(&bad).unwrap_err().to_string();
        assert!(err.contains("measure"), "{err}");

        let bad_copies = SuiteConfig { measure: "l1".into(), copies: vec![3], ..bad.clone() };
        let err = run_suite(&bad_copies).unwrap_err().to_string();
        assert!(err.contains("copies"), "{err}");

        let too_big = SuiteConfig { measure: "l1".into(), dim: 3, copies: vec![8], ..bad };
        let err = run_suite(&too_big).unwrap_err().to_string();
        assert!(err.contains("brute-force limit"), "{err}");
    }
}
