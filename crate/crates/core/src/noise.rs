// SPDX-License-Identifier: Apache-2.0
//! Biased Pauli noise, the two-stage single-shot decoder and the trial harness.
//!
//! Every trial draws from its own ChaCha8 stream: the generator is seeded
//! with the run seed and positioned on stream `trial`. Trials can therefore
//! run in any order, on any number of threads, and still reproduce.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::ClassicalCode;
use crate::css::{CodeError, CssCode, PauliError};
use crate::f2::{BinaryMatrix, BinaryVector};
use crate::search::{ColumnSearch, Distance};
use crate::soundness::{PauliSearch, SoundnessFn, WeightBound};

/// Absolute tolerance on `px + py + pz = p`.
pub const PROBABILITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NoiseError {
    #[error("invalid noise model: {0}")]
    InvalidModel(&'static str),
    #[error("measurement noise requested but the code carries no syndrome checks")]
    MissingSyndromeChecks,
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Independent single-qubit Pauli channel plus measurement flips.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    pub p: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
    pub q_meas: f64,
}

impl NoiseModel {
    pub fn new(px: f64, py: f64, pz: f64, q_meas: f64) -> Result<Self, NoiseError> {
        let m = Self {
            p: px + py + pz,
            px,
            py,
            pz,
            q_meas,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn depolarizing(p: f64, q_meas: f64) -> Result<Self, NoiseError> {
        Self::new(p / 3.0, p / 3.0, p / 3.0, q_meas)
    }

    /// Z-biased noise with `η_Z = pz / (px + py)` and `px = py`; `η = ∞` gives pure Z.
    pub fn z_biased(p: f64, eta: f64, q_meas: f64) -> Result<Self, NoiseError> {
        if eta.is_nan() || eta < 0.0 {
            return Err(NoiseError::InvalidModel("bias must be nonnegative"));
        }
        if eta.is_infinite() {
            return Self::new(0.0, 0.0, p, q_meas);
        }
        let side = p / (2.0 * (eta + 1.0));
        Self::new(side, side, p - 2.0 * side, q_meas)
    }

    pub fn validate(&self) -> Result<(), NoiseError> {
        let probs = [self.p, self.px, self.py, self.pz, self.q_meas];
        if probs.iter().any(|x| !x.is_finite() || *x < 0.0 || *x > 1.0) {
            return Err(NoiseError::InvalidModel("probabilities must lie in [0, 1]"));
        }
        if (self.px + self.py + self.pz - self.p).abs() > PROBABILITY_TOLERANCE {
            return Err(NoiseError::InvalidModel("px + py + pz must equal p"));
        }
        Ok(())
    }

    /// `η_Z = pz / (px + py)`, infinite for pure Z noise.
    pub fn bias_z(&self) -> f64 {
        self.pz / (self.px + self.py)
    }

    pub fn is_infinitely_z_biased(&self) -> bool {
        self.px == 0.0 && self.py == 0.0
    }
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// I.i.d. Pauli draw on `n` qubits.
pub fn sample_error<R: Rng>(model: &NoiseModel, n: usize, rng: &mut R) -> PauliError {
    let mut e = PauliError::identity(n);
    let (a, b) = (model.px, model.px + model.py);
    for q in 0..n {
        let r: f64 = rng.random();
        if r < a {
            e.x.flip(q);
        } else if r < b {
            e.x.flip(q);
            e.z.flip(q);
        } else if r < model.p {
            e.z.flip(q);
        }
    }
    e
}

/// Independent flips of `m` syndrome bits.
pub fn sample_measurement_error<R: Rng>(model: &NoiseModel, m: usize, rng: &mut R) -> BinaryVector {
    let mut u = BinaryVector::zeros(m);
    for i in 0..m {
        let r: f64 = rng.random();
        if r < model.q_meas {
            u.flip(i);
        }
    }
    u
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeFailure {
    /// No syndrome repair within the budget.
    Repair,
    /// No data correction within the budget.
    Data,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    /// Flips applied to the measured syndrome.
    pub repair: BinaryVector,
    pub correction: PauliError,
}

/// Repair the syndrome against all linear relations among the checks, then
/// decode the repaired syndrome with a minimum-weight Pauli.
///
/// The relations are the rows of `M`, a basis of the left null space of
/// `[hx | hz]`, so the repaired syndrome always lies in the image of the
/// syndrome map. Both stages are exact minimum-weight searches with budgets.
#[derive(Debug, Clone)]
pub struct TwoStageDecoder {
    metachecks: BinaryMatrix,
    repair: ColumnSearch,
    data: PauliSearch,
    pub repair_budget: usize,
    pub data_budget: usize,
}

impl TwoStageDecoder {
    pub fn new(code: &CssCode, repair_budget: usize, data_budget: usize) -> Self {
        let metachecks = code.stabilizer_matrix().left_null_space();
        let repair = ColumnSearch::new(metachecks.rows(), metachecks.column_vectors());
        Self {
            metachecks,
            repair,
            data: PauliSearch::new(code),
            repair_budget,
            data_budget,
        }
    }

    pub fn metachecks(&self) -> &BinaryMatrix {
        &self.metachecks
    }

    pub fn pauli_search(&self) -> &PauliSearch {
        &self.data
    }

    pub fn decode(&self, measured: &BinaryVector) -> Result<Decoded, DecodeFailure> {
        let meta = self
            .metachecks
            .mul_vec(measured)
            .expect("syndrome length matches the code");
        let repair_set = self
            .repair
            .min_subset(&meta, 0, self.repair_budget, |_| true)
            .ok_or(DecodeFailure::Repair)?;
        let repair = BinaryVector::from_support(measured.len(), &repair_set);
        let mut s = measured.clone();
        s.xor_assign(&repair);
        let correction = self
            .data
            .min_weight_with_syndrome(&s, self.data_budget)
            .ok_or(DecodeFailure::Data)?;
        Ok(Decoded { repair, correction })
    }

    /// Minimum weight of a nonzero syndrome the metachecks cannot see, that
    /// is of a nonzero vector in the image of the syndrome map.
    pub fn syndrome_distance(&self, max_weight: usize) -> Option<Distance> {
        let code = ClassicalCode::new(self.metachecks.clone());
        code.distance(max_weight).map(|r| r.value)
    }
}

/// Certified single-shot parameters: `p = min(d_s, t) / 2`, `q = d / 2`.
///
/// Stored doubled so that the regime test stays in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingleShotParams {
    pub two_p: usize,
    pub two_q: usize,
    pub f: SoundnessFn,
}

impl SingleShotParams {
    pub fn new(d_s: usize, t: usize, d: usize, f: SoundnessFn) -> Self {
        Self {
            two_p: d_s.min(t),
            two_q: d,
            f,
        }
    }

    /// `|u| < p` and `f(2|u|) + |e| < q`.
    pub fn in_regime(&self, e_weight: usize, u_weight: usize) -> bool {
        let fu = self.f.eval(2 * u_weight);
        // 2 (num/den + |e|) < two_q  <=>  2 num + 2 |e| den < two_q den
        let lhs = 2 * fu.num as u128 + 2 * e_weight as u128 * fu.den as u128;
        2 * u_weight < self.two_p && lhs < self.two_q as u128 * fu.den as u128
    }

    /// `floor(f(2|u|))`.
    pub fn residual_bound(&self, u_weight: usize) -> usize {
        self.f.bound(2 * u_weight)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialOutcome {
    pub residual: Option<WeightBound>,
    pub pass: bool,
    pub in_regime: bool,
    pub logical_failure: bool,
    pub decode_failure: Option<DecodeFailure>,
}

/// Decodes `σ(e) + u` and compares the residual coset weight to `f(2|u|)`.
///
/// Out-of-regime trials are still decoded and reported, flagged as such.
pub fn single_shot_trial(
    code: &CssCode,
    params: &SingleShotParams,
    e: &PauliError,
    u: &BinaryVector,
    decoder: &TwoStageDecoder,
) -> Result<TrialOutcome, NoiseError> {
    let syndrome = code.syndrome(e)?;
    let mut s = syndrome.combined();
    s.xor_assign(u);
    let in_regime = params.in_regime(e.weight(), u.weight());
    let bound = params.residual_bound(u.weight());
    let search = decoder.pauli_search();
    match decoder.decode(&s) {
        Ok(d) => {
            let r = d.correction.compose(e);
            let residual = search.coset_weight(&r, bound + 1);
            Ok(TrialOutcome {
                residual: Some(residual),
                pass: residual.is_exact() && residual.value() <= bound,
                in_regime,
                logical_failure: search.is_logical(&r),
                decode_failure: None,
            })
        }
        Err(f) => Ok(TrialOutcome {
            residual: None,
            pass: false,
            in_regime,
            logical_failure: false,
            decode_failure: Some(f),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: u64,
    pub ex_weight: usize,
    pub ez_weight: usize,
    pub u_weight: usize,
    pub residual: Option<WeightBound>,
    pub logical_fail: bool,
    pub in_regime: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub trials: u64,
    pub in_regime: u64,
    pub in_regime_pass: u64,
    pub logical_failures: u64,
    pub failure_rate: f64,
    /// 95% Wilson interval on the logical failure rate.
    pub ci95: (f64, f64),
}

/// Everything a trial needs, shared across threads.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub code: CssCode,
    pub model: NoiseModel,
    pub params: SingleShotParams,
    pub decoder: TwoStageDecoder,
    pub seed: u64,
}

impl Experiment {
    pub fn new(
        code: CssCode,
        model: NoiseModel,
        params: SingleShotParams,
        decoder: TwoStageDecoder,
        seed: u64,
    ) -> Result<Self, NoiseError> {
        model.validate()?;
        if model.q_meas > 0.0 && !code.has_syndrome_checks() {
            return Err(NoiseError::MissingSyndromeChecks);
        }
        Ok(Self {
            code,
            model,
            params,
            decoder,
            seed,
        })
    }

    pub fn run_trial(&self, trial: u64) -> Result<TrialRecord, NoiseError> {
        let mut rng = trial_rng(self.seed, trial);
        let e = sample_error(&self.model, self.code.n(), &mut rng);
        let u = sample_measurement_error(&self.model, self.code.num_checks(), &mut rng);
        let out = single_shot_trial(&self.code, &self.params, &e, &u, &self.decoder)?;
        Ok(TrialRecord {
            trial,
            ex_weight: e.x.weight(),
            ez_weight: e.z.weight(),
            u_weight: u.weight(),
            residual: out.residual,
            logical_fail: out.logical_failure || out.decode_failure.is_some(),
            in_regime: out.in_regime,
            pass: out.pass,
        })
    }

    pub fn run(&self, trials: u64) -> Result<(Vec<TrialRecord>, ExperimentSummary), NoiseError> {
        let records: Vec<TrialRecord> = (0..trials)
            .map(|t| self.run_trial(t))
            .collect::<Result<_, _>>()?;
        let summary = summarize(&records);
        Ok((records, summary))
    }
}

pub fn summarize(records: &[TrialRecord]) -> ExperimentSummary {
    let trials = records.len() as u64;
    let in_regime = records.iter().filter(|r| r.in_regime).count() as u64;
    let in_regime_pass = records.iter().filter(|r| r.in_regime && r.pass).count() as u64;
    let logical_failures = records.iter().filter(|r| r.logical_fail).count() as u64;
    let failure_rate = if trials == 0 {
        0.0
    } else {
        logical_failures as f64 / trials as f64
    };
    ExperimentSummary {
        trials,
        in_regime,
        in_regime_pass,
        logical_failures,
        failure_rate,
        ci95: wilson_interval(logical_failures, trials, 1.959_963_984_540_054),
    }
}

/// Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n = n as f64;
    let p = k as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}
