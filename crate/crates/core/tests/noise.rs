// SPDX-License-Identifier: Apache-2.0
use qforge_core::classical::repetition_closed_loop;
use qforge_core::constructions::{bsh, bssh, sehgp, BlockTaggedCss};
use qforge_core::css::{DistanceKind, Pauli};
use qforge_core::noise::{
    sample_error, sample_measurement_error, single_shot_trial, summarize, trial_rng,
    wilson_interval, Experiment, NoiseError, NoiseModel, SingleShotParams, TwoStageDecoder,
};
use qforge_core::soundness::{SoundnessFn, WeightBound};
use qforge_core::{BinaryVector, CssCode, PauliError};

const F: SoundnessFn = SoundnessFn::QuarterSquare;

fn bsh_rep(n: usize) -> BlockTaggedCss {
    let r = repetition_closed_loop(n).unwrap();
    bsh(&sehgp(&r, &r, &r, &r).unwrap()).unwrap()
}

#[test]
fn zero_rate_gives_identity() {
    let m = NoiseModel::depolarizing(0.0, 0.0).unwrap();
    for t in 0..20 {
        let mut rng = trial_rng(7, t);
        assert!(sample_error(&m, 100, &mut rng).is_identity());
        assert!(sample_measurement_error(&m, 50, &mut rng).is_zero());
    }
}

#[test]
fn infinite_bias_draws_only_z() {
    let m = NoiseModel::z_biased(0.3, f64::INFINITY, 0.0).unwrap();
    assert!(m.is_infinitely_z_biased());
    assert!(m.bias_z().is_infinite());
    for t in 0..50 {
        let e = sample_error(&m, 200, &mut trial_rng(1, t));
        assert!(e.x.is_zero());
    }
}

#[test]
fn biased_model_splits_the_rate() {
    let m = NoiseModel::z_biased(0.12, 2.0, 0.0).unwrap();
    assert!((m.px - 0.02).abs() < 1e-15 && (m.py - 0.02).abs() < 1e-15);
    assert!((m.bias_z() - 2.0).abs() < 1e-12);
    let d = NoiseModel::z_biased(0.3, 0.5, 0.0).unwrap();
    assert!((d.px - 0.1).abs() < 1e-15 && (d.pz - 0.1).abs() < 1e-15);
}

#[test]
fn invalid_models_are_rejected() {
    assert!(matches!(
        NoiseModel::new(0.5, 0.4, 0.3, 0.0),
        Err(NoiseError::InvalidModel(_))
    ));
    assert!(NoiseModel::new(-0.1, 0.0, 0.0, 0.0).is_err());
    assert!(NoiseModel::depolarizing(0.1, 1.5).is_err());
    assert!(NoiseModel::z_biased(0.1, -1.0, 0.0).is_err());
    let bad = NoiseModel {
        p: 0.2,
        px: 0.1,
        py: 0.0,
        pz: 0.0,
        q_meas: 0.0,
    };
    assert!(bad.validate().is_err());
}

#[test]
fn depolarizing_rates_within_three_sigma() {
    let n = 10_000;
    let p = 0.1;
    let m = NoiseModel::depolarizing(p, 0.0).unwrap();
    let e = sample_error(&m, n, &mut trial_rng(2024, 0));
    let mut counts = [0usize; 3];
    for q in 0..n {
        match e.get(q) {
            Pauli::X => counts[0] += 1,
            Pauli::Y => counts[1] += 1,
            Pauli::Z => counts[2] += 1,
            Pauli::I => {}
        }
    }
    let mean = n as f64 * p / 3.0;
    let sigma = (n as f64 * (p / 3.0) * (1.0 - p / 3.0)).sqrt();
    for c in counts {
        assert!((c as f64 - mean).abs() <= 3.0 * sigma, "{counts:?}");
    }
}

#[test]
fn measurement_flip_rate_within_three_sigma() {
    let m = NoiseModel::depolarizing(0.0, 0.05).unwrap();
    let u = sample_measurement_error(&m, 10_000, &mut trial_rng(3, 9));
    let sigma = (10_000.0f64 * 0.05 * 0.95).sqrt();
    assert!((u.weight() as f64 - 500.0).abs() <= 3.0 * sigma);
}

#[test]
fn streams_are_independent_of_order() {
    let m = NoiseModel::depolarizing(0.2, 0.0).unwrap();
    let forward: Vec<PauliError> = (0..8)
        .map(|t| sample_error(&m, 64, &mut trial_rng(11, t)))
        .collect();
    let backward: Vec<PauliError> = (0..8)
        .rev()
        .map(|t| sample_error(&m, 64, &mut trial_rng(11, t)))
        .collect();
    assert!(forward.iter().eq(backward.iter().rev()));
    assert_ne!(forward[0], forward[1]);
    assert_ne!(sample_error(&m, 64, &mut trial_rng(12, 0)), forward[0]);
}

fn experiment(code: &BlockTaggedCss, model: NoiseModel, seed: u64) -> Experiment {
    let params = SingleShotParams::new(2, 2, 4, F);
    let decoder = TwoStageDecoder::new(&code.code, 2, 4);
    Experiment::new(code.code.clone(), model, params, decoder, seed).unwrap()
}

#[test]
fn runs_are_deterministic() {
    let code = bsh_rep(2);
    let m = NoiseModel::z_biased(0.02, 10.0, 0.005).unwrap();
    let (a, sa) = experiment(&code, m, 99).run(40).unwrap();
    let (b, sb) = experiment(&code, m, 99).run(40).unwrap();
    assert_eq!(a, b);
    assert_eq!(sa, sb);
    let (c, _) = experiment(&code, m, 100).run(40).unwrap();
    assert_ne!(a, c);
    // Any single trial can be replayed alone.
    assert_eq!(experiment(&code, m, 99).run_trial(17).unwrap(), a[17]);
}

#[test]
fn noiseless_run_never_fails() {
    let code = bsh_rep(2);
    let m = NoiseModel::depolarizing(0.0, 0.0).unwrap();
    let (records, summary) = experiment(&code, m, 5).run(25).unwrap();
    assert_eq!(summary.logical_failures, 0);
    assert_eq!(summary.failure_rate, 0.0);
    assert!(records
        .iter()
        .all(|r| r.pass && r.residual == Some(WeightBound::Exact(0))));
    assert_eq!(summary.in_regime, 25);
}

#[test]
fn measurement_noise_needs_syndrome_checks() {
    let bare = CssCode::from_css(bsh_rep(2).code.hx(), bsh_rep(2).code.hz()).unwrap();
    let m = NoiseModel::depolarizing(0.01, 0.01).unwrap();
    let params = SingleShotParams::new(2, 2, 4, F);
    let decoder = TwoStageDecoder::new(&bare, 1, 1);
    let err = Experiment::new(bare.clone(), m, params, decoder.clone(), 0).unwrap_err();
    assert_eq!(err, NoiseError::MissingSyndromeChecks);
    let quiet = NoiseModel::depolarizing(0.01, 0.0).unwrap();
    assert!(Experiment::new(bare, quiet, params, decoder, 0).is_ok());
}

#[test]
fn bsh_rep3_corrects_every_single_qubit_error() {
    let code = bsh_rep(3).code;
    let params = SingleShotParams::new(3, 3, 5, F);
    let decoder = TwoStageDecoder::new(&code, 1, 1);
    let u = BinaryVector::zeros(code.num_checks());
    for q in 0..code.n() {
        for p in [Pauli::X, Pauli::Y, Pauli::Z] {
            let e = PauliError::single(code.n(), q, p);
            let out = single_shot_trial(&code, &params, &e, &u, &decoder).unwrap();
            assert!(out.in_regime);
            assert_eq!(out.residual, Some(WeightBound::Exact(0)), "qubit {q} {p:?}");
            assert!(out.pass && !out.logical_failure);
        }
    }
}

#[test]
fn bsh_rep2_single_flip_sweep() {
    let code = bsh_rep(2).code;
    let decoder = TwoStageDecoder::new(&code, 2, 4);
    let d_m = decoder
        .syndrome_distance(6)
        .and_then(|d| d.exact())
        .unwrap();
    assert_eq!(d_m, 4);
    let params = SingleShotParams::new(d_m, 3, 4, F);
    let e = PauliError::identity(code.n());
    let mut in_regime = 0;
    for i in 0..code.num_checks() {
        let u = BinaryVector::from_support(code.num_checks(), &[i]);
        let out = single_shot_trial(&code, &params, &e, &u, &decoder).unwrap();
        if out.in_regime {
            in_regime += 1;
            assert!(out.pass, "flip {i}: {:?}", out.residual);
            assert!(out.residual.unwrap().value() <= 1);
        }
    }
    assert_eq!(in_regime, code.num_checks());
}

#[test]
fn regime_boundaries() {
    let p = SingleShotParams::new(4, 3, 5, F);
    assert_eq!(p.two_p, 3);
    assert!(p.in_regime(0, 0) && p.in_regime(2, 0) && !p.in_regime(3, 0));
    // f(2) = 1: 1 + |e| < 2.5 admits |e| = 1 only.
    assert!(p.in_regime(1, 1) && !p.in_regime(2, 1));
    assert!(!p.in_regime(0, 2));
    assert_eq!(p.residual_bound(1), 1);
    assert_eq!(p.residual_bound(2), 4);
}

#[test]
fn infinite_bias_touches_only_x_check_components() {
    let r = repetition_closed_loop(2).unwrap();
    let code = bssh(&r).unwrap().code;
    let m = NoiseModel::z_biased(0.05, f64::INFINITY, 0.0).unwrap();
    let live: std::collections::BTreeSet<usize> = code
        .tanner_components(DistanceKind::X)
        .into_iter()
        .flat_map(|c| c.checks)
        .collect();
    // Dropping the Z block leaves every syndrome unchanged.
    let x_only = CssCode::new(
        code.hx().clone(),
        qforge_core::BinaryMatrix::zeros(code.num_checks(), code.n()),
    )
    .unwrap();
    for t in 0..200 {
        let e = sample_error(&m, code.n(), &mut trial_rng(42, t));
        let s = code.syndrome(&e).unwrap().combined();
        assert!(s.support().iter().all(|i| live.contains(i)));
        assert_eq!(x_only.syndrome(&e).unwrap().combined(), s);
    }
}

#[test]
fn wilson_interval_examples() {
    let (lo, hi) = wilson_interval(0, 100, 1.96);
    assert_eq!(lo, 0.0);
    assert!((hi - 0.036_995).abs() < 1e-5);
    let (lo, hi) = wilson_interval(50, 100, 1.96);
    assert!((lo - 0.403_832).abs() < 1e-5 && (hi - 0.596_168).abs() < 1e-5);
    assert_eq!(summarize(&[]).trials, 0);
}
