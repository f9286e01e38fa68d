mod common;

use approx::assert_relative_eq;
use common::{fourier_constant, mode_infimum};
use hardy_rellich::{
    branch_constant, classify_regime, eigenvalue_ck, epsilon_k, epsilon_one_explicit,
    improvement_report, index_term, prior_constant_catalog, prior_constant_tz, regime_boundaries,
    sharp_constant, threshold_k, validate_parameters, Branch, Error, Parameters64, ProofCase,
};

fn p(n: u32, m: f64) -> Parameters64 {
    validate_parameters(n, m).unwrap()
}

/// `I_1` rearranged as a polynomial in `m`.
fn index_one_simplified(n: f64, m: f64) -> f64 {
    -m * m / 2.0 + 2.0 * m + n * n / 2.0 - n - 1.0
}

/// Smallest `k` with `I_k >= 0`, by direct scan.
fn threshold_scan(params: &Parameters64) -> u32 {
    (0..).find(|&k| index_term(params, k) >= 0.0).unwrap()
}

#[test]
fn eigenvalues_of_the_sphere() {
    assert_eq!(eigenvalue_ck::<f64>(3, 1), 2.0);
    assert_eq!(eigenvalue_ck::<f64>(2, 5), 25.0);
    assert_eq!(eigenvalue_ck::<f64>(5, 0), 0.0);
}

#[test]
fn index_term_matches_the_simplified_form() {
    assert_relative_eq!(index_term(&p(2, 4.0), 1), -1.0, epsilon = 1e-14);
    assert_relative_eq!(index_term(&p(2, 4.0), 2), 2.0, epsilon = 1e-14);
    assert_relative_eq!(index_term(&p(5, 0.0), 1), 6.5, epsilon = 1e-14);
    for (n, m) in [(2, 4.0), (5, 0.0), (5, 8.0), (3, -0.7), (7, 11.3)] {
        assert_relative_eq!(
            index_term(&p(n, m), 1),
            index_one_simplified(n as f64, m),
            epsilon = 1e-12
        );
    }
}

#[test]
fn threshold_index_matches_a_direct_scan() {
    assert_eq!(threshold_k(&p(2, 4.0)).unwrap(), 2);
    assert_eq!(threshold_k(&p(5, 8.0)).unwrap(), 3);
    // I_1 = -1/8 < 0 <= I_2 = 7/8
    assert_relative_eq!(index_term(&p(2, 3.5), 1), -0.125, epsilon = 1e-14);
    assert_eq!(threshold_k(&p(2, 3.5)).unwrap(), 2);
    for (n, m) in [(2, 4.0), (5, 8.0), (2, 3.5), (3, 20.0), (6, 40.0), (2, 100.0)] {
        let q = p(n, m);
        assert_eq!(threshold_k(&q).unwrap(), threshold_scan(&q), "N = {n}, m = {m}");
    }
}

#[test]
fn threshold_index_is_rejected_outside_high_bad() {
    assert!(matches!(
        threshold_k(&p(5, 0.0)),
        Err(Error::ThresholdUndefined { .. })
    ));
}

#[test]
fn branch_constant_examples() {
    assert_eq!(branch_constant(&p(2, 4.0), 1).unwrap(), 0.0);
    assert_relative_eq!(branch_constant(&p(5, 8.0), 1).unwrap(), 121.0 / 324.0, max_relative = 1e-14);
    assert_relative_eq!(
        branch_constant(&p(5, -2.5), 1).unwrap(),
        22.5625 / 9.0,
        max_relative = 1e-14
    );
    // each agrees with the Fourier infimum of its own mode
    for (n, m, l) in [(5, 8.0, 1), (5, -2.5, 1), (5, 8.0, 2), (2, 4.0, 2)] {
        assert_relative_eq!(
            branch_constant(&p(n, m), l).unwrap(),
            mode_infimum(n, m, l),
            max_relative = 1e-12
        );
    }
}

#[test]
fn branch_constant_rejects_the_degenerate_weight() {
    assert!(matches!(
        branch_constant(&p(5, -1.0), 1),
        Err(Error::DegenerateWeight { .. })
    ));
}

#[test]
fn epsilon_examples() {
    let lowbad = p(5, -2.5);
    assert_relative_eq!(epsilon_k(&lowbad, 1).unwrap(), 26.0 / 2.25, max_relative = 1e-13);
    assert_relative_eq!(
        epsilon_one_explicit(&lowbad).unwrap(),
        epsilon_k(&lowbad, 1).unwrap(),
        max_relative = 1e-13
    );
    assert_relative_eq!(epsilon_k(&p(2, 4.0), 1).unwrap(), 1.0, max_relative = 1e-14);
}

#[test]
fn epsilon_vanishes_at_the_threshold() {
    // I_1 = 0 at the upper middle boundary
    let m = regime_boundaries::<f64>(4).upper_middle;
    let q = p(4, m);
    assert!(index_term(&q, 1).abs() < 1e-12);
    assert!(epsilon_k(&q, 1).unwrap().abs() < 1e-12);
}

#[test]
fn classification_examples() {
    let r = classify_regime(&p(5, 0.0));
    assert_eq!(r.branch, Branch::Middle);
    assert_eq!(r.proof_case, ProofCase::A);
    assert_eq!(classify_regime(&p(5, -2.5)).branch, Branch::LowBad);
    assert_eq!(classify_regime(&p(2, 4.0)).branch, Branch::HighBad);
    assert_eq!(classify_regime(&p(1, 2.0)).branch, Branch::OneDim);
}

#[test]
fn invalid_parameters_name_the_constraint() {
    let e = validate_parameters(3, -1.0).unwrap_err();
    assert!(matches!(e, Error::NonIntegrableWeight { n: 3, .. }));
    assert!(e.to_string().contains("m > 2 - N"));
    assert!(matches!(
        validate_parameters(0, 1.0).unwrap_err(),
        Error::DimensionTooSmall { n: 0 }
    ));
    assert!(matches!(
        validate_parameters(3, f64::NAN).unwrap_err(),
        Error::NonFiniteWeight { .. }
    ));
}

#[test]
fn sharp_constant_examples() {
    let r = sharp_constant(&p(5, 0.0)).unwrap();
    assert_eq!((r.value, r.l_min), (6.25, 0));

    let r = sharp_constant(&p(5, -2.5)).unwrap();
    assert_relative_eq!(r.value, 22.5625 / 9.0, max_relative = 1e-14);
    assert_eq!(r.l_min, 1);

    let r = sharp_constant(&p(5, 8.0)).unwrap();
    assert_eq!((r.l_min, r.k_m), (1, Some(3)));
    let expected = [2.25, 121.0 / 324.0, 0.521604938271605, 6.25];
    assert_eq!(r.branch_values.len(), 4);
    for (b, e) in r.branch_values.iter().zip(expected) {
        assert_relative_eq!(b.value, e, max_relative = 1e-12);
    }

    let r = sharp_constant(&p(1, 2.0)).unwrap();
    assert_eq!((r.value, r.l_min), (0.25, 0));

    let r = sharp_constant(&p(2, 4.0)).unwrap();
    assert_eq!((r.value, r.l_min), (0.0, 1));
    assert!(r.vanishing);
    let values: Vec<f64> = r.branch_values.iter().map(|b| b.value).collect();
    assert_eq!(values, vec![1.0, 0.0, 9.0]);
}

#[test]
fn sharp_constant_agrees_with_the_fourier_oracle_on_the_panel() {
    for (n, m) in [(5, 0.0), (4, 0.0), (3, 0.0), (1, 2.0), (5, -2.5), (5, 8.0), (2, 4.0), (2, 3.5)] {
        let r = sharp_constant(&p(n, m)).unwrap();
        let (oracle, argmin) = fourier_constant(n, m, 40);
        assert_relative_eq!(r.value, oracle, epsilon = 1e-12, max_relative = 1e-12);
        assert_eq!(r.l_min, argmin, "N = {n}, m = {m}");
    }
}

#[test]
fn prior_mode_minimum_examples() {
    let mm = prior_constant_tz(&p(5, 0.0)).unwrap();
    assert_eq!((mm.value, mm.minimizer), (6.25, 0));

    let mm = prior_constant_tz(&p(5, -0.5)).unwrap();
    assert_relative_eq!(mm.value, 4.6875_f64.powi(2) / 4.0625, max_relative = 1e-12);
    assert_relative_eq!(mm.value, 5.40865, max_relative = 1e-6);
    assert_eq!(mm.minimizer, 1);

    let mm = prior_constant_tz(&p(6, 0.0)).unwrap();
    assert_eq!((mm.value, mm.minimizer), (9.0, 0));

    assert!(prior_constant_tz(&p(4, 0.0)).is_err());
}

#[test]
fn prior_catalog_examples() {
    assert_relative_eq!(prior_constant_catalog(&p(4, 0.0)).unwrap().value, 3.0);
    assert_relative_eq!(
        prior_constant_catalog(&p(3, 0.0)).unwrap().value,
        25.0 / 36.0,
        max_relative = 1e-14
    );
    assert!(prior_constant_catalog(&p(1, 2.5)).is_none());
}

#[test]
fn improvement_examples() {
    let r = improvement_report(&p(4, 0.0)).unwrap();
    assert_eq!((r.tilde, r.prior, r.strict_improvement), (4.0, Some(3.0), Some(true)));

    let r = improvement_report(&p(3, 0.0)).unwrap();
    assert_eq!(r.tilde, 2.25);
    assert_relative_eq!(r.prior.unwrap(), 25.0 / 36.0, max_relative = 1e-14);
    assert_eq!(r.strict_improvement, Some(true));

    let r = improvement_report(&p(5, 0.0)).unwrap();
    assert_eq!((r.tilde, r.prior, r.strict_improvement), (6.25, Some(6.25), Some(false)));
}

#[test]
fn boundary_examples() {
    let b = regime_boundaries::<f64>(5);
    assert_relative_eq!(b.lower_middle, 2.0 - 17f64.sqrt(), max_relative = 1e-15);
    assert_relative_eq!(b.lower_middle, -2.123106, epsilon = 1e-6);

    let b = regime_boundaries::<f64>(2);
    assert_relative_eq!(b.upper_middle, 2.0 + 2f64.sqrt(), max_relative = 1e-15);

    let b = regime_boundaries::<f64>(1);
    assert_eq!(
        [b.integrability, b.degenerate_weight, b.lower_middle, b.upper_middle, b.prior_threshold],
        [1.0, 3.0, 1.0, 3.0, 1.0]
    );
}

#[test]
fn single_precision_reproduces_the_closed_forms() {
    let r = sharp_constant(&validate_parameters(5, 8.0_f32).unwrap()).unwrap();
    assert!((r.value - 121.0 / 324.0).abs() < 1e-6);
    assert_eq!(r.l_min, 1);
}
