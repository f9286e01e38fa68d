mod common;

use approx::assert_relative_eq;
use common::adaptive_simpson;
use hardy_rellich::trial::{
    asymptotic_leading, cutoff_eval, ibp_identity_check, limit_extrapolate, onedim_hardy_check,
    onedim_hardy_trial, radial_integrals, rayleigh_quotient, trial_eval, BumpProfile, TrialSpec,
};
use hardy_rellich::{branch_constant, sharp_constant, validate_parameters, Error, Parameters64};

const TOL: f64 = 1e-13;

fn p(n: u32, m: f64) -> Parameters64 {
    validate_parameters(n, m).unwrap()
}

fn spec(n: u32, m: f64, l: u32, eps: f64) -> TrialSpec<f64> {
    TrialSpec::new(p(n, m), l, eps).unwrap()
}

#[test]
fn cutoff_examples() {
    let j = cutoff_eval(0.5_f64);
    assert_eq!((j.value, j.d1, j.d2), (1.0, 0.0, 0.0));
    let j = cutoff_eval(3.0_f64);
    assert_eq!((j.value, j.d1, j.d2), (0.0, 0.0, 0.0));
    let j = cutoff_eval(1.5_f64);
    assert_relative_eq!(j.value, 0.5, epsilon = 1e-15);
    assert_relative_eq!(j.d1, -1.875, epsilon = 1e-14);
    assert_relative_eq!(j.d2, 0.0, epsilon = 1e-13);
}

#[test]
fn trial_function_examples() {
    let u = trial_eval(&spec(5, 0.0, 0, 0.1), 0.5);
    assert_relative_eq!(u.value, 0.5_f64.powf(-0.4), max_relative = 1e-14);
    assert_relative_eq!(u.value, 1.31951, max_relative = 1e-5);
    assert_relative_eq!(u.d1, -0.4 * 0.5_f64.powf(-1.4), max_relative = 1e-14);

    for r in [2.0, 2.5, 10.0] {
        let u = trial_eval(&spec(5, 8.0, 1, 0.01), r);
        assert_eq!((u.value, u.d1, u.d2), (0.0, 0.0, 0.0));
    }

    // N = 4, m = 0: the base exponent is 0, so U = r^eps near r = 1
    let s = spec(4, 0.0, 0, 0.5);
    let u = trial_eval(&s, 1.0);
    assert_relative_eq!(u.value, 1.0, epsilon = 1e-15);
    assert_relative_eq!(u.d1, 0.5, epsilon = 1e-14);
    let h = 1e-6;
    let fd = (trial_eval(&s, 1.0 + h).value - trial_eval(&s, 1.0 - h).value) / (2.0 * h);
    assert_relative_eq!(fd, u.d1, epsilon = 1e-8);
}

#[test]
fn invalid_trial_parameters_are_rejected() {
    assert!(matches!(
        TrialSpec::new(p(5, 0.0), 0, 0.0),
        Err(Error::InvalidTrial(_))
    ));
    assert!(matches!(
        TrialSpec::new(p(5, 0.0), 0, -0.1),
        Err(Error::InvalidTrial(_))
    ));
}

#[test]
fn leading_terms_examples() {
    let lead = asymptotic_leading(&spec(5, 0.0, 0, 0.1));
    assert_relative_eq!(lead.j0_lead, 5.0, max_relative = 1e-14);
    assert_relative_eq!(lead.j1_lead, 0.8, max_relative = 1e-14);
    assert_relative_eq!(lead.j2_lead, 1.568, max_relative = 1e-14);
}

#[test]
fn remainders_stay_bounded_as_eps_shrinks() {
    for (n, m, l) in [(5, 0.0, 0), (5, -2.5, 1), (5, 8.0, 1), (2, 4.0, 1)] {
        let rem: Vec<[f64; 3]> = [0.1, 0.05, 0.025, 0.0125, 0.005]
            .iter()
            .map(|&eps| {
                let s = spec(n, m, l, eps);
                let j = radial_integrals(&s, TOL).unwrap();
                let lead = asymptotic_leading(&s);
                [j.j0 - lead.j0_lead, j.j1 - lead.j1_lead, j.j2 - lead.j2_lead]
            })
            .collect();
        for i in 0..3 {
            let first = rem[0][i].abs().max(1.0);
            for r in &rem {
                assert!(r[i].abs() <= 10.0 * first, "N = {n}, m = {m}: {rem:?}");
            }
        }
    }
}

/// The cutoff, written out independently of the library.
fn smoothstep_cutoff(r: f64) -> (f64, f64, f64) {
    if r <= 1.0 {
        return (1.0, 0.0, 0.0);
    }
    if r >= 2.0 {
        return (0.0, 0.0, 0.0);
    }
    let t = r - 1.0;
    let s = 6.0 * t.powi(5) - 15.0 * t.powi(4) + 10.0 * t.powi(3);
    let ds = 30.0 * t.powi(4) - 60.0 * t.powi(3) + 30.0 * t.powi(2);
    let dds = 120.0 * t.powi(3) - 180.0 * t.powi(2) + 60.0 * t;
    (1.0 - s, -ds, -dds)
}

/// `(J0, J1, J2)` of `r^(beta+eps) g(r)` by adaptive Simpson in `t = ln r`.
///
/// The integrands decay like `e^(2 eps t)`, so the tail below `t = -1400`
/// is below `1e-11` relative for `eps >= 0.01`.
fn oracle_integrals(n: f64, m: f64, eps: f64) -> [f64; 3] {
    let a = -(n + m - 4.0) / 2.0 + eps;
    let jet = |r: f64| {
        let (g, dg, ddg) = smoothstep_cutoff(r);
        (
            r.powf(a) * g,
            a * r.powf(a - 1.0) * g + r.powf(a) * dg,
            a * (a - 1.0) * r.powf(a - 2.0) * g + 2.0 * a * r.powf(a - 1.0) * dg + r.powf(a) * ddg,
        )
    };
    // on r < 1 the cutoff is 1 and each integrand is a pure exponential in t
    let inner = |coef: f64| {
        let f = |t: f64| coef * (2.0 * eps * t).exp();
        adaptive_simpson(&f, -1400.0, 0.0, 1e-12)
    };
    let outer = |f: &dyn Fn(f64) -> f64| adaptive_simpson(&f, 0.0, 2f64.ln(), 1e-13);
    let base = n + m;
    let j0 = inner(1.0)
        + outer(&|t: f64| {
            let r = t.exp();
            jet(r).0.powi(2) * r.powf(base - 5.0) * r
        });
    let j1 = inner(a * a)
        + outer(&|t: f64| {
            let r = t.exp();
            jet(r).1.powi(2) * r.powf(base - 3.0) * r
        });
    let j2 = inner((a * (a - 1.0)).powi(2))
        + outer(&|t: f64| {
            let r = t.exp();
            jet(r).2.powi(2) * r.powf(base - 1.0) * r
        });
    [j0, j1, j2]
}

#[test]
fn radial_integrals_match_an_adaptive_oracle() {
    let [_, j1, j2] = oracle_integrals(5.0, 0.0, 0.01);
    let got = radial_integrals(&spec(5, 0.0, 0, 0.01), TOL).unwrap();
    assert!((got.j1 - j1).abs() <= 1e-10 * j1, "J1 {} vs {}", got.j1, j1);
    assert!((got.j2 - j2).abs() <= 1e-10 * j2, "J2 {} vs {}", got.j2, j2);
}

#[test]
fn rayleigh_quotient_examples() {
    // at eps = 0.01 the O(eps) term is still large; the values are pinned
    // against the adaptive oracle and the 0.05 band is reached for small eps
    for (n, m, l, limit) in [(5, 0.0, 0, 6.25), (5, -2.5, 1, 22.5625 / 9.0)] {
        let params = p(n, m);
        let [j0, j1, j2] = oracle_integrals(n as f64, m, 0.01);
        let (c1, c0) = hardy_rellich::trial::mode_coefficients(&params, l);
        let expected = (j2 + c1 * j1 + c0 * j0) / j1;
        let q = rayleigh_quotient(&spec(n, m, l, 0.01), TOL).unwrap();
        assert_relative_eq!(q.quotient, expected, max_relative = 1e-9);
        assert!(q.quotient > limit);

        let q = rayleigh_quotient(&spec(n, m, l, 1e-5), TOL).unwrap();
        assert!((q.quotient - limit).abs() < 0.05, "N = {n}, m = {m}: {q:?}");
    }
}

#[test]
fn quotients_never_undercut_the_sharp_constant() {
    for (n, m) in [(5, 0.0), (3, 0.0), (5, -2.5), (5, 8.0), (2, 4.0), (1, 2.0), (4, 6.0)] {
        let c = sharp_constant(&p(n, m)).unwrap().value;
        let degrees = if n == 1 { 0..=0 } else { 0..=4 };
        for l in degrees {
            for eps in [0.2, 0.05, 0.01, 0.002] {
                let q = rayleigh_quotient(&spec(n, m, l, eps), TOL).unwrap();
                assert!(
                    q.quotient >= c - 1e-9 - q.error,
                    "N = {n}, m = {m}, l = {l}, eps = {eps}: {} < {c}",
                    q.quotient
                );
            }
        }
    }
}

#[test]
fn extrapolation_examples() {
    let eps = [0.02, 0.01];
    for (n, m, l, target) in [
        (5, 0.0, 0, 6.25),
        (5, -2.5, 1, 22.5625 / 9.0),
        (5, 8.0, 1, 121.0 / 324.0),
    ] {
        let e = limit_extrapolate(&p(n, m), l, &eps, TOL).unwrap();
        assert!(
            (e.limit - target).abs() <= 1e-4 * target,
            "N = {n}, m = {m}: {} vs {target}",
            e.limit
        );
        assert_eq!(e.quotients.len(), 2);
    }
}

#[test]
fn extrapolation_reaches_every_branch_below_threshold() {
    let eps = [0.008, 0.004, 0.002, 0.001];
    for (n, m) in [(5, 8.0), (2, 4.0), (3, 9.0), (6, 15.0)] {
        let params = p(n, m);
        let report = sharp_constant(&params).unwrap();
        let k_m = report.k_m.unwrap();
        let mut best = f64::INFINITY;
        for l in 0..=k_m {
            let target = branch_constant(&params, l).unwrap();
            let e = limit_extrapolate(&params, l, &eps, TOL).unwrap();
            let scale = target.abs().max(params.upper_bound() * 1e-2);
            assert!(
                (e.limit - target).abs() <= 1e-4 * scale,
                "N = {n}, m = {m}, l = {l}: {} vs {target}",
                e.limit
            );
            best = best.min(e.limit);
        }
        let scale = report.value.abs().max(params.upper_bound() * 1e-2);
        assert!((best - report.value).abs() <= 1e-4 * scale);
    }
}

#[test]
fn extrapolation_rejects_bad_eps_lists() {
    let params = p(5, 0.0);
    for bad in [&[0.01][..], &[0.01, 0.02], &[0.02, -0.01], &[0.02, 0.02]] {
        assert!(matches!(
            limit_extrapolate(&params, 0, bad, TOL),
            Err(Error::InvalidExtrapolation(_))
        ));
    }
}

#[test]
fn identity_examples() {
    let r = ibp_identity_check(&p(5, 0.0), &BumpProfile::on_interval(1.0, 3.0), TOL).unwrap();
    assert!(r.residual1 <= 1e-10 && r.residual2 <= 1e-10, "{r:?}");

    let r = ibp_identity_check(&p(5, 0.0), &BumpProfile::<f64>::default(), TOL).unwrap();
    assert_eq!((r.residual1, r.residual2), (0.0, 0.0));

    for seed in 0..20 {
        let bumps = BumpProfile::random(0.25, 4.0, seed);
        for (n, m) in [(5, 0.0), (5, -2.5), (2, 4.0), (3, 7.5), (1, 2.0)] {
            let r = ibp_identity_check(&p(n, m), &bumps, TOL).unwrap();
            assert!(r.residual1 <= 1e-8 && r.residual2 <= 1e-8, "seed {seed}: {r:?}");
        }
    }
}

#[test]
fn hardy_examples() {
    let params = p(5, 0.0);
    for seed in 0..20 {
        let r = onedim_hardy_check(&params, &BumpProfile::random(0.25, 4.0, seed), TOL).unwrap();
        assert!(r.ratio1 >= 2.25 && r.ratio2 >= 0.25, "seed {seed}: {r:?}");
    }
    let r = onedim_hardy_trial(&params, 0.01, TOL).unwrap();
    assert!((r.ratio2 - 0.25).abs() < 0.05, "{r:?}");
    assert!(r.ratio2 >= 0.25);
}
