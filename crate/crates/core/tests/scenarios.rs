use ringbuckle::galerkin::{self, HarmonicOutcome, SolveMode};
use ringbuckle::postbuckling::{self, Stability};
use ringbuckle::rigid::{self, RigidMotion};
use ringbuckle::{analytic, report, Error, LoadCase, LoadState, QuadratureRule, Ring};

#[test]
fn numeric_spectrum_picks_two_waves() {
    for load in LoadCase::ALL {
        let s = galerkin::critical_numeric(load, 1e-4, 8).unwrap();
        assert_eq!(s.min_m, 2, "{load}");
        let exact = analytic::critical(load).lambda_f64();
        assert!((s.min_lambda - exact).abs() / exact < 1e-3, "{load}: {}", s.min_lambda);
        assert_eq!(s.entries.len(), 8);
        assert_eq!(s.entries[0].outcome, HarmonicOutcome::Rigid);
    }
}

#[test]
fn linear_and_exact_solves_agree_as_h_shrinks() {
    for load in LoadCase::ALL {
        let gap = |h| {
            let a = galerkin::lambda_of_harmonic(load, 2, h, SolveMode::Linear)
                .unwrap()
                .lambda()
                .unwrap();
            let b = galerkin::lambda_of_harmonic(load, 2, h, SolveMode::Exact)
                .unwrap()
                .lambda()
                .unwrap();
            (a - b).abs()
        };
        assert!(gap(1e-5) < gap(1e-3) || gap(1e-5) < 1e-9, "{load}");
    }
}

#[test]
fn path_sweep_is_stable_and_rising() {
    let rule = QuadratureRule::default();
    for load in LoadCase::ALL {
        let path = postbuckling::path_sweep(load, 1e-4, 0.2, 21, &rule).unwrap();
        assert_eq!(path.samples.len(), 21);
        assert_eq!(path.samples[0].lambda, postbuckling::path_origin(load));
        assert!(path.samples.windows(2).all(|w| w[1].lambda > w[0].lambda));
        assert!(path.samples[2..].iter().all(|s| s.stability == Stability::Stable));
    }
}

#[test]
fn path_sweep_serializes_identically() {
    let rule = QuadratureRule::default();
    let a = report::to_json(&postbuckling::path_sweep(LoadCase::Central, 1e-3, 0.2, 9, &rule).unwrap()).unwrap();
    let b = report::to_json(&postbuckling::path_sweep(LoadCase::Central, 1e-3, 0.2, 9, &rule).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rigid_motions_change_only_nonconservative_pairs() {
    let rotation = RigidMotion::relative(0.0, 0.0, 0.7);
    let translation = RigidMotion::relative(1.2, -0.4, 0.0);
    for load in LoadCase::ALL {
        let base = rigid::reference_multiplier(load);
        let r = rigid::modified_multiplier(load, &rotation, 1.0).unwrap();
        let t = rigid::modified_multiplier(load, &translation, 1.0).unwrap();
        assert_eq!(r == base, load != LoadCase::Dead, "{load}");
        assert_eq!(t == base, matches!(load, LoadCase::Dead | LoadCase::Hydrostatic), "{load}");
    }
}

#[test]
fn invalid_inputs_are_typed_errors() {
    assert!(matches!(Ring::with_slenderness(0.02), Err(Error::ThickRing { .. })));
    assert!(matches!(Ring::new(-1.0, 1.0, 1.0, 1e-4), Err(Error::NonPositive { .. })));
    assert!(matches!(
        LoadState::from_pressure(Ring::default(), -1.0),
        Err(Error::NegativeLoad { .. })
    ));
    assert!(matches!(QuadratureRule::new(3), Err(Error::TooFewNodes(3))));
    assert!(matches!(RigidMotion::new(0.0, 0.0, 0.9), Err(Error::RotationTooLarge(_))));
    assert!(matches!(
        rigid::modified_multiplier(LoadCase::Central, &RigidMotion::translation(2.0, 2.0), 1.0),
        Err(Error::SingularTranslation(_))
    ));
    assert!("wind".parse::<LoadCase>().is_err());
}
