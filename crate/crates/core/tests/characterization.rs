mod common;

use rwps::{
    characterization_report, check_alpha_vanishing, check_eigen, check_kappa_conditions,
    check_kernel_pair, check_sieved_direct, check_ultraspherical_fit, rat, CharacterizationReport,
    Condition, Error, FamilySpec, KappaMode,
};

use common::equivalence_families;

fn half_family() -> FamilySpec {
    FamilySpec::ultraspherical(rat(1, 2)).unwrap()
}

fn assert_uniform(report: &CharacterizationReport, conditions: &[Condition], holds: bool) {
    for &c in conditions {
        let verdict = report.verdict(c).unwrap();
        assert_eq!(verdict.holds(), holds, "{c}: {verdict}");
    }
}

#[test]
fn a_defect_is_seen_exactly_when_inside_the_horizon() {
    for k in 2..=3 {
        let sieved = half_family().sieve(k);
        for d in (2..=18).filter(|d| d % k != 0) {
            let defect = sieved.with_override(d, rat(1, 3)).unwrap();
            let inside = characterization_report(&defect, k, d).unwrap();
            assert_uniform(&inside, &Condition::SIEVED, false);
            assert_eq!(
                inside
                    .verdict(Condition::SievedDirect)
                    .unwrap()
                    .failing_index(),
                Some(d)
            );
            if d > 1 {
                let outside = characterization_report(&defect, k, d - 1).unwrap();
                assert_uniform(&outside, &Condition::SIEVED, true);
            }
        }
    }
}

#[test]
fn failures_surface_within_two_rows_of_the_defect() {
    let sieved = half_family().sieve(3);
    for d in [7, 10, 11, 14] {
        let defect = sieved.with_override(d, rat(2, 5)).unwrap();
        assert!(!check_eigen(&defect, 3, d + 1).unwrap().holds());
        assert!(!check_alpha_vanishing(&defect, 3, d + 1).unwrap().holds());
        let (kernel, orth) = check_kernel_pair(&defect, 3, d + 2).unwrap();
        assert!(!kernel.holds() && !orth.holds());
        assert!(!check_kappa_conditions(&defect, 3, d + 2, KappaMode::Full)
            .unwrap()
            .holds());
    }
}

#[test]
fn sieving_by_a_multiple_is_sieving_by_each_divisor() {
    let six = half_family().sieve(6);
    for k in [2, 3, 6] {
        assert!(
            characterization_report(&six, k, 20).unwrap().all_hold(),
            "k = {k}"
        );
    }
    let report = characterization_report(&six, 4, 20).unwrap();
    assert_uniform(&report, &Condition::SIEVED, false);
}

#[test]
fn random_families_never_split_the_conditions() {
    for (i, spec) in equivalence_families(12, 99).iter().enumerate() {
        for k in 2..=4 {
            let report = characterization_report(spec, k, 16).unwrap();
            let direct = check_sieved_direct(spec, k, 16).unwrap();
            assert_uniform(&report, &Condition::SIEVED, direct.holds());
            assert!(
                check_kernel_pair(spec, k, 16).is_ok(),
                "family #{i}, k = {k}"
            );
        }
    }
}

#[test]
fn k_one_singles_out_ultraspherical_families() {
    for alpha in [rat(-1, 4), rat(1, 2), rat(3, 1)] {
        let spec = FamilySpec::ultraspherical(alpha.clone()).unwrap();
        let report = characterization_report(&spec, 1, 14).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.fitted_alpha, Some(alpha));
    }
    let chebyshev = characterization_report(&FamilySpec::chebyshev_t(), 1, 14).unwrap();
    assert!(chebyshev.all_hold());

    let bent = half_family().with_override(6, rat(1, 3)).unwrap();
    let report = characterization_report(&bent, 1, 14).unwrap();
    assert_uniform(&report, &Condition::ULTRASPHERICAL, false);
    for c in [
        Condition::SievedDirect,
        Condition::Eigenvector,
        Condition::CentralEquation,
    ] {
        assert!(report.verdict(c).unwrap().holds(), "{c}");
    }
    assert_eq!(
        check_ultraspherical_fit(&bent, 14).unwrap().failing_index(),
        Some(6)
    );
}

#[test]
fn invalid_requests_are_rejected() {
    let spec = half_family();
    assert_eq!(
        characterization_report(&spec, 0, 10).unwrap_err(),
        Error::ZeroK
    );
    assert!(matches!(
        characterization_report(&spec, 2, 0),
        Err(Error::HorizonTooSmall { horizon: 0, .. })
    ));
    assert!(matches!(
        check_kappa_conditions(&spec, 2, 4, KappaMode::Weakened),
        Err(Error::HorizonTooSmall { horizon: 4, .. })
    ));
    let short = FamilySpec::table(vec![rat(1, 2); 3]).unwrap();
    assert!(matches!(
        check_sieved_direct(&short, 2, 6),
        Err(Error::OutOfRange { n: 5, len: 3 })
    ));
}

#[test]
fn reports_round_trip_through_json() {
    let defect = half_family().sieve(2).with_override(5, rat(1, 4)).unwrap();
    let report = characterization_report(&defect, 2, 10).unwrap();
    let json = serde_json::to_string(&report).unwrap();
    assert!(
        json.contains(r#""condition":"eq3.7","verdict":"fails","n":5"#),
        "{json}"
    );
    let back: CharacterizationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}
