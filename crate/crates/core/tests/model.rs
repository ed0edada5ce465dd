use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use anyon_interferometry::model::{
    build_model, ising, ising_spec, load_model, verify_consistency, AxiomFamily, ModelSpec,
};
use anyon_interferometry::{Error, C64};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn model_path(name: &str) -> String {
    format!("{}/models/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn ising_table_values() {
    let m = ising();
    let table_s = [[1.0, SQRT_2, 1.0], [SQRT_2, 0.0, -SQRT_2], [1.0, -SQRT_2, 1.0]];
    let table_m = [[1.0, 1.0, 1.0], [1.0, 0.0, -1.0], [1.0, -1.0, 1.0]];
    for a in m.charges() {
        for b in m.charges() {
            let (i, j) = (a.index(), b.index());
            assert!((m.s(a, b) - c(table_s[i][j] / 2.0, 0.0)).norm() < 1e-15);
            assert!((m.monodromy(a, b) - c(table_m[i][j], 0.0)).norm() < 1e-12);
        }
    }
    let sigma = m.charge("sigma").unwrap();
    assert!((m.dim(sigma) - SQRT_2).abs() < 1e-12);
    assert!((m.total_dim() - 2.0).abs() < 1e-12);
    assert!((m.twist(sigma) - C64::from_polar(1.0, PI / 8.0)).norm() < 1e-15);
}

#[test]
fn ising_file_matches_builtin() {
    let from_file = load_model(model_path("ising")).unwrap();
    let builtin = ising();
    assert_eq!(from_file.charge_names(), builtin.charge_names());
    assert!((from_file.s_matrix() - builtin.s_matrix()).norm() < 1e-15);
    assert!((from_file.monodromy_matrix() - builtin.monodromy_matrix()).norm() < 1e-15);
}

#[test]
fn fibonacci_modular_data() {
    let m = load_model(model_path("fibonacci")).unwrap();
    let tau = m.charge("tau").unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let norm = (2.0 + phi).sqrt();
    let oracle = [[1.0, phi], [phi, -1.0]];
    for a in m.charges() {
        for b in m.charges() {
            assert!((m.s(a, b) - c(oracle[a.index()][b.index()] / norm, 0.0)).norm() < 1e-12);
        }
    }
    assert!((m.dim(tau) - phi).abs() < 1e-12);
    // M_{tau tau} from the braiding sum (1/d^2) sum_c d_c (R^{tau tau}_c)^2
    let r_i = C64::from_polar(1.0, -4.0 * PI / 5.0);
    let r_t = C64::from_polar(1.0, 3.0 * PI / 5.0);
    let braided = (r_i * r_i + r_t * r_t * phi) / (phi * phi);
    assert!((m.monodromy(tau, tau) - braided).norm() < 1e-12);
    assert!((m.monodromy(tau, tau) - c(-1.0 / (phi * phi), 0.0)).norm() < 1e-12);
}

#[test]
fn semion_modular_data() {
    let m = load_model(model_path("semion")).unwrap();
    let s = m.charge("s").unwrap();
    assert!((m.s(s, s) - c(-FRAC_1_SQRT_2, 0.0)).norm() < 1e-12);
    assert!((m.twist(s) - c(0.0, 1.0)).norm() < 1e-15);
    assert!(!m.s_supplied());
}

#[test]
fn structural_errors() {
    let mut dup = ising_spec();
    dup.fusion.push(("sigma".into(), "sigma".into(), "psi".into()));
    assert!(matches!(build_model(&dup), Err(Error::NonMultiplicityFree { .. })));

    let mut unknown = ising_spec();
    unknown
        .r_symbols
        .push(("sigma".into(), "tau".into(), "sigma".into(), 1.0, 0.0));
    assert!(matches!(build_model(&unknown), Err(Error::UnknownCharge(_))));

    let mut no_vac = ising_spec();
    no_vac.vacuum = Some("vac".into());
    assert!(matches!(build_model(&no_vac), Err(Error::MissingVacuum)));

    assert!(matches!(
        ModelSpec::from_json("{\"charges\": [\"I\"], \"extra\": 1}"),
        Err(Error::Parse(_))
    ));
}

#[test]
fn wrong_supplied_s_is_caught() {
    let mut spec = ising_spec();
    let s = spec.s_matrix.as_mut().unwrap();
    s[1][2] = (FRAC_1_SQRT_2, 0.0);
    match build_model(&spec) {
        Err(Error::ConsistencyViolation(report)) => {
            assert!(report.failing_families().contains(&AxiomFamily::SMatrix));
        }
        other => panic!("expected a consistency violation, got {other:?}"),
    }
}

proptest! {
    #[test]
    fn twist_phase_error_breaks_hexagon_family(eps in 0.01f64..6.27) {
        let mut spec = ising_spec();
        let z = C64::from_polar(1.0, PI / 8.0 + eps);
        spec.twists[0] = ("sigma".into(), z.re, z.im);
        match build_model(&spec) {
            Err(Error::ConsistencyViolation(report)) => {
                prop_assert!(report.failing_families().contains(&AxiomFamily::Hexagon));
                prop_assert!(report.family(AxiomFamily::Pentagon).passed());
            }
            other => prop_assert!(false, "perturbed twist accepted: {:?}", other.map(|m| m.name().to_string())),
        }
    }

    #[test]
    fn f_phase_error_breaks_pentagon(eps in 0.01f64..6.27) {
        let mut spec = ising_spec();
        let z = C64::from_polar(-FRAC_1_SQRT_2, eps);
        spec.f_symbols[3].6 = z.re;
        spec.f_symbols[3].7 = z.im;
        match build_model(&spec) {
            Err(Error::ConsistencyViolation(report)) => {
                prop_assert!(!report.family(AxiomFamily::Pentagon).passed());
            }
            other => prop_assert!(false, "perturbed F accepted: {:?}", other.map(|m| m.name().to_string())),
        }
    }
}

#[test]
fn consistency_report_lists_every_family() {
    let report = verify_consistency(&ising());
    for family in [
        AxiomFamily::Fusion,
        AxiomFamily::Pentagon,
        AxiomFamily::Hexagon,
        AxiomFamily::SMatrix,
        AxiomFamily::Monodromy,
        AxiomFamily::TwistVacuum,
    ] {
        assert!(report.family(family).instances > 0);
    }
}
