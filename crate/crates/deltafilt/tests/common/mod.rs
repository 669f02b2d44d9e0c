//! Builders shared by the integration suites.
#![allow(dead_code)]

use deltafilt::gfmat::{FieldSpec, Mat};
use deltafilt::hsys::{projective_system, HomologicalSystem};
use deltafilt::preord::Preorder;
use deltafilt::qrep::{projective, simple, AlgebraPresentation, Quiver, Representation};

pub fn gf5() -> FieldSpec {
    FieldSpec::new(5).unwrap()
}

pub fn a2_alg() -> AlgebraPresentation {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into())],
    )
    .unwrap();
    AlgebraPresentation::new(q, gf5(), vec![], 2).unwrap()
}

pub fn a3_alg() -> AlgebraPresentation {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
        ],
    )
    .unwrap();
    AlgebraPresentation::new(q, gf5(), vec![], 3).unwrap()
}

pub fn p1(alg: &AlgebraPresentation) -> Representation {
    projective(alg, 0)
}

pub fn s1(alg: &AlgebraPresentation) -> Representation {
    simple(alg, 0)
}

pub fn s2(alg: &AlgebraPresentation) -> Representation {
    simple(alg, 1)
}

pub fn simples_system() -> HomologicalSystem {
    let alg = a2_alg();
    let omega = vec!["1".to_string(), "2".to_string()];
    let preorder =
        Preorder::close_transitive(omega.clone(), &[("1".to_string(), "2".to_string())]).unwrap();
    let mut sys = HomologicalSystem::new(
        alg.clone(),
        omega,
        preorder,
        vec![simple(&alg, 0), simple(&alg, 1)],
    )
    .unwrap();
    assert!(sys.validate().unwrap().all_passed());
    sys
}

pub fn a2_projectives_system() -> HomologicalSystem {
    projective_system(&a2_alg()).unwrap()
}

pub fn a3_projectives_system() -> HomologicalSystem {
    projective_system(&a3_alg()).unwrap()
}

pub fn mat(rows: &[Vec<u64>]) -> Mat {
    Mat::from_rows(gf5(), rows).unwrap()
}

/// Path to a bundled CLI fixture, shared across the workspace.
pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../deltafilt-cli/fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> deltafilt::json::Workspace {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    deltafilt::json::Workspace::from_json(&text).unwrap()
}
