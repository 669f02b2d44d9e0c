//! Shared fixtures for unit tests: the A2/A3 algebras over GF(5) and the
//! simples and projectives systems on them.
#![allow(dead_code)]

use crate::gfmat::{FieldSpec, Mat};
use crate::hsys::{projective_system, HomologicalSystem};
use crate::preord::Preorder;
use crate::qrep::{projective, simple, AlgebraPresentation, Quiver, Representation};

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

/// The A2 simples system with 1 ≤ 2, validated.
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

/// The A2 projectives system, validated.
pub fn a2_projectives_system() -> HomologicalSystem {
    projective_system(&a2_alg()).unwrap()
}

pub fn a3_projectives_system() -> HomologicalSystem {
    projective_system(&a3_alg()).unwrap()
}

pub fn mat(rows: &[Vec<u64>]) -> Mat {
    Mat::from_rows(gf5(), rows).unwrap()
}
