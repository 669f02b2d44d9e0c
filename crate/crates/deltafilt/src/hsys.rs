//! Homological systems: a family {Δ_ω} of modules indexed by a preordered
//! set (Ω, ≤), with the four axioms
//!
//! - HS1: (Ω, ≤) is a preorder;
//! - HS2: every Δ_ω is nonzero, finitely generated, with local endomorphism
//!   ring (here: indecomposable), and the Δ_ω are pairwise non-isomorphic;
//! - HS3: Hom(Δ_ω, Δ_ω′) ≠ 0 ⇒ ω ≤ ω′;
//! - HS4: Ext¹(Δ_ω, Δ_ω′) ≠ 0 ⇒ ω ≤ ω′ and not ω′ ≤ ω.
//!
//! Validation is eager and cached; the filtration layer refuses systems that
//! have not passed. The primed variants HS3′/HS4′ quantify over every
//! linearization of the quotient poset and are checked separately as an
//! equivalent axiomatization.

use crate::preord::{Linearization, Preorder, PreordError, QuotientPoset};
use crate::qrep::{
    ext1_dim, hom_basis, is_indecomposable, isomorphism, projective, AlgebraPresentation,
    QrepError, Representation, SearchLimits,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HsysError {
    #[error("omega has {omega} labels but delta has {delta} modules")]
    SizeMismatch { omega: usize, delta: usize },
    #[error("preorder carrier does not equal omega")]
    CarrierMismatch,
    #[error("Δ_{0} is the zero module")]
    ZeroDelta(String),
    #[error("system has not been validated")]
    NotValidated,
    #[error("system failed validation: {0}")]
    AxiomsFailed(String),
    #[error(transparent)]
    Preord(#[from] PreordError),
    #[error(transparent)]
    Qrep(#[from] QrepError),
    #[error("invalid representation for Δ_{omega}: {detail}")]
    InvalidDelta { omega: String, detail: String },
}

/// One witness of an axiom failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NotIndecomposable { omega: String },
    IsomorphicPair { a: String, b: String },
    HomViolation { from: String, to: String, dim: usize },
    ExtViolation { from: String, to: String, dim: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomResult {
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

/// Pass/fail per axiom with every witness of failure, plus the Hom and Ext
/// dimension matrices the checks computed.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub hs1: AxiomResult,
    pub hs2: AxiomResult,
    pub hs3: AxiomResult,
    pub hs4: AxiomResult,
    pub hom_dims: Vec<Vec<usize>>,
    pub ext_dims: Vec<Vec<usize>>,
    /// Whether every HS2 verdict came from an exhaustive search.
    pub certified: bool,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.hs1.passed && self.hs2.passed && self.hs3.passed && self.hs4.passed
    }

    pub fn failing_axioms(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.hs1.passed {
            out.push("HS1");
        }
        if !self.hs2.passed {
            out.push("HS2");
        }
        if !self.hs3.passed {
            out.push("HS3");
        }
        if !self.hs4.passed {
            out.push("HS4");
        }
        out
    }
}

/// The system: an algebra, labels Ω with a preorder, and the family Δ.
#[derive(Debug, Clone)]
pub struct HomologicalSystem {
    algebra: AlgebraPresentation,
    omega: Vec<String>,
    preorder: Preorder<String>,
    delta: Vec<Representation>,
    validation: Option<ValidationReport>,
}

impl HomologicalSystem {
    /// Structural checks only; axiom validation is a separate step.
    pub fn new(
        algebra: AlgebraPresentation,
        omega: Vec<String>,
        preorder: Preorder<String>,
        delta: Vec<Representation>,
    ) -> Result<Self, HsysError> {
        if omega.len() != delta.len() {
            return Err(HsysError::SizeMismatch {
                omega: omega.len(),
                delta: delta.len(),
            });
        }
        if preorder.carrier() != omega.as_slice() {
            return Err(HsysError::CarrierMismatch);
        }
        for (label, rep) in omega.iter().zip(delta.iter()) {
            if rep.is_zero() {
                return Err(HsysError::ZeroDelta(label.clone()));
            }
            if let Err(violations) = crate::qrep::validate_representation(&algebra, rep) {
                return Err(HsysError::InvalidDelta {
                    omega: label.clone(),
                    detail: format!("{violations:?}"),
                });
            }
        }
        Ok(HomologicalSystem {
            algebra,
            omega,
            preorder,
            delta,
            validation: None,
        })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn omega(&self) -> &[String] {
        &self.omega
    }

    pub fn omega_index(&self, label: &str) -> Option<usize> {
        self.omega.iter().position(|o| o == label)
    }

    pub fn preorder(&self) -> &Preorder<String> {
        &self.preorder
    }

    pub fn delta(&self, i: usize) -> &Representation {
        &self.delta[i]
    }

    pub fn deltas(&self) -> &[Representation] {
        &self.delta
    }

    pub fn validation(&self) -> Option<&ValidationReport> {
        self.validation.as_ref()
    }

    /// Runs HS1–HS4 (cached). Failures are data in the report, not errors.
    pub fn validate(&mut self) -> Result<&ValidationReport, HsysError> {
        if self.validation.is_none() {
            let report = self.compute_validation(&SearchLimits::default())?;
            self.validation = Some(report);
        }
        Ok(self.validation.as_ref().unwrap())
    }

    pub fn validate_with(&mut self, limits: &SearchLimits) -> Result<&ValidationReport, HsysError> {
        if self.validation.is_none() {
            let report = self.compute_validation(limits)?;
            self.validation = Some(report);
        }
        Ok(self.validation.as_ref().unwrap())
    }

    /// Errors unless validation ran and every axiom passed.
    pub fn require_valid(&self) -> Result<(), HsysError> {
        match &self.validation {
            None => Err(HsysError::NotValidated),
            Some(report) if !report.all_passed() => {
                Err(HsysError::AxiomsFailed(report.failing_axioms().join(", ")))
            }
            Some(_) => Ok(()),
        }
    }

    fn compute_validation(&self, limits: &SearchLimits) -> Result<ValidationReport, HsysError> {
        let n = self.omega.len();
        let alg = &self.algebra;
        // HS1 is structural: the Preorder type is reflexive-transitive by
        // construction and new() checked the carrier; record it as passed.
        let hs1 = AxiomResult {
            passed: true,
            witnesses: Vec::new(),
        };
        let mut certified = true;
        // HS2: indecomposable, pairwise non-isomorphic
        let mut hs2_witnesses = Vec::new();
        for (i, rep) in self.delta.iter().enumerate() {
            let verdict = is_indecomposable(alg, rep, limits)?;
            if !verdict.is_exact() {
                certified = false;
            }
            if !verdict.value() {
                hs2_witnesses.push(Witness::NotIndecomposable {
                    omega: self.omega[i].clone(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                match isomorphism(alg, &self.delta[i], &self.delta[j], limits) {
                    crate::qrep::IsoVerdict::Isomorphic(_) => {
                        hs2_witnesses.push(Witness::IsomorphicPair {
                            a: self.omega[i].clone(),
                            b: self.omega[j].clone(),
                        });
                    }
                    crate::qrep::IsoVerdict::ProbablyNot { .. } => certified = false,
                    crate::qrep::IsoVerdict::NotIsomorphic => {}
                }
            }
        }
        // HS3/HS4 over all ordered pairs, including ω = ω′
        let mut hom_dims = vec![vec![0usize; n]; n];
        let mut ext_dims = vec![vec![0usize; n]; n];
        let mut hs3_witnesses = Vec::new();
        let mut hs4_witnesses = Vec::new();
        for i in 0..n {
            for j in 0..n {
                hom_dims[i][j] = hom_basis(alg, &self.delta[i], &self.delta[j]).dim();
                ext_dims[i][j] = ext1_dim(alg, &self.delta[i], &self.delta[j])?;
                if hom_dims[i][j] > 0 && !self.preorder.leq_idx(i, j) {
                    hs3_witnesses.push(Witness::HomViolation {
                        from: self.omega[i].clone(),
                        to: self.omega[j].clone(),
                        dim: hom_dims[i][j],
                    });
                }
                // Ext¹(Δ_ω, Δ_ω) ≠ 0 can never satisfy "ω ≤ ω and not ω ≤ ω",
                // so diagonal Ext is always a failure witness.
                if ext_dims[i][j] > 0
                    && !(self.preorder.leq_idx(i, j) && !self.preorder.leq_idx(j, i))
                {
                    hs4_witnesses.push(Witness::ExtViolation {
                        from: self.omega[i].clone(),
                        to: self.omega[j].clone(),
                        dim: ext_dims[i][j],
                    });
                }
            }
        }
        Ok(ValidationReport {
            hs1,
            hs2: AxiomResult {
                passed: hs2_witnesses.is_empty(),
                witnesses: hs2_witnesses,
            },
            hs3: AxiomResult {
                passed: hs3_witnesses.is_empty(),
                witnesses: hs3_witnesses,
            },
            hs4: AxiomResult {
                passed: hs4_witnesses.is_empty(),
                witnesses: hs4_witnesses,
            },
            hom_dims,
            ext_dims,
            certified,
        })
    }

    /// HS3′/HS4′: for every linearization ≼ of the quotient,
    /// Hom ≠ 0 ⇒ ω̄ ≼ ω̄′ and Ext ≠ 0 ⇒ ω̄ ≺ ω̄′. Also reports whether the
    /// primed verdict agrees with plain validation.
    pub fn validate_prime(&mut self, cap: usize) -> Result<PrimeReport, HsysError> {
        self.validate()?;
        let report = self.validation.as_ref().unwrap();
        let hom_dims = report.hom_dims.clone();
        let ext_dims = report.ext_dims.clone();
        let plain_hs34 = report.hs3.passed && report.hs4.passed;
        let quotient = self.preorder.quotient();
        let lins = quotient.enumerate_linearizations(cap)?;
        let n = self.omega.len();
        let mut violations = Vec::new();
        for (li, lin) in lins.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let ci = quotient.class_of_index(i);
                    let cj = quotient.class_of_index(j);
                    if hom_dims[i][j] > 0 && lin.rank_of(ci) > lin.rank_of(cj) {
                        violations.push(PrimeViolation {
                            linearization: li,
                            axiom: "HS3'",
                            from: self.omega[i].clone(),
                            to: self.omega[j].clone(),
                        });
                    }
                    if ext_dims[i][j] > 0 && lin.rank_of(ci) >= lin.rank_of(cj) {
                        violations.push(PrimeViolation {
                            linearization: li,
                            axiom: "HS4'",
                            from: self.omega[i].clone(),
                            to: self.omega[j].clone(),
                        });
                    }
                }
            }
        }
        let passed = violations.is_empty();
        Ok(PrimeReport {
            linearizations_checked: lins.len(),
            passed,
            agrees_with_validate: passed == plain_hs34,
            violations,
        })
    }

    /// The Hom/Ext nonvanishing pattern with the quotient poset and the
    /// deterministic linearization attached; requires passed validation.
    pub fn ext_pattern(&self) -> Result<ExtPattern, HsysError> {
        self.require_valid()?;
        let report = self.validation.as_ref().unwrap();
        let n = self.omega.len();
        let hom_nonzero: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| report.hom_dims[i][j] > 0).collect())
            .collect();
        let ext_nonzero: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| report.ext_dims[i][j] > 0).collect())
            .collect();
        let quotient = self.preorder.quotient();
        let linearization = quotient.linearize()?;
        let class_of = (0..n).map(|i| quotient.class_of_index(i)).collect();
        Ok(ExtPattern {
            omega: self.omega.clone(),
            hom_nonzero,
            ext_nonzero,
            quotient,
            linearization,
            class_of,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeViolation {
    pub linearization: usize,
    pub axiom: &'static str,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeReport {
    pub linearizations_checked: usize,
    pub passed: bool,
    pub agrees_with_validate: bool,
    pub violations: Vec<PrimeViolation>,
}

/// Hom/Ext nonvanishing over Ω plus the order data the filtration sorters
/// consume.
#[derive(Debug, Clone)]
pub struct ExtPattern {
    pub omega: Vec<String>,
    pub hom_nonzero: Vec<Vec<bool>>,
    pub ext_nonzero: Vec<Vec<bool>>,
    pub quotient: QuotientPoset<String>,
    pub linearization: Linearization,
    /// Quotient class of each omega index.
    pub class_of: Vec<usize>,
}

impl ExtPattern {
    pub fn omega_count(&self) -> usize {
        self.omega.len()
    }

    pub fn class_of(&self, omega_idx: usize) -> usize {
        self.class_of[omega_idx]
    }

    pub fn rank_of_omega(&self, omega_idx: usize) -> usize {
        self.linearization.rank_of(self.class_of[omega_idx])
    }

    /// Same pattern, sorted by a different linearization of the quotient.
    pub fn with_linearization(&self, lin: Linearization) -> Result<ExtPattern, PreordError> {
        if !lin.extends(&self.quotient) {
            return Err(PreordError::PreconditionViolated(
                "linearization does not extend the quotient".into(),
            ));
        }
        Ok(ExtPattern {
            linearization: lin,
            ..self.clone()
        })
    }
}

/// The projectives system: Ω = vertices, Δ_v = P_v, preorder generated by
/// Hom(P_i, P_j) ≠ 0. Validated eagerly; the axioms always hold for it.
pub fn projective_system(alg: &AlgebraPresentation) -> Result<HomologicalSystem, HsysError> {
    let q = alg.quiver();
    let omega: Vec<String> = q.vertices().to_vec();
    let delta: Vec<Representation> = (0..q.vertex_count()).map(|v| projective(alg, v)).collect();
    let mut pairs = Vec::new();
    for (i, a) in omega.iter().enumerate() {
        for (j, b) in omega.iter().enumerate() {
            if hom_basis(alg, &delta[i], &delta[j]).dim() > 0 {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let preorder = Preorder::close_transitive(omega.clone(), &pairs)?;
    let mut system = HomologicalSystem::new(alg.clone(), omega, preorder, delta)?;
    let report = system.validate()?;
    if !report.all_passed() {
        return Err(HsysError::AxiomsFailed(report.failing_axioms().join(", ")));
    }
    Ok(system)
}
