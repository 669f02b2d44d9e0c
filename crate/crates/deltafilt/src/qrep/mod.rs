//! Quivers, path algebras over GF(p) with admissible relations, and
//! finite-dimensional modules as quiver representations.
//!
//! A representation assigns a GF(p)-vector space to each vertex and a matrix
//! to each arrow; relations of the algebra must evaluate to zero. On top of
//! that substrate this module provides the homological toolkit: Hom spaces as
//! intertwiner kernels, projective covers, Ext¹ via projective presentations,
//! isomorphism testing, Krull–Schmidt decomposition by Fitting splits, trace
//! submodules, and split retractions.
//!
//! Paths are written in traversal order: the path `["a", "b"]` first follows
//! `a`, then `b`, and acts on a representation as `M_b · M_a`.

mod algebra;
mod decomp;
mod hom;
mod projective;
mod quiver;
mod rep;

pub use algebra::{AlgebraPresentation, Relation, RelationTerm};
pub use decomp::{
    decompose, decompose_grouped, is_indecomposable, is_isomorphic, isomorphism, Certainty,
    DecompFactor, Decomposition, IsoVerdict, SearchLimits, SearchOutcome,
};
pub use hom::{euler_form, hom_basis, split_retraction, trace, Hom, HomSpace};
pub use projective::{
    ext1_data, ext1_dim, presentation, projective, projective_cover, projective_data, radical,
    simple, top_dims, Cover, Ext1, Presentation, ProjectiveData,
};
pub use quiver::{Arrow, Path, Quiver};
pub use rep::{
    direct_sum, image_submodule, preimage, quotient_rep, quotient_rep_full, sub_generated,
    submodule_rep, validate_representation, DirectSum, RepViolation, Representation, SubRep,
    Submodule,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QrepError {
    #[error("duplicate arrow name: {0}")]
    DuplicateArrow(String),
    #[error("duplicate vertex label: {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("unknown arrow: {0}")]
    UnknownArrow(String),
    #[error("relation is not admissible: {0}")]
    BadRelation(String),
    #[error("nilpotency bound {bound} does not certify finite dimension: {reason}")]
    BadNilpotencyBound { bound: usize, reason: String },
    #[error("algebra has relations; the Euler form needs a hereditary algebra")]
    NotHereditary,
    #[error("invalid representation: {0:?}")]
    InvalidRepresentation(Vec<RepViolation>),
    #[error("not a submodule: {0}")]
    NotASubmodule(String),
    #[error("no retraction exists: {0}")]
    NoRetraction(String),
    #[error("the zero module has no indecomposability status")]
    ZeroModule,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Mat(#[from] crate::gfmat::MatError),
}
