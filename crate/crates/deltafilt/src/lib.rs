//! Exact computation for homological systems over path algebras of quivers
//! over prime fields GF(p).
//!
//! The crate is organized bottom-up:
//!
//! - [`gfmat`]: dense exact linear algebra over GF(p): matrices, subspaces,
//!   kernels, quotient coordinates.
//! - [`preord`]: finite preordered sets, their poset quotients, linear
//!   extensions, and divisibility-based constructions.
//! - [`qrep`]: quivers, path algebras with admissible relations,
//!   finite-dimensional modules as representations, and the homological
//!   toolkit (Hom, Ext¹, projective covers, decomposition, trace, splittings).
//! - [`hsys`]: the homological-system datatype with axiom validation.
//! - [`filt`]: concrete filtrations: validation, slim refinement, sorting,
//!   ordered filtrations, multiplicity invariants, summand splitting.
//! - [`symb`]: the symbolic layer with cardinal multiplicities.
//! - [`json`]: JSON wire formats shared with the CLI.

pub mod filt;
pub mod gfmat;
pub mod hsys;
pub mod json;
pub mod preord;
pub mod qrep;
pub mod symb;

#[cfg(test)]
pub(crate) mod testfix;
