//! Exact-arithmetic engine deciding whether a finite set of square matrices
//! over Q or F_p is (strictly) simultaneously triangularizable.
//!
//! Two independent routes decide the question:
//!
//! - the constructive route builds a maximal flag of invariant subspaces one
//!   common eigenvector at a time ([`tri::triangularize`]), or absorbs common
//!   kernels for the strict variant ([`tri::strict_triangularize`]), and
//!   emits a certificate that [`tri::verify`] checks from scratch;
//! - the structural route closes the generated unital algebra, computes its
//!   Jacobson radical by the trace form, and decides whether the semisimple
//!   quotient is a product of copies of the base field
//!   ([`tri::check_mccoy`]).
//!
//! Everything is exact: arbitrary-precision rationals over Q, canonical
//! residues over F_p, no floating point anywhere. The [`endosim`] module adds
//! a bounded sandbox for finitely-supported endomorphisms of a countable-
//! dimensional space, where the classical counterexamples to unbounded
//! triangularization claims can be replayed with explicit witnesses.
//!
//! The core is generic over the scalar field through the [`field::Field`]
//! handle trait; concrete aliases for the two supported fields live at the
//! crate root.

pub mod algebra;
pub mod endosim;
pub mod error;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;
pub mod tri;
pub mod wire;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};

/// Dense exact matrix over Q.
pub type QMatrix = matrix::Matrix<Rationals>;
/// Dense exact matrix over F_p.
pub type FpMatrix = matrix::Matrix<PrimeField>;
/// Subspace of Q^n in canonical echelon form.
pub type QSubspace = subspace::Subspace<Rationals>;
/// Subspace of F_p^n in canonical echelon form.
pub type FpSubspace = subspace::Subspace<PrimeField>;
/// Polynomial over Q.
pub type QPoly = poly::Poly<Rationals>;
/// Polynomial over F_p.
pub type FpPoly = poly::Poly<PrimeField>;
/// Triangularization verdict over Q.
pub type QVerdict = tri::Verdict<Rationals>;
/// Triangularization verdict over F_p.
pub type FpVerdict = tri::Verdict<PrimeField>;
