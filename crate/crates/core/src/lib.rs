//! Exact computer algebra for wreath-product reflection groups.
//!
//! The crate builds, over the cyclotomic field Q(ξ_r):
//!
//! - sparse exact polynomial, localized, and rational-function arithmetic
//!   with exact dense linear algebra ([`poly`], [`localized`], [`ratfunc`],
//!   [`linalg`]);
//! - r-tuples of Young diagrams, standard tableaux, words, indices, hooks and
//!   stabilizers ([`tableaux`]);
//! - the wreath product G(r,n) = (Z/rZ)^n ⋊ S_n, its polynomial action, group
//!   algebra, and Young symmetrizers ([`group`]);
//! - higher Specht polynomials and the graded verification of their basis
//!   properties ([`specht`]);
//! - type-B root systems, Dunkl-Opdam operators, the commuting integrals of
//!   the rational Olshanetsky-Perelomov system ([`roots`], [`dunkl`],
//!   [`semidirect`]);
//! - the invariant chart y_j = Σ_i x_i^{2j} with its localized derivations
//!   ([`chart`]);
//! - group-algebra idempotents and the degree-graded decomposition of the
//!   polynomial ring into simple modules over the invariant differential
//!   operators ([`decomp`]).
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod chart;
pub mod decomp;
pub mod dunkl;
pub mod error;
pub mod group;
pub mod linalg;
pub mod localized;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod roots;
pub mod sampling;
pub mod scalar;
pub mod semidirect;
pub mod specht;
pub mod tableaux;

pub use error::{Error, Result};
