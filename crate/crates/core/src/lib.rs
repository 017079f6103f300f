//! Exact q-weighted enumeration of lozenge tilings of quartered hexagons with
//! dents.
//!
//! The tiling generating function is computed three independent ways:
//! brute-force enumeration of non-intersecting lattice-path families
//! ([`oracle`]), the Lindström–Gessel–Viennot determinant ([`lgv`]) and a
//! closed product formula ([`identity`]). The [`identity`] module also checks
//! the determinant identities behind the product formula (Dodgson
//! condensation, the minor decompositions and Krattenthaler's lemma) by exact
//! polynomial arithmetic.

pub mod error;
pub mod exact;
pub mod identity;
pub mod lgv;
pub mod mvpoly;
pub mod oracle;
pub mod paths;
pub mod qseries;
pub mod render;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{BigRational, LaurentPoly, RationalFn};
