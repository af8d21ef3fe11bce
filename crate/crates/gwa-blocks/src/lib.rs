//! Finite blocks of BGG category O over triangular generalized Weyl algebras,
//! materialized as explicit combinatorial and linear-algebraic objects.
//!
//! The crate is organized in layers:
//!
//! - [`cartan`] ingests concrete Cartan data `(H, theta, z0, z1)` over exact
//!   rationals, computes the `z'_n` / `z~_n` element sequences, discovers
//!   blocks, and reports Verma composition series.
//! - [`blockcalc`] evaluates the closed formulas for composition
//!   multiplicities, Hom/Ext dimensions, Hilbert matrices, Koszulity, BGG
//!   reciprocity, and the strong Kazhdan-Lusztig parity condition, all
//!   parameterized by the block size `n` alone.
//! - [`quiver`] realizes the block algebra as the path algebra of the doubled
//!   A_n quiver with relations, and as the graded phi-basis of the big
//!   endomorphism algebra, with exact composition.
//! - [`repcat`] is the brute-force oracle: explicit quiver representations of
//!   every standard block object, Hom spaces by linear solving, Ext by minimal
//!   projective resolutions, submodule enumeration over finite fields, and the
//!   transfer map to integer sequences.
//! - [`styt`] is the combinatorial category of sub-triangular Young tableaux:
//!   construction from transfer sequences, maps, extensions, duality by
//!   transposition, and text rendering.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod blockcalc;
pub mod cartan;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod repcat;
pub mod styt;

pub use num::BigRational as Rat;
