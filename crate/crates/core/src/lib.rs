//! Exact computer algebra for finite-dimensional irreducible representations
//! of hyper loop algebras over non-algebraically-closed fields of
//! characteristic zero.
//!
//! All spectral data lives in a declared Galois number field `L/Q` with an
//! explicit automorphism group `G`; a subgroup `H` fixes the base field
//! `K = L^H`. Irreducible modules over `K` are indexed by `H`-orbits of
//! dominant ℓ-weights (Drinfeld polynomials in factored form).

pub mod error;
pub mod exact;
pub mod galois;
pub mod json;
pub mod kxmod;
pub mod lweight;
pub mod repclass;
pub mod rootsystem;
pub mod series;
pub mod specchar;

pub use error::{Error, Result};
