//! Exact arithmetic: rationals, polynomials over Q, number fields, matrices
//! and integer Smith normal forms.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod smith;

pub use field::{FieldElem, FieldOps, NumberField, RationalField};
pub use matrix::{Matrix, MatrixL, MatrixQ};
pub use poly::PolyQ;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use smith::{smith_normal_form, SmithForm};
