//! Exact scalar fields and dense linear algebra over them.

mod field;
mod matrix;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME, RATIONAL_SAMPLE_BOUND};
pub use matrix::{dot, row_echelon, row_space_basis, EchelonSpan, Matrix};
