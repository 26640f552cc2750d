//! Codimension-one decompositions of homogeneous forms.
//!
//! A degree-d form in n+1 variables is written as a sum of forms that each
//! depend on only n linear combinations of the variables. Apolarity turns
//! such a decomposition into a totally decomposable operator `L_1 ... L_s`
//! annihilating the form, so everything reduces to exact linear algebra on
//! catalecticant matrices and to the geometry of the Chow variety of
//! zero-cycles `Delta_{n,s}`.
//!
//! Modules:
//! - [`exactalg`]: prime fields, rationals, rank / kernel / solve.
//! - [`polyring`]: dense forms in S and T and the differentiation action.
//! - [`apolar`]: catalecticants, perp spaces, inverse systems, point ideals.
//! - [`formulas`]: closed-form invariants as exact big integers.
//! - [`chowlab`]: randomized verification oracles for the geometry.
//! - [`decomp`]: synthesis, reconstruction, Sylvester, VSH point counts.
//! - [`serial`]: JSON records shared with the command line tool.

pub mod apolar;
pub mod chowlab;
pub mod decomp;
pub mod error;
pub mod exactalg;
pub mod formulas;
pub mod polyring;
pub mod rng;
pub mod serial;

pub use error::{Error, Result};
