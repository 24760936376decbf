//! Exact generalized Vandermonde and Schur polynomials in three variables over
//! finite fields and the rationals, with the factorization, irreducibility and
//! Newton power-sum machinery built on top of them.

pub mod arith;
pub mod error;
pub mod factor;
pub mod ff;
pub mod field;
pub mod mpoly;
pub mod newton;
pub mod schur;

pub use error::{Error, Result};
pub use ff::{make_field, FFElement, FieldSpec, GaloisField};
pub use field::{Field, Rationals};
pub use mpoly::{Homogeneity, LinearForm, Monomial, MultiPoly, Multiplicity, Var};
