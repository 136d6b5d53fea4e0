//! Exact linear algebra over the rationals and finite fields.

mod charpoly;
mod error;
mod field;
mod intmat;
mod matrix;
mod poly;
mod subspace;

pub use charpoly::{char_poly, char_poly_int};
pub use error::LinalgError;
pub use field::{is_prime, Field, GaloisField, Scalar};
pub use intmat::{IntMatrix, SmithForm};
pub use matrix::{axpy, linear_combination, solve_linear, AffineSolution, Matrix};
pub use poly::{IntPoly, Poly};
pub use subspace::Subspace;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
