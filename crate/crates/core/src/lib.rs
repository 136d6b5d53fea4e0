//! Exact computations with basic finite-dimensional algebras: radicals,
//! Nakayama permutations, complexes of projectives up to homotopy, and
//! tilting complexes with their endomorphism algebras.

pub mod algebra;
pub mod cli;
pub mod homotopy;
pub mod k0;
mod error;
pub mod io;
pub mod perm;
pub mod tilting;

pub use algebra::{Algebra, Decision, FrobeniusForm, FrobeniusSearch, Locality, NakayamaFunctor, RawAlgebra};
pub use error::{Error, Result};
pub use exactla::{Field, IntMatrix, Matrix, Scalar};
pub use perm::Permutation;
