//! Exact computer algebra for Nijenhuis operators on finite-dimensional Lie
//! algebras.
//!
//! Everything is generic over an exact [`Scalar`] field. The aliases at the
//! crate root fix the field to arbitrary-precision rationals, which is what
//! the fixtures, the JSON layer and the command-line tool use.

#![allow(clippy::needless_range_loop)]

pub mod bialgebra;
pub mod combinat;
pub mod cone;
pub mod deformation;
pub mod error;
pub mod fixtures;
pub mod homotopy;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod multilinear;
pub mod nijenhuis;
pub mod nslie;
pub mod report;
pub mod samples;
pub mod scalar;

pub use error::{Error, Result};
pub use report::{Report, Witness};
pub use scalar::Scalar;

pub type Rational = num::BigRational;
pub type Matrix = linalg::Matrix<Rational>;
pub type LieAlgebra = lie::LieAlgebra<Rational>;
pub type Representation = lie::Representation<Rational>;
pub type NijenhuisRep = lie::NijenhuisRep<Rational>;
pub type AltMap = multilinear::AltMap<Rational>;
pub type CochainComplexReport = multilinear::CochainComplexReport<Rational>;
