//! Exact computations with finite-dimensional representations of the
//! quantum loop algebra of sl2 over the rationals.

pub mod dpoly;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod qnum;
pub mod repcore;
pub mod scalar;
pub mod selfext;
pub mod series;
pub mod sl2eval;
pub mod weylalg;

pub use error::{Error, Result};
