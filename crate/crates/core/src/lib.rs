//! Exact rational machinery for the two algebraic parametrizations of
//! rational perfect cuboids.

pub mod coeffs;
pub mod cubic;
pub mod error;
pub mod numerics;
pub mod parametrize;
pub mod polyalg;
pub mod search;
mod tables;

pub use error::{Error, Result};
pub use numerics::Rat;
