//! Ninth-variation skew Schur and Q-functions, their determinant and Pfaffian
//! expansions over outside decompositions, and the lattice-path model behind
//! them.

pub mod cli;
pub mod corollaries;
pub mod error;
pub mod identities;
pub mod lgv;
pub mod shapes;
pub mod strips;
pub mod tableaux;
pub mod weights;

pub use error::{Error, Result};
