//! t-interpolated finite multiple zeta values: the index space, the word
//! algebra, evaluation modulo primes and an identity checker.

pub mod arith;
pub mod combo;
pub mod error;
pub mod fp;
pub mod index;
pub mod suite;
pub mod tpoly;
pub mod word;

pub use error::{Error, Result};
