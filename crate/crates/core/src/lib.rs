//! Exact arithmetic for the split sextonions and octonions, their Jordan
//! algebras, the expanded Freudenthal magic chart, and the dimension formulas
//! attached to it, checked against an independent root-system engine.

pub mod compalg;
pub mod dimform;
pub mod error;
pub mod exactnum;
pub mod intermediate;
pub mod jordan;
pub mod rootsys;
pub mod sample;
pub mod serial;

pub use error::{Error, Result};
pub use exactnum::Rational;
