//! Young's seminormal basis of Specht modules for the type A Iwahori-Hecke
//! algebra, computed in exact arithmetic.

pub mod bench;
pub mod error;
pub mod hecke;
pub mod json;
pub mod linalg;
pub mod modular;
pub mod qcoeff;
pub mod seminormal;
pub mod specht;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
