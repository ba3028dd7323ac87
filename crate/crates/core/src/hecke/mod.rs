//! The Hecke algebra `H_n` in the `T_w` basis, its distinguished elements,
//! and a small-rank Murphy basis oracle.

mod element;
mod oracle;

pub use element::{jucys_murphy, row_ends, row_stabilizer, row_sum_r, HeckeElement};
pub use oracle::{murphy_element, MurphyLabel, MurphyOracle, MAX_ORACLE_N};
