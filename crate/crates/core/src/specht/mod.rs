//! Specht modules in the Murphy basis `e_t = x_lambda T_{d(t)}`.

mod action;
mod form;
mod module;
mod straighten;
mod vector;

pub use action::{act_gen_raw, act_hecke_raw, act_word_raw, gen_on_tableau};
pub use form::{bilinear_form, gram_matrix, invariant_gram_matrix, oracle_gram_matrix, GramMatrix};
pub use module::{max_dim, SparseMatrix, SpechtModule};
pub use straighten::{garnir_step, Straightener};
pub use vector::SpechtVector;
