//! Specialization at a primitive `e`-th root of unity: the branching
//! filtration of `res S^lambda`, submodules generated by seminormal
//! vectors, and ranks of Gram matrices.

mod filtration;
mod radical;
mod submodule;

pub use filtration::{branching_filtration, BranchingFiltration};
pub use radical::radical_rank;
pub use submodule::{
    hypothesis_checks, verify_submodule_fn, verify_submodule_tleq, HypothesisCheck, SubmoduleReport, Verdict,
};
