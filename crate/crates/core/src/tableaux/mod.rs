//! Partitions, tableaux, permutations and Garnir data.

mod garnir;
mod partition;
mod perm;
mod tableau;

pub use garnir::{belt_values, garnir_composition, garnir_coset, garnir_tableau, subsets};
pub use partition::{partitions_of, Composition, Node, Partition};
pub use perm::Permutation;
pub use tableau::{column_superstandard, james_murphy_tableau, standard_tableaux, superstandard, Tableau};

/// `sigma_{i,j} = s_i s_{i+1} ... s_{j-1}` in `S_n`.
pub fn sigma(i: usize, j: usize, n: usize) -> Permutation {
    Permutation::sigma(i, j, n)
}

/// The transposition `(i, m)` in `S_n`.
pub fn transposition(i: usize, m: usize, n: usize) -> Permutation {
    Permutation::transposition(i, m, n)
}
