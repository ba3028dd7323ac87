//! Raw expansions that also count formal `e`-terms, before any like terms
//! are collected or cancelled.

use std::collections::HashMap;

use crate::hecke::HeckeElement;
use crate::qcoeff::{RationalFunction, Scalar};
use crate::specht::{gen_on_tableau, SpechtVector};
use crate::tableaux::{Partition, Permutation, Tableau};

#[derive(Clone, Debug)]
pub(crate) struct Tracked {
    pub vector: SpechtVector<RationalFunction>,
    /// Number of formal terms carrying each index.
    pub mult: HashMap<Tableau, u128>,
}

impl Tracked {
    pub fn basis(t: &Tableau) -> Self {
        Self { vector: SpechtVector::basis(t), mult: HashMap::from([(t.clone(), 1)]) }
    }

    pub fn zero(shape: &Partition) -> Self {
        Self { vector: SpechtVector::zero(shape), mult: HashMap::new() }
    }

    pub fn total(&self) -> u128 {
        self.mult.values().sum()
    }

    pub fn all_standard(&self) -> bool {
        self.mult.keys().all(Tableau::is_standard)
    }

    pub fn act_gen(&self, i: usize) -> Self {
        let mut vector = SpechtVector::zero(self.vector.shape());
        for (u, c) in self.vector.iter() {
            for (w, x) in gen_on_tableau(u, i) {
                vector.add_term(w, c.times(&RationalFunction::from_laurent(x)));
            }
        }
        let mut mult = HashMap::new();
        for (u, m) in &self.mult {
            for (w, _) in gen_on_tableau(u, i) {
                *mult.entry(w).or_insert(0) += m;
            }
        }
        Self { vector, mult }
    }

    pub fn act_word(&self, w: &Permutation) -> Self {
        w.reduced_word().into_iter().fold(self.clone(), |acc, i| acc.act_gen(i))
    }

    pub fn act_hecke(&self, h: &HeckeElement<RationalFunction>) -> Self {
        let mut out = Self::zero(self.vector.shape());
        for (w, c) in h.terms() {
            out.add_scaled(&self.act_word(w), c);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &RationalFunction) {
        self.vector.add_scaled(&other.vector, c);
        for (u, m) in &other.mult {
            *self.mult.entry(u.clone()).or_insert(0) += m;
        }
    }
}
