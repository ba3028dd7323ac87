//! The action of `T_i` on vectors indexed by row-standard tableaux, without
//! straightening.

use super::vector::SpechtVector;
use crate::hecke::HeckeElement;
use crate::qcoeff::{LaurentPoly, Scalar};
use crate::tableaux::{Permutation, Tableau};

/// Image of `e_u T_i` for row-standard `u`: at most two terms.
pub fn gen_on_tableau(u: &Tableau, i: usize) -> Vec<(Tableau, LaurentPoly)> {
    let rows = u.row_of_values();
    let (ri, rj) = (rows[i - 1], rows[i]);
    match ri.cmp(&rj) {
        std::cmp::Ordering::Less => vec![(u.swap_values(i), LaurentPoly::one())],
        std::cmp::Ordering::Equal => vec![(u.clone(), LaurentPoly::q_power(1))],
        std::cmp::Ordering::Greater => vec![
            (u.swap_values(i), LaurentPoly::q_power(1)),
            (u.clone(), LaurentPoly::from_i64s(0, &[-1, 1])),
        ],
    }
}

/// `v T_i` on row-standard indices.
pub fn act_gen_raw<C: Scalar>(v: &SpechtVector<C>, i: usize) -> SpechtVector<C> {
    let mut out = SpechtVector::zero(v.shape());
    for (u, c) in v.iter() {
        for (w, x) in gen_on_tableau(u, i) {
            let coeff = if x.is_one() { c.clone() } else { c.times(&C::from_laurent(x)) };
            out.add_term(w, coeff);
        }
    }
    out
}

/// `v T_w` along a reduced word, on row-standard indices.
pub fn act_word_raw<C: Scalar>(v: &SpechtVector<C>, w: &Permutation) -> SpechtVector<C> {
    w.reduced_word().into_iter().fold(v.clone(), |acc, i| act_gen_raw(&acc, i))
}

/// `v h` on row-standard indices; `h` may live in a smaller algebra `H_m`.
pub fn act_hecke_raw<C: Scalar>(v: &SpechtVector<C>, h: &HeckeElement<C>) -> SpechtVector<C> {
    let mut out = SpechtVector::zero(v.shape());
    for (w, c) in h.iter() {
        let part = w.reduced_word().into_iter().fold(v.clone(), |acc, i| act_gen_raw(&acc, i));
        out.add_scaled(&part, c);
    }
    out
}
