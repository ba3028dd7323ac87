//! Rewriting `e_u` for row-standard `u` in the standard basis.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::qcoeff::LaurentPoly;
use crate::tableaux::{belt_values, subsets, Node, Tableau};

/// Flat index of a node in row-major order.
fn slot(t: &Tableau, node: Node) -> usize {
    t.shape().parts()[..node.row - 1].iter().sum::<usize>() + node.col - 1
}

/// One Garnir step at the first column descent of `u`: the terms `(v, c)`
/// with `e_u = sum c e_v`, every `v` row-standard and later than `u` in the
/// rewriting order. Returns `None` when `u` is already standard.
pub fn garnir_step(u: &Tableau) -> Option<Vec<(Tableau, LaurentPoly)>> {
    let descent = u.first_column_descent()?;
    let (top, bottom) = belt_values(u, descent);
    let mut belt: Vec<usize> = top.iter().chain(bottom.iter()).copied().collect();
    belt.sort_unstable();
    let top_slots: Vec<usize> =
        (descent.col..=u.shape().row_len(descent.row)).map(|c| slot(u, Node::new(descent.row, c))).collect();
    let bottom_slots: Vec<usize> = (1..=descent.col).map(|c| slot(u, Node::new(descent.row + 1, c))).collect();

    let mut out = Vec::new();
    for subset in subsets(&belt, top.len()) {
        if subset == top {
            continue;
        }
        let rest = belt.iter().copied().filter(|x| subset.binary_search(x).is_err());
        let mut entries = u.raw().to_vec();
        for (&s, &v) in top_slots.iter().zip(subset.iter()) {
            entries[s] = v as u8;
        }
        for (&s, v) in bottom_slots.iter().zip(rest) {
            entries[s] = v as u8;
        }
        let h = Tableau::from_raw(u.shape().clone(), entries);
        let (sorted, inv) = h.row_sorted();
        out.push((sorted, -LaurentPoly::q_power(inv as i32)));
    }
    Some(out)
}

type Expansion = Arc<Vec<(Tableau, LaurentPoly)>>;

/// Memoised straightening for one shape.
#[derive(Default)]
pub struct Straightener {
    memo: RwLock<HashMap<Tableau, Expansion>>,
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// `e_u` as a combination of `e_t` with `t` standard.
    pub fn straighten(&self, u: &Tableau) -> Result<Expansion> {
        if let Some(v) = u.standardness_violation() {
            if !u.is_row_standard() {
                return Err(Error::InvalidTableau(format!("{u} is not row-standard: {v}")));
            }
        }
        Ok(self.go(u))
    }

    fn go(&self, u: &Tableau) -> Expansion {
        if let Some(hit) = self.memo.read().expect("memo lock").get(u) {
            return hit.clone();
        }
        let result: Expansion = match garnir_step(u) {
            None => Arc::new(vec![(u.clone(), LaurentPoly::one())]),
            Some(terms) => {
                let mut acc: HashMap<Tableau, LaurentPoly> = HashMap::new();
                for (v, c) in terms {
                    for (t, x) in self.go(&v).iter() {
                        let entry = acc.entry(t.clone()).or_insert_with(LaurentPoly::zero);
                        *entry = &*entry + &(&c * x);
                    }
                }
                let mut out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                out.sort_by(|a, b| b.0.total_cmp(&a.0));
                Arc::new(out)
            }
        };
        self.memo.write().expect("memo lock").insert(u.clone(), result.clone());
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn column_of_two() {
        let s = Straightener::new();
        let e = s.straighten(&t("2/1")).unwrap();
        assert_eq!(*e, vec![(t("1/2"), -LaurentPoly::one())]);
    }

    #[test]
    fn standard_is_fixed() {
        let s = Straightener::new();
        let e = s.straighten(&t("1,3/2")).unwrap();
        assert_eq!(*e, vec![(t("1,3/2"), LaurentPoly::one())]);
    }

    #[test]
    fn rejects_unsorted_rows() {
        assert!(Straightener::new().straighten(&t("2,1/3")).is_err());
    }
}
