//! Murphy's standard basis `{x_st}` of the Hecke algebra for small `n`.
//!
//! Coordinates are found by reducing on the longest `T_w` term against an
//! echelon form of the basis, built once per rank.

use std::collections::HashMap;

use super::element::{row_stabilizer, HeckeElement};
use crate::error::{Error, Result};
use crate::qcoeff::{LaurentPoly, RationalFunction, Scalar};
use crate::tableaux::{partitions_of, standard_tableaux, superstandard, Partition, Permutation, Tableau};

/// Largest rank for which the oracle may be built.
pub const MAX_ORACLE_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MurphyLabel {
    pub shape: Partition,
    pub s: Tableau,
    pub t: Tableau,
}

struct EchelonRow {
    vector: HeckeElement<RationalFunction>,
    /// `vector` as a combination of Murphy basis elements.
    combo: HashMap<usize, RationalFunction>,
}

pub struct MurphyOracle {
    n: usize,
    labels: Vec<MurphyLabel>,
    elements: Vec<HeckeElement<LaurentPoly>>,
    echelon: HashMap<Permutation, EchelonRow>,
}

/// `x_st = T_{d(s)^-1} x_lambda T_{d(t)}`.
pub fn murphy_element(s: &Tableau, t: &Tableau) -> HeckeElement<LaurentPoly> {
    let shape = s.shape();
    let n = shape.n();
    let ds_inv = s.d().inverse();
    let mut left = HeckeElement::zero(n);
    for w in row_stabilizer(shape) {
        let v = ds_inv.compose(&w);
        debug_assert_eq!(v.length(), ds_inv.length() + w.length());
        left.add_term(v, LaurentPoly::one());
    }
    left.mul_basis_right(&t.d())
}

fn leading<C: Scalar>(h: &HeckeElement<C>) -> Option<(Permutation, C)> {
    h.iter()
        .max_by(|a, b| (a.0.length(), a.0).cmp(&(b.0.length(), b.0)))
        .map(|(w, c)| (w.clone(), c.clone()))
}

fn add_combo(acc: &mut HashMap<usize, RationalFunction>, other: &HashMap<usize, RationalFunction>, c: &RationalFunction) {
    for (&k, v) in other {
        let s = acc.get(&k).cloned().unwrap_or_else(RationalFunction::zero).plus(&v.times(c));
        if s.is_zero() {
            acc.remove(&k);
        } else {
            acc.insert(k, s);
        }
    }
}

impl MurphyOracle {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORACLE_N {
            return Err(Error::DimensionLimit { dim: n, limit: MAX_ORACLE_N });
        }
        let mut labels = Vec::new();
        let mut elements = Vec::new();
        for shape in partitions_of(n) {
            let tabs = standard_tableaux(&shape);
            for s in &tabs {
                for t in &tabs {
                    elements.push(murphy_element(s, t));
                    labels.push(MurphyLabel { shape: shape.clone(), s: s.clone(), t: t.clone() });
                }
            }
        }
        let mut echelon: HashMap<Permutation, EchelonRow> = HashMap::new();
        for (idx, x) in elements.iter().enumerate() {
            let mut vector = x.map_coeffs(|c| RationalFunction::from_laurent(c.clone()));
            let mut combo = HashMap::from([(idx, RationalFunction::one())]);
            loop {
                let (w, c) = leading(&vector).expect("Murphy elements are linearly independent");
                match echelon.get(&w) {
                    Some(row) => {
                        vector = vector.sub(&row.vector.scale(&c));
                        add_combo(&mut combo, &row.combo, &c.negated());
                    }
                    None => {
                        let inv = c.inverse()?;
                        let vector = vector.scale(&inv);
                        let combo = combo.into_iter().map(|(k, v)| (k, v.times(&inv))).collect();
                        echelon.insert(w, EchelonRow { vector, combo });
                        break;
                    }
                }
            }
        }
        Ok(Self { n, labels, elements, echelon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[MurphyLabel] {
        &self.labels
    }

    pub fn element(&self, label: usize) -> &HeckeElement<LaurentPoly> {
        &self.elements[label]
    }

    /// Coefficients of `h` in the Murphy basis, keyed by label index.
    pub fn expand<C: Scalar>(&self, h: &HeckeElement<C>) -> HashMap<usize, RationalFunction> {
        assert_eq!(h.n(), self.n, "rank mismatch");
        let mut rest = h.map_coeffs(Scalar::to_rational);
        let mut out = HashMap::new();
        while let Some((w, c)) = leading(&rest) {
            let row = &self.echelon[&w];
            rest = rest.sub(&row.vector.scale(&c));
            add_combo(&mut out, &row.combo, &c);
        }
        out
    }

    /// Rebuilds an element from Murphy coefficients.
    pub fn assemble(&self, coeffs: &HashMap<usize, RationalFunction>) -> HeckeElement<RationalFunction> {
        let mut out = HeckeElement::zero(self.n);
        for (&label, c) in coeffs {
            out = out.add(&self.elements[label].map_coeffs(Scalar::to_rational).scale(c));
        }
        out
    }

    /// Reduces `h` in `x_lambda H` modulo the ideal spanned by more dominant
    /// shapes; returns the coefficients of `e_t` for standard `t`.
    ///
    /// Panics if `h` has a component on a shape that is neither `lambda`
    /// nor strictly more dominant, or a `lambda` component whose first index
    /// is not `t^lambda`.
    pub fn reduce_to_specht(&self, shape: &Partition, h: &HeckeElement<LaurentPoly>) -> Vec<(Tableau, LaurentPoly)> {
        let top = superstandard(shape);
        let mut out = Vec::new();
        for (label, c) in self.expand(h) {
            let l = &self.labels[label];
            if &l.shape == shape {
                assert_eq!(l.s, top, "component outside x_lambda H");
                let c = c.to_laurent().expect("Specht coefficients are Laurent polynomials");
                out.push((l.t.clone(), c));
            } else {
                assert!(
                    shape.dominance_leq(&l.shape).expect("same size"),
                    "component on shape {} which does not dominate {shape}",
                    l.shape
                );
            }
        }
        out.sort_by(|a, b| b.0.total_cmp(&a.0));
        out
    }

    /// `e_t T_i` computed in the algebra.
    pub fn specht_action(&self, t: &Tableau, i: usize) -> Vec<(Tableau, LaurentPoly)> {
        let x = murphy_element(&superstandard(t.shape()), t).mul_gen_right(i);
        self.reduce_to_specht(t.shape(), &x)
    }

    /// `<e_s, e_t>`: coefficient of `x_lambda` in `x_lambda T_{d(s)} T_{d(t)^-1} x_lambda`.
    pub fn form(&self, s: &Tableau, t: &Tableau) -> LaurentPoly {
        let shape = s.shape();
        let x = HeckeElement::<LaurentPoly>::zero(self.n);
        let mut xl = x.clone();
        for w in row_stabilizer(shape) {
            xl.add_term(w, LaurentPoly::one());
        }
        let left = xl.mul_basis_right(&s.d()).mul_basis_right(&t.d().inverse());
        let prod = left.mul(&xl).expect("same rank");
        let top = superstandard(shape);
        let target = MurphyLabel { shape: shape.clone(), s: top.clone(), t: top };
        let coeffs = self.expand(&prod);
        self.labels
            .iter()
            .position(|l| *l == target)
            .and_then(|idx| coeffs.get(&idx).cloned())
            .map(|c| c.to_laurent().expect("form values are Laurent polynomials"))
            .unwrap_or_else(LaurentPoly::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::quantum_factorial;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rank_two() {
        let o = MurphyOracle::new(2).unwrap();
        assert_eq!(o.labels().len(), 2);
        let x2 = o.element(0);
        assert_eq!(x2.len(), 2);
        let x11 = o.element(1);
        assert_eq!(x11, &HeckeElement::identity(2));
    }

    #[test]
    fn expansion_round_trips() {
        let o = MurphyOracle::new(4).unwrap();
        assert_eq!(o.labels().len(), 24);
        let h = HeckeElement::<LaurentPoly>::t_range(1, 4, 4).add(&HeckeElement::generator(2, 4));
        let coeffs = o.expand(&h);
        assert_eq!(o.assemble(&coeffs), h.map_coeffs(Scalar::to_rational));
    }

    #[test]
    fn norm_of_top_vector() {
        let o = MurphyOracle::new(4).unwrap();
        let lam = p("2,2");
        let top = superstandard(&lam);
        let expected = quantum_factorial(2).times(&quantum_factorial(2));
        assert_eq!(o.form(&top, &top), expected.to_laurent().unwrap());
    }

    #[test]
    fn refuses_large_rank() {
        assert!(MurphyOracle::new(6).is_err());
    }
}
