//! The symmetric bilinear form on `S^lambda`.

use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, MurphyOracle};
use crate::linalg::{self, Matrix};
use crate::qcoeff::{RationalFunction, Scalar};
use crate::seminormal::{base_change, Method};
use crate::tableaux::{standard_tableaux, superstandard, Partition, Tableau};

use super::{SpechtModule, SpechtVector};

#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub shape: Partition,
    pub order: Vec<Tableau>,
    pub entries: Matrix,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn determinant(&self) -> RationalFunction {
        linalg::determinant(&self.entries)
    }

    /// `<u, v>` for vectors in the standard basis.
    pub fn form<C: Scalar>(&self, u: &SpechtVector<C>, v: &SpechtVector<C>) -> Result<RationalFunction> {
        for x in [u.shape(), v.shape()] {
            if x != &self.shape {
                return Err(Error::ShapeMismatch(x.to_string(), self.shape.to_string()));
            }
        }
        let module = SpechtModule::shared(&self.shape)?;
        let a: Vec<RationalFunction> = module.to_dense(u)?.iter().map(Scalar::to_rational).collect();
        let b: Vec<RationalFunction> = module.to_dense(v)?.iter().map(Scalar::to_rational).collect();
        Ok(linalg::dot(&linalg::row_times(&a, &self.entries), &b))
    }
}

/// Gram matrix computed in seminormal coordinates.
pub fn gram_matrix(shape: &Partition) -> Result<GramMatrix> {
    let bc = base_change(shape, Method::Fast)?;
    Ok(GramMatrix { shape: shape.clone(), entries: bc.gram(), order: bc.order })
}

/// Gram matrix from the definition, through the Murphy basis of `H_n`.
pub fn oracle_gram_matrix(shape: &Partition, oracle: &MurphyOracle) -> Result<GramMatrix> {
    if oracle.n() != shape.n() {
        return Err(Error::SizeMismatch(oracle.n(), shape.n()));
    }
    let order = standard_tableaux(shape);
    let d = order.len();
    let mut entries = vec![vec![RationalFunction::zero(); d]; d];
    for i in 0..d {
        for j in i..d {
            let x = RationalFunction::from_laurent(oracle.form(&order[i], &order[j]));
            entries[j][i] = x.clone();
            entries[i][j] = x;
        }
    }
    Ok(GramMatrix { shape: shape.clone(), order, entries })
}

/// Gram matrix from the definition inside `S^lambda`: `<e_lambda, v>` is
/// the coefficient of `e_lambda` in `v x_lambda`, and
/// `<e_lambda T_w, v> = <e_lambda, v T_{w^-1}>`.
pub fn invariant_gram_matrix(shape: &Partition) -> Result<GramMatrix> {
    let module = SpechtModule::shared(shape)?;
    let order = module.basis().to_vec();
    let top = superstandard(shape);
    let x = HeckeElement::<RationalFunction>::row_symmetrizer(shape);
    let d = order.len();
    let mut entries = vec![vec![RationalFunction::zero(); d]; d];
    for (j, t) in order.iter().enumerate() {
        let w = t.d().inverse();
        for (i, s) in order.iter().enumerate().skip(j) {
            let v = module.act_word(&SpechtVector::<RationalFunction>::basis(s), &w)?;
            let c = module.act_hecke(&v, &x)?.coeff(&top);
            entries[i][j] = c.clone();
            entries[j][i] = c;
        }
    }
    Ok(GramMatrix { shape: shape.clone(), order, entries })
}

/// `<u, v>` through the seminormal Gram matrix.
pub fn bilinear_form<C: Scalar>(u: &SpechtVector<C>, v: &SpechtVector<C>) -> Result<RationalFunction> {
    gram_matrix(u.shape())?.form(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::{quantum_factorial, quantum_int};

    #[test]
    fn two_one_matches_oracle() {
        let shape: Partition = "2,1".parse().unwrap();
        let oracle = MurphyOracle::new(3).unwrap();
        let a = oracle_gram_matrix(&shape, &oracle).unwrap();
        let b = gram_matrix(&shape).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.entries[0][0], quantum_int(2));
    }

    #[test]
    fn invariance_matches_oracle() {
        let oracle = MurphyOracle::new(4).unwrap();
        for shape in crate::tableaux::partitions_of(4) {
            let a = oracle_gram_matrix(&shape, &oracle).unwrap();
            assert_eq!(invariant_gram_matrix(&shape).unwrap(), a, "{shape}");
        }
    }

    #[test]
    fn single_row() {
        let g = gram_matrix(&"4".parse().unwrap()).unwrap();
        assert_eq!(g.entries, vec![vec![quantum_factorial(4)]]);
    }
}
