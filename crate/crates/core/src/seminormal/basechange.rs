//! The matrix `M` with `f = M e`, its inverse, and the norms `gamma_t`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hecke::{MurphyOracle, MAX_ORACLE_N};
use crate::linalg::{self, Matrix};
use crate::qcoeff::RationalFunction;
use crate::specht::{invariant_gram_matrix, oracle_gram_matrix, SpechtModule, SpechtVector};
use crate::tableaux::{Partition, Tableau};

use super::action::gamma_recursion;
use super::fast::general_ft;
use super::projector::f_via_projector;
use super::stepwise::f_via_stepwise;
use super::SeminormalVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Projector,
    GramSchmidt,
    Stepwise,
    Fast,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Projector, Method::GramSchmidt, Method::Stepwise, Method::Fast];

    pub fn name(self) -> &'static str {
        match self {
            Method::Projector => "projector",
            Method::GramSchmidt => "gram-schmidt",
            Method::Stepwise => "stepwise",
            Method::Fast => "fast",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method `{s}`; expected projector, gram-schmidt, stepwise or fast")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BaseChange {
    pub shape: Partition,
    pub order: Vec<Tableau>,
    /// Row `k` holds the coordinates of `f_{order[k]}`.
    pub m: Matrix,
    pub minv: Matrix,
    pub gammas: Vec<RationalFunction>,
}

impl BaseChange {
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn f(&self, k: usize) -> SeminormalVector {
        let v = SpechtVector::from_terms(&self.shape, self.order.iter().cloned().zip(self.m[k].iter().cloned()));
        SeminormalVector::new(self.order[k].clone(), v).expect("rows of M are unitriangular")
    }

    /// The form in the standard basis: `Minv diag(gamma) Minv^T`.
    pub fn gram(&self) -> Matrix {
        let scaled: Matrix = self
            .minv
            .iter()
            .map(|row| row.iter().zip(&self.gammas).map(|(x, g)| x * g).collect())
            .collect();
        linalg::mul(&scaled, &linalg::transpose(&self.minv))
    }
}

/// `f_t` by one of the four constructions.
pub fn f_via(t: &Tableau, method: Method) -> Result<SeminormalVector> {
    match method {
        Method::Projector => f_via_projector(t),
        Method::Stepwise => Ok(f_via_stepwise(t)?.f),
        Method::Fast => Ok(general_ft(t)?.f),
        Method::GramSchmidt => {
            let bc = base_change(t.shape(), Method::GramSchmidt)?;
            let k = bc.order.iter().position(|s| s == t).ok_or_else(|| Error::InvalidTableau(format!("{t} is not standard")))?;
            Ok(bc.f(k))
        }
    }
}

fn assemble(shape: &Partition, rows: Vec<SeminormalVector>) -> Result<BaseChange> {
    let module = SpechtModule::shared(shape)?;
    let order = module.basis().to_vec();
    let m: Matrix = rows.iter().map(|f| module.to_dense(f.vector())).collect::<Result<_>>()?;
    let minv = linalg::lower_unitriangular_inverse(&m);
    let gammas = gamma_recursion(shape)?.into_iter().map(|(_, g)| g).collect();
    Ok(BaseChange { shape: shape.clone(), order, m, minv, gammas })
}

pub fn base_change(shape: &Partition, method: Method) -> Result<BaseChange> {
    if method == Method::GramSchmidt {
        let form = if shape.n() <= MAX_ORACLE_N {
            let oracle = MurphyOracle::new(shape.n())?;
            oracle_gram_matrix(shape, &oracle)?.entries
        } else {
            invariant_gram_matrix(shape)?.entries
        };
        return f_via_gram_schmidt(shape, &form);
    }
    let module = SpechtModule::shared(shape)?;
    let rows: Vec<SeminormalVector> =
        module.basis().par_iter().map(|t| f_via(t, method)).collect::<Result<_>>()?;
    assemble(shape, rows)
}

/// Weak Gram-Schmidt against the form `g` given in the standard basis:
/// `f_t = e_t - sum_{s before t} (<f_s, e_t> / <f_s, f_s>) f_s`.
pub fn f_via_gram_schmidt(shape: &Partition, g: &Matrix) -> Result<BaseChange> {
    let module = SpechtModule::shared(shape)?;
    let order = module.basis().to_vec();
    let d = order.len();
    if g.len() != d {
        return Err(Error::SizeMismatch(g.len(), d));
    }
    let mut m: Matrix = Vec::with_capacity(d);
    let mut mg: Matrix = Vec::with_capacity(d);
    let mut gammas: Vec<RationalFunction> = Vec::with_capacity(d);
    for k in 0..d {
        let mut row = vec![RationalFunction::zero(); d];
        row[k] = RationalFunction::one();
        for j in 0..k {
            let c = mg[j][k].checked_div(&gammas[j])?;
            if c.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&m[j]) {
                if !y.is_zero() {
                    *x = &*x - &(&c * y);
                }
            }
        }
        let rg = linalg::row_times(&row, g);
        let gamma = linalg::dot(&rg, &row);
        if gamma.is_zero() {
            return Err(Error::Inconsistent(format!("f[{}] has zero norm", order[k])));
        }
        m.push(row);
        mg.push(rg);
        gammas.push(gamma);
    }
    let minv = linalg::lower_unitriangular_inverse(&m);
    Ok(BaseChange { shape: shape.clone(), order, m, minv, gammas })
}
