//! `f_t = e_t E_t`, with `E_t` a product of Lagrange-type idempotents in
//! the Jucys-Murphy elements.

use crate::error::{Error, Result};
use crate::qcoeff::{quantum_int, LaurentPoly, RationalFunction};
use crate::specht::{SpechtModule, SpechtVector};
use crate::tableaux::{Node, Tableau};

use super::SeminormalVector;

/// Which contents are tried as eigenvalues of `L_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueSet {
    /// Contents of the addable nodes of `shape(t restricted to 1..m-1)`
    /// inside the target shape.
    Branching,
    /// `-(m-1) ..= m-1`.
    PerPosition,
    /// `-(n-1) ..= n-1` for every `m`.
    Global,
}

fn candidates(t: &Tableau, m: usize, set: ResidueSet) -> Vec<i64> {
    let n = t.n() as i64;
    match set {
        ResidueSet::Global => (-(n - 1)..=n - 1).collect(),
        ResidueSet::PerPosition => (-(m as i64 - 1)..=m as i64 - 1).collect(),
        ResidueSet::Branching => {
            let counts = t.restricted_row_counts(m - 1);
            let shape = t.shape();
            let mut out = Vec::new();
            for row in 1..=shape.len() {
                let have = counts.get(row - 1).copied().unwrap_or(0);
                let above = if row == 1 { usize::MAX } else { counts.get(row - 2).copied().unwrap_or(0) };
                if have < shape.row_len(row) && have < above {
                    out.push(Node::new(row, have + 1).content());
                }
            }
            out
        }
    }
}

/// `f_t` by projection, using the smallest exact residue set.
pub fn f_via_projector(t: &Tableau) -> Result<SeminormalVector> {
    let module = SpechtModule::shared(t.shape())?;
    f_via_projector_with(&module, t, ResidueSet::Branching)
}

/// `f_t` by projection with an explicit residue set. Factors are applied
/// for `m = 1..n` in increasing order.
pub fn f_via_projector_with(module: &SpechtModule, t: &Tableau, set: ResidueSet) -> Result<SeminormalVector> {
    if module.index_of(t).is_none() {
        return Err(Error::InvalidTableau(format!("{t} is not a standard tableau of shape {}", module.shape())));
    }
    let mut v = SpechtVector::<LaurentPoly>::basis(t);
    let mut denom = RationalFunction::one();
    for m in 2..=t.n() {
        let r = t.content_of(m);
        let qr = quantum_int(r);
        for c in candidates(t, m, set) {
            if c == r {
                continue;
            }
            let qc = quantum_int(c);
            let shifted = module.jm_action(&v, m)?;
            v = shifted.sub(&v.scale(&qc.to_laurent().expect("quantum integers are Laurent")));
            denom = &denom * &(&qr - &qc);
        }
    }
    let inv = denom.inverse()?;
    let f = v.map_coeffs(|c| &RationalFunction::from_laurent(c.clone()) * &inv);
    SeminormalVector::new(t.clone(), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{standard_tableaux, superstandard};

    #[test]
    fn top_is_fixed() {
        let shape = "3,2".parse().unwrap();
        let t = superstandard(&shape);
        let f = f_via_projector(&t).unwrap();
        assert_eq!(f.vector(), &SpechtVector::basis(&t));
    }

    #[test]
    fn residue_sets_agree() {
        for shape in ["2,2", "3,1", "2,1,1", "3,2", "2,2,1"] {
            let shape = shape.parse().unwrap();
            let module = SpechtModule::new(&shape).unwrap();
            for t in standard_tableaux(&shape) {
                let a = f_via_projector_with(&module, &t, ResidueSet::Branching).unwrap();
                let b = f_via_projector_with(&module, &t, ResidueSet::PerPosition).unwrap();
                let c = f_via_projector_with(&module, &t, ResidueSet::Global).unwrap();
                assert_eq!(a, b);
                assert_eq!(b, c);
            }
        }
    }

    #[test]
    fn two_two_lower_vector() {
        let t: Tableau = "1,3/2,4".parse().unwrap();
        let f = f_via_projector(&t).unwrap();
        assert_eq!(f.vector().len(), 2);
        let top = superstandard(t.shape());
        assert_eq!(f.coeff(&top), quantum_int(2).inverse().unwrap());
    }
}
