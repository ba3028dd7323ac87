//! Which cyclotomic polynomials occur in the denominators of `f_t`, and
//! whether they are accounted for by the radial distances `r_j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qcoeff::{factor_cyclotomic, quantum_int, CyclotomicFactorization, CyclotomicOutcome, LaurentPoly, RationalFunction};
use crate::tableaux::{Node, Partition, Tableau};

use super::fast::{general_fn, general_ft};
use super::SeminormalVector;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenominatorCertificate {
    pub tableau: Tableau,
    /// Distinct coefficient denominators other than 1, factored.
    pub denominators: Vec<CyclotomicFactorization>,
    /// Denominators that are not products of cyclotomic polynomials.
    pub non_cyclotomic: Vec<LaurentPoly>,
    /// `(d, multiplicity)` of `Phi_d` in the lcm of all denominators.
    pub lcm: Vec<(u32, u32)>,
    /// The `r_j` whose quantum integers are expected to clear denominators.
    pub predicted_r: Vec<i64>,
    /// `(d, multiplicity)` of `Phi_d` in `prod [r_j]_q`.
    pub predicted: Vec<(u32, u32)>,
    /// The lcm divides the predicted product.
    pub divides: bool,
    /// `prod [r_j]_q f_t` has Laurent polynomial coefficients.
    pub cleared: bool,
}

fn merge_max(acc: &mut BTreeMap<u32, u32>, factors: &[(u32, u32)]) {
    for &(d, m) in factors {
        let e = acc.entry(d).or_insert(0);
        *e = (*e).max(m);
    }
}

fn merge_sum(acc: &mut BTreeMap<u32, u32>, factors: &[(u32, u32)]) {
    for &(d, m) in factors {
        *acc.entry(d).or_insert(0) += m;
    }
}

fn factor_quantum_int(r: i64) -> Result<Vec<(u32, u32)>> {
    let p = quantum_int(r).shifted_numerator();
    match factor_cyclotomic(&p)? {
        CyclotomicOutcome::Product(f) => Ok(f.factors),
        CyclotomicOutcome::NotProductOfCyclotomics(_) => unreachable!("quantum integers are cyclotomic products"),
    }
}

pub fn denominator_certificate(f: &SeminormalVector, predicted_r: &[i64]) -> Result<DenominatorCertificate> {
    let mut denominators: Vec<CyclotomicFactorization> = Vec::new();
    let mut non_cyclotomic: Vec<LaurentPoly> = Vec::new();
    let mut lcm = BTreeMap::new();
    let mut seen: Vec<LaurentPoly> = Vec::new();
    for (_, c) in f.vector().sorted_terms() {
        let den = c.denominator();
        if den.is_one() || seen.contains(den) {
            continue;
        }
        seen.push(den.clone());
        match factor_cyclotomic(den)? {
            CyclotomicOutcome::Product(fac) => {
                merge_max(&mut lcm, &fac.factors);
                denominators.push(fac);
            }
            CyclotomicOutcome::NotProductOfCyclotomics(rest) => non_cyclotomic.push(rest),
        }
    }
    let mut predicted = BTreeMap::new();
    let mut scale = RationalFunction::one();
    for &r in predicted_r {
        merge_sum(&mut predicted, &factor_quantum_int(r)?);
        scale = &scale * &quantum_int(r);
    }
    let divides = non_cyclotomic.is_empty() && lcm.iter().all(|(d, m)| predicted.get(d).is_some_and(|p| p >= m));
    let cleared = f.vector().iter().all(|(_, c)| (c * &scale).is_laurent());
    Ok(DenominatorCertificate {
        tableau: f.tableau().clone(),
        denominators,
        non_cyclotomic,
        lcm: lcm.into_iter().collect(),
        predicted_r: predicted_r.to_vec(),
        predicted: predicted.into_iter().collect(),
        divides,
        cleared,
    })
}

/// Certificate for the James-Murphy tableau of a removable node.
pub fn certificate_for_node(shape: &Partition, node: Node) -> Result<DenominatorCertificate> {
    let (expansion, data) = general_fn(shape, node)?;
    denominator_certificate(&expansion.f, &data.r)
}

/// Certificate for any standard tableau, predicting every `r_j` from the
/// factors of `P_t`.
pub fn certificate_for_tableau(t: &Tableau) -> Result<DenominatorCertificate> {
    let g = general_ft(t)?;
    denominator_certificate(&g.f, &g.predicted_denominators())
}
