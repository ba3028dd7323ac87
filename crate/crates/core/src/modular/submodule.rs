use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::qcoeff::{
    is_pole_free, quantum_int, rank, reduce_in, solve_left, CyclotomicField, CyclotomicFieldElement, RationalFunction,
};
use crate::seminormal::{general_fn, general_ft, SeminormalVector};
use crate::specht::{SparseMatrix, SpechtModule};
use crate::tableaux::{Node, Partition, Tableau};

/// One check `[r]_zeta != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub r: i64,
    pub nonzero: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The generator matrices agree with those of the smaller Specht module.
    Confirmed,
    Refuted,
    HypothesisFailed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubmoduleReport {
    pub shape: Partition,
    pub node: Node,
    pub e: u32,
    pub hypothesis: Vec<HypothesisCheck>,
    pub pole_free: bool,
    pub generators_checked: usize,
    pub verdict: Verdict,
    /// Size of the spanning set `B`.
    #[serde(skip)]
    pub basis_size: usize,
    /// One entry per generator `T_1, T_2, ...`.
    #[serde(skip)]
    pub matrices_equal: Vec<bool>,
}

pub fn hypothesis_checks(rs: &[i64], field: &Arc<CyclotomicField>) -> Result<Vec<HypothesisCheck>> {
    rs.iter()
        .map(|&r| Ok(HypothesisCheck { r, nonzero: !reduce_in(field, &quantum_int(r))?.is_zero() }))
        .collect()
}

fn reduce_matrix(field: &Arc<CyclotomicField>, m: &SparseMatrix, dim: usize) -> Vec<Vec<CyclotomicFieldElement>> {
    m.iter()
        .map(|row| {
            let mut out = vec![field.zero(); dim];
            for (k, c) in row {
                out[*k] = field.from_laurent(c);
            }
            out
        })
        .collect()
}

fn times(v: &[CyclotomicFieldElement], m: &[Vec<CyclotomicFieldElement>], field: &Arc<CyclotomicField>) -> Vec<CyclotomicFieldElement> {
    let mut out = vec![field.zero(); m.first().map_or(0, Vec::len)];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o = &*o + &(x * y);
            }
        }
    }
    out
}

struct Outcome {
    generators_checked: usize,
    basis_size: usize,
    matrices_equal: Vec<bool>,
    independent: bool,
}

/// Builds `B = {g T_d(u)}` for the standard `small`-tableaux `u`, then
/// compares the matrices of `T_1..T_{m-1}` on `B` over `Q[q]/(Phi_e)` with
/// those of `S^small` in its standard basis, where `m = |small|`.
fn compare(generator: &SeminormalVector, small: &Partition, field: &Arc<CyclotomicField>) -> Result<Outcome> {
    let big = SpechtModule::shared(generator.tableau().shape())?;
    let target = SpechtModule::shared(small)?;
    let n = big.n();
    let m = small.n();
    let mut b_rows: Vec<Vec<CyclotomicFieldElement>> = Vec::with_capacity(target.dim());
    for u in target.basis() {
        let w = HeckeElement::<RationalFunction>::basis(u.d()).embed(n);
        let v = big.act_hecke(generator.vector(), &w)?;
        let dense = big.to_dense(&v)?;
        b_rows.push(dense.iter().map(|c| reduce_in(field, c)).collect::<Result<_>>()?);
    }
    let independent = rank(&b_rows) == target.dim();
    let mut matrices_equal = Vec::new();
    if independent {
        for i in 1..m {
            let action = reduce_matrix(field, big.gen_matrix(i), big.dim());
            let expected = reduce_matrix(field, target.gen_matrix(i), target.dim());
            let mut equal = true;
            for (row, want) in b_rows.iter().zip(&expected) {
                let image = times(row, &action, field);
                match solve_left(&b_rows, &image) {
                    Some(x) => equal &= &x == want,
                    None => equal = false,
                }
            }
            matrices_equal.push(equal);
        }
    }
    Ok(Outcome { generators_checked: matrices_equal.len(), basis_size: b_rows.len(), matrices_equal, independent })
}

fn verdict(outcome: &Outcome) -> Verdict {
    if outcome.independent && outcome.matrices_equal.iter().all(|&x| x) {
        Verdict::Confirmed
    } else {
        Verdict::Refuted
    }
}

/// `f_n H_{n-1}` against `S^mu` for `mu = lambda` minus the `j`-th removable
/// node (1-based, top to bottom).
pub fn verify_submodule_fn(shape: &Partition, j: usize, e: u32) -> Result<SubmoduleReport> {
    let field = CyclotomicField::new(e)?;
    let nodes = shape.removable_nodes();
    let node = *nodes
        .get(j.wrapping_sub(1))
        .ok_or_else(|| Error::InvalidArgument(format!("{shape} has {} removable nodes, got index {j}", nodes.len())))?;
    let (expansion, data) = general_fn(shape, node)?;
    let hypothesis = hypothesis_checks(&data.r, &field)?;
    let pole_free = expansion.f.vector().iter().all(|(_, c)| is_pole_free(c, e));
    let mut report = SubmoduleReport {
        shape: shape.clone(),
        node,
        e,
        hypothesis,
        pole_free,
        generators_checked: 0,
        verdict: Verdict::HypothesisFailed,
        basis_size: 0,
        matrices_equal: Vec::new(),
    };
    if !report.hypothesis.iter().all(|h| h.nonzero) {
        return Ok(report);
    }
    if !pole_free {
        report.verdict = Verdict::Refuted;
        return Ok(report);
    }
    let outcome = compare(&expansion.f, &shape.remove_node(node)?, &field)?;
    report.verdict = verdict(&outcome);
    report.generators_checked = outcome.generators_checked;
    report.basis_size = outcome.basis_size;
    report.matrices_equal = outcome.matrices_equal;
    Ok(report)
}

/// `f_{t<=} H_{r-1}` against `S^{lambda^{<r}}`, where `t<=` agrees with `t`
/// on `r..n` and is row-filled by `1..r-1` elsewhere.
///
/// The generator must be free of `Phi_e` poles; when it is not the verdict is
/// [`Verdict::HypothesisFailed`]. `hypothesis` lists `[r_j]_zeta != 0` for
/// every `r_j` in the factors of `P_{t<=}`, for information only.
pub fn verify_submodule_tleq(t: &Tableau, r: usize, e: u32) -> Result<SubmoduleReport> {
    let n = t.n();
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    if !(2..=n).contains(&r) {
        return Err(Error::InvalidArgument(format!("need 2 <= r <= {n}, got {r}")));
    }
    let field = CyclotomicField::new(e)?;
    let tleq = t.t_leq(r, n)?;
    let g = general_ft(&tleq)?;
    let hypothesis = hypothesis_checks(&g.predicted_denominators(), &field)?;
    let pole_free = g.f.vector().iter().all(|(_, c)| is_pole_free(c, e));
    let mut report = SubmoduleReport {
        shape: t.shape().clone(),
        node: t.node_of(n),
        e,
        hypothesis,
        pole_free,
        generators_checked: 0,
        verdict: Verdict::HypothesisFailed,
        basis_size: 0,
        matrices_equal: Vec::new(),
    };
    if !pole_free {
        return Ok(report);
    }
    let small = t.restrict(r - 1)?.shape().clone();
    let outcome = compare(&g.f, &small, &field)?;
    report.verdict = verdict(&outcome);
    report.generators_checked = outcome.generators_checked;
    report.basis_size = outcome.basis_size;
    report.matrices_equal = outcome.matrices_equal;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one_top_node() {
        let r = verify_submodule_fn(&"2,1".parse().unwrap(), 1, 3).unwrap();
        assert_eq!(r.hypothesis, vec![HypothesisCheck { r: 2, nonzero: true }]);
        assert!(r.pole_free);
        assert_eq!(r.verdict, Verdict::Confirmed);
        assert_eq!(r.generators_checked, 1);
    }

    #[test]
    fn hypothesis_failure_is_reported() {
        let r = verify_submodule_fn(&"2,1".parse().unwrap(), 1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisFailed);
        assert_eq!(r.generators_checked, 0);
    }

    #[test]
    fn lowest_node_needs_no_hypothesis() {
        let r = verify_submodule_fn(&"3,2".parse().unwrap(), 2, 2).unwrap();
        assert!(r.hypothesis.is_empty());
        assert_eq!(r.verdict, Verdict::Confirmed);
    }
}
