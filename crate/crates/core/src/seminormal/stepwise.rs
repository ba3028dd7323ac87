//! `f_t` by walking a reduced word of `d(t)` down from `t^lambda`, one
//! seminormal step at a time.

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::qcoeff::{quantum_int, RationalFunction};
use crate::specht::SpechtModule;
use crate::tableaux::{superstandard, Permutation, Tableau};

use super::tracked::Tracked;
use super::SeminormalVector;

#[derive(Clone, Debug)]
pub struct StepwiseResult {
    pub f: SeminormalVector,
    /// Formal number of `e`-terms after each step, starting with 1.
    pub term_count_trace: Vec<u128>,
    /// Number of distinct indices after each step.
    pub distinct_trace: Vec<usize>,
}

/// One step: `f_s = f_t T_i + (1/[rho]) f_t` where `s = t s_i` lies below
/// `t` and `rho = c_t(i) - c_t(i+1)`.
fn step(cur: &Tableau, f: &Tracked, i: usize) -> Result<(Tableau, Tracked)> {
    let next = cur.swap_values(i);
    let rho = cur.content_of(i) - cur.content_of(i + 1);
    if !next.is_standard() || rho < 2 {
        return Err(Error::Inconsistent(format!("step s_{i} from {cur} leaves the standard tableaux")));
    }
    let mut out = f.act_gen(i);
    out.add_scaled(f, &quantum_int(rho).inverse()?);
    Ok((next, out))
}

pub fn f_via_stepwise(t: &Tableau) -> Result<StepwiseResult> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let mut cur = superstandard(t.shape());
    let mut f = Tracked::basis(&cur);
    let mut term_count_trace = vec![1];
    let mut distinct_trace = vec![1];
    for i in t.d().reduced_word() {
        (cur, f) = step(&cur, &f, i)?;
        term_count_trace.push(f.total());
        distinct_trace.push(f.vector.len());
    }
    debug_assert_eq!(&cur, t);
    let module = SpechtModule::shared(t.shape())?;
    let v = module.straighten(&f.vector)?;
    Ok(StepwiseResult { f: SeminormalVector::new(t.clone(), v)?, term_count_trace, distinct_trace })
}

/// `T_{b,beta} + (1/[r]) (T_{b,beta-1} + ... + T_{b,b+1} + 1)` in `H_n`.
pub fn row_step_element(b: usize, beta: usize, r: i64, n: usize) -> Result<HeckeElement> {
    if r == 1 {
        return Err(Error::InvalidArgument("radial distance 1 makes t_b nonstandard".into()));
    }
    if beta == b {
        return Ok(HeckeElement::identity(n));
    }
    let mut tail = HeckeElement::<RationalFunction>::identity(n);
    for x in b + 1..beta {
        tail.add_term(Permutation::sigma(b, x, n), RationalFunction::one());
    }
    Ok(HeckeElement::t_range(b, beta, n).add(&tail.scale(&quantum_int(r).inverse()?)))
}

/// Moves `b` to the end of the row holding `b+1..=beta` in `f_{t_b}`.
///
/// `b+1..=beta` must fill a whole row of `t_b` lying below `b`.
pub fn row_step(f: &SeminormalVector, b: usize, beta: usize) -> Result<SeminormalVector> {
    let tb = f.tableau();
    let n = tb.n();
    if !(b <= beta && beta <= n) {
        return Err(Error::InvalidArgument(format!("need b <= beta <= n, got b={b}, beta={beta}")));
    }
    if beta == b {
        return Ok(f.clone());
    }
    let row = tb.node_of(b + 1).row;
    let row_values: Vec<usize> = tb.rows()[row - 1].clone();
    if row_values != (b + 1..=beta).collect::<Vec<_>>() || row <= tb.node_of(b).row {
        return Err(Error::InvalidArgument(format!("{}..{beta} is not a full row below {b} in {tb}", b + 1)));
    }
    let r = tb.node_of(beta).radial_distance(&tb.node_of(b));
    let h = row_step_element(b, beta, r, n)?;
    let module = SpechtModule::shared(tb.shape())?;
    let v = module.act_hecke(f.vector(), &h)?;
    let target = tb.apply(&Permutation::sigma(b, beta, n));
    SeminormalVector::new(target, v)
}
