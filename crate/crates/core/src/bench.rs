//! Term counts and timings of the stepwise and fat hook constructions.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seminormal::{fat_hook_fn, f_via_stepwise};
use crate::specht::SpechtModule;
use crate::tableaux::Partition;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub shape: Partition,
    pub lambda1: usize,
    pub lambda2: usize,
    pub k2: usize,
    pub stepwise_terms: u128,
    pub fast_terms: u128,
    /// Best of the repetitions, in milliseconds.
    pub stepwise_time: f64,
    pub fast_time: f64,
    /// Both routes produced the same vector.
    pub agree: bool,
}

/// `(lambda_2 + 1, lambda_2^{k_2})` for the default grid.
pub fn default_fat_hooks() -> Vec<Partition> {
    let mut out = Vec::new();
    for l2 in [2, 3] {
        for k2 in [2, 3] {
            let mut parts = vec![l2 + 1];
            parts.extend(std::iter::repeat_n(l2, k2));
            out.push(Partition::new(parts).expect("valid fat hook"));
        }
    }
    out
}

fn best_of<T>(repeat: usize, mut f: impl FnMut() -> Result<T>) -> Result<(T, Duration)> {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let x = f()?;
        best = best.min(start.elapsed());
        last = Some(x);
    }
    Ok((last.expect("at least one run"), best))
}

pub fn bench_fat_hook(shape: &Partition, repeat: usize) -> Result<BenchRow> {
    let (l1, _, l2, k2) = shape
        .fat_hook_params()
        .ok_or_else(|| Error::InvalidArgument(format!("{shape} is not a fat hook")))?;
    // build the module outside the timed region
    SpechtModule::shared(shape)?;
    let (fast, fast_time) = best_of(repeat, || fat_hook_fn(shape))?;
    let target = fast.expansion.f.tableau().clone();
    let (step, stepwise_time) = best_of(repeat, || f_via_stepwise(&target))?;
    Ok(BenchRow {
        shape: shape.clone(),
        lambda1: l1,
        lambda2: l2,
        k2,
        stepwise_terms: *step.term_count_trace.last().expect("trace is nonempty"),
        fast_terms: fast.fast_terms,
        stepwise_time: stepwise_time.as_secs_f64() * 1e3,
        fast_time: fast_time.as_secs_f64() * 1e3,
        agree: step.f == fast.expansion.f,
    })
}
