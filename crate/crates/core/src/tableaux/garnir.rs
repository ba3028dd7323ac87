//! Garnir tableaux and their belt cosets.

use super::partition::{Composition, Node, Partition};
use super::perm::Permutation;
use super::tableau::Tableau;
use crate::error::{Error, Result};

fn check(shape: &Partition, i: usize, j: usize) -> Result<()> {
    if i < 2 || i > shape.len() || j == 0 || j > shape.row_len(i) {
        return Err(Error::InvalidArgument(format!("no Garnir tableau at ({i},{j}) for {shape}")));
    }
    Ok(())
}

/// The composition `(lambda_1, ..., lambda_{i-2}, j-1, j)`.
pub fn garnir_composition(shape: &Partition, i: usize, j: usize) -> Result<Composition> {
    check(shape, i, j)?;
    let mut parts: Vec<usize> = shape.parts()[..i - 2].to_vec();
    parts.push(j - 1);
    parts.push(j);
    Ok(Composition::new(parts))
}

/// The `(i,j)` Garnir tableau: `t^mu` on `1..m` and `m+1..n` by rows in
/// the remaining nodes. It has a column descent between `(i-1,j)` and `(i,j)`.
pub fn garnir_tableau(shape: &Partition, i: usize, j: usize) -> Result<Tableau> {
    let mu = garnir_composition(shape, i, j)?;
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut next = 1;
    for (r, &len) in mu.parts().iter().enumerate() {
        for _ in 0..len {
            rows[r].push(next);
            next += 1;
        }
    }
    for (r, &len) in shape.parts().iter().enumerate() {
        while rows[r].len() < len {
            rows[r].push(next);
            next += 1;
        }
    }
    Tableau::from_rows(rows)
}

/// Values in the belt of the descent at `(r, c)`: row `r` from column `c`
/// on, together with row `r+1` up to column `c`.
pub fn belt_values(t: &Tableau, descent: Node) -> (Vec<usize>, Vec<usize>) {
    let shape = t.shape();
    let top = (descent.col..=shape.row_len(descent.row))
        .map(|c| t.entry(Node::new(descent.row, c)))
        .collect();
    let bottom = (1..=descent.col).map(|c| t.entry(Node::new(descent.row + 1, c))).collect();
    (top, bottom)
}

/// Permutations of the belt values of `g_{ij}` keeping it row-standard.
pub fn garnir_coset(shape: &Partition, i: usize, j: usize) -> Result<Vec<Permutation>> {
    let g = garnir_tableau(shape, i, j)?;
    let n = shape.n();
    let (top, bottom) = belt_values(&g, Node::new(i - 1, j));
    let mut belt: Vec<usize> = top.iter().chain(bottom.iter()).copied().collect();
    belt.sort_unstable();
    let mut out = Vec::new();
    for subset in subsets(&belt, top.len()) {
        let rest: Vec<usize> = belt.iter().copied().filter(|x| !subset.contains(x)).collect();
        // w sends the sorted top slots to `subset` and the bottom slots to `rest`
        let mut images: Vec<usize> = (1..=n).collect();
        for (slot, &v) in top.iter().zip(subset.iter()) {
            images[slot - 1] = v;
        }
        for (slot, &v) in bottom.iter().zip(rest.iter()) {
            images[slot - 1] = v;
        }
        out.push(Permutation::from_images(&images)?);
    }
    Ok(out)
}

/// All `k`-element subsets of a sorted slice, each sorted, in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for idx in start..items.len() {
            if items.len() - idx < k - cur.len() {
                break;
            }
            cur.push(items[idx]);
            go(items, k, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}
