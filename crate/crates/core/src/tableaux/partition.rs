//! Partitions, compositions, nodes and the orders on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A node `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `content(other) - content(self)`.
    pub fn radial_distance(&self, other: &Node) -> i64 {
        other.content() - self.content()
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Node {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("node must look like `r,c`, got `{s}`"));
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (r, c) = s.split_once(',').ok_or_else(bad)?;
        let row: usize = r.trim().parse().map_err(|_| bad())?;
        let col: usize = c.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Node { row, col })
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Compares partial sums; `None` when the sizes differ.
fn partial_sums(a: &[usize], b: &[usize]) -> impl Iterator<Item = (usize, usize)> {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    let a = a.to_vec();
    let b = b.to_vec();
    (0..len).map(move |i| {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        (sa, sb)
    })
}

/// Dominance `a <= b` for sequences of equal total.
pub fn dominates_seq(a: &[usize], b: &[usize]) -> bool {
    partial_sums(a, b).all(|(x, y)| x <= y)
}

/// The total order: compare at the first differing partial sum.
pub fn total_cmp_seq(a: &[usize], b: &[usize]) -> Ordering {
    partial_sums(a, b)
        .map(|(x, y)| x.cmp(&y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Row lengths with trailing zeros dropped; fails if not a partition.
    pub fn from_row_lengths(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self::new(rows)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based), zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.row_len(node.row)
    }

    /// Nodes in row-reading order.
    pub fn nodes(&self) -> Vec<Node> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Node::new(r + 1, c)))
            .collect()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect();
        Self { parts }
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Node::new(r, self.row_len(r)))
            .collect()
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r) < self.row_len(r - 1))
            .map(|r| Node::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn is_removable(&self, node: Node) -> bool {
        self.contains(node) && node.col == self.row_len(node.row) && self.row_len(node.row + 1) < node.col
    }

    pub fn remove_node(&self, node: Node) -> Result<Self> {
        if !self.is_removable(node) {
            return Err(Error::NotRemovable(node.row, node.col));
        }
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        Self::from_row_lengths(parts)
    }

    pub fn add_node(&self, node: Node) -> Result<Self> {
        if !self.addable_nodes().contains(&node) {
            return Err(Error::InvalidArgument(format!("node {node} is not addable to {self}")));
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(0);
        }
        parts[node.row - 1] += 1;
        Self::new(parts)
    }

    /// Hook length of a node inside the diagram.
    pub fn hook(&self, node: Node) -> usize {
        let arm = self.row_len(node.row) - node.col;
        let leg = (node.row + 1..=self.len()).filter(|&r| self.row_len(r) >= node.col).count();
        arm + leg + 1
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn num_standard(&self) -> u128 {
        let mut num: u128 = 1;
        let mut hooks: Vec<u128> = self.nodes().iter().map(|&x| self.hook(x) as u128).collect();
        for k in 1..=self.n() as u128 {
            num *= k;
            // keep the intermediate small
            for h in hooks.iter_mut() {
                if *h > 1 && num.is_multiple_of(*h) {
                    num /= *h;
                    *h = 1;
                }
            }
        }
        let rest: u128 = hooks.iter().product();
        num / rest
    }

    /// `(lambda_1^k_1, lambda_2^k_2)` when there are exactly two distinct parts.
    pub fn fat_hook_params(&self) -> Option<(usize, usize, usize, usize)> {
        let l1 = *self.parts.first()?;
        let k1 = self.parts.iter().take_while(|&&p| p == l1).count();
        let l2 = *self.parts.get(k1)?;
        let k2 = self.parts[k1..].iter().take_while(|&&p| p == l2).count();
        (k1 + k2 == self.len()).then_some((l1, k1, l2, k2))
    }

    /// Dominance `self <= other`.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool> {
        self.same_size(other)?;
        Ok(dominates_seq(&self.parts, &other.parts))
    }

    /// The total refinement of dominance (reflexive).
    pub fn total_prec(&self, other: &Self) -> Result<bool> {
        self.same_size(other)?;
        Ok(total_cmp_seq(&self.parts, &other.parts).is_le())
    }

    fn same_size(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        Ok(())
    }
}

/// All partitions of `n`, in decreasing lexicographic order starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::default());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Self::new(parts).map_err(serde::de::Error::custom)
    }
}
