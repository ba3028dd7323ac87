//! Tableaux of partition shape and the distinguished tableaux.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{dominates_seq, total_cmp_seq, Node, Partition};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A bijective filling of a Young diagram with `1..=n`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    shape: Partition,
    entries: Vec<u8>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let entries: Vec<usize> = rows.into_iter().flatten().collect();
        Self::new(shape, &entries)
    }

    /// From the row-reading word of a filling of `shape`.
    pub fn new(shape: Partition, entries: &[usize]) -> Result<Self> {
        let n = shape.n();
        if entries.len() != n {
            return Err(Error::InvalidTableau(format!("{} entries for a shape of size {n}", entries.len())));
        }
        if n > u8::MAX as usize {
            return Err(Error::InvalidTableau(format!("size {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &x in entries {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidTableau(format!("entries {entries:?} are not a bijection onto 1..{n}")));
            }
            seen[x] = true;
        }
        Ok(Self { shape, entries: entries.iter().map(|&x| x as u8).collect() })
    }

    pub(crate) fn from_raw(shape: Partition, entries: Vec<u8>) -> Self {
        debug_assert_eq!(shape.n(), entries.len());
        Self { shape, entries }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.entries
    }

    fn offset(&self, row: usize) -> usize {
        self.shape.parts()[..row - 1].iter().sum()
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut start = 0;
        for &len in self.shape.parts() {
            out.push(self.entries[start..start + len].iter().map(|&x| x as usize).collect());
            start += len;
        }
        out
    }

    pub fn entry(&self, node: Node) -> usize {
        assert!(self.shape.contains(node), "node {node} outside the diagram");
        self.entries[self.offset(node.row) + node.col - 1] as usize
    }

    /// The node holding `value`.
    pub fn node_of(&self, value: usize) -> Node {
        let idx = self.entries.iter().position(|&x| x as usize == value).expect("value in range");
        let mut rest = idx;
        for (r, &len) in self.shape.parts().iter().enumerate() {
            if rest < len {
                return Node::new(r + 1, rest + 1);
            }
            rest -= len;
        }
        unreachable!("index inside the diagram")
    }

    /// Row of each value, indexed by `value - 1`.
    pub fn row_of_values(&self) -> Vec<usize> {
        let mut out = vec![0; self.n()];
        let mut idx = 0;
        for (r, &len) in self.shape.parts().iter().enumerate() {
            for _ in 0..len {
                out[self.entries[idx] as usize - 1] = r + 1;
                idx += 1;
            }
        }
        out
    }

    pub fn content_of(&self, value: usize) -> i64 {
        self.node_of(value).content()
    }

    pub fn is_row_standard(&self) -> bool {
        let mut start = 0;
        for &len in self.shape.parts() {
            if self.entries[start..start + len].windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            start += len;
        }
        true
    }

    pub fn is_column_standard(&self) -> bool {
        self.first_column_descent().is_none()
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// Leftmost column, then topmost row `r` with `t[r,c] > t[r+1,c]`.
    pub fn first_column_descent(&self) -> Option<Node> {
        let width = self.shape.row_len(1);
        for c in 1..=width {
            for r in 1..self.shape.len() {
                if self.shape.row_len(r + 1) < c {
                    break;
                }
                if self.entry(Node::new(r, c)) > self.entry(Node::new(r + 1, c)) {
                    return Some(Node::new(r, c));
                }
            }
        }
        None
    }

    /// Describes the first violation of standardness, if any.
    pub fn standardness_violation(&self) -> Option<String> {
        for (r, row) in self.rows().iter().enumerate() {
            if let Some(c) = row.windows(2).position(|w| w[0] > w[1]) {
                return Some(format!(
                    "row {} is not increasing: {} > {} at columns {} and {}",
                    r + 1,
                    row[c],
                    row[c + 1],
                    c + 1,
                    c + 2
                ));
            }
        }
        self.first_column_descent().map(|x| {
            format!(
                "column {} is not increasing: {} > {} at rows {} and {}",
                x.col,
                self.entry(x),
                self.entry(Node::new(x.row + 1, x.col)),
                x.row,
                x.row + 1
            )
        })
    }

    /// The right action `t w`: each entry `x` becomes `w(x)`.
    pub fn apply(&self, w: &Permutation) -> Self {
        assert_eq!(w.n(), self.n(), "permutation rank differs from tableau size");
        Self {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&x| w.image(x as usize) as u8).collect(),
        }
    }

    /// `t s_i`: swaps the entries `i` and `i+1`.
    pub fn swap_values(&self, i: usize) -> Self {
        let (a, b) = (i as u8, (i + 1) as u8);
        Self {
            shape: self.shape.clone(),
            entries: self
                .entries
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// Sorts each row increasingly; returns the number of row inversions removed.
    pub fn row_sorted(&self) -> (Self, usize) {
        let mut entries = self.entries.clone();
        let mut inv = 0;
        let mut start = 0;
        for &len in self.shape.parts() {
            let row = &mut entries[start..start + len];
            for i in 0..len {
                for j in i + 1..len {
                    if row[i] > row[j] {
                        inv += 1;
                    }
                }
            }
            row.sort_unstable();
            start += len;
        }
        (Self { shape: self.shape.clone(), entries }, inv)
    }

    /// `d(t)` with `t = t^lambda d(t)`.
    pub fn d(&self) -> Permutation {
        let images: Vec<usize> = self.entries.iter().map(|&x| x as usize).collect();
        Permutation::from_images(&images).expect("tableau entries form a bijection")
    }

    /// Number of entries in each row among the values `1..=k`.
    pub fn restricted_row_counts(&self, k: usize) -> Vec<usize> {
        let mut counts = vec![0; self.shape.len()];
        let rows = self.row_of_values();
        for &r in &rows[..k] {
            counts[r - 1] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    /// The tableau on `1..=k` obtained by deleting larger entries.
    pub fn restrict(&self, k: usize) -> Result<Self> {
        if k > self.n() {
            return Err(Error::InvalidArgument(format!("cannot restrict a size {} tableau to {k}", self.n())));
        }
        let rows: Vec<Vec<usize>> = self
            .rows()
            .into_iter()
            .map(|row| row.into_iter().filter(|&x| x <= k).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens).map_err(|_| {
            Error::InvalidTableau(format!("restriction of {self} to 1..{k} is not of partition shape"))
        })?;
        let entries: Vec<usize> = rows.into_iter().flatten().collect();
        Self::new(shape, &entries)
    }

    /// Shapes of the restrictions to `1..=k` for `k = 1..=n`.
    pub fn shape_chain(&self) -> Result<Vec<Partition>> {
        (1..=self.n()).map(|k| self.restrict(k).map(|t| t.shape)).collect()
    }

    /// The tableau of shape `lambda^{<=s}` agreeing with `self` on `r..=s`,
    /// with `1..r-1` filled in by rows.
    pub fn t_leq(&self, r: usize, s: usize) -> Result<Self> {
        if !(1 <= r && r <= s && s <= self.n()) {
            return Err(Error::InvalidArgument(format!("need 1 <= r <= s <= n, got r={r}, s={s}")));
        }
        let top = self.restrict(s)?;
        let mut next = 1;
        let entries: Vec<usize> = top
            .entries
            .iter()
            .map(|&x| {
                if (x as usize) < r {
                    next += 1;
                    next - 1
                } else {
                    x as usize
                }
            })
            .collect();
        Self::new(top.shape, &entries)
    }

    /// Dominance on tableaux through restrictions.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok((1..=self.n())
            .all(|k| dominates_seq(&self.restricted_row_counts(k), &other.restricted_row_counts(k))))
    }

    /// The total order on tableaux: decided at the largest `k` where the
    /// restrictions differ.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        for k in (1..=self.n()).rev() {
            let a = self.restricted_row_counts(k);
            let b = other.restricted_row_counts(k);
            if a != b {
                return total_cmp_seq(&a, &b);
            }
        }
        Ordering::Equal
    }

    pub fn total_prec(&self, other: &Self) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.total_cmp(other).is_le())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape.to_string(), other.shape.to_string()));
        }
        Ok(())
    }
}

/// `t^lambda`: rows filled consecutively.
pub fn superstandard(shape: &Partition) -> Tableau {
    Tableau { shape: shape.clone(), entries: (1..=shape.n() as u8).collect() }
}

/// `t_lambda`: columns filled consecutively.
pub fn column_superstandard(shape: &Partition) -> Tableau {
    let conj = shape.conjugate();
    let mut entries = vec![0u8; shape.n()];
    let mut next = 1u8;
    for (c, &h) in conj.parts().iter().enumerate() {
        for r in 1..=h {
            let off: usize = shape.parts()[..r - 1].iter().sum();
            entries[off + c] = next;
            next += 1;
        }
    }
    Tableau { shape: shape.clone(), entries }
}

/// All standard tableaux of `shape`, sorted descending in the total order
/// so that `t^lambda` comes first.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn go(shape: &Partition, out: &mut Vec<Vec<Vec<u8>>>) {
        if shape.n() == 0 {
            out.push(Vec::new());
            return;
        }
        let n = shape.n() as u8;
        for node in shape.removable_nodes() {
            let smaller = shape.remove_node(node).expect("removable");
            let mut sub = Vec::new();
            go(&smaller, &mut sub);
            for mut rows in sub {
                if rows.len() < node.row {
                    rows.push(Vec::new());
                }
                rows[node.row - 1].push(n);
                out.push(rows);
            }
        }
    }
    let mut fillings = Vec::new();
    go(shape, &mut fillings);
    let mut out: Vec<Tableau> = fillings
        .into_iter()
        .map(|rows| Tableau { shape: shape.clone(), entries: rows.into_iter().flatten().collect() })
        .collect();
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// `t^lambda sigma_{c,n}` where `c = t^lambda[node]`.
pub fn james_murphy_tableau(shape: &Partition, node: Node) -> Result<Tableau> {
    if !shape.is_removable(node) {
        return Err(Error::NotRemovable(node.row, node.col));
    }
    let top = superstandard(shape);
    let c = top.entry(node);
    Ok(top.apply(&Permutation::sigma(c, shape.n(), shape.n())))
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| row.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidTableau(format!("cannot parse `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<usize>>::deserialize(d)?;
        Self::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn distinguished_tableaux() {
        assert_eq!(superstandard(&p("3,2")), t("1,2,3/4,5"));
        assert_eq!(column_superstandard(&p("1,1,1")), t("1/2/3"));
        assert_eq!(column_superstandard(&p("3,2")), t("1,3,5/2,4"));
        assert_eq!(james_murphy_tableau(&p("3,2,2"), Node::new(1, 3)).unwrap(), t("1,2,7/3,4/5,6"));
        assert_eq!(
            james_murphy_tableau(&p("4,3,2,2"), Node::new(1, 4)).unwrap(),
            t("1,2,3,11/4,5,6/7,8/9,10")
        );
        assert_eq!(james_murphy_tableau(&p("4"), Node::new(1, 4)).unwrap(), t("1,2,3,4"));
    }

    #[test]
    fn right_action_matches_sigma() {
        let lam = p("6,4,4,2");
        let t10 = superstandard(&lam).apply(&Permutation::sigma(6, 10, 16));
        assert_eq!(t10.rows()[0], vec![1, 2, 3, 4, 5, 10]);
        assert_eq!(t10.rows()[1], vec![6, 7, 8, 9]);
        let x = t("1,3,4/2,5");
        assert_eq!(superstandard(&p("3,2")).apply(&x.d()), x);
    }

    #[test]
    fn enumeration() {
        let two_two = standard_tableaux(&p("2,2"));
        assert_eq!(two_two, vec![t("1,2/3,4"), t("1,3/2,4")]);
        assert_eq!(standard_tableaux(&p("3,2,2")).len(), 21);
        assert_eq!(standard_tableaux(&p("4")).len(), 1);
        let all = standard_tableaux(&p("3,2,1"));
        assert_eq!(all[0], superstandard(&p("3,2,1")));
        assert_eq!(*all.last().unwrap(), column_superstandard(&p("3,2,1")));
    }

    #[test]
    fn tableau_orders() {
        let a = t("1,2/3");
        let b = t("1,3/2");
        assert!(b.dominance_leq(&a).unwrap());
        assert!(!a.dominance_leq(&b).unwrap());
        assert!(b.total_prec(&a).unwrap());
    }

    #[test]
    fn restrictions() {
        let x = t("1,4,5/2/3");
        let chain: Vec<String> = x.shape_chain().unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(chain, vec!["1", "1,1", "1,1,1", "2,1,1", "3,1,1"]);
        assert_eq!(x.t_leq(4, 4).unwrap(), t("1,4/2/3"));
        assert_eq!(x.t_leq(5, 5).unwrap(), t("1,2,5/3/4"));
        assert_eq!(superstandard(&p("3,2")).restrict(4).unwrap(), superstandard(&p("3,1")));
        assert!(t("2,1").is_column_standard());
        assert!(!t("2,1").is_row_standard());
        assert!(t("1,3/2,4").standardness_violation().is_none());
        assert!(t("2,3/1,4").standardness_violation().unwrap().contains("column 1"));
    }
}
