//! Elements of the Hecke algebra in the `T_w` basis.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qcoeff::{LaurentPoly, RationalFunction, Scalar};
use crate::tableaux::{superstandard, Partition, Permutation};

/// A finite combination `sum c_w T_w` in `H_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<C: Scalar = RationalFunction> {
    n: usize,
    terms: HashMap<Permutation, C>,
}

fn q() -> LaurentPoly {
    LaurentPoly::q_power(1)
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[-1, 1])
}

impl<C: Scalar> HeckeElement<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: HashMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// The basis element `T_w`.
    pub fn basis(w: Permutation) -> Self {
        Self::term(w, C::one())
    }

    pub fn term(w: Permutation, c: C) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(w, c);
        out
    }

    /// `T_i`.
    pub fn generator(i: usize, n: usize) -> Self {
        Self::basis(Permutation::simple(i, n))
    }

    /// `T_{i,j} = T_{sigma_{i,j}}`.
    pub fn t_range(i: usize, j: usize, n: usize) -> Self {
        Self::basis(Permutation::sigma(i, j, n))
    }

    pub fn scalar(c: C, n: usize) -> Self {
        Self::term(Permutation::identity(n), c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Terms sorted by length, then by one-line notation.
    pub fn terms(&self) -> Vec<(&Permutation, &C)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| (a.0.length(), a.0).cmp(&(b.0.length(), b.0)));
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Permutation, c: C) {
        assert_eq!(w.n(), self.n, "permutation rank differs from the algebra rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().negated()))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(w, x)| (w.clone(), x.times(c))).collect() }
    }

    /// `h T_i`.
    pub fn mul_gen_right(&self, i: usize) -> Self {
        assert!(1 <= i && i < self.n, "generator T_{i} not in H_{}", self.n);
        let q = C::from_laurent(q());
        let qm1 = C::from_laurent(q_minus_one());
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_simple(i);
            if ws.length() > w.length() {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.times(&q));
                out.add_term(w.clone(), c.times(&qm1));
            }
        }
        out
    }

    /// `T_i h`.
    pub fn mul_gen_left(&self, i: usize) -> Self {
        assert!(1 <= i && i < self.n, "generator T_{i} not in H_{}", self.n);
        let q = C::from_laurent(q());
        let qm1 = C::from_laurent(q_minus_one());
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let sw = w.simple_mul(i);
            if sw.length() > w.length() {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, c.times(&q));
                out.add_term(w.clone(), c.times(&qm1));
            }
        }
        out
    }

    /// `h T_w` along a reduced word of `w`.
    pub fn mul_basis_right(&self, w: &Permutation) -> Self {
        w.reduced_word().into_iter().fold(self.clone(), |acc, i| acc.mul_gen_right(i))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (w, c) in &other.terms {
            let part = self.mul_basis_right(w).scale(c);
            out = out.add(&part);
        }
        Ok(out)
    }

    /// Embeds `H_m` into `H_n` for `m <= n`.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot embed H_{} into H_{n}", self.n);
        let mut out = Self::zero(n);
        for (w, c) in &self.terms {
            let mut images = w.images();
            images.extend(self.n + 1..=n);
            out.add_term(Permutation::from_images(&images).expect("extension is a bijection"), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> HeckeElement<D> {
        let mut out = HeckeElement::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl HeckeElement<RationalFunction> {
    /// `x_lambda = sum_{w in S_lambda} T_w`.
    pub fn row_symmetrizer(shape: &Partition) -> Self {
        let mut out = Self::zero(shape.n());
        for w in row_stabilizer(shape) {
            out.add_term(w, RationalFunction::one());
        }
        out
    }
}

/// The Young subgroup fixing the rows of `t^lambda` setwise.
pub fn row_stabilizer(shape: &Partition) -> Vec<Permutation> {
    let mut out = vec![Vec::new()];
    let mut start = 1;
    for &len in shape.parts() {
        let block: Vec<usize> = (start..start + len).collect();
        let perms = permutations_of(&block);
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for prefix in &out {
            for p in &perms {
                let mut v: Vec<usize> = prefix.clone();
                v.extend(p);
                next.push(v);
            }
        }
        out = next;
        start += len;
    }
    out.into_iter().map(|images| Permutation::from_images(&images).expect("block permutation")).collect()
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations_of(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `L_m = sum_{k=1}^{m-1} q^{-k} T_{(m-k, m)}`.
pub fn jucys_murphy<C: Scalar>(m: usize, n: usize) -> HeckeElement<C> {
    assert!(1 <= m && m <= n, "L_{m} not in H_{n}");
    let mut out = HeckeElement::zero(n);
    for k in 1..m {
        out.add_term(Permutation::transposition(m - k, m, n), C::from_laurent(LaurentPoly::q_power(-(k as i32))));
    }
    out
}

/// `R_i = 1 + T_{a,a+1} + ... + T_{a,b-1}` where `a` ends row `i-1` and
/// `b` ends row `i` of `t^lambda`.
pub fn row_sum_r<C: Scalar>(shape: &Partition, i: usize) -> Result<HeckeElement<C>> {
    if i < 2 || i > shape.len() {
        return Err(Error::InvalidArgument(format!("R_{i} undefined for {shape}")));
    }
    let n = shape.n();
    let (a, b) = row_ends(shape, i);
    let mut out = HeckeElement::identity(n);
    for x in a + 1..b {
        out.add_term(Permutation::sigma(a, x, n), C::one());
    }
    Ok(out)
}

/// Last entries of rows `i-1` and `i` of `t^lambda`.
pub fn row_ends(shape: &Partition, i: usize) -> (usize, usize) {
    let top = superstandard(shape);
    let a = top.entry(crate::tableaux::Node::new(i - 1, shape.row_len(i - 1)));
    let b = top.entry(crate::tableaux::Node::new(i, shape.row_len(i)));
    (a, b)
}

impl<C: Scalar + fmt::Display> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(w, c)| {
                let basis = if w.is_identity() { "1".to_string() } else { format!("T{w}") };
                format!("({c})*{basis}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = HeckeElement<LaurentPoly>;

    #[test]
    fn quadratic_relation() {
        let t1 = H::generator(1, 2);
        let sq = t1.mul(&t1).unwrap();
        let expected = t1.scale(&q_minus_one()).add(&H::scalar(q(), 2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn braid_and_commutation() {
        let t = |i| H::generator(i, 4);
        let lhs = t(1).mul(&t(2)).unwrap().mul(&t(1)).unwrap();
        let rhs = t(2).mul(&t(1)).unwrap().mul(&t(2)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 1);
        assert_eq!(t(1).mul(&t(3)).unwrap(), t(3).mul(&t(1)).unwrap());
    }

    #[test]
    fn distinguished_elements() {
        assert_eq!(H::t_range(3, 3, 5), H::identity(5));
        assert_eq!(H::t_range(4, 6, 6), H::generator(4, 6).mul(&H::generator(5, 6)).unwrap());
        let t13 = H::basis(Permutation::transposition(1, 3, 3));
        let word = H::generator(2, 3).mul(&H::generator(1, 3)).unwrap().mul(&H::generator(2, 3)).unwrap();
        assert_eq!(t13, word);
        assert!(jucys_murphy::<LaurentPoly>(1, 3).is_zero());
        let l2: H = jucys_murphy(2, 3);
        assert_eq!(l2, H::term(Permutation::simple(1, 3), LaurentPoly::q_power(-1)));
    }

    #[test]
    fn row_sums() {
        let lam: Partition = "4,3,2,2".parse().unwrap();
        let r2: H = row_sum_r(&lam, 2).unwrap();
        let expected = H::identity(11).add(&H::t_range(4, 6, 11)).add(&H::t_range(4, 5, 11));
        assert_eq!(r2, expected);
        let r4: H = row_sum_r(&lam, 4).unwrap();
        assert_eq!(r4, H::identity(11).add(&H::t_range(9, 10, 11)));
        let hook: Partition = "2,1,1".parse().unwrap();
        assert_eq!(row_sum_r::<LaurentPoly>(&hook, 3).unwrap(), H::identity(4));
    }

    #[test]
    fn left_and_right_generators_agree_on_products() {
        let t2 = H::generator(2, 4);
        let x = H::t_range(1, 4, 4).add(&H::generator(3, 4));
        assert_eq!(x.mul_gen_left(2), t2.mul(&x).unwrap());
    }
}
