//! Linear combinations of tableau-indexed vectors `e_u`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use crate::qcoeff::{RationalFunction, Scalar};
use crate::tableaux::{superstandard, Partition, Tableau};

/// `sum c_u e_u` in `S^lambda`.
///
/// Vectors returned by module operations are indexed by standard tableaux.
/// The raw action may also produce row-standard indices; such a vector
/// still names a well-defined element and is made canonical by straightening.
#[derive(Clone, Debug, PartialEq)]
pub struct SpechtVector<C: Scalar = RationalFunction> {
    shape: Partition,
    terms: HashMap<Tableau, C>,
}

impl<C: Scalar> SpechtVector<C> {
    pub fn zero(shape: &Partition) -> Self {
        Self { shape: shape.clone(), terms: HashMap::new() }
    }

    /// `e_t`.
    pub fn basis(t: &Tableau) -> Self {
        let mut v = Self::zero(t.shape());
        v.add_term(t.clone(), C::one());
        v
    }

    /// `e_lambda = e_{t^lambda}`.
    pub fn top(shape: &Partition) -> Self {
        Self::basis(&superstandard(shape))
    }

    pub fn from_terms<I: IntoIterator<Item = (Tableau, C)>>(shape: &Partition, terms: I) -> Self {
        let mut v = Self::zero(shape);
        for (t, c) in terms {
            v.add_term(t, c);
        }
        v
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
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

    pub fn coeff(&self, t: &Tableau) -> C {
        self.terms.get(t).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tableau, &C)> {
        self.terms.iter()
    }

    /// Terms ordered with the most dominant index first.
    pub fn sorted_terms(&self) -> Vec<(&Tableau, &C)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|a, b| b.0.total_cmp(a.0).then_with(|| a.0.cmp(b.0)));
        out
    }

    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(Tableau::is_standard)
    }

    pub fn add_term(&mut self, t: Tableau, c: C) {
        debug_assert_eq!(t.shape(), &self.shape);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Occupied(mut e) => {
                let s = e.get().plus(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.shape, other.shape, "vectors of different shapes");
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.shape, other.shape, "vectors of different shapes");
        if c.is_zero() {
            return;
        }
        for (t, x) in &other.terms {
            self.add_term(t.clone(), x.times(c));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one().negated());
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.shape);
        }
        Self { shape: self.shape.clone(), terms: self.terms.iter().map(|(t, x)| (t.clone(), x.times(c))).collect() }
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SpechtVector<D> {
        SpechtVector::from_terms(&self.shape, self.terms.iter().map(|(t, c)| (t.clone(), f(c))))
    }

    pub fn to_rational(&self) -> SpechtVector<RationalFunction> {
        self.map_coeffs(Scalar::to_rational)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for SpechtVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.sorted_terms().into_iter().map(|(t, c)| format!("({c})*e[{t}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
