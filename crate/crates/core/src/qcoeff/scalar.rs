use std::fmt::Debug;

use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;

/// Coefficient rings used by module vectors: `Z[q, q^-1]` and `Q(q)`.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_laurent(p: LaurentPoly) -> Self;
    fn to_rational(&self) -> RationalFunction;
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: LaurentPoly) -> Self {
        p
    }
    fn to_rational(&self) -> RationalFunction {
        RationalFunction::from_laurent(self.clone())
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction::from_laurent(p)
    }
    fn to_rational(&self) -> RationalFunction {
        self.clone()
    }
}
