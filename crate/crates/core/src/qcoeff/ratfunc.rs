//! Exact elements of the field `Q(q)`, stored as `q^shift * num / den`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{poly_gcd, LaurentPoly};
use crate::error::{Error, Result};

/// A rational function in `q` in canonical form.
///
/// `num` and `den` are polynomials with nonzero constant terms, coprime over
/// `Q`, without a common integer factor, and `den` has a positive leading
/// coefficient. Zero is `0 / 1` with `shift == 0`. Under these rules equal
/// values have equal fields, so `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    shift: i32,
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { shift: 0, num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(
            0,
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
        .expect("rational with nonzero denominator")
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_power(1)
    }

    pub fn q_power(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_power(k))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        let (shift, num) = p.split_q_power();
        if num.is_zero() {
            return Self::zero();
        }
        Self { shift, num, den: LaurentPoly::one() }
    }

    /// Canonicalizes `q^shift * num / den` for arbitrary Laurent `num`, `den`.
    pub fn from_parts(shift: i32, num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (ns, num) = num.split_q_power();
        let (ds, den) = den.split_q_power();
        Ok(Self::reduce(shift + ns - ds, num, den))
    }

    /// Cancels common factors; inputs already have nonzero constant terms.
    fn reduce(shift: i32, num: LaurentPoly, den: LaurentPoly) -> Self {
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_content(shift, num, den)
    }

    fn normalize_content(shift: i32, num: LaurentPoly, den: LaurentPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if c.is_one() {
            Self { shift, num, den }
        } else {
            Self { shift, num: num.div_scalar_exact(&c), den: den.div_scalar_exact(&c) }
        }
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Laurent polynomial, if it is one.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.shifted(self.shift))
    }

    /// The numerator with the `q^shift` factor folded in.
    pub fn shifted_numerator(&self) -> LaurentPoly {
        self.num.shifted(self.shift)
    }

    pub fn mul_q_power(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { shift: self.shift + k, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_content(-self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Value at `q = 1`, or `None` when the denominator vanishes there.
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval_one(), d))
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -rhs } else { rhs.clone() };
        }
        let shift = self.shift.min(rhs.shift);
        let a = self.num.shifted(self.shift - shift);
        let b = rhs.num.shifted(rhs.shift - shift);
        let b = if negate { -b } else { b };
        if self.den.is_one() && rhs.den.is_one() {
            let sum = &a + &b;
            return Self::from_laurent(sum.shifted(shift));
        }
        if self.den == rhs.den {
            let sum = &a + &b;
            if sum.is_zero() {
                return Self::zero();
            }
            let (s2, sum) = sum.split_q_power();
            return Self::reduce(shift + s2, sum, self.den.clone());
        }
        if self.den.is_one() || rhs.den.is_one() {
            // a + b/d = (a d + b) / d stays reduced over Q.
            let (num, den) = if self.den.is_one() {
                (&(&a * &rhs.den) + &b, rhs.den.clone())
            } else {
                (&a + &(&b * &self.den), self.den.clone())
            };
            if num.is_zero() {
                return Self::zero();
            }
            let (s2, num) = num.split_q_power();
            return Self::normalize_content(shift + s2, num, den);
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&a * &d2) + &(&b * &d1);
        if num.is_zero() {
            return Self::zero();
        }
        let (s2, num) = num.split_q_power();
        let den = &(&d1 * &d2) * &g;
        if g.is_one() {
            Self::normalize_content(shift + s2, num, den)
        } else {
            Self::reduce(shift + s2, num, den)
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return Self { shift, num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalize_content(shift, &n1 * &n2, &d1 * &d2)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        self.add_impl(rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self.add_impl(rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        self.mul_impl(rhs)
    }
}

/// Panics on a zero divisor; use [`RationalFunction::checked_div`] to get an error instead.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { shift: self.shift, num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { shift: self.shift, num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: Self) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.num.shifted(self.shift);
        if self.den.is_one() {
            return write!(f, "{top}");
        }
        let wrap = top.terms().count() > 1;
        if wrap {
            write!(f, "({top})")?;
        } else {
            write!(f, "{top}")?;
        }
        if self.den.terms().count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// `[k]_q = (q^k - 1)/(q - 1)`, a Laurent polynomial for every integer `k`.
pub fn quantum_int(k: i64) -> RationalFunction {
    match k {
        0 => RationalFunction::zero(),
        k if k > 0 => RationalFunction::from_laurent(LaurentPoly::from_coeffs(
            0,
            vec![BigInt::one(); k as usize],
        )),
        k => {
            let m = -k;
            let pos = LaurentPoly::from_coeffs(0, vec![BigInt::one(); m as usize]);
            RationalFunction::from_laurent(-pos.shifted(-(m as i32)))
        }
    }
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`.
pub fn quantum_factorial(k: u32) -> RationalFunction {
    (1..=k as i64).fold(RationalFunction::one(), |acc, j| &acc * &quantum_int(j))
}
