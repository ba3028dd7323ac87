//! The cyclotomic field `Q(zeta_e)` realized as `Q[q]/(Phi_e)`.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::cyclotomic_poly;
use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder over `Q`.
fn qpoly_div_rem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / lb;
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// `Q[q]/(Phi_e)` for a fixed `e >= 2`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    e: u32,
    modulus: QPoly,
}

/// An element of a [`CyclotomicField`], reduced to degree `< phi(e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFieldElement {
    field: Arc<CyclotomicField>,
    coeffs: QPoly,
}

impl CyclotomicField {
    pub fn new(e: u32) -> Result<Arc<Self>> {
        if e < 2 {
            return Err(Error::InvalidArgument(format!("cyclotomic order must be >= 2, got {e}")));
        }
        let modulus = cyclotomic_poly(e)
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Ok(Arc::new(Self { e, modulus }))
    }

    pub fn order(&self) -> u32 {
        self.e
    }

    /// Degree of the extension.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: &[BigRational]) -> QPoly {
        qpoly_div_rem(p, &self.modulus).1
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicFieldElement {
        CyclotomicFieldElement { field: Arc::clone(self), coeffs: Vec::new() }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicFieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: BigRational) -> CyclotomicFieldElement {
        let mut coeffs = vec![r];
        trim(&mut coeffs);
        CyclotomicFieldElement { field: Arc::clone(self), coeffs }
    }

    /// Class of a Laurent polynomial; `q` is a unit modulo `Phi_e`.
    pub fn from_laurent(self: &Arc<Self>, p: &LaurentPoly) -> CyclotomicFieldElement {
        let (shift, poly) = p.split_q_power();
        let coeffs: QPoly =
            poly.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let base = CyclotomicFieldElement { field: Arc::clone(self), coeffs: self.reduce(&coeffs) };
        &base * &self.q_power(shift)
    }

    pub fn q_power(self: &Arc<Self>, k: i32) -> CyclotomicFieldElement {
        let q = CyclotomicFieldElement {
            field: Arc::clone(self),
            coeffs: self.reduce(&[BigRational::zero(), BigRational::one()]),
        };
        let base = if k < 0 { q.inverse().expect("q is a unit") } else { q };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl CyclotomicFieldElement {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficients in the power basis `1, q, ..., q^(phi(e)-1)`, padded.
    pub fn coords(&self) -> Vec<BigRational> {
        let mut v = self.coeffs.clone();
        v.resize(self.field.degree(), BigRational::zero());
        v
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid: s * a + t * m = g
        let (mut r0, mut r1) = (self.field.modulus.clone(), self.coeffs.clone());
        let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (quot, rem) = qpoly_div_rem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Phi_e is irreducible
        debug_assert_eq!(r0.len(), 1);
        let inv_g = BigRational::one() / &r0[0];
        let coeffs: QPoly = s0.iter().map(|c| c * &inv_g).collect();
        Ok(Self { field: Arc::clone(&self.field), coeffs: self.field.reduce(&coeffs) })
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(self.field.e, other.field.e, "elements of different cyclotomic fields");
    }
}

impl std::ops::Add for &CyclotomicFieldElement {
    type Output = CyclotomicFieldElement;
    fn add(self, rhs: Self) -> CyclotomicFieldElement {
        self.check_field(rhs);
        let neg: QPoly = rhs.coeffs.iter().map(|c| -c).collect();
        CyclotomicFieldElement { field: Arc::clone(&self.field), coeffs: qpoly_sub(&self.coeffs, &neg) }
    }
}

impl std::ops::Sub for &CyclotomicFieldElement {
    type Output = CyclotomicFieldElement;
    fn sub(self, rhs: Self) -> CyclotomicFieldElement {
        self.check_field(rhs);
        CyclotomicFieldElement { field: Arc::clone(&self.field), coeffs: qpoly_sub(&self.coeffs, &rhs.coeffs) }
    }
}

impl std::ops::Mul for &CyclotomicFieldElement {
    type Output = CyclotomicFieldElement;
    fn mul(self, rhs: Self) -> CyclotomicFieldElement {
        self.check_field(rhs);
        let prod = qpoly_mul(&self.coeffs, &rhs.coeffs);
        CyclotomicFieldElement { field: Arc::clone(&self.field), coeffs: self.field.reduce(&prod) }
    }
}

impl std::ops::Neg for &CyclotomicFieldElement {
    type Output = CyclotomicFieldElement;
    fn neg(self) -> CyclotomicFieldElement {
        CyclotomicFieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CyclotomicFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Class of `f` in `Q[q]/(Phi_e)`, or [`Error::PoleAtZeta`] when the
/// denominator of `f` vanishes at a primitive `e`-th root of unity.
pub fn reduce_mod_cyclotomic(f: &RationalFunction, e: u32) -> Result<CyclotomicFieldElement> {
    let field = CyclotomicField::new(e)?;
    reduce_in(&field, f)
}

/// As [`reduce_mod_cyclotomic`], reusing an existing field.
pub fn reduce_in(field: &Arc<CyclotomicField>, f: &RationalFunction) -> Result<CyclotomicFieldElement> {
    let den = field.from_laurent(f.denominator());
    if den.is_zero() {
        return Err(Error::PoleAtZeta(field.order()));
    }
    let num = field.from_laurent(&f.shifted_numerator());
    Ok(&num * &den.inverse()?)
}

/// True when the denominator of `f` is coprime to `Phi_e`.
pub fn is_pole_free(f: &RationalFunction, e: u32) -> bool {
    let d = f.denominator();
    if d.is_one() {
        return true;
    }
    let phi = cyclotomic_poly(e);
    let (_, r) = d.div_rem_monic(&phi).expect("cyclotomic polynomials are monic");
    !r.is_zero()
}

/// Rank of a matrix over the field, by Gaussian elimination.
pub fn rank(rows: &[Vec<CyclotomicFieldElement>]) -> usize {
    let mut m: Vec<Vec<CyclotomicFieldElement>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = &m[i][c] * &inv;
                for k in c..ncols {
                    let sub = &factor * &m[r][k];
                    m[i][k] = &m[i][k] - &sub;
                }
            }
        }
        r += 1;
    }
    r
}

/// Solves `x * a = b` for row vectors, returning `None` when inconsistent.
/// `a` must have full row rank.
pub fn solve_left(
    a: &[Vec<CyclotomicFieldElement>],
    b: &[CyclotomicFieldElement],
) -> Option<Vec<CyclotomicFieldElement>> {
    // x a = b  <=>  a^T x^T = b^T
    let nr = a.len();
    let nc = b.len();
    let field = b.first().or_else(|| a.first().and_then(|r| r.first()))?.field().clone();
    // augmented system: nc equations in nr unknowns
    let mut m: Vec<Vec<CyclotomicFieldElement>> = (0..nc)
        .map(|j| {
            let mut row: Vec<_> = (0..nr).map(|i| a[i][j].clone()).collect();
            row.push(b[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nr {
        let Some(p) = (r..nc).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        for k in c..=nr {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..nc {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for k in c..=nr {
                    let sub = &factor * &m[r][k];
                    m[i][k] = &m[i][k] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[nr].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); nr];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][nr].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::quantum_int;

    #[test]
    fn quantum_three_vanishes_at_third_roots() {
        let z = reduce_mod_cyclotomic(&quantum_int(3), 3).unwrap();
        assert!(z.is_zero());
        let inv = quantum_int(3).inverse().unwrap();
        assert_eq!(reduce_mod_cyclotomic(&inv, 3), Err(Error::PoleAtZeta(3)));
    }

    #[test]
    fn inverse_of_two_at_third_roots() {
        // (q + 1)(-q) = -q^2 - q = 1 mod q^2 + q + 1
        let f = quantum_int(2).inverse().unwrap();
        let x = reduce_mod_cyclotomic(&f, 3).unwrap();
        let field = x.field().clone();
        assert_eq!(x, -&field.q_power(1));
        let two = reduce_mod_cyclotomic(&quantum_int(2), 3).unwrap();
        assert!((&x * &two).is_one());
    }

    #[test]
    fn negative_powers() {
        let field = CyclotomicField::new(5).unwrap();
        let a = field.q_power(-3);
        assert!((&a * &field.q_power(3)).is_one());
        assert!(field.q_power(5).is_one());
    }

    #[test]
    fn pole_detection() {
        assert!(is_pole_free(&quantum_int(4).inverse().unwrap(), 3));
        assert!(!is_pole_free(&quantum_int(6).inverse().unwrap(), 3));
    }
}
