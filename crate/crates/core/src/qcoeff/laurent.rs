//! Laurent polynomials in one variable `q` over the integers.
//!
//! Coefficients are stored densely from the lowest exponent upwards; the
//! first and last stored coefficients are always nonzero, so two equal
//! Laurent polynomials have identical representations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i32, c: BigInt) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    pub fn q_power(exp: i32) -> Self {
        Self::monomial(exp, BigInt::one())
    }

    /// Builds `sum_i coeffs[i] q^(low + i)`, trimming zeros at both ends.
    pub fn from_coeffs(low: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i32, coeffs }
    }

    pub fn from_i64s(low: i32, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap_or(low);
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_coeffs(low, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// `high - low`; the degree once `q^low` is factored out.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Multiplies by `q^k`.
    pub fn shifted(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Splits `self = q^low * p` with `p(0) != 0`.
    pub fn split_q_power(&self) -> (i32, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        (self.low, Self { low: 0, coeffs: self.coeffs.clone() })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Evaluates at an integer point (only for polynomials with `low >= 0`).
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        assert!(self.is_polynomial(), "eval_int on a proper Laurent polynomial");
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc * x.pow(self.low.max(0) as u32)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Euclidean division by a divisor with leading coefficient ±1 (both
    /// treated as polynomials in `q`, `low` ignored for the divisor's unit
    /// power). Returns `None` when the divisor is not monic up to sign.
    pub fn div_rem_monic(&self, divisor: &Self) -> Option<(Self, Self)> {
        let lc = divisor.leading_coeff()?;
        if !(lc.is_one() || (-lc).is_one()) {
            return None;
        }
        let (dv, dpoly) = divisor.split_q_power();
        let (sv, spoly) = self.split_q_power();
        let (q, r) = poly_div_rem_unit(&spoly.coeffs, &dpoly.coeffs);
        Some((
            Self::from_coeffs(sv - dv, q),
            Self::from_coeffs(sv, r),
        ))
    }

    /// Exact division of polynomials over the integers; `None` if `divisor`
    /// does not divide `self` in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dv, dpoly) = divisor.split_q_power();
        let (sv, spoly) = self.split_q_power();
        let q = poly_div_exact(&spoly.coeffs, &dpoly.coeffs)?;
        Some(Self::from_coeffs(sv - dv, q))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]).shifted(self.low);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]).shifted(other.low);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(self.low + other.low, out)
    }

    fn add_ref(&self, other: &Self, negate_other: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other { -other.clone() } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut out = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut out[(other.low - low) as usize + i];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_coeffs(low, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

/// Quotient and remainder for a divisor whose leading coefficient is ±1.
fn poly_div_rem_unit(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut rem = num.to_vec();
    if num.len() < den.len() {
        return (Vec::new(), rem);
    }
    let dl = den.len() - 1;
    let lc_neg = den[dl].is_negative();
    let mut quot = vec![BigInt::zero(); num.len() - dl];
    for k in (0..quot.len()).rev() {
        let mut c = rem[k + dl].clone();
        if c.is_zero() {
            continue;
        }
        if lc_neg {
            c = -c;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    rem.truncate(dl);
    (quot, rem)
}

/// Exact quotient `num / den` over Z, or `None` if it does not exist.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if num.len() < den.len() {
        return None;
    }
    let dl = den.len() - 1;
    let lc = &den[dl];
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dl];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + dl];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(quot)
}

/// Pseudo-remainder of `a` by `b` (dense ascending coefficient vectors).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let g = lr.gcd(lb);
        let mult_r = lb / &g;
        let mult_b = &lr / &g;
        for c in r.iter_mut() {
            *c *= &mult_r;
        }
        let off = dr - db;
        for (j, c) in b.iter().enumerate() {
            r[off + j] -= &mult_b * c;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

const GCD_PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % GCD_PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn reduce_mod_prime(v: &[BigInt]) -> Vec<u64> {
    let p = BigInt::from(GCD_PRIME);
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p);
            u64::try_from(r).expect("residue fits in u64")
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Sound coprimality test: when the prime does not divide either leading
/// coefficient, a constant gcd modulo the prime forces a constant gcd over Z.
fn coprime_mod_prime(a: &[BigInt], b: &[BigInt]) -> bool {
    let mut x = reduce_mod_prime(a);
    let mut y = reduce_mod_prime(b);
    if x.len() != a.len() || y.len() != b.len() {
        return false;
    }
    while !y.is_empty() {
        // x <- x mod y
        let inv = powmod(*y.last().unwrap(), GCD_PRIME - 2);
        while x.len() >= y.len() {
            let c = mulmod(*x.last().unwrap(), inv);
            let off = x.len() - y.len();
            for (j, d) in y.iter().enumerate() {
                let t = mulmod(c, *d);
                x[off + j] = (x[off + j] + GCD_PRIME - t) % GCD_PRIME;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

fn primitive_vec(v: Vec<BigInt>) -> Vec<BigInt> {
    let p = LaurentPoly::from_coeffs(0, v).primitive_part();
    p.coeffs
}

/// Primitive gcd of two polynomials in `q` with nonzero constant terms,
/// normalized to a positive leading coefficient.
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(a.low == 0 && b.low == 0);
    if a.coeffs.len() == 1 || b.coeffs.len() == 1 {
        return LaurentPoly::one();
    }
    if a == b {
        return a.primitive_part();
    }
    let (mut x, mut y) = if a.coeffs.len() >= b.coeffs.len() {
        (a.primitive_part().coeffs, b.primitive_part().coeffs)
    } else {
        (b.primitive_part().coeffs, a.primitive_part().coeffs)
    };
    if coprime_mod_prime(&x, &y) {
        return LaurentPoly::one();
    }
    loop {
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            return LaurentPoly::from_coeffs(0, y).primitive_part();
        }
        if r.len() == 1 {
            return LaurentPoly::one();
        }
        x = y;
        y = primitive_vec(r);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        self.add_ref(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self.add_ref(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    #[test]
    fn trims_both_ends() {
        let x = p(-2, &[0, 0, 3, 0, 1, 0]);
        assert_eq!(x.low(), 0);
        assert_eq!(x.high(), 2);
        assert_eq!(x.coeffs().len(), 3);
        assert!(p(3, &[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[-1, 1]);
        assert_eq!(&a * &b, p(0, &[-1, 0, 1]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&p(-1, &[1]) + &p(1, &[2]), p(-1, &[1, 0, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[1, 1]);
        let b = p(0, &[1, 1, 1]);
        let prod = &(&a * &b).shifted(3) * &p(0, &[2]);
        assert_eq!(prod.div_exact(&a), Some((&b * &p(0, &[2])).shifted(3)));
        assert_eq!(p(0, &[1, 0, 1]).div_exact(&a), None);
        assert_eq!(p(0, &[1, 2]).div_exact(&p(0, &[2])), None);
    }

    #[test]
    fn gcd_of_quantum_integers() {
        // [6] and [4] share [2] = 1 + q.
        let six = p(0, &[1; 6]);
        let four = p(0, &[1; 4]);
        assert_eq!(poly_gcd(&six, &four), p(0, &[1, 1]));
        assert_eq!(poly_gcd(&p(0, &[1, 1, 1]), &p(0, &[1, 1])), LaurentPoly::one());
        let a = &p(0, &[2, 2]) * &p(0, &[3, 0, 1]);
        let b = &p(0, &[1, 1]) * &p(0, &[5, 1]);
        assert_eq!(poly_gcd(&a, &b), p(0, &[1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, 1, 1]).to_string(), "q^2 + q + 1");
        assert_eq!(p(-2, &[-1, -1]).to_string(), "-q^-1 - q^-2");
        assert_eq!(p(0, &[0, 3]).to_string(), "3*q");
    }
}
