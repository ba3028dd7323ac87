//! Cyclotomic polynomials and detection of cyclotomic products.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

fn cache() -> &'static Mutex<HashMap<u32, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Euler's totient.
pub fn totient(mut d: u32) -> u32 {
    let mut out = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if d > 1 {
        out -= out / d;
    }
    out
}

/// The `d`-th cyclotomic polynomial `Phi_d(q)`.
pub fn cyclotomic_poly(d: u32) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().expect("cyclotomic cache poisoned").get(&d) {
        return p.clone();
    }
    // q^d - 1 = prod_{k | d} Phi_k
    let mut coeffs = vec![BigInt::zero(); d as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[d as usize] = BigInt::one();
    let mut p = LaurentPoly::from_coeffs(0, coeffs);
    for k in (1..d).filter(|k| d.is_multiple_of(*k)) {
        p = p.div_exact(&cyclotomic_poly(k)).expect("Phi_k divides q^d - 1");
    }
    cache().lock().expect("cyclotomic cache poisoned").insert(d, p.clone());
    p
}

/// `unit * q^qpower * prod Phi_d^mult`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicFactorization {
    #[serde(with = "rational_string")]
    pub unit: BigRational,
    pub qpower: i32,
    /// `(d, multiplicity)` with `d` increasing.
    pub factors: Vec<(u32, u32)>,
}

impl CyclotomicFactorization {
    pub fn reassemble(&self) -> LaurentPoly {
        let mut p = LaurentPoly::q_power(self.qpower);
        for &(d, m) in &self.factors {
            p = &p * &cyclotomic_poly(d).pow(m);
        }
        assert!(self.unit.is_integer(), "reassembly needs an integral unit");
        p.scale(self.unit.numer())
    }

    /// True when every factor here also appears in `other` with at least
    /// the same multiplicity.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|&(d, m)| {
            other.factors.iter().any(|&(d2, m2)| d2 == d && m2 >= m)
        })
    }
}

/// Result of attempting a cyclotomic factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclotomicOutcome {
    Product(CyclotomicFactorization),
    /// The input is not a unit times a product of cyclotomics; carries the
    /// cofactor left after removing every cyclotomic divisor.
    NotProductOfCyclotomics(LaurentPoly),
}

/// Factors `p` as a rational unit, a power of `q`, and cyclotomic
/// polynomials `Phi_d` with `d >= 1`.
pub fn factor_cyclotomic(p: &LaurentPoly) -> Result<CyclotomicOutcome> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let (qpower, poly) = p.split_q_power();
    let content = poly.content();
    let mut rem = poly.div_scalar_exact(&content);
    let mut unit = content;
    if rem.leading_coeff().is_some_and(Signed::is_negative) {
        rem = -rem;
        unit = -unit;
    }
    let lc_unit = rem.leading_coeff().is_some_and(One::is_one);
    let c0_unit = rem.coeff(0).abs().is_one();
    if !(lc_unit && c0_unit) {
        return Ok(CyclotomicOutcome::NotProductOfCyclotomics(rem));
    }
    let mut factors = Vec::new();
    let deg = rem.span() as u32;
    // phi(d) >= sqrt(d / 2), so no Phi_d of degree <= deg has d > 2 deg^2.
    let bound = 2 * deg * deg + 2;
    let mut d = 1;
    while rem.span() > 0 && d <= bound {
        if totient(d) as usize <= rem.span() {
            let phi = cyclotomic_poly(d);
            let mut mult = 0;
            while let Some((quot, r)) = rem.div_rem_monic(&phi) {
                if !r.is_zero() {
                    break;
                }
                rem = quot;
                mult += 1;
            }
            if mult > 0 {
                factors.push((d, mult));
            }
        }
        d += 1;
    }
    if rem.span() > 0 {
        return Ok(CyclotomicOutcome::NotProductOfCyclotomics(rem));
    }
    let unit = unit * rem.coeff(0);
    Ok(CyclotomicOutcome::Product(CyclotomicFactorization {
        unit: BigRational::from_integer(unit),
        qpower,
        factors,
    }))
}

mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::quantum_int;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(0, c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), lp(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3), lp(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), lp(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), lp(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(15).span(), 8);
    }

    #[test]
    fn quantum_six() {
        let six = quantum_int(6).numerator().clone();
        let CyclotomicOutcome::Product(f) = factor_cyclotomic(&six).unwrap() else {
            panic!("[6] is cyclotomic");
        };
        assert_eq!(f.factors, vec![(2, 1), (3, 1), (6, 1)]);
        assert_eq!(f.reassemble(), six);
    }

    #[test]
    fn pure_q_power_and_rejections() {
        let CyclotomicOutcome::Product(f) = factor_cyclotomic(&LaurentPoly::q_power(3)).unwrap() else {
            panic!()
        };
        assert_eq!(f.qpower, 3);
        assert!(f.factors.is_empty());
        assert!(matches!(
            factor_cyclotomic(&lp(&[2, 0, 1])).unwrap(),
            CyclotomicOutcome::NotProductOfCyclotomics(_)
        ));
        assert!(factor_cyclotomic(&LaurentPoly::zero()).is_err());
        let scaled = &lp(&[-3]) * &lp(&[-1, 0, 1]);
        let CyclotomicOutcome::Product(f) = factor_cyclotomic(&scaled).unwrap() else { panic!() };
        assert_eq!(f.factors, vec![(1, 1), (2, 1)]);
        assert_eq!(f.reassemble(), scaled);
    }
}
