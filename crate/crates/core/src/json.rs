//! JSON documents emitted by the command line tool.
//!
//! Integer coefficients are decimal strings, so values of any size survive
//! a round trip.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::linalg::Matrix;
use crate::qcoeff::{LaurentPoly, RationalFunction};
use crate::seminormal::{
    denominator_certificate, f_via_stepwise, general_ft, BaseChange, DenominatorCertificate, Method, SeminormalVector,
};
use crate::specht::GramMatrix;
use crate::tableaux::{Partition, Permutation, Tableau};

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(i32, String)> = self.terms().map(|(e, c)| (e, c.to_string())).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<(i32, String)>::deserialize(d)?;
        let terms = terms
            .into_iter()
            .map(|(e, c)| c.parse::<BigInt>().map(|c| (e, c)).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionRepr {
    shift: i32,
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalFunctionRepr { shift: self.shift(), num: self.numerator().clone(), den: self.denominator().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RationalFunctionRepr::deserialize(d)?;
        RationalFunction::from_parts(r.shift, r.num, r.den).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct HeckeTerm {
    perm: Vec<usize>,
    coeff: RationalFunction,
}

impl Serialize for HeckeElement<RationalFunction> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<HeckeTerm> =
            self.iter().map(|(w, c)| HeckeTerm { perm: w.images(), coeff: c.clone() }).collect();
        terms.sort_by(|a, b| a.perm.cmp(&b.perm));
        terms.serialize(s)
    }
}

/// The rank is read off the permutations, so the empty list is rejected.
impl<'de> Deserialize<'de> for HeckeElement<RationalFunction> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<HeckeTerm>::deserialize(d)?;
        let n = terms.first().ok_or_else(|| D::Error::custom("empty Hecke element"))?.perm.len();
        let mut out = HeckeElement::zero(n);
        for t in terms {
            out.add_term(Permutation::from_images(&t.perm).map_err(D::Error::custom)?, t.coeff);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub tableau: Tableau,
    pub coeff: RationalFunction,
}

/// The factors of one nontrivial `P_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub i: usize,
    pub r: Vec<i64>,
    pub factors: Vec<HeckeElement<RationalFunction>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub shape: Partition,
    pub tableau: Tableau,
    pub method: String,
    pub terms: Vec<Term>,
    pub denominators: DenominatorCertificate,
    pub term_count_trace: Vec<u128>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<FactorDoc>,
}

pub fn terms_of(f: &SeminormalVector) -> Vec<Term> {
    f.vector().sorted_terms().into_iter().map(|(t, c)| Term { tableau: t.clone(), coeff: c.clone() }).collect()
}

/// `f_t` by the given method, with its denominator certificate. The
/// predicted `r_j` always come from the factors of `P_t`.
pub fn expansion_doc(t: &Tableau, method: Method) -> Result<ExpansionDoc> {
    let fast = general_ft(t)?;
    let predicted = fast.predicted_denominators();
    let (f, trace) = match method {
        Method::Fast => (fast.f.clone(), fast.term_count_trace.clone()),
        Method::Stepwise => {
            let s = f_via_stepwise(t)?;
            (s.f, s.term_count_trace)
        }
        m => {
            let f = crate::seminormal::f_via(t, m)?;
            let len = f.vector().len() as u128;
            (f, vec![len])
        }
    };
    let factors = if method == Method::Fast {
        fast.p
            .iter()
            .filter_map(|(i, d)| d.as_ref().map(|d| FactorDoc { i: *i, r: d.r.clone(), factors: d.factors.clone() }))
            .collect()
    } else {
        Vec::new()
    };
    Ok(ExpansionDoc {
        shape: t.shape().clone(),
        tableau: t.clone(),
        method: method.name().into(),
        terms: terms_of(&f),
        denominators: denominator_certificate(&f, &predicted)?,
        term_count_trace: trace,
        factors,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub shape: Partition,
    pub order: Vec<Tableau>,
    pub entries: Matrix,
}

impl From<&GramMatrix> for MatrixDoc {
    fn from(g: &GramMatrix) -> Self {
        MatrixDoc { shape: g.shape.clone(), order: g.order.clone(), entries: g.entries.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaseChangeDoc {
    pub shape: Partition,
    pub method: String,
    pub order: Vec<Tableau>,
    pub m: Matrix,
    pub minv: Matrix,
    pub gammas: Vec<RationalFunction>,
}

impl BaseChangeDoc {
    pub fn new(bc: &BaseChange, method: Method) -> Self {
        BaseChangeDoc {
            shape: bc.shape.clone(),
            method: method.name().into(),
            order: bc.order.clone(),
            m: bc.m.clone(),
            minv: bc.minv.clone(),
            gammas: bc.gammas.clone(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Json(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_function_format() {
        let x = &RationalFunction::q() / &crate::qcoeff::quantum_int(3);
        let s = serde_json::to_string(&-x.clone()).unwrap();
        assert_eq!(s, r#"{"shift":1,"num":[[0,"-1"]],"den":[[0,"1"],[1,"1"],[2,"1"]]}"#);
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, -x);
    }

    #[test]
    fn hecke_round_trip() {
        let h = HeckeElement::<RationalFunction>::t_range(1, 3, 3).add(&HeckeElement::identity(3).scale(&RationalFunction::q()));
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(serde_json::from_str::<HeckeElement<RationalFunction>>(&s).unwrap(), h);
    }

    #[test]
    fn expansions_round_trip() {
        let t: Tableau = "1,4,5/2/3".parse().unwrap();
        for m in Method::ALL {
            let doc = expansion_doc(&t, m).unwrap();
            let s = to_json(&doc).unwrap();
            let back: ExpansionDoc = serde_json::from_str(&s).unwrap();
            assert_eq!(back, doc);
            assert_eq!(to_json(&back).unwrap(), s);
        }
    }
}
