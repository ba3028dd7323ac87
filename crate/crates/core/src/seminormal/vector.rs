use std::fmt;

use crate::error::{Error, Result};
use crate::qcoeff::RationalFunction;
use crate::specht::SpechtVector;
use crate::tableaux::Tableau;

/// A vector known to be `f_t`, stored in the standard basis.
#[derive(Clone, Debug, PartialEq)]
pub struct SeminormalVector {
    tableau: Tableau,
    vector: SpechtVector<RationalFunction>,
}

impl SeminormalVector {
    /// Wraps `v` after checking that it is `e_t` plus terms strictly above `t`.
    pub fn new(t: Tableau, v: SpechtVector<RationalFunction>) -> Result<Self> {
        let out = Self { tableau: t, vector: v };
        if let Some(msg) = out.triangularity_defect() {
            return Err(Error::Inconsistent(msg));
        }
        Ok(out)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn vector(&self) -> &SpechtVector<RationalFunction> {
        &self.vector
    }

    pub fn into_vector(self) -> SpechtVector<RationalFunction> {
        self.vector
    }

    pub fn coeff(&self, s: &Tableau) -> RationalFunction {
        self.vector.coeff(s)
    }

    /// Describes why the unitriangularity law fails, if it does.
    pub fn triangularity_defect(&self) -> Option<String> {
        let t = &self.tableau;
        if self.vector.shape() != t.shape() {
            return Some(format!("vector has shape {} but tableau {t} has shape {}", self.vector.shape(), t.shape()));
        }
        if !self.vector.coeff(t).is_one() {
            return Some(format!("coefficient of e[{t}] is {}", self.vector.coeff(t)));
        }
        for (s, _) in self.vector.iter() {
            if !s.is_standard() {
                return Some(format!("index {s} is not standard"));
            }
            if s != t && !t.dominance_leq(s).unwrap_or(false) {
                return Some(format!("index {s} does not dominate {t}"));
            }
        }
        None
    }
}

impl fmt::Display for SeminormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f[{}] = {}", self.tableau, self.vector)
    }
}
