//! Recovering the coefficients of `f_t T_i` directly from the projector
//! construction, with no assumption on their form.

use crate::error::{Error, Result};
use crate::qcoeff::{quantum_int, RationalFunction};
use crate::specht::SpechtModule;
use crate::tableaux::{partitions_of, standard_tableaux, Tableau};

use super::action::axial_distance;
use super::projector::f_via_projector;

/// `f_t T_i = alpha f_t + beta f_s` with `s = t s_i` above `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct AscentInstance {
    pub tableau: Tableau,
    pub i: usize,
    /// `c(i+1) - c(i) > 0`.
    pub rho: i64,
    pub alpha: RationalFunction,
    pub beta: RationalFunction,
}

/// Every `(t, i)` with `t s_i` standard and above `t`, for `|t| <= max_n`.
pub fn ascent_pairs(max_n: usize) -> Vec<(Tableau, usize)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for shape in partitions_of(n) {
            for t in standard_tableaux(&shape) {
                for i in 1..n {
                    if axial_distance(&t, i) > 0 && t.swap_values(i).is_standard() {
                        out.push((t.clone(), i));
                    }
                }
            }
        }
    }
    out
}

/// Reads `alpha` off the `e_t` coordinate and `beta` off the `e_s`
/// coordinate of the remainder, then checks the whole vector identity.
pub fn derive_ascent(t: &Tableau, i: usize) -> Result<AscentInstance> {
    let rho = axial_distance(t, i);
    let s = t.swap_values(i);
    if rho <= 0 || !s.is_standard() {
        return Err(Error::InvalidArgument(format!("s_{i} is not an ascent of {t}")));
    }
    let module = SpechtModule::shared(t.shape())?;
    let ft = f_via_projector(t)?;
    let fs = f_via_projector(&s)?;
    let image = module.act_gen(ft.vector(), i)?;
    let alpha = image.coeff(t);
    let mut rest = image.clone();
    rest.add_scaled(ft.vector(), &-alpha.clone());
    let beta = rest.coeff(&s);
    if rest != fs.vector().scale(&beta) {
        return Err(Error::Inconsistent(format!("f[{t}] T_{i} is not in the span of f[{t}] and f[{s}]")));
    }
    Ok(AscentInstance { tableau: t.clone(), i, rho, alpha, beta })
}

/// `q^a [rho+b] [rho+c] / [rho]^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CupForm {
    pub a: i32,
    pub b: i64,
    pub c: i64,
}

impl CupForm {
    pub fn eval(&self, rho: i64) -> RationalFunction {
        let r = quantum_int(rho);
        let num = &quantum_int(rho + self.b) * &quantum_int(rho + self.c);
        (&num * &RationalFunction::q_power(self.a)) / (&r * &r)
    }
}

impl std::fmt::Display for CupForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let br = |k: i64| match k {
            0 => "[rho]".to_string(),
            k if k > 0 => format!("[rho+{k}]"),
            k => format!("[rho{k}]"),
        };
        write!(f, "q^{} {}{} / [rho]^2", self.a, br(self.b), br(self.c))
    }
}

/// Members of the family `q^a [rho+b][rho+c]/[rho]^2`, `a in -1..=2`,
/// `-2 <= b <= c <= 2`, that reproduce every observed `beta`.
pub fn fit_c_up(instances: &[AscentInstance]) -> Vec<CupForm> {
    let mut out = Vec::new();
    for a in -1..=2 {
        for b in -2..=2 {
            for c in b..=2 {
                let form = CupForm { a, b, c };
                if instances.iter().all(|x| form.eval(x.rho) == x.beta) {
                    out.push(form);
                }
            }
        }
    }
    out
}
