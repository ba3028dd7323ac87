//! Exact coefficient arithmetic: Laurent polynomials, rational functions in
//! `q`, cyclotomic polynomials and the fields `Q(zeta_e)`.

mod cyclotomic;
mod field;
mod laurent;
mod ratfunc;
mod scalar;

pub use cyclotomic::{cyclotomic_poly, factor_cyclotomic, totient, CyclotomicFactorization, CyclotomicOutcome};
pub use field::{
    is_pole_free, rank, reduce_in, reduce_mod_cyclotomic, solve_left, CyclotomicField,
    CyclotomicFieldElement,
};
pub use laurent::LaurentPoly;
pub use ratfunc::{quantum_factorial, quantum_int, RationalFunction};
pub use scalar::Scalar;
