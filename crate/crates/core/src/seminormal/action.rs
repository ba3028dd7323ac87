//! The action of `T_i` on the seminormal basis and the norms `<f_t, f_t>`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::qcoeff::{quantum_factorial, quantum_int, RationalFunction};
use crate::tableaux::{superstandard, standard_tableaux, Partition, Tableau};

/// `c(i+1) - c(i)` in `t`.
pub fn axial_distance(t: &Tableau, i: usize) -> i64 {
    t.content_of(i + 1) - t.content_of(i)
}

/// Off-diagonal coefficient of `f_s T_i` on `f_t` when `t = s s_i` lies
/// above `s`: `q [rho+1] [rho-1] / [rho]^2`.
pub fn c_up(rho: i64) -> RationalFunction {
    let r = quantum_int(rho);
    let num = &(&RationalFunction::q() * &quantum_int(rho + 1)) * &quantum_int(rho - 1);
    num / (&r * &r)
}

/// Diagonal coefficient `q^a / [a]_q` of `f_t T_i`, with `a` the axial distance.
pub fn diagonal_coeff(a: i64) -> RationalFunction {
    RationalFunction::q_power(a as i32) / quantum_int(a)
}

/// `f_t T_i` as a combination of seminormal vectors.
///
/// Same row gives `q f_t`, same column `-f_t`. Otherwise, with
/// `s = t s_i`: if `s` is lower, `-(1/[rho]) f_t + f_s`; if `s` is higher,
/// `(q^rho/[rho]) f_t + c_up(rho) f_s`.
pub fn seminormal_gen_action(t: &Tableau, i: usize) -> Result<Vec<(Tableau, RationalFunction)>> {
    if i == 0 || i >= t.n() {
        return Err(Error::InvalidArgument(format!("T_{i} does not act on tableaux of size {}", t.n())));
    }
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let a = axial_distance(t, i);
    let mut out = vec![(t.clone(), diagonal_coeff(a))];
    let s = t.swap_values(i);
    if s.is_standard() {
        let off = if a < 0 { RationalFunction::one() } else { c_up(a) };
        out.push((s, off));
    }
    Ok(out)
}

/// `<f_t, f_t>` for every standard `t`, in enumeration order, propagated
/// from `gamma(t^lambda) = prod [lambda_i]!` along descents.
///
/// Each value is reached along every available path; disagreement is
/// reported as an error.
pub fn gamma_recursion(shape: &Partition) -> Result<Vec<(Tableau, RationalFunction)>> {
    let top = superstandard(shape);
    let base = shape.parts().iter().fold(RationalFunction::one(), |acc, &p| &acc * &quantum_factorial(p as u32));
    let mut gamma: HashMap<Tableau, RationalFunction> = HashMap::from([(top.clone(), base)]);
    let mut queue = VecDeque::from([top]);
    while let Some(t) = queue.pop_front() {
        let g = gamma[&t].clone();
        for i in 1..t.n() {
            let a = axial_distance(&t, i);
            if a >= -1 {
                continue;
            }
            let s = t.swap_values(i);
            let value = &g * &c_up(-a);
            match gamma.get(&s) {
                Some(existing) if *existing != value => {
                    return Err(Error::Inconsistent(format!("norm of f[{s}] depends on the path: {existing} vs {value}")));
                }
                Some(_) => {}
                None => {
                    gamma.insert(s.clone(), value);
                    queue.push_back(s);
                }
            }
        }
    }
    standard_tableaux(shape)
        .into_iter()
        .map(|t| {
            let g = gamma
                .remove(&t)
                .ok_or_else(|| Error::Inconsistent(format!("{t} is unreachable from the top tableau")))?;
            Ok((t, g))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one_norms() {
        let g = gamma_recursion(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(g[0].1, quantum_int(2));
        // q [3] [1] / [2]^2 times [2]
        assert_eq!(g[1].1, &(&RationalFunction::q() * &quantum_int(3)) / &quantum_int(2));
    }

    #[test]
    fn same_row_and_column() {
        let t: Tableau = "1,2/3".parse().unwrap();
        assert_eq!(seminormal_gen_action(&t, 1).unwrap(), vec![(t.clone(), RationalFunction::q())]);
        let t: Tableau = "1,3/2".parse().unwrap();
        let act = seminormal_gen_action(&t, 1).unwrap();
        assert_eq!(act, vec![(t.clone(), RationalFunction::from_int(-1))]);
    }

    #[test]
    fn c_up_closed_form() {
        for rho in 2..8 {
            let r = quantum_int(rho);
            let alt = &RationalFunction::q() - &(&RationalFunction::q_power(rho as i32) / &(&r * &r));
            assert_eq!(c_up(rho), alt);
        }
    }
}
