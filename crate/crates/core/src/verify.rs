//! Exhaustive consistency checks over all shapes up to a given size.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::MurphyOracle;
use crate::linalg;
use crate::modular::{branching_filtration, radical_rank, verify_submodule_fn, verify_submodule_tleq, Verdict};
use crate::qcoeff::{quantum_int, LaurentPoly, RationalFunction};
use crate::seminormal::{
    ascent_pairs, base_change, c_up, derive_ascent, diagonal_coeff, fit_c_up, AscentInstance, certificate_for_node, certificate_for_tableau, f_via_projector, f_via_stepwise, gamma_recursion,
    general_ft, Method,
};
use crate::specht::{invariant_gram_matrix, SpechtModule, SpechtVector};
use crate::tableaux::{partitions_of, standard_tableaux, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Agreement,
    Eigen,
    Orthogonality,
    Denominators,
    Representation,
    Modular,
    Coefficients,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Agreement,
        Suite::Eigen,
        Suite::Orthogonality,
        Suite::Denominators,
        Suite::Representation,
        Suite::Modular,
        Suite::Coefficients,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Agreement => "agreement",
            Suite::Eigen => "eigen",
            Suite::Orthogonality => "orthogonality",
            Suite::Denominators => "denominators",
            Suite::Representation => "representation",
            Suite::Modular => "modular",
            Suite::Coefficients => "coefficients",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_n: usize,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, max_n: usize) -> Self {
        SuiteReport { suite: suite.name().into(), max_n, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn merge(mut self, other: SuiteReport) -> Self {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs one suite; `seed` drives the random sample of the coefficient suite.
pub fn run_suite(suite: Suite, max_n: usize, seed: u64) -> Result<SuiteReport> {
    match suite {
        Suite::Agreement => agreement(max_n),
        Suite::Eigen => eigen(max_n),
        Suite::Orthogonality => orthogonality(max_n),
        Suite::Denominators => denominators(max_n),
        Suite::Representation => representation(max_n, max_n.min(crate::hecke::MAX_ORACLE_N)),
        Suite::Modular => modular(max_n, &[2, 3, 4, 5]),
        Suite::Coefficients => coefficients(max_n.min(5), max_n, 100, seed),
    }
}

fn shapes_up_to(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(partitions_of).collect()
}

/// Runs `f` on every shape in parallel and combines the reports in order.
fn per_shape(suite: Suite, max_n: usize, f: impl Fn(&Partition, &mut SuiteReport) -> Result<()> + Sync) -> Result<SuiteReport> {
    let parts: Vec<SuiteReport> = shapes_up_to(max_n)
        .par_iter()
        .map(|shape| {
            let mut r = SuiteReport::new(suite, max_n);
            f(shape, &mut r)?;
            Ok(r)
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().fold(SuiteReport::new(suite, max_n), SuiteReport::merge))
}

/// Projector, stepwise, fast and Gram-Schmidt give the same `f_t`.
pub fn agreement(max_n: usize) -> Result<SuiteReport> {
    per_shape(Suite::Agreement, max_n, |shape, r| {
        let gs = base_change(shape, Method::GramSchmidt)?;
        for (k, t) in standard_tableaux(shape).iter().enumerate() {
            let p = f_via_projector(t)?;
            r.check(p == f_via_stepwise(t)?.f, || format!("stepwise differs at {t}"));
            r.check(p == general_ft(t)?.f, || format!("fast differs at {t}"));
            r.check(p == gs.f(k), || format!("gram-schmidt differs at {t}"));
        }
        Ok(())
    })
}

/// `f_t L_m = [c_t(m)] f_t` and unitriangularity along every route.
pub fn eigen(max_n: usize) -> Result<SuiteReport> {
    per_shape(Suite::Eigen, max_n, |shape, r| {
        let module = SpechtModule::shared(shape)?;
        for t in standard_tableaux(shape) {
            let f = general_ft(&t)?.f;
            for m in 1..=t.n() {
                let lhs = module.jm_action(f.vector(), m)?;
                let rhs = f.vector().scale(&quantum_int(t.content_of(m)));
                r.check(lhs == rhs, || format!("f[{t}] L_{m} is not [{}] f[{t}]", t.content_of(m)));
            }
            for g in [f, f_via_projector(&t)?, f_via_stepwise(&t)?.f] {
                r.check(g.triangularity_defect().is_none(), || format!("f[{t}] is not unitriangular"));
            }
        }
        Ok(())
    })
}

/// `<f_s, f_t> = delta gamma_t` and `<f_t, e_s> = 0` for `s` above `t`,
/// against the form computed from its definition.
pub fn orthogonality(max_n: usize) -> Result<SuiteReport> {
    per_shape(Suite::Orthogonality, max_n, |shape, r| {
        let g = invariant_gram_matrix(shape)?;
        let bc = base_change(shape, Method::Fast)?;
        let mg = linalg::mul(&bc.m, &g.entries);
        let mgm = linalg::mul(&mg, &linalg::transpose(&bc.m));
        let gammas = gamma_recursion(shape)?;
        let d = bc.dim();
        for a in 0..d {
            for b in 0..d {
                let want = if a == b { gammas[a].1.clone() } else { RationalFunction::zero() };
                r.check(mgm[a][b] == want, || format!("<f[{}], f[{}]> = {}", bc.order[a], bc.order[b], mgm[a][b]));
            }
            for b in 0..a {
                r.check(mg[a][b].is_zero(), || format!("<f[{}], e[{}]> = {}", bc.order[a], bc.order[b], mg[a][b]));
            }
        }
        Ok(())
    })
}

/// Every removable node: `prod [r_j] f_n` is Laurent and all denominators
/// are cyclotomic products dividing `prod [r_j]`. The same for all `t`.
pub fn denominators(max_n: usize) -> Result<SuiteReport> {
    per_shape(Suite::Denominators, max_n, |shape, r| {
        for node in shape.removable_nodes() {
            let c = certificate_for_node(shape, node)?;
            r.check(c.cleared, || format!("{shape} node {node}: denominators not cleared by {:?}", c.predicted_r));
            r.check(c.divides && c.non_cyclotomic.is_empty(), || format!("{shape} node {node}: lcm {:?} vs {:?}", c.lcm, c.predicted));
        }
        for t in standard_tableaux(shape) {
            let c = certificate_for_tableau(&t)?;
            r.check(c.cleared && c.divides, || format!("{t}: lcm {:?} vs {:?}", c.lcm, c.predicted));
        }
        Ok(())
    })
}

type PolyMatrix = Vec<Vec<LaurentPoly>>;

fn dense_gen(module: &SpechtModule, i: usize) -> PolyMatrix {
    let d = module.dim();
    module
        .gen_matrix(i)
        .iter()
        .map(|row| {
            let mut out = vec![LaurentPoly::zero(); d];
            for (k, c) in row {
                out[*k] = c.clone();
            }
            out
        })
        .collect()
}

fn pmul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let d = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![LaurentPoly::zero(); d];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    if !y.is_zero() {
                        *o = &*o + &(x * y);
                    }
                }
            }
            out
        })
        .collect()
}

fn at_one(a: &PolyMatrix) -> Vec<Vec<num_bigint::BigInt>> {
    a.iter().map(|row| row.iter().map(LaurentPoly::eval_one).collect()).collect()
}

fn imul(a: &[Vec<num_bigint::BigInt>], b: &[Vec<num_bigint::BigInt>]) -> Vec<Vec<num_bigint::BigInt>> {
    a.iter()
        .map(|row| (0..b.len()).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect())
        .collect()
}

/// Braid, commutation and quadratic relations; at `q = 1` the Coxeter
/// relations of `S_n`; agreement with the Murphy basis for `n <= oracle_n`.
pub fn representation(max_n: usize, oracle_n: usize) -> Result<SuiteReport> {
    let oracles: Vec<MurphyOracle> = (1..=oracle_n.min(max_n)).map(MurphyOracle::new).collect::<Result<_>>()?;
    per_shape(Suite::Representation, max_n, |shape, r| {
        let module = SpechtModule::shared(shape)?;
        let n = shape.n();
        let d = module.dim();
        let gens: Vec<PolyMatrix> = (1..n).map(|i| dense_gen(&module, i)).collect();
        let id: PolyMatrix = (0..d).map(|a| (0..d).map(|b| if a == b { LaurentPoly::one() } else { LaurentPoly::zero() }).collect()).collect();
        let q = LaurentPoly::q_power(1);
        for (a, ta) in gens.iter().enumerate() {
            let i = a + 1;
            // (T - q)(T + 1) = T^2 - (q - 1) T - q
            let t2 = pmul(ta, ta);
            let quad = (0..d).all(|x| {
                (0..d).all(|y| {
                    let want = &(&(&q - &LaurentPoly::one()) * &ta[x][y]) + &(&q * &id[x][y]);
                    t2[x][y] == want
                })
            });
            r.check(quad, || format!("{shape}: T_{i} fails the quadratic relation"));
            let s = at_one(ta);
            let s2 = imul(&s, &s);
            r.check((0..d).all(|x| (0..d).all(|y| s2[x][y] == num_bigint::BigInt::from((x == y) as i32))), || {
                format!("{shape}: s_{i} is not an involution at q = 1")
            });
            for (b, tb) in gens.iter().enumerate().skip(a + 1) {
                let j = b + 1;
                if j == i + 1 {
                    let lhs = pmul(&pmul(ta, tb), ta);
                    let rhs = pmul(&pmul(tb, ta), tb);
                    r.check(lhs == rhs, || format!("{shape}: braid relation fails for T_{i}, T_{j}"));
                    let sb = at_one(tb);
                    r.check(imul(&imul(&s, &sb), &s) == imul(&imul(&sb, &s), &sb), || format!("{shape}: braid fails at q = 1 for s_{i}, s_{j}"));
                } else {
                    r.check(pmul(ta, tb) == pmul(tb, ta), || format!("{shape}: T_{i} and T_{j} do not commute"));
                    let sb = at_one(tb);
                    r.check(imul(&s, &sb) == imul(&sb, &s), || format!("{shape}: s_{i} and s_{j} do not commute at q = 1"));
                }
            }
        }
        if let Some(oracle) = oracles.get(n - 1) {
            for t in module.basis() {
                for i in 1..n {
                    let got = module.act_gen(&SpechtVector::<LaurentPoly>::basis(t), i)?;
                    let want = SpechtVector::from_terms(shape, oracle.specht_action(t, i));
                    r.check(got == want, || format!("e[{t}] T_{i} differs from the Murphy basis"));
                }
            }
        }
        Ok(())
    })
}

/// Filtration closure, Gram entries free of poles, every case of the
/// submodule theorem for `f_n` whose hypothesis holds, and the generated
/// submodules `f_{t<=} H_{r-1}` for every `t`, `r` at `n <= 5`.
pub fn modular(max_n: usize, es: &[u32]) -> Result<SuiteReport> {
    per_shape(Suite::Modular, max_n, |shape, r| {
        let n = shape.n();
        let filtration = branching_filtration(shape)?;
        r.check(filtration.closed, || format!("{shape}: filtration is not stable"));
        let expected: Vec<usize> = filtration.quotient_shapes.iter().map(|m| m.num_standard() as usize).collect();
        r.check(filtration.quotient_dims() == expected, || format!("{shape}: layer dimensions {:?}", filtration.quotient_dims()));
        let gram = invariant_gram_matrix(shape)?;
        r.check(gram.entries.iter().flatten().all(RationalFunction::is_laurent), || format!("{shape}: Gram entry with a pole"));
        for &e in es {
            radical_rank(shape, e)?;
            for j in 1..=filtration.nodes.len() {
                let rep = verify_submodule_fn(shape, j, e)?;
                r.check(rep.verdict != Verdict::Refuted, || format!("{shape} node {} e={e}: submodule check refuted", rep.node));
                if rep.verdict == Verdict::Confirmed && n >= 2 {
                    let t = crate::tableaux::james_murphy_tableau(shape, rep.node)?;
                    let other = verify_submodule_tleq(&t, n, e)?;
                    r.check(other == rep, || format!("{shape} node {} e={e}: r = n report differs", rep.node));
                }
            }
            if n <= 5 {
                for t in standard_tableaux(shape) {
                    for rr in 2..=n {
                        let rep = verify_submodule_tleq(&t, rr, e)?;
                        r.check(rep.verdict != Verdict::Refuted, || format!("{t} r={rr} e={e}: refuted"));
                    }
                }
            }
        }
        Ok(())
    })
}

/// Derives the coefficients of `f_t T_i` on every ascent with `n <= fit_n`,
/// fits the off-diagonal one to a closed form, and checks the fit on
/// `samples` random ascents with `n <= max_n`.
pub fn coefficients(fit_n: usize, max_n: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Coefficients, max_n);
    let fit_pairs = ascent_pairs(fit_n);
    if fit_pairs.is_empty() {
        return Ok(r);
    }
    let instances: Vec<AscentInstance> = fit_pairs.par_iter().map(|(t, i)| derive_ascent(t, *i)).collect::<Result<_>>()?;
    for x in &instances {
        r.check(x.alpha == diagonal_coeff(x.rho), || format!("f[{}] T_{}: diagonal {}", x.tableau, x.i, x.alpha));
    }
    let fits = fit_c_up(&instances);
    r.check(fits.len() == 1, || format!("{} closed forms fit {} instances", fits.len(), instances.len()));
    let Some(form) = fits.first().copied() else {
        return Ok(r);
    };
    r.check((1..=12).all(|rho| form.eval(rho) == c_up(rho)), || format!("fitted form {form} differs from c_up"));
    let pool = ascent_pairs(max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<&(crate::tableaux::Tableau, usize)> = (0..samples).map(|_| &pool[rng.gen_range(0..pool.len())]).collect();
    let checked: Vec<AscentInstance> = sample.par_iter().map(|(t, i)| derive_ascent(t, *i)).collect::<Result<_>>()?;
    for x in &checked {
        r.check(x.beta == form.eval(x.rho) && x.alpha == diagonal_coeff(x.rho), || {
            format!("f[{}] T_{}: coefficients ({}, {})", x.tableau, x.i, x.alpha, x.beta)
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_four() {
        for s in Suite::ALL {
            let r = run_suite(s, 4, 0).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.failures);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn trivial_size_is_vacuous() {
        for s in Suite::ALL {
            assert!(run_suite(s, 1, 0).unwrap().passed());
        }
    }
}
