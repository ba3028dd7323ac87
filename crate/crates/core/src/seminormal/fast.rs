//! Closed recursions for `f_t`: fat hooks, James-Murphy tableaux of
//! arbitrary shapes, and general tableaux through `f_t = e_lambda P_t`.

use crate::error::{Error, Result};
use crate::hecke::{row_ends, row_sum_r, HeckeElement};
use crate::qcoeff::{quantum_int, RationalFunction};
use crate::specht::{SpechtModule, SpechtVector};
use crate::tableaux::{james_murphy_tableau, superstandard, Node, Partition, Permutation, Tableau};

use super::tracked::Tracked;
use super::SeminormalVector;

fn q_times(h: &HeckeElement) -> HeckeElement {
    h.scale(&RationalFunction::q())
}

/// The data behind `P_n` for the James-Murphy tableau of a removable node.
#[derive(Clone, Debug)]
pub struct JamesMurphyFactors {
    pub shape: Partition,
    /// The target node followed by the removable nodes below it.
    pub nodes: Vec<Node>,
    /// `c_j = t^lambda[nodes[j]]`.
    pub c: Vec<usize>,
    /// `r_j` for `j = 1..=N`: content of the target minus content of `nodes[j]`.
    pub r: Vec<i64>,
    /// `F_j` for `j = 0..N`.
    pub f: Vec<HeckeElement>,
    /// `T_{c_j, c_{j+1}} + F_j / [r_{j+1}]`.
    pub factors: Vec<HeckeElement>,
}

impl JamesMurphyFactors {
    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// The product of the factors, `P_n`.
    pub fn p_n(&self) -> Result<HeckeElement> {
        let mut out = HeckeElement::identity(self.n());
        for x in &self.factors {
            out = out.mul(x)?;
        }
        Ok(out)
    }

    pub fn tableau(&self) -> Tableau {
        james_murphy_tableau(&self.shape, self.nodes[0]).expect("target node is removable")
    }
}

pub fn james_murphy_factors(shape: &Partition, node: Node) -> Result<JamesMurphyFactors> {
    if !shape.is_removable(node) {
        return Err(Error::NotRemovable(node.row, node.col));
    }
    let n = shape.n();
    let top = superstandard(shape);
    let nodes: Vec<Node> = shape.removable_nodes().into_iter().filter(|x| x.row >= node.row).collect();
    let c: Vec<usize> = nodes.iter().map(|&x| top.entry(x)).collect();
    let r: Vec<i64> = nodes[1..].iter().map(|x| node.content() - x.content()).collect();
    let mut f = Vec::new();
    let mut factors = Vec::new();
    for j in 0..nodes.len() - 1 {
        let (kj, kn) = (nodes[j].row, nodes[j + 1].row);
        let width = nodes[j + 1].col;
        let mut phi = row_sum_r(shape, kj + 1)?;
        for i in 2..=kn - kj {
            // the i-th step shifts by i-1 rows of the lower block
            let t = HeckeElement::t_range(c[j], c[j] + (i - 1) * width, n);
            phi = t.sub(&q_times(&phi)).mul(&row_sum_r(shape, kj + i)?)?;
        }
        let inv = quantum_int(r[j]).inverse()?;
        factors.push(HeckeElement::t_range(c[j], c[j + 1], n).add(&phi.scale(&inv)));
        f.push(phi);
    }
    Ok(JamesMurphyFactors { shape: shape.clone(), nodes, c, r, f, factors })
}

/// A fast expansion together with bookkeeping about how it was produced.
#[derive(Clone, Debug)]
pub struct FastExpansion {
    pub f: SeminormalVector,
    /// No nonstandard index appeared after any factor.
    pub standard_throughout: bool,
    /// Formal number of `e`-terms after each factor, starting with 1.
    pub term_count_trace: Vec<u128>,
}

/// `f_n` for the James-Murphy tableau of `node`, with its factors.
pub fn general_fn(shape: &Partition, node: Node) -> Result<(FastExpansion, JamesMurphyFactors)> {
    let data = james_murphy_factors(shape, node)?;
    let mut v = Tracked::basis(&superstandard(shape));
    let mut standard = true;
    let mut trace = vec![1];
    for x in &data.factors {
        v = v.act_hecke(x);
        standard &= v.all_standard();
        trace.push(v.total());
    }
    let module = SpechtModule::shared(shape)?;
    let vector = module.straighten(&v.vector)?;
    let f = SeminormalVector::new(data.tableau(), vector)?;
    Ok((FastExpansion { f, standard_throughout: standard, term_count_trace: trace }, data))
}

/// The fat hook recursion for the upper removable node.
#[derive(Clone, Debug)]
pub struct FatHookExpansion {
    pub expansion: FastExpansion,
    /// `F_{k_1+k_2}` in the standard basis.
    pub big_f: SpechtVector<RationalFunction>,
    pub r: i64,
    /// Formal number of `e`-terms generated while expanding `F_{k_1+k_2}`.
    pub fast_terms: u128,
}

pub fn fat_hook_fn(shape: &Partition) -> Result<FatHookExpansion> {
    let n = shape.n();
    let top = superstandard(shape);
    let Some((l1, k1, l2, k2)) = shape.fat_hook_params() else {
        if shape.removable_nodes().len() == 1 {
            let f = SeminormalVector::new(top.clone(), SpechtVector::basis(&top))?;
            let expansion = FastExpansion { f, standard_throughout: true, term_count_trace: vec![1] };
            return Ok(FatHookExpansion { expansion, big_f: SpechtVector::zero(shape), r: 0, fast_terms: 0 });
        }
        return Err(Error::InvalidArgument(format!("{shape} is not a fat hook")));
    };
    let node = Node::new(k1, l1);
    let c = top.entry(node);
    let r = node.content() - Node::new(k1 + k2, l2).content();
    let e = Tracked::basis(&top);
    let mut big = e.act_hecke(&row_sum_r(shape, k1 + 1)?);
    let mut standard = big.all_standard();
    for i in k1 + 2..=k1 + k2 {
        let (a, _) = row_ends(shape, i);
        let mut next = e.act_word(&Permutation::sigma(c, a, n));
        next.add_scaled(&big, &-RationalFunction::q());
        big = next.act_hecke(&row_sum_r(shape, i)?);
        standard &= big.all_standard();
    }
    let mut f = e.act_word(&Permutation::sigma(c, n, n));
    f.add_scaled(&big, &quantum_int(r).inverse()?);
    standard &= f.all_standard();
    let module = SpechtModule::shared(shape)?;
    let vector = module.straighten(&f.vector)?;
    let big_f = module.straighten(&big.vector)?;
    let fn_ = SeminormalVector::new(james_murphy_tableau(shape, node)?, vector)?;
    let expansion = FastExpansion { f: fn_, standard_throughout: standard, term_count_trace: vec![1, f.total()] };
    Ok(FatHookExpansion { expansion, big_f, r, fast_terms: big.total() })
}

/// `P_i` for every `i = n..1`, with `None` where `P_i = 1`.
#[derive(Clone, Debug)]
pub struct GeneralFt {
    pub f: SeminormalVector,
    pub p: Vec<(usize, Option<JamesMurphyFactors>)>,
    /// Number of distinct standard indices after each factor, starting with 1.
    pub term_count_trace: Vec<u128>,
}

impl GeneralFt {
    /// `P_t = P_n ... P_1` as a single element of `H_n`.
    pub fn p_t(&self) -> Result<HeckeElement> {
        let n = self.f.tableau().n();
        let mut out = HeckeElement::identity(n);
        for (_, data) in &self.p {
            if let Some(d) = data {
                out = out.mul(&d.p_n()?.embed(n))?;
            }
        }
        Ok(out)
    }

    /// All `r_j` over all nontrivial `P_i`.
    pub fn predicted_denominators(&self) -> Vec<i64> {
        self.p.iter().filter_map(|(_, d)| d.as_ref()).flat_map(|d| d.r.iter().copied()).collect()
    }
}

/// `f_t = e_lambda P_n P_{n-1} ... P_1`.
pub fn general_ft(t: &Tableau) -> Result<GeneralFt> {
    if !t.is_standard() {
        return Err(Error::InvalidTableau(format!("{t} is not standard")));
    }
    let n = t.n();
    let module = SpechtModule::shared(t.shape())?;
    let mut v = SpechtVector::<RationalFunction>::top(t.shape());
    let mut p = Vec::with_capacity(n);
    let mut trace = vec![1];
    for i in (1..=n).rev() {
        let local = t.t_leq(i, i)?;
        let shape = local.shape().clone();
        let node = local.node_of(i);
        if local == superstandard(&shape) {
            p.push((i, None));
            continue;
        }
        let data = james_murphy_factors(&shape, node)?;
        for x in &data.factors {
            v = module.act_hecke(&v, &x.embed(n))?;
            trace.push(v.len() as u128);
        }
        p.push((i, Some(data)));
    }
    Ok(GeneralFt { f: SeminormalVector::new(t.clone(), v)?, p, term_count_trace: trace })
}
