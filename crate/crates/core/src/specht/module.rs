//! The Specht module `S^lambda` with its standard basis and cached action
//! matrices.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::action::gen_on_tableau;
use super::straighten::Straightener;
use super::vector::SpechtVector;
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::qcoeff::{LaurentPoly, Scalar};
use crate::tableaux::{standard_tableaux, Partition, Permutation, Tableau};

/// Row `k` holds the coordinates of `e_{t_k} X` in the standard basis.
pub type SparseMatrix = Vec<Vec<(usize, LaurentPoly)>>;

const DEFAULT_MAX_DIM: u128 = 5000;

/// Dimension cap, overridable through `SEMINORMAL_MAX_DIM`.
pub fn max_dim() -> u128 {
    std::env::var("SEMINORMAL_MAX_DIM").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

pub struct SpechtModule {
    shape: Partition,
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    straightener: Straightener,
    gens: OnceLock<Vec<SparseMatrix>>,
    jm: OnceLock<Vec<SparseMatrix>>,
}

impl std::fmt::Debug for SpechtModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpechtModule").field("shape", &self.shape).field("dim", &self.basis.len()).finish()
    }
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Result<Self> {
        let dim = shape.num_standard();
        let limit = max_dim();
        if dim > limit {
            return Err(Error::DimensionLimit { dim: dim as usize, limit: limit as usize });
        }
        let basis = standard_tableaux(shape);
        let index = basis.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        Ok(Self {
            shape: shape.clone(),
            basis,
            index,
            straightener: Straightener::new(),
            gens: OnceLock::new(),
            jm: OnceLock::new(),
        })
    }

    /// Process-wide instance per shape, so caches are shared.
    pub fn shared(shape: &Partition) -> Result<Arc<Self>> {
        static REGISTRY: OnceLock<Mutex<HashMap<Partition, Arc<SpechtModule>>>> = OnceLock::new();
        let reg = REGISTRY.get_or_init(Default::default);
        if let Some(m) = reg.lock().expect("registry lock").get(shape) {
            return Ok(m.clone());
        }
        let m = Arc::new(Self::new(shape)?);
        Ok(reg.lock().expect("registry lock").entry(shape.clone()).or_insert(m).clone())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Standard tableaux, most dominant first.
    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    fn check_shape<C: Scalar>(&self, v: &SpechtVector<C>) -> Result<()> {
        if v.shape() != &self.shape {
            return Err(Error::ShapeMismatch(v.shape().to_string(), self.shape.to_string()));
        }
        Ok(())
    }

    /// `e_u` in the standard basis, for row-standard `u`.
    pub fn straighten_tableau(&self, u: &Tableau) -> Result<Arc<Vec<(Tableau, LaurentPoly)>>> {
        if u.shape() != &self.shape {
            return Err(Error::ShapeMismatch(u.shape().to_string(), self.shape.to_string()));
        }
        self.straightener.straighten(u)
    }

    /// Rewrites every row-standard index in the standard basis.
    pub fn straighten<C: Scalar>(&self, v: &SpechtVector<C>) -> Result<SpechtVector<C>> {
        self.check_shape(v)?;
        let mut out = SpechtVector::zero(&self.shape);
        for (u, c) in v.iter() {
            if self.index.contains_key(u) {
                out.add_term(u.clone(), c.clone());
                continue;
            }
            for (t, x) in self.straightener.straighten(u)?.iter() {
                out.add_term(t.clone(), c.times(&C::from_laurent(x.clone())));
            }
        }
        Ok(out)
    }

    /// Matrix of `T_i`, `1 <= i < n`.
    pub fn gen_matrix(&self, i: usize) -> &SparseMatrix {
        assert!(i >= 1 && i < self.n(), "generator index {i} out of range");
        &self.gens.get_or_init(|| (1..self.n()).map(|i| self.build_gen(i)).collect())[i - 1]
    }

    fn build_gen(&self, i: usize) -> SparseMatrix {
        self.basis
            .iter()
            .map(|t| {
                let mut row: HashMap<usize, LaurentPoly> = HashMap::new();
                for (u, c) in gen_on_tableau(t, i) {
                    let terms = self.straightener.straighten(&u).expect("images stay row-standard");
                    for (s, x) in terms.iter() {
                        let e = row.entry(self.index[s]).or_insert_with(LaurentPoly::zero);
                        *e = &*e + &(&c * x);
                    }
                }
                let mut row: Vec<_> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                row.sort_by_key(|(k, _)| *k);
                row
            })
            .collect()
    }

    /// Matrix of the Jucys-Murphy element `L_m`, `1 <= m <= n`.
    pub fn jm_matrix(&self, m: usize) -> &SparseMatrix {
        assert!(m >= 1 && m <= self.n(), "Jucys-Murphy index {m} out of range");
        &self.jm.get_or_init(|| (1..=self.n()).map(|m| self.build_jm(m)).collect())[m - 1]
    }

    fn build_jm(&self, m: usize) -> SparseMatrix {
        let n = self.n();
        self.basis
            .iter()
            .map(|t| {
                let e = SpechtVector::<LaurentPoly>::basis(t);
                let mut acc = SpechtVector::zero(&self.shape);
                for k in 1..m {
                    let w = Permutation::transposition(m - k, m, n);
                    acc.add_scaled(&self.word_unchecked(&e, &w), &LaurentPoly::q_power(-(k as i32)));
                }
                let mut row: Vec<_> = acc.iter().map(|(s, c)| (self.index[s], c.clone())).collect();
                row.sort_by_key(|(k, _)| *k);
                row
            })
            .collect()
    }

    /// `v X` for a cached matrix `X`; `v` must be standard.
    pub fn apply_matrix<C: Scalar>(&self, v: &SpechtVector<C>, mat: &SparseMatrix) -> SpechtVector<C> {
        let mut out = SpechtVector::zero(&self.shape);
        for (t, c) in v.iter() {
            let k = self.index[t];
            for (j, x) in &mat[k] {
                out.add_term(self.basis[*j].clone(), c.times(&C::from_laurent(x.clone())));
            }
        }
        out
    }

    fn standardised<C: Scalar>(&self, v: &SpechtVector<C>) -> Result<SpechtVector<C>> {
        if v.is_standard() {
            self.check_shape(v)?;
            Ok(v.clone())
        } else {
            self.straighten(v)
        }
    }

    /// `v T_i` in the standard basis.
    pub fn act_gen<C: Scalar>(&self, v: &SpechtVector<C>, i: usize) -> Result<SpechtVector<C>> {
        if i == 0 || i >= self.n() {
            return Err(Error::InvalidArgument(format!("generator T_{i} does not act on a module of rank {}", self.n())));
        }
        let v = self.standardised(v)?;
        Ok(self.apply_matrix(&v, self.gen_matrix(i)))
    }

    fn word_unchecked<C: Scalar>(&self, v: &SpechtVector<C>, w: &Permutation) -> SpechtVector<C> {
        w.reduced_word().into_iter().fold(v.clone(), |acc, i| self.apply_matrix(&acc, self.gen_matrix(i)))
    }

    /// `v T_w`.
    pub fn act_word<C: Scalar>(&self, v: &SpechtVector<C>, w: &Permutation) -> Result<SpechtVector<C>> {
        if w.n() > self.n() {
            return Err(Error::SizeMismatch(w.n(), self.n()));
        }
        let v = self.standardised(v)?;
        Ok(self.word_unchecked(&v, w))
    }

    /// `v h` for `h` in `H_m`, `m <= n`.
    pub fn act_hecke<C: Scalar>(&self, v: &SpechtVector<C>, h: &HeckeElement<C>) -> Result<SpechtVector<C>> {
        if h.n() > self.n() {
            return Err(Error::SizeMismatch(h.n(), self.n()));
        }
        let v = self.standardised(v)?;
        let mut out = SpechtVector::zero(&self.shape);
        for (w, c) in h.iter() {
            out.add_scaled(&self.word_unchecked(&v, w), c);
        }
        Ok(out)
    }

    /// `v L_m`.
    pub fn jm_action<C: Scalar>(&self, v: &SpechtVector<C>, m: usize) -> Result<SpechtVector<C>> {
        if m == 0 || m > self.n() {
            return Err(Error::InvalidArgument(format!("L_{m} does not act on a module of rank {}", self.n())));
        }
        let v = self.standardised(v)?;
        Ok(self.apply_matrix(&v, self.jm_matrix(m)))
    }

    /// Coordinates in basis order.
    pub fn to_dense<C: Scalar>(&self, v: &SpechtVector<C>) -> Result<Vec<C>> {
        let v = self.standardised(v)?;
        let mut out = vec![C::zero(); self.dim()];
        for (t, c) in v.iter() {
            out[self.index[t]] = c.clone();
        }
        Ok(out)
    }

    pub fn from_dense<C: Scalar>(&self, coords: &[C]) -> SpechtVector<C> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector has the wrong length");
        SpechtVector::from_terms(&self.shape, self.basis.iter().cloned().zip(coords.iter().cloned()))
    }
}
