use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::pathalg::{FiniteDimAlgebra, Path};

/// A finite-dimensional right `Π`-module.
///
/// `actions[a]` is the matrix of `m ↦ m·a` for the arrow `a : j → i`; it
/// maps the vertex-`i` space to the vertex-`j` space, so its shape is
/// `dims[j] × dims[i]`. A path `a_1 ⋯ a_k` acts by `A_{a_k} ⋯ A_{a_1}`.
#[derive(Debug, Clone)]
pub struct ModuleRep<E> {
    dims: Vec<usize>,
    actions: Vec<Matrix<E>>,
    presentation: OnceLock<Arc<Presentation<E>>>,
}

impl<E: Clone + PartialEq> PartialEq for ModuleRep<E> {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.actions == other.actions
    }
}

impl<E: Clone> ModuleRep<E> {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, k: usize) -> usize {
        self.dims[k]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, a: usize) -> &Matrix<E> {
        &self.actions[a]
    }

    pub fn actions(&self) -> &[Matrix<E>] {
        &self.actions
    }

    /// Offset of the vertex-`k` block in the total space.
    pub fn offset(&self, k: usize) -> usize {
        self.dims[..k].iter().sum()
    }

    pub(crate) fn cached_presentation(&self) -> Option<Arc<Presentation<E>>> {
        self.presentation.get().cloned()
    }

    pub(crate) fn cache_presentation(&self, p: Arc<Presentation<E>>) {
        let _ = self.presentation.set(p);
    }
}

/// A module map, one matrix per vertex (`dim N_k × dim M_k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism<E> {
    pub blocks: Vec<Matrix<E>>,
}

impl<E: Clone> Morphism<E> {
    pub fn zero<F: Field<Elem = E>>(f: &F, from: &ModuleRep<E>, to: &ModuleRep<E>) -> Self {
        Morphism {
            blocks: (0..from.dims.len())
                .map(|k| Matrix::zeros(f, to.dims[k], from.dims[k]))
                .collect(),
        }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, m: &ModuleRep<E>) -> Self {
        Morphism {
            blocks: m.dims.iter().map(|&d| Matrix::identity(f, d)).collect(),
        }
    }

    /// `self ∘ other`
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.mul(f, b))
                .collect(),
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.blocks.iter().all(|b| b.is_zero(f))
    }

    pub fn is_invertible<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.blocks.iter().all(|b| b.is_invertible(f))
    }

    pub fn add_scaled<F: Field<Elem = E>>(&mut self, f: &F, s: &E, other: &Self) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            a.add_scaled(f, s, b);
        }
    }

    /// Entries of all blocks, concatenated.
    pub fn flatten(&self) -> Vec<E> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for r in 0..b.rows() {
                out.extend_from_slice(b.row(r));
            }
        }
        out
    }

    pub fn pow<F: Field<Elem = E>>(&self, f: &F, k: usize) -> Self {
        Morphism {
            blocks: self.blocks.iter().map(|b| b.pow(f, k)).collect(),
        }
    }

    pub fn trace<F: Field<Elem = E>>(&self, f: &F) -> E {
        let mut t = f.zero();
        for b in &self.blocks {
            t = f.add(&t, &b.trace(f));
        }
        t
    }

    pub fn image<F: Field<Elem = E>>(&self, f: &F) -> Vec<Subspace<E>> {
        self.blocks
            .iter()
            .map(|b| Subspace::spanned_by(f, b.rows(), b.columns()))
            .collect()
    }

    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<Subspace<E>> {
        self.blocks
            .iter()
            .map(|b| Subspace::spanned_by(f, b.cols(), b.kernel(f)))
            .collect()
    }
}

/// Radical and socle layers, as multiplicities of each simple per layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSeries {
    /// `M J^k / M J^{k+1}`, top first.
    pub radical_layers: Vec<Vec<usize>>,
    /// `soc^{k+1} M / soc^k M`, socle first.
    pub socle_layers: Vec<Vec<usize>>,
}

impl StructureSeries {
    pub fn top(&self) -> Vec<usize> {
        self.radical_layers.first().cloned().unwrap_or_default()
    }

    pub fn socle(&self) -> Vec<usize> {
        self.socle_layers.first().cloned().unwrap_or_default()
    }

    pub fn radical_dims(&self) -> Vec<usize> {
        self.radical_layers.iter().map(|l| l.iter().sum()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_layers.iter().map(|l| l.iter().sum()).collect()
    }

    /// Loewy length.
    pub fn length(&self) -> usize {
        self.radical_layers.len()
    }
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// Builds a module, checking shapes and every defining relation.
    pub fn module(&self, dims: Vec<usize>, actions: Vec<Matrix<F::Elem>>) -> Result<ModuleRep<F::Elem>> {
        let f = self.field();
        if dims.len() != self.rank() {
            return Err(Error::NotAModule(format!(
                "expected {} vertex dimensions, got {}",
                self.rank(),
                dims.len()
            )));
        }
        if actions.len() != self.arrow_count() {
            return Err(Error::NotAModule(format!(
                "expected {} arrow matrices, got {}",
                self.arrow_count(),
                actions.len()
            )));
        }
        for (a, m) in actions.iter().enumerate() {
            let (t, s) = self.arrow_ends(a);
            if m.rows() != dims[s] || m.cols() != dims[t] {
                return Err(Error::NotAModule(format!(
                    "arrow {} has a {}×{} matrix, expected {}×{}",
                    self.quiver().arrow(a).name,
                    m.rows(),
                    m.cols(),
                    dims[s],
                    dims[t]
                )));
            }
        }
        let m = ModuleRep {
            dims,
            actions,
            presentation: OnceLock::new(),
        };
        for r in self.relations().all() {
            let (p, _) = r.leading().expect("relations are nonzero");
            let mut total = Matrix::zeros(f, m.dims[p.source], m.dims[p.target]);
            for (path, c) in r.terms() {
                total.add_scaled(f, c, &self.path_matrix(&m, path));
            }
            if !total.is_zero(f) {
                return Err(Error::NotAModule(format!(
                    "relation {} acts nontrivially",
                    r.display(f, self.quiver())
                )));
            }
        }
        Ok(m)
    }

    pub(crate) fn module_unchecked(&self, dims: Vec<usize>, actions: Vec<Matrix<F::Elem>>) -> ModuleRep<F::Elem> {
        ModuleRep {
            dims,
            actions,
            presentation: OnceLock::new(),
        }
    }

    pub fn zero_module(&self) -> ModuleRep<F::Elem> {
        self.module_unchecked(vec![0; self.rank()], self.zero_actions(&vec![0; self.rank()]))
    }

    fn zero_actions(&self, dims: &[usize]) -> Vec<Matrix<F::Elem>> {
        (0..self.arrow_count())
            .map(|a| {
                let (t, s) = self.arrow_ends(a);
                Matrix::zeros(self.field(), dims[s], dims[t])
            })
            .collect()
    }

    /// `^d S_i`: uniserial of length `d` with every factor `S_i`.
    pub fn uniserial(&self, i: usize, d: usize) -> Result<ModuleRep<F::Elem>> {
        let f = self.field();
        let mut dims = vec![0; self.rank()];
        dims[i] = d;
        let mut actions = self.zero_actions(&dims);
        // v_k · ε_i = v_{k+1}
        actions[self.quiver().loop_id(i)] = Matrix::from_fn(d, d, |r, c| if r == c + 1 { f.one() } else { f.zero() });
        self.module(dims, actions)
    }

    pub fn simple(&self, i: usize) -> ModuleRep<F::Elem> {
        self.uniserial(i, 1).expect("simple modules satisfy the relations")
    }

    /// `E_i = ^{c_i} S_i`.
    pub fn generalized_simple(&self, i: usize) -> ModuleRep<F::Elem> {
        let c = self.cartan_data().symmetrizer.get(i) as usize;
        self.uniserial(i, c).expect("generalized simples satisfy the relations")
    }

    /// The indecomposable projective `e_i Π`.
    pub fn projective(&self, i: usize) -> ModuleRep<F::Elem> {
        let n = self.rank();
        let dims: Vec<usize> = (0..n).map(|k| self.block(i, k).len()).collect();
        let actions = (0..self.arrow_count())
            .map(|a| {
                let (t, s) = self.arrow_ends(a);
                let src = self.block(i, t);
                let dst = self.block(i, s);
                let mut m = Matrix::zeros(self.field(), dst.len(), src.len());
                for (c, &p) in src.iter().enumerate() {
                    for (r, coef) in self.right_arrow_action(p, a) {
                        let row = dst.binary_search(r).expect("right action stays in e_i Π");
                        m.set(row, c, coef.clone());
                    }
                }
                m
            })
            .collect();
        self.module_unchecked(dims, actions)
    }

    /// `Π_Π = ⊕ e_i Π`.
    pub fn regular_module(&self) -> ModuleRep<F::Elem> {
        let ps: Vec<_> = (0..self.rank()).map(|i| self.projective(i)).collect();
        self.direct_sum(&ps)
    }

    pub fn direct_sum(&self, mods: &[ModuleRep<F::Elem>]) -> ModuleRep<F::Elem> {
        let f = self.field();
        let n = self.rank();
        let dims: Vec<usize> = (0..n).map(|k| mods.iter().map(|m| m.dims[k]).sum()).collect();
        let actions = (0..self.arrow_count())
            .map(|a| {
                let blocks: Vec<&Matrix<F::Elem>> = mods.iter().map(|m| &m.actions[a]).collect();
                Matrix::direct_sum(f, &blocks)
            })
            .collect();
        self.module_unchecked(dims, actions)
    }

    /// Matrix of the action of a path, `M_target → M_source`.
    pub fn path_matrix(&self, m: &ModuleRep<F::Elem>, p: &Path) -> Matrix<F::Elem> {
        let f = self.field();
        let mut out = Matrix::identity(f, m.dims[p.target]);
        for &a in &p.arrows {
            out = m.actions[a].mul(f, &out);
        }
        out
    }

    /// `v · a`
    pub fn act_arrow(&self, m: &ModuleRep<F::Elem>, a: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        m.actions[a].apply(self.field(), v)
    }

    /// `v · b_p` for a basis path `p`, with `v` at the target of `p`.
    pub fn act_basis(&self, m: &ModuleRep<F::Elem>, p: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = v.to_vec();
        for &a in &self.basis()[p].arrows {
            out = m.actions[a].apply(self.field(), &out);
        }
        out
    }

    /// Submodule on the given vertex subspaces, with its inclusion.
    pub fn submodule(
        &self,
        m: &ModuleRep<F::Elem>,
        subs: &[Subspace<F::Elem>],
    ) -> Result<(ModuleRep<F::Elem>, Morphism<F::Elem>)> {
        let f = self.field();
        let dims: Vec<usize> = subs.iter().map(|s| s.dim()).collect();
        let mut actions = Vec::with_capacity(self.arrow_count());
        for a in 0..self.arrow_count() {
            let (t, s) = self.arrow_ends(a);
            let cols: Vec<Vec<F::Elem>> = subs[t]
                .basis()
                .iter()
                .map(|v| {
                    let w = m.actions[a].apply(f, v);
                    subs[s]
                        .coordinates(f, &w)
                        .ok_or_else(|| Error::NotAModule("subspaces are not closed under the action".into()))
                })
                .collect::<Result<_>>()?;
            actions.push(Matrix::from_columns(dims[s], &cols));
        }
        let inclusion = Morphism {
            blocks: subs
                .iter()
                .enumerate()
                .map(|(k, s)| Matrix::from_columns(m.dims[k], s.basis()))
                .collect(),
        };
        Ok((self.module_unchecked(dims, actions), inclusion))
    }

    /// Quotient by the given vertex subspaces, with its projection.
    pub fn quotient(
        &self,
        m: &ModuleRep<F::Elem>,
        subs: &[Subspace<F::Elem>],
    ) -> Result<(ModuleRep<F::Elem>, Morphism<F::Elem>)> {
        let f = self.field();
        let free: Vec<Vec<usize>> = subs
            .iter()
            .map(|s| {
                let mut is_pivot = vec![false; s.ambient()];
                for &p in s.pivots() {
                    is_pivot[p] = true;
                }
                (0..s.ambient()).filter(|&c| !is_pivot[c]).collect()
            })
            .collect();
        let dims: Vec<usize> = free.iter().map(|v| v.len()).collect();
        let class = |k: usize, v: &[F::Elem]| -> Vec<F::Elem> {
            let mut w = v.to_vec();
            subs[k].reduce(f, &mut w);
            free[k].iter().map(|&c| w[c].clone()).collect()
        };
        let mut actions = Vec::with_capacity(self.arrow_count());
        for a in 0..self.arrow_count() {
            let (t, s) = self.arrow_ends(a);
            for v in subs[t].basis() {
                if !subs[s].contains(f, &m.actions[a].apply(f, v)) {
                    return Err(Error::NotAModule("subspaces are not closed under the action".into()));
                }
            }
            let cols: Vec<Vec<F::Elem>> = free[t].iter().map(|&c| class(s, &m.actions[a].column(c))).collect();
            actions.push(Matrix::from_columns(dims[s], &cols));
        }
        let projection = Morphism {
            blocks: (0..self.rank())
                .map(|k| {
                    let cols: Vec<Vec<F::Elem>> = (0..m.dims[k])
                        .map(|c| class(k, &crate::linalg::unit(f, m.dims[k], c)))
                        .collect();
                    Matrix::from_columns(dims[k], &cols)
                })
                .collect(),
        };
        Ok((self.module_unchecked(dims, actions), projection))
    }

    /// `M J` as vertex subspaces.
    pub fn radical_subspaces(&self, m: &ModuleRep<F::Elem>) -> Vec<Subspace<F::Elem>> {
        let all: Vec<Subspace<F::Elem>> = m.dims.iter().map(|&d| Subspace::full(self.field(), d)).collect();
        self.times_arrows(m, &all)
    }

    /// `S · J` for vertex subspaces `S` of `M`.
    fn times_arrows(&self, m: &ModuleRep<F::Elem>, subs: &[Subspace<F::Elem>]) -> Vec<Subspace<F::Elem>> {
        let f = self.field();
        let mut out: Vec<Subspace<F::Elem>> = m.dims.iter().map(|&d| Subspace::new(d)).collect();
        for a in 0..self.arrow_count() {
            let (t, s) = self.arrow_ends(a);
            for v in subs[t].basis() {
                out[s].insert(f, m.actions[a].apply(f, v));
            }
        }
        out
    }

    /// Vertex subspaces `{m : m·a ∈ S for every arrow a}`.
    fn arrow_preimage(&self, m: &ModuleRep<F::Elem>, subs: &[Subspace<F::Elem>]) -> Vec<Subspace<F::Elem>> {
        let f = self.field();
        (0..self.rank())
            .map(|k| {
                let mut rows: Vec<Vec<F::Elem>> = Vec::new();
                for a in 0..self.arrow_count() {
                    let (t, s) = self.arrow_ends(a);
                    if t != k {
                        continue;
                    }
                    // Functionals vanishing on S_s, pulled back along the arrow.
                    for lam in subs[s].complement_kernel(f) {
                        let row: Vec<F::Elem> = (0..m.dims[k])
                            .map(|c| {
                                let col = m.actions[a].column(c);
                                let mut acc = f.zero();
                                for (x, y) in lam.iter().zip(&col) {
                                    f.add_mul_assign(&mut acc, x, y);
                                }
                                acc
                            })
                            .collect();
                        rows.push(row);
                    }
                }
                let mat = Matrix::from_fn(rows.len(), m.dims[k], |r, c| rows[r][c].clone());
                Subspace::spanned_by(f, m.dims[k], mat.kernel(f))
            })
            .collect()
    }

    /// The socle as vertex subspaces.
    pub fn socle_subspaces(&self, m: &ModuleRep<F::Elem>) -> Vec<Subspace<F::Elem>> {
        let zero: Vec<Subspace<F::Elem>> = m.dims.iter().map(|&d| Subspace::new(d)).collect();
        self.arrow_preimage(m, &zero)
    }

    pub fn structure_series(&self, m: &ModuleRep<F::Elem>) -> StructureSeries {
        let f = self.field();
        let n = self.rank();
        let mut radical_layers = Vec::new();
        let mut level: Vec<Subspace<F::Elem>> = m.dims.iter().map(|&d| Subspace::full(f, d)).collect();
        while level.iter().any(|s| !s.is_zero()) {
            let next = self.times_arrows(m, &level);
            radical_layers.push((0..n).map(|k| level[k].dim() - next[k].dim()).collect());
            level = next;
        }
        let mut socle_layers = Vec::new();
        let mut level: Vec<Subspace<F::Elem>> = m.dims.iter().map(|&d| Subspace::new(d)).collect();
        while (0..n).any(|k| level[k].dim() < m.dims[k]) {
            let next = self.arrow_preimage(m, &level);
            socle_layers.push((0..n).map(|k| next[k].dim() - level[k].dim()).collect());
            level = next;
        }
        StructureSeries {
            radical_layers,
            socle_layers,
        }
    }

    /// `(r_1, ..., r_n)` when every `M e_i` is free over `K[ε_i]/(ε_i^{c_i})`.
    pub fn locally_free_rank(&self, m: &ModuleRep<F::Elem>) -> Option<Vec<usize>> {
        let f = self.field();
        let mut rank = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let c = self.cartan_data().symmetrizer.get(i) as usize;
            let d = m.dims[i];
            if d % c != 0 {
                return None;
            }
            let r = d / c;
            let eps = &m.actions[self.quiver().loop_id(i)];
            let mut power = Matrix::identity(f, d);
            for k in 0..=c {
                if power.rank(f) != (c - k) * r {
                    return None;
                }
                power = eps.mul(f, &power);
            }
            rank.push(r);
        }
        Some(rank)
    }
}
