use std::collections::{HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::groebner::{GroebnerBasis, GroebnerCaps};
use super::{preprojective_relations, AlgebraElement, Path, RelationSet};
use crate::cartan::{CartanData, DoubledQuiver};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{unit, Subspace};

type Sparse<E> = Vec<(usize, E)>;

/// `Π(C, D)` on its basis of normal monomials.
///
/// The basis is sorted by target vertex, so `e_i Π` is a contiguous range.
#[derive(Debug, Clone)]
pub struct FiniteDimAlgebra<F: Field> {
    field: F,
    data: CartanData,
    quiver: DoubledQuiver,
    relations: RelationSet<F::Elem>,
    groebner: GroebnerBasis<F>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    right_arrow: Vec<Vec<Sparse<F::Elem>>>,
    left_arrow: Vec<Vec<Sparse<F::Elem>>>,
    mult: Vec<Vec<Sparse<F::Elem>>>,
    blocks: Vec<Vec<Vec<usize>>>,
}

/// Summary produced by [`FiniteDimAlgebra::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub dim: usize,
    /// `dim e_i Π`
    pub vertex_dims: Vec<usize>,
    /// `dim e_i Π e_j`
    pub block_dims: Vec<Vec<usize>>,
    /// Radical layer dimensions of each `e_i Π`.
    pub radical_layers: Vec<Vec<usize>>,
    pub groebner_size: usize,
    pub associativity_checks: usize,
}

impl<F: Field> FiniteDimAlgebra<F> {
    pub fn new(f: &F, data: &CartanData, caps: GroebnerCaps) -> Result<Self> {
        let quiver = data.double_quiver();
        let relations = preprojective_relations(f, data, &quiver);
        let groebner = GroebnerBasis::complete(f, &quiver, relations.all().cloned(), caps)?;
        let basis = normal_monomials(&quiver, &groebner, caps)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let n = data.rank();
        let mut blocks = vec![vec![Vec::new(); n]; n];
        for (k, p) in basis.iter().enumerate() {
            blocks[p.target][p.source].push(k);
        }
        let mut alg = FiniteDimAlgebra {
            field: f.clone(),
            data: data.clone(),
            quiver,
            relations,
            groebner,
            basis,
            index,
            right_arrow: Vec::new(),
            left_arrow: Vec::new(),
            mult: Vec::new(),
            blocks,
        };
        alg.build_tables();
        Ok(alg)
    }

    fn build_tables(&mut self) {
        let na = self.quiver.arrows().len();
        let dim = self.basis.len();
        let arrow_path = |a: usize| Path::from_arrows(&self.quiver, vec![a]);
        let mut right = vec![vec![Vec::new(); na]; dim];
        let mut left = vec![vec![Vec::new(); dim]; na];
        for (p, path) in self.basis.iter().enumerate() {
            for a in 0..na {
                let ap = arrow_path(a);
                if let Some(pa) = path.concat(&ap) {
                    right[p][a] = self.sparse_normal_form(&pa);
                }
                if let Some(ap) = ap.concat(path) {
                    left[a][p] = self.sparse_normal_form(&ap);
                }
            }
        }
        self.right_arrow = right;
        self.left_arrow = left;

        let f = &self.field;
        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by_key(|&q| self.basis[q].len());
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for &q in &order {
            let qp = &self.basis[q];
            for p in 0..dim {
                if self.basis[p].source != qp.target {
                    continue;
                }
                mult[p][q] = if qp.is_trivial() {
                    vec![(p, f.one())]
                } else {
                    let (&last, prefix) = qp.arrows.split_last().unwrap();
                    let prefix_path = if prefix.is_empty() {
                        Path::trivial(qp.target)
                    } else {
                        Path::from_arrows(&self.quiver, prefix.to_vec())
                    };
                    let q0 = self.index[&prefix_path];
                    let mut acc = vec![f.zero(); dim];
                    for (r, c) in &mult[p][q0] {
                        for (s, d) in &self.right_arrow[*r][last] {
                            f.add_mul_assign(&mut acc[*s], c, d);
                        }
                    }
                    to_sparse(f, &acc)
                };
            }
        }
        self.mult = mult;
    }

    fn sparse_normal_form(&self, p: &Path) -> Sparse<F::Elem> {
        let nf = self.groebner.reduce(&AlgebraElement::from_path(&self.field, p.clone()));
        nf.terms().map(|(t, c)| (self.index[t], c.clone())).collect()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cartan_data(&self) -> &CartanData {
        &self.data
    }

    pub fn quiver(&self) -> &DoubledQuiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet<F::Elem> {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        &self.groebner
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Basis indices of `e_target Π e_source`.
    pub fn block(&self, target: usize, source: usize) -> &[usize] {
        &self.blocks[target][source]
    }

    /// `dim e_i Π`
    pub fn vertex_dim(&self, i: usize) -> usize {
        (0..self.rank()).map(|j| self.blocks[i][j].len()).sum()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows().len()
    }

    pub fn arrow_ends(&self, a: usize) -> (usize, usize) {
        let ar = self.quiver.arrow(a);
        (ar.target, ar.source)
    }

    pub fn idempotent_index(&self, i: usize) -> usize {
        self.index[&Path::trivial(i)]
    }

    pub fn idempotent(&self, i: usize) -> Vec<F::Elem> {
        unit(&self.field, self.dim(), self.idempotent_index(i))
    }

    pub fn one(&self) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.dim()];
        for i in 0..self.rank() {
            v[self.idempotent_index(i)] = f.one();
        }
        v
    }

    /// Normal form of an arbitrary linear combination of paths.
    pub fn normal_form(&self, x: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        self.groebner.reduce(x)
    }

    /// Coordinates of `x` in the normal-monomial basis.
    pub fn to_vector(&self, x: &AlgebraElement<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.dim()];
        for (p, c) in self.normal_form(x).terms() {
            v[self.index[p]] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[F::Elem]) -> AlgebraElement<F::Elem> {
        let f = &self.field;
        let mut x = AlgebraElement::zero();
        for (k, c) in v.iter().enumerate() {
            x.add_term(f, self.basis[k].clone(), c.clone());
        }
        x
    }

    /// `b_p · b_q` as sparse coordinates.
    pub fn basis_product(&self, p: usize, q: usize) -> &[(usize, F::Elem)] {
        &self.mult[p][q]
    }

    /// `b_p · a`
    pub fn right_arrow_action(&self, p: usize, a: usize) -> &[(usize, F::Elem)] {
        &self.right_arrow[p][a]
    }

    /// `a · b_p`
    pub fn left_arrow_action(&self, a: usize, p: usize) -> &[(usize, F::Elem)] {
        &self.left_arrow[a][p]
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (p, xp) in x.iter().enumerate() {
            if f.is_zero(xp) {
                continue;
            }
            for (q, yq) in y.iter().enumerate() {
                if f.is_zero(yq) {
                    continue;
                }
                let c = f.mul(xp, yq);
                for (r, d) in &self.mult[p][q] {
                    f.add_mul_assign(&mut out[*r], &c, d);
                }
            }
        }
        out
    }

    /// `x · a`
    pub fn mul_arrow_right(&self, x: &[F::Elem], a: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (p, xp) in x.iter().enumerate() {
            if f.is_zero(xp) {
                continue;
            }
            for (r, d) in &self.right_arrow[p][a] {
                f.add_mul_assign(&mut out[*r], xp, d);
            }
        }
        out
    }

    /// `a · x`
    pub fn mul_arrow_left(&self, a: usize, x: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (p, xp) in x.iter().enumerate() {
            if f.is_zero(xp) {
                continue;
            }
            for (r, d) in &self.left_arrow[a][p] {
                f.add_mul_assign(&mut out[*r], xp, d);
            }
        }
        out
    }

    /// Radical layer dimensions of the right ideal `e_i Π`.
    pub fn radical_layers(&self, i: usize) -> Vec<usize> {
        let f = &self.field;
        let d = self.dim();
        // e_i J^k is a right ideal, so e_i J^{k+1} is spanned by x·a.
        let mut level = Subspace::spanned_by(f, d, self.blocks[i].iter().flatten().map(|&k| unit(f, d, k)));
        let mut layers = Vec::new();
        while !level.is_zero() {
            let mut next = Subspace::new(d);
            for v in level.basis() {
                for a in 0..self.arrow_count() {
                    next.insert(f, self.mul_arrow_right(v, a));
                }
            }
            layers.push(level.dim() - next.dim());
            level = next;
        }
        layers
    }

    /// Checks relations, identity, associativity and the embedding of
    /// `K[ε_i]/(ε_i^{c_i})`.
    pub fn verify(&self, seed: u64) -> Result<AlgebraReport> {
        let f = &self.field;
        let q = &self.quiver;
        for r in self.relations.all() {
            let nf = self.normal_form(r);
            if !nf.is_zero() {
                return Err(Error::VerificationFailed(format!(
                    "relation {} reduces to {}",
                    r.display(f, q),
                    nf.display(f, q)
                )));
            }
        }
        let one = self.one();
        for p in 0..self.dim() {
            let b = unit(f, self.dim(), p);
            if self.mul(&one, &b) != b || self.mul(&b, &one) != b {
                return Err(Error::VerificationFailed(format!(
                    "identity fails on {}",
                    self.basis[p].display(q)
                )));
            }
        }
        let triples: Vec<(usize, usize, usize)> = if self.dim() <= 64 {
            let d = self.dim();
            (0..d)
                .flat_map(|a| (0..d).flat_map(move |b| (0..d).map(move |c| (a, b, c))))
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d = self.dim();
            (0..50_000)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                .collect()
        };
        let mut checked = 0;
        for &(a, b, c) in &triples {
            let (pa, pb, pc) = (&self.basis[a], &self.basis[b], &self.basis[c]);
            if pa.source != pb.target || pb.source != pc.target {
                continue;
            }
            checked += 1;
            let ua = unit(f, self.dim(), a);
            let ub = unit(f, self.dim(), b);
            let uc = unit(f, self.dim(), c);
            let lhs = self.mul(&self.mul(&ua, &ub), &uc);
            let rhs = self.mul(&ua, &self.mul(&ub, &uc));
            if lhs != rhs {
                return Err(Error::VerificationFailed(format!(
                    "associativity fails on ({}, {}, {})",
                    pa.display(q),
                    pb.display(q),
                    pc.display(q)
                )));
            }
        }
        for i in 0..self.rank() {
            let ci = self.data.symmetrizer.get(i) as usize;
            let powers = (0..ci).map(|k| {
                if k == 0 {
                    self.idempotent(i)
                } else {
                    let p = Path::from_arrows(q, vec![q.loop_id(i); k]);
                    self.to_vector(&AlgebraElement::from_path(f, p))
                }
            });
            let s = Subspace::spanned_by(f, self.dim(), powers);
            if s.dim() != ci {
                return Err(Error::VerificationFailed(format!(
                    "powers of ε{} below c_{} are dependent",
                    i + 1,
                    i + 1
                )));
            }
        }
        let n = self.rank();
        Ok(AlgebraReport {
            dim: self.dim(),
            vertex_dims: (0..n).map(|i| self.vertex_dim(i)).collect(),
            block_dims: (0..n)
                .map(|i| (0..n).map(|j| self.blocks[i][j].len()).collect())
                .collect(),
            radical_layers: (0..n).map(|i| self.radical_layers(i)).collect(),
            groebner_size: self.groebner.len(),
            associativity_checks: checked,
        })
    }
}

fn to_sparse<F: Field>(f: &F, v: &[F::Elem]) -> Sparse<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !f.is_zero(c))
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// Breadth-first enumeration of paths none of whose subwords is a leading
/// word of the Gröbner basis.
fn normal_monomials<F: Field>(q: &DoubledQuiver, gb: &GroebnerBasis<F>, caps: GroebnerCaps) -> Result<Vec<Path>> {
    let n = q.vertex_count();
    let mut out: Vec<Path> = (0..n).map(Path::trivial).collect();
    let mut queue: VecDeque<Path> = out.iter().cloned().collect();
    while let Some(w) = queue.pop_front() {
        for (a, arrow) in q.arrows().iter().enumerate() {
            if arrow.target != w.source {
                continue;
            }
            let mut arrows = w.arrows.clone();
            arrows.push(a);
            if gb.suffix_is_reducible(&arrows) {
                continue;
            }
            if arrows.len() > caps.max_degree {
                return Err(Error::CapExceeded {
                    what: "normal monomial length".into(),
                    cap: caps.max_degree,
                });
            }
            if out.len() >= caps.max_basis {
                return Err(Error::CapExceeded {
                    what: "algebra dimension".into(),
                    cap: caps.max_basis,
                });
            }
            let p = Path {
                target: w.target,
                source: arrow.source,
                arrows,
            };
            out.push(p.clone());
            queue.push_back(p);
        }
    }
    out.sort_by(|a, b| a.target.cmp(&b.target).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rational};

    fn build(c: Vec<Vec<i64>>, d: Vec<i64>) -> FiniteDimAlgebra<Rational> {
        let data = CartanData::with_symmetrizer(c, d).unwrap();
        FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default()).unwrap()
    }

    #[test]
    fn a2_with_d2() {
        let a = build(vec![vec![2, -1], vec![-1, 2]], vec![2, 2]);
        let r = a.verify(0).unwrap();
        assert_eq!(r.dim, 8);
        assert_eq!(r.vertex_dims, vec![4, 4]);
        assert_eq!(r.radical_layers, vec![vec![1, 2, 1], vec![1, 2, 1]]);
    }

    #[test]
    fn b2_with_d21() {
        let a = build(vec![vec![2, -1], vec![-2, 2]], vec![2, 1]);
        let r = a.verify(0).unwrap();
        assert_eq!(r.dim, 10);
        assert_eq!(r.vertex_dims, vec![6, 4]);
        assert_eq!(r.radical_layers, vec![vec![1, 2, 2, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn rank_one_is_truncated_polynomial_ring() {
        let a = build(vec![vec![2]], vec![3]);
        let r = a.verify(0).unwrap();
        assert_eq!(r.dim, 3);
        assert_eq!(r.radical_layers, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn prime_field_agrees() {
        let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-3, 2]], vec![3, 1]).unwrap();
        let q = FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default()).unwrap();
        for p in [101, 32003] {
            let fp = PrimeField::new(p).unwrap();
            let a = FiniteDimAlgebra::new(&fp, &data, GroebnerCaps::default()).unwrap();
            assert_eq!(a.dim(), q.dim());
            assert_eq!(a.basis(), q.basis());
        }
    }

    #[test]
    fn affine_type_hits_the_cap() {
        let data = CartanData::with_minimal(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let caps = GroebnerCaps {
            max_degree: 12,
            max_basis: 500,
        };
        let err = FiniteDimAlgebra::new(&Rational, &data, caps).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
