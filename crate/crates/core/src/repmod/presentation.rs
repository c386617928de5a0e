use std::sync::Arc;

use super::module::{ModuleRep, Morphism};
use crate::field::Field;
use crate::linalg::{unit, Matrix, Subspace};
use crate::pathalg::FiniteDimAlgebra;

/// A minimal projective presentation `P1 → P0 → M → 0`.
///
/// `P0 = ⊕_a e_{i_a} Π` sends `e_{i_a}` to the generator `g_a`, and
/// `P1 = ⊕_b e_{j_b} Π` sends `e_{j_b}` to `(x_{ab})_a` with
/// `x_{ab} ∈ e_{i_a} Π e_{j_b}`.
#[derive(Debug, Clone)]
pub struct Presentation<E> {
    /// `(i_a, g_a)`
    pub generators: Vec<(usize, Vec<E>)>,
    /// `(j_b, [x_{ab} as sparse coordinates in Π]_a)`
    pub relations: Vec<(usize, Vec<Vec<(usize, E)>>)>,
    /// Coordinates of `P0 e_k`: pairs `(a, basis path)`.
    pub(crate) layout: Vec<Vec<(usize, usize)>>,
    /// A right inverse of `P0 e_k → M e_k`, per vertex.
    pub(crate) section: Vec<Matrix<E>>,
    /// `ΩM`, the kernel of `P0 → M`.
    pub syzygy: ModuleRep<E>,
}

impl<E: Clone> Presentation<E> {
    pub fn p0_vertices(&self) -> Vec<usize> {
        self.generators.iter().map(|(i, _)| *i).collect()
    }

    pub fn p1_vertices(&self) -> Vec<usize> {
        self.relations.iter().map(|(j, _)| *j).collect()
    }
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// Vectors of `M` whose classes form a basis of `top M`.
    pub fn top_generators(&self, m: &ModuleRep<F::Elem>) -> Vec<(usize, Vec<F::Elem>)> {
        let f = self.field();
        let mut rad = self.radical_subspaces(m);
        let mut out = Vec::new();
        for (k, r) in rad.iter_mut().enumerate() {
            for c in 0..m.dim_at(k) {
                let u = unit(f, m.dim_at(k), c);
                if r.insert(f, u.clone()) {
                    out.push((k, u));
                }
            }
        }
        out
    }

    /// `⊕_a e_{i_a} Π → M`, `e_{i_a} ↦ g_a`.
    pub fn cover_map(
        &self,
        m: &ModuleRep<F::Elem>,
        gens: &[(usize, Vec<F::Elem>)],
    ) -> (ModuleRep<F::Elem>, Morphism<F::Elem>, Vec<Vec<(usize, usize)>>) {
        let f = self.field();
        let projs: Vec<_> = gens.iter().map(|(i, _)| self.projective(*i)).collect();
        let p0 = self.direct_sum(&projs);
        let mut layout = vec![Vec::new(); self.rank()];
        for (a, (i, _)) in gens.iter().enumerate() {
            for (k, l) in layout.iter_mut().enumerate() {
                l.extend(self.block(*i, k).iter().map(|&p| (a, p)));
            }
        }
        let blocks = (0..self.rank())
            .map(|k| {
                let cols: Vec<Vec<F::Elem>> = layout[k]
                    .iter()
                    .map(|&(a, p)| self.act_basis(m, p, &gens[a].1))
                    .collect();
                if cols.is_empty() {
                    Matrix::zeros(f, m.dim_at(k), 0)
                } else {
                    Matrix::from_columns(m.dim_at(k), &cols)
                }
            })
            .collect();
        (p0, Morphism { blocks }, layout)
    }

    /// The minimal projective presentation, cached on the module.
    pub fn presentation(&self, m: &ModuleRep<F::Elem>) -> Arc<Presentation<F::Elem>> {
        if let Some(p) = m.cached_presentation() {
            return p;
        }
        let p = Arc::new(self.compute_presentation(m));
        m.cache_presentation(p.clone());
        p
    }

    fn compute_presentation(&self, m: &ModuleRep<F::Elem>) -> Presentation<F::Elem> {
        let f = self.field();
        let generators = self.top_generators(m);
        let (p0, pi, layout) = self.cover_map(m, &generators);
        let kernel = pi.kernel(f);
        let (syzygy, inclusion) = self.submodule(&p0, &kernel).expect("a kernel is a submodule");
        let relations = self
            .top_generators(&syzygy)
            .into_iter()
            .map(|(j, y)| {
                let z = inclusion.blocks[j].apply(f, &y);
                let mut comps = vec![Vec::new(); generators.len()];
                for (c, &(a, p)) in z.iter().zip(&layout[j]) {
                    if !f.is_zero(c) {
                        comps[a].push((p, c.clone()));
                    }
                }
                (j, comps)
            })
            .collect();
        let section = (0..self.rank())
            .map(|k| {
                let cols: Vec<Vec<F::Elem>> = (0..m.dim_at(k))
                    .map(|c| {
                        pi.blocks[k]
                            .solve(f, &unit(f, m.dim_at(k), c))
                            .expect("the cover is surjective")
                    })
                    .collect();
                if cols.is_empty() {
                    Matrix::zeros(f, layout[k].len(), 0)
                } else {
                    Matrix::from_columns(layout[k].len(), &cols)
                }
            })
            .collect();
        Presentation {
            generators,
            relations,
            layout,
            section,
            syzygy,
        }
    }

    /// Projective modules `(P1, P0)` of the minimal presentation.
    pub fn minimal_projective_presentation(
        &self,
        m: &ModuleRep<F::Elem>,
    ) -> (ModuleRep<F::Elem>, ModuleRep<F::Elem>, Arc<Presentation<F::Elem>>) {
        let pres = self.presentation(m);
        let p1: Vec<_> = pres.p1_vertices().into_iter().map(|j| self.projective(j)).collect();
        let p0: Vec<_> = pres.p0_vertices().into_iter().map(|i| self.projective(i)).collect();
        (self.direct_sum(&p1), self.direct_sum(&p0), pres)
    }

    /// Subspace of `⊕_a N e_{i_a}` of generator images that extend to
    /// homomorphisms `M → N`.
    pub(crate) fn hom_images(&self, pres: &Presentation<F::Elem>, n: &ModuleRep<F::Elem>) -> Subspace<F::Elem> {
        let f = self.field();
        let offsets: Vec<usize> = pres
            .generators
            .iter()
            .scan(0, |acc, (i, _)| {
                let o = *acc;
                *acc += n.dim_at(*i);
                Some(o)
            })
            .collect();
        let unknowns: usize = pres.generators.iter().map(|(i, _)| n.dim_at(*i)).sum();
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for (j, comps) in &pres.relations {
            let mut block = vec![vec![f.zero(); unknowns]; n.dim_at(*j)];
            for (a, x) in comps.iter().enumerate() {
                let i = pres.generators[a].0;
                for (p, c) in x {
                    let pm = self.path_matrix(n, &self.basis()[*p]);
                    for (r, row) in block.iter_mut().enumerate() {
                        for col in 0..n.dim_at(i) {
                            f.add_mul_assign(&mut row[offsets[a] + col], c, pm.get(r, col));
                        }
                    }
                }
            }
            rows.extend(block);
        }
        let mat = Matrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
        Subspace::spanned_by(f, unknowns, mat.kernel(f))
    }

    /// The homomorphism with the given generator images.
    pub(crate) fn morphism_from_images(
        &self,
        pres: &Presentation<F::Elem>,
        m: &ModuleRep<F::Elem>,
        n: &ModuleRep<F::Elem>,
        images: &[F::Elem],
    ) -> Morphism<F::Elem> {
        let f = self.field();
        let mut offsets = Vec::with_capacity(pres.generators.len());
        let mut o = 0;
        for (i, _) in &pres.generators {
            offsets.push(o);
            o += n.dim_at(*i);
        }
        let blocks = (0..self.rank())
            .map(|k| {
                let cols: Vec<Vec<F::Elem>> = pres.layout[k]
                    .iter()
                    .map(|&(a, p)| {
                        let i = pres.generators[a].0;
                        let na = &images[offsets[a]..offsets[a] + n.dim_at(i)];
                        self.act_basis(n, p, na)
                    })
                    .collect();
                if cols.is_empty() {
                    return Matrix::zeros(f, n.dim_at(k), m.dim_at(k));
                }
                Matrix::from_columns(n.dim_at(k), &cols).mul(f, &pres.section[k])
            })
            .collect();
        Morphism { blocks }
    }
}
