use super::module::{ModuleRep, Morphism};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::pathalg::FiniteDimAlgebra;

impl<F: Field> FiniteDimAlgebra<F> {
    /// A basis of `Hom_Π(M, N)`, solved on the generators of `M`.
    pub fn hom_space(&self, m: &ModuleRep<F::Elem>, n: &ModuleRep<F::Elem>) -> Vec<Morphism<F::Elem>> {
        if m.is_zero() || n.is_zero() {
            return Vec::new();
        }
        let pres = self.presentation(m);
        let sols = self.hom_images(&pres, n);
        sols.basis()
            .iter()
            .map(|v| self.morphism_from_images(&pres, m, n, v))
            .collect()
    }

    pub fn hom_dim(&self, m: &ModuleRep<F::Elem>, n: &ModuleRep<F::Elem>) -> usize {
        if m.is_zero() || n.is_zero() {
            return 0;
        }
        let pres = self.presentation(m);
        self.hom_images(&pres, n).dim()
    }

    /// `Hom_Π(M, N)` from the full intertwining system. Slow; kept as an
    /// independent check of [`Self::hom_space`].
    pub fn hom_space_naive(&self, m: &ModuleRep<F::Elem>, n: &ModuleRep<F::Elem>) -> Vec<Morphism<F::Elem>> {
        let f = self.field();
        let r = self.rank();
        let mut offsets = Vec::with_capacity(r);
        let mut total = 0;
        for k in 0..r {
            offsets.push(total);
            total += n.dim_at(k) * m.dim_at(k);
        }
        // Unknown (k, row, col) is entry (row, col) of φ_k.
        let var = |k: usize, row: usize, col: usize| offsets[k] + row * m.dim_at(k) + col;
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for a in 0..self.arrow_count() {
            let (t, s) = self.arrow_ends(a);
            let am = m.action(a);
            let an = n.action(a);
            // φ_s A^M - A^N φ_t = 0, entry (row, col) with row in N_s, col in M_t.
            for row in 0..n.dim_at(s) {
                for col in 0..m.dim_at(t) {
                    let mut eq = vec![f.zero(); total];
                    for k in 0..m.dim_at(s) {
                        f.add_mul_assign(&mut eq[var(s, row, k)], &f.one(), am.get(k, col));
                    }
                    for k in 0..n.dim_at(t) {
                        let neg = f.neg(an.get(row, k));
                        f.add_mul_assign(&mut eq[var(t, k, col)], &f.one(), &neg);
                    }
                    rows.push(eq);
                }
            }
        }
        let mat = Matrix::from_fn(rows.len(), total, |i, j| rows[i][j].clone());
        mat.kernel(f)
            .into_iter()
            .map(|v| Morphism {
                blocks: (0..r)
                    .map(|k| Matrix::from_fn(n.dim_at(k), m.dim_at(k), |row, col| v[var(k, row, col)].clone()))
                    .collect(),
            })
            .collect()
    }

    /// `dim Ext¹(M, N)` from `0 → ΩM → P0 → M → 0`.
    pub fn ext1_dim(&self, m: &ModuleRep<F::Elem>, n: &ModuleRep<F::Elem>) -> usize {
        if m.is_zero() || n.is_zero() {
            return 0;
        }
        let pres = self.presentation(m);
        let hom_p0: usize = pres.generators.iter().map(|(i, _)| n.dim_at(*i)).sum();
        self.hom_dim(&pres.syzygy, n) + self.hom_dim(m, n) - hom_p0
    }

    /// Sum of the images of all maps `T → X`.
    pub fn trace_subspaces(&self, t: &ModuleRep<F::Elem>, x: &ModuleRep<F::Elem>) -> Vec<Subspace<F::Elem>> {
        let f = self.field();
        let mut out: Vec<Subspace<F::Elem>> = x.dims().iter().map(|&d| Subspace::new(d)).collect();
        for phi in self.hom_space(t, x) {
            for (k, b) in phi.blocks.iter().enumerate() {
                for c in b.columns() {
                    out[k].insert(f, c);
                }
            }
        }
        out
    }

    /// `X ∈ Fac T`
    pub fn in_fac(&self, t: &ModuleRep<F::Elem>, x: &ModuleRep<F::Elem>) -> bool {
        self.trace_subspaces(t, x)
            .iter()
            .zip(x.dims())
            .all(|(s, &d)| s.dim() == d)
    }
}
