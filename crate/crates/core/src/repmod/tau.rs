use super::module::ModuleRep;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::pathalg::FiniteDimAlgebra;

impl<F: Field> FiniteDimAlgebra<F> {
    pub(crate) fn require_selfinjective(&self) -> Result<()> {
        if self.cartan_data().is_dynkin() {
            Ok(())
        } else {
            Err(Error::NotDynkin(
                "τ and the Nakayama functor need Π finite-dimensional, i.e. q_C positive definite".into(),
            ))
        }
    }

    /// Right module `D L` of a left module given by vertex dimensions and
    /// left arrow actions `L e_s → L e_t` (for `a : s → t`).
    fn dual_of_left(&self, dims: Vec<usize>, left: Vec<Matrix<F::Elem>>) -> ModuleRep<F::Elem> {
        let actions = left.iter().map(|m| m.transpose()).collect();
        self.module_unchecked(dims, actions)
    }

    /// `τM = D Tr M`, from the minimal presentation of `M`.
    pub fn tau(&self, m: &ModuleRep<F::Elem>) -> Result<ModuleRep<F::Elem>> {
        self.require_selfinjective()?;
        if m.is_zero() {
            return Ok(self.zero_module());
        }
        let f = self.field();
        let pres = self.presentation(m);
        let n = self.rank();
        // L = ⊕_b Π e_{j_b}; coordinates of e_k L are (b, path in e_k Π e_{j_b}).
        let layout: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|k| {
                pres.relations
                    .iter()
                    .enumerate()
                    .flat_map(|(b, (j, _))| self.block(k, *j).iter().map(move |&p| (b, p)))
                    .collect()
            })
            .collect();
        let position = |k: usize, b: usize, p: usize| -> usize {
            layout[k]
                .iter()
                .position(|&x| x == (b, p))
                .expect("path lies in the block")
        };
        // Image of (z_a) ↦ (Σ_a z_a x_{ab})_b at each vertex.
        let images: Vec<Subspace<F::Elem>> = (0..n)
            .map(|k| {
                let mut s = Subspace::new(layout[k].len());
                for (a, (i, _)) in pres.generators.iter().enumerate() {
                    for &p in self.block(k, *i) {
                        let mut v = vec![f.zero(); layout[k].len()];
                        for (b, (_, comps)) in pres.relations.iter().enumerate() {
                            for (q, c) in &comps[a] {
                                for (r, d) in self.basis_product(p, *q) {
                                    f.add_mul_assign(&mut v[position(k, b, *r)], c, d);
                                }
                            }
                        }
                        s.insert(f, v);
                    }
                }
                s
            })
            .collect();
        // Tr M = L / image as a left module, on the non-pivot coordinates.
        let free: Vec<Vec<usize>> = images
            .iter()
            .map(|s| {
                let mut pivot = vec![false; s.ambient()];
                for &p in s.pivots() {
                    pivot[p] = true;
                }
                (0..s.ambient()).filter(|&c| !pivot[c]).collect()
            })
            .collect();
        let dims: Vec<usize> = free.iter().map(|v| v.len()).collect();
        let left = (0..self.arrow_count())
            .map(|c| {
                let (t, s) = self.arrow_ends(c);
                let cols: Vec<Vec<F::Elem>> = free[s]
                    .iter()
                    .map(|&col| {
                        let (b, p) = layout[s][col];
                        let mut v = vec![f.zero(); layout[t].len()];
                        for (r, d) in self.left_arrow_action(c, p) {
                            v[position(t, b, *r)] = f.add(&v[position(t, b, *r)], d);
                        }
                        images[t].reduce(f, &mut v);
                        free[t].iter().map(|&x| v[x].clone()).collect()
                    })
                    .collect();
                if cols.is_empty() {
                    Matrix::zeros(f, dims[t], 0)
                } else {
                    Matrix::from_columns(dims[t], &cols)
                }
            })
            .collect();
        Ok(self.dual_of_left(dims, left))
    }

    /// `σ` with `soc(e_i Π) ≅ S_{σ(i)}`.
    pub fn nakayama_permutation(&self) -> Result<Vec<usize>> {
        self.require_selfinjective()?;
        (0..self.rank())
            .map(|i| {
                let soc = self.socle_subspaces(&self.projective(i));
                let dims: Vec<usize> = soc.iter().map(|s| s.dim()).collect();
                let total: usize = dims.iter().sum();
                if total != 1 {
                    return Err(Error::SocleNotSimple { vertex: i, dim: total });
                }
                Ok(dims.iter().position(|&d| d == 1).unwrap())
            })
            .collect()
    }

    /// `νM = D Hom_Π(M, Π)`.
    pub fn nakayama_functor(&self, m: &ModuleRep<F::Elem>) -> Result<ModuleRep<F::Elem>> {
        self.require_selfinjective()?;
        if m.is_zero() {
            return Ok(self.zero_module());
        }
        let f = self.field();
        let pres = self.presentation(m);
        let n = self.rank();
        // Hom(M, e_k Π) as generator images in ⊕_a e_k Π e_{i_a}.
        let spaces: Vec<Subspace<F::Elem>> = (0..n).map(|k| self.hom_images(&pres, &self.projective(k))).collect();
        let offsets: Vec<Vec<usize>> = (0..n)
            .map(|k| {
                pres.generators
                    .iter()
                    .scan(0, |acc, (i, _)| {
                        let o = *acc;
                        *acc += self.block(k, *i).len();
                        Some(o)
                    })
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let left = (0..self.arrow_count())
            .map(|c| {
                let (t, s) = self.arrow_ends(c);
                let cols: Vec<Vec<F::Elem>> = spaces[s]
                    .basis()
                    .iter()
                    .map(|h| {
                        let mut v = vec![f.zero(); spaces[t].ambient()];
                        for (a, (i, _)) in pres.generators.iter().enumerate() {
                            let src = self.block(s, *i);
                            let dst = self.block(t, *i);
                            for (x, &p) in src.iter().enumerate() {
                                let coef = &h[offsets[s][a] + x];
                                if f.is_zero(coef) {
                                    continue;
                                }
                                for (r, d) in self.left_arrow_action(c, p) {
                                    let y = dst.binary_search(r).expect("left action stays in the block");
                                    f.add_mul_assign(&mut v[offsets[t][a] + y], coef, d);
                                }
                            }
                        }
                        spaces[t].coordinates(f, &v).expect("Hom(M, Π) is a left module")
                    })
                    .collect();
                if cols.is_empty() {
                    Matrix::zeros(f, dims[t], 0)
                } else {
                    Matrix::from_columns(dims[t], &cols)
                }
            })
            .collect();
        Ok(self.dual_of_left(dims, left))
    }

    pub fn is_tau_rigid(&self, m: &ModuleRep<F::Elem>) -> Result<bool> {
        let t = self.tau(m)?;
        Ok(self.hom_dim(m, &t) == 0)
    }
}
