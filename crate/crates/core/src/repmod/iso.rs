use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{ModuleRep, Morphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::pathalg::FiniteDimAlgebra;

const RANDOM_TRIALS: usize = 24;
const GRID_MAX_HOM: usize = 4;

fn combination<F: Field>(f: &F, basis: &[Morphism<F::Elem>], coeffs: &[i64]) -> Morphism<F::Elem> {
    let mut out = Morphism {
        blocks: basis[0]
            .blocks
            .iter()
            .map(|b| Matrix::zeros(f, b.rows(), b.cols()))
            .collect(),
    };
    for (phi, &c) in basis.iter().zip(coeffs) {
        out.add_scaled(f, &f.from_i64(c), phi);
    }
    out
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// Screens by dimension vectors and radical/socle series, then looks
    /// for an invertible element of `Hom(M, N)`.
    pub fn is_isomorphic(&self, m: &ModuleRep<F::Elem>, n: &ModuleRep<F::Elem>, seed: u64) -> bool {
        if m.dims() != n.dims() {
            return false;
        }
        if m.is_zero() {
            return true;
        }
        if self.structure_series(m) != self.structure_series(n) {
            return false;
        }
        let f = self.field();
        let basis = self.hom_space(m, n);
        if basis.is_empty() {
            return false;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRIALS {
            let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-50..=50)).collect();
            if combination(f, &basis, &coeffs).is_invertible(f) {
                return true;
            }
        }
        if basis.len() <= GRID_MAX_HOM {
            let h = basis.len() as u32;
            for code in 0..5i64.pow(h) {
                let coeffs: Vec<i64> = (0..h).map(|k| (code / 5i64.pow(k)) % 5 - 2).collect();
                if combination(f, &basis, &coeffs).is_invertible(f) {
                    return true;
                }
            }
        }
        false
    }

    fn check_radical_field(&self, m: &ModuleRep<F::Elem>, end_dim: usize) -> Result<()> {
        let p = self.field().characteristic();
        let bound = end_dim.max(m.total_dim()) as u64;
        if p != 0 && p <= bound {
            return Err(Error::RadicalUnavailable { p, dim: bound as usize });
        }
        Ok(())
    }

    /// `(dim End M, dim rad End M)`; the radical is the kernel of the
    /// trace form `(x, y) ↦ tr(xy)`.
    pub fn end_radical_dims(&self, m: &ModuleRep<F::Elem>) -> Result<(usize, usize)> {
        let f = self.field();
        let end = self.hom_space(m, m);
        self.check_radical_field(m, end.len())?;
        let gram = Matrix::from_fn(end.len(), end.len(), |x, y| end[x].compose(f, &end[y]).trace(f));
        Ok((end.len(), gram.kernel(f).len()))
    }

    /// `End M` is local. Submodules of `e_i Π` with simple socle take the
    /// shortcut.
    pub fn is_indecomposable(&self, m: &ModuleRep<F::Elem>) -> Result<bool> {
        if m.is_zero() {
            return Ok(false);
        }
        let soc: usize = self.socle_subspaces(m).iter().map(|s| s.dim()).sum();
        if soc == 1 {
            return Ok(true);
        }
        let (end, rad) = self.end_radical_dims(m)?;
        Ok(end - rad == 1)
    }

    /// Splits `M` into indecomposable summands by Fitting decompositions
    /// of endomorphisms that are neither nilpotent nor invertible.
    pub fn decompose(&self, m: &ModuleRep<F::Elem>, seed: u64) -> Result<Vec<ModuleRep<F::Elem>>> {
        if m.is_zero() {
            return Ok(Vec::new());
        }
        if self.is_indecomposable(m)? {
            return Ok(vec![m.clone()]);
        }
        let f = self.field();
        let end = self.hom_space(m, m);
        let id = Morphism::identity(f, m);
        let mut candidates: Vec<Morphism<F::Elem>> = Vec::new();
        for phi in &end {
            for lambda in [0, 1, -1, 2, -2] {
                let mut psi = phi.clone();
                psi.add_scaled(f, &f.from_i64(-lambda), &id);
                candidates.push(psi);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRIALS {
            let coeffs: Vec<i64> = (0..end.len()).map(|_| rng.gen_range(-3..=3)).collect();
            let base = combination(f, &end, &coeffs);
            for lambda in [0, 1, -1] {
                let mut psi = base.clone();
                psi.add_scaled(f, &f.from_i64(-lambda), &id);
                candidates.push(psi);
            }
        }
        for psi in candidates {
            let power = psi.pow(f, m.total_dim());
            if power.is_zero(f) || power.is_invertible(f) {
                continue;
            }
            let image: Vec<Subspace<F::Elem>> = power.image(f);
            let kernel: Vec<Subspace<F::Elem>> = power.kernel(f);
            let (a, _) = self.submodule(m, &image)?;
            let (b, _) = self.submodule(m, &kernel)?;
            let mut parts = self.decompose(&a, seed.wrapping_add(1))?;
            parts.extend(self.decompose(&b, seed.wrapping_add(2))?);
            return Ok(parts);
        }
        Err(Error::DecompositionFailed)
    }
}
