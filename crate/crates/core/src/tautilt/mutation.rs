use super::stt::SttPair;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::pathalg::FiniteDimAlgebra;
use crate::repmod::{ModuleRep, Morphism};

impl<F: Field> FiniteDimAlgebra<F> {
    /// Left mutation of `(X ⊕ U, P)` at the summand `X = summands[index]`.
    pub fn left_mutation(&self, pair: &SttPair<F::Elem>, index: usize, seed: u64) -> Result<SttPair<F::Elem>> {
        let f = self.field();
        let x = pair
            .summands
            .get(index)
            .ok_or_else(|| Error::NotMutable(format!("no summand {index}")))?;
        let u: Vec<ModuleRep<F::Elem>> = pair
            .summands
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != index)
            .map(|(_, m)| m.clone())
            .collect();
        let u_sum = self.direct_sum(&u);
        if self.in_fac(&u_sum, x) {
            return Err(Error::NotMutable("X lies in Fac U".into()));
        }

        // Evaluation map X → ⊕_k U_k^{dim Hom(X, U_k)}.
        let mut comps: Vec<(usize, Morphism<F::Elem>)> = Vec::new();
        for (k, uk) in u.iter().enumerate() {
            for phi in self.hom_space(x, uk) {
                comps.push((k, phi));
            }
        }
        let between: Vec<Vec<Vec<Morphism<F::Elem>>>> = u
            .iter()
            .map(|a| u.iter().map(|b| self.hom_space(a, b)).collect())
            .collect();
        // Left-minimalize: drop components that factor through the others.
        loop {
            let redundant = (0..comps.len()).find(|&c| {
                let (k, phi) = &comps[c];
                let others = comps
                    .iter()
                    .enumerate()
                    .filter(|&(d, _)| d != c)
                    .flat_map(|(_, (j, psi))| between[*j][*k].iter().map(move |h| h.compose(f, psi).flatten()));
                let span = Subspace::spanned_by(f, phi.flatten().len(), others);
                span.contains(f, &phi.flatten())
            });
            match redundant {
                Some(c) => {
                    comps.remove(c);
                }
                None => break,
            }
        }

        let targets: Vec<ModuleRep<F::Elem>> = comps.iter().map(|(k, _)| u[*k].clone()).collect();
        let target = self.direct_sum(&targets);
        let images: Vec<Subspace<F::Elem>> = (0..self.rank())
            .map(|v| {
                let cols = (0..x.dim_at(v)).map(|c| {
                    comps
                        .iter()
                        .flat_map(|(_, phi)| phi.blocks[v].column(c))
                        .collect::<Vec<_>>()
                });
                Subspace::spanned_by(f, target.dim_at(v), cols)
            })
            .collect();
        let (y, _) = self.quotient(&target, &images)?;

        if y.is_zero() {
            let free: Vec<usize> = (0..self.rank())
                .filter(|&k| u_sum.dim_at(k) == 0 && !pair.projective.contains(&k))
                .collect();
            let [k] = free[..] else {
                return Err(Error::VerificationFailed(format!(
                    "mutation with zero cokernel has {} candidate projectives",
                    free.len()
                )));
            };
            let mut projective = pair.projective.clone();
            projective.push(k);
            return Ok(SttPair::new(u, projective));
        }
        let parts = self.decompose(&y, seed)?;
        if parts.iter().any(|p| !self.is_isomorphic(&parts[0], p, seed)) {
            return Err(Error::VerificationFailed("cokernel is not isotypic".into()));
        }
        let mut summands = u;
        summands.push(parts[0].clone());
        Ok(SttPair::new(summands, pair.projective.clone()))
    }
}
