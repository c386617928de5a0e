use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::field::Field;
use crate::pathalg::FiniteDimAlgebra;
use crate::repmod::ModuleRep;

/// One named homological identity and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> IdentityCheck {
    IdentityCheck {
        name: name.into(),
        passed,
        detail,
    }
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// Identities relating `E_i`, `e_i I_i` and `e_i Π` on a selfinjective `Π`.
    pub fn homological_identities(&self, seed: u64) -> Result<Vec<IdentityCheck>> {
        let n = self.rank();
        let c = &self.cartan_data().cartan;
        let d = |i: usize| self.cartan_data().symmetrizer.get(i) as usize;
        let sigma = self.nakayama_permutation()?;
        let simples: Vec<_> = (0..n).map(|i| self.generalized_simple(i)).collect();
        let projectives: Vec<_> = (0..n).map(|i| self.projective(i)).collect();
        let ideals: Vec<_> = (0..n).map(|i| self.vertex_ideal(&[i])).collect();
        let blocks: Vec<_> = (0..n).map(|i| self.ideal_block(&ideals[i], i)).collect();
        let mut out = Vec::new();

        for i in 0..n {
            let lhs = simples[i].total_dim()
                + simples[sigma[i]].total_dim()
                + c.neighbors(i)
                    .map(|j| c.get(j, i).unsigned_abs() as usize * projectives[j].total_dim())
                    .sum::<usize>();
            let rhs = 2 * projectives[i].total_dim();
            out.push(check(
                "EI resolution",
                lhs == rhs,
                format!("i = {}: {lhs} vs {rhs}", i + 1),
            ));

            let nu = self.nakayama_functor(&simples[sigma[i]])?;
            out.push(check(
                "c_i = c_σ(i) and νE_σ(i) ≅ E_i",
                d(i) == d(sigma[i]) && self.is_isomorphic(&nu, &simples[i], seed),
                format!("i = {}, σ(i) = {}", i + 1, sigma[i] + 1),
            ));

            for j in 0..n {
                let h = self.hom_dim(&projectives[j], &simples[i]);
                let want = if i == j { d(i) } else { 0 };
                out.push(check(
                    "Hom(e_jΠ, E_i)",
                    h == want,
                    format!("i = {}, j = {}: {h} vs {want}", i + 1, j + 1),
                ));
            }

            let ideal_module = self.ideal_module(&ideals[i]);
            out.push(check(
                "Hom(I_i, E_i) = 0",
                self.hom_dim(&ideal_module, &simples[i]) == 0,
                format!("i = {}", i + 1),
            ));
            out.push(check(
                "I_i and e_iI_i locally free",
                self.locally_free_rank(&ideal_module).is_some() && self.locally_free_rank(&blocks[i]).is_some(),
                format!("i = {}", i + 1),
            ));

            if c.neighbors(i).next().is_some() {
                let t = self.tau(&blocks[i])?;
                out.push(check(
                    "τ(e_iI_i) ≅ E_i",
                    self.is_isomorphic(&t, &simples[i], seed),
                    format!("i = {}", i + 1),
                ));
            }
        }

        let family: Vec<(String, &ModuleRep<F::Elem>)> = (0..n)
            .flat_map(|i| {
                [
                    (format!("E{}", i + 1), &simples[i]),
                    (format!("e{}I{}", i + 1, i + 1), &blocks[i]),
                    (format!("e{}P", i + 1), &projectives[i]),
                ]
            })
            .collect();
        for (a, (na, ma)) in family.iter().enumerate() {
            for (nb, mb) in &family[a..] {
                let (x, y) = (self.ext1_dim(ma, mb), self.ext1_dim(mb, ma));
                out.push(check("Ext¹ symmetry", x == y, format!("{na}, {nb}: {x} vs {y}")));
            }
        }
        Ok(out)
    }
}
