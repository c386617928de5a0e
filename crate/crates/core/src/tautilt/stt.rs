use std::collections::HashMap;

use super::ideal::Ideal;
use crate::coxeter::{enumerate_weyl, ElementId, WeylGroup};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::pathalg::FiniteDimAlgebra;
use crate::repmod::ModuleRep;

/// A support τ-tilting candidate `(M, P)`: `M` is given by its
/// indecomposable summands and `P` by the vertices `k` of `e_k Π`.
#[derive(Debug, Clone)]
pub struct SttPair<E> {
    pub summands: Vec<ModuleRep<E>>,
    pub projective: Vec<usize>,
    /// The Weyl element the pair was built from, if any.
    pub element: Option<ElementId>,
}

impl<E: Clone> SttPair<E> {
    pub fn new(summands: Vec<ModuleRep<E>>, mut projective: Vec<usize>) -> Self {
        projective.sort_unstable();
        projective.dedup();
        SttPair {
            summands: summands.into_iter().filter(|m| !m.is_zero()).collect(),
            projective,
            element: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SttFailure {
    Decomposable { summand: usize },
    NotTauRigid { from: usize, to: usize },
    HomFromProjective { vertex: usize },
    WrongCount { modules: usize, projectives: usize },
}

impl std::fmt::Display for SttFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SttFailure::Decomposable { summand } => write!(f, "summand {summand} is decomposable"),
            SttFailure::NotTauRigid { from, to } => {
                write!(f, "Hom(M{from}, τM{to}) is nonzero")
            }
            SttFailure::HomFromProjective { vertex } => {
                write!(f, "Hom(e{}Π, M) is nonzero", vertex + 1)
            }
            SttFailure::WrongCount { modules, projectives } => {
                write!(f, "|M| + |P| = {modules} + {projectives}")
            }
        }
    }
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// Checks that `(M, P)` is a support τ-tilting pair.
    pub fn verify_stt(&self, pair: &SttPair<F::Elem>, seed: u64) -> Result<std::result::Result<(), SttFailure>> {
        let ms = &pair.summands;
        for (k, m) in ms.iter().enumerate() {
            if !self.is_indecomposable(m)? {
                return Ok(Err(SttFailure::Decomposable { summand: k }));
            }
        }
        let taus: Vec<_> = ms.iter().map(|m| self.tau(m)).collect::<Result<_>>()?;
        for (i, m) in ms.iter().enumerate() {
            for (j, t) in taus.iter().enumerate() {
                if self.hom_dim(m, t) != 0 {
                    return Ok(Err(SttFailure::NotTauRigid { from: i, to: j }));
                }
            }
        }
        for &k in &pair.projective {
            if ms.iter().any(|m| m.dim_at(k) != 0) {
                return Ok(Err(SttFailure::HomFromProjective { vertex: k }));
            }
        }
        let modules = self.count_iso_classes(ms, seed);
        if modules + pair.projective.len() != self.rank() {
            return Ok(Err(SttFailure::WrongCount {
                modules,
                projectives: pair.projective.len(),
            }));
        }
        Ok(Ok(()))
    }

    pub(crate) fn count_iso_classes(&self, ms: &[ModuleRep<F::Elem>], seed: u64) -> usize {
        let mut reps: Vec<&ModuleRep<F::Elem>> = Vec::new();
        for m in ms {
            if !reps.iter().any(|r| self.is_isomorphic(r, m, seed)) {
                reps.push(m);
            }
        }
        reps.len()
    }

    /// Same projective part and the same summands up to isomorphism.
    pub fn pairs_isomorphic(&self, a: &SttPair<F::Elem>, b: &SttPair<F::Elem>, seed: u64) -> bool {
        let covers = |x: &SttPair<F::Elem>, y: &SttPair<F::Elem>| {
            x.summands
                .iter()
                .all(|m| y.summands.iter().any(|n| self.is_isomorphic(m, n, seed)))
        };
        a.projective == b.projective
            && self.count_iso_classes(&a.summands, seed) == self.count_iso_classes(&b.summands, seed)
            && covers(a, b)
            && covers(b, a)
    }
}

/// The ideals `I_w` for all `w` in the (finite) Weyl group.
#[derive(Debug, Clone)]
pub struct IdealSemigroup<'a, F: Field> {
    alg: &'a FiniteDimAlgebra<F>,
    weyl: WeylGroup,
    ideals: Vec<Ideal<F::Elem>>,
    nakayama: Vec<usize>,
    seed: u64,
}

impl<'a, F: Field> IdealSemigroup<'a, F> {
    /// Enumerates `W` (at most `cap` elements) and builds every `I_w`.
    pub fn new(alg: &'a FiniteDimAlgebra<F>, cap: usize, seed: u64) -> Result<Self> {
        let nakayama = alg.nakayama_permutation()?;
        let weyl = enumerate_weyl(&alg.cartan_data().cartan, cap);
        weyl.require_complete()?;
        let mut ideals: Vec<Ideal<F::Elem>> = Vec::with_capacity(weyl.order());
        for w in 0..weyl.order() {
            let word = &weyl.element(w).canonical_word;
            let ideal = match word.first() {
                None => alg.unit_ideal(),
                Some(&i) => {
                    // Elements come in BFS order, so s_i w is already built.
                    let rest = weyl.left_mul(i, w).expect("finite group");
                    alg.vertex_ideal_times(i, &ideals[rest])
                }
            };
            ideals.push(ideal);
        }
        Ok(IdealSemigroup {
            alg,
            weyl,
            ideals,
            nakayama,
            seed,
        })
    }

    pub fn algebra(&self) -> &'a FiniteDimAlgebra<F> {
        self.alg
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn nakayama(&self) -> &[usize] {
        &self.nakayama
    }

    pub fn ideal_of_word(&self, w: ElementId) -> &Ideal<F::Elem> {
        &self.ideals[w]
    }

    pub fn ideals(&self) -> &[Ideal<F::Elem>] {
        &self.ideals
    }

    /// `I_{i_1} ⋯ I_{i_k}` for an arbitrary word.
    pub fn ideal_along_word(&self, word: &[usize]) -> Ideal<F::Elem> {
        word.iter()
            .rev()
            .fold(self.alg.unit_ideal(), |acc, &i| self.alg.vertex_ideal_times(i, &acc))
    }

    /// Reduced words of `w` whose product differs from `I_w`.
    pub fn word_mismatches(&self, w: ElementId, memo: &mut HashMap<Vec<usize>, Ideal<F::Elem>>) -> Vec<Vec<usize>> {
        self.weyl
            .all_reduced_words(w)
            .into_iter()
            .filter(|word| self.memo_product(word, memo) != self.ideals[w])
            .collect()
    }

    fn memo_product(&self, word: &[usize], memo: &mut HashMap<Vec<usize>, Ideal<F::Elem>>) -> Ideal<F::Elem> {
        if word.is_empty() {
            return self.alg.unit_ideal();
        }
        if let Some(i) = memo.get(word) {
            return i.clone();
        }
        let tail = self.memo_product(&word[1..], memo);
        let out = self.alg.vertex_ideal_times(word[0], &tail);
        memo.insert(word.to_vec(), out.clone());
        out
    }

    /// The nonzero blocks `e_i I_w`, tagged by vertex.
    pub fn blocks(&self, w: ElementId) -> Vec<(usize, ModuleRep<F::Elem>)> {
        (0..self.alg.rank())
            .map(|i| (i, self.alg.ideal_block(&self.ideals[w], i)))
            .filter(|(_, m)| !m.is_zero())
            .collect()
    }

    /// `(I_w, P_w)` with `P_w = ⊕_{e_i I_w = 0} e_{σ(i)} Π`.
    pub fn stt_pair(&self, w: ElementId) -> SttPair<F::Elem> {
        let blocks = self.blocks(w);
        let projective = (0..self.alg.rank())
            .filter(|i| !blocks.iter().any(|(j, _)| j == i))
            .map(|i| self.nakayama[i])
            .collect();
        let mut pair = SttPair::new(blocks.into_iter().map(|(_, m)| m).collect(), projective);
        pair.element = Some(w);
        pair
    }

    /// [`Self::stt_pair`], failing if the pair is not support τ-tilting.
    pub fn checked_stt_pair(&self, w: ElementId) -> Result<SttPair<F::Elem>> {
        let pair = self.stt_pair(w);
        match self.alg.verify_stt(&pair, self.seed)? {
            Ok(()) => Ok(pair),
            Err(e) => Err(Error::VerificationFailed(format!(
                "pair of w = {}: {e}",
                self.word_label(w)
            ))),
        }
    }

    /// Canonical word, `e` for the identity.
    pub fn word_label(&self, w: ElementId) -> String {
        if self.weyl.length(w) == 0 {
            "e".into()
        } else {
            self.weyl.word_string(w)
        }
    }

    /// Element ids sorted by length, then canonical word.
    pub fn ordered_elements(&self) -> Vec<ElementId> {
        let mut ids: Vec<ElementId> = (0..self.weyl.order()).collect();
        ids.sort_by(|&a, &b| {
            let (ea, eb) = (self.weyl.element(a), self.weyl.element(b));
            (ea.length, &ea.canonical_word).cmp(&(eb.length, &eb.canonical_word))
        });
        ids
    }
}
