use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::stt::IdealSemigroup;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Random Demazure pairs checked above rank 2.
    pub demazure_samples: usize,
    /// Random mutation edges checked above rank 2.
    pub mutation_samples: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            demazure_samples: 200,
            mutation_samples: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub rank: usize,
    pub weyl_order: usize,
    /// Every reduced word of every `w` gives `I_w`.
    pub well_defined: bool,
    /// The ideals `I_w` are pairwise distinct.
    pub injective: bool,
    pub valid_pairs: usize,
    /// Basic support τ-tilting modules among the `I_w`, up to isomorphism.
    pub stt_count: usize,
    pub tau_rigid_indecomposables: Vec<String>,
    pub demazure_pairs: usize,
    pub demazure_consistent: bool,
    pub mutation_edges: usize,
    pub mutation_consistent: bool,
    /// Elements whose blocks are all locally free. Observed, not required.
    pub locally_free_elements: usize,
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::ReportFailure(self.failures))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl<'a, F: Field> IdealSemigroup<'a, F> {
    pub fn classification_report(&self, opts: ReportOptions) -> Result<ClassificationReport> {
        let alg = self.algebra();
        let weyl = self.weyl();
        let order = weyl.order();
        let mut failures = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed());

        let mut memo = HashMap::new();
        let mut well_defined = true;
        for w in 0..order {
            for word in self.word_mismatches(w, &mut memo) {
                well_defined = false;
                failures.push(format!(
                    "word {} gives a different ideal than {}",
                    crate::coxeter::format_word(&word),
                    self.word_label(w)
                ));
            }
        }

        let mut seen: HashMap<_, usize> = HashMap::new();
        let mut injective = true;
        for w in 0..order {
            if let Some(&u) = seen.get(self.ideal_of_word(w)) {
                injective = false;
                failures.push(format!("I_{} = I_{}", self.word_label(u), self.word_label(w)));
            } else {
                seen.insert(self.ideal_of_word(w), w);
            }
        }

        let catalogue = self.catalogue();
        let mut valid_pairs = 0;
        let mut keys = BTreeSet::new();
        let mut locally_free_elements = 0;
        for w in 0..order {
            let pair = self.stt_pair(w);
            match alg.verify_stt(&pair, self.seed())? {
                Ok(()) => {
                    valid_pairs += 1;
                    let mut classes: Vec<usize> = catalogue.blocks[w].iter().map(|&(_, c)| c).collect();
                    classes.sort_unstable();
                    keys.insert((classes, pair.projective.clone()));
                }
                Err(e) => failures.push(format!("pair of {}: {e}", self.word_label(w))),
            }
            if pair.summands.iter().all(|m| alg.locally_free_rank(m).is_some()) {
                locally_free_elements += 1;
            }
        }
        if keys.len() != order {
            failures.push(format!("{} support τ-tilting modules for |W| = {order}", keys.len()));
        }

        let pairs: Vec<(usize, usize)> = if weyl.rank() <= 2 {
            (0..order).flat_map(|u| (0..order).map(move |v| (u, v))).collect()
        } else {
            (0..opts.demazure_samples)
                .map(|_| (rng.gen_range(0..order), rng.gen_range(0..order)))
                .collect()
        };
        let mut demazure_consistent = true;
        for &(u, v) in &pairs {
            let product = alg.ideal_product(self.ideal_of_word(u), self.ideal_of_word(v));
            let star = weyl.demazure_product(u, v);
            if &product != self.ideal_of_word(star) {
                demazure_consistent = false;
                failures.push(format!(
                    "I_{} I_{} differs from I_{}",
                    self.word_label(u),
                    self.word_label(v),
                    self.word_label(star)
                ));
            }
        }

        let mut edges = self.upward_edges();
        if weyl.rank() > 2 && edges.len() > opts.mutation_samples {
            let mut picked = Vec::with_capacity(opts.mutation_samples);
            while picked.len() < opts.mutation_samples {
                let e = edges.swap_remove(rng.gen_range(0..edges.len()));
                picked.push(e);
            }
            edges = picked;
        }
        let mut mutation_consistent = true;
        for &(w, i) in &edges {
            let ok = match self.mutation_matches_edge(w, i) {
                Ok(ok) => ok,
                Err(e @ Error::RadicalUnavailable { .. }) => return Err(e),
                Err(_) => false,
            };
            if !ok {
                mutation_consistent = false;
                failures.push(format!(
                    "left mutation of {} at {} does not give s{} w",
                    self.word_label(w),
                    i + 1,
                    i + 1
                ));
            }
        }

        Ok(ClassificationReport {
            rank: weyl.rank(),
            weyl_order: order,
            well_defined,
            injective,
            valid_pairs,
            stt_count: keys.len(),
            tau_rigid_indecomposables: catalogue.occurring().map(|c| c.name.clone()).collect(),
            demazure_pairs: pairs.len(),
            demazure_consistent,
            mutation_edges: edges.len(),
            mutation_consistent,
            locally_free_elements,
            failures,
        })
    }
}
