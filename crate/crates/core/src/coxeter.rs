//! The Weyl group `W(C)` through its faithful integer representation on `V*`.
//!
//! Elements are keyed by their matrices; the representation is injective,
//! so two words give the same element exactly when their matrix products
//! agree. Enumeration is a breadth-first search over left multiplication
//! by simple reflections, which makes the search depth equal to the length.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }
}

/// Matrix of `σ_i*` in the basis `α_1*, ..., α_n*`: column `i` is
/// `α_i* - Σ_j c_ji α_j*`, every other column is the unit vector.
pub fn simple_reflection_matrix(c: &CartanMatrix, i: usize) -> IntMatrix {
    let n = c.rank();
    let mut m = IntMatrix::identity(n);
    for j in 0..n {
        m.data[j * n + i] -= c.get(j, i);
    }
    m
}

/// Order of `s_i s_j` for `i != j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterOrder {
    Finite(u32),
    Infinite,
}

impl fmt::Display for CoxeterOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterOrder::Finite(m) => write!(f, "{m}"),
            CoxeterOrder::Infinite => write!(f, "∞"),
        }
    }
}

pub fn coxeter_order(c: &CartanMatrix, i: usize, j: usize) -> CoxeterOrder {
    assert_ne!(i, j, "coxeter order is defined for distinct generators");
    match c.product(i, j) {
        0 => CoxeterOrder::Finite(2),
        1 => CoxeterOrder::Finite(3),
        2 => CoxeterOrder::Finite(4),
        3 => CoxeterOrder::Finite(6),
        _ => CoxeterOrder::Infinite,
    }
}

/// Index of an element inside a [`WeylGroup`].
pub type ElementId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub length: usize,
    /// Lexicographically least reduced word (0-based generator indices).
    pub canonical_word: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationLimits {
    pub max_elements: usize,
    /// Stop after this BFS depth (inclusive).
    pub max_length: Option<usize>,
}

impl EnumerationLimits {
    pub fn cap(max_elements: usize) -> Self {
        EnumerationLimits {
            max_elements,
            max_length: None,
        }
    }

    pub fn ball(radius: usize) -> Self {
        EnumerationLimits {
            max_elements: usize::MAX,
            max_length: Some(radius),
        }
    }
}

/// The enumerated Weyl group, or a ball around the identity when the
/// enumeration was cut off.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    generators: Vec<IntMatrix>,
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, ElementId>,
    /// `left[w][i]` = id of `s_i w`, when it was reached.
    left: Vec<Vec<Option<ElementId>>>,
    /// `right[w][i]` = id of `w s_i`, when it lies in the enumerated set.
    right: Vec<Vec<Option<ElementId>>>,
    truncated: bool,
    cap: usize,
}

/// Enumerates `W(C)` up to `cap` elements.
pub fn enumerate_weyl(c: &CartanMatrix, cap: usize) -> WeylGroup {
    WeylGroup::enumerate(c, EnumerationLimits::cap(cap))
}

impl WeylGroup {
    pub fn enumerate(c: &CartanMatrix, limits: EnumerationLimits) -> WeylGroup {
        let n = c.rank();
        let generators: Vec<IntMatrix> = (0..n).map(|i| simple_reflection_matrix(c, i)).collect();
        let identity = IntMatrix::identity(n);
        let mut elements = vec![WeylElement {
            matrix: identity.clone(),
            length: 0,
            canonical_word: Vec::new(),
        }];
        let mut index = HashMap::from([(identity, 0)]);
        let mut left: Vec<Vec<Option<ElementId>>> = vec![vec![None; n]];
        let mut truncated = false;
        let mut frontier = vec![0usize];
        let mut depth = 0;
        'bfs: while !frontier.is_empty() {
            if limits.max_length.is_some_and(|m| depth >= m) {
                truncated = frontier
                    .iter()
                    .any(|&w| (0..n).any(|i| !index.contains_key(&generators[i].mul(&elements[w].matrix))));
                break;
            }
            let mut next = Vec::new();
            for &w in &frontier {
                for i in 0..n {
                    if left[w][i].is_some() {
                        continue;
                    }
                    let m = generators[i].mul(&elements[w].matrix);
                    let target = match index.get(&m) {
                        Some(&t) => t,
                        None => {
                            if elements.len() >= limits.max_elements {
                                truncated = true;
                                break 'bfs;
                            }
                            let mut word = Vec::with_capacity(depth + 1);
                            word.push(i);
                            word.extend_from_slice(&elements[w].canonical_word);
                            let id = elements.len();
                            elements.push(WeylElement {
                                matrix: m.clone(),
                                length: depth + 1,
                                canonical_word: word,
                            });
                            index.insert(m, id);
                            left.push(vec![None; n]);
                            next.push(id);
                            id
                        }
                    };
                    left[w][i] = Some(target);
                    left[target][i] = Some(w);
                    if elements[target].length == depth + 1 {
                        let mut word = Vec::with_capacity(depth + 1);
                        word.push(i);
                        word.extend_from_slice(&elements[w].canonical_word);
                        if word < elements[target].canonical_word {
                            elements[target].canonical_word = word;
                        }
                    }
                }
            }
            frontier = next;
            depth += 1;
        }
        let mut right = vec![vec![None; n]; elements.len()];
        for (w, row) in right.iter_mut().enumerate() {
            for (i, slot) in row.iter_mut().enumerate() {
                let m = elements[w].matrix.mul(&generators[i]);
                *slot = index.get(&m).copied();
            }
        }
        WeylGroup {
            rank: n,
            generators,
            elements,
            index,
            left,
            right,
            truncated,
            cap: limits.max_elements,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Fails with `CapExceeded` when the enumeration did not close up.
    pub fn require_complete(&self) -> Result<&Self> {
        if self.truncated {
            Err(Error::CapExceeded {
                what: "Weyl group enumeration".into(),
                cap: self.cap,
            })
        } else {
            Ok(self)
        }
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &WeylElement {
        &self.elements[id]
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn generator_matrix(&self, i: usize) -> &IntMatrix {
        &self.generators[i]
    }

    pub fn length(&self, id: ElementId) -> usize {
        self.elements[id].length
    }

    pub fn by_matrix(&self, m: &IntMatrix) -> Option<ElementId> {
        self.index.get(m).copied()
    }

    /// `s_i w`, if it lies in the enumerated set.
    pub fn left_mul(&self, i: usize, w: ElementId) -> Option<ElementId> {
        self.left[w][i]
    }

    /// `w s_i`, if it lies in the enumerated set.
    pub fn right_mul(&self, w: ElementId, i: usize) -> Option<ElementId> {
        self.right[w][i]
    }

    /// The element represented by a word, via matrix multiplication.
    pub fn element_of_word(&self, word: &[usize]) -> Option<ElementId> {
        let mut m = IntMatrix::identity(self.rank);
        for &i in word {
            m = m.mul(&self.generators[i]);
        }
        self.by_matrix(&m)
    }

    /// The element with the given canonical word.
    pub fn by_word(&self, word: &[usize]) -> Option<ElementId> {
        self.element_of_word(word)
            .filter(|&id| self.elements[id].canonical_word == word)
    }

    pub fn longest_element(&self) -> ElementId {
        (0..self.order()).max_by_key(|&w| self.elements[w].length).unwrap_or(0)
    }

    /// Multiplies out a word with the Cayley graph instead of matrices.
    pub fn walk_word(&self, word: &[usize]) -> Option<ElementId> {
        let mut w = self.identity();
        for &i in word.iter().rev() {
            w = self.left_mul(i, w)?;
        }
        Some(w)
    }

    pub fn product(&self, u: ElementId, v: ElementId) -> Option<ElementId> {
        let m = self.elements[u].matrix.mul(&self.elements[v].matrix);
        self.by_matrix(&m)
    }

    /// Every reduced expression of `w`, sorted.
    pub fn all_reduced_words(&self, w: ElementId) -> Vec<Vec<usize>> {
        let mut memo: HashMap<ElementId, BTreeSet<Vec<usize>>> = HashMap::new();
        self.reduced_words_memo(w, &mut memo).into_iter().collect()
    }

    fn reduced_words_memo(
        &self,
        w: ElementId,
        memo: &mut HashMap<ElementId, BTreeSet<Vec<usize>>>,
    ) -> BTreeSet<Vec<usize>> {
        if let Some(ws) = memo.get(&w) {
            return ws.clone();
        }
        let len = self.length(w);
        let mut out = BTreeSet::new();
        if len == 0 {
            out.insert(Vec::new());
        } else {
            for i in 0..self.rank {
                let Some(u) = self.left_mul(i, w) else { continue };
                if self.length(u) < len {
                    for tail in self.reduced_words_memo(u, memo) {
                        let mut word = Vec::with_capacity(len);
                        word.push(i);
                        word.extend(tail);
                        out.insert(word);
                    }
                }
            }
        }
        memo.insert(w, out.clone());
        out
    }

    /// 0-Hecke product: `u ⋆ s_i = u s_i` if that is longer, else `u`.
    pub fn demazure_product(&self, u: ElementId, v: ElementId) -> ElementId {
        let mut acc = u;
        for &i in &self.elements[v].canonical_word {
            acc = self.demazure_step(acc, i);
        }
        acc
    }

    pub fn demazure_step(&self, u: ElementId, i: usize) -> ElementId {
        match self.right_mul(u, i) {
            Some(us) if self.length(us) > self.length(u) => us,
            Some(_) => u,
            None => panic!("demazure product left the enumerated set"),
        }
    }

    /// Demazure product along an arbitrary word.
    pub fn demazure_of_word(&self, word: &[usize]) -> ElementId {
        word.iter().fold(self.identity(), |acc, &i| self.demazure_step(acc, i))
    }

    pub fn word_string(&self, w: ElementId) -> String {
        format_word(&self.elements[w].canonical_word)
    }
}

/// 1-based digits; dot-separated when some generator index exceeds 9.
pub fn format_word(word: &[usize]) -> String {
    if word.iter().any(|&i| i >= 9) {
        word.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(".")
    } else {
        word.iter().map(|i| (i + 1).to_string()).collect()
    }
}
