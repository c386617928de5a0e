use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::stt::IdealSemigroup;
use crate::coxeter::ElementId;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::repmod::ModuleRep;

#[derive(Debug, Clone)]
pub struct NamedModule<E> {
    pub name: String,
    pub module: ModuleRep<E>,
    /// Occurs as some block `e_i I_w`.
    pub occurs: bool,
}

/// Isomorphism classes of all blocks `e_i I_w`, named `e{k}P`, `E{k}`, or
/// `e{i}I{word}` after their first occurrence.
#[derive(Debug, Clone)]
pub struct Catalogue<E> {
    pub classes: Vec<NamedModule<E>>,
    /// `blocks[w]` lists `(vertex, class)` for the nonzero blocks of `I_w`.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

impl<E: Clone> Catalogue<E> {
    pub fn name(&self, class: usize) -> &str {
        &self.classes[class].name
    }

    /// Summand names of `I_w` joined by `+`, or `0`.
    pub fn label(&self, w: ElementId) -> String {
        if self.blocks[w].is_empty() {
            "0".into()
        } else {
            self.blocks[w]
                .iter()
                .map(|&(_, c)| self.name(c))
                .collect::<Vec<_>>()
                .join("+")
        }
    }

    pub fn occurring(&self) -> impl Iterator<Item = &NamedModule<E>> {
        self.classes.iter().filter(|c| c.occurs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub word: String,
    pub summands: Vec<String>,
    pub dims: Vec<Vec<usize>>,
    pub rank_vectors: Vec<Option<Vec<usize>>>,
    pub projective: Vec<String>,
}

impl GraphNode {
    pub fn label(&self) -> String {
        if self.summands.is_empty() {
            "0".into()
        } else {
            self.summands.join("+")
        }
    }

    pub fn dot_id(&self) -> String {
        format!("w{}", self.word.replace('.', "_"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    /// 1-based vertex of the mutation.
    pub label: usize,
}

/// The support τ-tilting mutation graph, with arrows pointing along left
/// mutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl MutationGraph {
    pub fn node(&self, word: &str) -> Option<&GraphNode> {
        self.nodes.iter().find(|n| n.word == word)
    }

    /// Number of edges touching each node, in node order.
    pub fn degrees(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .map(|n| self.edges.iter().filter(|e| e.from == n.word || e.to == n.word).count())
            .collect()
    }

    /// Connected as an undirected graph.
    pub fn is_connected(&self) -> bool {
        let Some(first) = self.nodes.first() else {
            return true;
        };
        let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(&e.from).or_default().push(&e.to);
            adj.entry(&e.to).or_default().push(&e.from);
        }
        let mut seen = vec![first.word.as_str()];
        let mut queue = VecDeque::from([first.word.as_str()]);
        while let Some(v) = queue.pop_front() {
            for &u in adj.get(v).map(Vec::as_slice).unwrap_or(&[]) {
                if !seen.contains(&u) {
                    seen.push(u);
                    queue.push_back(u);
                }
            }
        }
        seen.len() == self.nodes.len()
    }

    /// Labelled edges as `(from label, vertex, to label)`.
    pub fn labelled_edges(&self) -> Vec<(String, usize, String)> {
        let label = |w: &str| self.node(w).map(GraphNode::label).unwrap_or_default();
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| (label(&e.from), e.label, label(&e.to)))
            .collect();
        out.sort();
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph mutation {\n  rankdir=LR;\n");
        for n in &self.nodes {
            s.push_str(&format!("  {} [label=\"{}\"];\n", n.dot_id(), n.label()));
        }
        for e in &self.edges {
            let id = |w: &str| self.node(w).map(GraphNode::dot_id).unwrap_or_default();
            s.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                id(&e.from),
                id(&e.to),
                e.label
            ));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl<'a, F: Field> IdealSemigroup<'a, F> {
    pub fn catalogue(&self) -> Catalogue<F::Elem> {
        let alg = self.algebra();
        let n = alg.rank();
        let mut classes: Vec<NamedModule<F::Elem>> = Vec::new();
        for k in 0..n {
            classes.push(NamedModule {
                name: format!("e{}P", k + 1),
                module: alg.projective(k),
                occurs: false,
            });
        }
        for k in 0..n {
            classes.push(NamedModule {
                name: format!("E{}", k + 1),
                module: alg.generalized_simple(k),
                occurs: false,
            });
        }
        let mut blocks = vec![Vec::new(); self.weyl().order()];
        for w in self.ordered_elements() {
            for (i, m) in self.blocks(w) {
                let found = classes
                    .iter()
                    .position(|c| alg.is_isomorphic(&c.module, &m, self.seed()));
                let c = match found {
                    Some(c) => c,
                    None => {
                        classes.push(NamedModule {
                            name: format!("e{}I{}", i + 1, self.word_label(w)),
                            module: m,
                            occurs: false,
                        });
                        classes.len() - 1
                    }
                };
                classes[c].occurs = true;
                blocks[w].push((i, c));
            }
        }
        Catalogue { classes, blocks }
    }

    /// Nodes `I_w`, with an edge `I_w → I_{s_i w}` labelled `i` whenever
    /// `l(s_i w) > l(w)`.
    pub fn mutation_graph(&self, catalogue: &Catalogue<F::Elem>) -> MutationGraph {
        let alg = self.algebra();
        let weyl = self.weyl();
        let order = self.ordered_elements();
        let nodes = order
            .iter()
            .map(|&w| {
                let pair = self.stt_pair(w);
                GraphNode {
                    word: self.word_label(w),
                    summands: catalogue.blocks[w]
                        .iter()
                        .map(|&(_, c)| catalogue.name(c).to_string())
                        .collect(),
                    dims: pair.summands.iter().map(|m| m.dims().to_vec()).collect(),
                    rank_vectors: pair.summands.iter().map(|m| alg.locally_free_rank(m)).collect(),
                    projective: pair.projective.iter().map(|k| format!("e{}P", k + 1)).collect(),
                }
            })
            .collect();
        let edges = self
            .upward_edges()
            .into_iter()
            .map(|(w, i)| GraphEdge {
                from: self.word_label(w),
                to: self.word_label(weyl.left_mul(i, w).expect("finite group")),
                label: i + 1,
            })
            .collect();
        MutationGraph { nodes, edges }
    }

    /// Mutates the pair of `w` at its block `e_i I_w` and compares with the
    /// pair of `s_i w`.
    pub fn mutation_matches_edge(&self, w: ElementId, i: usize) -> Result<bool> {
        let alg = self.algebra();
        let pair = self.stt_pair(w);
        let Some(index) = self.blocks(w).iter().position(|(j, _)| *j == i) else {
            return Ok(false);
        };
        let mutated = alg.left_mutation(&pair, index, self.seed())?;
        let v = self.weyl().left_mul(i, w).expect("finite group");
        Ok(alg.pairs_isomorphic(&mutated, &self.stt_pair(v), self.seed()))
    }

    /// Upward edges `(w, i)` of the graph.
    pub fn upward_edges(&self) -> Vec<(ElementId, usize)> {
        let weyl = self.weyl();
        self.ordered_elements()
            .into_iter()
            .flat_map(|w| {
                (0..weyl.rank())
                    .filter(move |&i| {
                        let v = weyl.left_mul(i, w).expect("finite group");
                        weyl.length(v) > weyl.length(w)
                    })
                    .map(move |i| (w, i))
            })
            .collect()
    }
}
