//! Paths in the doubled quiver, the preprojective relations, and the
//! finite-dimensional quotient `Π(C, D)`.
//!
//! Composition is function-style: the word `a_1 a_2 ... a_k` is a path when
//! `source(a_r) = target(a_{r+1})`, and its target is `target(a_1)`. With
//! this convention `e_i Π` is spanned by the paths ending at `i`.

mod algebra;
mod groebner;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{ArrowKind, CartanData, DoubledQuiver};
use crate::field::Field;

pub use algebra::{AlgebraReport, FiniteDimAlgebra};
pub use groebner::{GroebnerBasis, GroebnerCaps};

/// A path, or the trivial path `e_i` when `arrows` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub target: usize,
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            target: vertex,
            source: vertex,
            arrows: Vec::new(),
        }
    }

    /// Panics if the arrows do not compose.
    pub fn from_arrows(q: &DoubledQuiver, arrows: Vec<usize>) -> Self {
        assert!(!arrows.is_empty(), "use Path::trivial for idempotents");
        for w in arrows.windows(2) {
            assert_eq!(
                q.arrow(w[0]).source,
                q.arrow(w[1]).target,
                "arrows {} and {} do not compose",
                q.arrow(w[0]).name,
                q.arrow(w[1]).name
            );
        }
        Path {
            target: q.arrow(arrows[0]).target,
            source: q.arrow(*arrows.last().unwrap()).source,
            arrows,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self · other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.source != other.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            target: self.target,
            source: other.source,
            arrows,
        })
    }

    pub fn display(&self, q: &DoubledQuiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.target + 1);
        }
        // Collapse runs of the same loop into powers.
        let mut out = String::new();
        let mut k = 0;
        while k < self.arrows.len() {
            let a = self.arrows[k];
            let mut run = 1;
            while k + run < self.arrows.len() && self.arrows[k + run] == a {
                run += 1;
            }
            let is_loop = matches!(q.arrow(a).kind, ArrowKind::Loop { .. });
            if is_loop && run > 1 {
                out.push_str(&format!("{}^{}", q.arrow(a).name, run));
                k += run;
            } else {
                out.push_str(&q.arrow(a).name);
                k += 1;
            }
        }
        out
    }
}

/// Length first, then lexicographic in arrow indices.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.target.cmp(&other.target))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement<E> {
    terms: BTreeMap<Path, E>,
}

impl<E: Clone> Default for AlgebraElement<E> {
    fn default() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }
}

impl<E: Clone> AlgebraElement<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &E)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Path, &E)> {
        self.terms.iter().next_back()
    }

    pub fn from_path<F: Field<Elem = E>>(f: &F, p: Path) -> Self {
        let mut e = Self::zero();
        e.add_term(f, p, f.one());
        e
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, f: &F, p: Path, c: E) {
        if f.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(x) => {
                *x = f.add(x, &c);
                if f.is_zero(x) {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add_scaled<F: Field<Elem = E>>(&mut self, f: &F, c: &E, other: &Self) {
        for (p, x) in &other.terms {
            self.add_term(f, p.clone(), f.mul(c, x));
        }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, x) in &self.terms {
            for (q, y) in &other.terms {
                if let Some(pq) = p.concat(q) {
                    out.add_term(f, pq, f.mul(x, y));
                }
            }
        }
        out
    }

    pub fn display<F: Field<Elem = E>>(&self, f: &F, q: &DoubledQuiver) -> String
    where
        E: fmt::Display,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = f.is_zero(&f.add(c, &f.one()));
            let word = p.display(q);
            if f.is_one(c) {
                if k > 0 {
                    out.push('+');
                }
                out.push_str(&word);
            } else if neg {
                out.push('-');
                out.push_str(&word);
            } else {
                if k > 0 {
                    out.push('+');
                }
                out.push_str(&format!("({c}){word}"));
            }
        }
        out
    }
}

/// The generators of the relation ideal, grouped by kind.
#[derive(Debug, Clone)]
pub struct RelationSet<E> {
    pub nilpotency: Vec<AlgebraElement<E>>,
    pub commutativity: Vec<AlgebraElement<E>>,
    pub mesh: Vec<AlgebraElement<E>>,
}

impl<E: Clone> RelationSet<E> {
    pub fn all(&self) -> impl Iterator<Item = &AlgebraElement<E>> {
        self.nilpotency.iter().chain(&self.commutativity).chain(&self.mesh)
    }
}

fn loop_power(q: &DoubledQuiver, i: usize, k: usize) -> Vec<usize> {
    vec![q.loop_id(i); k]
}

/// Nilpotency, commutativity and mesh relations of `Π(C, D, Ω)`.
pub fn preprojective_relations<F: Field>(f: &F, data: &CartanData, q: &DoubledQuiver) -> RelationSet<F::Elem> {
    let n = data.rank();
    let c = &data.cartan;
    let path = |arrows: Vec<usize>| Path::from_arrows(q, arrows);

    let nilpotency = (0..n)
        .map(|i| {
            let k = data.symmetrizer.get(i) as usize;
            AlgebraElement::from_path(f, path(loop_power(q, i, k)))
        })
        .collect();

    let mut commutativity = Vec::new();
    for (id, a) in q.arrows().iter().enumerate() {
        let ArrowKind::Edge {
            target: i, source: j, ..
        } = a.kind
        else {
            continue;
        };
        let fji = c.f(j, i) as usize;
        let fij = c.f(i, j) as usize;
        let mut lhs = loop_power(q, i, fji);
        lhs.push(id);
        let mut rhs = vec![id];
        rhs.extend(loop_power(q, j, fij));
        let mut r = AlgebraElement::from_path(f, path(lhs));
        r.add_term(f, path(rhs), f.from_i64(-1));
        commutativity.push(r);
    }

    let mut mesh = Vec::new();
    for i in 0..n {
        let mut r = AlgebraElement::zero();
        for j in c.neighbors(i) {
            let sign = f.from_i64(data.orientation.sign(i, j));
            let fji = c.f(j, i) as usize;
            for copy in 0..c.g(i, j) as usize {
                let aij = q.edge_id(i, j, copy).unwrap();
                let aji = q.edge_id(j, i, copy).unwrap();
                for e in 0..fji {
                    let mut w = loop_power(q, i, e);
                    w.push(aij);
                    w.push(aji);
                    w.extend(loop_power(q, i, fji - 1 - e));
                    r.add_term(f, path(w), sign.clone());
                }
            }
        }
        if !r.is_zero() {
            mesh.push(r);
        }
    }

    RelationSet {
        nilpotency,
        commutativity,
        mesh,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn names(f: &Rational, q: &DoubledQuiver, rs: &[AlgebraElement<num_rational::BigRational>]) -> Vec<String> {
        rs.iter().map(|r| r.display(f, q)).collect()
    }

    #[test]
    fn relations_of_a2() {
        let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-1, 2]], vec![2, 2]).unwrap();
        let q = data.double_quiver();
        let f = Rational;
        let rs = preprojective_relations(&f, &data, &q);
        assert_eq!(names(&f, &q, &rs.nilpotency), ["ε1^2", "ε2^2"]);
        assert_eq!(names(&f, &q, &rs.commutativity), ["-a12ε2+ε1a12", "-a21ε1+ε2a21"]);
        assert_eq!(names(&f, &q, &rs.mesh), ["a12a21", "-a21a12"]);
    }

    #[test]
    fn mesh_of_b2_and_g2() {
        let f = Rational;
        let data = CartanData::with_minimal(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        let q = data.double_quiver();
        let rs = preprojective_relations(&f, &data, &q);
        assert_eq!(rs.mesh[0].display(&f, &q), "a12a21ε1+ε1a12a21");
        assert_eq!(rs.commutativity[0].display(&f, &q), "ε1^2a12-a12ε2");

        let data = CartanData::with_minimal(vec![vec![2, -1], vec![-3, 2]]).unwrap();
        let q = data.double_quiver();
        let rs = preprojective_relations(&f, &data, &q);
        assert_eq!(rs.mesh[0].display(&f, &q), "a12a21ε1^2+ε1a12a21ε1+ε1^2a12a21");
    }

    #[test]
    fn path_order_is_length_then_lex() {
        let a = Path {
            target: 0,
            source: 0,
            arrows: vec![3],
        };
        let b = Path {
            target: 0,
            source: 0,
            arrows: vec![0, 1],
        };
        let c = Path {
            target: 0,
            source: 0,
            arrows: vec![0, 2],
        };
        assert!(a < b && b < c);
        assert!(Path::trivial(1) < a);
    }
}
