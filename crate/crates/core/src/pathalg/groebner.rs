//! Buchberger completion for two-sided ideals of a path algebra.
//!
//! Monomials are ordered by length, then lexicographically by arrow index.
//! The preprojective relations are not length-homogeneous, so overlaps are
//! completed in full and nothing is assumed about degrees.

use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{AlgebraElement, Path};
use crate::cartan::DoubledQuiver;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerCaps {
    /// Longest leading monomial or normal monomial allowed.
    pub max_degree: usize,
    /// Most normal monomials (and most basis elements) allowed.
    pub max_basis: usize,
}

impl Default for GroebnerCaps {
    fn default() -> Self {
        GroebnerCaps {
            max_degree: 64,
            max_basis: 20_000,
        }
    }
}

/// A reduced set of monic generators whose leading words determine the
/// normal monomials.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    ends: Vec<(usize, usize)>,
    elems: Vec<AlgebraElement<F::Elem>>,
    alive: Vec<bool>,
    lm_index: HashMap<Vec<usize>, usize>,
    max_lm: usize,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn complete(
        f: &F,
        q: &DoubledQuiver,
        relations: impl IntoIterator<Item = AlgebraElement<F::Elem>>,
        caps: GroebnerCaps,
    ) -> Result<Self> {
        let mut gb = GroebnerBasis {
            field: f.clone(),
            ends: q.arrows().iter().map(|a| (a.target, a.source)).collect(),
            elems: Vec::new(),
            alive: Vec::new(),
            lm_index: HashMap::new(),
            max_lm: 0,
        };
        let mut queue: VecDeque<AlgebraElement<F::Elem>> = relations.into_iter().collect();
        let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
        loop {
            while let Some(r) = queue.pop_front() {
                let r = gb.reduce(&r);
                let Some((lm, _)) = r.leading() else { continue };
                if lm.len() > caps.max_degree {
                    return Err(Error::CapExceeded {
                        what: "Gröbner completion degree".into(),
                        cap: caps.max_degree,
                    });
                }
                if gb.elems.len() >= caps.max_basis {
                    return Err(Error::CapExceeded {
                        what: "Gröbner basis size".into(),
                        cap: caps.max_basis,
                    });
                }
                let idx = gb.insert(r, &mut queue);
                for k in 0..gb.elems.len() {
                    if gb.alive[k] {
                        pairs.push_back((idx, k));
                        if k != idx {
                            pairs.push_back((k, idx));
                        }
                    }
                }
            }
            let Some((a, b)) = pairs.pop_front() else { break };
            if gb.alive[a] && gb.alive[b] {
                queue.extend(gb.overlaps(a, b));
            }
        }
        gb.interreduce();
        Ok(gb)
    }

    fn insert(&mut self, r: AlgebraElement<F::Elem>, queue: &mut VecDeque<AlgebraElement<F::Elem>>) -> usize {
        let f = &self.field;
        let (lm, lc) = r.leading().map(|(p, c)| (p.clone(), c.clone())).unwrap();
        let inv = f.inv(&lc).expect("nonzero leading coefficient");
        let mut monic = AlgebraElement::zero();
        monic.add_scaled(f, &inv, &r);
        // Older elements whose leading word contains the new one are no
        // longer reduced; retire them and reprocess.
        let stale: Vec<usize> = self
            .lm_index
            .iter()
            .filter(|(w, _)| contains_subword(w, &lm.arrows))
            .map(|(_, &k)| k)
            .collect();
        for k in stale {
            self.alive[k] = false;
            let w = self.elems[k].leading().unwrap().0.arrows.clone();
            self.lm_index.remove(&w);
            queue.push_back(self.elems[k].clone());
        }
        let idx = self.elems.len();
        self.max_lm = self.max_lm.max(lm.len());
        self.lm_index.insert(lm.arrows, idx);
        self.elems.push(monic);
        self.alive.push(true);
        idx
    }

    /// S-polynomials for every proper overlap suffix(LM a) = prefix(LM b).
    fn overlaps(&self, a: usize, b: usize) -> Vec<AlgebraElement<F::Elem>> {
        let f = &self.field;
        let u = &self.elems[a].leading().unwrap().0.arrows;
        let v = &self.elems[b].leading().unwrap().0.arrows;
        let mut out = Vec::new();
        for k in 1..u.len().min(v.len()) {
            if u[u.len() - k..] != v[..k] {
                continue;
            }
            let p = self.subpath(&u[..u.len() - k]);
            let qq = self.subpath(&v[k..]);
            let mut s = mul_right(f, &self.elems[a], &qq);
            let left = mul_left(f, &p, &self.elems[b]);
            s.add_scaled(f, &f.from_i64(-1), &left);
            out.push(s);
        }
        out
    }

    fn subpath(&self, arrows: &[usize]) -> Path {
        Path {
            target: self.ends[arrows[0]].0,
            source: self.ends[*arrows.last().unwrap()].1,
            arrows: arrows.to_vec(),
        }
    }

    /// Reduces the tails of all live elements.
    fn interreduce(&mut self) {
        let live: Vec<usize> = (0..self.elems.len()).filter(|&k| self.alive[k]).collect();
        for k in live {
            let g = self.elems[k].clone();
            let (lm, lc) = g.leading().map(|(p, c)| (p.clone(), c.clone())).unwrap();
            let mut tail = g.clone();
            tail.terms.remove(&lm);
            let mut out = self.reduce(&tail);
            out.add_term(&self.field, lm, lc);
            self.elems[k] = out;
        }
    }

    /// Position `(element, start, end)` of some leading word inside `w`.
    pub fn find_divisor(&self, w: &[usize]) -> Option<(usize, usize, usize)> {
        for s in 0..w.len() {
            for e in s + 1..=w.len().min(s + self.max_lm) {
                if let Some(&k) = self.lm_index.get(&w[s..e]) {
                    return Some((k, s, e));
                }
            }
        }
        None
    }

    /// Whether `w` ending in a normal prefix is itself normal; only the
    /// suffixes need checking.
    pub fn suffix_is_reducible(&self, w: &[usize]) -> bool {
        let n = w.len();
        (n.saturating_sub(self.max_lm)..n).any(|s| self.lm_index.contains_key(&w[s..]))
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        self.find_divisor(w).is_none()
    }

    /// The normal form of `x`.
    pub fn reduce(&self, x: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let f = &self.field;
        let mut terms: BTreeMap<Path, F::Elem> = x.terms.clone();
        let mut bound: Option<Path> = None;
        loop {
            let next = match &bound {
                None => terms.iter().next_back(),
                Some(b) => terms.range(..b.clone()).next_back(),
            };
            let Some((p, c)) = next.map(|(p, c)| (p.clone(), c.clone())) else {
                break;
            };
            if let Some((k, s, e)) = self.find_divisor(&p.arrows) {
                terms.remove(&p);
                let g = &self.elems[k];
                for (t, tc) in g.terms.iter().rev().skip(1) {
                    let mut arrows = p.arrows[..s].to_vec();
                    arrows.extend_from_slice(&t.arrows);
                    arrows.extend_from_slice(&p.arrows[e..]);
                    let path = Path {
                        target: p.target,
                        source: p.source,
                        arrows,
                    };
                    let coef = f.neg(&f.mul(&c, tc));
                    add_to(f, &mut terms, path, coef);
                }
            }
            bound = Some(p);
        }
        AlgebraElement { terms }
    }

    pub fn elements(&self) -> impl Iterator<Item = &AlgebraElement<F::Elem>> {
        self.elems.iter().zip(&self.alive).filter(|(_, &a)| a).map(|(e, _)| e)
    }

    pub fn len(&self) -> usize {
        self.lm_index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lm_index.is_empty()
    }
}

fn add_to<F: Field>(f: &F, terms: &mut BTreeMap<Path, F::Elem>, p: Path, c: F::Elem) {
    if f.is_zero(&c) {
        return;
    }
    match terms.get_mut(&p) {
        Some(x) => {
            *x = f.add(x, &c);
            if f.is_zero(x) {
                terms.remove(&p);
            }
        }
        None => {
            terms.insert(p, c);
        }
    }
}

fn mul_right<F: Field>(f: &F, x: &AlgebraElement<F::Elem>, p: &Path) -> AlgebraElement<F::Elem> {
    let mut out = AlgebraElement::zero();
    for (t, c) in &x.terms {
        if let Some(tp) = t.concat(p) {
            out.add_term(f, tp, c.clone());
        }
    }
    out
}

fn mul_left<F: Field>(f: &F, p: &Path, x: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
    let mut out = AlgebraElement::zero();
    for (t, c) in &x.terms {
        if let Some(pt) = p.concat(t) {
            out.add_term(f, pt, c.clone());
        }
    }
    out
}

fn contains_subword(w: &[usize], sub: &[usize]) -> bool {
    sub.len() <= w.len() && w.windows(sub.len()).any(|x| x == sub)
}
