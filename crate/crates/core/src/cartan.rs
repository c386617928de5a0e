//! Symmetrizable Cartan data: validation, symmetrizers, orientations, the
//! doubled quiver and the Dynkin test.
//!
//! Vertices are 0-based internally. Everything user-facing (names, JSON,
//! DOT output) is 1-based.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated symmetrizable generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Checks the Cartan axioms and the existence of a symmetrizer.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (row, r) in entries.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::DiagonalNotTwo {
                    index: i,
                    value: entries[i][i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && entries[i][j] > 0 {
                    return Err(Error::PositivityViolation {
                        i,
                        j,
                        value: entries[i][j],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::AsymmetricZeroPattern { i, j });
                }
            }
        }
        let c = CartanMatrix { n, entries };
        c.minimal_symmetrizer_vector()?;
        Ok(c)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entries[i][j] != 0
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.are_adjacent(i, j))
    }

    /// `g_ij = |gcd(c_ij, c_ji)|`, zero for non-adjacent vertices.
    pub fn g(&self, i: usize, j: usize) -> i64 {
        if !self.are_adjacent(i, j) {
            return 0;
        }
        self.entries[i][j].gcd(&self.entries[j][i]).abs()
    }

    /// `f_ij = |c_ij| / g_ij`.
    pub fn f(&self, i: usize, j: usize) -> i64 {
        if !self.are_adjacent(i, j) {
            return 0;
        }
        self.entries[i][j].abs() / self.g(i, j)
    }

    /// Connected components of the underlying graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in self.neighbors(i) {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn minimal_symmetrizer_vector(&self) -> Result<Vec<i64>> {
        let mut out = vec![0i64; self.n];
        for comp in self.components() {
            // c_j / c_i = c_ij / c_ji along every edge.
            let mut ratio: Vec<Option<Ratio<i64>>> = vec![None; self.n];
            ratio[comp[0]] = Some(Ratio::from_integer(1));
            let mut queue = VecDeque::from([comp[0]]);
            while let Some(i) = queue.pop_front() {
                let ri = ratio[i].expect("visited");
                for j in self.neighbors(i) {
                    let rj = ri * Ratio::new(self.entries[i][j], self.entries[j][i]);
                    match ratio[j] {
                        None => {
                            ratio[j] = Some(rj);
                            queue.push_back(j);
                        }
                        Some(existing) if existing != rj => {
                            return Err(Error::NoSymmetrizer { vertex: j });
                        }
                        Some(_) => {}
                    }
                }
            }
            let lcm = comp.iter().fold(1i64, |acc, &i| acc.lcm(ratio[i].unwrap().denom()));
            let ints: Vec<i64> = comp.iter().map(|&i| (ratio[i].unwrap() * lcm).to_integer()).collect();
            let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
            for (&i, &v) in comp.iter().zip(&ints) {
                out[i] = v / g;
            }
        }
        Ok(out)
    }

    /// A symmetrizer: either the minimal one or a verified user-supplied one.
    pub fn symmetrizer(&self, request: SymmetrizerRequest) -> Result<Symmetrizer> {
        match request {
            SymmetrizerRequest::Minimal => Ok(Symmetrizer {
                c: self.minimal_symmetrizer_vector()?,
                minimal: true,
            }),
            SymmetrizerRequest::Given(c) => {
                if c.len() != self.n {
                    return Err(Error::NotASymmetrizer(format!(
                        "expected {} entries, got {}",
                        self.n,
                        c.len()
                    )));
                }
                if let Some(i) = c.iter().position(|&x| x < 1) {
                    return Err(Error::NotASymmetrizer(format!(
                        "c_{} = {} is not a positive integer",
                        i + 1,
                        c[i]
                    )));
                }
                for i in 0..self.n {
                    for j in 0..self.n {
                        if c[i] * self.entries[i][j] != c[j] * self.entries[j][i] {
                            return Err(Error::NotASymmetrizer(format!(
                                "DC is not symmetric at ({}, {})",
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
                let minimal = c == self.minimal_symmetrizer_vector()?;
                Ok(Symmetrizer { c, minimal })
            }
        }
    }

    /// `c_ij * c_ji`, which fixes the Coxeter order of `s_i s_j`.
    pub fn product(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j] * self.entries[j][i]
    }

    /// Validates a user-supplied orientation: exactly one direction per edge of
    /// the graph of `C`, and no oriented cycles.
    pub fn orientation(&self, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Orientation> {
        let pairs: BTreeSet<(usize, usize)> = pairs.into_iter().collect();
        for &(i, j) in &pairs {
            if i >= self.n || j >= self.n {
                return Err(Error::InvalidOrientation(format!(
                    "pair ({}, {}) out of range",
                    i + 1,
                    j + 1
                )));
            }
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let present = pairs.contains(&(i, j)) || pairs.contains(&(j, i));
                let adjacent = self.entries[i][j] < 0;
                if present != adjacent {
                    return Err(Error::InvalidOrientation(format!(
                        "{{{}, {}}} must be oriented exactly when it is an edge",
                        i + 1,
                        j + 1
                    )));
                }
                if i != j && pairs.contains(&(i, j)) && pairs.contains(&(j, i)) {
                    return Err(Error::InvalidOrientation(format!(
                        "both ({}, {}) and its reverse are present",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let o = Orientation { pairs };
        if !o.is_acyclic(self.n) {
            return Err(Error::InvalidOrientation("oriented cycle".into()));
        }
        Ok(o)
    }

    /// `{(i, j) : c_ij < 0, i < j}`.
    pub fn default_orientation(&self) -> Orientation {
        let pairs = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.entries[i][j] < 0)
            .collect();
        Orientation { pairs }
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetrizerRequest {
    Minimal,
    Given(Vec<i64>),
}

/// `D = diag(c_1, ..., c_n)` with `DC` symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symmetrizer {
    c: Vec<i64>,
    minimal: bool,
}

impl Symmetrizer {
    pub fn entries(&self) -> &[i64] {
        &self.c
    }

    pub fn get(&self, i: usize) -> i64 {
        self.c[i]
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }
}

/// A set `Ω` of ordered pairs `(i, j)`; `(i, j) ∈ Ω` gives arrows `j → i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    pairs: BTreeSet<(usize, usize)>,
}

impl Orientation {
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn opposite(&self) -> Orientation {
        Orientation {
            pairs: self.pairs.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    /// `sgn(i, j)` on `Ω̄`: `+1` on `Ω`, `-1` on `Ω^op`.
    pub fn sign(&self, i: usize, j: usize) -> i64 {
        if self.pairs.contains(&(i, j)) {
            1
        } else {
            -1
        }
    }

    fn is_acyclic(&self, n: usize) -> bool {
        // Kahn's algorithm on the loop-free quiver.
        let mut indeg = vec![0usize; n];
        for &(_, j) in &self.pairs {
            indeg[j] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &(i, j) in &self.pairs {
                if i == v {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push_back(j);
                    }
                }
            }
        }
        seen == n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArrowKind {
    /// `ε_i`
    Loop { vertex: usize },
    /// `a^{(g)}_{ij} : j → i`, with `copy = g - 1`.
    Edge { target: usize, source: usize, copy: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub source: usize,
    pub target: usize,
    pub name: String,
}

/// `Q̄`: one loop per vertex and `g_ij` arrows in each direction per edge.
///
/// Loops come first (`ε_1, ..., ε_n`), then arrow families ordered by
/// `(min(i,j), max(i,j), direction, g)`, where direction 0 is the arrow
/// whose target is the smaller vertex. Monomial orders downstream depend on
/// this ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubledQuiver {
    n: usize,
    arrows: Vec<Arrow>,
}

impl DoubledQuiver {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn loop_id(&self, vertex: usize) -> usize {
        vertex
    }

    /// Id of `a^{(copy+1)}_{target,source}`.
    pub fn edge_id(&self, target: usize, source: usize, copy: usize) -> Option<usize> {
        self.arrows
            .iter()
            .position(|a| a.kind == ArrowKind::Edge { target, source, copy })
    }

    /// Number of arrows `j → i` (excluding loops).
    pub fn arrow_count(&self, source: usize, target: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| matches!(a.kind, ArrowKind::Edge { .. }) && a.source == source && a.target == target)
            .count()
    }
}

/// Cartan matrix, symmetrizer and orientation, checked for consistency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    pub cartan: CartanMatrix,
    pub symmetrizer: Symmetrizer,
    pub orientation: Orientation,
    gram: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(cartan: CartanMatrix, symmetrizer: Symmetrizer, orientation: Orientation) -> Result<Self> {
        // Re-run both checks so that hand-built values cannot slip through.
        let symmetrizer = cartan.symmetrizer(SymmetrizerRequest::Given(symmetrizer.c.clone()))?;
        let orientation = cartan.orientation(orientation.pairs.iter().copied())?;
        let n = cartan.rank();
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2 * symmetrizer.get(i)
                        } else {
                            -symmetrizer.get(i) * cartan.get(i, j).abs()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(CartanData {
            cartan,
            symmetrizer,
            orientation,
            gram,
        })
    }

    /// Cartan matrix with its minimal symmetrizer and default orientation.
    pub fn with_minimal(entries: Vec<Vec<i64>>) -> Result<Self> {
        let c = CartanMatrix::new(entries)?;
        let d = c.symmetrizer(SymmetrizerRequest::Minimal)?;
        let o = c.default_orientation();
        CartanData::new(c, d, o)
    }

    /// Cartan matrix with a given symmetrizer and the default orientation.
    pub fn with_symmetrizer(entries: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let c = CartanMatrix::new(entries)?;
        let d = c.symmetrizer(SymmetrizerRequest::Given(d))?;
        let o = c.default_orientation();
        CartanData::new(c, d, o)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Doubled Gram matrix of `q_C`: diagonal `2c_i`, off-diagonal `-c_i|c_ij|`.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `q_C(x)` evaluated through the Gram matrix.
    pub fn quadratic_form(&self, x: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += x[i] * self.gram[i][j] * x[j];
            }
        }
        s / 2
    }

    /// Positive definiteness of `q_C` by leading principal minors.
    pub fn is_dynkin(&self) -> bool {
        self.cartan
            .components()
            .iter()
            .all(|comp| self.component_is_dynkin(comp))
    }

    /// No connected component is of Dynkin type.
    pub fn has_no_dynkin_component(&self) -> bool {
        self.cartan
            .components()
            .iter()
            .all(|comp| !self.component_is_dynkin(comp))
    }

    fn component_is_dynkin(&self, comp: &[usize]) -> bool {
        (1..=comp.len()).all(|k| {
            let minor: Vec<Vec<i128>> = comp[..k]
                .iter()
                .map(|&i| comp[..k].iter().map(|&j| self.gram[i][j] as i128).collect())
                .collect();
            bareiss_determinant(minor) > 0
        })
    }

    pub fn double_quiver(&self) -> DoubledQuiver {
        let n = self.rank();
        let mut arrows: Vec<Arrow> = (0..n)
            .map(|i| Arrow {
                kind: ArrowKind::Loop { vertex: i },
                source: i,
                target: i,
                name: format!("ε{}", i + 1),
            })
            .collect();
        for lo in 0..n {
            for hi in lo + 1..n {
                if !self.cartan.are_adjacent(lo, hi) {
                    continue;
                }
                let g = self.cartan.g(lo, hi) as usize;
                for (target, source) in [(lo, hi), (hi, lo)] {
                    for copy in 0..g {
                        let name = if g == 1 {
                            format!("a{}{}", target + 1, source + 1)
                        } else {
                            format!("a{}{}^{}", target + 1, source + 1, copy + 1)
                        };
                        arrows.push(Arrow {
                            kind: ArrowKind::Edge { target, source, copy },
                            source,
                            target,
                            name,
                        });
                    }
                }
            }
        }
        DoubledQuiver { n, arrows }
    }
}

/// Fraction-free Gaussian elimination; exact for integer input.
pub fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a2() -> Vec<Vec<i64>> {
        vec![vec![2, -1], vec![-1, 2]]
    }
    fn b2() -> Vec<Vec<i64>> {
        vec![vec![2, -1], vec![-2, 2]]
    }
    fn g2() -> Vec<Vec<i64>> {
        vec![vec![2, -1], vec![-3, 2]]
    }

    #[test]
    fn validates_examples() {
        assert!(CartanMatrix::new(a2()).is_ok());
        assert!(CartanMatrix::new(b2()).is_ok());
        assert_eq!(
            CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]),
            Err(Error::AsymmetricZeroPattern { i: 0, j: 1 })
        );
        assert!(matches!(
            CartanMatrix::new(vec![vec![3]]),
            Err(Error::DiagonalNotTwo { .. })
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]),
            Err(Error::PositivityViolation { .. })
        ));
        assert!(matches!(
            CartanMatrix::new(vec![vec![2, -1], vec![-1]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn detects_non_symmetrizable_cycle() {
        // Triangle with ratio product 2 around the cycle.
        let c = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(CartanMatrix::new(c), Err(Error::NoSymmetrizer { .. })));
    }

    #[test]
    fn minimal_symmetrizers() {
        let sym = |m| {
            CartanMatrix::new(m)
                .unwrap()
                .symmetrizer(SymmetrizerRequest::Minimal)
                .unwrap()
                .entries()
                .to_vec()
        };
        assert_eq!(sym(a2()), vec![1, 1]);
        assert_eq!(sym(b2()), vec![2, 1]);
        // d1 * (-1) = d2 * (-3)
        assert_eq!(sym(g2()), vec![3, 1]);
        assert_eq!(sym(vec![vec![2]]), vec![1]);
    }

    #[test]
    fn given_symmetrizer_is_checked() {
        let c = CartanMatrix::new(a2()).unwrap();
        assert!(c.symmetrizer(SymmetrizerRequest::Given(vec![2, 2])).is_ok());
        assert!(!c
            .symmetrizer(SymmetrizerRequest::Given(vec![2, 2]))
            .unwrap()
            .is_minimal());
        assert!(matches!(
            c.symmetrizer(SymmetrizerRequest::Given(vec![1, 2])),
            Err(Error::NotASymmetrizer(_))
        ));
        assert!(matches!(
            c.symmetrizer(SymmetrizerRequest::Given(vec![0, 0])),
            Err(Error::NotASymmetrizer(_))
        ));
    }

    #[test]
    fn default_orientations() {
        let c = CartanMatrix::new(a2()).unwrap();
        assert_eq!(
            c.default_orientation().pairs().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        let r1 = CartanMatrix::new(vec![vec![2]]).unwrap();
        assert!(r1.default_orientation().pairs().is_empty());
        let a3 = CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(
            a3.default_orientation().pairs().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
    }

    #[test]
    fn rejects_bad_orientations() {
        let a3 = CartanMatrix::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap();
        assert!(a3.orientation([(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(a3.orientation([(0, 1), (1, 2)]).is_err());
        assert!(a3.orientation([(0, 1), (1, 0), (1, 2), (0, 2)]).is_err());
        assert!(a3.orientation([(0, 1), (1, 2), (0, 2)]).is_ok());
    }

    #[test]
    fn doubled_quiver_shapes() {
        let a2_d22 = CartanData::with_symmetrizer(a2(), vec![2, 2]).unwrap();
        let q = a2_d22.double_quiver();
        assert_eq!(q.arrows().len(), 4);
        assert_eq!(q.arrow(2).name, "a12");
        assert_eq!((q.arrow(2).source, q.arrow(2).target), (1, 0));
        assert_eq!(q.arrow(3).name, "a21");

        let b2_d21 = CartanData::with_symmetrizer(b2(), vec![2, 1]).unwrap();
        assert_eq!(b2_d21.cartan.f(0, 1), 1);
        assert_eq!(b2_d21.cartan.f(1, 0), 2);
        assert_eq!(b2_d21.double_quiver().arrows().len(), 4);

        let affine = CartanData::with_symmetrizer(vec![vec![2, -2], vec![-2, 2]], vec![1, 1]).unwrap();
        let q = affine.double_quiver();
        assert_eq!(affine.cartan.g(0, 1), 2);
        assert_eq!(q.arrow_count(1, 0), 2);
        assert_eq!(q.arrow_count(0, 1), 2);
    }

    #[test]
    fn dynkin_test() {
        assert!(CartanData::with_symmetrizer(a2(), vec![2, 2]).unwrap().is_dynkin());
        let affine = CartanData::with_symmetrizer(vec![vec![2, -2], vec![-2, 2]], vec![1, 1]).unwrap();
        assert!(!affine.is_dynkin());
        assert!(affine.has_no_dynkin_component());
        // Gram [[6,-3],[-3,2]]: minors 6 and 3.
        let g = CartanData::with_symmetrizer(g2(), vec![3, 1]).unwrap();
        assert_eq!(g.gram(), &[vec![6, -3], vec![-3, 2]]);
        assert!(g.is_dynkin());
        assert!(!g.has_no_dynkin_component());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(bareiss_determinant(m), 4);
        assert_eq!(bareiss_determinant(vec![vec![0, 1], vec![1, 0]]), -1);
    }

    /// Random symmetrizable Cartan matrices: pick a symmetric pattern, a
    /// positive vector d, and entries with d_i c_ij = d_j c_ji.
    fn random_cartan() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=6)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    prop::collection::vec(1i64..=3, n),
                    prop::collection::vec(0i64..=2, n * n),
                )
            })
            .prop_map(|(n, d, pattern)| {
                let mut c = vec![vec![0i64; n]; n];
                for i in 0..n {
                    c[i][i] = 2;
                    for j in i + 1..n {
                        let k = pattern[i * n + j];
                        if k == 0 {
                            continue;
                        }
                        // c_ij = -k * d_j / g, c_ji = -k * d_i / g
                        let g = d[i].gcd(&d[j]);
                        c[i][j] = -k * d[j] / g;
                        c[j][i] = -k * d[i] / g;
                    }
                }
                c
            })
    }

    proptest! {
        #[test]
        fn symmetrizer_and_orientation_invariants(entries in random_cartan()) {
            let c = CartanMatrix::new(entries).unwrap();
            let d = c.symmetrizer(SymmetrizerRequest::Minimal).unwrap();
            let n = c.rank();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(d.get(i) * c.get(i, j), d.get(j) * c.get(j, i));
                    if i != j && c.get(i, j) < 0 {
                        prop_assert_eq!(c.g(i, j) * c.f(i, j), c.get(i, j).abs());
                        prop_assert_eq!(c.g(i, j) * c.f(j, i), c.get(j, i).abs());
                    }
                }
            }
            // Doubling a symmetrizer keeps it valid and the minimal one divides it.
            let doubled: Vec<i64> = d.entries().iter().map(|x| 2 * x).collect();
            let dd = c.symmetrizer(SymmetrizerRequest::Given(doubled)).unwrap();
            for comp in c.components() {
                let k = dd.get(comp[0]) / d.get(comp[0]);
                for &i in &comp {
                    prop_assert_eq!(dd.get(i) % d.get(i), 0);
                    prop_assert_eq!(dd.get(i) / d.get(i), k);
                }
            }
            let o = c.default_orientation();
            prop_assert!(c.orientation(o.pairs().iter().copied()).is_ok());
        }
    }
}
