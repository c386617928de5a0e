#![allow(dead_code)]

use preproj::cartan::CartanData;
use preproj::field::{Field, Rational};
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};

pub fn a2() -> Vec<Vec<i64>> {
    vec![vec![2, -1], vec![-1, 2]]
}
pub fn b2() -> Vec<Vec<i64>> {
    vec![vec![2, -1], vec![-2, 2]]
}
pub fn g2() -> Vec<Vec<i64>> {
    vec![vec![2, -1], vec![-3, 2]]
}
pub fn a3() -> Vec<Vec<i64>> {
    vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
}
pub fn b3() -> Vec<Vec<i64>> {
    vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
}

pub fn algebra_over<F: Field>(f: &F, c: Vec<Vec<i64>>, d: Option<Vec<i64>>) -> FiniteDimAlgebra<F> {
    let data = match d {
        Some(d) => CartanData::with_symmetrizer(c, d).unwrap(),
        None => CartanData::with_minimal(c).unwrap(),
    };
    FiniteDimAlgebra::new(f, &data, GroebnerCaps::default()).unwrap()
}

pub fn algebra(c: Vec<Vec<i64>>, d: Option<Vec<i64>>) -> FiniteDimAlgebra<Rational> {
    algebra_over(&Rational, c, d)
}

/// A2 with D = (2, 2).
pub fn a2_d22() -> FiniteDimAlgebra<Rational> {
    algebra(a2(), Some(vec![2, 2]))
}

/// B2 with D = (2, 1).
pub fn b2_d21() -> FiniteDimAlgebra<Rational> {
    algebra(b2(), Some(vec![2, 1]))
}

/// Minimal-symmetrizer algebras of the acceptance types with their names.
pub fn acceptance_types() -> Vec<(&'static str, Vec<Vec<i64>>)> {
    vec![("A2", a2()), ("B2", b2()), ("G2", g2()), ("A3", a3()), ("B3", b3())]
}

/// `s_i(α_j) = α_j - c_ij α_i`, as a matrix acting on coefficient columns.
pub fn reflection(c: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut m: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|s| (r == s) as i64).collect()).collect();
    for j in 0..n {
        m[i][j] -= c[i][j];
    }
    m
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|r| (0..n).map(|s| (0..n).map(|k| a[r][k] * b[k][s]).sum()).collect())
        .collect()
}

/// Elements of `W(C)` of length at most `radius`, by breadth-first search
/// on reflection matrices.
pub fn weyl_ball_oracle(c: &[Vec<i64>], radius: usize) -> usize {
    use std::collections::HashSet;
    let n = c.len();
    let id: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|s| (r == s) as i64).collect()).collect();
    let gens: Vec<_> = (0..n).map(|i| reflection(c, i)).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let v = mat_mul(g, w);
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen.len()
}

/// `|W(C)|` for a finite Weyl group.
pub fn weyl_order_oracle(c: &[Vec<i64>]) -> usize {
    weyl_ball_oracle(c, 1000)
}
