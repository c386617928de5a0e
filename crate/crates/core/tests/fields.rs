mod common;

use common::*;
use preproj::cartan::CartanData;
use preproj::field::{Field, PrimeField, Rational};
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::tautilt::{IdealSemigroup, ReportOptions};

fn flipped<F: Field>(f: &F, c: Vec<Vec<i64>>, d: Option<Vec<i64>>) -> FiniteDimAlgebra<F> {
    let base = match d {
        Some(d) => CartanData::with_symmetrizer(c, d).unwrap(),
        None => CartanData::with_minimal(c).unwrap(),
    };
    let data = CartanData::new(
        base.cartan.clone(),
        base.symmetrizer.clone(),
        base.orientation.opposite(),
    )
    .unwrap();
    FiniteDimAlgebra::new(f, &data, GroebnerCaps::default()).unwrap()
}

fn labelled_graph<F: Field>(a: &FiniteDimAlgebra<F>) -> Vec<(String, usize, String)> {
    let s = IdealSemigroup::new(a, 10_000, 0).unwrap();
    s.mutation_graph(&s.catalogue()).labelled_edges()
}

#[test]
fn b2_basis_paths() {
    let a = b2_d21();
    let q = a.quiver();
    let paths = |i: usize| -> String {
        (0..a.rank())
            .flat_map(|j| a.block(i, j).iter().map(|&p| a.basis()[p].display(q)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    assert_eq!(paths(0), "e1 ε1 a12a21 ε1a12a21 a12 ε1a12");
    assert_eq!(paths(1), "a21 a21ε1 e2 a21ε1a12");
}

#[test]
fn orientation_does_not_change_dimensions_or_graph() {
    for (name, c) in acceptance_types().into_iter().take(4) {
        let a = algebra(c.clone(), None);
        let b = flipped(&Rational, c, None);
        assert_eq!(a.dim(), b.dim(), "{name}");
        for i in 0..a.rank() {
            assert_eq!(a.vertex_dim(i), b.vertex_dim(i));
            for j in 0..a.rank() {
                assert_eq!(a.block(i, j).len(), b.block(i, j).len());
            }
        }
        assert_eq!(labelled_graph(&a), labelled_graph(&b), "{name}");
    }
    assert_eq!(
        labelled_graph(&b2_d21()),
        labelled_graph(&flipped(&Rational, b2(), Some(vec![2, 1])))
    );
}

#[test]
fn prime_fields_agree_with_rationals() {
    let f = PrimeField::new(32003).unwrap();
    for (c, d) in [
        (a2(), Some(vec![2, 2])),
        (b2(), Some(vec![2, 1])),
        (a3(), None),
        (b3(), None),
    ] {
        let q = algebra(c.clone(), d.clone());
        let p = algebra_over(&f, c, d);
        assert_eq!(q.dim(), p.dim());
        assert_eq!(q.basis(), p.basis());
        assert_eq!(labelled_graph(&q), labelled_graph(&p));
        let opts = ReportOptions::default();
        let rq = IdealSemigroup::new(&q, 10_000, 0)
            .unwrap()
            .classification_report(opts)
            .unwrap();
        let rp = IdealSemigroup::new(&p, 10_000, 0)
            .unwrap()
            .classification_report(opts)
            .unwrap();
        assert_eq!(rq, rp);
    }
}

#[test]
fn small_primes_still_give_the_algebra() {
    for p in [2, 3, 5] {
        let f = PrimeField::new(p).unwrap();
        let a = algebra_over(&f, b2(), Some(vec![2, 1]));
        assert_eq!(a.dim(), b2_d21().dim());
    }
}
