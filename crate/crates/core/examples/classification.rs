//! The full classification report for several Cartan types, over the
//! rationals and over a prime field.
//!
//! ```bash
//! cargo run --release --example classification
//! ```

use preproj::cartan::CartanData;
use preproj::field::{Field, PrimeField, Rational};
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::tautilt::{ClassificationReport, IdealSemigroup, ReportOptions};
use preproj::Result;

fn report<F: Field>(f: &F, c: Vec<Vec<i64>>) -> Result<ClassificationReport> {
    let data = CartanData::with_minimal(c)?;
    let alg = FiniteDimAlgebra::new(f, &data, GroebnerCaps::default())?;
    IdealSemigroup::new(&alg, 1000, 0)?.classification_report(ReportOptions::default())
}

pub fn run() -> Result<()> {
    let types = [
        ("A2", vec![vec![2, -1], vec![-1, 2]]),
        ("B2", vec![vec![2, -1], vec![-2, 2]]),
        ("G2", vec![vec![2, -1], vec![-3, 2]]),
        ("A3", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]),
    ];
    let fp = PrimeField::new(32003)?;
    for (name, c) in types {
        let q = report(&Rational, c.clone())?.into_result()?;
        let p = report(&fp, c)?.into_result()?;
        println!(
            "{name}: |W| = {}, support τ-tilting = {}, τ-rigid indecomposables = {}, same over F_32003: {}",
            q.weyl_order,
            q.stt_count,
            q.tau_rigid_indecomposables.len(),
            q == p
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
