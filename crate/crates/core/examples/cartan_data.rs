//! Validating Cartan matrices, symmetrizers, orientations and the doubled quiver.
//!
//! ```bash
//! cargo run --example cartan_data
//! ```

use preproj::cartan::{CartanData, CartanMatrix, SymmetrizerRequest};
use preproj::Result;

pub fn run() -> Result<()> {
    let b2 = CartanMatrix::new(vec![vec![2, -1], vec![-2, 2]])?;
    let d = b2.symmetrizer(SymmetrizerRequest::Minimal)?;
    println!("B2 = {b2}, minimal symmetrizer {:?}", d.entries());
    println!("g_12 = {}, f_12 = {}, f_21 = {}", b2.g(0, 1), b2.f(0, 1), b2.f(1, 0));

    for bad in [vec![vec![2, -1], vec![0, 2]], vec![vec![2, 1], vec![1, 2]]] {
        println!("{bad:?}: {}", CartanMatrix::new(bad.clone()).unwrap_err());
    }
    let err = b2.symmetrizer(SymmetrizerRequest::Given(vec![1, 1])).unwrap_err();
    println!("D = (1, 1) for B2: {err}");

    let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])?;
    let q = data.double_quiver();
    for a in q.arrows() {
        println!("arrow {}: {} -> {}", a.name, a.source + 1, a.target + 1);
    }
    println!("Dynkin: {}", data.is_dynkin());

    let affine = CartanData::with_minimal(vec![vec![2, -2], vec![-2, 2]])?;
    println!(
        "affine A1: Dynkin {}, two arrows each way: {}",
        affine.is_dynkin(),
        affine.double_quiver().arrow_count(0, 1) == 2
    );
    Ok(())
}

fn main() -> Result<()> {
    run()
}
