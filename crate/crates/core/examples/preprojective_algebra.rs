//! Building `Π(C, D)` from its relations and inspecting the basis.
//!
//! ```bash
//! cargo run --example preprojective_algebra
//! ```

use preproj::cartan::CartanData;
use preproj::field::Rational;
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::Result;

pub fn run() -> Result<()> {
    let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])?;
    let alg = FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default())?;
    let q = alg.quiver();
    for r in alg.relations().all() {
        println!("relation {}", r.display(&Rational, q));
    }
    println!("Gröbner basis size {}", alg.groebner_basis().len());

    let report = alg.verify(0)?;
    println!("dim Π = {}", report.dim);
    for i in 0..alg.rank() {
        let paths: Vec<String> = (0..alg.rank())
            .flat_map(|j| alg.block(i, j).iter().map(|&p| alg.basis()[p].display(q)))
            .collect();
        println!(
            "e{}Π: dim {}, radical layers {:?}, basis {}",
            i + 1,
            alg.vertex_dim(i),
            alg.radical_layers(i),
            paths.join(" ")
        );
    }

    let affine = CartanData::with_minimal(vec![vec![2, -2], vec![-2, 2]])?;
    let caps = GroebnerCaps {
        max_degree: 12,
        max_basis: 500,
    };
    match FiniteDimAlgebra::new(&Rational, &affine, caps) {
        Ok(_) => println!("unexpected: affine Π is finite"),
        Err(e) => println!("affine A1: {e}"),
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
