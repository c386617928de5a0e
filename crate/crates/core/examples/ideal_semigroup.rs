//! The ideals `I_i = Π(1 - e_i)Π`, their products, and the ideals `I_w`.
//!
//! ```bash
//! cargo run --example ideal_semigroup
//! ```

use preproj::cartan::CartanData;
use preproj::field::Rational;
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::tautilt::IdealSemigroup;
use preproj::Result;

pub fn run() -> Result<()> {
    let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])?;
    let alg = FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default())?;
    let i1 = alg.vertex_ideal(&[0]);
    let i2 = alg.vertex_ideal(&[1]);
    println!("dim I1 = {}, dim I2 = {}", i1.dim(), i2.dim());
    println!("I1² = I1: {}", alg.ideal_product(&i1, &i1) == i1);
    for i in 0..2 {
        let block = alg.ideal_block([&i1, &i2][i], i);
        println!(
            "e{}I{}: dims {:?}, rank vector {:?}",
            i + 1,
            i + 1,
            block.dims(),
            alg.locally_free_rank(&block)
        );
    }

    let mut products = vec![alg.unit_ideal()];
    for k in 0..4 {
        let next = alg.ideal_product(if k % 2 == 0 { &i1 } else { &i2 }, products.last().unwrap());
        products.push(next);
    }
    let dims: Vec<usize> = products.iter().map(|p| p.dim()).collect();
    println!("dims of Π, I1, I2I1, I1I2I1, I2I1I2I1: {dims:?}");

    let semigroup = IdealSemigroup::new(&alg, 1000, 0)?;
    for w in semigroup.ordered_elements() {
        println!(
            "I_{} has dimension {}",
            semigroup.word_label(w),
            semigroup.ideal_of_word(w).dim()
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
