//! Weyl groups through the geometric representation: enumeration, reduced
//! words and the Demazure product.
//!
//! ```bash
//! cargo run --example weyl_group
//! ```

use preproj::cartan::CartanMatrix;
use preproj::coxeter::{coxeter_order, enumerate_weyl, format_word, EnumerationLimits, WeylGroup};
use preproj::Result;

pub fn run() -> Result<()> {
    let g2 = CartanMatrix::new(vec![vec![2, -1], vec![-3, 2]])?;
    let w = enumerate_weyl(&g2, 1000);
    println!("|W(G2)| = {}, m_12 = {:?}", w.order(), coxeter_order(&g2, 0, 1));
    let w0 = w.longest_element();
    println!("longest element has {} reduced words:", w.all_reduced_words(w0).len());
    for word in w.all_reduced_words(w0) {
        println!("  {}", format_word(&word));
    }

    let b3 = CartanMatrix::new(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]])?;
    let w = enumerate_weyl(&b3, 1000);
    let u = w.element_of_word(&[0, 1]).expect("in W");
    let v = w.element_of_word(&[1, 2]).expect("in W");
    let star = w.demazure_product(u, v);
    println!(
        "B3: |W| = {}, s1s2 ⋆ s2s3 = {} (length {})",
        w.order(),
        w.word_string(star),
        w.length(star)
    );

    let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]])?;
    let ball = WeylGroup::enumerate(&affine, EnumerationLimits::ball(8));
    println!(
        "affine A1: ball of radius 8 has {} elements, truncated {}",
        ball.order(),
        ball.is_truncated()
    );
    Ok(())
}

fn main() -> Result<()> {
    run()
}
