//! Support τ-tilting pairs `(I_w, P_w)` and left mutation.
//!
//! ```bash
//! cargo run --example support_tau_tilting
//! ```

use preproj::cartan::CartanData;
use preproj::field::Rational;
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::tautilt::{IdealSemigroup, SttPair};
use preproj::Result;

pub fn run() -> Result<()> {
    let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-1, 2]], vec![2, 2])?;
    let alg = FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default())?;
    let semigroup = IdealSemigroup::new(&alg, 1000, 0)?;
    let catalogue = semigroup.catalogue();

    for w in semigroup.ordered_elements() {
        let pair = semigroup.checked_stt_pair(w)?;
        let p: Vec<String> = pair.projective.iter().map(|k| format!("e{}P", k + 1)).collect();
        println!(
            "w = {:>3}: M = {}, P = {:?}",
            semigroup.word_label(w),
            catalogue.label(w),
            p
        );
    }

    let not_rigid = SttPair::new(vec![alg.generalized_simple(0), alg.generalized_simple(1)], vec![]);
    println!("(E1 ⊕ E2, 0): {:?}", alg.verify_stt(&not_rigid, 0)?);

    // Π → E2 ⊕ e2Π → (E2, e1Π) → (0, Π), mutating at e1Π, e2Π, then E2.
    let mut pair = semigroup.stt_pair(semigroup.weyl().identity());
    for index in [0, 0, 0] {
        pair = alg.left_mutation(&pair, index, 0)?;
        let dims: Vec<_> = pair.summands.iter().map(|m| m.dims().to_vec()).collect();
        let p: Vec<String> = pair.projective.iter().map(|k| format!("e{}P", k + 1)).collect();
        println!("summand dims {dims:?}, P = {p:?}");
        if pair.summands.len() == 2 {
            if let Err(e) = alg.left_mutation(&pair, 1, 0) {
                println!("  at the new summand: {e}");
            }
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
