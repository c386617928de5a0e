//! Right modules over `Π`: generalized simples, Hom and Ext¹, the
//! Nakayama permutation, and the Auslander-Reiten translate.
//!
//! ```bash
//! cargo run --example modules_and_tau
//! ```

use preproj::cartan::CartanData;
use preproj::field::Rational;
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::Result;

pub fn run() -> Result<()> {
    let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])?;
    let alg = FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default())?;
    let sigma = alg.nakayama_permutation()?;
    println!(
        "Nakayama permutation {:?}",
        sigma.iter().map(|k| k + 1).collect::<Vec<_>>()
    );

    for i in 0..alg.rank() {
        let e = alg.generalized_simple(i);
        let p = alg.projective(i);
        let tau = alg.tau(&e)?;
        println!(
            "E{}: dims {:?}, rank vector {:?}, τ-rigid {}, τE{} dims {:?}",
            i + 1,
            e.dims(),
            alg.locally_free_rank(&e),
            alg.is_tau_rigid(&e)?,
            i + 1,
            tau.dims()
        );
        let series = alg.structure_series(&p);
        println!(
            "e{}Π: top {:?}, socle {:?}, layers {:?}",
            i + 1,
            series.top(),
            series.socle(),
            series.radical_layers
        );
        for j in 0..alg.rank() {
            let ej = alg.generalized_simple(j);
            println!(
                "  Hom(e{}Π, E{}) = {}, Ext¹(E{}, E{}) = {}",
                i + 1,
                j + 1,
                alg.hom_dim(&p, &ej),
                i + 1,
                j + 1,
                alg.ext1_dim(&e, &ej)
            );
        }
    }

    let (_, _, pres) = alg.minimal_projective_presentation(&alg.generalized_simple(0));
    let names = |vs: Vec<usize>| {
        vs.iter()
            .map(|k| format!("e{}Π", k + 1))
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    };
    println!(
        "minimal presentation of E1: {} -> {}",
        names(pres.p1_vertices()),
        names(pres.p0_vertices())
    );
    let both = alg.direct_sum(&[alg.generalized_simple(0), alg.generalized_simple(1)]);
    let parts = alg.decompose(&both, 0)?;
    println!("E1 ⊕ E2 splits into {} summands", parts.len());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
