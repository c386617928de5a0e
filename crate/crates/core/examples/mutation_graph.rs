//! The mutation graph of support τ-tilting modules, as DOT and JSON.
//!
//! ```bash
//! cargo run --example mutation_graph | dot -Tsvg > graph.svg
//! ```

use preproj::cartan::CartanData;
use preproj::field::Rational;
use preproj::pathalg::{FiniteDimAlgebra, GroebnerCaps};
use preproj::tautilt::{IdealSemigroup, MutationGraph};
use preproj::Result;

pub fn run() -> Result<()> {
    let data = CartanData::with_symmetrizer(vec![vec![2, -1], vec![-2, 2]], vec![2, 1])?;
    let alg = FiniteDimAlgebra::new(&Rational, &data, GroebnerCaps::default())?;
    let semigroup = IdealSemigroup::new(&alg, 1000, 0)?;
    let graph = semigroup.mutation_graph(&semigroup.catalogue());
    print!("{}", graph.to_dot());

    let json = graph.to_json();
    assert_eq!(MutationGraph::from_json(&json)?, graph);
    eprintln!(
        "{} nodes, {} edges, degrees {:?}, connected {}",
        graph.nodes.len(),
        graph.edges.len(),
        graph.degrees(),
        graph.is_connected()
    );
    for (w, i) in semigroup.upward_edges() {
        eprintln!(
            "{} --{}--> reproduced by left mutation: {}",
            semigroup.word_label(w),
            i + 1,
            semigroup.mutation_matches_edge(w, i)?
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
