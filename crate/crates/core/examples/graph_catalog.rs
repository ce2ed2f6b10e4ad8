//! Generators, product graphs and the exhaustive catalogs of small graphs.

use eternal_pursuit::graph::catalog::{connected_graphs, trees};
use eternal_pursuit::graph::{generate, Graph};

fn main() -> eternal_pursuit::Result<()> {
    for spec in ["path:5", "cycle:6", "clique:4", "spider:2,3", "tree:-1,0,0,1", "grid:2x3", "king:2x2"] {
        let g = generate(spec)?;
        let back = Graph::from_edge_list(&g.to_edge_list())?;
        assert_eq!(back.hash(), g.hash());
        println!("{spec:<14} n={:<2} m={:<2} hash {}", g.n(), g.edge_count(), &g.hash()[..12]);
    }
    for n in 1..=7 {
        println!("n = {n}: {:>3} connected graphs, {:>2} trees", connected_graphs(n).len(), trees(n).len());
    }
    Ok(())
}
