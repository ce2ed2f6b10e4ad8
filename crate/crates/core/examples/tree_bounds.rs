//! Upper and lower bounds on trees and the decomposition behind the upper bound.

use eternal_pursuit::bounds::{tree_bound, tree_lower_bound};
use eternal_pursuit::engine::{eternal_cop_number, Budget};
use eternal_pursuit::graph::generate;

fn main() -> eternal_pursuit::Result<()> {
    for spec in ["spider:3x4", "spider:4,4,5", "tree:-1,0,0,1,1,2,2,3,3,4,4,5,5"] {
        let g = generate(spec)?;
        println!("{spec} ({} vertices)", g.n());
        for t in [2, 4, 6] {
            let (d, upper) = tree_bound(&g, t)?;
            let lower = tree_lower_bound(&g, t)?;
            let exact = eternal_cop_number(&g, t as usize, Budget::from_env())?.k;
            println!("  t = {t}: {} <= {exact} <= {}", lower.value, upper.value);
            for p in &d.parts {
                println!("    part {:?} level {}", p.vertices, p.i);
            }
        }
    }
    Ok(())
}
