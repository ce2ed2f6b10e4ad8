//! The 43-vertex four-retract example: a vertex partition into retracts,
//! each placed in a class, gives an upper bound of 8 cops at t = 4.

use eternal_pursuit::bounds::{ell, retract_parameter_bound, showcase};
use eternal_pursuit::engine::Budget;

fn main() -> eternal_pursuit::Result<()> {
    let t = 4;
    let (g, d) = showcase()?;
    d.validate(&g, t, Budget::from_env())?;
    println!("{} vertices, {} parts", g.n(), d.parts.len());
    for p in &d.parts {
        println!(
            "  {:>2} vertices  i = {}  k = {}  (radius {} covered in one attack)",
            p.vertices.len(),
            p.i,
            p.k,
            ell(p.i, t)
        );
    }
    let rep = retract_parameter_bound(&g, &d, t, Budget::from_env())?;
    println!("{rep}");
    Ok(())
}
