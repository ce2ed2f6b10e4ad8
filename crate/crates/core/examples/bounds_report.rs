//! Every applicable bound for a graph, with the exact value for comparison.
//!
//!     cargo run --example bounds_report -- tree:-1,0,0,1,1,2,2 3

use eternal_pursuit::bounds::report_all;
use eternal_pursuit::engine::{eternal_cop_number, Budget};
use eternal_pursuit::graph::generate;

fn main() -> eternal_pursuit::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "spider:3x4".into());
    let t: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = generate(&spec)?;
    let budget = Budget::from_env();

    let set = report_all(&g, t, budget)?;
    for r in &set.reports {
        println!("{r}");
    }
    for (name, why) in &set.skipped {
        println!("skipped {name}: {why}");
    }
    let (lo, hi) = set.bracket();
    let exact = eternal_cop_number(&g, t as usize, budget)?.k;
    println!("bracket [{lo}, {}], exact {exact}", hi.map_or("-".into(), |h| h.to_string()));
    Ok(())
}
