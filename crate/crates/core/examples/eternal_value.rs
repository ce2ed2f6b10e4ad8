//! Eternal cop numbers of a few small graphs across time bounds.
//!
//!     cargo run --example eternal_value -- spider:3x4 6

use eternal_pursuit::engine::{eternal_cop_number, eternal_win_set, Budget};
use eternal_pursuit::graph::generate;

fn main() -> eternal_pursuit::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "cycle:7".into());
    let max_t: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let g = generate(&spec)?;
    let budget = Budget::from_env();

    println!("{spec}: {} vertices, {} edges", g.n(), g.edge_count());
    for t in 1..=max_t {
        let value = eternal_cop_number(&g, t, budget)?;
        let win = eternal_win_set(&g, value.k, t, budget)?;
        println!(
            "t = {t}: {} cop(s), {} winning start(s), e.g. {}  [{} configs, {} rounds]",
            value.k,
            win.len(),
            win[0],
            value.stats.configs,
            value.stats.rounds
        );
    }
    Ok(())
}
