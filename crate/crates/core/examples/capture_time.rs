//! Single-play quantities: cop number, capture time and c_t.
//!
//!     cargo run --example capture_time -- grid:3x3

use eternal_pursuit::engine::{c_t, capt_k, cop_number, Budget};
use eternal_pursuit::graph::generate;

fn main() -> eternal_pursuit::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "grid:3x3".into());
    let g = generate(&spec)?;
    let budget = Budget::from_env();

    let c = cop_number(&g, budget)?;
    println!("{spec}: cop number {c}");
    for k in c..=c + 2 {
        match capt_k(&g, k, budget)? {
            Some(steps) => println!("  {k} cop(s) capture within {steps} step(s)"),
            None => println!("  {k} cop(s) never capture"),
        }
    }
    for t in 1..=4 {
        println!("  c_{t} = {}", c_t(&g, t, budget)?);
    }
    Ok(())
}
