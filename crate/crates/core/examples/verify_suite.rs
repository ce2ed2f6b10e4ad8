//! Run the built-in regression suites against closed forms and bounds.

use eternal_pursuit::engine::Budget;
use eternal_pursuit::verify::{run, Limits, Suite};

fn main() -> eternal_pursuit::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("all").parse()?;
    let report = run(suite, Limits { max_n: 7, max_t: 3, budget: Budget::from_env() })?;
    for r in &report.records {
        println!("{r}");
    }
    println!("{} records, {} mismatches", report.records.len(), report.mismatches());
    Ok(())
}
