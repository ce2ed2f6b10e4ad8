//! Build the graph encoding a set cover instance and confirm that the
//! eternal cop number equals the cover size plus the number of extra paths.

use eternal_pursuit::bounds::maxseq;
use eternal_pursuit::engine::Budget;
use eternal_pursuit::reduction::{build_reduction, set_cover_oracle, verify_reduction, SetCoverInstance};

fn main() -> eternal_pursuit::Result<()> {
    let inst: SetCoverInstance = "3 3 2\n1 2\n2 3\n3\n".parse()?;
    let t = 2;
    let red = build_reduction(&inst, t)?;
    red.check_structure(&inst)?;
    println!(
        "{} elements, {} subsets -> {} vertices ({} extra paths, maxseq({t}) = {})",
        inst.alpha,
        inst.beta(),
        red.graph.n(),
        red.additional_paths,
        maxseq(t as u64)
    );
    println!("minimum cover: {}", set_cover_oracle(&inst)?);
    let check = verify_reduction(&inst, t, Budget::from_env())?;
    println!(
        "{} cops win: {}, one fewer loses: {}",
        check.cover + check.additional_paths,
        check.wins_at_threshold,
        check.loses_below
    );
    Ok(())
}
