//! Strong products of paths take the maximum of the factor values; grid
//! formulas bracket larger instances.

use eternal_pursuit::bounds::{cartesian_grid_bounds, strong_grid_bounds, strong_product_value};
use eternal_pursuit::engine::{eternal_cop_number, Budget};
use eternal_pursuit::graph::{generate, strong_product, DEFAULT_PRODUCT_LIMIT};

fn main() -> eternal_pursuit::Result<()> {
    let budget = Budget::from_env();
    let t = 2;
    let (p6, p3) = (generate("path:6")?, generate("path:3")?);
    let prod = strong_product(&p6, &p3, DEFAULT_PRODUCT_LIMIT)?;
    println!("P6: {}", eternal_cop_number(&p6, t, budget)?.k);
    println!("P3: {}", eternal_cop_number(&p3, t, budget)?.k);
    println!("P6 x P3 ({} vertices): {}", prod.n(), eternal_cop_number(&prod, t, budget)?.k);
    println!("{}", strong_product_value(&[p6, p3], t as u64, budget)?);

    for dims in [[10u64, 10], [30, 20]] {
        let (lo, hi) = strong_grid_bounds(&dims, 3)?;
        println!("king {}x{} t=3: {} .. {}", dims[0], dims[1], lo.value, hi.value);
        let (lo, hi) = cartesian_grid_bounds(dims[0], dims[1], 3)?;
        println!("grid {}x{} t=3: {} .. {}", dims[0], dims[1], lo.value, hi.value);
    }
    Ok(())
}
