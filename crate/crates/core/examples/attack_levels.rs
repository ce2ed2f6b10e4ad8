//! Radii reached by repeated attacks and the longest useful attack sequence.

use eternal_pursuit::bounds::{ell, maxseq, maxseq_oracle, sacrifice_threshold};

fn main() -> eternal_pursuit::Result<()> {
    println!("{:>3} {:>8} {:>4} {:>4} {:>4} {:>4}  threshold(i=2)", "t", "maxseq", "l1", "l2", "l3", "l4");
    for t in [1u64, 2, 3, 4, 5, 8, 16, 31, 32, 64] {
        assert_eq!(maxseq(t), maxseq_oracle(t)?);
        println!(
            "{t:>3} {:>8} {:>4} {:>4} {:>4} {:>4}  {}",
            maxseq(t),
            ell(1, t),
            ell(2, t),
            ell(3, t),
            ell(4, t),
            sacrifice_threshold(2, t)
        );
    }
    Ok(())
}
