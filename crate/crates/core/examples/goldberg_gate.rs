//! Goldberg snarks: order, snark check and mu_3 for G5 and G7.

use std::time::Instant;

use cubecore::families::goldberg_snark;
use cubecore::graphcore::is_bridgeless;
use cubecore::invariants::{mu, oddness, SearchOptions};
use cubecore::matchings::is_3_edge_colorable;

fn main() -> cubecore::Result<()> {
    for n in [5, 7] {
        let g = goldberg_snark(n)?;
        let t = Instant::now();
        let r = mu(&g, 3, SearchOptions::default())?;
        println!(
            "G{n}: n={} bridgeless={} colourable={} oddness={} mu3={:?} ({} nodes, {:.2?})",
            g.n(),
            is_bridgeless(&g),
            is_3_edge_colorable(&g),
            oddness(&g)?.0,
            r.value,
            r.nodes,
            t.elapsed()
        );
    }
    Ok(())
}
