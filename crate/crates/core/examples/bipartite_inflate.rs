//! Replaces Petersen vertices by copies of K_{3,3}. Bipartite inserts carry
//! no odd circuits, so oddness stays put while the graph grows.

use cubecore::families::{bipartite_inflate, k33, petersen};
use cubecore::invariants::{mu, oddness, SearchOptions};

fn main() -> cubecore::Result<()> {
    let p = petersen();
    let t = k33();
    for at in [vec![], vec![0], vec![0, 5], vec![0, 2, 5, 7]] {
        let g = bipartite_inflate(&p, &t, &at)?;
        let r = mu(&g, 3, SearchOptions::default())?;
        println!("at {at:?}: n={} oddness={} mu3={:?}", g.n(), oddness(&g)?.0, r.value);
    }
    Ok(())
}
