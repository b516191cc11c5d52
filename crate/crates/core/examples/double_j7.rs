//! Two copies of J7 glued at a vertex of a 6-circuit core. The copied triple
//! leaves five edges uncovered on a single 10-circuit, and the exact search
//! agrees that nothing better exists.

use std::time::Instant;

use cubecore::cores::{core_circuits, CoreDecomposition};
use cubecore::families::double_flower_j7;
use cubecore::invariants::{mu, SearchOptions};

fn main() -> cubecore::Result<()> {
    let dj = double_flower_j7()?;
    let g = &dj.graph;
    println!("J7 census: {:?}", dj.j7_census);
    let d = CoreDecomposition::new(g, dj.witness.clone())?;
    println!("n={} u={} witness |E0|={} core={:?}", g.n(), dj.u, d.k, core_circuits(&d));

    let t = Instant::now();
    let r = mu(g, 3, SearchOptions::default())?;
    println!("mu3={:?} after {} nodes in {:.2?}", r.value, r.nodes, t.elapsed());
    Ok(())
}
