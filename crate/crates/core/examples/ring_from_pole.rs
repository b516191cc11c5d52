//! Closes k copies of a 4-pole cut from the Petersen graph into a ring and
//! tracks mu_3 as k grows.

use cubecore::families::{petersen, ring_family, WiringPlan};
use cubecore::graphcore::{is_bridgeless, Graph, Pole};
use cubecore::invariants::{mu, oddness, SearchOptions};

fn main() -> cubecore::Result<()> {
    let p = petersen();
    // edges 0 = (0,1) and 2 = (2,3) are cut; 10, 11 face left, 12, 13 right
    let (cut, _) = p.delete(&[], &[0, 2]);
    let mut g = Graph::from_edges(14, cut.edges().iter().copied())?;
    for (u, t) in [(0, 10), (2, 11), (1, 12), (3, 13)] {
        g.add_edge(u, t)?;
    }
    let pole = Pole::new("petersen-4", g, vec![10, 11, 12, 13])?;
    let plan = WiringPlan::ring(&[(2, 0), (3, 1)]);
    print!("wiring plan:\n{plan}");

    for k in 1..=4 {
        let r = ring_family(&pole, k, &plan)?;
        let m = mu(&r, 3, SearchOptions::default())?;
        println!(
            "k={k}: n={} bridgeless={} oddness={} mu3={:?}",
            r.n(),
            is_bridgeless(&r),
            oddness(&r)?.0,
            m.value
        );
    }
    Ok(())
}
