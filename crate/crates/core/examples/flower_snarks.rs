//! Flower snarks J5, J7, J9: mu_3, oddness and the shape of every optimal core.

use cubecore::families::{core_census, flower_snark};
use cubecore::graphcore::girth;
use cubecore::invariants::{mu, oddness, perfect_matching_list, SearchOptions};

fn main() -> cubecore::Result<()> {
    for n in [5, 7, 9] {
        let j = flower_snark(n)?;
        let r = mu(&j, 3, SearchOptions::default())?;
        let list = perfect_matching_list(&j, usize::MAX).expect("uncapped");
        let v = r.value.exact().expect("small enough to finish");
        let census = core_census(&j, v, &list)?;
        println!(
            "J{n}: n={} girth={:?} pms={} oddness={} mu3={v} nodes={} cores={:?}",
            j.n(),
            girth(&j),
            list.len(),
            oddness(&j)?.0,
            r.nodes,
            census.shapes
        );
    }
    Ok(())
}
