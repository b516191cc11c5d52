//! 2-junctions of snarks joined at edges left uncovered by optimal triples:
//! mu_3 of the result is the sum of the parts.

use cubecore::families::{flower_snark, petersen};
use cubecore::graphcore::{junction_2, Graph, Pairing};
use cubecore::invariants::{mu, SearchOptions};

fn uncovered(g: &Graph) -> cubecore::Result<usize> {
    let w = mu(g, 3, SearchOptions::default())?.witness;
    Ok((0..g.m()).find(|&e| w.iter().all(|pm| !pm.contains(e))).expect("snark"))
}

fn main() -> cubecore::Result<()> {
    let p = petersen();
    let j5 = flower_snark(5)?;
    for (name, a, b) in [("P+P", &p, &p), ("P+J5", &p, &j5), ("J5+J5", &j5, &j5)] {
        let j = junction_2(a, uncovered(a)?, b, uncovered(b)?, Pairing::Straight)?;
        let parts = mu(a, 3, SearchOptions::default())?.value.upper()
            + mu(b, 3, SearchOptions::default())?.value.upper();
        let r = mu(&j.graph, 3, SearchOptions::default())?;
        println!("{name}: n={} parts sum to {parts}, junction mu3={:?}", j.graph.n(), r.value);
    }
    Ok(())
}
