//! Takes apart the optimal core of a 2-junction of two Petersen graphs:
//! the E_i partition, its classification, bad vertices and bad paths, then a
//! Graphviz rendering on stdout.
//!
//! ```bash
//! cargo run --release --example core_anatomy | dot -Tsvg > core.svg
//! ```

use cubecore::cores::{
    bad_vertices, classify_core, core_circuits, find_bad_paths, is_petersen_core, odd_complement_sum,
    CoreDecomposition,
};
use cubecore::families::petersen;
use cubecore::graphcore::{junction_2, Pairing};
use cubecore::harness::dot_export;
use cubecore::invariants::{mu, SearchOptions};

fn main() -> cubecore::Result<()> {
    let p = petersen();
    let g = junction_2(&p, 0, &p, 0, Pairing::Straight)?.graph;
    let w = mu(&g, 3, SearchOptions::default())?.witness;
    let d = CoreDecomposition::new(&g, [w[0].clone(), w[1].clone(), w[2].clone()])?;

    eprintln!("|E0|={} |E1|={} |E2|={} |E3|={}", d.e0.len(), d.e1.len(), d.e2.len(), d.e3.len());
    eprintln!("class {:?}, circuits {:?}", classify_core(&d), core_circuits(&d));
    eprintln!("petersen core: {:?}", is_petersen_core(&d));
    eprintln!("odd complements {:?}", odd_complement_sum(&d));
    eprintln!("bad vertices {:?}", bad_vertices(&d));
    for path in find_bad_paths(&d) {
        eprintln!("bad path {path:?}");
    }
    print!("{}", dot_export(&g, Some(&d)));
    Ok(())
}
