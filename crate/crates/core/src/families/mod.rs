//! Graph families: named graphs, snark series, random cubic graphs and
//! constructions built from junctions.

mod double_j7;
mod inflate;
mod named;
mod random;
mod ring;

pub use double_j7::{core_census, double_flower_j7, CoreCensus, DoubleJ7};
pub use inflate::bipartite_inflate;
pub use named::{flower_snark, goldberg_snark, heawood, k33, k4, petersen, theta};
pub use random::{random_bridgeless_cubic, random_simple_cubic, MAX_ATTEMPTS};
pub use ring::{ring_family, RingLink, WiringPlan};
