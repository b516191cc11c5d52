//! Graph representation, text formats, structural queries and the junction
//! operations used to glue cubic graphs and poles together.

mod edgeset;
mod formats;
mod graph;
mod junction;
mod pole;
mod structure;

pub use edgeset::EdgeSet;
pub use formats::{parse_any, parse_edge_list, parse_graph6, write_edge_list, write_graph6};
pub use graph::{Graph, IndexMap};
pub use junction::{junction_2, junction_3, Junction, Pairing};
pub use pole::{parse_pole, pole_junction, write_pole, Pole};
pub use structure::{
    bipartition, bridges, component_labels, cyclic_edge_connectivity_at_least, find_cyclic_cut,
    girth, is_bipartite, is_bridgeless, is_connected, odd_components, ComponentCount,
    MAX_CYCLIC_CUT_CHECK,
};
