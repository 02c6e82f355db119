//! Seeded generators for every structure family and the graph and witness
//! file formats used by the command line tool.

mod gen;
mod io;

pub use gen::{
    gen_clique_with_pendants, gen_cycle_rope_ladder, gen_ladder, gen_line_tripod, gen_pendant_path, gen_prism,
    gen_random_k1d_free, gen_rope_ladder, gen_shuffled_rope_ladder, gen_skinny_ladder, gen_theta, gen_tripod,
    gen_wheel, CycleLayout, GenError, JunctionPlan, PendantPath, ShuffledLayout,
};
pub use io::{
    parse_edge_list, parse_graph_json, to_edge_list, to_graph_json, FormatError, Params, Witness, WitnessDoc,
};
