//! Induced stars K_{1,d}.

use super::alpha::independent_set;
use crate::graph::{Graph, Vertex, VertexSet};

/// A centre and `d` pairwise non-adjacent neighbours of it, if any exist.
pub fn find_induced_star(g: &Graph, d: usize) -> Option<(Vertex, Vec<Vertex>)> {
    for v in g.vertices() {
        if g.degree(v) < d {
            continue;
        }
        let nbrs: VertexSet = g.neighbors(v).iter().copied().collect();
        let indep = independent_set(g, &nbrs).expect("neighbours are valid");
        if indep.len() >= d {
            return Some((v, indep.iter().take(d).collect()));
        }
    }
    None
}

pub fn is_k1d_free(g: &Graph, d: usize) -> bool {
    find_induced_star(g, d).is_none()
}
