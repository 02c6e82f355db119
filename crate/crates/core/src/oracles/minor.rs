//! Induced minor models by branch-set search.

use super::{Exhausted, Meter, Search, SearchBudget};
use crate::graph::{Graph, Vertex, VertexSet};

/// Disjoint connected branch sets `B_u ⊆ V(g)`, indexed by pattern vertex,
/// with `B_u` and `B_v` adjacent in `g` exactly when `uv ∈ E(h)`.
///
/// Pattern vertices are assigned in descending degree order and candidate
/// sets are enumerated connected-set by connected-set. Hosts are limited to
/// 128 vertices.
pub fn induced_minor_model_search(h: &Graph, g: &Graph, budget: SearchBudget) -> Search<Vec<VertexSet>> {
    assert!(g.n() <= 128, "induced minor search supports hosts with at most 128 vertices");
    if h.n() > g.n() {
        return Search::Absent;
    }
    if h.n() == 0 {
        return Search::Found(Vec::new());
    }
    let mut order: Vec<Vertex> = h.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let adj = g.vertices().map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w)).collect();
    let mut search = ModelSearch { h, adj, order, sets: vec![0; h.n()], closed: vec![0; h.n()], meter: budget.meter() };
    match search.place(0, 0) {
        Ok(true) => {
            Search::Found(search.sets.iter().map(|&m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect()).collect())
        }
        Ok(false) => Search::Absent,
        Err(Exhausted) => Search::Inconclusive,
    }
}

/// Whether `h` is an induced minor of `g`.
pub fn contains_induced_minor(h: &Graph, g: &Graph, budget: SearchBudget) -> Result<bool, Exhausted> {
    match induced_minor_model_search(h, g, budget) {
        Search::Found(_) => Ok(true),
        Search::Absent => Ok(false),
        Search::Inconclusive => Err(Exhausted),
    }
}

struct ModelSearch<'a> {
    h: &'a Graph,
    adj: Vec<u128>,
    order: Vec<Vertex>,
    sets: Vec<u128>,
    closed: Vec<u128>,
    meter: Meter,
}

impl ModelSearch<'_> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn closed_nbhd(&self, set: u128) -> u128 {
        let mut out = set;
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Assign branch sets to `order[depth..]`, given the union `used` of the
    /// sets placed so far.
    fn place(&mut self, depth: usize, used: u128) -> Result<bool, Exhausted> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        let mut allowed: u128 = if self.n() == 128 { !0 } else { (1u128 << self.n()) - 1 };
        allowed &= !used;
        for &w in &self.order[..depth] {
            if !self.h.has_edge(u, w) {
                allowed &= !self.closed[w];
            }
        }
        let remaining = self.order.len() - depth - 1;
        let free = (self.n() as u32).saturating_sub(used.count_ones()) as usize;
        let max_size = free.saturating_sub(remaining);
        if max_size == 0 {
            return Ok(false);
        }
        let mut bits = allowed;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let above = allowed & !((2u128 << v) - 1);
            let ext = self.adj[v] & above;
            if self.grow(depth, used, 1 << v, ext, v, above, max_size)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Enumerate connected sets extending `set` whose minimum vertex is `v`
    /// (each exactly once), trying each as the branch set at `depth`.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        depth: usize,
        used: u128,
        set: u128,
        mut ext: u128,
        v: Vertex,
        above: u128,
        max_size: usize,
    ) -> Result<bool, Exhausted> {
        self.meter.tick()?;
        if self.try_set(depth, used, set)? {
            return Ok(true);
        }
        if set.count_ones() as usize >= max_size {
            return Ok(false);
        }
        let closed = self.closed_nbhd(set);
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let fresh = self.adj[w] & above & !closed & !(1u128 << v);
            if self.grow(depth, used, set | 1 << w, ext | fresh, v, above, max_size)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn try_set(&mut self, depth: usize, used: u128, set: u128) -> Result<bool, Exhausted> {
        let u = self.order[depth];
        let closed = self.closed_nbhd(set);
        for &w in &self.order[..depth] {
            if self.h.has_edge(u, w) && closed & self.sets[w] == 0 {
                return Ok(false);
            }
        }
        self.sets[u] = set;
        self.closed[u] = closed;
        if self.place(depth + 1, used | set)? {
            return Ok(true);
        }
        self.sets[u] = 0;
        self.closed[u] = 0;
        Ok(false)
    }
}
