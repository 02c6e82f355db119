//! Induced subgraph search by backtracking.

use super::{Exhausted, Meter, Search, SearchBudget};
use crate::graph::{Graph, Vertex};

/// An injective map `φ: V(h) → V(g)` with `uv ∈ E(h) ⟺ φ(u)φ(v) ∈ E(g)`.
pub fn induced_subgraph_search(h: &Graph, g: &Graph, budget: SearchBudget) -> Search<Vec<Vertex>> {
    if h.n() > g.n() {
        return Search::Absent;
    }
    let order = search_order(h);
    let mut state =
        State { h, g, order: &order, map: vec![usize::MAX; h.n()], used: vec![false; g.n()], meter: budget.meter() };
    match state.extend(0) {
        Ok(true) => Search::Found(state.map),
        Ok(false) => Search::Absent,
        Err(Exhausted) => Search::Inconclusive,
    }
}

/// Pattern vertices so that each one after the first of its component has
/// an earlier neighbour; within that, higher degree first.
fn search_order(h: &Graph) -> Vec<Vertex> {
    let mut placed = vec![false; h.n()];
    let mut order = Vec::with_capacity(h.n());
    while order.len() < h.n() {
        let root = h
            .vertices()
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[root] = true;
        order.push(root);
        loop {
            let next =
                h.vertices().filter(|&v| !placed[v] && h.neighbors(v).iter().any(|&w| placed[w])).max_by_key(|&v| {
                    let back = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (back, h.degree(v), std::cmp::Reverse(v))
                });
            match next {
                Some(v) => {
                    placed[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
    }
    order
}

struct State<'a> {
    h: &'a Graph,
    g: &'a Graph,
    order: &'a [Vertex],
    map: Vec<Vertex>,
    used: Vec<bool>,
    meter: Meter,
}

impl State<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool, Exhausted> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        let anchor = self.h.neighbors(u).iter().copied().find(|&w| self.map[w] != usize::MAX);
        let candidates: Vec<Vertex> = match anchor {
            Some(w) => self.g.neighbors(self.map[w]).to_vec(),
            None => self.g.vertices().collect(),
        };
        for v in candidates {
            self.meter.tick()?;
            if self.used[v] || self.g.degree(v) < self.h.degree(u) || !self.consistent(u, v) {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.map[u] = usize::MAX;
            self.used[v] = false;
        }
        Ok(false)
    }

    fn consistent(&self, u: Vertex, v: Vertex) -> bool {
        self.order.iter().all(|&w| {
            let image = self.map[w];
            image == usize::MAX || self.h.has_edge(u, w) == self.g.has_edge(v, image)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn brute_force(h: &Graph, g: &Graph) -> bool {
        fn rec(h: &Graph, g: &Graph, map: &mut Vec<Vertex>) -> bool {
            let u = map.len();
            if u == h.n() {
                return true;
            }
            for v in g.vertices() {
                if map.contains(&v) {
                    continue;
                }
                if (0..u).all(|w| h.has_edge(u, w) == g.has_edge(v, map[w])) {
                    map.push(v);
                    if rec(h, g, map) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        rec(h, g, &mut Vec::new())
    }

    #[test]
    fn single_vertex() {
        let h = Graph::empty(1);
        assert!(induced_subgraph_search(&h, &cycle(5), SearchBudget::unlimited()).is_found());
    }

    #[test]
    fn no_induced_c4_in_c5() {
        assert!(!brute_force(&cycle(4), &cycle(5)));
        assert!(induced_subgraph_search(&cycle(4), &cycle(5), SearchBudget::unlimited()).is_absent());
    }

    #[test]
    fn path_in_cycle() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let map = induced_subgraph_search(&p3, &cycle(6), SearchBudget::unlimited()).found().unwrap();
        let g = cycle(6);
        assert!(g.has_edge(map[0], map[1]) && g.has_edge(map[1], map[2]) && !g.has_edge(map[0], map[2]));
    }

    #[test]
    fn budget_is_inconclusive() {
        let h = Graph::empty(6);
        let g = Graph::from_edges(12, (0..11).map(|i| (i, i + 1))).unwrap();
        assert_eq!(induced_subgraph_search(&h, &g, SearchBudget::steps(3)), Search::Inconclusive);
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let rand_graph = |n: usize, rng: &mut rand_chacha::ChaCha8Rng| {
                let mut e = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.4) {
                            e.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, e).unwrap()
            };
            let h = rand_graph(rng.gen_range(1..5), &mut rng);
            let g = rand_graph(rng.gen_range(4..8), &mut rng);
            let found = induced_subgraph_search(&h, &g, SearchBudget::unlimited());
            assert_eq!(found.is_found(), brute_force(&h, &g));
        }
    }
}
