//! Exact tree-independence number by dynamic programming over elimination
//! orderings.
//!
//! Every minimal chordal completion is the fill-in graph of some elimination
//! ordering, and the maximal cliques of a fill-in graph are among the sets
//! `{v} ∪ Q(S, v)` (the later vertices reachable from `v` through earlier
//! ones). Since α is monotone, minimising the largest bag α over orderings
//! equals minimising the largest clique α over chordal completions.

use super::alpha::alpha;
use super::{Exhausted, SearchBudget};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::witnesses::TreeDecomposition;

/// The outcome of an atw computation. `exact` is false when the budget ran
/// out and `value` is only an upper bound attained by `decomposition`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeIndependence {
    pub value: usize,
    pub decomposition: TreeDecomposition,
    pub exact: bool,
}

/// Tree-independence number and an optimal tree decomposition. Limited to
/// graphs with at most 20 vertices.
pub fn exact_tree_independence_number(g: &Graph, budget: SearchBudget) -> TreeIndependence {
    let n = g.n();
    assert!(n <= 20, "exact atw is limited to 20 vertices");
    match optimal_order(g, budget) {
        Ok(order) => {
            let decomposition = decomposition_from_order(g, &order);
            let value = decomposition.independence(g);
            TreeIndependence { value, decomposition, exact: true }
        }
        Err(Exhausted) => {
            let decomposition = decomposition_from_order(g, &min_degree_order(g));
            let value = decomposition.independence(g);
            TreeIndependence { value, decomposition, exact: false }
        }
    }
}

fn optimal_order(g: &Graph, budget: SearchBudget) -> Result<Vec<Vertex>, Exhausted> {
    let n = g.n();
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let mut meter = budget.meter();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 } as usize;
    let mut best = vec![0u8; full + 1];
    let mut choice = vec![0u8; full + 1];
    for s in 1..=full {
        meter.tick()?;
        let mut value = u8::MAX;
        let mut pick = 0;
        let mut bits = s as u32;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s as u32 & !(1 << v);
            if best[rest as usize] >= value {
                continue;
            }
            let bag = (1 << v) | later_reachable(&adj, rest, v);
            let cost = (best[rest as usize]).max(mask_alpha(&adj, bag) as u8);
            if cost < value {
                value = cost;
                pick = v as u8;
            }
        }
        best[s] = value;
        choice[s] = pick;
    }
    let mut order = vec![0; n];
    let mut s = full;
    for slot in (0..n).rev() {
        let v = choice[s] as usize;
        order[slot] = v;
        s &= !(1 << v);
    }
    Ok(order)
}

/// Vertices outside `before ∪ {v}` reachable from `v` through `before`.
fn later_reachable(adj: &[u32], before: u32, v: Vertex) -> u32 {
    let mut seen = 1u32 << v;
    let mut stack = vec![v];
    let mut out = 0;
    while let Some(x) = stack.pop() {
        let mut nb = adj[x] & !seen;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= 1 << w;
            if before >> w & 1 == 1 {
                stack.push(w);
            } else {
                out |= 1 << w;
            }
        }
    }
    out
}

fn mask_alpha(adj: &[u32], mask: u32) -> u32 {
    if mask == 0 {
        return 0;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    if adj[v] & rest == 0 {
        return 1 + mask_alpha(adj, rest);
    }
    mask_alpha(adj, rest).max(1 + mask_alpha(adj, rest & !adj[v]))
}

/// Greedy elimination order: repeatedly eliminate a vertex of minimum
/// degree in the filled graph (ties to the smallest id).
pub fn min_degree_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut nbrs: Vec<std::collections::BTreeSet<Vertex>> =
        g.vertices().map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (nbrs[v].len(), v)).expect("alive vertex");
        alive[v] = false;
        order.push(v);
        let around: Vec<Vertex> = nbrs[v].iter().copied().collect();
        for &a in &around {
            nbrs[a].remove(&v);
            for &b in &around {
                if a != b {
                    nbrs[a].insert(b);
                }
            }
        }
    }
    order
}

/// The tree decomposition induced by eliminating vertices in `order`: one bag
/// `{v} ∪ Q(before(v), v)` per vertex, attached to the bag of its earliest
/// eliminated later member; components are chained into one tree.
pub fn decomposition_from_order(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    let n = g.n();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut before = vec![false; n];
    for &v in order {
        let mut seen = vec![false; n];
        seen[v] = true;
        let mut stack = vec![v];
        let mut bag = vec![v];
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                if !seen[w] {
                    seen[w] = true;
                    if before[w] {
                        stack.push(w);
                    } else {
                        bag.push(w);
                    }
                }
            }
        }
        bags.push(VertexSet::from(bag));
        before[v] = true;
    }
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let parent = bag.iter().filter(|&w| w != order[i]).map(|w| position[w]).min();
        match parent {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    if bags.is_empty() {
        bags.push(VertexSet::new());
    }
    TreeDecomposition::new(edges, bags)
}

impl TreeDecomposition {
    /// Largest α of a bag.
    pub fn independence(&self, g: &Graph) -> usize {
        self.bags().iter().map(|b| alpha(g, b).expect("bags lie in g")).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Minimum over all chordal supergraphs of the largest α of a maximal
    /// clique, by enumerating every set of added non-edges.
    fn brute_force(g: &Graph) -> usize {
        let n = g.n();
        let non_edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        let mut best = usize::MAX;
        for pick in 0u32..(1 << non_edges.len()) {
            let mut adj = vec![vec![false; n]; n];
            for (u, v) in g.edges() {
                adj[u][v] = true;
                adj[v][u] = true;
            }
            for (i, &(u, v)) in non_edges.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
            }
            if let Some(cliques) = chordal_cliques(&adj) {
                let worst = cliques.iter().map(|c| alpha(g, &c.iter().copied().collect()).unwrap()).max().unwrap_or(0);
                best = best.min(worst);
            }
        }
        best
    }

    /// Closed neighbourhoods at simplicial elimination, or None if not chordal.
    fn chordal_cliques(adj: &[Vec<bool>]) -> Option<Vec<Vec<usize>>> {
        let n = adj.len();
        let mut alive = vec![true; n];
        let mut cliques = Vec::new();
        for _ in 0..n {
            let v = (0..n).find(|&v| {
                alive[v] && {
                    let nb: Vec<usize> = (0..n).filter(|&w| alive[w] && adj[v][w]).collect();
                    nb.iter().all(|&a| nb.iter().all(|&b| a == b || adj[a][b]))
                }
            })?;
            let mut c: Vec<usize> = (0..n).filter(|&w| alive[w] && adj[v][w]).collect();
            c.push(v);
            cliques.push(c);
            alive[v] = false;
        }
        Some(cliques)
    }

    #[test]
    fn small_families() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(exact_tree_independence_number(&k5, SearchBudget::unlimited()).value, 1);
        assert_eq!(brute_force(&cycle(4)), 2);
        assert_eq!(exact_tree_independence_number(&cycle(4), SearchBudget::unlimited()).value, 2);
        assert_eq!(brute_force(&cycle(6)), 2);
        assert_eq!(exact_tree_independence_number(&cycle(6), SearchBudget::unlimited()).value, 2);
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(exact_tree_independence_number(&star, SearchBudget::unlimited()).value, 1);
    }

    #[test]
    fn decompositions_validate() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let r = exact_tree_independence_number(&g, SearchBudget::unlimited());
        assert!(r.exact);
        assert!(r.decomposition.validate(&g).is_empty());
        assert_eq!(r.value, brute_force(&g));
    }

    #[test]
    fn agrees_with_chordal_completions() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let n = rng.gen_range(1..7);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        e.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, e).unwrap();
            let r = exact_tree_independence_number(&g, SearchBudget::unlimited());
            assert!(r.decomposition.validate(&g).is_empty());
            assert_eq!(r.value, brute_force(&g));
        }
    }

    #[test]
    fn exhausted_budget_gives_upper_bound() {
        let g = cycle(8);
        let r = exact_tree_independence_number(&g, SearchBudget::steps(5));
        assert!(!r.exact);
        assert!(r.value >= 2);
        assert!(r.decomposition.validate(&g).is_empty());
    }
}
