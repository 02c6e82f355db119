//! Maximum independent sets of induced subgraphs by branch and bound.

use super::{Exhausted, Meter, SearchBudget};
use crate::bits::Bits;
use crate::graph::{Graph, GraphError, Vertex, VertexSet};

/// An α value that is exact unless the budget ran out, in which case it is
/// the best lower bound found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounded {
    pub value: usize,
    pub exact: bool,
}

/// Exact independence number of `G[x]`.
pub fn alpha(g: &Graph, x: &VertexSet) -> Result<usize, GraphError> {
    Ok(independent_set(g, x)?.len())
}

/// A maximum independent set of `G[x]`.
pub fn independent_set(g: &Graph, x: &VertexSet) -> Result<VertexSet, GraphError> {
    g.check_set(x)?;
    let (set, _) = solve(g, x, SearchBudget::unlimited().meter());
    Ok(set)
}

pub fn alpha_within(g: &Graph, x: &VertexSet, budget: SearchBudget) -> Result<Bounded, GraphError> {
    g.check_set(x)?;
    let (set, exact) = solve(g, x, budget.meter());
    Ok(Bounded { value: set.len(), exact })
}

fn solve(g: &Graph, x: &VertexSet, meter: Meter) -> (VertexSet, bool) {
    let local: Vec<Vertex> = x.iter().collect();
    let m = local.len();
    if m == 0 {
        return (VertexSet::new(), true);
    }
    let mut index = std::collections::HashMap::with_capacity(m);
    for (i, &v) in local.iter().enumerate() {
        index.insert(v, i);
    }
    let mut adj = vec![Bits::new(m); m];
    for (i, &v) in local.iter().enumerate() {
        for w in g.neighbors(v) {
            if let Some(&j) = index.get(w) {
                adj[i].insert(j);
            }
        }
    }
    let mut solver = Solver { adj, meter, best: Vec::new() };
    solver.best = solver.greedy(Bits::full(m));
    let mut chosen = Vec::new();
    let exact = solver.search(Bits::full(m), &mut chosen).is_ok();
    let set = solver.best.iter().map(|&i| local[i]).collect();
    (set, exact)
}

struct Solver {
    adj: Vec<Bits>,
    meter: Meter,
    best: Vec<usize>,
}

impl Solver {
    fn greedy(&self, mut cand: Bits) -> Vec<usize> {
        let mut out = Vec::new();
        while !cand.is_empty() {
            let v = cand.iter().min_by_key(|&v| self.adj[v].and_count(&cand)).expect("nonempty");
            out.push(v);
            cand = cand.and_not(&self.adj[v]);
            cand.remove(v);
        }
        out
    }

    fn clique_cover(&self, cand: &Bits) -> usize {
        let mut rem = cand.clone();
        let mut count = 0;
        while let Some(u) = rem.first() {
            rem.remove(u);
            let mut pool = rem.and(&self.adj[u]);
            while let Some(w) = pool.first() {
                rem.remove(w);
                pool = pool.and(&self.adj[w]);
            }
            count += 1;
        }
        count
    }

    fn search(&mut self, mut cand: Bits, chosen: &mut Vec<usize>) -> Result<(), Exhausted> {
        self.meter.tick()?;
        let base = chosen.len();
        loop {
            let low = cand.iter().find(|&v| self.adj[v].and_count(&cand) <= 1);
            match low {
                Some(v) => {
                    chosen.push(v);
                    cand = cand.and_not(&self.adj[v]);
                    cand.remove(v);
                }
                None => break,
            }
        }
        let result = self.branch(cand, chosen);
        chosen.truncate(base);
        result
    }

    fn branch(&mut self, cand: Bits, chosen: &mut Vec<usize>) -> Result<(), Exhausted> {
        if cand.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        if chosen.len() + self.clique_cover(&cand) <= self.best.len() {
            return Ok(());
        }
        let v = cand.iter().max_by_key(|&v| (self.adj[v].and_count(&cand), std::cmp::Reverse(v))).expect("nonempty");
        let mut with = cand.and_not(&self.adj[v]);
        with.remove(v);
        chosen.push(v);
        let r = self.search(with, chosen);
        chosen.pop();
        r?;
        let mut without = cand;
        without.remove(v);
        self.search(without, chosen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph, x: &VertexSet) -> usize {
        let v: Vec<Vertex> = x.iter().collect();
        (0u32..1 << v.len())
            .filter(|mask| {
                (0..v.len()).all(|i| {
                    mask >> i & 1 == 0 || (i + 1..v.len()).all(|j| mask >> j & 1 == 0 || !g.has_edge(v[i], v[j]))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        let k5 = Graph::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        assert_eq!(alpha(&k5, &VertexSet::full(5)).unwrap(), 1);
        assert_eq!(alpha(&k5, &VertexSet::new()).unwrap(), 0);
        let c7 = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(alpha(&c7, &VertexSet::full(7)).unwrap(), 3);
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_graphs() {
        let mut state = 12345u64;
        for n in 1..13 {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 61 < 3 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let x = VertexSet::full(n);
            assert_eq!(alpha(&g, &x).unwrap(), brute(&g, &x));
            let set = independent_set(&g, &x).unwrap();
            assert!(set.iter().all(|u| set.iter().all(|w| !g.has_edge(u, w))));
        }
    }

    #[test]
    fn budget_gives_lower_bound() {
        let g = Graph::empty(40);
        let b = alpha_within(&g, &VertexSet::full(40), SearchBudget::steps(1)).unwrap();
        assert_eq!(b.value, 40);
    }
}
