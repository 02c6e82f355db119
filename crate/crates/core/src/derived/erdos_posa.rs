//! Either `k` pairwise non-adjacent induced-minor copies of a connected
//! pattern, or a deletion set of independence number at most `k·w`, where
//! `w` is the independence number of a given tree decomposition.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::oracles::{induced_minor_model_search, Search, SearchBudget};
use crate::witnesses::{InducedMinorModel, TreeDecomposition, Violation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EPResult {
    /// Pairwise non-adjacent models of the pattern.
    Packing(Vec<InducedMinorModel>),
    /// Deleting `set` leaves no model; `alpha(set) <= bound`.
    HittingSet { set: VertexSet, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EPError {
    #[error("tree decomposition is invalid: {0:?}")]
    InvalidDecomposition(Vec<Violation>),
    #[error("pattern graph must be connected and nonempty")]
    PatternNotConnected,
    #[error("induced-minor search ran out of budget")]
    Exhausted,
}

/// Rooted view of a decomposition tree: parent and depth per node, and the
/// nodes of each subtree.
struct Rooted {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    subtree: Vec<Vec<usize>>,
}

fn root_at_zero(td: &TreeDecomposition) -> Rooted {
    let adj = td.adjacency();
    let n = td.node_count();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let t = order[i];
        i += 1;
        for &s in &adj[t] {
            if !seen[s] {
                seen[s] = true;
                parent[s] = Some(t);
                depth[s] = depth[t] + 1;
                order.push(s);
            }
        }
    }
    let mut subtree: Vec<Vec<usize>> = (0..n).map(|t| vec![t]).collect();
    for &t in order.iter().rev() {
        if let Some(p) = parent[t] {
            let below = std::mem::take(&mut subtree[t]);
            subtree[p].extend_from_slice(&below);
            subtree[t] = below;
        }
    }
    Rooted { parent, depth, subtree }
}

struct Recursion<'a> {
    g: &'a Graph,
    h: &'a Graph,
    td: &'a TreeDecomposition,
    rooted: Rooted,
    budget: SearchBudget,
}

impl Recursion<'_> {
    /// Vertices of `within` lying in some bag of `nodes`.
    fn covered(&self, nodes: &[usize], within: &VertexSet) -> VertexSet {
        let mut mask = vec![false; self.g.n()];
        for &t in nodes {
            for v in self.td.bags()[t].iter() {
                mask[v] = true;
            }
        }
        within.iter().filter(|&v| mask[v]).collect()
    }

    fn model_in(&self, part: &VertexSet) -> Result<Option<InducedMinorModel>, EPError> {
        if part.len() < self.h.n() {
            return Ok(None);
        }
        let (sub, map) = self.g.induced_subgraph(part);
        match induced_minor_model_search(self.h, &sub, self.budget) {
            Search::Found(sets) => {
                let sets = sets.iter().map(|s| s.iter().map(|v| map[v]).collect()).collect();
                Ok(Some(InducedMinorModel::new(self.h.clone(), sets)))
            }
            Search::Absent => Ok(None),
            Search::Inconclusive => Err(EPError::Exhausted),
        }
    }

    /// `i` copies, or a deletion set built from at most `i` bags, for
    /// `G[within]` with the decomposition restricted to `within`.
    fn run(&self, within: VertexSet, i: usize) -> Result<Result<Vec<InducedMinorModel>, VertexSet>, EPError> {
        if i == 0 {
            return Ok(Err(VertexSet::new()));
        }
        if i == 1 {
            return Ok(self.model_in(&within)?.map(|m| vec![m]).ok_or_else(VertexSet::new));
        }
        let n_nodes = self.td.node_count();
        let mut children: Vec<usize> = (0..n_nodes).filter(|&t| self.rooted.parent[t].is_some()).collect();
        children.sort_by_key(|&t| std::cmp::Reverse(self.rooted.depth[t]));
        let mut in_sub = vec![false; n_nodes];
        for s2 in children {
            in_sub.iter_mut().for_each(|b| *b = false);
            for &t in &self.rooted.subtree[s2] {
                in_sub[t] = true;
            }
            let outside: Vec<usize> = (0..n_nodes).filter(|&t| !in_sub[t]).collect();
            // G_{s2 s1}: vertices only in bags below the edge.
            let far = within.difference(&self.covered(&outside, &within));
            let Some(model) = self.model_in(&far)? else { continue };
            let near = within.difference(&self.covered(&self.rooted.subtree[s2], &within));
            return Ok(match self.run(near, i - 1)? {
                Ok(mut models) => {
                    models.push(model);
                    Ok(models)
                }
                Err(set) => Err(set.union(&self.covered(&[s2], &within))),
            });
        }
        // No edge works, so G minus the root bag has no copy.
        Ok(Err(if self.model_in(&within)?.is_some() { self.covered(&[0], &within) } else { VertexSet::new() }))
    }
}

/// Follows the rooted recursion over `td`: the deepest tree edge whose far
/// side contains the pattern contributes one copy there, and one bag to the
/// deletion set, before recursing on the near side with `k - 1`.
pub fn ep_decompose(
    g: &Graph,
    h: &Graph,
    td: &TreeDecomposition,
    k: usize,
    budget: SearchBudget,
) -> Result<EPResult, EPError> {
    let violations = td.validate(g);
    if !violations.is_empty() {
        return Err(EPError::InvalidDecomposition(violations));
    }
    if h.n() == 0 || !h.is_connected() {
        return Err(EPError::PatternNotConnected);
    }
    let search = Recursion { g, h, td, rooted: root_at_zero(td), budget };
    Ok(match search.run(VertexSet::full(g.n()), k)? {
        Ok(models) => EPResult::Packing(models),
        Err(set) => EPResult::HittingSet { set, bound: k * td.independence(g) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::genio::gen_random_k1d_free;
    use crate::graph::are_nonadjacent;
    use crate::oracles::{alpha, contains_induced_minor, exact_tree_independence_number};

    fn decompose(g: &Graph, h: &Graph, k: usize) -> EPResult {
        let td = exact_tree_independence_number(g, SearchBudget::unlimited()).decomposition;
        ep_decompose(g, h, &td, k, SearchBudget::unlimited()).unwrap()
    }

    fn check(g: &Graph, h: &Graph, k: usize) {
        match decompose(g, h, k) {
            EPResult::Packing(models) => {
                assert_eq!(models.len(), k);
                for (a, m) in models.iter().enumerate() {
                    assert!(m.validate(g).is_empty());
                    for other in &models[a + 1..] {
                        assert!(are_nonadjacent(g, &m.support(), &other.support()).unwrap());
                        assert!(m.support().intersection(&other.support()).is_empty());
                    }
                }
            }
            EPResult::HittingSet { set, bound } => {
                assert!(alpha(g, &set).unwrap() <= bound);
                let (rest, _) = g.without(&set);
                assert!(!contains_induced_minor(h, &rest, SearchBudget::unlimited()).unwrap());
            }
        }
    }

    #[test]
    fn pattern_free_graphs_need_no_deletion() {
        let g = families::complete(6);
        let r = decompose(&g, &families::path(4), 2);
        assert_eq!(r, EPResult::HittingSet { set: VertexSet::new(), bound: 2 });
    }

    #[test]
    fn far_apart_copies_are_packed() {
        let mut edges: Vec<(usize, usize)> = (0..11).map(|i| (i, i + 1)).collect();
        edges.push((11, 0));
        let g = Graph::from_edges(12, edges).unwrap();
        assert!(matches!(decompose(&g, &families::path(4), 2), EPResult::Packing(m) if m.len() == 2));
        let two_c6 = Graph::from_edges(12, (0..6).flat_map(|i| [(i, (i + 1) % 6), (6 + i, 6 + (i + 1) % 6)])).unwrap();
        assert!(matches!(decompose(&two_c6, &families::cycle(6), 2), EPResult::Packing(m) if m.len() == 2));
    }

    #[test]
    fn random_graphs_get_a_packing_or_a_hitting_set() {
        for seed in 0..30 {
            let g = gen_random_k1d_free(8, 4, 0.3, seed).unwrap();
            check(&g, &families::path(4), 2);
            check(&g, &families::cycle(6), 2);
        }
    }

    #[test]
    fn disconnected_patterns_are_refused() {
        let g = families::path(3);
        let td = TreeDecomposition::trivial(&g);
        let h = Graph::empty(2);
        assert_eq!(ep_decompose(&g, &h, &td, 1, SearchBudget::unlimited()), Err(EPError::PatternNotConnected));
    }
}
