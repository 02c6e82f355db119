//! Tree decompositions, strong brambles, induced minor models and induced
//! subgraph maps.

use serde::{Deserialize, Serialize};

use super::{check_ids, Violation};
use crate::graph::{Graph, Vertex, VertexSet};

/// A tree `T` on nodes `0..bags.len()` and a bag `β(t)` per node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    edges: Vec<(usize, usize)>,
    bags: Vec<VertexSet>,
}

impl TreeDecomposition {
    pub fn new(edges: Vec<(usize, usize)>, bags: Vec<VertexSet>) -> Self {
        TreeDecomposition { edges, bags }
    }

    /// A single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition::new(Vec::new(), vec![VertexSet::full(g.n())])
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Neighbours of each tree node.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        let t = self.bags.len();
        if t == 0 {
            out.push(Violation::new("decomposition has at least one node", Vec::new()));
            return out;
        }
        let bad_nodes: Vec<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).filter(|&x| x >= t).collect();
        if !bad_nodes.is_empty() {
            out.push(Violation::new("tree edges join existing nodes", bad_nodes));
            return out;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; t];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if self.edges.len() != t - 1 || seen.iter().any(|s| !s) {
            out.push(Violation::new("decomposition graph is a tree", Vec::new()));
            return out;
        }
        let mut ids_ok = true;
        for bag in &self.bags {
            ids_ok &= check_ids(g, bag.as_slice(), "bags contain valid vertices", &mut out);
        }
        if !ids_ok {
            return out;
        }
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                holders[v].push(i);
            }
        }
        let uncovered: Vec<Vertex> = g.vertices().filter(|&v| holders[v].is_empty()).collect();
        if !uncovered.is_empty() {
            out.push(Violation::new("every vertex lies in a bag", uncovered));
        }
        let missing: Vec<Vertex> = g
            .edges()
            .filter(|&(u, v)| !self.bags.iter().any(|b| b.contains(u) && b.contains(v)))
            .flat_map(|(u, v)| [u, v])
            .collect();
        if !missing.is_empty() {
            out.push(Violation::new("every edge lies in a bag", missing));
        }
        let mut scattered = Vec::new();
        for v in g.vertices() {
            let nodes = &holders[v];
            if nodes.len() <= 1 {
                continue;
            }
            let mut inside = vec![false; t];
            for &x in nodes {
                inside[x] = true;
            }
            let mut reached = vec![false; t];
            let mut stack = vec![nodes[0]];
            reached[nodes[0]] = true;
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if inside[y] && !reached[y] {
                        reached[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            if count != nodes.len() {
                scattered.push(v);
            }
        }
        if !scattered.is_empty() {
            out.push(Violation::new("bags containing a vertex form a subtree", scattered));
        }
        out
    }
}

/// Connected, pairwise intersecting vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongBramble {
    sets: Vec<VertexSet>,
}

impl StrongBramble {
    pub fn new(sets: Vec<VertexSet>) -> Self {
        StrongBramble { sets }
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Whether `x` meets every member.
    pub fn is_hit_by(&self, x: &VertexSet) -> bool {
        self.sets.iter().all(|s| !s.is_disjoint(x))
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        for s in &self.sets {
            if !check_ids(g, s.as_slice(), "bramble sets contain valid vertices", &mut out) {
                return out;
            }
        }
        for s in &self.sets {
            if s.is_empty() || !g.is_connected_set(s) {
                out.push(Violation::new("bramble sets induce connected subgraphs", s.as_slice().to_vec()));
            }
        }
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                if a.is_disjoint(b) {
                    out.push(Violation::new("bramble sets pairwise intersect", a.union(b).into_vec()));
                }
            }
        }
        out
    }
}

/// Branch sets `B_u` for each vertex `u` of `pattern`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedMinorModel {
    pub pattern: Graph,
    pub branch_sets: Vec<VertexSet>,
}

impl InducedMinorModel {
    pub fn new(pattern: Graph, branch_sets: Vec<VertexSet>) -> Self {
        InducedMinorModel { pattern, branch_sets }
    }

    /// Union of all branch sets.
    pub fn support(&self) -> VertexSet {
        self.branch_sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s))
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.branch_sets.len() != self.pattern.n() {
            out.push(Violation::new("one branch set per pattern vertex", Vec::new()));
            return out;
        }
        for s in &self.branch_sets {
            if !check_ids(g, s.as_slice(), "branch sets contain valid vertices", &mut out) {
                return out;
            }
        }
        let mut owner = vec![usize::MAX; g.n()];
        let mut shared = Vec::new();
        for (i, s) in self.branch_sets.iter().enumerate() {
            if s.is_empty() || !g.is_connected_set(s) {
                out.push(Violation::new("branch sets are nonempty and connected", s.as_slice().to_vec()));
            }
            for v in s.iter() {
                if owner[v] != usize::MAX {
                    shared.push(v);
                }
                owner[v] = i;
            }
        }
        if !shared.is_empty() {
            out.push(Violation::new("branch sets are disjoint", shared));
            return out;
        }
        let h = self.pattern.n();
        let mut touch = vec![vec![false; h]; h];
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a != usize::MAX && b != usize::MAX && a != b {
                touch[a][b] = true;
                touch[b][a] = true;
            }
        }
        for (a, row) in touch.iter().enumerate() {
            for (b, &touching) in row.iter().enumerate().skip(a + 1) {
                if touching != self.pattern.has_edge(a, b) {
                    let mut vs = self.branch_sets[a].union(&self.branch_sets[b]).into_vec();
                    vs.sort_unstable();
                    out.push(Violation::new(
                        if touching {
                            "branch sets of non-adjacent pattern vertices are non-adjacent"
                        } else {
                            "branch sets of adjacent pattern vertices are adjacent"
                        },
                        vs,
                    ));
                }
            }
        }
        out
    }
}

/// An injective map from `pattern` into the host preserving adjacency and
/// non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedSubgraphWitness {
    pub pattern: Graph,
    pub map: Vec<Vertex>,
}

impl InducedSubgraphWitness {
    pub fn new(pattern: Graph, map: Vec<Vertex>) -> Self {
        InducedSubgraphWitness { pattern, map }
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.map.len() != self.pattern.n() {
            out.push(Violation::new("one image per pattern vertex", Vec::new()));
            return out;
        }
        if !check_ids(g, &self.map, "images are valid vertices", &mut out) {
            return out;
        }
        if self.image().len() != self.map.len() {
            out.push(Violation::new("map is injective", self.map.clone()));
            return out;
        }
        let h = self.pattern.n();
        for a in 0..h {
            for b in a + 1..h {
                if self.pattern.has_edge(a, b) != g.has_edge(self.map[a], self.map[b]) {
                    out.push(Violation::new(
                        "map preserves adjacency and non-adjacency",
                        vec![self.map[a], self.map[b]],
                    ));
                }
            }
        }
        out
    }
}
