//! Simple undirected graphs on dense vertex ids, sorted vertex sets, paths and
//! cycles, and the neighbourhood / path / separator / contraction primitives.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is out of range for a graph on {1} vertices")]
    InvalidVertex(Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set does not induce a connected subgraph")]
    Disconnected,
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, Vertex>> {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet(out)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::new();
        let mut j = 0;
        for &x in a {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j >= b.len() || b[j] != x {
                out.push(x);
            }
        }
        VertexSet(out)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Membership table of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            if v < n {
                m[v] = true;
            }
        }
        m
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(mut v: Vec<Vertex>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;
    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Simple undirected graph with sorted adjacency lists. Serializes as
/// `{"n": .., "edges": [[u, v], ..]}` with sorted edges, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Graph {
    /// Neighbours of `v` are `targets[offsets[v]..offsets[v + 1]]`.
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Default for Graph {
    fn default() -> Self {
        Graph::empty(0)
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { n: g.n(), edges: g.edges().collect() }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = GraphError;

    fn try_from(r: EdgeListRepr) -> Result<Self, GraphError> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { offsets: vec![0; n + 1], targets: Vec::new() }
    }

    /// From a compressed adjacency whose lists are already sorted and symmetric.
    pub(crate) fn from_csr(offsets: Vec<usize>, targets: Vec<Vertex>) -> Self {
        debug_assert!(offsets.first() == Some(&0) && offsets.last() == Some(&targets.len()));
        Graph { offsets, targets }
    }

    /// From per-vertex neighbour lists that are already sorted and symmetric.
    fn from_lists<L: AsRef<[Vertex]>>(lists: impl IntoIterator<Item = L>) -> Self {
        let mut offsets = vec![0];
        let mut targets = Vec::new();
        for list in lists {
            targets.extend_from_slice(list.as_ref());
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    /// Builds a graph from an edge list; parallel edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in &edges {
            if u >= n {
                return Err(GraphError::InvalidVertex(u, n));
            }
            if v >= n {
                return Err(GraphError::InvalidVertex(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            degree[u + 1] += 1;
            degree[v + 1] += 1;
        }
        for i in 1..=n {
            degree[i] += degree[i - 1];
        }
        let mut fill = degree.clone();
        let mut slots = vec![0; 2 * edges.len()];
        for &(u, v) in &edges {
            slots[fill[u]] = v;
            fill[u] += 1;
            slots[fill[v]] = u;
            fill[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(slots.len());
        for v in 0..n {
            let list = &mut slots[degree[v]..degree[v + 1]];
            list.sort_unstable();
            let start = targets.len();
            for &w in list.iter() {
                if targets.len() == start || targets[targets.len() - 1] != w {
                    targets.push(w);
                }
            }
            offsets.push(targets.len());
        }
        Ok(Graph { offsets, targets })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v, self.n()))
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        match x.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// The graph induced by `x`, relabelled to `0..|x|` in increasing order;
    /// the returned vector maps new ids back to old ones.
    pub fn induced_subgraph(&self, x: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = x.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let lists = old.iter().map(|&v| {
            self.neighbors(v).iter().filter(|&&u| new_id[u] != usize::MAX).map(|&u| new_id[u]).collect::<Vec<_>>()
        });
        (Graph::from_lists(lists), old)
    }

    /// True iff `x` is nonempty and `G[x]` is connected.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        let Some(start) = x.first() else {
            return false;
        };
        let inside = x.mask(self.n());
        let reached = self.reach_from(&[start], &inside);
        reached.iter().filter(|&&r| r).count() == x.len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.is_connected_set(&VertexSet::full(self.n()))
    }

    /// Vertices reachable from `sources` while staying inside `allowed`
    /// (sources outside `allowed` are ignored).
    pub fn reach_from(&self, sources: &[Vertex], allowed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if allowed[s] && !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if allowed[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components of `G[allowed]`, each sorted, ordered by least vertex.
    pub fn components_within(&self, allowed: &[bool]) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if !allowed[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in self.neighbors(u) {
                    if allowed[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            out.push(VertexSet::from(members));
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n()])
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut offsets = self.offsets.clone();
        offsets.extend(other.offsets[1..].iter().map(|&o| o + self.targets.len()));
        let mut targets = self.targets.clone();
        targets.extend(other.targets.iter().map(|&v| v + shift));
        Graph { offsets, targets }
    }

    /// Graph minus the vertices in `x`, relabelled as in [`Graph::induced_subgraph`].
    pub fn without(&self, x: &VertexSet) -> (Graph, Vec<Vertex>) {
        self.induced_subgraph(&VertexSet::full(self.n()).difference(x))
    }
}

/// Path `v_1 .. v_n` with a fixed orientation; `v_1` is the first endpoint.
/// A single vertex is a path of length 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSeq(Vec<Vertex>);

impl PathSeq {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        PathSeq(vertices)
    }

    pub fn single(v: Vertex) -> Self {
        PathSeq(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn reversed(&self) -> PathSeq {
        PathSeq(self.0.iter().rev().copied().collect())
    }

    /// Subpath between positions `i` and `j` inclusive.
    pub fn subpath(&self, i: usize, j: usize) -> PathSeq {
        PathSeq(self.0[i..=j].to_vec())
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    /// Vertices are distinct and consecutive ones adjacent.
    pub fn is_path(&self, g: &Graph) -> bool {
        !self.0.is_empty()
            && self.0.iter().all(|&v| v < g.n())
            && self.vertex_set().len() == self.0.len()
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn is_induced(&self, g: &Graph) -> bool {
        self.is_path(g) && self.chords(g).is_empty()
    }

    /// Edges between non-consecutive vertices.
    pub fn chords(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        let pos = positions(&self.0, g.n());
        let mut out = Vec::new();
        for (i, &v) in self.0.iter().enumerate() {
            for &w in g.neighbors(v) {
                if let Some(j) = pos[w] {
                    if j > i + 1 {
                        out.push((v, w));
                    }
                }
            }
        }
        out
    }
}

/// Cyclically ordered vertex sequence of length at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleSeq(Vec<Vertex>);

impl CycleSeq {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        CycleSeq(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    /// Cyclic distance between positions `i` and `j`.
    pub fn index_distance(&self, i: usize, j: usize) -> usize {
        let d = i.abs_diff(j);
        d.min(self.0.len() - d)
    }

    /// Vertices from position `i` walking forward to position `j`, inclusive.
    pub fn arc(&self, i: usize, j: usize) -> Vec<Vertex> {
        let n = self.0.len();
        let mut out = vec![self.0[i]];
        let mut p = i;
        while p != j {
            p = (p + 1) % n;
            out.push(self.0[p]);
        }
        out
    }

    pub fn is_cycle(&self, g: &Graph) -> bool {
        let n = self.0.len();
        n >= 3
            && self.0.iter().all(|&v| v < g.n())
            && self.vertex_set().len() == n
            && (0..n).all(|i| g.has_edge(self.0[i], self.0[(i + 1) % n]))
    }

    pub fn is_induced(&self, g: &Graph) -> bool {
        if !self.is_cycle(g) {
            return false;
        }
        let n = self.0.len();
        let pos = positions(&self.0, g.n());
        self.0.iter().enumerate().all(|(i, &v)| {
            g.neighbors(v).iter().all(|&w| match pos[w] {
                Some(j) => (i + 1) % n == j || (j + 1) % n == i,
                None => true,
            })
        })
    }
}

/// Position of each vertex of `g` in `seq`; vertices outside `g` are skipped.
pub(crate) fn positions(seq: &[Vertex], n: usize) -> Vec<Option<usize>> {
    let mut pos = vec![None; n];
    for (i, &v) in seq.iter().enumerate().filter(|&(_, &v)| v < n) {
        pos[v] = Some(i);
    }
    pos
}

/// Open neighbourhood N(X): vertices outside `x` with a neighbour in `x`.
pub fn neighborhood(g: &Graph, x: &VertexSet) -> Result<VertexSet, GraphError> {
    g.check_set(x)?;
    let inside = x.mask(g.n());
    let mut out = Vec::new();
    for v in x.iter() {
        out.extend(g.neighbors(v).iter().copied().filter(|&w| !inside[w]));
    }
    Ok(VertexSet::from(out))
}

/// Closed neighbourhood N[X] = N(X) ∪ X.
pub fn closed_neighborhood(g: &Graph, x: &VertexSet) -> Result<VertexSet, GraphError> {
    Ok(neighborhood(g, x)?.union(x))
}

/// All vertices at distance at most `k` from `v`, including `v`.
pub fn distance_k_neighborhood(g: &Graph, v: Vertex, k: usize) -> Result<VertexSet, GraphError> {
    g.check_vertex(v)?;
    let dist = g.distances_from(v);
    Ok(g.vertices().filter(|&u| dist[u] <= k).collect())
}

/// `X` and `Y` are non-adjacent iff `N[X] ∩ Y = ∅`.
pub fn are_nonadjacent(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
    g.check_set(y)?;
    Ok(closed_neighborhood(g, x)?.is_disjoint(y))
}

/// A shortest path with first vertex in `x`, last vertex in `y` and all
/// internal vertices in `z \ (x ∪ y)`; among shortest paths the
/// lexicographically smallest vertex sequence is returned.
pub fn shortest_path_through(g: &Graph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Option<PathSeq> {
    let n = g.n();
    let in_x = x.mask(n);
    let in_y = y.mask(n);
    let mut inner = z.mask(n);
    for v in 0..n {
        if in_x[v] || in_y[v] {
            inner[v] = false;
        }
    }
    shortest_path_masks(g, &in_x, &in_y, &inner)
}

/// Mask form of [`shortest_path_through`]; `inner` must already exclude
/// the endpoint sets.
pub fn shortest_path_masks(g: &Graph, in_x: &[bool], in_y: &[bool], inner: &[bool]) -> Option<PathSeq> {
    let n = g.n();
    if let Some(v) = (0..n).find(|&v| in_x[v] && in_y[v]) {
        return Some(PathSeq::single(v));
    }
    // dist[v]: edges from an inner vertex v to Y through inner vertices.
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if in_y[v] {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if inner[w] && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let step = |w: Vertex| {
        if in_y[w] || inner[w] {
            dist[w]
        } else {
            usize::MAX
        }
    };
    let mut best: Option<(usize, Vertex)> = None;
    for v in (0..n).filter(|&v| in_x[v]) {
        if let Some(d) = g.neighbors(v).iter().map(|&w| step(w)).min() {
            if d != usize::MAX && best.is_none_or(|(bd, _)| d + 1 < bd) {
                best = Some((d + 1, v));
            }
        }
    }
    let (total, start) = best?;
    let mut path = vec![start];
    let mut cur = start;
    for remaining in (0..total).rev() {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| if remaining == 0 { in_y[w] } else { inner[w] && dist[w] == remaining })
            .expect("distance labels are consistent");
        path.push(next);
        cur = next;
    }
    Some(PathSeq::new(path))
}

/// True iff every path from `x` to `y` meets `s` (so `s ⊇ x` always separates).
pub fn is_separator(g: &Graph, s: &VertexSet, x: &VertexSet, y: &VertexSet) -> bool {
    separates_within(g, s, x, y, &vec![true; g.n()])
}

/// [`is_separator`] restricted to paths using only vertices in `universe`.
pub fn separates_within(g: &Graph, s: &VertexSet, x: &VertexSet, y: &VertexSet, universe: &[bool]) -> bool {
    let mut allowed = universe.to_vec();
    for v in s.iter() {
        if v < allowed.len() {
            allowed[v] = false;
        }
    }
    let sources: Vec<Vertex> = x.iter().filter(|&v| v < g.n()).collect();
    let reached = g.reach_from(&sources, &allowed);
    !y.iter().any(|v| v < g.n() && reached[v])
}

/// Result of contracting a connected set to a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `map[v]` is the id of old vertex `v` in the contracted graph.
    pub map: Vec<Vertex>,
}

/// Contracts the connected set `x` to one vertex adjacent to `N(x)`.
///
/// Vertices outside `x` keep their relative order; the contracted vertex
/// takes the slot of `min(x)`.
pub fn contract_set(g: &Graph, x: &VertexSet) -> Result<Contraction, GraphError> {
    g.check_set(x)?;
    let Some(rep) = x.first() else {
        return Err(GraphError::EmptySet);
    };
    if !g.is_connected_set(x) {
        return Err(GraphError::Disconnected);
    }
    let inside = x.mask(g.n());
    let mut map = vec![0; g.n()];
    let mut next = 0;
    for v in g.vertices() {
        if inside[v] && v != rep {
            continue;
        }
        map[v] = next;
        next += 1;
    }
    for v in x.iter() {
        map[v] = map[rep];
    }
    let edges = g.edges().map(|(u, v)| (map[u], map[v])).filter(|(a, b)| a != b);
    let graph = Graph::from_edges(next, edges).expect("contraction keeps ids in range");
    Ok(Contraction { graph, map })
}
