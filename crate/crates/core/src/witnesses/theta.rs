//! Thetas and prisms with a minimum path length.

use serde::{Deserialize, Serialize};

use super::{check_ids, check_induced_path, label_parts, Violation};
use crate::graph::{Graph, PathSeq, Vertex, VertexSet};

/// Ends `v`, `w` and three `v`–`w` paths with pairwise non-adjacent
/// interiors, each of length at least `max(2, min_length)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theta {
    pub v: Vertex,
    pub w: Vertex,
    pub paths: [PathSeq; 3],
    pub min_length: usize,
}

/// Triangles `{v_1,v_2,v_3}`, `{w_1,w_2,w_3}` and disjoint `v_i`–`w_i`
/// paths whose only mutual edges are the triangle edges. Lengths are at
/// least `max(1, min_length)`; a generalized prism allows one length-0 path
/// when the other two have length at least `max(2, min_length)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prism {
    pub triangles: [[Vertex; 3]; 2],
    pub paths: [PathSeq; 3],
    pub min_length: usize,
    pub generalized: bool,
}

/// Edges of `G[V(paths)]`, as sorted pairs.
fn induced_edges(g: &Graph, vertices: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let inside = vertices.mask(g.n());
    let mut out: Vec<(Vertex, Vertex)> = vertices
        .iter()
        .flat_map(|u| g.neighbors(u).iter().copied().filter(move |&w| u < w).map(move |w| (u, w)))
        .filter(|&(_, w)| inside[w])
        .collect();
    out.sort_unstable();
    out
}

fn path_edges(paths: &[PathSeq]) -> Vec<(Vertex, Vertex)> {
    paths.iter().flat_map(|p| p.vertices().windows(2).map(|e| (e[0].min(e[1]), e[0].max(e[1])))).collect()
}

/// Whether `G[vertices]` has exactly the edges `claimed`.
pub fn induces_exactly(g: &Graph, vertices: &VertexSet, claimed: &[(Vertex, Vertex)]) -> bool {
    let mut want: Vec<(Vertex, Vertex)> = claimed.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    want.sort_unstable();
    want.dedup();
    induced_edges(g, vertices) == want
}

impl Theta {
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().fold(VertexSet::new(), |acc, p| acc.union(&p.vertex_set()))
    }

    /// The edges a theta on these paths consists of.
    pub fn claimed_edges(&self) -> Vec<(Vertex, Vertex)> {
        path_edges(&self.paths)
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut ids_ok = check_ids(g, &[self.v, self.w], "ends are valid vertices", &mut out);
        for p in &self.paths {
            ids_ok &= check_ids(g, p.vertices(), "paths contain valid vertices", &mut out);
        }
        if !ids_ok {
            return out;
        }
        if self.v == self.w || g.has_edge(self.v, self.w) {
            out.push(Violation::new("ends are distinct and non-adjacent", vec![self.v, self.w]));
        }
        let min = self.min_length.max(2);
        let mut shape_ok = true;
        for p in &self.paths {
            if !check_induced_path(g, p, "paths are induced paths", &mut out) {
                shape_ok = false;
                continue;
            }
            if p.first() != self.v || p.last() != self.w {
                out.push(Violation::new("paths run from v to w", p.vertices().to_vec()));
                shape_ok = false;
            } else if p.length() < min {
                out.push(Violation::new("paths are long enough", p.vertices().to_vec()));
            }
        }
        if !shape_ok {
            return out;
        }
        let interiors: Vec<&[Vertex]> = self.paths.iter().map(|p| &p.vertices()[1..p.len() - 1]).collect();
        let before = out.len();
        let label = label_parts(g.n(), &interiors, "paths are internally disjoint", &mut out);
        if out.len() > before {
            return out;
        }
        let mut touching = Vec::new();
        for (i, inner) in interiors.iter().enumerate() {
            for &x in inner.iter() {
                if g.neighbors(x).iter().any(|&y| label[y] != usize::MAX && label[y] != i) {
                    touching.push(x);
                }
            }
        }
        if !touching.is_empty() {
            out.push(Violation::new("interiors of distinct paths are non-adjacent", touching));
        }
        out
    }
}

impl Prism {
    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().fold(VertexSet::new(), |acc, p| acc.union(&p.vertex_set()))
    }

    pub fn claimed_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut edges = path_edges(&self.paths);
        for t in &self.triangles {
            edges.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
        }
        edges.retain(|&(a, b)| a != b);
        edges
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut ids_ok = check_ids(g, &self.triangles.concat(), "triangles are valid vertices", &mut out);
        for p in &self.paths {
            ids_ok &= check_ids(g, p.vertices(), "paths contain valid vertices", &mut out);
        }
        if !ids_ok {
            return out;
        }
        for t in &self.triangles {
            if !(g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2])) {
                out.push(Violation::new("triangle edges are present", t.to_vec()));
            }
        }
        let mut shape_ok = true;
        for (i, p) in self.paths.iter().enumerate() {
            if !check_induced_path(g, p, "paths are induced paths", &mut out) {
                shape_ok = false;
            } else if p.first() != self.triangles[0][i] || p.last() != self.triangles[1][i] {
                out.push(Violation::new("path i runs from v_i to w_i", p.vertices().to_vec()));
                shape_ok = false;
            }
        }
        if !shape_ok {
            return out;
        }
        let zero = self.paths.iter().filter(|p| p.length() == 0).count();
        let lengths_ok = if zero == 0 {
            self.paths.iter().all(|p| p.length() >= self.min_length.max(1))
        } else {
            self.generalized
                && zero == 1
                && self.paths.iter().all(|p| p.length() == 0 || p.length() >= self.min_length.max(2))
        };
        if !lengths_ok {
            out.push(Violation::new("paths are long enough", self.paths.iter().map(|p| p.length()).collect()));
        }
        let parts: Vec<&[Vertex]> = self.paths.iter().map(|p| p.vertices()).collect();
        let before = out.len();
        let label = label_parts(g.n(), &parts, "paths are pairwise disjoint", &mut out);
        if out.len() > before {
            return out;
        }
        let mut extra = Vec::new();
        for (i, p) in self.paths.iter().enumerate() {
            for &x in p.vertices() {
                for &y in g.neighbors(x) {
                    let j = label[y];
                    if j == usize::MAX || j <= i {
                        continue;
                    }
                    let allowed = (x == self.triangles[0][i] && y == self.triangles[0][j])
                        || (x == self.triangles[1][i] && y == self.triangles[1][j]);
                    if !allowed {
                        extra.extend([x, y]);
                    }
                }
            }
        }
        if !extra.is_empty() {
            out.push(Violation::new("only triangle edges join distinct paths", extra));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k23_is_a_theta() {
        let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let t = Theta {
            v: 0,
            w: 1,
            paths: [PathSeq::new(vec![0, 2, 1]), PathSeq::new(vec![0, 3, 1]), PathSeq::new(vec![0, 4, 1])],
            min_length: 2,
        };
        assert!(t.validate(&g).is_empty());
        assert!(induces_exactly(&g, &t.vertex_set(), &t.claimed_edges()));
        let g2 = Graph::from_edges(5, g.edges().chain([(2, 3)])).unwrap();
        assert_eq!(t.validate(&g2)[0].clause, "interiors of distinct paths are non-adjacent");
    }

    #[test]
    fn triangular_prism() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let p = Prism {
            triangles: [[0, 1, 2], [3, 4, 5]],
            paths: [PathSeq::new(vec![0, 3]), PathSeq::new(vec![1, 4]), PathSeq::new(vec![2, 5])],
            min_length: 1,
            generalized: false,
        };
        assert!(p.validate(&g).is_empty());
        assert!(induces_exactly(&g, &p.vertex_set(), &p.claimed_edges()));
        let long = Prism { min_length: 2, ..p };
        assert_eq!(long.validate(&g)[0].clause, "paths are long enough");
    }
}
