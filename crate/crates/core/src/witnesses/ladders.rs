//! Rope ladders: two rails joined by pairwise non-adjacent rung paths, each
//! rung touching a rail only through its designated endpoint. Rung `Φ^i` is
//! stored from `φ^i_1` (first rail side) to `φ^i_2` (second rail side).

use serde::{Deserialize, Serialize};

use super::{appear_in_order, check_ids, check_induced_path, label_parts, Violation};
use crate::graph::{CycleSeq, Graph, PathSeq, Vertex, VertexSet};

/// Rope ladder without the ordering condition on attachments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffledRopeLadder {
    pub p1: PathSeq,
    pub p2: PathSeq,
    pub rungs: Vec<PathSeq>,
}

/// Rope ladder whose attachments appear in order along both rails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RopeLadder {
    pub p1: PathSeq,
    pub p2: PathSeq,
    pub rungs: Vec<PathSeq>,
}

/// One rail replaced by an arbitrary vertex set `h`; `cycle` records `h` in
/// cyclic order when it induces a cycle. `φ^i_1` is on the `h` side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRopeLadder {
    pub h: VertexSet,
    pub cycle: Option<CycleSeq>,
    pub p: PathSeq,
    pub rungs: Vec<PathSeq>,
}

/// Neighbours of `v` on each side, given side labels.
fn side_neighbors(g: &Graph, v: Vertex, on_side: &[bool]) -> Vec<Vertex> {
    g.neighbors(v).iter().copied().filter(|&w| on_side[w]).collect()
}

/// Shared checks for two rails (`rails[0]` seen from `φ_1`, `rails[1]` from
/// `φ_2`). The first rail is checked as an induced path when `first_is_path`.
fn check_rope(
    g: &Graph,
    rails: [&[Vertex]; 2],
    first_is_path: bool,
    rungs: &[PathSeq],
    out: &mut Vec<Violation>,
) -> bool {
    let mut ids_ok = check_ids(g, rails[0], "rails contain valid vertices", out);
    ids_ok &= check_ids(g, rails[1], "rails contain valid vertices", out);
    for r in rungs {
        ids_ok &= check_ids(g, r.vertices(), "rungs contain valid vertices", out);
    }
    if !ids_ok {
        return false;
    }
    let mut shape_ok = true;
    if first_is_path {
        shape_ok &= check_induced_path(g, &PathSeq::new(rails[0].to_vec()), "rails are induced paths", out);
    } else if rails[0].is_empty() {
        out.push(Violation::new("rail subgraph is nonempty", Vec::new()));
        shape_ok = false;
    }
    shape_ok &= check_induced_path(g, &PathSeq::new(rails[1].to_vec()), "rails are induced paths", out);
    for r in rungs {
        shape_ok &= check_induced_path(g, r, "rungs are induced paths", out);
    }
    if !shape_ok {
        return false;
    }
    let mut parts: Vec<&[Vertex]> = vec![rails[0], rails[1]];
    parts.extend(rungs.iter().map(|r| r.vertices()));
    let before = out.len();
    let label = label_parts(g.n(), &parts, "rails and rungs are mutually disjoint", out);
    if out.len() > before {
        return false;
    }
    let rail_touch: Vec<Vertex> =
        rails[0].iter().copied().filter(|&v| g.neighbors(v).iter().any(|&w| label[w] == 1)).collect();
    if !rail_touch.is_empty() {
        out.push(Violation::new("rails are non-adjacent", rail_touch));
    }
    let mut rung_touch = Vec::new();
    for (i, r) in rungs.iter().enumerate() {
        for &v in r.vertices() {
            if g.neighbors(v).iter().any(|&w| label[w] >= 2 && label[w] != usize::MAX && label[w] != i + 2) {
                rung_touch.push(v);
            }
        }
    }
    if !rung_touch.is_empty() {
        out.push(Violation::new("rungs are mutually non-adjacent", rung_touch));
    }
    let sides: [Vec<bool>; 2] = [0, 1].map(|j| label.iter().map(|&l| l == j).collect());
    for r in rungs {
        for (j, on_side) in sides.iter().enumerate() {
            let end = if j == 0 { r.first() } else { r.last() };
            let stray: Vec<Vertex> = r
                .vertices()
                .iter()
                .copied()
                .filter(|&v| v != end && !side_neighbors(g, v, on_side).is_empty())
                .collect();
            if !stray.is_empty() {
                out.push(Violation::new("rungs meet each rail only through their endpoint", stray));
            }
            if side_neighbors(g, end, on_side).is_empty() {
                out.push(Violation::new("rung endpoints have a neighbour on their rail", vec![end]));
            }
        }
    }
    true
}

/// Attachment sets `N(φ^i_j) ∩ V(rail)` in rung order.
fn attachments(g: &Graph, rail: &PathSeq, rungs: &[PathSeq], side: usize) -> Vec<Vec<Vertex>> {
    let on_rail = rail.vertex_set().mask(g.n());
    rungs
        .iter()
        .map(|r| {
            let end = if side == 0 { r.first() } else { r.last() };
            side_neighbors(g, end, &on_rail)
        })
        .collect()
}

impl ShuffledRopeLadder {
    pub fn k(&self) -> usize {
        self.rungs.len()
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        check_rope(g, [self.p1.vertices(), self.p2.vertices()], true, &self.rungs, &mut out);
        out
    }

    /// Positions on `P_2` of the first attachment of each rung, in rung
    /// order: the permutation `σ` up to relabelling.
    pub fn second_side_order(&self, g: &Graph) -> Vec<usize> {
        attachments(g, &self.p2, &self.rungs, 1)
            .iter()
            .map(|a| a.iter().filter_map(|&v| self.p2.position(v)).min().unwrap_or(usize::MAX))
            .collect()
    }

    pub fn into_ordered(self) -> RopeLadder {
        RopeLadder { p1: self.p1, p2: self.p2, rungs: self.rungs }
    }
}

impl RopeLadder {
    pub fn k(&self) -> usize {
        self.rungs.len()
    }

    pub fn as_shuffled(&self) -> ShuffledRopeLadder {
        ShuffledRopeLadder { p1: self.p1.clone(), p2: self.p2.clone(), rungs: self.rungs.clone() }
    }

    /// Attachment sets of each rung on `P_1` and `P_2`.
    pub fn attachments(&self, g: &Graph) -> [Vec<Vec<Vertex>>; 2] {
        [attachments(g, &self.p1, &self.rungs, 0), attachments(g, &self.p2, &self.rungs, 1)]
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        if !check_rope(g, [self.p1.vertices(), self.p2.vertices()], true, &self.rungs, &mut out) || !out.is_empty() {
            return out;
        }
        for (j, rail) in [&self.p1, &self.p2].into_iter().enumerate() {
            let sets = attachments(g, rail, &self.rungs, j);
            if !appear_in_order(rail, &sets) {
                out.push(Violation::new("rung attachments appear in order along each rail", rail.vertices().to_vec()));
            }
        }
        out
    }
}

impl HRopeLadder {
    pub fn k(&self) -> usize {
        self.rungs.len()
    }

    pub fn validate(&self, g: &Graph) -> Vec<Violation> {
        let mut out = Vec::new();
        if let Some(c) = &self.cycle {
            if !check_ids(g, c.vertices(), "rail cycle contains valid vertices", &mut out) {
                return out;
            }
            if c.vertex_set() != self.h {
                out.push(Violation::new("rail cycle spans the rail subgraph", c.vertices().to_vec()));
            } else if !c.is_induced(g) {
                out.push(Violation::new("rail cycle is an induced cycle", c.vertices().to_vec()));
            }
        }
        check_rope(g, [self.h.as_slice(), self.p.vertices()], false, &self.rungs, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rails 0..5 and 5..10, rungs {10}, {11}, {12} joining positions 0, 2, 4.
    fn ladder(sigma: [usize; 3]) -> (Graph, ShuffledRopeLadder) {
        let mut edges: Vec<(usize, usize)> = (1..5).map(|i| (i - 1, i)).collect();
        edges.extend((6..10).map(|i| (i - 1, i)));
        for (i, &s) in sigma.iter().enumerate() {
            edges.push((10 + i, 2 * i));
            edges.push((10 + i, 5 + 2 * s));
        }
        let g = Graph::from_edges(13, edges).unwrap();
        let w = ShuffledRopeLadder {
            p1: PathSeq::new((0..5).collect()),
            p2: PathSeq::new((5..10).collect()),
            rungs: (10..13).map(PathSeq::single).collect(),
        };
        (g, w)
    }

    #[test]
    fn ordered_and_shuffled() {
        let (g, w) = ladder([0, 1, 2]);
        assert!(w.validate(&g).is_empty());
        assert!(w.clone().into_ordered().validate(&g).is_empty());
        let (g, w) = ladder([2, 0, 1]);
        assert!(w.validate(&g).is_empty());
        assert_eq!(w.into_ordered().validate(&g)[0].clause, "rung attachments appear in order along each rail");
    }

    #[test]
    fn outside_neighbours_are_not_rungs() {
        let (g, w) = ladder([0, 1, 2]);
        let g2 = Graph::from_edges(14, g.edges().chain([(10, 13)])).unwrap();
        assert!(w.validate(&g2).is_empty());
    }

    #[test]
    fn planted_defects() {
        let (g, w) = ladder([0, 1, 2]);
        let g2 = Graph::from_edges(13, g.edges().chain([(10, 11)])).unwrap();
        assert_eq!(w.validate(&g2)[0].clause, "rungs are mutually non-adjacent");
        let g3 = Graph::from_edges(13, g.edges().chain([(0, 9)])).unwrap();
        assert_eq!(w.validate(&g3)[0].clause, "rails are non-adjacent");
    }
}
