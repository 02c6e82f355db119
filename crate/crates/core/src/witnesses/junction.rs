//! Junctions: how a singly attached path meets a target path, and the
//! rerouting that turns a junction with a gap into a single-vertex one.
//!
//! The attaching vertex is an endpoint of the attaching path `a`; the
//! junction is its neighbourhood on the target path `b`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, PathSeq, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum JunctionType {
    /// One junction vertex.
    One,
    /// Two adjacent junction vertices.
    Two,
    /// Anything else: some two junction vertices are non-adjacent.
    Three,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JunctionReport {
    /// The endpoint of `a` adjacent to `b`.
    pub attaching: Vertex,
    /// `N(a) ∩ V(b)`, sorted by position along `b`.
    pub junction: Vec<Vertex>,
    pub kind: JunctionType,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JunctionError {
    #[error("paths must be nonempty, disjoint and use valid vertices")]
    InvalidPaths,
    #[error("no vertex of the attaching path is adjacent to the target path")]
    NotAttached,
    #[error("several vertices of the attaching path are adjacent to the target path: {0:?}")]
    SeveralAttaching(Vec<Vertex>),
    #[error("attaching vertex {0} is not an endpoint of its path")]
    NotEndpoint(Vertex),
    #[error("cleaning needs a junction of the third type, found {0:?}")]
    NotThirdType(JunctionType),
    #[error("cleaning needs an attaching path with at least two vertices")]
    TooShort,
}

pub fn classify_junction(g: &Graph, a: &PathSeq, b: &PathSeq) -> Result<JunctionReport, JunctionError> {
    let valid = |p: &PathSeq| !p.is_empty() && p.vertices().iter().all(|&v| v < g.n());
    if !valid(a) || !valid(b) || !a.vertex_set().is_disjoint(&b.vertex_set()) {
        return Err(JunctionError::InvalidPaths);
    }
    let on_b = b.vertex_set().mask(g.n());
    let attaching: Vec<Vertex> =
        a.vertices().iter().copied().filter(|&v| g.neighbors(v).iter().any(|&w| on_b[w])).collect();
    let v = match attaching.as_slice() {
        [] => return Err(JunctionError::NotAttached),
        [v] => *v,
        _ => return Err(JunctionError::SeveralAttaching(attaching)),
    };
    if v != a.first() && v != a.last() {
        return Err(JunctionError::NotEndpoint(v));
    }
    let junction: Vec<Vertex> = b.vertices().iter().copied().filter(|&w| g.has_edge(v, w)).collect();
    let kind = match junction.as_slice() {
        [_] => JunctionType::One,
        [x, y] if g.has_edge(*x, *y) => JunctionType::Two,
        _ => JunctionType::Three,
    };
    Ok(JunctionReport { attaching: v, junction, kind })
}

/// Reroutes `b` through the attaching vertex `v` between the extremal
/// junction vertices `w_1, w_2` and drops `v` from `a`:
/// `b' = b..w_1 v w_2..b`, `a' = a - v`. The new junction is `{v}`.
pub fn clean_type3_junction(g: &Graph, a: &PathSeq, b: &PathSeq) -> Result<(PathSeq, PathSeq), JunctionError> {
    let report = classify_junction(g, a, b)?;
    if report.kind != JunctionType::Three {
        return Err(JunctionError::NotThirdType(report.kind));
    }
    if a.len() < 2 {
        return Err(JunctionError::TooShort);
    }
    let v = report.attaching;
    let first = b.position(report.junction[0]).expect("junction lies on b");
    let last = b.position(*report.junction.last().expect("nonempty")).expect("junction lies on b");
    let mut rail: Vec<Vertex> = b.vertices()[..=first].to_vec();
    rail.push(v);
    rail.extend_from_slice(&b.vertices()[last..]);
    let rest: Vec<Vertex> =
        if a.first() == v { a.vertices()[1..].to_vec() } else { a.vertices()[..a.len() - 1].to_vec() };
    Ok((PathSeq::new(rest), PathSeq::new(rail)))
}

impl JunctionReport {
    pub fn junction_set(&self) -> VertexSet {
        self.junction.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Target path b_0..b_4 on ids 0..5 and attaching path a_0..a_2 on 5..8,
    /// with a_0 adjacent to the given positions of b.
    fn instance(junction: &[usize]) -> (Graph, PathSeq, PathSeq) {
        let mut edges: Vec<(usize, usize)> = (1..5).map(|i| (i - 1, i)).collect();
        edges.extend([(5, 6), (6, 7)]);
        edges.extend(junction.iter().map(|&j| (5, j)));
        let g = Graph::from_edges(8, edges).unwrap();
        (g, PathSeq::new(vec![5, 6, 7]), PathSeq::new(vec![0, 1, 2, 3, 4]))
    }

    #[test]
    fn types() {
        let (g, a, b) = instance(&[2]);
        assert_eq!(classify_junction(&g, &a, &b).unwrap().kind, JunctionType::One);
        let (g, a, b) = instance(&[2, 3]);
        assert_eq!(classify_junction(&g, &a, &b).unwrap().kind, JunctionType::Two);
        let (g, a, b) = instance(&[1, 3]);
        assert_eq!(classify_junction(&g, &a, &b).unwrap().kind, JunctionType::Three);
    }

    #[test]
    fn preconditions() {
        let (g, _, b) = instance(&[2]);
        assert_eq!(classify_junction(&g, &PathSeq::new(vec![6, 5, 7]), &b), Err(JunctionError::NotEndpoint(5)));
        let g2 = Graph::from_edges(8, g.edges().chain([(7, 4)])).unwrap();
        assert!(matches!(
            classify_junction(&g2, &PathSeq::new(vec![5, 6, 7]), &b),
            Err(JunctionError::SeveralAttaching(_))
        ));
    }

    #[test]
    fn cleaning_gap() {
        let (g, a, b) = instance(&[1, 3]);
        let (a2, b2) = clean_type3_junction(&g, &a, &b).unwrap();
        assert_eq!(b2.vertices(), &[0, 1, 5, 3, 4]);
        assert_eq!(a2.vertices(), &[6, 7]);
        assert!(b2.is_induced(&g));
        let r = classify_junction(&g, &a2, &b2).unwrap();
        assert_eq!((r.junction, r.kind), (vec![5], JunctionType::One));
    }

    #[test]
    fn cleaning_with_endpoint() {
        let (g, a, b) = instance(&[0, 2]);
        let (_, b2) = clean_type3_junction(&g, &a, &b).unwrap();
        assert_eq!(b2.vertices(), &[0, 5, 2, 3, 4]);
        assert!(b2.is_induced(&g));
    }

    #[test]
    fn cleaning_all_patterns() {
        for len in 2..=7usize {
            for mask in 1u32..(1 << len) {
                let junction: Vec<usize> = (0..len).filter(|&i| mask >> i & 1 == 1).collect();
                let mut edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
                let (a0, a1) = (len, len + 1);
                edges.push((a0, a1));
                edges.extend(junction.iter().map(|&j| (a0, j)));
                let g = Graph::from_edges(len + 2, edges).unwrap();
                let a = PathSeq::new(vec![a0, a1]);
                let b = PathSeq::new((0..len).collect());
                let r = classify_junction(&g, &a, &b).unwrap();
                if r.kind != JunctionType::Three {
                    continue;
                }
                let (a2, b2) = clean_type3_junction(&g, &a, &b).unwrap();
                assert!(b2.is_induced(&g));
                assert_eq!(classify_junction(&g, &a2, &b2).unwrap().kind, JunctionType::One);
            }
        }
    }
}
