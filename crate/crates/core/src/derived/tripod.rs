//! A long tripod `S_p` or its line graph `T_p` around the middle rung of a
//! `(2p+1)`-rope ladder, chosen by the type of that rung's junction on the
//! first rail.

use thiserror::Error;

use crate::families;
use crate::graph::{Graph, PathSeq, Vertex};
use crate::witnesses::{
    classify_junction, clean_type3_junction, InducedSubgraphWitness, JunctionError, JunctionType, RopeLadder, Violation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripodKind {
    /// `S_p`, numbered as [`families::tripod`].
    Tripod,
    /// `T_p`, numbered as [`families::line_tripod`].
    LineTripod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripodWitness {
    pub kind: TripodKind,
    /// Junction type of the middle rung on the first rail.
    pub junction: JunctionType,
    pub subgraph: InducedSubgraphWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripodError {
    #[error("rope ladder is invalid: {0:?}")]
    InvalidLadder(Vec<Violation>),
    #[error("need {needed} rungs, found {found}")]
    TooFewRungs { found: usize, needed: usize },
    #[error("arm length must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Junction(#[from] JunctionError),
    #[error("an arm of {0} vertices does not fit")]
    ArmsTooShort(usize),
}

/// `count` rail vertices starting at position `from` and moving by `step`.
fn along(rail: &[Vertex], from: usize, step: isize, count: usize) -> Option<Vec<Vertex>> {
    (0..count as isize).map(|t| from.checked_add_signed(t * step).and_then(|i| rail.get(i).copied())).collect()
}

/// `need` vertices through `tail` (a rung suffix ending at `phi2`) and then
/// along `p2` away from the far side of `phi2`'s attachments.
fn third_arm(g: &Graph, tail: &[Vertex], phi2: Vertex, p2: &PathSeq, need: usize) -> Option<Vec<Vertex>> {
    if tail.len() >= need {
        return Some(tail[..need].to_vec());
    }
    let rest = need - tail.len();
    let rail = p2.vertices();
    let seen: Vec<usize> = (0..rail.len()).filter(|&i| g.has_edge(phi2, rail[i])).collect();
    let (lo, hi) = (*seen.first()?, *seen.last()?);
    let more = along(rail, hi, 1, rest).or_else(|| along(rail, lo, -1, rest))?;
    Some(tail.iter().copied().chain(more).collect())
}

/// `S_p` centred at the junction vertex (first type), `T_p` on the junction
/// edge and the rung end (second type), or `S_p` centred at the rung end
/// after cleaning (third type). Two arms run along the first rail and the
/// third through the rung, continuing on the second rail when the rung is
/// short.
pub fn extract_tripod_or_line(g: &Graph, w: &RopeLadder, p: usize) -> Result<TripodWitness, TripodError> {
    if p == 0 {
        return Err(TripodError::ZeroLength);
    }
    let violations = w.validate(g);
    if !violations.is_empty() {
        return Err(TripodError::InvalidLadder(violations));
    }
    if w.k() < 2 * p + 1 {
        return Err(TripodError::TooFewRungs { found: w.k(), needed: 2 * p + 1 });
    }
    let rung = &w.rungs[p];
    let phi1 = rung.first();
    let phi2 = rung.last();
    let report = classify_junction(g, rung, &w.p1)?;
    let p1 = w.p1.vertices();
    let pos = |rail: &[Vertex], v: Vertex| rail.iter().position(|&u| u == v).expect("junction lies on the rail");
    let short = TripodError::ArmsTooShort(p);
    let (kind, map) = match report.kind {
        JunctionType::One => {
            let c = pos(p1, report.junction[0]);
            let left = along(p1, c.wrapping_sub(1), -1, p).ok_or(short.clone())?;
            let right = along(p1, c + 1, 1, p).ok_or(short.clone())?;
            let down = third_arm(g, rung.vertices(), phi2, &w.p2, p).ok_or(short)?;
            (TripodKind::Tripod, [vec![p1[c]], left, right, down].concat())
        }
        JunctionType::Two => {
            let c = pos(p1, report.junction[0]);
            let left = along(p1, c, -1, p).ok_or(short.clone())?;
            let right = along(p1, c + 1, 1, p).ok_or(short.clone())?;
            let down = third_arm(g, rung.vertices(), phi2, &w.p2, p).ok_or(short)?;
            (TripodKind::LineTripod, [left, right, down].concat())
        }
        JunctionType::Three => {
            let rail = if rung.len() >= 2 {
                clean_type3_junction(g, rung, &w.p1)?.1
            } else {
                let first = pos(p1, report.junction[0]);
                let last = pos(p1, *report.junction.last().expect("nonempty junction"));
                PathSeq::new([&p1[..=first], &[phi1], &p1[last..]].concat())
            };
            let b = rail.vertices();
            let c = pos(b, phi1);
            let left = along(b, c.wrapping_sub(1), -1, p).ok_or(short.clone())?;
            let right = along(b, c + 1, 1, p).ok_or(short.clone())?;
            let down = third_arm(g, &rung.vertices()[1..], phi2, &w.p2, p).ok_or(short)?;
            (TripodKind::Tripod, [vec![phi1], left, right, down].concat())
        }
    };
    let pattern = match kind {
        TripodKind::Tripod => families::tripod(p),
        TripodKind::LineTripod => families::line_tripod(p),
    };
    Ok(TripodWitness { kind, junction: report.kind, subgraph: InducedSubgraphWitness::new(pattern, map) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{induced_subgraph_search, SearchBudget};

    /// Rails of `3k + 2` vertices and `k` rungs of `len` vertices attached at
    /// position `2 + 3i` of both rails; the middle rung's first end also sees
    /// the first-rail offsets in `extra` from its attachment.
    fn ladder(k: usize, len: usize, extra: &[usize]) -> (Graph, RopeLadder) {
        let m = 3 * k + 2;
        let mut edges = Vec::new();
        for i in 1..m {
            edges.push((i - 1, i));
            edges.push((m + i - 1, m + i));
        }
        let mut rungs = Vec::new();
        for i in 0..k {
            let base = 2 * m + i * len;
            let r: Vec<Vertex> = (base..base + len).collect();
            edges.extend(r.windows(2).map(|e| (e[0], e[1])));
            edges.push((r[0], 2 + 3 * i));
            edges.push((r[len - 1], m + 2 + 3 * i));
            if i == k / 2 {
                edges.extend(extra.iter().map(|&x| (r[0], 2 + 3 * i + x)));
            }
            rungs.push(PathSeq::new(r));
        }
        let g = Graph::from_edges(2 * m + k * len, edges).unwrap();
        (g, RopeLadder { p1: PathSeq::new((0..m).collect()), p2: PathSeq::new((m..2 * m).collect()), rungs })
    }

    fn check(g: &Graph, w: &TripodWitness) {
        assert!(w.subgraph.validate(g).is_empty());
        let (sub, _) = g.induced_subgraph(&w.subgraph.image());
        assert!(induced_subgraph_search(&w.subgraph.pattern, &sub, SearchBudget::unlimited()).is_found());
    }

    #[test]
    fn each_junction_type_gives_its_structure() {
        for p in 1..=3 {
            for len in [1, 2, 5] {
                let k = 2 * p + 1;
                let (g, w) = ladder(k, len, &[]);
                let t = extract_tripod_or_line(&g, &w, p).unwrap();
                assert_eq!((t.kind, t.junction), (TripodKind::Tripod, JunctionType::One));
                check(&g, &t);
                let (g, w) = ladder(k, len, &[1]);
                let t = extract_tripod_or_line(&g, &w, p).unwrap();
                assert_eq!((t.kind, t.junction), (TripodKind::LineTripod, JunctionType::Two));
                check(&g, &t);
                let (g, w) = ladder(k, len, &[2]);
                let t = extract_tripod_or_line(&g, &w, p).unwrap();
                assert_eq!((t.kind, t.junction), (TripodKind::Tripod, JunctionType::Three));
                check(&g, &t);
            }
        }
    }

    #[test]
    fn too_few_rungs_are_refused() {
        let (g, w) = ladder(3, 2, &[]);
        assert_eq!(extract_tripod_or_line(&g, &w, 2), Err(TripodError::TooFewRungs { found: 3, needed: 5 }));
    }
}
