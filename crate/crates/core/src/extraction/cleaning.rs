//! Cleaning a shuffled rope ladder: ordering one side's attachments along a
//! subpath, then both sides, then a monotone selection of rungs.

use thiserror::Error;

use super::bounds::rho_saturating;
use super::monotone::erdos_szekeres;
use crate::graph::{Graph, PathSeq, Vertex};
use crate::witnesses::{appear_in_order, RopeLadder, ShuffledRopeLadder, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CleanError {
    #[error("vertex {0} is out of range")]
    InvalidVertex(Vertex),
    #[error("the rail is not an induced path")]
    NotInducedPath,
    #[error("attaching vertex {0} lies on the rail")]
    MemberOnPath(Vertex),
    #[error("attaching vertices {0} and {1} are adjacent")]
    NotIndependent(Vertex, Vertex),
    #[error("attaching vertex {0} has no neighbour on the rail")]
    NotAttached(Vertex),
    #[error(
        "attaching vertex {member} has {count} rail neighbours, more than 2(d-1) = {cap}; the graph is not K_1,d-free"
    )]
    TooManyNeighbours { member: Vertex, count: usize, cap: usize },
    #[error(
        "rail vertex {vertex} has {count} attaching neighbours, more than d-1 = {cap}; the graph is not K_1,d-free"
    )]
    CrowdedRailVertex { vertex: Vertex, count: usize, cap: usize },
    #[error("d must be at least 2 and k at least 1")]
    Domain,
    #[error("invalid shuffled rope ladder: {0:?}")]
    InvalidWitness(Vec<Violation>),
}

/// Result of ordering one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SideOutcome {
    /// `b` (with `b[0] = a_1`) has attachments in order along `q`, a prefix
    /// of the input path that contains the first attachment of `a_1`.
    Ordered { b: Vec<Vertex>, q: PathSeq },
    /// The recursion ran out of candidates after ordering `reached` members.
    Failure { reached: usize },
}

/// Ordering over positions: `nbrs[i]` lists the sorted rail positions
/// adjacent to member `i`. Returns member indices in order and the last
/// position of the ordered prefix, or how many members were ordered before
/// the candidates ran out.
pub fn order_positions(nbrs: &[Vec<usize>], path_len: usize, k: usize, d: usize) -> Result<(Vec<usize>, usize), usize> {
    order_within(nbrs, path_len, k, d)
}

/// Sorted rail positions per member.
trait Attachments {
    fn count(&self) -> usize;
    fn of(&self, i: usize) -> &[usize];
}

impl Attachments for [Vec<usize>] {
    fn count(&self) -> usize {
        self.len()
    }

    fn of(&self, i: usize) -> &[usize] {
        &self[i]
    }
}

/// Member `i`'s positions are `items[offsets[i]..offsets[i + 1]]`.
struct Flat {
    offsets: Vec<usize>,
    items: Vec<usize>,
}

impl Attachments for Flat {
    fn count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn of(&self, i: usize) -> &[usize] {
        &self.items[self.offsets[i]..self.offsets[i + 1]]
    }
}

fn order_within<A: Attachments + ?Sized>(
    nbrs: &A,
    path_len: usize,
    k: usize,
    d: usize,
) -> Result<(Vec<usize>, usize), usize> {
    let members: Vec<usize> = (0..nbrs.count()).filter(|&i| !nbrs.of(i).is_empty()).collect();
    let mut scratch = Scratch { blocked: vec![false; path_len], marked: vec![false; path_len] };
    recurse(nbrs, &members, 0, path_len, k, d, &mut scratch)
}

struct Scratch {
    blocked: Vec<bool>,
    marked: Vec<bool>,
}

/// Positions of member `i` inside `[lo, hi)`.
fn clipped<A: Attachments + ?Sized>(nbrs: &A, i: usize, lo: usize, hi: usize) -> &[usize] {
    let list = nbrs.of(i);
    let start = list.partition_point(|&p| p < lo);
    let end = list.partition_point(|&p| p < hi);
    &list[start..end]
}

fn recurse<A: Attachments + ?Sized>(
    nbrs: &A,
    members: &[usize],
    lo: usize,
    hi: usize,
    k: usize,
    d: usize,
    scratch: &mut Scratch,
) -> Result<(Vec<usize>, usize), usize> {
    let mut live: Vec<(usize, usize)> =
        members.iter().filter_map(|&i| clipped(nbrs, i, lo, hi).first().map(|&p| (p, i))).collect();
    let Some(&(_, earliest)) = live.iter().min() else {
        return Err(0);
    };
    if k == 1 {
        return Ok((vec![earliest], hi - 1));
    }
    live.sort_unstable();
    let a1 = live[0].1;
    // Thin to pairwise disjoint neighbourhoods, keeping a_1.
    let mut thinned = Vec::with_capacity(live.len());
    for &(first, i) in &live {
        let ps = clipped(nbrs, i, lo, hi);
        if ps.iter().all(|&p| !scratch.blocked[p]) {
            for &p in ps {
                scratch.blocked[p] = true;
            }
            thinned.push((first, i));
        }
    }
    for &(_, i) in &thinned {
        for &p in clipped(nbrs, i, lo, hi) {
            scratch.blocked[p] = false;
            scratch.marked[p] = true;
        }
    }
    let v: Vec<usize> = clipped(nbrs, a1, lo, hi).to_vec();
    let deg = v.len();
    // gap(v_j, v_{j+1}) over the open window, counting attachments of A'.
    let gap = |j: usize, marked: &[bool]| -> u128 { (v[j] + 1..v[j + 1]).filter(|&p| marked[p]).count() as u128 };
    let rest = rho_saturating(k - 1, d);
    let mut case_one = None;
    for j in 0..deg.saturating_sub(1).min(2 * d - 3) {
        let factor = (2 * d as u128 - 2).saturating_mul((2 * d as u128 - 1).saturating_pow(j as u32));
        if gap(j, &scratch.marked) >= factor.saturating_mul(rest) {
            case_one = Some(j);
            break;
        }
    }
    for &(_, i) in &thinned {
        for &p in clipped(nbrs, i, lo, hi) {
            scratch.marked[p] = false;
        }
    }
    let others = &thinned[1..];
    // Members with first attachment in the open window (v_j, v_{j+1}), on the
    // path before v_{j+1}.
    let window = |j: usize| -> (Vec<usize>, usize, usize) {
        let sel = others.iter().filter(|&&(f, _)| f > v[j] && f < v[j + 1]).map(|&(_, i)| i).collect();
        (sel, lo, v[j + 1])
    };
    // Members with every attachment after v_deg, on the path after v_deg.
    let beyond = || -> (Vec<usize>, usize, usize) {
        let sel = others.iter().filter(|&&(f, _)| f > v[deg - 1]).map(|&(_, i)| i).collect();
        (sel, v[deg - 1] + 1, hi)
    };
    let mut attempt = match case_one {
        Some(j) => window(j),
        None => beyond(),
    };
    if attempt.0.is_empty() {
        let mut options = vec![beyond()];
        options.extend((0..deg - 1).map(window));
        if let Some(best) = options.into_iter().max_by_key(|o| o.0.len()) {
            attempt = best;
        }
    }
    let (next, nlo, nhi) = attempt;
    if next.is_empty() {
        return Err(1);
    }
    match recurse(nbrs, &next, nlo, nhi, k - 1, d, scratch) {
        Ok((mut order, end)) => {
            order.insert(0, a1);
            Ok((order, end))
        }
        Err(r) => Err(r + 1),
    }
}

/// Rail positions of each member's neighbours, after checking the local
/// consequences of `K_{1,d}`-freeness.
fn side_positions(g: &Graph, p: &PathSeq, a: &[Vertex], d: usize) -> Result<Flat, CleanError> {
    for &v in p.vertices().iter().chain(a) {
        if v >= g.n() {
            return Err(CleanError::InvalidVertex(v));
        }
    }
    if p.is_empty() {
        return Err(CleanError::NotInducedPath);
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in p.vertices().iter().enumerate() {
        if pos[v] != usize::MAX {
            return Err(CleanError::NotInducedPath);
        }
        pos[v] = i;
    }
    // Induced: the rail neighbours of p_i are exactly p_{i-1} and p_{i+1}.
    for (i, &v) in p.vertices().iter().enumerate() {
        let on_rail = g.neighbors(v).iter().filter(|&&w| pos[w] != usize::MAX);
        let expected = usize::from(i > 0) + usize::from(i + 1 < p.len());
        let mut seen = 0;
        for &w in on_rail {
            if pos[w].abs_diff(i) != 1 {
                return Err(CleanError::NotInducedPath);
            }
            seen += 1;
        }
        if seen != expected {
            return Err(CleanError::NotInducedPath);
        }
    }
    let mut member = vec![false; g.n()];
    for &x in a {
        if pos[x] != usize::MAX {
            return Err(CleanError::MemberOnPath(x));
        }
        member[x] = true;
    }
    let mut load = vec![0usize; p.len()];
    let mut out = Flat { offsets: Vec::with_capacity(a.len() + 1), items: Vec::with_capacity(2 * a.len()) };
    out.offsets.push(0);
    for &x in a {
        let start = out.items.len();
        for &w in g.neighbors(x) {
            if member[w] {
                return Err(CleanError::NotIndependent(x.min(w), x.max(w)));
            }
            if pos[w] != usize::MAX {
                out.items.push(pos[w]);
            }
        }
        let ps = &mut out.items[start..];
        if ps.is_empty() {
            return Err(CleanError::NotAttached(x));
        }
        if ps.len() > 2 * (d - 1) {
            return Err(CleanError::TooManyNeighbours { member: x, count: ps.len(), cap: 2 * (d - 1) });
        }
        for &q in ps.iter() {
            load[q] += 1;
            if load[q] > d - 1 {
                return Err(CleanError::CrowdedRailVertex { vertex: p.vertices()[q], count: load[q], cap: d - 1 });
            }
        }
        ps.sort_unstable();
        out.offsets.push(out.items.len());
    }
    Ok(out)
}

/// Orders `k` members of `a` along a prefix `q` of `p`: the sets
/// `N(b_i) ∩ V(q)` are nonempty and appear in order along `q`. The member
/// with the earliest attachment is always `b_1`. Success is guaranteed when
/// `|a| ≥ ρ(k, d)`.
pub fn clean_one_side(g: &Graph, p: &PathSeq, a: &[Vertex], k: usize, d: usize) -> Result<SideOutcome, CleanError> {
    if k == 0 || d < 2 {
        return Err(CleanError::Domain);
    }
    let nbrs = side_positions(g, p, a, d)?;
    Ok(match order_within(&nbrs, p.len(), k, d) {
        Ok((order, end)) => SideOutcome::Ordered { b: order.into_iter().map(|i| a[i]).collect(), q: p.subpath(0, end) },
        Err(reached) => SideOutcome::Failure { reached },
    })
}

/// Whether `N(b_i) ∩ V(q)` appear in order along `q`.
pub fn side_is_ordered(g: &Graph, q: &PathSeq, b: &[Vertex]) -> bool {
    let on_q = q.vertex_set().mask(g.n());
    let sets: Vec<Vec<Vertex>> =
        b.iter().map(|&x| g.neighbors(x).iter().copied().filter(|&w| on_q[w]).collect()).collect();
    appear_in_order(q, &sets)
}

/// Which step of the cleaning ran short.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CleanStage {
    FirstRail,
    SecondRail,
    Monotone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CleanOutcome {
    RopeLadder(RopeLadder),
    /// Fewer than `k` rungs survived `stage`; `available` survived.
    Failure {
        stage: CleanStage,
        available: usize,
    },
}

/// The largest target in `1..=start` that `order_positions` reaches,
/// stepping down to the reported progress after each failure.
fn largest_order(nbrs: &Flat, path_len: usize, start: usize, d: usize) -> (Vec<usize>, usize) {
    let mut target = start.max(1);
    loop {
        match order_within(nbrs, path_len, target, d) {
            Ok(found) => return found,
            Err(reached) => target = reached.clamp(1, target - 1),
        }
    }
}

/// A `k`-rope ladder inside the shuffled rope ladder `w`: order the first
/// rail's attachments, then the second's among the survivors, then keep a
/// monotone run of `k` rungs. A decreasing run reverses the second rail.
pub fn clean_shuffled_rope_ladder(
    g: &Graph,
    w: &ShuffledRopeLadder,
    k: usize,
    d: usize,
) -> Result<CleanOutcome, CleanError> {
    if k == 0 || d < 2 {
        return Err(CleanError::Domain);
    }
    let violations = w.validate(g);
    if !violations.is_empty() {
        return Err(CleanError::InvalidWitness(violations));
    }
    let firsts: Vec<Vertex> = w.rungs.iter().map(|r| r.first()).collect();
    let nbrs1 = side_positions(g, &w.p1, &firsts, d)?;
    let (order1, end1) = largest_order(&nbrs1, w.p1.len(), w.rungs.len(), d);
    if order1.len() < k {
        return Ok(CleanOutcome::Failure { stage: CleanStage::FirstRail, available: order1.len() });
    }
    let q1 = w.p1.subpath(0, end1);
    let seconds: Vec<Vertex> = order1.iter().map(|&i| w.rungs[i].last()).collect();
    let nbrs2 = side_positions(g, &w.p2, &seconds, d)?;
    let (order2, end2) = largest_order(&nbrs2, w.p2.len(), seconds.len(), d);
    if order2.len() < k {
        return Ok(CleanOutcome::Failure { stage: CleanStage::SecondRail, available: order2.len() });
    }
    // order2 lists ranks along the first rail in second-rail order.
    let Some(run) = erdos_szekeres(&order2, k, k) else {
        return Ok(CleanOutcome::Failure { stage: CleanStage::Monotone, available: order2.len() });
    };
    let mut ranks: Vec<usize> = run.indices.iter().map(|&i| order2[i]).collect();
    ranks.sort_unstable();
    let rungs = ranks.iter().map(|&r| w.rungs[order1[r]].clone()).collect();
    let q2 = w.p2.subpath(0, end2);
    let p2 = if run.increasing { q2 } else { q2.reversed() };
    Ok(CleanOutcome::RopeLadder(RopeLadder { p1: q1, p2, rungs }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_member_target() {
        let nbrs = vec![vec![4], vec![1, 2]];
        assert_eq!(order_positions(&nbrs, 6, 1, 3), Ok((vec![1], 5)));
    }

    #[test]
    fn preordered_pair() {
        // P = p_0..p_9, a adjacent to p_1, b adjacent to p_7.
        let mut edges: Vec<(usize, usize)> = (1..10).map(|i| (i - 1, i)).collect();
        edges.extend([(10, 1), (11, 7)]);
        let g = Graph::from_edges(12, edges).unwrap();
        let p = PathSeq::new((0..10).collect());
        match clean_one_side(&g, &p, &[10, 11], 2, 3).unwrap() {
            SideOutcome::Ordered { b, q } => {
                assert_eq!(b, vec![10, 11]);
                assert!(side_is_ordered(&g, &q, &b));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn interleaved_attachments_are_separated() {
        // a: {p_0, p_6}, b: {p_2}, c: {p_8}; with d = 2 each member has at
        // most two neighbours and each rail vertex at most one member.
        let mut edges: Vec<(usize, usize)> = (1..10).map(|i| (i - 1, i)).collect();
        edges.extend([(10, 0), (10, 6), (11, 2), (12, 8)]);
        let g = Graph::from_edges(13, edges).unwrap();
        let p = PathSeq::new((0..10).collect());
        match clean_one_side(&g, &p, &[10, 11, 12], 2, 2).unwrap() {
            SideOutcome::Ordered { b, q } => {
                assert_eq!(b[0], 10);
                assert!(side_is_ordered(&g, &q, &b));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn precondition_errors() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 0), (3, 2), (4, 3)]).unwrap();
        let p = PathSeq::new(vec![0, 1, 2]);
        assert_eq!(clean_one_side(&g, &p, &[3, 4], 1, 3), Err(CleanError::NotIndependent(3, 4)));
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        assert!(matches!(clean_one_side(&g, &p, &[3], 1, 2), Err(CleanError::TooManyNeighbours { .. })));
    }
}
