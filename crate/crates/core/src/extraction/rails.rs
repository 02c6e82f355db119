//! Rails from a bramble: a dominating path `Q` is cut where the α-order of
//! the bramble members seen from its prefix first reaches the target, and
//! the far part of `Q` becomes the second rail, optionally closed into an
//! induced cycle through two bramble members.

use thiserror::Error;

use crate::bits::Bits;
use crate::graph::{closed_neighborhood, shortest_path_through, CycleSeq, Graph, PathSeq, Vertex, VertexSet};
use crate::oracles::{bramble_alpha_order, Exhausted, SearchBudget};
use crate::witnesses::{StrongBramble, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RailError {
    #[error("invalid bramble: {0:?}")]
    InvalidBramble(Vec<Violation>),
    #[error("path is not an induced path of the graph")]
    NotInducedPath,
    #[error("closed neighbourhood of the path misses a bramble member")]
    NotDominating,
    #[error("α-order jumps by more than d-1 at prefix {index}; the graph is not K_1,d-free")]
    StaircaseBroken { index: usize },
    #[error("search budget exhausted")]
    Exhausted,
    #[error("no induced path dominates the bramble")]
    NoDominatingPath,
}

impl From<Exhausted> for RailError {
    fn from(_: Exhausted) -> Self {
        RailError::Exhausted
    }
}

/// Why a split was not possible on this instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RailShortfall {
    /// The α-order never reached the target along the path.
    ThresholdNotReached,
    /// The cut lies too close to the end of the path.
    PathTooShort,
    /// Every bramble member is seen from the prefix.
    FarSideEmpty,
    /// The far subpath is a single vertex, so no cycle closes through it.
    FarSideTooSmall,
}

/// A split, or the reason there is none; both carry the staircase
/// `a_1, a_2, ...` of α-orders computed along the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RailOutcome<T> {
    Split { rails: T, staircase: Vec<usize> },
    Failure { shortfall: RailShortfall, staircase: Vec<usize> },
}

impl<T> RailOutcome<T> {
    pub fn rails(self) -> Option<T> {
        match self {
            RailOutcome::Split { rails, .. } => Some(rails),
            RailOutcome::Failure { .. } => None,
        }
    }

    pub fn staircase(&self) -> &[usize] {
        match self {
            RailOutcome::Split { staircase, .. } | RailOutcome::Failure { staircase, .. } => staircase,
        }
    }
}

/// For each vertex, the bramble members met by its closed neighbourhood.
fn member_hits(g: &Graph, b: &StrongBramble) -> Vec<Bits> {
    let mut hits = vec![Bits::new(b.len()); g.n()];
    for (i, set) in b.sets().iter().enumerate() {
        for v in set.iter() {
            hits[v].insert(i);
            for &w in g.neighbors(v) {
                hits[w].insert(i);
            }
        }
    }
    hits
}

/// An induced path whose closed neighbourhood meets every bramble member.
///
/// Depth-first search over induced paths grown from one end, trying every
/// start vertex and preferring extensions that reach the most unmet members.
/// With an unlimited budget the search is exhaustive.
pub fn dominating_path(g: &Graph, b: &StrongBramble, budget: SearchBudget) -> Result<PathSeq, RailError> {
    let violations = b.validate(g);
    if !violations.is_empty() {
        return Err(RailError::InvalidBramble(violations));
    }
    if b.is_empty() {
        return if g.n() > 0 { Ok(PathSeq::single(0)) } else { Err(RailError::NoDominatingPath) };
    }
    let hits = member_hits(g, b);
    let mut starts: Vec<Vertex> = g.vertices().collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(hits[v].count()), v));
    let mut search = PathSearch { g, hits: &hits, total: b.len(), meter: budget.meter(), on_path: vec![0; g.n()] };
    for s in starts {
        let mut path = vec![s];
        if search.grow(&mut path, hits[s].clone())? {
            return Ok(PathSeq::new(path));
        }
    }
    Err(RailError::NoDominatingPath)
}

/// Greedily appends vertices at the far end of the induced path `q` while
/// it stays induced. Domination of a bramble is preserved, and the longer
/// tail leaves room for the cut.
pub fn extend_induced_path(g: &Graph, q: &PathSeq) -> PathSeq {
    let mut path = q.vertices().to_vec();
    let mut near = vec![0usize; g.n()];
    for &v in &path {
        near[v] += 1;
        for &w in g.neighbors(v) {
            near[w] += 1;
        }
    }
    while let Some(&last) = path.last() {
        let Some(w) = g.neighbors(last).iter().copied().find(|&w| near[w] == 1 && !path.contains(&w)) else {
            break;
        };
        path.push(w);
        near[w] += 1;
        for &x in g.neighbors(w) {
            near[x] += 1;
        }
    }
    PathSeq::new(path)
}

struct PathSearch<'a> {
    g: &'a Graph,
    hits: &'a [Bits],
    total: usize,
    meter: crate::oracles::Meter,
    /// Number of path vertices in the closed neighbourhood of each vertex.
    on_path: Vec<usize>,
}

impl PathSearch<'_> {
    fn touch(&mut self, v: Vertex, delta: isize) {
        let apply = |c: &mut usize| *c = c.checked_add_signed(delta).expect("balanced updates");
        apply(&mut self.on_path[v]);
        for &w in self.g.neighbors(v) {
            apply(&mut self.on_path[w]);
        }
    }

    fn grow(&mut self, path: &mut Vec<Vertex>, covered: Bits) -> Result<bool, Exhausted> {
        self.meter.tick()?;
        if covered.count() == self.total {
            return Ok(true);
        }
        let last = *path.last().expect("path is nonempty");
        self.touch(last, 1);
        // An extension must see exactly one path vertex, namely `last`.
        let mut options: Vec<(usize, Vertex)> = self
            .g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&w| self.on_path[w] == 1 && !path.contains(&w))
            .map(|w| (self.hits[w].and_not(&covered).count(), w))
            .collect();
        options.sort_by_key(|&(gain, w)| (std::cmp::Reverse(gain), w));
        let mut result = Ok(false);
        for (_, w) in options {
            let mut next = covered.clone();
            next.union_with(&self.hits[w]);
            path.push(w);
            match self.grow(path, next) {
                Ok(false) => {
                    path.pop();
                }
                other => {
                    result = other;
                    break;
                }
            }
        }
        if !matches!(result, Ok(true)) {
            self.touch(last, -1);
        }
        result
    }
}

/// Checks that `q` is an induced path dominating `b`.
fn check_dominating(g: &Graph, b: &StrongBramble, q: &PathSeq) -> Result<(), RailError> {
    let violations = b.validate(g);
    if !violations.is_empty() {
        return Err(RailError::InvalidBramble(violations));
    }
    if q.is_empty() || q.vertices().iter().any(|&v| v >= g.n()) || !q.is_path(g) || !q.is_induced(g) {
        return Err(RailError::NotInducedPath);
    }
    let n_q = closed_neighborhood(g, &q.vertex_set()).expect("checked ids");
    if !b.is_hit_by(&n_q) {
        return Err(RailError::NotDominating);
    }
    Ok(())
}

/// The first half of every split: `P = v_1..v_j`, the far subpath
/// `R = v_r0..v_r1` (0-based, inclusive) and the far members `B'`.
struct Cut {
    j: usize,
    r: (usize, usize),
    far: Vec<usize>,
}

/// Walks the staircase `a_i` until it reaches `target`, then cuts.
fn cut(
    g: &Graph,
    b: &StrongBramble,
    q: &PathSeq,
    target: usize,
    d: usize,
    budget: SearchBudget,
) -> Result<(Result<Cut, RailShortfall>, Vec<usize>), RailError> {
    check_dominating(g, b, q)?;
    let hits = member_hits(g, b);
    let qv = q.vertices();
    let mut seen = Bits::new(b.len());
    let mut staircase: Vec<usize> = Vec::new();
    let mut found = None;
    for (i, &v) in qv.iter().enumerate() {
        seen.union_with(&hits[v]);
        let sub = StrongBramble::new(seen.iter().map(|s| b.sets()[s].clone()).collect());
        let a = bramble_alpha_order(g, &sub, budget)?;
        let step_cap = if i == 0 { 0 } else { staircase[i - 1] };
        if a < step_cap || a > step_cap + d.saturating_sub(1) {
            return Err(RailError::StaircaseBroken { index: i + 1 });
        }
        staircase.push(a);
        if a >= target {
            found = Some(i + 1);
            break;
        }
    }
    let Some(j) = found else {
        return Ok((Err(RailShortfall::ThresholdNotReached), staircase));
    };
    if j + 2 > qv.len() {
        return Ok((Err(RailShortfall::PathTooShort), staircase));
    }
    let mut near = seen;
    near.union_with(&hits[qv[j]]);
    let far: Vec<usize> = (0..b.len()).filter(|&s| !near.contains(s)).collect();
    if far.is_empty() {
        return Ok((Err(RailShortfall::FarSideEmpty), staircase));
    }
    let r = shortest_window(&hits, qv, &far, b.len());
    Ok((Ok(Cut { j, r, far }), staircase))
}

/// Shortest window of `qv` whose closed neighbourhood meets every member
/// listed in `far`; leftmost among the shortest.
fn shortest_window(hits: &[Bits], qv: &[Vertex], far: &[usize], members: usize) -> (usize, usize) {
    let mut wanted = Bits::new(members);
    for &s in far {
        wanted.insert(s);
    }
    let mut count = vec![0usize; members];
    let mut covered = 0;
    let mut best: Option<(usize, usize)> = None;
    let mut lo = 0;
    for hi in 0..qv.len() {
        for s in hits[qv[hi]].and(&wanted).iter() {
            if count[s] == 0 {
                covered += 1;
            }
            count[s] += 1;
        }
        while covered == far.len() {
            if best.is_none_or(|(a, b)| hi - lo < b - a) {
                best = Some((lo, hi));
            }
            for s in hits[qv[lo]].and(&wanted).iter() {
                count[s] -= 1;
                if count[s] == 0 {
                    covered -= 1;
                }
            }
            lo += 1;
        }
    }
    best.expect("Q dominates the bramble")
}

/// An induced cycle `R + R'` where `R'` runs through the first far member
/// missed by `N[R - u]` and the first missed by `N[R - v]`.
fn close_cycle(g: &Graph, b: &StrongBramble, r: &PathSeq, far: &[usize]) -> Option<CycleSeq> {
    let n = g.n();
    let first_missed = |rest: &[Vertex]| {
        let mask = closed_neighborhood(g, &VertexSet::from(rest.to_vec())).expect("valid ids").mask(n);
        far.iter().copied().find(|&s| b.sets()[s].iter().all(|x| !mask[x]))
    };
    let rv = r.vertices();
    let bu = first_missed(&rv[1..])?;
    let bv = first_missed(&rv[..rv.len() - 1])?;
    let on_r = r.vertex_set();
    let z = b.sets()[bu].union(&b.sets()[bv]).difference(&on_r);
    let (u, v) = (r.first(), r.last());
    let from = VertexSet::from(g.neighbors(u).to_vec()).intersection(&z);
    let to = VertexSet::from(g.neighbors(v).to_vec()).intersection(&z);
    let back = shortest_path_through(g, &from, &to, &z)?;
    let mut cycle = rv.to_vec();
    cycle.extend(back.vertices().iter().rev());
    let c = CycleSeq::new(cycle);
    c.is_induced(g).then_some(c)
}

fn nonadjacent(g: &Graph, x: &[Vertex], y: &[Vertex]) -> bool {
    crate::graph::are_nonadjacent(g, &VertexSet::from(x.to_vec()), &VertexSet::from(y.to_vec())).expect("valid ids")
}

fn split_cycle(
    g: &Graph,
    b: &StrongBramble,
    q: &PathSeq,
    target: usize,
    d: usize,
    budget: SearchBudget,
) -> Result<RailOutcome<(PathSeq, CycleSeq)>, RailError> {
    let (cut, staircase) = cut(g, b, q, target, d, budget)?;
    let cut = match cut {
        Ok(c) => c,
        Err(shortfall) => return Ok(RailOutcome::Failure { shortfall, staircase }),
    };
    let p = q.subpath(0, cut.j - 1);
    let r = q.subpath(cut.r.0, cut.r.1);
    if r.len() < 2 {
        return Ok(RailOutcome::Failure { shortfall: RailShortfall::FarSideTooSmall, staircase });
    }
    let c = close_cycle(g, b, &r, &cut.far).expect("far members close an induced cycle around R");
    assert!(nonadjacent(g, p.vertices(), c.vertices()), "prefix and cycle are non-adjacent");
    Ok(RailOutcome::Split { rails: (p, c), staircase })
}

/// An induced path `P` and induced cycle `C`, non-adjacent, such that every
/// separator between `N[P]` and `N[C]` has α at least `eta` whenever the
/// bramble's α-order is at least `2 eta + 2d - 3`.
pub fn split_rails_path_cycle(
    g: &Graph,
    b: &StrongBramble,
    q: &PathSeq,
    eta: usize,
    d: usize,
    budget: SearchBudget,
) -> Result<RailOutcome<(PathSeq, CycleSeq)>, RailError> {
    split_cycle(g, b, q, eta, d, budget)
}

/// Two non-adjacent induced paths: the prefix `P` and the far subpath `R`.
pub fn split_rails_two_paths(
    g: &Graph,
    b: &StrongBramble,
    q: &PathSeq,
    eta: usize,
    d: usize,
    budget: SearchBudget,
) -> Result<RailOutcome<(PathSeq, PathSeq)>, RailError> {
    let (cut, staircase) = cut(g, b, q, eta, d, budget)?;
    Ok(match cut {
        Ok(c) => {
            let p = q.subpath(0, c.j - 1);
            let r = q.subpath(c.r.0, c.r.1);
            assert!(nonadjacent(g, p.vertices(), r.vertices()), "prefix and far subpath are non-adjacent");
            RailOutcome::Split { rails: (p, r), staircase }
        }
        Err(shortfall) => RailOutcome::Failure { shortfall, staircase },
    })
}

/// α-order at which the cut is placed so that separators between `P` and
/// `C` themselves (not their neighbourhoods) have α at least `eta`.
pub fn strict_target(eta: usize, d: usize) -> usize {
    eta + (d - 1) * (2 * eta + 2)
}

/// As [`split_rails_path_cycle`], cutting at [`strict_target`].
pub fn split_rails_strict(
    g: &Graph,
    b: &StrongBramble,
    q: &PathSeq,
    eta: usize,
    d: usize,
    budget: SearchBudget,
) -> Result<RailOutcome<(PathSeq, CycleSeq)>, RailError> {
    let target = if eta == 0 { 0 } else { strict_target(eta, d) };
    split_cycle(g, b, q, target, d, budget)
}
