//! Long thetas and prisms in cycle rope ladders. Four rungs with far apart
//! attachments are selected; two of the three paths then run along the rail
//! cycle and the third, in all but one case, through the rail path.

use thiserror::Error;

use crate::graph::{shortest_path_through, CycleSeq, Graph, PathSeq, Vertex, VertexSet};
use crate::witnesses::{classify_junction, HRopeLadder, JunctionError, JunctionType, Prism, Theta, Violation};

/// Rung count from which the greedy selection of four spread rungs cannot
/// run dry in a `K_{1,d}`-free cycle rope ladder.
pub fn spread_threshold(k: usize, d: usize) -> usize {
    16 * (d - 1) * (d - 1) * (2 * k - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpreadError {
    #[error("cycle rope ladder is invalid: {0:?}")]
    InvalidLadder(Vec<Violation>),
    #[error("the rail subgraph is not recorded as a cycle")]
    NotCycle,
    #[error("k must be at least 1 and d at least 2")]
    Domain,
    #[error("only {found} of 4 spread rungs among {rungs} (threshold {threshold})")]
    Starved { found: usize, rungs: usize, threshold: usize },
}

/// Attachment positions of every rung: on the cycle (`N(φ^i_1) ∩ C`) and on
/// the path (`N(φ^i_2) ∩ P`), each sorted.
struct Attachments {
    cycle: Vec<Vec<usize>>,
    path: Vec<Vec<usize>>,
}

fn attachments(g: &Graph, c: &CycleSeq, p: &PathSeq, rungs: &[PathSeq]) -> Attachments {
    let seen =
        |v: Vertex, rail: &[Vertex]| -> Vec<usize> { (0..rail.len()).filter(|&i| g.has_edge(v, rail[i])).collect() };
    Attachments {
        cycle: rungs.iter().map(|r| seen(r.first(), c.vertices())).collect(),
        path: rungs.iter().map(|r| seen(r.last(), p.vertices())).collect(),
    }
}

fn checked_cycle(g: &Graph, w: &HRopeLadder) -> Result<CycleSeq, SpreadError> {
    let violations = w.validate(g);
    if !violations.is_empty() {
        return Err(SpreadError::InvalidLadder(violations));
    }
    w.cycle.clone().ok_or(SpreadError::NotCycle)
}

/// Four rungs, chosen greedily in index order, whose cycle attachments are
/// pairwise at cycle distance at least `k` and whose path attachments are
/// pairwise at path distance at least `k`. Below [`spread_threshold`] the
/// greedy choice is still tried and may run dry.
pub fn select_spread_rungs(g: &Graph, w: &HRopeLadder, k: usize, d: usize) -> Result<[usize; 4], SpreadError> {
    if k == 0 || d < 2 {
        return Err(SpreadError::Domain);
    }
    let c = checked_cycle(g, w)?;
    let att = attachments(g, &c, &w.p, &w.rungs);
    let far = |a: usize, b: usize| {
        let on_cycle = att.cycle[a].iter().all(|&x| att.cycle[b].iter().all(|&y| c.index_distance(x, y) >= k));
        let on_path = att.path[a].iter().all(|&x| att.path[b].iter().all(|&y| x.abs_diff(y) >= k));
        on_cycle && on_path
    };
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..w.k() {
        if chosen.len() == 4 {
            break;
        }
        if chosen.iter().all(|&a| far(a, i)) {
            chosen.push(i);
        }
    }
    chosen.try_into().map_err(|found: Vec<usize>| SpreadError::Starved {
        found: found.len(),
        rungs: w.k(),
        threshold: spread_threshold(k, d),
    })
}

/// A maximal arc of the rail cycle whose ends see the first end of `rung`
/// and which holds no attachment of the other selected rungs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JunctionArea {
    pub rung: usize,
    /// Cycle positions of the arc's ends, walking forward from `start`.
    pub start: usize,
    pub end: usize,
    /// The rung's attachments on the arc, in cyclic order.
    pub attachments: Vec<usize>,
}

/// Junction areas of the `selected` rungs in cyclic order. Their cycle
/// attachment sets must be pairwise disjoint.
pub fn junction_areas(g: &Graph, w: &HRopeLadder, selected: &[usize]) -> Vec<JunctionArea> {
    let Some(c) = &w.cycle else { return Vec::new() };
    let att = attachments(g, c, &w.p, &w.rungs);
    areas(&att.cycle, selected)
}

fn areas(cycle_att: &[Vec<usize>], selected: &[usize]) -> Vec<JunctionArea> {
    let mut marks: Vec<(usize, usize)> =
        selected.iter().flat_map(|&r| cycle_att[r].iter().map(move |&x| (x, r))).collect();
    marks.sort_unstable();
    if marks.is_empty() {
        return Vec::new();
    }
    let n = marks.len();
    let start = (0..n).find(|&t| marks[t].1 != marks[(t + n - 1) % n].1).unwrap_or(0);
    let mut out: Vec<JunctionArea> = Vec::new();
    for t in 0..n {
        let (x, r) = marks[(start + t) % n];
        match out.last_mut() {
            Some(a) if a.rung == r => {
                a.end = x;
                a.attachments.push(x);
            }
            _ => out.push(JunctionArea { rung: r, start: x, end: x, attachments: vec![x] }),
        }
    }
    out
}

/// Which case of the construction produced the structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LongCase {
    /// Single junction areas of the first type: theta on the two junction vertices.
    SingleOne,
    /// Single junction areas of the second type: prism on the two junction triangles.
    SingleTwo,
    /// Single junction areas of the third type: theta on the two rung ends.
    SingleThree,
    /// A rung with several areas, another meeting a gap in one vertex.
    SplitOne,
    /// A rung with several areas, another meeting a gap in a third-type junction.
    SplitThree,
    /// Two rungs with several areas alternating with adjacent pairs: prism
    /// on the cycle alone.
    Alternating,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LongShape {
    Theta(Theta),
    Prism(Prism),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongStructure {
    pub case: LongCase,
    /// The two rungs the structure is built from.
    pub rungs: [usize; 2],
    pub shape: LongShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LongError {
    #[error(transparent)]
    Spread(#[from] SpreadError),
    #[error(transparent)]
    Junction(#[from] JunctionError),
    #[error("no case of the construction applies")]
    NoCase,
    #[error("constructed structure fails validation: {0:?}")]
    Invalid(Vec<Violation>),
}

struct Builder<'a> {
    g: &'a Graph,
    c: &'a CycleSeq,
    w: &'a HRopeLadder,
    k: usize,
}

impl Builder<'_> {
    fn at(&self, pos: usize) -> Vertex {
        self.c.vertices()[pos]
    }

    fn phi(&self, r: usize) -> Vertex {
        self.w.rungs[r].first()
    }

    /// Cycle vertices from `a` forward to `b`.
    fn fwd(&self, a: usize, b: usize) -> Vec<Vertex> {
        self.c.arc(a, b)
    }

    /// Cycle vertices from `a` backward to `b`.
    fn back(&self, a: usize, b: usize) -> Vec<Vertex> {
        let mut v = self.c.arc(b, a);
        v.reverse();
        v
    }

    /// `φ^i_1 Φ^i φ^i_2 P̃ φ^j_2 Φ^j φ^j_1` with `P̃` a shortest path through
    /// the rail path.
    fn through(&self, i: usize, j: usize) -> Vec<Vertex> {
        let (ri, rj) = (&self.w.rungs[i], &self.w.rungs[j]);
        let ends = VertexSet::from(vec![ri.last(), rj.last()]);
        let inner = self.w.p.vertex_set().union(&ends);
        let mid =
            shortest_path_through(self.g, &VertexSet::singleton(ri.last()), &VertexSet::singleton(rj.last()), &inner)
                .expect("rungs are joined through the rail path");
        let mut out = ri.vertices()[..ri.len() - 1].to_vec();
        out.extend_from_slice(mid.vertices());
        out.extend(rj.vertices()[..rj.len() - 1].iter().rev());
        out
    }

    fn theta(&self, paths: [Vec<Vertex>; 3]) -> LongShape {
        let v = paths[0][0];
        let w = *paths[0].last().expect("nonempty");
        LongShape::Theta(Theta { v, w, paths: paths.map(PathSeq::new), min_length: self.k })
    }

    fn prism(&self, paths: [Vec<Vertex>; 3]) -> LongShape {
        let triangles = [
            [paths[0][0], paths[1][0], paths[2][0]],
            [
                *paths[0].last().expect("nonempty"),
                *paths[1].last().expect("nonempty"),
                *paths[2].last().expect("nonempty"),
            ],
        ];
        LongShape::Prism(Prism { triangles, paths: paths.map(PathSeq::new), min_length: self.k, generalized: false })
    }

    fn with(first: Vertex, mut rest: Vec<Vertex>) -> Vec<Vertex> {
        rest.insert(0, first);
        rest
    }

    fn then(mut path: Vec<Vertex>, last: Vertex) -> Vec<Vertex> {
        path.push(last);
        path
    }

    /// Single-vertex areas at `a` (rung `i`) and `b` (rung `j`).
    fn single_one(&self, i: usize, a: usize, j: usize, b: usize) -> LongShape {
        let (di, dj) = (self.at(a), self.at(b));
        self.theta([self.fwd(a, b), self.back(a, b), Self::then(Self::with(di, self.through(i, j)), dj)])
    }

    /// Adjacent pairs starting at `a` (rung `i`) and `b` (rung `j`).
    fn single_two(&self, i: usize, a: usize, j: usize, b: usize) -> LongShape {
        let n = self.c.len();
        let (a2, b2) = ((a + 1) % n, (b + 1) % n);
        self.prism([self.back(a, b2), self.fwd(a2, b), self.through(i, j)])
    }

    /// Areas `a.0..=a.1` (rung `i`) and `b.0..=b.1` (rung `j`) in this cyclic order.
    fn single_three(&self, i: usize, a: (usize, usize), j: usize, b: (usize, usize)) -> LongShape {
        let (pi, pj) = (self.phi(i), self.phi(j));
        self.theta([
            Self::then(Self::with(pi, self.fwd(a.1, b.0)), pj),
            Self::then(Self::with(pi, self.back(a.0, b.1)), pj),
            self.through(i, j),
        ])
    }

    /// Rung `i`'s gap runs from `end` (last vertex of one area) to `next`
    /// (first vertex of the following one); rung `j` meets it only at `x`.
    fn split_one(&self, i: usize, gap: (usize, usize), j: usize, x: usize) -> LongShape {
        let pi = self.phi(i);
        self.theta([
            Self::with(pi, self.fwd(gap.0, x)),
            Self::with(pi, self.back(gap.1, x)),
            Self::then(self.through(i, j), self.at(x)),
        ])
    }

    /// As [`Self::split_one`], with rung `j` meeting the gap first at `x.0`
    /// and last at `x.1`.
    fn split_three(&self, i: usize, gap: (usize, usize), j: usize, x: (usize, usize)) -> LongShape {
        let (pi, pj) = (self.phi(i), self.phi(j));
        self.theta([
            Self::then(Self::with(pi, self.fwd(gap.0, x.0)), pj),
            Self::then(Self::with(pi, self.back(gap.1, x.1)), pj),
            self.through(i, j),
        ])
    }

    /// Cycle positions `q` of rungs `x, y, y, x, x, y` in cyclic order, the
    /// `y` pair and the `x` pair adjacent.
    fn alternating(&self, x: usize, y: usize, q: [usize; 6]) -> LongShape {
        let (px, py) = (self.phi(x), self.phi(y));
        self.prism([Self::then(self.back(q[1], q[0]), px), self.fwd(q[2], q[3]), Self::with(py, self.back(q[5], q[4]))])
    }
}

/// Junction type of rung `r` on the cycle arc spanned by `positions`, which
/// hold all of its attachments on that arc in cyclic order.
fn junction_kind(
    g: &Graph,
    w: &HRopeLadder,
    c: &CycleSeq,
    r: usize,
    positions: &[usize],
) -> Result<JunctionType, JunctionError> {
    let arc = PathSeq::new(c.arc(positions[0], *positions.last().expect("nonempty")));
    Ok(classify_junction(g, &w.rungs[r], &arc)?.kind)
}

/// A `k`-long theta or prism (every path of length at least `max(k, 2)`)
/// inside a cycle rope ladder, following the case analysis on junction
/// areas of four spread rungs.
pub fn extract_theta_or_prism(g: &Graph, w: &HRopeLadder, k: usize, d: usize) -> Result<LongStructure, LongError> {
    let k = k.max(2);
    let selected = select_spread_rungs(g, w, k, d)?;
    let c = w.cycle.as_ref().expect("selection checked the cycle");
    let att = attachments(g, c, &w.p, &w.rungs);
    let b = Builder { g, c, w, k };
    let found = dispatch(&b, &att.cycle, &selected)?;
    let violations = match &found.shape {
        LongShape::Theta(t) => t.validate(g),
        LongShape::Prism(p) => p.validate(g),
    };
    if violations.is_empty() {
        Ok(found)
    } else {
        Err(LongError::Invalid(violations))
    }
}

fn dispatch(b: &Builder, cycle_att: &[Vec<usize>], selected: &[usize; 4]) -> Result<LongStructure, LongError> {
    let (g, w, c) = (b.g, b.w, b.c);
    let all = areas(cycle_att, selected);
    let count = |r: usize| all.iter().filter(|a| a.rung == r).count();
    let area_of = |r: usize| all.iter().find(|a| a.rung == r).expect("every rung has an area");
    let kind_of = |r: usize, positions: &[usize]| junction_kind(g, w, c, r, positions);
    let done = |case, rungs, shape| Ok(LongStructure { case, rungs, shape });

    if selected.iter().all(|&r| count(r) == 1) {
        let kinds: Vec<JunctionType> =
            selected.iter().map(|&r| kind_of(r, &area_of(r).attachments)).collect::<Result<_, _>>()?;
        for s in 0..4 {
            for t in s + 1..4 {
                if kinds[s] != kinds[t] {
                    continue;
                }
                let (i, j) = (selected[s], selected[t]);
                let (ai, aj) = (area_of(i), area_of(j));
                return match kinds[s] {
                    JunctionType::One => done(LongCase::SingleOne, [i, j], b.single_one(i, ai.start, j, aj.start)),
                    JunctionType::Two => done(LongCase::SingleTwo, [i, j], b.single_two(i, ai.start, j, aj.start)),
                    JunctionType::Three => done(
                        LongCase::SingleThree,
                        [i, j],
                        b.single_three(i, (ai.start, ai.end), j, (aj.start, aj.end)),
                    ),
                };
            }
        }
        return Err(LongError::NoCase);
    }

    let n = c.len();
    let inside = |gap: (usize, usize), x: usize| {
        let span = (gap.1 + n - gap.0) % n;
        let off = (x + n - gap.0) % n;
        off > 0 && off < span
    };
    let multi: Vec<usize> = selected.iter().copied().filter(|&r| count(r) >= 2).collect();
    for &i in &multi {
        let own: Vec<&JunctionArea> = all.iter().filter(|a| a.rung == i).collect();
        for h in 0..own.len() {
            let gap = (own[h].end, own[(h + 1) % own.len()].start);
            for &j in selected.iter().filter(|&&j| j != i) {
                let mut hits: Vec<usize> = cycle_att[j].iter().copied().filter(|&x| inside(gap, x)).collect();
                hits.sort_by_key(|&x| (x + n - gap.0) % n);
                if hits.is_empty() {
                    continue;
                }
                let kind = kind_of(j, &hits)?;
                match kind {
                    JunctionType::One => return done(LongCase::SplitOne, [i, j], b.split_one(i, gap, j, hits[0])),
                    JunctionType::Three => {
                        let x = (hits[0], *hits.last().expect("nonempty"));
                        return done(LongCase::SplitThree, [i, j], b.split_three(i, gap, j, x));
                    }
                    JunctionType::Two => {}
                }
            }
        }
        let others: Vec<usize> = selected.iter().copied().filter(|&r| r != i).collect();
        if others.iter().all(|&r| count(r) == 1) {
            let (j1, j2) = (others[0], others[1]);
            return done(LongCase::SingleTwo, [j1, j2], b.single_two(j1, area_of(j1).start, j2, area_of(j2).start));
        }
    }
    for &x in &multi {
        for &y in multi.iter().filter(|&&y| y != x) {
            let mut marks: Vec<(usize, usize)> =
                cycle_att[x].iter().map(|&q| (q, x)).chain(cycle_att[y].iter().map(|&q| (q, y))).collect();
            marks.sort_unstable();
            let m = marks.len();
            if m < 6 {
                continue;
            }
            let adjacent = |a: usize, b: usize| (a + 1) % n == b;
            for t in 0..m {
                let q: [(usize, usize); 6] = std::array::from_fn(|s| marks[(t + s) % m]);
                let owners = q.map(|(_, r)| r);
                if owners == [x, y, y, x, x, y] && adjacent(q[1].0, q[2].0) && adjacent(q[3].0, q[4].0) {
                    return done(LongCase::Alternating, [x, y], b.alternating(x, y, q.map(|(p, _)| p)));
                }
            }
        }
    }
    Err(LongError::NoCase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genio::{gen_cycle_rope_ladder, CycleLayout};
    use crate::genio::{gen_prism, gen_theta};
    use crate::oracles::{induced_subgraph_search, SearchBudget};

    const CASES: [LongCase; 6] = [
        LongCase::SingleOne,
        LongCase::SingleTwo,
        LongCase::SingleThree,
        LongCase::SplitOne,
        LongCase::SplitThree,
        LongCase::Alternating,
    ];

    #[test]
    fn planted_cases_are_found() {
        for case in CASES {
            for seed in 0..25 {
                let (g, w) = gen_cycle_rope_ladder(&CycleLayout::long_case(case, seed)).unwrap();
                let found = extract_theta_or_prism(&g, &w, 2, 3).unwrap();
                assert_eq!(found.case, case, "seed {seed}");
                let (paths, canonical, vertices) = match &found.shape {
                    LongShape::Theta(t) => {
                        let lengths = t.paths.clone().map(|p| p.length());
                        (t.paths.clone(), gen_theta(2, lengths).unwrap().0, t.vertex_set())
                    }
                    LongShape::Prism(p) => {
                        assert!(!p.generalized);
                        let lengths = p.paths.clone().map(|p| p.length());
                        (p.paths.clone(), gen_prism(2, lengths).unwrap().0, p.vertex_set())
                    }
                };
                assert!(paths.iter().all(|p| p.length() >= 2), "{case:?} seed {seed}");
                let (sub, _) = g.induced_subgraph(&vertices);
                assert_eq!(sub.n(), canonical.n());
                assert!(induced_subgraph_search(&canonical, &sub, SearchBudget::unlimited()).is_found());
            }
        }
    }

    #[test]
    fn areas_of_selected_rungs_are_disjoint() {
        for case in CASES {
            let (g, w) = gen_cycle_rope_ladder(&CycleLayout::long_case(case, 7)).unwrap();
            let selected = select_spread_rungs(&g, &w, 2, 3).unwrap();
            let all = junction_areas(&g, &w, &selected);
            let mut seen: Vec<usize> = all.iter().flat_map(|a| a.attachments.iter().copied()).collect();
            let total = seen.len();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), total);
            assert!(all.windows(2).all(|p| p[0].rung != p[1].rung));
        }
    }

    #[test]
    fn too_few_rungs_starve_the_selection() {
        let layout = CycleLayout::uniform(3, 3, 6, JunctionType::Two, 0);
        let (g, w) = gen_cycle_rope_ladder(&layout).unwrap();
        let err = select_spread_rungs(&g, &w, 2, 3).unwrap_err();
        assert_eq!(err, SpreadError::Starved { found: 3, rungs: 3, threshold: spread_threshold(2, 3) });
        assert_eq!(spread_threshold(2, 3), 192);
    }
}
