//! Growing an `ℓ`-`H`-rope ladder between a vertex set `H` and a path `P`.
//!
//! Each step greedily picks shortest pairwise non-adjacent paths from the
//! frontier near `H` to the trimmed neighbourhoods of the previous step's
//! paths. Enough paths to one target give the rungs directly; otherwise the
//! state advances, and after `ℓ + 1` steps one path per step is chained into
//! a new rail. A step with an empty frontier ends with a separator between
//! `N[H]` and `N[P]` whose independence number is reported.

use thiserror::Error;

use super::ExtractionOutcome;
use crate::graph::{is_separator, separates_within, shortest_path_masks, CycleSeq, Graph, PathSeq, Vertex, VertexSet};
use crate::oracles::alpha;
use crate::witnesses::{HRopeLadder, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    #[error("H and P are adjacent")]
    Adjacent,
    #[error("property {property} fails at step {step}")]
    PropertyFailed { property: char, step: usize },
    #[error("assembled rope ladder is invalid: {0:?}")]
    Assembly(Vec<Violation>),
}

/// The objects maintained after step `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionState {
    pub step: usize,
    /// `Q^i_1, ..., Q^i_{m_i}`, each from `v^i_j` (near `H`) to `w^i_j`.
    pub paths: Vec<PathSeq>,
    /// `S^i`: endpoints and second-endpoints of all paths so far.
    pub pool: VertexSet,
    /// `Q̄^i_j = N[Q^i_j] ∖ N[S^i]`.
    pub trimmed: Vec<VertexSet>,
    /// Vertex mask of the residual graph `G^i`.
    pub residual: Vec<bool>,
    /// `N^i`: frontier vertices next to `H` still reachable from `Q̄^i`.
    pub frontier: VertexSet,
}

impl ConstructionState {
    pub fn m(&self) -> usize {
        self.paths.len()
    }

    pub fn trimmed_union(&self) -> VertexSet {
        self.trimmed.iter().fold(VertexSet::new(), |acc, t| acc.union(t))
    }
}

/// What happened at one step, with the properties verified there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepReport {
    pub step: usize,
    pub paths: usize,
    pub pool: usize,
    pub frontier: usize,
    pub checked: Vec<char>,
}

/// The outcome together with the per-step reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub outcome: ExtractionOutcome<HRopeLadder>,
    pub steps: Vec<StepReport>,
}

fn mask_of(n: usize, set: &VertexSet) -> Vec<bool> {
    set.mask(n)
}

fn set_of(mask: &[bool]) -> VertexSet {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect()
}

fn closed_mask(g: &Graph, vertices: impl IntoIterator<Item = Vertex>) -> Vec<bool> {
    let mut out = vec![false; g.n()];
    for v in vertices {
        out[v] = true;
        for &w in g.neighbors(v) {
            out[w] = true;
        }
    }
    out
}

/// Greedy shortest pairwise non-adjacent paths from `sources` to `targets`
/// with interior in `inner`; `stop` is asked after every new path.
fn greedy_paths(
    g: &Graph,
    sources: &[bool],
    targets: &[bool],
    inner: &[bool],
    mut stop: impl FnMut(&[PathSeq]) -> bool,
) -> Vec<PathSeq> {
    let n = g.n();
    let mut blocked = vec![false; n];
    let mut out = Vec::new();
    loop {
        let x: Vec<bool> = (0..n).map(|v| sources[v] && !blocked[v]).collect();
        let y: Vec<bool> = (0..n).map(|v| targets[v] && !blocked[v]).collect();
        let z: Vec<bool> = (0..n).map(|v| inner[v] && !blocked[v] && !x[v] && !y[v]).collect();
        let Some(path) = shortest_path_masks(g, &x, &y, &z) else {
            break;
        };
        for (v, b) in closed_mask(g, path.vertices().iter().copied()).into_iter().enumerate() {
            blocked[v] |= b;
        }
        out.push(path);
        if stop(&out) {
            break;
        }
    }
    out
}

/// Endpoints and second-endpoints of a path.
fn ends(p: &PathSeq) -> Vec<Vertex> {
    let v = p.vertices();
    let mut out = vec![v[0], v[v.len() - 1]];
    if v.len() >= 2 {
        out.extend([v[1], v[v.len() - 2]]);
    }
    out
}

/// Vertices of `candidates` adjacent to something reachable from `from`
/// through `through`, or in `from` itself.
fn reachable_next_to(g: &Graph, from: &[bool], through: &[bool], candidates: &[bool]) -> Vec<bool> {
    let n = g.n();
    let sources: Vec<Vertex> = (0..n).filter(|&v| from[v]).collect();
    let mut allowed = through.to_vec();
    for &s in &sources {
        allowed[s] = true;
    }
    let reached = g.reach_from(&sources, &allowed);
    (0..n).map(|v| candidates[v] && (reached[v] || g.neighbors(v).iter().any(|&w| reached[w]))).collect()
}

/// Builds an `l`-`H`-rope ladder with `H` as one rail, or a separator
/// between `N[H]` and `N[P]` of small independence number. `cycle`, when
/// given, is recorded in the witness and must enumerate `H`.
pub fn build_h_rope_ladder(
    g: &Graph,
    h: &VertexSet,
    cycle: Option<&CycleSeq>,
    p: &PathSeq,
    l: usize,
) -> Result<Construction, ConstructionError> {
    let n = g.n();
    if l == 0 {
        return Err(ConstructionError::InvalidInput("l must be at least 1"));
    }
    if h.is_empty() || g.check_set(h).is_err() {
        return Err(ConstructionError::InvalidInput("H must be a nonempty set of vertices"));
    }
    if p.is_empty() || p.vertices().iter().any(|&v| v >= n) || !p.is_path(g) || !p.is_induced(g) {
        return Err(ConstructionError::InvalidInput("P must be an induced path"));
    }
    if cycle.is_some_and(|c| c.vertex_set() != *h) {
        return Err(ConstructionError::InvalidInput("cycle must enumerate H"));
    }
    let in_h = mask_of(n, h);
    let near_h = closed_mask(g, h.iter());
    if p.vertices().iter().any(|&v| near_h[v]) {
        return Err(ConstructionError::Adjacent);
    }
    let near_p = closed_mask(g, p.vertices().iter().copied());
    let open_h: Vec<bool> = (0..n).map(|v| near_h[v] && !in_h[v]).collect();
    let in_p = p.vertex_set().mask(n);
    let open_p: Vec<bool> = (0..n).map(|v| near_p[v] && !in_p[v]).collect();
    let nh_set = set_of(&near_h);
    let np_set = set_of(&near_p);

    let residual0: Vec<bool> = (0..n).map(|v| !near_h[v] && !near_p[v]).collect();
    let frontier0 = reachable_next_to(g, &open_p, &residual0, &open_h);
    let mut reports = Vec::new();
    let mut history: Vec<ConstructionState> = Vec::new();
    let witness =
        |rail: PathSeq, rungs: Vec<PathSeq>| HRopeLadder { h: h.clone(), cycle: cycle.cloned(), p: rail, rungs };

    for step in 1..=l + 1 {
        let prev = history.last();
        let (sources, targets, inner, prev_pool) = match prev {
            None => (open_h.clone(), open_p.clone(), residual0.clone(), VertexSet::new()),
            Some(s) => (s.frontier.mask(n), s.trimmed_union().mask(n), s.residual.clone(), s.pool.clone()),
        };
        let paths = match prev {
            None => greedy_paths(g, &sources, &targets, &inner, |found| found.len() >= l),
            Some(prev) => greedy_paths(g, &sources, &targets, &inner, |found| {
                prev.trimmed.iter().any(|t| found.iter().filter(|q| t.contains(q.last())).count() >= l)
            }),
        };
        match prev {
            None if paths.len() >= l => {
                let w = witness(p.clone(), paths);
                reports.push(StepReport { step, paths: l, pool: 0, frontier: 0, checked: Vec::new() });
                return finish(g, w, reports);
            }
            Some(prev) => {
                if let Some(j) =
                    (0..prev.m()).find(|&j| paths.iter().filter(|q| prev.trimmed[j].contains(q.last())).count() >= l)
                {
                    let rungs: Vec<PathSeq> =
                        paths.iter().filter(|q| prev.trimmed[j].contains(q.last())).take(l).cloned().collect();
                    let rail = prev.paths[j].subpath(1, prev.paths[j].len() - 1);
                    reports.push(StepReport { step, paths: paths.len(), pool: 0, frontier: 0, checked: Vec::new() });
                    return finish(g, witness(rail, rungs), reports);
                }
            }
            None => {}
        }
        if paths.is_empty() {
            if step == 1 {
                let separator = VertexSet::new();
                if !is_separator(g, &separator, &nh_set, &np_set) {
                    return Err(ConstructionError::PropertyFailed { property: 'c', step });
                }
                reports.push(StepReport { step, paths: 0, pool: 0, frontier: 0, checked: vec!['c'] });
                return Ok(Construction {
                    outcome: ExtractionOutcome::Failure { separator, alpha: 0, step },
                    steps: reports,
                });
            }
            return Err(ConstructionError::PropertyFailed { property: 'd', step: step - 1 });
        }

        // Advance the state.
        let mut pool = prev_pool.clone();
        for q in &paths {
            pool = pool.union(&ends(q).into_iter().collect());
        }
        let near_pool = closed_mask(g, pool.iter());
        let trimmed: Vec<VertexSet> = paths
            .iter()
            .map(|q| {
                let m = closed_mask(g, q.vertices().iter().copied());
                (0..n).filter(|&v| m[v] && !near_pool[v]).collect()
            })
            .collect();
        let near_paths = closed_mask(g, paths.iter().flat_map(|q| q.vertices().iter().copied()));
        let residual: Vec<bool> = (0..n).map(|v| inner[v] && !near_paths[v]).collect();
        let trimmed_union = trimmed.iter().fold(VertexSet::new(), |acc, t| acc.union(t));
        let prev_frontier = match prev {
            None => frontier0.clone(),
            Some(s) => s.frontier.mask(n),
        };
        let candidates: Vec<bool> = (0..n).map(|v| prev_frontier[v] && !near_pool[v]).collect();
        let frontier_mask = reachable_next_to(g, &trimmed_union.mask(n), &residual, &candidates);
        let frontier = set_of(&frontier_mask);
        let state = ConstructionState { step, paths, pool, trimmed, residual, frontier };

        // Properties a), b), c), e).
        let mut checked = Vec::new();
        if (state.m() as f64) >= (l as f64).powi(step as i32) {
            return Err(ConstructionError::PropertyFailed { property: 'a', step });
        }
        checked.push('a');
        let separator_b = set_of(&near_pool).union(&trimmed_union);
        let b_holds = match prev {
            None => is_separator(g, &separator_b, &nh_set, &np_set),
            Some(prev) => {
                let universe: Vec<bool> = (0..n).map(|v| sources[v] || targets[v] || prev.residual[v]).collect();
                separates_within(g, &separator_b, &set_of(&sources), &prev.trimmed_union(), &universe)
            }
        };
        if !b_holds {
            return Err(ConstructionError::PropertyFailed { property: 'b', step });
        }
        checked.push('b');
        let separator_c = state.frontier.union(&set_of(&near_pool));
        if !is_separator(g, &separator_c, &nh_set, &np_set) {
            return Err(ConstructionError::PropertyFailed { property: 'c', step });
        }
        checked.push('c');
        let prev_union = prev.map(|s| s.trimmed_union()).unwrap_or_default();
        if !trimmed_union.is_disjoint(&nh_set) || !trimmed_union.is_disjoint(&prev_union) {
            return Err(ConstructionError::PropertyFailed { property: 'e', step });
        }
        checked.push('e');
        reports.push(StepReport {
            step,
            paths: state.m(),
            pool: state.pool.len(),
            frontier: state.frontier.len(),
            checked,
        });
        let exhausted = state.frontier.is_empty();
        history.push(state);
        if exhausted && step <= l {
            let a = alpha(g, &separator_c).expect("valid vertices");
            return Ok(Construction {
                outcome: ExtractionOutcome::Failure { separator: separator_c, alpha: a, step },
                steps: reports,
            });
        }
    }
    let (rail, rungs) = assemble(g, &history, l).ok_or(ConstructionError::Assembly(Vec::new()))?;
    finish(g, witness(rail, rungs), reports)
}

fn finish(g: &Graph, w: HRopeLadder, steps: Vec<StepReport>) -> Result<Construction, ConstructionError> {
    let violations = w.validate(g);
    if !violations.is_empty() {
        return Err(ConstructionError::Assembly(violations));
    }
    Ok(Construction { outcome: ExtractionOutcome::Witness(w), steps })
}

/// Chains one path per step into the rail `P'` and cuts the rungs `Φ^i`.
/// `None` means the chaining rule found no continuation.
fn assemble(g: &Graph, history: &[ConstructionState], l: usize) -> Option<(PathSeq, Vec<PathSeq>)> {
    // chain[i - 1] = R^i for i in 1..=l+1.
    let mut chain: Vec<&PathSeq> = vec![&history[l].paths[0]];
    for i in (1..=l).rev() {
        let w_next = chain.last()?.last();
        let state = &history[i - 1];
        let t = (0..state.m()).find(|&j| state.trimmed[j].contains(w_next))?;
        chain.push(&state.paths[t]);
    }
    chain.reverse();
    let mut rail = Vec::new();
    let mut rungs = Vec::new();
    for i in 0..l {
        let r = chain[i].vertices();
        let w_next = chain[i + 1].last();
        let hits: Vec<usize> = (0..r.len()).filter(|&x| g.has_edge(r[x], w_next)).collect();
        let far = *hits.last()?;
        let phi2 = if hits.len() == 1 { far.checked_sub(1)? } else { hits[0] };
        rungs.push(PathSeq::new(r[..=phi2].to_vec()));
        if i > 0 {
            rail.extend(r[far..].iter().rev());
        } else {
            rail.push(r[far]);
        }
    }
    rail.push(chain[l].last());
    Some((PathSeq::new(rail), rungs))
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::graph::closed_neighborhood;

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn single_rung_is_a_shortest_path() {
        let g = path_graph(5);
        let c = build_h_rope_ladder(&g, &VertexSet::singleton(0), None, &PathSeq::single(4), 1).unwrap();
        let ExtractionOutcome::Witness(w) = c.outcome else { panic!("expected a witness") };
        assert_eq!(w.rungs, vec![PathSeq::new(vec![1, 2, 3])]);
    }

    #[test]
    fn separate_components_give_empty_separator() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = build_h_rope_ladder(&g, &VertexSet::singleton(0), None, &PathSeq::single(3), 2).unwrap();
        assert_eq!(c.outcome, ExtractionOutcome::Failure { separator: VertexSet::new(), alpha: 0, step: 1 });
    }

    #[test]
    fn ladder_rungs_found_in_first_step() {
        // Rails 0..6 and 6..12, rungs of length 2 through 12..18 at every rail vertex.
        let mut edges: Vec<(usize, usize)> = (1..6).map(|i| (i - 1, i)).chain((7..12).map(|i| (i - 1, i))).collect();
        for i in 0..6 {
            edges.extend([(i, 12 + i), (12 + i, 6 + i)]);
        }
        let g = Graph::from_edges(18, edges).unwrap();
        let h: VertexSet = (0..6).collect();
        let p = PathSeq::new((6..12).collect());
        for l in 1..=3 {
            let c = build_h_rope_ladder(&g, &h, None, &p, l).unwrap();
            let ExtractionOutcome::Witness(w) = c.outcome else { panic!("expected a witness") };
            assert_eq!(w.k(), l);
            assert!(w.validate(&g).is_empty());
        }
    }

    #[test]
    fn bottleneck_yields_certified_separator() {
        // H = {0}, P = {6}; everything passes through the cut vertex 3.
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)]).unwrap();
        let h = VertexSet::singleton(0);
        let p = PathSeq::single(6);
        let c = build_h_rope_ladder(&g, &h, None, &p, 2).unwrap();
        let ExtractionOutcome::Failure { separator, alpha, step } = c.outcome else { panic!("expected a failure") };
        let nh = closed_neighborhood(&g, &h).unwrap();
        let np = closed_neighborhood(&g, &p.vertex_set()).unwrap();
        assert!(is_separator(&g, &separator, &nh, &np));
        assert_eq!(alpha, crate::oracles::alpha(&g, &separator).unwrap());
        assert_eq!(step, 1);
    }

    /// `H` is the path 0..20 and `P = [20]`. Three spokes run from `H`: the
    /// first reaches `P`, the second ends at a side vertex 42 of the first,
    /// the third at a side vertex 53 of the second.
    fn spokes() -> (Graph, VertexSet, PathSeq) {
        let mut edges: Vec<(usize, usize)> = (1..20).map(|i| (i - 1, i)).collect();
        let chain = |from: usize, ids: std::ops::RangeInclusive<usize>, to: usize, edges: &mut Vec<_>| {
            let mut prev = from;
            for x in ids {
                edges.push((prev, x));
                prev = x;
            }
            edges.push((prev, to));
        };
        edges.extend([(20, 21), (1, 22), (10, 32), (18, 43), (42, 27), (53, 37)]);
        chain(22, 23..=31, 21, &mut edges);
        chain(32, 33..=41, 42, &mut edges);
        chain(43, 44..=52, 53, &mut edges);
        (Graph::from_edges(54, edges).unwrap(), (0..20).collect(), PathSeq::single(20))
    }

    #[test]
    fn three_step_chain_is_assembled() {
        let (g, h, p) = spokes();
        let c = build_h_rope_ladder(&g, &h, None, &p, 2).unwrap();
        assert_eq!(c.steps.iter().map(|s| s.paths).collect::<Vec<_>>(), vec![1, 1, 1]);
        let ExtractionOutcome::Witness(w) = c.outcome else { panic!("expected a witness") };
        assert_eq!(w.p.vertices(), &[27, 42, 41, 40, 39, 38, 37, 53]);
        assert_eq!(w.rungs[0].vertices(), &[22, 23, 24, 25, 26]);
        assert_eq!(w.rungs[1].vertices(), &[32, 33, 34, 35, 36]);
    }

    #[test]
    fn input_errors() {
        let g = path_graph(4);
        let h = VertexSet::singleton(0);
        assert_eq!(build_h_rope_ladder(&g, &h, None, &PathSeq::single(1), 1), Err(ConstructionError::Adjacent));
        assert!(build_h_rope_ladder(&g, &h, None, &PathSeq::new(vec![1, 3]), 1).is_err());
        assert!(build_h_rope_ladder(&g, &h, None, &PathSeq::single(3), 0).is_err());
    }

    #[test]
    fn random_runs_keep_every_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut witnesses = 0;
        let mut multi_step = 0;
        for _ in 0..400 {
            let n = rng.gen_range(8..=30);
            let p_edge = rng.gen_range(0.06..0.3);
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p_edge)).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let h = VertexSet::singleton(0);
            let near = closed_neighborhood(&g, &h).unwrap();
            let Some(target) = (1..n).rev().find(|&v| !near.contains(v)) else {
                continue;
            };
            let p = PathSeq::single(target);
            let l = rng.gen_range(1..=3);
            let c = build_h_rope_ladder(&g, &h, None, &p, l);
            let c = c.expect("construction properties hold");
            if c.steps.len() > 1 {
                multi_step += 1;
            }
            match c.outcome {
                ExtractionOutcome::Witness(w) => {
                    witnesses += 1;
                    assert!(w.validate(&g).is_empty());
                }
                ExtractionOutcome::Failure { separator, .. } => {
                    let np = closed_neighborhood(&g, &p.vertex_set()).unwrap();
                    assert!(is_separator(&g, &separator, &near, &np));
                }
                ExtractionOutcome::Decomposition(_) => unreachable!(),
            }
        }
        assert!(witnesses > 0);
        assert_eq!(multi_step, 0);
    }

    #[test]
    fn grid_runs_advance_and_keep_every_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut advanced = 0;
        let mut outcomes = [0usize; 2];
        for _ in 0..150 {
            let (rows, cols) = (rng.gen_range(2..=5), rng.gen_range(8..=20));
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows && (c == 0 || c + 1 == cols || rng.gen_bool(0.7)) {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            let g = Graph::from_edges(rows * cols, edges).unwrap();
            let h: VertexSet = (0..rows).map(|r| id(r, 0)).collect();
            let p = PathSeq::new((0..rows).map(|r| id(r, cols - 1)).collect());
            let l = rng.gen_range(2..=4);
            let c = build_h_rope_ladder(&g, &h, None, &p, l).expect("construction properties hold");
            if c.steps.len() > 1 {
                advanced += 1;
            }
            for report in &c.steps[..c.steps.len() - 1] {
                assert_eq!(report.checked, vec!['a', 'b', 'c', 'e']);
            }
            match c.outcome {
                ExtractionOutcome::Witness(w) => {
                    outcomes[0] += 1;
                    assert!(w.validate(&g).is_empty());
                }
                ExtractionOutcome::Failure { separator, .. } => {
                    outcomes[1] += 1;
                    let nh = closed_neighborhood(&g, &h).unwrap();
                    let np = closed_neighborhood(&g, &p.vertex_set()).unwrap();
                    assert!(is_separator(&g, &separator, &nh, &np));
                }
                ExtractionOutcome::Decomposition(_) => unreachable!(),
            }
        }
        assert!(advanced > 0);
    }
}
