use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::derived::LongCase;
use crate::families;
use crate::graph::{CycleSeq, Graph, PathSeq, Vertex, VertexSet};
use crate::oracles::find_induced_star;
use crate::witnesses::{
    HRopeLadder, InducedMinorModel, InducedSubgraphWitness, JunctionType, Prism, RopeLadder, ShuffledRopeLadder, Theta,
    Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("induced K_1,{} centred at {center}", leaves.len())]
    NotFree { center: Vertex, leaves: Vec<Vertex> },
    #[error("vertex {vertex} sees {count} vertices of a rail, above the cap {cap}")]
    CapExceeded { vertex: Vertex, count: usize, cap: usize },
    #[error("planted structure is invalid: {0:?}")]
    Infeasible(Vec<Violation>),
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

fn identity_model(pattern: Graph) -> InducedMinorModel {
    let sets = (0..pattern.n()).map(VertexSet::singleton).collect();
    InducedMinorModel::new(pattern, sets)
}

/// The `k`-ladder, numbered as [`families::ladder`], with its identity model.
pub fn gen_ladder(k: usize) -> Result<(Graph, InducedMinorModel), GenError> {
    if k == 0 {
        return Err(GenError::InvalidParameters("k must be at least 1"));
    }
    let g = families::ladder(k);
    Ok((g.clone(), identity_model(g)))
}

/// The `k`-skinny ladder, numbered as [`families::skinny_ladder`], as a rope
/// ladder with single-vertex rungs.
pub fn gen_skinny_ladder(k: usize) -> Result<(Graph, RopeLadder), GenError> {
    if k == 0 {
        return Err(GenError::InvalidParameters("k must be at least 1"));
    }
    let w = RopeLadder {
        p1: PathSeq::new((0..k).collect()),
        p2: PathSeq::new((k..2 * k).collect()),
        rungs: (0..k).map(|i| PathSeq::single(2 * k + i)).collect(),
    };
    Ok((families::skinny_ladder(k), w))
}

/// Offsets, from a rung's base position on a rail, of the rail vertices one
/// rung end sees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JunctionPlan(pub Vec<usize>);

impl JunctionPlan {
    /// `[0]`, `[0, 1]` or `[0, 2]`.
    pub fn of_type(t: JunctionType) -> Self {
        JunctionPlan(match t {
            JunctionType::One => vec![0],
            JunctionType::Two => vec![0, 1],
            JunctionType::Three => vec![0, 2],
        })
    }

    fn width(&self) -> usize {
        self.0.iter().max().map_or(0, |&m| m + 1)
    }
}

/// A shuffled rope ladder: rung `i` sits in slot `i` of the first rail and
/// slot `sigma[i]` of the second; slot `s` starts at rail position
/// `s * spacing`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffledLayout {
    pub d: usize,
    pub sigma: Vec<usize>,
    /// Vertices per rung, each at least 1.
    pub rung_lengths: Vec<usize>,
    pub spacing: usize,
    /// Junction plans on the first and on the second rail.
    pub plans: [Vec<JunctionPlan>; 2],
}

fn random_type<R: Rng>(d: usize, len: usize, rng: &mut R) -> JunctionType {
    let pool: &[JunctionType] = match (d, len) {
        (..=3, _) => &[JunctionType::Two],
        (_, 1) => &[JunctionType::One, JunctionType::Two],
        _ => &[JunctionType::One, JunctionType::Two, JunctionType::Three],
    };
    *pool.choose(rng).expect("nonempty pool")
}

impl ShuffledLayout {
    /// Random permutation and rung lengths in `1..=4`; junctions are of the
    /// second type when `d = 3` and of any type that keeps the graph
    /// `K_{1,d}`-free otherwise.
    pub fn random(k: usize, d: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sigma: Vec<usize> = (0..k).collect();
        sigma.shuffle(&mut rng);
        let rung_lengths: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
        let mut plan = || -> Vec<JunctionPlan> {
            rung_lengths.iter().map(|&len| JunctionPlan::of_type(random_type(d, len, &mut rng))).collect()
        };
        let plans = [plan(), plan()];
        ShuffledLayout { d, sigma, rung_lengths, spacing: 4, plans }
    }

    fn k(&self) -> usize {
        self.sigma.len()
    }

    fn check(&self) -> Result<(), GenError> {
        let k = self.k();
        if k == 0 || self.d < 2 {
            return Err(GenError::InvalidParameters("need k ≥ 1 and d ≥ 2"));
        }
        let mut seen = vec![false; k];
        for &s in &self.sigma {
            if s >= k || std::mem::replace(&mut seen[s], true) {
                return Err(GenError::InvalidParameters("sigma must be a permutation of 0..k"));
            }
        }
        if self.rung_lengths.len() != k || self.plans.iter().any(|p| p.len() != k) {
            return Err(GenError::InvalidParameters("one rung length and two plans per rung"));
        }
        if self.rung_lengths.contains(&0) {
            return Err(GenError::InvalidParameters("rungs have at least one vertex"));
        }
        let widest = self.plans.iter().flatten().map(JunctionPlan::width).max().unwrap_or(0);
        if self.plans.iter().flatten().any(|p| p.0.is_empty()) || widest > self.spacing {
            return Err(GenError::InvalidParameters("junction plans must be nonempty and fit in a slot"));
        }
        Ok(())
    }
}

/// Lays out rungs joining two vertex sequences; `ends[s][i]` are the
/// positions on side `s` seen by rung `i`.
fn lay_rungs(
    edges: &mut Vec<(Vertex, Vertex)>,
    next: &mut Vertex,
    rails: [&[Vertex]; 2],
    ends: [Vec<Vec<usize>>; 2],
    lengths: &[usize],
) -> Vec<PathSeq> {
    let mut rungs = Vec::with_capacity(lengths.len());
    for (i, &len) in lengths.iter().enumerate() {
        let r: Vec<Vertex> = (*next..*next + len).collect();
        *next += len;
        edges.extend(r.windows(2).map(|e| (e[0], e[1])));
        edges.extend(ends[0][i].iter().map(|&x| (r[0], rails[0][x])));
        edges.extend(ends[1][i].iter().map(|&x| (r[len - 1], rails[1][x])));
        rungs.push(PathSeq::new(r));
    }
    rungs
}

fn path_edges(v: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    v.windows(2).map(|e| (e[0], e[1]))
}

fn ensure_free(g: &Graph, d: usize) -> Result<(), GenError> {
    match find_induced_star(g, d) {
        Some((center, leaves)) => Err(GenError::NotFree { center, leaves }),
        None => Ok(()),
    }
}

/// Rails of `k * spacing` vertices; the result is checked to be
/// `K_{1,d}`-free and to validate.
pub fn gen_shuffled_rope_ladder(layout: &ShuffledLayout) -> Result<(Graph, ShuffledRopeLadder), GenError> {
    layout.check()?;
    let m = layout.k() * layout.spacing;
    let p1: Vec<Vertex> = (0..m).collect();
    let p2: Vec<Vertex> = (m..2 * m).collect();
    let mut edges: Vec<(Vertex, Vertex)> = path_edges(&p1).chain(path_edges(&p2)).collect();
    let slots = [(0..layout.k()).collect::<Vec<_>>(), layout.sigma.clone()];
    let ends = [0, 1].map(|s| {
        (0..layout.k())
            .map(|i| layout.plans[s][i].0.iter().map(|&o| slots[s][i] * layout.spacing + o).collect())
            .collect::<Vec<Vec<usize>>>()
    });
    let mut next = 2 * m;
    let rungs = lay_rungs(&mut edges, &mut next, [&p1, &p2], ends, &layout.rung_lengths);
    let g = build(next, edges);
    ensure_free(&g, layout.d)?;
    let w = ShuffledRopeLadder { p1: PathSeq::new(p1), p2: PathSeq::new(p2), rungs };
    let violations = w.validate(&g);
    if !violations.is_empty() {
        return Err(GenError::Infeasible(violations));
    }
    Ok((g, w))
}

/// A `k`-rope ladder with rung lengths cycling through 1, 2, 3 and
/// second-type junctions on both rails.
pub fn gen_rope_ladder(k: usize) -> Result<(Graph, RopeLadder), GenError> {
    let two = JunctionPlan::of_type(JunctionType::Two);
    let layout = ShuffledLayout {
        d: 3,
        sigma: (0..k).collect(),
        rung_lengths: (0..k).map(|i| i % 3 + 1).collect(),
        spacing: 3,
        plans: [vec![two.clone(); k], vec![two; k]],
    };
    let (g, w) = gen_shuffled_rope_ladder(&layout)?;
    Ok((g, RopeLadder { p1: w.p1, p2: w.p2, rungs: w.rungs }))
}

/// A cycle rope ladder: rail cycle `C` of `max(4, k * spacing)` vertices,
/// rail path `P` of `k * path_spacing` vertices. Rung `i` has base `i *
/// spacing` on `C`, where its plan offsets wrap around, and base `i *
/// path_spacing` on `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLayout {
    pub d: usize,
    pub spacing: usize,
    pub path_spacing: usize,
    pub rung_lengths: Vec<usize>,
    /// Junction plans on `C` and on `P`.
    pub plans: [Vec<JunctionPlan>; 2],
}

impl CycleLayout {
    /// Every junction of type `kind`, rung lengths in `1..=3`.
    pub fn uniform(k: usize, d: usize, spacing: usize, kind: JunctionType, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let plan = JunctionPlan::of_type(kind);
        CycleLayout {
            d,
            spacing,
            path_spacing: spacing,
            rung_lengths: (0..k).map(|_| rng.gen_range(1..=3)).collect(),
            plans: [vec![plan.clone(); k], vec![plan; k]],
        }
    }

    /// Four rungs planted so that the spread selection for `k = 2` takes all
    /// of them and the construction lands in `case`. Slot width, rung lengths
    /// and the path junctions vary with the seed.
    pub fn long_case(case: LongCase, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = rng.gen_range(8..=12);
        let h = s / 2;
        let l = 4 * s;
        let cycle: [Vec<usize>; 4] = match case {
            LongCase::SingleOne => [0, 1, 2, 3].map(|i| vec![i * s]),
            LongCase::SingleTwo => [0, 1, 2, 3].map(|i| vec![i * s, i * s + 1]),
            LongCase::SingleThree => [0, 1, 2, 3].map(|i| vec![i * s, i * s + 2]),
            LongCase::SplitOne => [vec![0, s + h], vec![s], vec![2 * s, 2 * s + 1], vec![3 * s, 3 * s + 1]],
            LongCase::SplitThree => [vec![0, s + h], vec![s, s + 2], vec![2 * s, 2 * s + 1], vec![3 * s, 3 * s + 1]],
            LongCase::Alternating => [
                vec![0, 1, 2 * s, 2 * s + 1],
                vec![s, s + 1, 3 * s, 3 * s + 1],
                vec![s + h, s + h + 1],
                vec![3 * s + h, 3 * s + h + 1],
            ],
        };
        let offsets = |i: usize, pos: &[usize]| JunctionPlan(pos.iter().map(|&x| (x + l - i * s) % l).collect());
        let rung_lengths: Vec<usize> = (0..4).map(|_| rng.gen_range(1..=4)).collect();
        let path = (0..4)
            .map(|_| JunctionPlan::of_type(if rng.gen_bool(0.5) { JunctionType::One } else { JunctionType::Two }))
            .collect();
        CycleLayout {
            d: 3,
            spacing: s,
            path_spacing: rng.gen_range(3..=5),
            rung_lengths,
            plans: [cycle.iter().enumerate().map(|(i, pos)| offsets(i, pos)).collect(), path],
        }
    }

    fn k(&self) -> usize {
        self.rung_lengths.len()
    }
}

/// Largest number of vertices of one rail seen by a vertex off it.
fn check_cap(g: &Graph, rail: &[Vertex], d: usize) -> Result<(), GenError> {
    let cap = 2 * (d - 1);
    let mut on = vec![false; g.n()];
    for &v in rail {
        on[v] = true;
    }
    for v in g.vertices().filter(|&v| !on[v]) {
        let count = g.neighbors(v).iter().filter(|&&w| on[w]).count();
        if count > cap {
            return Err(GenError::CapExceeded { vertex: v, count, cap });
        }
    }
    Ok(())
}

/// Builds the planted cycle rope ladder, checking that no vertex sees more
/// than `2(d - 1)` vertices of either rail and that the witness validates.
/// Full `K_{1,d}`-freeness is not required: single-vertex junctions on a
/// cycle always make claws.
pub fn gen_cycle_rope_ladder(layout: &CycleLayout) -> Result<(Graph, HRopeLadder), GenError> {
    let k = layout.k();
    if k == 0 || layout.d < 2 || layout.spacing == 0 || layout.path_spacing == 0 {
        return Err(GenError::InvalidParameters("need k ≥ 1, d ≥ 2 and positive spacings"));
    }
    if layout.plans.iter().any(|p| p.len() != k) || layout.rung_lengths.contains(&0) {
        return Err(GenError::InvalidParameters("one plan per rung on each rail, rungs nonempty"));
    }
    if layout.plans.iter().flatten().any(|p| p.0.is_empty())
        || layout.plans[1].iter().any(|p| p.width() > layout.path_spacing)
    {
        return Err(GenError::InvalidParameters("junction plans must be nonempty and fit their slot on P"));
    }
    let l = (k * layout.spacing).max(4);
    let m = k * layout.path_spacing;
    let c: Vec<Vertex> = (0..l).collect();
    let p: Vec<Vertex> = (l..l + m).collect();
    let mut edges: Vec<(Vertex, Vertex)> = (0..l).map(|i| (i, (i + 1) % l)).chain(path_edges(&p)).collect();
    let ends =
        [(layout.spacing, l), (layout.path_spacing, m)].into_iter().zip(&layout.plans).map(|((step, len), plans)| {
            plans
                .iter()
                .enumerate()
                .map(|(i, plan)| {
                    let mut pos: Vec<usize> = plan.0.iter().map(|&o| (i * step + o) % len).collect();
                    pos.sort_unstable();
                    pos.dedup();
                    pos
                })
                .collect::<Vec<_>>()
        });
    let ends: Vec<Vec<Vec<usize>>> = ends.collect();
    let ends: [Vec<Vec<usize>>; 2] = ends.try_into().expect("two rails");
    let mut next = l + m;
    let rungs = lay_rungs(&mut edges, &mut next, [&c, &p], ends, &layout.rung_lengths);
    let g = build(next, edges);
    check_cap(&g, &c, layout.d)?;
    check_cap(&g, &p, layout.d)?;
    let cycle = CycleSeq::new(c);
    let w = HRopeLadder { h: cycle.vertex_set(), cycle: Some(cycle), p: PathSeq::new(p), rungs };
    let violations = w.validate(&g);
    if !violations.is_empty() {
        return Err(GenError::Infeasible(violations));
    }
    Ok((g, w))
}

/// Appends a path of `inner` new vertices from `a` to `b`.
fn subdivided(edges: &mut Vec<(Vertex, Vertex)>, next: &mut Vertex, a: Vertex, b: Vertex, inner: usize) -> PathSeq {
    let mut seq = vec![a];
    seq.extend(*next..*next + inner);
    *next += inner;
    seq.push(b);
    edges.extend(path_edges(&seq));
    PathSeq::new(seq)
}

/// Ends `0` and `1` joined by three paths of the given lengths, each at
/// least `max(2, k)`.
pub fn gen_theta(k: usize, lengths: [usize; 3]) -> Result<(Graph, Theta), GenError> {
    if lengths.iter().any(|&len| len < k.max(2)) {
        return Err(GenError::InvalidParameters("theta paths have length at least max(2, k)"));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    let paths = lengths.map(|len| subdivided(&mut edges, &mut next, 0, 1, len - 1));
    Ok((build(next, edges), Theta { v: 0, w: 1, paths, min_length: k }))
}

/// Triangles `{0, 1, 2}` and `{3, 4, 5}`, path `i` from `i` to `3 + i` of
/// length `lengths[i] ≥ max(1, k)`.
pub fn gen_prism(k: usize, lengths: [usize; 3]) -> Result<(Graph, Prism), GenError> {
    if lengths.iter().any(|&len| len < k.max(1)) {
        return Err(GenError::InvalidParameters("prism paths have length at least max(1, k)"));
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
    let mut next = 6;
    let mut i = 0;
    let paths = lengths.map(|len| {
        i += 1;
        subdivided(&mut edges, &mut next, i - 1, i + 2, len - 1)
    });
    let prism = Prism { triangles: [[0, 1, 2], [3, 4, 5]], paths, min_length: k, generalized: false };
    Ok((build(next, edges), prism))
}

/// `W_l` with its identity model.
pub fn gen_wheel(l: usize) -> Result<(Graph, InducedMinorModel), GenError> {
    if l < 3 {
        return Err(GenError::InvalidParameters("a wheel has at least three spokes"));
    }
    let g = families::wheel(l);
    Ok((g.clone(), identity_model(g)))
}

fn identity_subgraph(g: Graph) -> (Graph, InducedSubgraphWitness) {
    let map = g.vertices().collect();
    (g.clone(), InducedSubgraphWitness::new(g, map))
}

/// `S_p`, numbered as [`families::tripod`].
pub fn gen_tripod(p: usize) -> Result<(Graph, InducedSubgraphWitness), GenError> {
    if p == 0 {
        return Err(GenError::InvalidParameters("p must be at least 1"));
    }
    Ok(identity_subgraph(families::tripod(p)))
}

/// `T_p`, numbered as [`families::line_tripod`].
pub fn gen_line_tripod(p: usize) -> Result<(Graph, InducedSubgraphWitness), GenError> {
    if p == 0 {
        return Err(GenError::InvalidParameters("p must be at least 1"));
    }
    Ok(identity_subgraph(families::line_tripod(p)))
}

/// Independent `v_i = i` and clique `w_i = n + i` with `v_i w_i` the only
/// edges between them.
pub fn gen_clique_with_pendants(n: usize) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, n + i)).collect();
    edges.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| (n + i, n + j))));
    build(2 * n, edges)
}

/// `G(n, density)` repaired into a `K_{1,d}`-free graph: while an induced
/// star remains, two of its leaves chosen at random are joined.
pub fn gen_random_k1d_free(n: usize, d: usize, density: f64, seed: u64) -> Result<Graph, GenError> {
    if d < 2 {
        return Err(GenError::InvalidParameters("d must be at least 2"));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(GenError::InvalidParameters("density must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)).collect();
    loop {
        let g = build(n, edges.clone());
        let Some((_, leaves)) = find_induced_star(&g, d) else { return Ok(g) };
        let picked: Vec<&Vertex> = leaves.choose_multiple(&mut rng, 2).collect();
        edges.push((*picked[0], *picked[1]));
    }
}

/// An induced path with pendant vertices, each seeing one or two
/// consecutive path vertices, and no path vertex seeing two pendants.
#[derive(Clone, Debug)]
pub struct PendantPath {
    pub graph: Graph,
    pub path: PathSeq,
    pub pendants: Vec<Vertex>,
}

/// `points` pendants in path order; a quarter of the gaps get a spare path
/// vertex. `K_{1,4}`-free by construction.
pub fn gen_pendant_path(points: usize, seed: u64) -> PendantPath {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sees: Vec<(usize, usize)> = Vec::with_capacity(points);
    let mut len = 0;
    for _ in 0..points {
        let width = rng.gen_range(1..=2);
        sees.push((len, width));
        len += width + usize::from(rng.gen_ratio(1, 4));
    }
    // Adjacency is written directly: path neighbours, then the pendant.
    let mut pendant_of = vec![usize::MAX; len];
    for (j, &(at, width)) in sees.iter().enumerate() {
        pendant_of[at..at + width].fill(len + j);
    }
    let mut offsets = Vec::with_capacity(len + points + 1);
    let mut targets = Vec::with_capacity(2 * len + 4 * points);
    offsets.push(0);
    for (i, &pendant) in pendant_of.iter().enumerate() {
        targets.extend(i.checked_sub(1));
        targets.extend((i + 1 < len).then_some(i + 1));
        targets.extend((pendant != usize::MAX).then_some(pendant));
        offsets.push(targets.len());
    }
    for &(at, width) in &sees {
        targets.extend(at..at + width);
        offsets.push(targets.len());
    }
    PendantPath {
        graph: Graph::from_csr(offsets, targets),
        path: PathSeq::new((0..len).collect()),
        pendants: (len..len + points).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::is_k1d_free;

    #[test]
    fn small_families_have_the_right_shape() {
        let (c4, _) = gen_ladder(2).unwrap();
        assert!((c4.n(), c4.m()) == (4, 4) && c4.vertices().all(|v| c4.degree(v) == 2));
        let (g, w) = gen_skinny_ladder(2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(w.validate(&g).is_empty());
        let (g, _) = gen_ladder(4).unwrap();
        assert_eq!((g.n(), g.m()), (8, 10));
        let (g, t) = gen_theta(2, [2, 2, 2]).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert!(t.validate(&g).is_empty());
        let (g, p) = gen_prism(1, [1, 1, 1]).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        assert!(p.validate(&g).is_empty());
        assert_eq!(gen_wheel(3).unwrap().0, families::complete(4));
        assert_eq!(gen_clique_with_pendants(1), families::path(2));
        assert!(is_k1d_free(&gen_clique_with_pendants(3), 3));
        assert!(gen_theta(3, [3, 3, 2]).is_err());
        assert!(gen_ladder(0).is_err());
    }

    #[test]
    fn reversed_sigma_puts_the_first_rung_last() {
        let two = JunctionPlan::of_type(JunctionType::Two);
        let layout = ShuffledLayout {
            d: 3,
            sigma: vec![3, 2, 1, 0],
            rung_lengths: vec![1, 2, 1, 2],
            spacing: 3,
            plans: [vec![two.clone(); 4], vec![two; 4]],
        };
        let (g, w) = gen_shuffled_rope_ladder(&layout).unwrap();
        assert!(w.second_side_order(&g).windows(2).all(|p| p[0] > p[1]));
    }

    #[test]
    fn identity_sigma_gives_a_rope_ladder() {
        for k in 1..=8 {
            let (g, w) = gen_rope_ladder(k).unwrap();
            assert!(w.validate(&g).is_empty());
        }
    }

    #[test]
    fn claw_making_plans_are_refused() {
        let one = JunctionPlan::of_type(JunctionType::One);
        let layout = ShuffledLayout {
            d: 3,
            sigma: vec![0, 1],
            rung_lengths: vec![2, 2],
            spacing: 2,
            plans: [vec![one.clone(); 2], vec![one; 2]],
        };
        assert!(matches!(gen_shuffled_rope_ladder(&layout), Err(GenError::NotFree { .. })));
    }

    #[test]
    fn uniform_cycle_ladders_validate() {
        for k in [1, 2, 4, 17, 200] {
            for d in [3, 4] {
                let layout = CycleLayout::uniform(k, d, 3, JunctionType::Two, k as u64);
                let (g, w) = gen_cycle_rope_ladder(&layout).unwrap();
                assert!(w.validate(&g).is_empty());
            }
        }
    }

    #[test]
    fn every_long_case_plants() {
        use LongCase::*;
        for case in [SingleOne, SingleTwo, SingleThree, SplitOne, SplitThree, Alternating] {
            for seed in 0..10 {
                let (g, w) = gen_cycle_rope_ladder(&CycleLayout::long_case(case, seed)).unwrap();
                assert!(w.validate(&g).is_empty());
            }
        }
    }

    #[test]
    fn random_free_graphs_are_free_and_reproducible() {
        for seed in 0..20 {
            let g = gen_random_k1d_free(15, 3, 0.3, seed).unwrap();
            assert!(is_k1d_free(&g, 3));
            assert_eq!(g, gen_random_k1d_free(15, 3, 0.3, seed).unwrap());
        }
        assert!(gen_random_k1d_free(5, 2, 1.5, 0).is_err());
    }

    #[test]
    fn pendant_paths_keep_one_pendant_per_vertex() {
        let pp = gen_pendant_path(200, 1);
        assert!(pp.path.is_induced(&pp.graph));
        assert!(is_k1d_free(&pp.graph, 4));
        let on_path = pp.path.vertex_set().mask(pp.graph.n());
        for &v in pp.path.vertices() {
            assert!(pp.graph.neighbors(v).iter().filter(|&&w| !on_path[w]).count() <= 1);
        }
    }
}
