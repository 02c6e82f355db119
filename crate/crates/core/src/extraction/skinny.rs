//! From a rope ladder to a skinny-ladder induced minor, and the composed
//! pipeline: bramble, dominating path, two rails, shuffled rope ladder,
//! cleaning, model.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{
    build_h_rope_ladder, clean_shuffled_rope_ladder, dominating_path, eta_bound, extend_induced_path, nu,
    split_rails_two_paths, CleanError, CleanOutcome, ConstructionError, ExtractionOutcome, RailError, RailOutcome,
};
use crate::families;
use crate::graph::{are_nonadjacent, Graph, PathSeq, Vertex, VertexSet};
use crate::oracles::{
    decomposition_from_order, exact_tree_independence_number, find_induced_star, majority_bramble, min_degree_order,
    sample_strong_bramble, SearchBudget,
};
use crate::witnesses::{
    InducedMinorModel, RopeLadder, ShuffledRopeLadder, StrongBramble, TreeDecomposition, Violation,
};

/// Branch sets of the `k`-skinny ladder (numbered as in
/// [`families::skinny_ladder`]) inside a `k`-rope ladder.
///
/// Each rail is cut into `k` consecutive segments: segment `i` ends at the
/// last attachment of rung `i` (the last segment runs to the rail's end), so
/// it holds all of rung `i`'s attachments and none of the others'. Each rung
/// path becomes the branch set of its subdivision vertex.
pub fn rope_to_skinny_model(g: &Graph, w: &RopeLadder) -> Result<InducedMinorModel, Vec<Violation>> {
    let violations = w.validate(g);
    if !violations.is_empty() {
        return Err(violations);
    }
    let k = w.k();
    if k == 0 {
        return Err(vec![Violation::new("rope ladder has at least one rung", Vec::new())]);
    }
    let [first, second] = w.attachments(g);
    let segments = |rail: &PathSeq, sets: &[Vec<Vertex>]| -> Vec<VertexSet> {
        let last_pos: Vec<usize> =
            sets.iter().map(|s| s.iter().filter_map(|&v| rail.position(v)).max().expect("attached")).collect();
        (0..k)
            .map(|i| {
                let start = if i == 0 { 0 } else { last_pos[i - 1] + 1 };
                let end = if i + 1 == k { rail.len() - 1 } else { last_pos[i] };
                rail.vertices()[start..=end].iter().copied().collect()
            })
            .collect()
    };
    let mut branch_sets = segments(&w.p1, &first);
    branch_sets.extend(segments(&w.p2, &second));
    branch_sets.extend(w.rungs.iter().map(|r| r.vertex_set()));
    let model = InducedMinorModel::new(families::skinny_ladder(k), branch_sets);
    let violations = model.validate(g);
    if violations.is_empty() {
        Ok(model)
    } else {
        Err(violations)
    }
}

/// Where the pipeline starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineStart {
    /// Search a bramble and derive everything from it.
    Full,
    /// Start from two non-adjacent induced paths.
    Rails { p1: PathSeq, p2: PathSeq },
    /// Start from a shuffled rope ladder and only clean.
    Shuffled(ShuffledRopeLadder),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub start: PipelineStart,
    /// Separator target for the rails; defaults to `η(ν(k, d), d)`.
    pub eta: Option<usize>,
    /// Rung count for the construction; defaults to `ν(k, d)`.
    pub ell: Option<usize>,
    pub budget: SearchBudget,
    /// Skip the `K_{1,d}`-freeness scan.
    pub trust_free: bool,
    /// Seed for bramble sampling on larger graphs.
    pub seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            start: PipelineStart::Full,
            eta: None,
            ell: None,
            budget: SearchBudget::unlimited(),
            trust_free: false,
            seed: 0,
        }
    }
}

/// Stage names, used to report where an honest stop happened.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PipelineStage {
    Bramble,
    Rails,
    Construction,
    Cleaning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineRun {
    pub outcome: ExtractionOutcome<InducedMinorModel>,
    /// The stage that could not continue, if any.
    pub stopped_at: Option<PipelineStage>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("graph contains an induced K_1,d centred at {center} with leaves {leaves:?}")]
    NotFree { center: Vertex, leaves: Vec<Vertex> },
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("search budget exhausted")]
    Exhausted,
    #[error(transparent)]
    Rails(#[from] RailError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Clean(#[from] CleanError),
    #[error("rope ladder does not yield a skinny-ladder model: {0:?}")]
    Model(Vec<Violation>),
}

/// Largest graph on which the exact tree-independence oracle is used for
/// decompositions.
const EXACT_DECOMPOSITION_LIMIT: usize = 16;

/// A tree decomposition certifying an upper bound on the tree-independence
/// number: exact on small graphs, min-degree elimination otherwise.
fn decomposition(g: &Graph, budget: SearchBudget) -> TreeDecomposition {
    if g.n() <= EXACT_DECOMPOSITION_LIMIT {
        exact_tree_independence_number(g, budget).decomposition
    } else {
        decomposition_from_order(g, &min_degree_order(g))
    }
}

fn stop(g: &Graph, budget: SearchBudget, stage: PipelineStage) -> PipelineRun {
    PipelineRun { outcome: ExtractionOutcome::Decomposition(decomposition(g, budget)), stopped_at: Some(stage) }
}

/// The best bramble found: the majority bramble on small graphs, otherwise a
/// sampled one.
fn find_bramble(g: &Graph, seed: u64) -> StrongBramble {
    if g.n() <= 12 {
        majority_bramble(g)
    } else {
        sample_strong_bramble(g, 4 * g.n(), &mut ChaCha8Rng::seed_from_u64(seed))
    }
}

/// Composes the stages to find the `k`-skinny ladder as an induced minor.
/// A stage that cannot continue ends the run with a tree decomposition (or,
/// from the construction, with its separator).
pub fn skinny_ladder_pipeline(
    g: &Graph,
    k: usize,
    d: usize,
    config: &PipelineConfig,
) -> Result<PipelineRun, PipelineError> {
    if k == 0 || d < 2 {
        return Err(PipelineError::InvalidParameters("k must be at least 1 and d at least 2"));
    }
    if !config.trust_free {
        if let Some((center, leaves)) = find_induced_star(g, d) {
            return Err(PipelineError::NotFree { center, leaves });
        }
    }
    let ell = match config.ell {
        Some(l) => l,
        None => nu(k as u64, d as u64).ok().and_then(|b| b.to_usize()).unwrap_or(usize::MAX),
    };
    let eta = match config.eta {
        Some(e) => e,
        None => nu(k as u64, d as u64)
            .and_then(|b| eta_bound(&b, d as u64))
            .ok()
            .and_then(|b| b.to_usize())
            .unwrap_or(usize::MAX),
    };
    let shuffled = match &config.start {
        PipelineStart::Shuffled(w) => w.clone(),
        start => {
            let (p1, p2) = match start {
                PipelineStart::Rails { p1, p2 } => (p1.clone(), p2.clone()),
                _ => {
                    let b = find_bramble(g, config.seed);
                    if b.is_empty() {
                        return Ok(stop(g, config.budget, PipelineStage::Bramble));
                    }
                    let q = dominating_path(g, &b, config.budget)?;
                    let q = extend_induced_path(g, &extend_induced_path(g, &q).reversed());
                    match split_rails_two_paths(g, &b, &q, eta, d, config.budget)? {
                        RailOutcome::Split { rails, .. } => rails,
                        RailOutcome::Failure { .. } => return Ok(stop(g, config.budget, PipelineStage::Rails)),
                    }
                }
            };
            let valid = |p: &PathSeq| {
                !p.is_empty() && p.vertices().iter().all(|&v| v < g.n()) && p.is_path(g) && p.is_induced(g)
            };
            if !valid(&p1) || !valid(&p2) || !are_nonadjacent(g, &p1.vertex_set(), &p2.vertex_set()).unwrap_or(false) {
                return Err(PipelineError::InvalidParameters("rails must be non-adjacent induced paths"));
            }
            let built = build_h_rope_ladder(g, &p2.vertex_set(), None, &p1, ell)?;
            match built.outcome {
                ExtractionOutcome::Witness(w) => ShuffledRopeLadder { p1: p2, p2: w.p, rungs: w.rungs },
                ExtractionOutcome::Failure { separator, alpha, step } => {
                    return Ok(PipelineRun {
                        outcome: ExtractionOutcome::Failure { separator, alpha, step },
                        stopped_at: Some(PipelineStage::Construction),
                    })
                }
                ExtractionOutcome::Decomposition(t) => {
                    return Ok(PipelineRun {
                        outcome: ExtractionOutcome::Decomposition(t),
                        stopped_at: Some(PipelineStage::Construction),
                    })
                }
            }
        }
    };
    let ladder = match clean_shuffled_rope_ladder(g, &shuffled, k, d)? {
        CleanOutcome::RopeLadder(l) => l,
        CleanOutcome::Failure { .. } => return Ok(stop(g, config.budget, PipelineStage::Cleaning)),
    };
    let model = rope_to_skinny_model(g, &ladder).map_err(PipelineError::Model)?;
    Ok(PipelineRun { outcome: ExtractionOutcome::Witness(model), stopped_at: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rails of `k * gap` vertices; rung `i` is a path of `len` vertices
    /// joining position `i * gap` of both rails.
    fn rope(k: usize, gap: usize, len: usize) -> (Graph, RopeLadder) {
        let m = k * gap;
        let mut edges = Vec::new();
        for i in 0..m - 1 {
            edges.push((i, i + 1));
            edges.push((m + i, m + i + 1));
        }
        let mut rungs = Vec::new();
        for i in 0..k {
            let base = 2 * m + i * len;
            let r: Vec<Vertex> = (base..base + len).collect();
            edges.extend(r.windows(2).map(|w| (w[0], w[1])));
            edges.push((i * gap, r[0]));
            edges.push((m + i * gap, r[len - 1]));
            rungs.push(PathSeq::new(r));
        }
        let g = Graph::from_edges(2 * m + k * len, edges).unwrap();
        let w = RopeLadder { p1: PathSeq::new((0..m).collect()), p2: PathSeq::new((m..2 * m).collect()), rungs };
        (g, w)
    }

    #[test]
    fn skinny_ladder_models_itself() {
        for k in 1..=5 {
            let g = families::skinny_ladder(k);
            let w = RopeLadder {
                p1: PathSeq::new((0..k).collect()),
                p2: PathSeq::new((k..2 * k).collect()),
                rungs: (2 * k..3 * k).map(PathSeq::single).collect(),
            };
            let model = rope_to_skinny_model(&g, &w).unwrap();
            let singletons: Vec<VertexSet> = (0..3 * k).map(VertexSet::singleton).collect();
            assert_eq!(model.branch_sets, singletons);
        }
    }

    #[test]
    fn long_rope_ladders_give_valid_models() {
        for (k, gap, len) in [(1, 1, 1), (2, 3, 2), (3, 2, 4), (4, 5, 1)] {
            let (g, w) = rope(k, gap, len);
            let model = rope_to_skinny_model(&g, &w).unwrap();
            assert!(model.validate(&g).is_empty());
            assert_eq!(model.support().len(), g.n());
        }
    }

    #[test]
    fn broken_rope_ladder_is_rejected() {
        let (g, mut w) = rope(2, 2, 2);
        w.rungs.swap(0, 1);
        assert!(rope_to_skinny_model(&g, &w).is_err());
    }

    fn run(g: &Graph, k: usize, d: usize, config: PipelineConfig) -> PipelineRun {
        skinny_ladder_pipeline(g, k, d, &config).unwrap()
    }

    #[test]
    fn pipeline_from_rails_finds_the_ladder() {
        let (g, w) = rope(3, 3, 2);
        let config = PipelineConfig {
            start: PipelineStart::Rails { p1: w.p1.clone(), p2: w.p2.clone() },
            ell: Some(3),
            ..PipelineConfig::default()
        };
        let r = run(&g, 3, 4, config);
        assert_eq!(r.stopped_at, None);
        let ExtractionOutcome::Witness(model) = r.outcome else { panic!("expected a model") };
        assert!(model.validate(&g).is_empty());
        assert_eq!(model.pattern, families::skinny_ladder(3));
    }

    #[test]
    fn pipeline_from_shuffled_only_cleans() {
        let (g, w) = rope(4, 2, 1);
        let shuffled = ShuffledRopeLadder { p1: w.p1, p2: w.p2, rungs: w.rungs.into_iter().rev().collect() };
        let config = PipelineConfig { start: PipelineStart::Shuffled(shuffled), ..PipelineConfig::default() };
        let r = run(&g, 2, 4, config);
        let ExtractionOutcome::Witness(model) = r.outcome else { panic!("expected a model") };
        assert!(model.validate(&g).is_empty());
    }

    #[test]
    fn small_width_graphs_get_decompositions() {
        for g in [families::path(10), families::complete(6), families::cycle(9)] {
            let r = run(&g, 2, 3, PipelineConfig::default());
            assert_eq!(r.stopped_at, Some(PipelineStage::Rails));
            let ExtractionOutcome::Decomposition(t) = r.outcome else { panic!("expected a decomposition") };
            assert!(t.validate(&g).is_empty());
            assert!(t.independence(&g) <= 2);
        }
    }

    #[test]
    fn claws_are_refused() {
        let g = families::tripod(2);
        let err = skinny_ladder_pipeline(&g, 2, 3, &PipelineConfig::default()).unwrap_err();
        assert!(matches!(err, PipelineError::NotFree { center: 0, .. }));
        let trusted = PipelineConfig { trust_free: true, ..PipelineConfig::default() };
        assert!(skinny_ladder_pipeline(&g, 2, 3, &trusted).is_ok());
    }

    #[test]
    fn full_pipeline_with_small_overrides_is_sound() {
        for k in 2..=6 {
            let (g, _) = rope(k, 2, 2);
            let g = if k > 4 { families::grid(k, k) } else { g };
            let config = PipelineConfig { eta: Some(1), ell: Some(2), ..PipelineConfig::default() };
            let r = run(&g, 2, 5, config);
            match r.outcome {
                ExtractionOutcome::Witness(m) => assert!(m.validate(&g).is_empty()),
                ExtractionOutcome::Decomposition(t) => assert!(t.validate(&g).is_empty()),
                ExtractionOutcome::Failure { separator, alpha, .. } => {
                    assert_eq!(crate::oracles::alpha(&g, &separator).unwrap(), alpha)
                }
            }
        }
    }
}
