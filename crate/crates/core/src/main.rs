use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ladders::derived::{
    ep_decompose, extract_theta_or_prism, extract_tripod_or_line, extract_wheel_model, EPResult, LongCase, LongShape,
};
use ladders::extraction::{
    build_h_rope_ladder, clean_shuffled_rope_ladder, eta, nu, rho, skinny_ladder_pipeline, tau, CleanOutcome,
    ExtractionOutcome, PipelineConfig,
};
use ladders::genio::{
    gen_clique_with_pendants, gen_cycle_rope_ladder, gen_ladder, gen_line_tripod, gen_pendant_path, gen_prism,
    gen_random_k1d_free, gen_rope_ladder, gen_shuffled_rope_ladder, gen_skinny_ladder, gen_theta, gen_tripod,
    gen_wheel, parse_edge_list, parse_graph_json, to_edge_list, to_graph_json, CycleLayout, ShuffledLayout, Witness,
    WitnessDoc,
};
use ladders::graph::{CycleSeq, Graph, PathSeq, Vertex, VertexSet};
use ladders::oracles::{
    alpha_within, decomposition_from_order, exact_tree_independence_number, induced_minor_model_search,
    induced_subgraph_search, min_alpha_separator, min_degree_order, Search, SearchBudget, SeparatorMode,
};
use ladders::witnesses::{InducedMinorModel, InducedSubgraphWitness, JunctionType, TreeDecomposition};

/// `println!` that tolerates a closed standard output.
macro_rules! say {
    ($($arg:tt)*) => {
        let _ = writeln!(std::io::stdout(), $($arg)*);
    };
}

#[derive(Parser)]
#[command(name = "ladders", version, about = "Ladder-like induced structures in K_1,d-free graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for every randomized step.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Step limit per oracle call.
    #[arg(long, global = true)]
    budget_steps: Option<u64>,
    /// Wall-clock limit per oracle call, in seconds.
    #[arg(long, global = true)]
    budget_secs: Option<f64>,
    /// Skip the K_1,d-freeness scan.
    #[arg(long, global = true)]
    trust_free: bool,
}

impl Common {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget { max_steps: self.budget_steps, wall_limit: None };
        if let Some(s) = self.budget_secs {
            b = b.with_wall_limit(Duration::from_secs_f64(s.max(0.0)));
        }
        b
    }

    fn seed(&self) -> Result<u64, Failure> {
        self.seed.ok_or(Failure::Usage("this command is randomized and needs --seed".into()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and, optionally, its witness.
    Gen(GenArgs),
    /// Check a witness against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Exact brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Extraction procedures on a graph and a witness.
    #[command(subcommand)]
    Extract(ExtractCmd),
    /// Exact values of the bound functions.
    Bounds { which: BoundKind, k: u64, d: u64 },
    /// Packing of pairwise non-adjacent copies of a pattern, or a deletion set.
    EpDecompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(short)]
        k: usize,
        /// Tree decomposition witness; computed when absent.
        #[arg(long)]
        decomposition: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Graph output; standard output when absent.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Witness output.
    #[arg(long, global = true)]
    witness: Option<PathBuf>,
    /// Write the 1-indexed edge-list format instead of JSON.
    #[arg(long, global = true)]
    edge_list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum JunctionArg {
    One,
    Two,
    Three,
}

impl From<JunctionArg> for JunctionType {
    fn from(j: JunctionArg) -> Self {
        match j {
            JunctionArg::One => JunctionType::One,
            JunctionArg::Two => JunctionType::Two,
            JunctionArg::Three => JunctionType::Three,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    SingleOne,
    SingleTwo,
    SingleThree,
    SplitOne,
    SplitThree,
    Alternating,
}

impl From<CaseArg> for LongCase {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::SingleOne => LongCase::SingleOne,
            CaseArg::SingleTwo => LongCase::SingleTwo,
            CaseArg::SingleThree => LongCase::SingleThree,
            CaseArg::SplitOne => LongCase::SplitOne,
            CaseArg::SplitThree => LongCase::SplitThree,
            CaseArg::Alternating => LongCase::Alternating,
        }
    }
}

#[derive(Subcommand)]
enum Family {
    /// The k-ladder.
    Ladder { k: usize },
    /// The k-skinny ladder: every rung subdivided once.
    SkinnyLadder { k: usize },
    /// A K_1,3-free k-rope ladder with rungs of one to three vertices.
    RopeLadder { k: usize },
    /// Random permutation, rung lengths and junctions.
    ShuffledRopeLadder {
        k: usize,
        #[arg(short, default_value_t = 4)]
        d: usize,
    },
    /// Uniform junction plan, or a planted theta/prism case with `--case`.
    CycleRopeLadder {
        k: usize,
        #[arg(short, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        spacing: usize,
        #[arg(long, value_enum, default_value_t = JunctionArg::Two)]
        junction: JunctionArg,
        #[arg(long, value_enum)]
        case: Option<CaseArg>,
    },
    /// A theta with paths of the given lengths, each at least max(2, k).
    Theta {
        k: usize,
        #[arg(num_args = 3, required = true)]
        lengths: Vec<usize>,
    },
    /// A prism with paths of the given lengths, each at least max(1, k).
    Prism {
        k: usize,
        #[arg(num_args = 3, required = true)]
        lengths: Vec<usize>,
    },
    /// The wheel W_l: a cycle of length l and a hub.
    Wheel { l: usize },
    /// The long tripod S_p.
    Tripod { p: usize },
    /// The line graph T_p of the long tripod.
    LineTripod { p: usize },
    /// K_n with one pendant vertex per clique vertex.
    CliqueWithPendants { n: usize },
    /// A random graph made K_1,d-free by joining leaves of induced stars.
    RandomK1dFree { n: usize, d: usize, density: f64 },
    /// An induced path with `points` pendants, no two sharing a path vertex.
    PendantPath { points: usize },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Independence number of the graph or of `--set`.
    Alpha {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<Vertex>>,
    },
    /// Exact tree-independence number with an optimal decomposition.
    Atw {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Separator between `--x` and `--y` of least independence number.
    Separator {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<Vertex>,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<Vertex>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
    },
    /// An induced-minor model of `--pattern`, or absent.
    InducedMinor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// An induced copy of `--pattern`, or absent.
    InducedSubgraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Exhaustive,
    Minimal,
}

#[derive(Subcommand)]
enum ExtractCmd {
    /// A k-rope ladder from a shuffled rope ladder witness.
    Clean {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// An l-H-rope ladder with rail `--h` (or the cycle `--cycle`) and path `--path`.
    RopeLadder {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<Vertex>>,
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<Vertex>>,
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<Vertex>,
        #[arg(short)]
        l: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The full pipeline towards a k-skinny ladder induced minor.
    SkinnyLadder {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        d: usize,
        /// Override the separator target of the rails stage.
        #[arg(long)]
        eta: Option<usize>,
        /// Override the rung count of the construction stage.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// W_l from a path `--path` and an induced cycle `--cycle`.
    Wheel {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        path: Vec<Vertex>,
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<Vertex>,
        #[arg(short)]
        l: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A k-long theta or prism from a cycle rope ladder witness.
    ThetaPrism {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// S_p or T_p from a rope ladder witness with at least 2p+1 rungs.
    Tripod {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        #[arg(short)]
        p: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Rho,
    Nu,
    Eta,
    Tau,
}

/// Reasons to stop with a nonzero exit code.
enum Failure {
    Usage(String),
    Negative(serde_json::Value),
    Inconclusive(String),
}

impl Failure {
    fn io(path: &Path, e: impl std::fmt::Display) -> Self {
        Failure::Usage(format!("{}: {e}", path.display()))
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

/// JSON when the text opens with `{`, the edge-list format otherwise.
fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    let parsed = if text.trim_start().starts_with('{') { parse_graph_json(&text) } else { parse_edge_list(&text) };
    parsed.map_err(|e| Failure::io(path, e))
}

fn read_witness(path: &Path) -> Result<Witness, Failure> {
    WitnessDoc::from_json(&read(path)?).map(|d| d.witness).map_err(|e| Failure::io(path, e))
}

fn emit(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::io(path, e)),
        None => {
            say!("{text}");
            Ok(())
        }
    }
}

fn emit_witness(output: Option<&Path>, w: Witness) -> Outcome {
    emit(output, &WitnessDoc::new(w).to_json())
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn gen(args: &GenArgs, common: &Common) -> Outcome {
    let (g, w): (Graph, Option<Witness>) = match &args.family {
        Family::Ladder { k } => gen_ladder(*k).map(|(g, w)| (g, Some(Witness::InducedMinorModel(w)))),
        Family::SkinnyLadder { k } => gen_skinny_ladder(*k).map(|(g, w)| (g, Some(Witness::RopeLadder(w)))),
        Family::RopeLadder { k } => gen_rope_ladder(*k).map(|(g, w)| (g, Some(Witness::RopeLadder(w)))),
        Family::ShuffledRopeLadder { k, d } => {
            gen_shuffled_rope_ladder(&ShuffledLayout::random(*k, *d, common.seed()?))
                .map(|(g, w)| (g, Some(Witness::ShuffledRopeLadder(w))))
        }
        Family::CycleRopeLadder { k, d, spacing, junction, case } => {
            let seed = common.seed()?;
            let layout = match case {
                Some(c) => CycleLayout::long_case((*c).into(), seed),
                None => CycleLayout::uniform(*k, *d, *spacing, (*junction).into(), seed),
            };
            gen_cycle_rope_ladder(&layout).map(|(g, w)| (g, Some(Witness::HRopeLadder(w))))
        }
        Family::Theta { k, lengths } => {
            gen_theta(*k, [lengths[0], lengths[1], lengths[2]]).map(|(g, w)| (g, Some(Witness::Theta(w))))
        }
        Family::Prism { k, lengths } => {
            gen_prism(*k, [lengths[0], lengths[1], lengths[2]]).map(|(g, w)| (g, Some(Witness::Prism(w))))
        }
        Family::Wheel { l } => gen_wheel(*l).map(|(g, w)| (g, Some(Witness::InducedMinorModel(w)))),
        Family::Tripod { p } => gen_tripod(*p).map(|(g, w)| (g, Some(Witness::InducedSubgraph(w)))),
        Family::LineTripod { p } => gen_line_tripod(*p).map(|(g, w)| (g, Some(Witness::InducedSubgraph(w)))),
        Family::CliqueWithPendants { n } => Ok((gen_clique_with_pendants(*n), None)),
        Family::RandomK1dFree { n, d, density } => {
            gen_random_k1d_free(*n, *d, *density, common.seed()?).map(|g| (g, None))
        }
        Family::PendantPath { points } => Ok((gen_pendant_path(*points, common.seed()?).graph, None)),
    }
    .map_err(usage)?;
    let text = if args.edge_list { to_edge_list(&g) } else { to_graph_json(&g) };
    emit(args.output.as_deref(), text.trim_end())?;
    match (&args.witness, w) {
        (Some(path), Some(w)) => emit_witness(Some(path), w),
        (Some(_), None) => Err(Failure::Usage("this family has no witness".into())),
        _ => Ok(()),
    }
}

fn search_result<T>(s: Search<T>, found: impl FnOnce(T) -> Outcome) -> Outcome {
    match s {
        Search::Found(t) => found(t),
        Search::Absent => Err(Failure::Negative(json!({ "result": "absent" }))),
        Search::Inconclusive => Err(Failure::Inconclusive("search budget exhausted".into())),
    }
}

fn oracle(cmd: &OracleCmd, common: &Common) -> Outcome {
    let budget = common.budget();
    match cmd {
        OracleCmd::Alpha { graph, set } => {
            let g = read_graph(graph)?;
            let x = set.as_ref().map_or_else(|| VertexSet::full(g.n()), |s| s.iter().copied().collect());
            let b = alpha_within(&g, &x, budget).map_err(usage)?;
            say!("{}", json!({ "alpha": b.value, "exact": b.exact }));
            if b.exact {
                Ok(())
            } else {
                Err(Failure::Inconclusive("value is a lower bound".into()))
            }
        }
        OracleCmd::Atw { graph, output } => {
            let g = read_graph(graph)?;
            if g.n() > 20 {
                return Err(Failure::Usage("exact atw is limited to 20 vertices".into()));
            }
            let t = exact_tree_independence_number(&g, budget);
            say!("{}", json!({ "atw": t.value, "exact": t.exact }));
            if let Some(path) = output {
                emit_witness(Some(path), Witness::TreeDecomposition(t.decomposition))?;
            }
            if t.exact {
                Ok(())
            } else {
                Err(Failure::Inconclusive("value is an upper bound".into()))
            }
        }
        OracleCmd::Separator { graph, x, y, mode } => {
            let g = read_graph(graph)?;
            let (x, y): (VertexSet, VertexSet) = (x.iter().copied().collect(), y.iter().copied().collect());
            g.check_set(&x.union(&y)).map_err(usage)?;
            let mode = match mode {
                ModeArg::Auto => SeparatorMode::Auto,
                ModeArg::Exhaustive => SeparatorMode::Exhaustive,
                ModeArg::Minimal => SeparatorMode::MinimalSeparators,
            };
            let (s, alpha) = min_alpha_separator(&g, &x, &y, mode, budget)
                .map_err(|_| Failure::Inconclusive("search budget exhausted".into()))?;
            say!("{}", json!({ "separator": s, "alpha": alpha }));
            Ok(())
        }
        OracleCmd::InducedMinor { graph, pattern, output } => {
            let (g, h) = (read_graph(graph)?, read_graph(pattern)?);
            search_result(induced_minor_model_search(&h, &g, budget), |sets| {
                emit_witness(output.as_deref(), Witness::InducedMinorModel(InducedMinorModel::new(h.clone(), sets)))
            })
        }
        OracleCmd::InducedSubgraph { graph, pattern, output } => {
            let (g, h) = (read_graph(graph)?, read_graph(pattern)?);
            search_result(induced_subgraph_search(&h, &g, budget), |map| {
                emit_witness(output.as_deref(), Witness::InducedSubgraph(InducedSubgraphWitness::new(h.clone(), map)))
            })
        }
    }
}

fn negative_outcome<W>(outcome: ExtractionOutcome<W>, found: impl FnOnce(W) -> Outcome) -> Outcome {
    match outcome {
        ExtractionOutcome::Witness(w) => found(w),
        ExtractionOutcome::Decomposition(td) => Err(Failure::Negative(json!({
            "result": "decomposition",
            "witness": serde_json::to_value(WitnessDoc::new(Witness::TreeDecomposition(td))).expect("serializes"),
        }))),
        ExtractionOutcome::Failure { separator, alpha, step } => Err(Failure::Negative(
            json!({ "result": "separator", "separator": separator, "alpha": alpha, "step": step }),
        )),
    }
}

fn extract(cmd: &ExtractCmd, common: &Common) -> Outcome {
    match cmd {
        ExtractCmd::Clean { graph, witness, k, d, output } => {
            let g = read_graph(graph)?;
            let w = match read_witness(witness)? {
                Witness::ShuffledRopeLadder(w) => w,
                Witness::RopeLadder(w) => w.as_shuffled(),
                _ => return Err(Failure::Usage("expected a shuffled rope ladder witness".into())),
            };
            match clean_shuffled_rope_ladder(&g, &w, *k, *d).map_err(usage)? {
                CleanOutcome::RopeLadder(r) => emit_witness(output.as_deref(), Witness::RopeLadder(r)),
                CleanOutcome::Failure { stage, available } => Err(Failure::Negative(
                    json!({ "result": "failure", "stage": format!("{stage:?}"), "available": available }),
                )),
            }
        }
        ExtractCmd::RopeLadder { graph, h, cycle, path, l, output } => {
            let g = read_graph(graph)?;
            let cycle = cycle.clone().map(CycleSeq::new);
            let h: VertexSet = match (h, &cycle) {
                (Some(h), _) => h.iter().copied().collect(),
                (None, Some(c)) => c.vertex_set(),
                (None, None) => return Err(Failure::Usage("give --h or --cycle".into())),
            };
            let run = build_h_rope_ladder(&g, &h, cycle.as_ref(), &PathSeq::new(path.clone()), *l).map_err(usage)?;
            negative_outcome(run.outcome, |w| emit_witness(output.as_deref(), Witness::HRopeLadder(w)))
        }
        ExtractCmd::SkinnyLadder { graph, k, d, eta, ell, output } => {
            let g = read_graph(graph)?;
            let config = PipelineConfig {
                eta: *eta,
                ell: *ell,
                budget: common.budget(),
                trust_free: common.trust_free,
                seed: common.seed()?,
                ..PipelineConfig::default()
            };
            let run = skinny_ladder_pipeline(&g, *k, *d, &config).map_err(usage)?;
            if let Some(stage) = run.stopped_at {
                eprintln!("stopped at {stage:?}");
            }
            negative_outcome(run.outcome, |m| emit_witness(output.as_deref(), Witness::InducedMinorModel(m)))
        }
        ExtractCmd::Wheel { graph, path, cycle, l, output } => {
            let g = read_graph(graph)?;
            let m = extract_wheel_model(&g, &PathSeq::new(path.clone()), &CycleSeq::new(cycle.clone()), *l)
                .map_err(|e| Failure::Negative(json!({ "result": "failure", "reason": e.to_string() })))?;
            emit_witness(output.as_deref(), Witness::InducedMinorModel(m))
        }
        ExtractCmd::ThetaPrism { graph, witness, k, d, output } => {
            let g = read_graph(graph)?;
            let Witness::HRopeLadder(w) = read_witness(witness)? else {
                return Err(Failure::Usage("expected an h_rope_ladder witness".into()));
            };
            let found = extract_theta_or_prism(&g, &w, *k, *d)
                .map_err(|e| Failure::Negative(json!({ "result": "failure", "reason": e.to_string() })))?;
            eprintln!("case {:?}, rungs {:?}", found.case, found.rungs);
            let w = match found.shape {
                LongShape::Theta(t) => Witness::Theta(t),
                LongShape::Prism(p) => Witness::Prism(p),
            };
            emit(output.as_deref(), &WitnessDoc::new(w).with_params(Some(*k), Some(*d)).to_json())
        }
        ExtractCmd::Tripod { graph, witness, p, output } => {
            let g = read_graph(graph)?;
            let Witness::RopeLadder(w) = read_witness(witness)? else {
                return Err(Failure::Usage("expected a rope_ladder witness".into()));
            };
            let t = extract_tripod_or_line(&g, &w, *p)
                .map_err(|e| Failure::Negative(json!({ "result": "failure", "reason": e.to_string() })))?;
            eprintln!("{:?} from a {:?} junction", t.kind, t.junction);
            emit_witness(output.as_deref(), Witness::InducedSubgraph(t.subgraph))
        }
    }
}

fn ep(
    graph: &Path,
    pattern: &Path,
    k: usize,
    decomposition: Option<&Path>,
    output: Option<&Path>,
    common: &Common,
) -> Outcome {
    let (g, h) = (read_graph(graph)?, read_graph(pattern)?);
    let td: TreeDecomposition = match decomposition {
        Some(path) => match read_witness(path)? {
            Witness::TreeDecomposition(td) => td,
            _ => return Err(Failure::Usage("expected a tree_decomposition witness".into())),
        },
        None if g.n() <= 16 => exact_tree_independence_number(&g, common.budget()).decomposition,
        None => decomposition_from_order(&g, &min_degree_order(&g)),
    };
    let result = ep_decompose(&g, &h, &td, k, common.budget()).map_err(|e| match e {
        ladders::derived::EPError::Exhausted => Failure::Inconclusive(e.to_string()),
        e => usage(e),
    })?;
    match result {
        EPResult::Packing(models) => {
            let docs: Vec<WitnessDoc> =
                models.into_iter().map(|m| WitnessDoc::new(Witness::InducedMinorModel(m))).collect();
            emit(output, &serde_json::to_string_pretty(&json!({ "packing": docs })).expect("serializes"))
        }
        EPResult::HittingSet { set, bound } => {
            Err(Failure::Negative(json!({ "result": "hitting_set", "set": set, "bound": bound })))
        }
    }
}

fn bounds(which: BoundKind, k: u64, d: u64) -> Outcome {
    let b = match which {
        BoundKind::Rho => rho(k, d),
        BoundKind::Nu => nu(k, d),
        BoundKind::Eta => eta(k, d),
        BoundKind::Tau => tau(k, d),
    }
    .map_err(usage)?;
    say!("{b}");
    Ok(())
}

fn validate(graph: &Path, witness: &Path) -> Outcome {
    let g = read_graph(graph)?;
    let violations = read_witness(witness)?.validate(&g);
    if violations.is_empty() {
        say!("ok");
        Ok(())
    } else {
        Err(Failure::Negative(json!({ "violations": violations })))
    }
}

fn run(cli: &Cli) -> Outcome {
    let common = &cli.common;
    match &cli.command {
        Command::Gen(args) => gen(args, common),
        Command::Validate { graph, witness } => validate(graph, witness),
        Command::Oracle(cmd) => oracle(cmd, common),
        Command::Extract(cmd) => extract(cmd, common),
        Command::Bounds { which, k, d } => bounds(*which, *k, *d),
        Command::EpDecompose { graph, pattern, k, decomposition, output } => {
            ep(graph, pattern, *k, decomposition.as_deref(), output.as_deref(), common)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Negative(report)) => {
            say!("{report}");
            ExitCode::from(2)
        }
        Err(Failure::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(3)
        }
    }
}
