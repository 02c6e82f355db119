use proptest::prelude::*;

use ladders::extraction::erdos_szekeres;
use ladders::genio::{
    gen_cycle_rope_ladder, gen_random_k1d_free, gen_shuffled_rope_ladder, CycleLayout, ShuffledLayout, Witness,
    WitnessDoc,
};
use ladders::graph::{contract_set, shortest_path_through, Graph, Vertex, VertexSet};
use ladders::oracles::{
    alpha, exact_tree_independence_number, induced_minor_model_search, induced_subgraph_search, is_k1d_free,
    SearchBudget,
};
use ladders::witnesses::{InducedMinorModel, JunctionType};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn subset(n: usize, bits: &[bool]) -> VertexSet {
    (0..n).filter(|&v| bits[v]).collect()
}

/// Length in vertices of a shortest `x`-`y` path with interior in
/// `z \ (x ∪ y)`, by exhaustive search over simple paths.
fn brute_shortest(g: &Graph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Option<usize> {
    fn walk(g: &Graph, path: &mut Vec<Vertex>, y: &VertexSet, inner: &VertexSet, best: &mut Option<usize>) {
        let last = *path.last().expect("nonempty");
        for &w in g.neighbors(last) {
            if path.contains(&w) {
                continue;
            }
            if y.contains(w) {
                *best = Some(best.map_or(path.len() + 1, |b| b.min(path.len() + 1)));
            } else if inner.contains(w) {
                path.push(w);
                walk(g, path, y, inner, best);
                path.pop();
            }
        }
    }
    let inner = z.difference(&x.union(y));
    let mut best = None;
    for s in x.iter() {
        if y.contains(s) {
            return Some(1);
        }
        walk(g, &mut vec![s], y, &inner, &mut best);
    }
    best
}

/// `g` with the connected set containing `seed` and up to one neighbour
/// contracted, then `drop` deleted if it survives; with its model in `g`.
fn shrink(g: &Graph, seed: Vertex, drop: Vertex) -> (Graph, InducedMinorModel) {
    let x: VertexSet = std::iter::once(seed).chain(g.neighbors(seed).first().copied()).collect();
    let c = contract_set(g, &x).unwrap();
    let mut branch: Vec<Vec<Vertex>> = vec![Vec::new(); c.graph.n()];
    for v in g.vertices() {
        branch[c.map[v]].push(v);
    }
    let gone = c.map[drop];
    let keep: VertexSet =
        if c.graph.n() > 1 { c.graph.vertices().filter(|&v| v != gone).collect() } else { VertexSet::full(1) };
    let (smaller, old) = c.graph.induced_subgraph(&keep);
    let sets = old.iter().map(|&v| branch[v].iter().copied().collect()).collect();
    (smaller.clone(), InducedMinorModel::new(smaller, sets))
}

fn compose(outer: &InducedMinorModel, inner: &InducedMinorModel) -> Vec<VertexSet> {
    inner
        .branch_sets
        .iter()
        .map(|b| b.iter().fold(VertexSet::new(), |acc, u| acc.union(&outer.branch_sets[u])))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_symmetric(g in graph(12)) {
        for u in g.vertices() {
            for &v in g.neighbors(u) {
                prop_assert!(g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn free_generator_output_is_symmetric_and_free(n in 1usize..20, d in 2usize..5, p in 0.0f64..0.6, seed: u64) {
        let g = gen_random_k1d_free(n, d, p, seed).unwrap();
        prop_assert!(is_k1d_free(&g, d));
        prop_assert!(g.vertices().all(|u| g.neighbors(u).iter().all(|&v| g.has_edge(v, u))));
    }

    #[test]
    fn shortest_path_through_is_shortest(
        g in graph(9),
        bits in prop::collection::vec((any::<bool>(), any::<bool>(), any::<bool>()), 9),
    ) {
        let n = g.n();
        let x = subset(n, &bits.iter().map(|b| b.0).collect::<Vec<_>>());
        let y = subset(n, &bits.iter().map(|b| b.1).collect::<Vec<_>>());
        let z = subset(n, &bits.iter().map(|b| b.2).collect::<Vec<_>>());
        let found = shortest_path_through(&g, &x, &y, &z);
        prop_assert_eq!(found.as_ref().map(|p| p.len()), brute_shortest(&g, &x, &y, &z));
        if let Some(p) = found {
            prop_assert!(p.is_path(&g) && x.contains(p.first()) && y.contains(p.last()));
        }
    }

    #[test]
    fn models_compose(g in graph(8), picks in prop::array::uniform4(0usize..64)) {
        let (g2, m2) = shrink(&g, picks[0] % g.n(), picks[1] % g.n());
        let (g1, m1) = shrink(&g2, picks[2] % g2.n(), picks[3] % g2.n());
        prop_assert!(m2.validate(&g).is_empty());
        prop_assert!(m1.validate(&g2).is_empty());
        let direct = InducedMinorModel::new(g1.clone(), compose(&m2, &m1));
        prop_assert!(direct.validate(&g).is_empty());
        prop_assert!(induced_minor_model_search(&g1, &g, SearchBudget::unlimited()).is_found());
    }

    #[test]
    fn alpha_is_monotone(g in graph(10), a in prop::collection::vec(any::<bool>(), 10), b in prop::collection::vec(any::<bool>(), 10)) {
        let small = subset(g.n(), &a);
        let large = small.union(&subset(g.n(), &b));
        let (s, l) = (alpha(&g, &small).unwrap(), alpha(&g, &large).unwrap());
        prop_assert!(s <= l && l <= large.len());
    }

    #[test]
    fn tree_independence_is_monotone_under_induced_subgraphs(g in graph(7), keep in prop::collection::vec(any::<bool>(), 7)) {
        let (sub, _) = g.induced_subgraph(&subset(g.n(), &keep));
        let whole = exact_tree_independence_number(&g, SearchBudget::unlimited());
        let part = exact_tree_independence_number(&sub, SearchBudget::unlimited());
        prop_assert!(whole.exact && part.exact);
        prop_assert!(part.value <= whole.value);
        prop_assert!(whole.decomposition.validate(&g).is_empty());
    }

    #[test]
    fn induced_subgraphs_are_induced_minors(h in graph(4), g in graph(7)) {
        let budget = SearchBudget::unlimited();
        if induced_subgraph_search(&h, &g, budget).is_found() {
            prop_assert!(induced_minor_model_search(&h, &g, budget).is_found());
        }
    }

    #[test]
    fn monotone_runs_exist_past_the_threshold(perm in (2usize..5, 2usize..5).prop_flat_map(|(a, b)| {
        (Just(a), Just(b), Just((0..(a - 1) * (b - 1) + 1).collect::<Vec<usize>>()).prop_shuffle())
    })) {
        let (a, b, seq) = perm;
        let m = erdos_szekeres(&seq, a, b).expect("long enough");
        let len = if m.increasing { a } else { b };
        prop_assert_eq!(m.indices.len(), len);
        prop_assert!(m.indices.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(m.indices.windows(2).all(|w| (seq[w[0]] < seq[w[1]]) == m.increasing));
    }

    #[test]
    fn shuffled_ladders_validate_within_the_cap(k in 1usize..25, d in 3usize..5, seed: u64) {
        let (g, w) = gen_shuffled_rope_ladder(&ShuffledLayout::random(k, d, seed)).unwrap();
        prop_assert!(w.validate(&g).is_empty());
        prop_assert!(is_k1d_free(&g, d));
        for rail in [&w.p1, &w.p2] {
            let on: VertexSet = rail.vertex_set();
            for v in g.vertices().filter(|&v| !on.contains(v)) {
                prop_assert!(g.neighbors(v).iter().filter(|&&u| on.contains(u)).count() <= 2 * (d - 1));
            }
        }
        let doc = WitnessDoc::new(Witness::ShuffledRopeLadder(w));
        let back = WitnessDoc::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn cycle_ladders_are_reproducible(k in 1usize..15, seed: u64) {
        let layout = CycleLayout::uniform(k, 3, 3, JunctionType::Two, seed);
        let (g, w) = gen_cycle_rope_ladder(&layout).unwrap();
        prop_assert!(w.validate(&g).is_empty());
        let (again, w_again) = gen_cycle_rope_ladder(&CycleLayout::uniform(k, 3, 3, JunctionType::Two, seed)).unwrap();
        prop_assert_eq!(g, again);
        prop_assert_eq!(w, w_again);
    }
}
