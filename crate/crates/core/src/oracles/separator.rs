//! Separators of minimum independence number.

use std::collections::{BTreeSet, VecDeque};

use super::alpha::alpha;
use super::{Exhausted, SearchBudget};
use crate::graph::{is_separator, Graph, Vertex, VertexSet};

/// How candidate separators are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparatorMode {
    /// Every vertex subset (graphs with at most 20 vertices).
    Exhaustive,
    /// Inclusion-minimal separators only; α is monotone, so a minimum is
    /// always attained by one of them.
    MinimalSeparators,
    /// Exhaustive up to 16 vertices, minimal separators beyond.
    Auto,
}

/// A separator between `x` and `y` minimising α, together with its α.
///
/// Separators may meet `x` or `y`; when no `x`–`y` path exists the empty set
/// is returned.
pub fn min_alpha_separator(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    mode: SeparatorMode,
    budget: SearchBudget,
) -> Result<(VertexSet, usize), Exhausted> {
    if is_separator(g, &VertexSet::new(), x, y) {
        return Ok((VertexSet::new(), 0));
    }
    let exhaustive = match mode {
        SeparatorMode::Exhaustive => true,
        SeparatorMode::MinimalSeparators => false,
        SeparatorMode::Auto => g.n() <= 16,
    };
    if exhaustive {
        assert!(g.n() <= 20, "exhaustive separator search is limited to 20 vertices");
        exhaustive_search(g, x, y, budget)
    } else {
        minimal_separator_search(g, x, y, budget)
    }
}

fn exhaustive_search(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    budget: SearchBudget,
) -> Result<(VertexSet, usize), Exhausted> {
    let n = g.n();
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let xm = x.iter().fold(0u32, |m, v| m | 1 << v);
    let ym = y.iter().fold(0u32, |m, v| m | 1 << v);
    let mut meter = budget.meter();
    let mut best: Option<(usize, usize, u32)> = None;
    for s in 0u32..(1u32 << n) {
        meter.tick()?;
        let size = s.count_ones() as usize;
        let free = !s;
        let mut reach = xm & free;
        loop {
            let mut next = reach;
            let mut bits = reach;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v] & free;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach & ym != 0 {
            continue;
        }
        let set: VertexSet = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        let a = alpha(g, &set).expect("ids in range");
        let key = (a, size, s);
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    }
    let (a, _, s) = best.expect("x itself separates");
    Ok(((0..n).filter(|&v| s >> v & 1 == 1).collect(), a))
}

fn minimal_separator_search(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    budget: SearchBudget,
) -> Result<(VertexSet, usize), Exhausted> {
    let n = g.n();
    let (s, t) = (n, n + 1);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.extend(x.iter().map(|v| (s, v)));
    edges.extend(y.iter().map(|v| (t, v)));
    let h = Graph::from_edges(n + 2, edges).expect("augmented graph is simple");
    let mut meter = budget.meter();

    let component_of = |root: Vertex, blocked: &[bool]| -> Vec<bool> {
        let allowed: Vec<bool> = blocked.iter().map(|b| !b).collect();
        h.reach_from(&[root], &allowed)
    };
    let boundary = |comp: &[bool]| -> VertexSet {
        let mut out = Vec::new();
        for v in h.vertices() {
            if comp[v] {
                out.extend(h.neighbors(v).iter().copied().filter(|&w| !comp[w]));
            }
        }
        VertexSet::from(out)
    };
    // Minimal separator "close to" the side `a` of s: N(D) for D the
    // component of t in H - N[a].
    let close_to = |a: &[bool]| -> Option<VertexSet> {
        let mut blocked = a.to_vec();
        for v in h.vertices() {
            if a[v] {
                for &w in h.neighbors(v) {
                    blocked[w] = true;
                }
            }
        }
        if blocked[t] {
            return None;
        }
        Some(boundary(&component_of(t, &blocked)))
    };

    let mut start = vec![false; n + 2];
    start[s] = true;
    let first = close_to(&start).expect("x and y are connected");
    let mut seen = BTreeSet::from([first.clone()]);
    let mut queue = VecDeque::from([first]);
    let mut best: Option<(usize, usize, VertexSet)> = None;
    while let Some(sep) = queue.pop_front() {
        meter.tick()?;
        let a = alpha(g, &sep).expect("separator lies in g");
        let key = (a, sep.len(), sep.clone());
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
        let mut blocked = vec![false; n + 2];
        for v in sep.iter() {
            blocked[v] = true;
        }
        let side = component_of(s, &blocked);
        for v in sep.iter() {
            let mut grown = side.clone();
            grown[v] = true;
            if let Some(next) = close_to(&grown) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let (a, _, sep) = best.expect("at least one separator");
    Ok((sep, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn disconnected_sides() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = min_alpha_separator(&g, &set(&[0]), &set(&[3]), SeparatorMode::Auto, SearchBudget::unlimited());
        assert_eq!(r.unwrap(), (VertexSet::new(), 0));
    }

    #[test]
    fn path_cut_vertex() {
        let g = Graph::from_edges(5, (1..5).map(|i| (i - 1, i))).unwrap();
        for mode in [SeparatorMode::Exhaustive, SeparatorMode::MinimalSeparators] {
            let (s, a) = min_alpha_separator(&g, &set(&[0]), &set(&[4]), mode, SearchBudget::unlimited()).unwrap();
            assert_eq!(a, 1);
            assert!(is_separator(&g, &s, &set(&[0]), &set(&[4])));
        }
    }

    #[test]
    fn modes_agree_on_cycles_with_chords() {
        let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.push((0, 4));
        edges.push((2, 7));
        let g = Graph::from_edges(9, edges).unwrap();
        let x = set(&[0, 1]);
        let y = set(&[5]);
        let a = min_alpha_separator(&g, &x, &y, SeparatorMode::Exhaustive, SearchBudget::unlimited()).unwrap();
        let b = min_alpha_separator(&g, &x, &y, SeparatorMode::MinimalSeparators, SearchBudget::unlimited()).unwrap();
        assert_eq!(a.1, b.1);
    }
}
