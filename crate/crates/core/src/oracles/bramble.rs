//! Strong brambles: α-order by hitting-set search, and constructions.

use rand::seq::SliceRandom;
use rand::Rng;

use super::alpha::alpha;
use super::{Exhausted, Meter, SearchBudget};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::witnesses::StrongBramble;

/// Minimum α over sets meeting every member of `b`.
///
/// Branches on the smallest unhit member, excluding earlier branch vertices
/// from later branches, and prunes on the α of the partial hitting set.
pub fn bramble_alpha_order(g: &Graph, b: &StrongBramble, budget: SearchBudget) -> Result<usize, Exhausted> {
    bramble_hitting_set(g, b, budget).map(|(_, a)| a)
}

/// A hitting set of minimum α together with its α.
pub fn bramble_hitting_set(
    g: &Graph,
    b: &StrongBramble,
    budget: SearchBudget,
) -> Result<(VertexSet, usize), Exhausted> {
    let sets: Vec<&VertexSet> = b.sets().iter().collect();
    if sets.is_empty() {
        return Ok((VertexSet::new(), 0));
    }
    let mut best: Vec<Vertex> = sets.iter().filter_map(|s| s.first()).collect();
    best.sort_unstable();
    best.dedup();
    let best_alpha = alpha(g, &VertexSet::from(best.clone())).expect("bramble lies in g");
    let mut search = HitSearch {
        g,
        sets,
        meter: budget.meter(),
        best: VertexSet::from(best),
        best_alpha,
        chosen: vec![false; g.n()],
        banned: vec![false; g.n()],
    };
    search.branch(&mut Vec::new())?;
    Ok((search.best, search.best_alpha))
}

struct HitSearch<'a> {
    g: &'a Graph,
    sets: Vec<&'a VertexSet>,
    meter: Meter,
    best: VertexSet,
    best_alpha: usize,
    chosen: Vec<bool>,
    banned: Vec<bool>,
}

impl HitSearch<'_> {
    fn branch(&mut self, current: &mut Vec<Vertex>) -> Result<(), Exhausted> {
        self.meter.tick()?;
        let current_set = VertexSet::from(current.clone());
        let a = alpha(self.g, &current_set).expect("valid vertices");
        if a >= self.best_alpha {
            return Ok(());
        }
        let mut pick: Option<Vec<Vertex>> = None;
        for s in &self.sets {
            if s.iter().any(|v| self.chosen[v]) {
                continue;
            }
            let options: Vec<Vertex> = s.iter().filter(|&v| !self.banned[v]).collect();
            if options.is_empty() {
                return Ok(());
            }
            if pick.as_ref().is_none_or(|p| options.len() < p.len()) {
                pick = Some(options);
            }
        }
        let Some(options) = pick else {
            self.best = current_set;
            self.best_alpha = a;
            return Ok(());
        };
        let mut banned_here = Vec::new();
        let mut result = Ok(());
        for &v in &options {
            self.chosen[v] = true;
            current.push(v);
            result = self.branch(current);
            current.pop();
            self.chosen[v] = false;
            if result.is_err() {
                break;
            }
            self.banned[v] = true;
            banned_here.push(v);
        }
        for v in banned_here {
            self.banned[v] = false;
        }
        result
    }
}

/// All connected vertex sets with more than `n/2` vertices. Any two of them
/// intersect, so they form a strong bramble. Limited to 20 vertices.
pub fn majority_bramble(g: &Graph) -> StrongBramble {
    let n = g.n();
    assert!(n <= 20, "majority bramble is limited to 20 vertices");
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let mut sets = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if (mask.count_ones() as usize) * 2 <= n {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let mut reach = 1u32 << start;
        loop {
            let mut next = reach;
            let mut bits = reach;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= adj[v] & mask;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        if reach == mask {
            sets.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    StrongBramble::new(sets)
}

/// A random strong bramble: grows random connected sets and keeps those
/// meeting every set kept so far.
pub fn sample_strong_bramble<R: Rng>(g: &Graph, attempts: usize, rng: &mut R) -> StrongBramble {
    let n = g.n();
    let mut sets: Vec<VertexSet> = Vec::new();
    if n == 0 {
        return StrongBramble::new(sets);
    }
    for _ in 0..attempts {
        let size = rng.gen_range(1..=n);
        let seed = rng.gen_range(0..n);
        let mut set = vec![seed];
        let mut inside = vec![false; n];
        inside[seed] = true;
        while set.len() < size {
            let mut frontier: Vec<Vertex> =
                set.iter().flat_map(|&v| g.neighbors(v).iter().copied()).filter(|&w| !inside[w]).collect();
            frontier.sort_unstable();
            frontier.dedup();
            let Some(&w) = frontier.choose(rng) else {
                break;
            };
            inside[w] = true;
            set.push(w);
        }
        let set = VertexSet::from(set);
        if sets.iter().all(|s| !s.is_disjoint(&set)) && !sets.contains(&set) {
            sets.push(set);
        }
    }
    StrongBramble::new(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn brute_force(g: &Graph, b: &StrongBramble) -> usize {
        (0u32..(1 << g.n()))
            .map(|m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect::<VertexSet>())
            .filter(|x| b.sets().iter().all(|s| !s.is_disjoint(x)))
            .map(|x| alpha(g, &x).unwrap())
            .min()
            .unwrap()
    }

    #[test]
    fn singleton_bramble() {
        let g = cycle(5);
        let b = StrongBramble::new(vec![VertexSet::singleton(2)]);
        assert_eq!(bramble_alpha_order(&g, &b, SearchBudget::unlimited()), Ok(1));
    }

    #[test]
    fn three_arcs_of_c5() {
        let g = cycle(5);
        let arcs = [vec![0, 1, 2], vec![2, 3, 4], vec![4, 0, 1]];
        let b = StrongBramble::new(arcs.iter().map(|a| VertexSet::from(a.clone())).collect());
        assert!(b.validate(&g).is_empty());
        assert_eq!(brute_force(&g, &b), 1);
        assert_eq!(bramble_alpha_order(&g, &b, SearchBudget::unlimited()), Ok(1));
    }

    #[test]
    fn majority_brambles_match_brute_force() {
        for n in [4, 6, 7] {
            let g = cycle(n);
            let b = majority_bramble(&g);
            assert!(b.validate(&g).is_empty());
            assert_eq!(bramble_alpha_order(&g, &b, SearchBudget::unlimited()).unwrap(), brute_force(&g, &b));
        }
    }

    #[test]
    fn samples_are_strong_brambles() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let g = cycle(7);
        for _ in 0..20 {
            let b = sample_strong_bramble(&g, 12, &mut rng);
            assert!(b.validate(&g).is_empty());
            assert_eq!(bramble_alpha_order(&g, &b, SearchBudget::unlimited()).unwrap(), brute_force(&g, &b));
        }
    }
}
