//! Canonical small pattern graphs with fixed vertex numberings.

use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("pattern edges are valid")
}

/// `P_n` on `0..n`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// `C_n` on `0..n` in cyclic order (`n ≥ 3`).
pub fn cycle(n: usize) -> Graph {
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// The `k`-ladder: rails `a_i = i` and `b_i = k + i`, rungs `a_i b_i`.
pub fn ladder(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..k).flat_map(|i| [(i - 1, i), (k + i - 1, k + i)]).collect();
    edges.extend((0..k).map(|i| (i, k + i)));
    build(2 * k, edges)
}

/// The `k`-skinny ladder: rails `a_i = i`, `b_i = k + i` and subdivision
/// vertices `c_i = 2k + i` on the rungs.
pub fn skinny_ladder(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..k).flat_map(|i| [(i - 1, i), (k + i - 1, k + i)]).collect();
    edges.extend((0..k).flat_map(|i| [(i, 2 * k + i), (2 * k + i, k + i)]));
    build(3 * k, edges)
}

/// The `r × c` grid; vertex `(i, j)` is `i * c + j`.
pub fn grid(r: usize, c: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..c {
            let v = i * c + j;
            if j + 1 < c {
                edges.push((v, v + 1));
            }
            if i + 1 < r {
                edges.push((v, v + c));
            }
        }
    }
    build(r * c, edges)
}

/// `W_l`: hub 0 joined to the rim cycle `1..=l`.
pub fn wheel(l: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=l).map(|i| (0, i)).collect();
    edges.extend((1..=l).map(|i| (i, i % l + 1)));
    build(l + 1, edges)
}

/// `S_p`: centre 0 and three arms of length `p`; arm `j` is
/// `0, jp + 1, ..., jp + p`.
pub fn tripod(p: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 0..3 {
        let mut prev = 0;
        for t in 1..=p {
            edges.push((prev, j * p + t));
            prev = j * p + t;
        }
    }
    build(3 * p + 1, edges)
}

/// `T_p`, the line graph of `S_p`: a triangle on `0, p, 2p` and arms
/// `jp, jp + 1, ..., jp + p - 1`.
pub fn line_tripod(p: usize) -> Graph {
    let mut edges = vec![(0, p), (p, 2 * p), (0, 2 * p)];
    for j in 0..3 {
        edges.extend((1..p).map(|t| (j * p + t - 1, j * p + t)));
    }
    build(3 * p, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((ladder(4).n(), ladder(4).m()), (8, 10));
        assert_eq!((skinny_ladder(2).n(), skinny_ladder(2).m()), (6, 6));
        assert_eq!(wheel(3), complete(4));
        assert_eq!((tripod(2).n(), tripod(2).m()), (7, 6));
        assert_eq!((line_tripod(2).n(), line_tripod(2).m()), (6, 6));
        assert!(skinny_ladder(2).neighbors(0).len() == 2 && cycle(6).is_connected());
    }
}
