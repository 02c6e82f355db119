//! Monotone subsequences: the Erdős–Szekeres selection.

/// Strictly increasing or strictly decreasing run of `seq`, by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monotone {
    pub indices: Vec<usize>,
    pub increasing: bool,
}

/// An increasing subsequence of length `a`, or failing that a decreasing one
/// of length `b`. Sequences of length at least `(a-1)(b-1)+1` always have
/// one. Among candidates the lexicographically smallest index sequence is
/// returned.
pub fn erdos_szekeres<T: Ord>(seq: &[T], a: usize, b: usize) -> Option<Monotone> {
    if let Some(indices) = smallest_run(seq, a, |x, y| x < y) {
        return Some(Monotone { indices, increasing: true });
    }
    smallest_run(seq, b, |x, y| x > y).map(|indices| Monotone { indices, increasing: false })
}

/// Longest run lengths `L[i]` (runs starting at `i`), then the
/// lexicographically first run of length `len` chosen greedily.
fn smallest_run<T>(seq: &[T], len: usize, before: impl Fn(&T, &T) -> bool) -> Option<Vec<usize>> {
    if len == 0 {
        return Some(Vec::new());
    }
    let n = seq.len();
    let mut longest = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if before(&seq[i], &seq[j]) {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    let mut cur = (0..n).find(|&i| longest[i] >= len)?;
    let mut out = vec![cur];
    while out.len() < len {
        let need = len - out.len();
        cur = (cur + 1..n)
            .find(|&j| before(&seq[cur], &seq[j]) && longest[j] >= need)
            .expect("run lengths are consistent");
        out.push(cur);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(seq: &[u32], m: &Monotone) -> Vec<u32> {
        m.indices.iter().map(|&i| seq[i]).collect()
    }

    #[test]
    fn examples() {
        let s = [1, 2, 3];
        assert_eq!(values(&s, &erdos_szekeres(&s, 3, 3).unwrap()), vec![1, 2, 3]);
        let s = [3, 2, 1];
        let m = erdos_szekeres(&s, 3, 3).unwrap();
        assert!(!m.increasing);
        assert_eq!(values(&s, &m), vec![3, 2, 1]);
        let s = [2, 4, 1, 5, 3];
        let m = erdos_szekeres(&s, 3, 3).unwrap();
        assert!(m.increasing);
        assert_eq!(values(&s, &m), vec![2, 4, 5]);
        assert_eq!(erdos_szekeres(&[2, 1, 4, 3], 3, 3), None);
    }
}
