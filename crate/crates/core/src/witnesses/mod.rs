//! Certificates for every emitted structure, each with a total validator
//! that reports violated clauses instead of failing.

mod basic;
mod junction;
mod ladders;
mod theta;

use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, PathSeq, Vertex};

pub use basic::{InducedMinorModel, InducedSubgraphWitness, StrongBramble, TreeDecomposition};
pub use junction::{classify_junction, clean_type3_junction, JunctionError, JunctionReport, JunctionType};
pub use ladders::{HRopeLadder, RopeLadder, ShuffledRopeLadder};
pub use theta::{induces_exactly, Prism, Theta};

/// One violated clause with the vertices that witness the violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: &'static str,
    pub vertices: Vec<Vertex>,
}

impl Violation {
    pub fn new(clause: &'static str, vertices: Vec<Vertex>) -> Self {
        Violation { clause, vertices }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?}", self.clause, self.vertices)
    }
}

/// Out-of-range ids in `seq`, reported once under `clause`.
fn check_ids(g: &Graph, seq: &[Vertex], clause: &'static str, out: &mut Vec<Violation>) -> bool {
    let bad: Vec<Vertex> = seq.iter().copied().filter(|&v| v >= g.n()).collect();
    if bad.is_empty() {
        true
    } else {
        out.push(Violation::new(clause, bad));
        false
    }
}

/// Checks that `p` is a nonempty induced path of `g`; ids must be valid.
fn check_induced_path(g: &Graph, p: &PathSeq, clause: &'static str, out: &mut Vec<Violation>) -> bool {
    if p.is_empty() {
        out.push(Violation::new(clause, Vec::new()));
        return false;
    }
    if !p.is_path(g) {
        out.push(Violation::new(clause, p.vertices().to_vec()));
        return false;
    }
    let chords = p.chords(g);
    if !chords.is_empty() {
        out.push(Violation::new(clause, chords.into_iter().flat_map(|(a, b)| [a, b]).collect()));
        return false;
    }
    true
}

/// Labels each vertex with the index of the part containing it; shared
/// vertices are reported under `clause`.
fn label_parts(n: usize, parts: &[&[Vertex]], clause: &'static str, out: &mut Vec<Violation>) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    let mut shared = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        for &v in part.iter() {
            if label[v] != usize::MAX && label[v] != i {
                shared.push(v);
            }
            label[v] = i;
        }
    }
    if !shared.is_empty() {
        shared.sort_unstable();
        shared.dedup();
        out.push(Violation::new(clause, shared));
    }
    label
}

/// Whether the sets `{A_i}` appear in order along `p` (each nonempty, each
/// inside `p`, and every member of `A_i` before every member of `A_{i+1}`).
pub fn appear_in_order(p: &PathSeq, sets: &[Vec<Vertex>]) -> bool {
    let n = p.vertices().iter().chain(sets.iter().flatten()).max().map_or(0, |&v| v + 1);
    let pos = crate::graph::positions(p.vertices(), n);
    let mut previous_max: Option<usize> = None;
    for set in sets {
        let Some(idx) = set.iter().map(|&v| pos[v]).collect::<Option<Vec<usize>>>() else {
            return false;
        };
        let (Some(&lo), Some(&hi)) = (idx.iter().min(), idx.iter().max()) else {
            return false;
        };
        if previous_max.is_some_and(|m| m >= lo) {
            return false;
        }
        previous_max = Some(hi);
    }
    true
}
