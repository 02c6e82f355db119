//! A wheel induced minor from an induced cycle and a path outside it: the
//! component of `G - C` holding the path is the hub, and `C` is cut into arcs
//! around chosen attachment vertices.

use thiserror::Error;

use crate::families;
use crate::graph::{CycleSeq, Graph, PathSeq, VertexSet};
use crate::witnesses::InducedMinorModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WheelError {
    #[error("invalid input: {0}")]
    InvalidInput(&'static str),
    #[error("the hub component sees {found} cycle vertices, fewer than {needed}")]
    TooFewAttachments { found: usize, needed: usize },
}

/// A `W_l` model numbered as [`families::wheel`]. The `l` spoke ends are
/// spread evenly over the hub's attachments in cyclic order; each rim branch
/// set is the arc from one spoke end up to the next.
pub fn extract_wheel_model(g: &Graph, p: &PathSeq, c: &CycleSeq, l: usize) -> Result<InducedMinorModel, WheelError> {
    if l < 3 {
        return Err(WheelError::InvalidInput("a wheel has at least three spokes"));
    }
    if p.is_empty() || p.vertices().iter().any(|&v| v >= g.n()) || !p.is_path(g) {
        return Err(WheelError::InvalidInput("P must be a path of G"));
    }
    if !c.is_induced(g) {
        return Err(WheelError::InvalidInput("C must be an induced cycle of G"));
    }
    let on_c = c.vertex_set();
    if p.vertices().iter().any(|&v| on_c.contains(v)) {
        return Err(WheelError::InvalidInput("P must avoid C"));
    }
    let mut allowed = vec![true; g.n()];
    for v in on_c.iter() {
        allowed[v] = false;
    }
    let reach = g.reach_from(&[p.first()], &allowed);
    let hub: VertexSet = g.vertices().filter(|&v| reach[v]).collect();
    let attach: Vec<usize> = (0..c.len()).filter(|&i| g.neighbors(c.vertices()[i]).iter().any(|&w| reach[w])).collect();
    if attach.len() < l {
        return Err(WheelError::TooFewAttachments { found: attach.len(), needed: l });
    }
    let chosen: Vec<usize> = (0..l).map(|s| attach[s * attach.len() / l]).collect();
    let mut branch_sets = vec![hub];
    for s in 0..l {
        let next = chosen[(s + 1) % l];
        let end = (next + c.len() - 1) % c.len();
        branch_sets.push(c.arc(chosen[s], end).into_iter().collect());
    }
    let model = InducedMinorModel::new(families::wheel(l), branch_sets);
    debug_assert!(model.validate(g).is_empty());
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn wheel_models_itself() {
        for l in 3..=8 {
            let g = families::wheel(l);
            let c = CycleSeq::new((1..=l).collect());
            let m = extract_wheel_model(&g, &PathSeq::single(0), &c, l).unwrap();
            assert!(m.validate(&g).is_empty());
            let singletons: Vec<VertexSet> = (0..=l).map(VertexSet::singleton).collect();
            assert_eq!(m.branch_sets, singletons);
        }
    }

    /// `C_20` on 0..20 and a path blob 20..30 whose vertices attach to the
    /// given cycle positions.
    fn blob(attach: &[usize]) -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..20).map(|i| (i, (i + 1) % 20)).collect();
        edges.extend((20..29).map(|i| (i, i + 1)));
        for (j, &a) in attach.iter().enumerate() {
            edges.push((21 + 2 * j, a));
        }
        Graph::from_edges(30, edges).unwrap()
    }

    #[test]
    fn spread_attachments_give_w5() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let attach: Vec<usize> = (0..5).map(|j| 4 * j + rng.gen_range(0..4)).collect();
            let g = blob(&attach);
            let c = CycleSeq::new((0..20).collect());
            let m = extract_wheel_model(&g, &PathSeq::single(20), &c, 5).unwrap();
            assert!(m.validate(&g).is_empty());
        }
    }

    #[test]
    fn too_few_attachments_are_counted() {
        let g = blob(&[0, 7, 14]);
        let c = CycleSeq::new((0..20).collect());
        let err = extract_wheel_model(&g, &PathSeq::single(20), &c, 5).unwrap_err();
        assert_eq!(err, WheelError::TooFewAttachments { found: 3, needed: 5 });
    }
}
