//! Constructive extraction: bound arithmetic, monotone subsequences, rung
//! cleaning, rail splitting along brambles, the rope-ladder construction and
//! the composed skinny-ladder pipeline.

pub mod bounds;
mod cleaning;
mod construction;
mod monotone;
mod rails;
mod skinny;

use crate::graph::VertexSet;
use crate::witnesses::TreeDecomposition;

pub use bounds::{eta, eta_bound, nu, rho, rho_base, rho_saturating, tau, Bound, BoundsError};
pub use cleaning::{
    clean_one_side, clean_shuffled_rope_ladder, order_positions, side_is_ordered, CleanError, CleanOutcome, CleanStage,
    SideOutcome,
};
pub use construction::{build_h_rope_ladder, Construction, ConstructionError, ConstructionState, StepReport};
pub use monotone::{erdos_szekeres, Monotone};
pub use rails::{
    dominating_path, extend_induced_path, split_rails_path_cycle, split_rails_strict, split_rails_two_paths,
    strict_target, RailError, RailOutcome, RailShortfall,
};
pub use skinny::{
    rope_to_skinny_model, skinny_ladder_pipeline, PipelineConfig, PipelineError, PipelineRun, PipelineStage,
    PipelineStart,
};

/// Either a structure, a low-width decomposition, or a separator of small
/// independence number certifying why the construction stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtractionOutcome<W> {
    Witness(W),
    Decomposition(TreeDecomposition),
    Failure { separator: VertexSet, alpha: usize, step: usize },
}
