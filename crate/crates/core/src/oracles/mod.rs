//! Exponential-time exact oracles: independence numbers, min-α separators,
//! induced subgraph and induced minor search, tree-independence number and
//! bramble α-order. They share a step/wall-clock budget and distinguish
//! "absent" from "inconclusive".

use std::time::{Duration, Instant};

use thiserror::Error;

mod alpha;
mod atw;
mod bramble;
mod minor;
mod separator;
mod star;
mod subgraph;

pub use alpha::{alpha, alpha_within, independent_set, Bounded};
pub use atw::{decomposition_from_order, exact_tree_independence_number, min_degree_order, TreeIndependence};
pub use bramble::{bramble_alpha_order, bramble_hitting_set, majority_bramble, sample_strong_bramble};
pub use minor::{contains_induced_minor, induced_minor_model_search};
pub use separator::{min_alpha_separator, SeparatorMode};
pub use star::{find_induced_star, is_k1d_free};
pub use subgraph::induced_subgraph_search;

/// Limits for a single oracle call. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_steps: Option<u64>,
    pub wall_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn steps(max_steps: u64) -> Self {
        SearchBudget { max_steps: Some(max_steps), wall_limit: None }
    }

    pub fn with_wall_limit(self, limit: Duration) -> Self {
        SearchBudget { wall_limit: Some(limit), ..self }
    }

    pub fn meter(&self) -> Meter {
        Meter { steps: 0, max_steps: self.max_steps, deadline: self.wall_limit.map(|d| Instant::now() + d) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted")]
pub struct Exhausted;

/// Running step counter for one budgeted search.
#[derive(Debug)]
pub struct Meter {
    steps: u64,
    max_steps: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.steps += 1;
        if self.max_steps.is_some_and(|m| self.steps > m) {
            return Err(Exhausted);
        }
        if self.steps.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Exhausted);
        }
        Ok(())
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }
}

/// Three-state search result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Inconclusive,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Search::Absent)
    }
}
