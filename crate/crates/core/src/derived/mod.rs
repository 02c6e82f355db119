//! Consequences of the ladder machinery: an independence Erdős–Pósa
//! decomposition, wheels from a path and a cycle, tripods and their line
//! graphs from rope ladders, and long thetas or prisms from cycle rope
//! ladders.

mod erdos_posa;
mod long;
mod tripod;
mod wheel;

pub use erdos_posa::{ep_decompose, EPError, EPResult};
pub use long::{
    extract_theta_or_prism, junction_areas, select_spread_rungs, spread_threshold, JunctionArea, LongCase, LongError,
    LongShape, LongStructure, SpreadError,
};
pub use tripod::{extract_tripod_or_line, TripodError, TripodKind, TripodWitness};
pub use wheel::{extract_wheel_model, WheelError};
