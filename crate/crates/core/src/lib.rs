//! Ladder-like induced substructures of `K_{1,d}`-free graphs: extraction
//! procedures, exact exponential-time oracles and certificate validators.

mod bits;
pub mod derived;
pub mod extraction;
pub mod families;
pub mod genio;
pub mod graph;
pub mod oracles;
pub mod witnesses;
