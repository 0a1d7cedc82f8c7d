//! Deterministic construction of connected k-regular graphs on `n`
//! vertices (when `n * k` is even and `n >= k + 1`) and connected nearly
//! k-regular graphs (when `n * k` is odd), by inductive path splicing.
//!
//! The crate is `no_std` and needs only `alloc`. Independent realizability
//! oracles (Erdős–Gallai, Havel–Hakimi, exhaustive search) live in
//! [`oracles`] and share no code with the constructions.

#![no_std]

extern crate alloc;

pub mod construct;
mod error;
pub mod graph;
pub mod oracles;

pub use construct::{
    build, build_with, classify, complete_graph, step_even, step_near, step_odd_pair,
    verify_target, BuildOptions, Check, CheckKind, ConstructionTrace, RegularityClass,
    RegularitySpec, StepKind, Target, TraceStep, VerificationReport,
};
pub use error::{Error, Result};
pub use graph::{Graph, Path};
pub use oracles::{
    erdos_gallai_graphic, exhaustive_exists, havel_hakimi_realize, DegreeSequence, Realization,
    EXHAUSTIVE_MAX_N,
};
