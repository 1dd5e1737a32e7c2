//! Procedural example generation for ARC-style grid tasks.
//!
//! - [`grid`]: the grid value type and its transformation primitives.
//! - [`rng`]: seeded random source with difficulty-bounded cardinality draws.
//! - [`objects`]: random object shapes and placement strategies.
//! - [`tasks`]: ten generator/verifier pairs behind a uniform interface.
//! - [`metrics`]: RNG- and PSO-Difficulty.
//! - [`pipeline`]: generate, verify, deduplicate, band and export datasets.

pub mod error;
pub mod grid;
pub mod metrics;
pub mod objects;
pub mod pipeline;
pub mod rng;
pub mod tasks;

pub use error::{GridError, PipelineError, SamplingError, VerifyError};
pub use grid::{canonical_digest, canvas, Connectivity, Example, Grid, GridObject, Isometry, Symbol};
pub use metrics::{pso_difficulty, DifficultyReport};
pub use pipeline::{
    band_by_difficulty, run_generation, BandMetric, Format, Record, RunConfig, RunOutput, RunStats,
};
pub use rng::{rng_difficulty, stable_mix, DifficultyBounds, TracedRng};
pub use tasks::{FailureReason, GenerationAttempt, Task};
