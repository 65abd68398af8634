//! Registry of multirelation laws and a checking engine.
//!
//! A law is a DSL claim over typed variables with optional side conditions.
//! [`check`] searches exhaustively when the instance space is small enough
//! and samples with a seeded generator otherwise; failures are shrunk to a
//! minimal counterexample.

mod engine;
mod law;
mod registry;

pub use engine::{
    check, check_id, find_law, shrink, CheckOptions, Counterexample, EngineError, Mode, Report, DEFAULT_DENSITY,
    DEFAULT_SAMPLES, DEFAULT_SEED, EXHAUSTIVE_LIMIT,
};
pub use law::{law, parse_value, Law, LawBuilder, LawKind, Pinned, VarDecl, Verdict, DEFAULT_SIZE};
pub use registry::registry;
