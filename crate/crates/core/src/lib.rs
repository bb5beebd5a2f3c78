//! Desk-scale continual-learning engine with complementary memory.
//!
//! The engine learns a stream of disjoint classification tasks with a frozen
//! feature backbone plus per-task low-rank adapters (short-term parameter
//! memory) and per-class prototypes (representation memory). After each task,
//! scenario descriptions recorded during training are replayed to optimize a
//! composition of the stored adapters into a single long-term weight delta,
//! and the short-term store is periodically collapsed so parameter storage
//! stays bounded. At inference, a confidence-aware online anomaly detector
//! routes hard samples to a pluggable slow oracle.

pub mod backbone;
pub mod detector;
pub mod error;
pub mod harness;
pub mod learner;
pub mod memory;
pub mod numkit;
pub mod oracles;
pub mod restructure;

pub use error::{Error, Result};
