//! Sliding-window and parallel-window decoding for surface-type QEC codes.
//!
//! The library is organized around a decoding stream: a [`graph::DecodingGraph`]
//! describes the matching arena for a code and round count, errors are sampled
//! onto it, and corrections are produced either globally or through windowed
//! decoding ([`window`]), optionally executed by the pipelined scheduler
//! ([`scheduler`]). [`resources`] holds the closed-form worker/latency/qubit
//! overhead accounting and [`tiling`] the commit-region coloring combinatorics.

pub mod decoder;
pub mod error;
pub mod graph;
pub mod harness;
pub mod resources;
pub mod scheduler;
pub mod tiling;
pub mod window;

pub use error::{Error, Result};
