//! Homological decisions for connected Nakayama algebras, computed from their
//! admissible (Kupisch) sequences.
//!
//! The fast path goes through the resolution quiver ([`quiver`]); the
//! [`oracle`] recomputes the same answers from syzygies and cosyzygies, and
//! [`census`] cross-checks the two exhaustively.

pub mod cartan;
pub mod census;
pub mod kupisch;
pub mod oracle;
pub mod quiver;
pub mod report;
pub mod retraction;

pub use kupisch::{KupischError, KupischSeries, NormalizedSeries, Shape};
pub use oracle::{HomDimension, HomologyOracle, SerialModule};
pub use quiver::{CycleData, CycleSummary, Decisions, QuiverError, ResolutionQuiver};
pub use report::{analyze, AnalysisReport, Sections};
pub use retraction::RetractionChain;
