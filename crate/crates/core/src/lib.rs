//! Steiner k-Wiener index of trees.
//!
//! Exact computation of `SW_k`, constructors for the extremal trees among
//! trees with a given segment sequence or segment count, isomorphism-free
//! enumeration, segment-sequence-preserving local moves with a hill climber,
//! and exhaustive verification reports.

pub mod backbone;
pub mod canon;
pub mod count;
pub mod enumerate;
pub mod generators;
pub mod moves;
pub mod segments;
pub mod steiner;
pub mod tree;
pub mod verify;

#[cfg(test)]
mod fixtures;

pub use backbone::{backbone, BackboneView};
pub use canon::{canonical_code, is_isomorphic, CanonicalCode};
pub use count::ExactCount;
pub use segments::{segment_decomposition, segment_sequence, Segment, SegmentSequence};
pub use steiner::{steiner_distance, sw_k, sw_k_bruteforce, sw_profile, wiener, SwProfile};
pub use tree::{parse_edge_list, Tree};
pub use moves::{hill_climb, neighbors, Direction, MoveDescriptor, MoveOutcome};
pub use verify::{Census, InstanceClass, Theorem, VerificationReport, Verdict};
