//! Recognition of graphs in which some, or every, maximum matching is
//! uniquely restricted, together with certificates and a brute-force oracle.
//!
//! A matching `M` is uniquely restricted when it is the only perfect matching
//! of the subgraph induced by the vertices it covers.

pub mod accessibility;
mod blossom;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod recognition;
pub mod ur;

pub use accessibility::{
    find_e_good_ordering, find_e_good_ordering_with, induced_matching_edges,
    is_accessibility_ordering, AccessibilityOrdering, TieBreak,
};
pub use decomposition::{gallai_edmonds, verify_gallai_edmonds, GallaiEdmonds, GbVertex};
pub use error::{Error, Result};
pub use graph::{Bipartition, Digraph, Edge, Graph, Side, Subgraph};
pub use matching::{maximum_matching, Matching};
pub use oracle::{cross_validate, oracle_every_ur, oracle_some_ur, CrossCheck, OracleGuard};
pub use recognition::{
    allowed_edges, every_ur, every_ur_bipartite, every_ur_with, some_ur, some_ur_with,
    AllowedEdgeSet, FailureTag, Options, Property, RecognitionReport,
};
pub use ur::{is_uniquely_restricted, is_uniquely_restricted_bipartite};
