//! Coalition partitions, singleton coalition graphs and singleton coalition
//! graph chains of small graphs, with exhaustive checks of their known
//! characterizations for minimum degree at most two.

pub mod canon;
pub mod chains;
pub mod coalition_graph;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod report;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, CanonicalCode, CANON_MAX_ORDER};
pub use chains::{classify_chain, l_scc, sc_chain, ChainOutcome, ChainResult, ChainTemplate, LsccValue};
pub use coalition_graph::{coalition_graph, sc_graph, CoalitionGraphResult};
pub use domination::{
    closed_neighborhood, coalition_number_exact, forms_coalition, is_coalition_partition, is_dominating,
    singleton_partition, sp_check, CoalitionNumberResult, Partition, PartitionVerdict, SpVerdict,
};
pub use enumerate::{enumerate_graphs, FullVertexCount, GraphFilter, ENUM_MAX_ORDER};
pub use error::{Error, Graph6Error, GraphError};
pub use graph::{DegreeStats, Graph, VertexSet, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6};
pub use named::build_named;
